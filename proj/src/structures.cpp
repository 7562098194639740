#include "pforge/structures.hpp"

#include <algorithm>

namespace pforge {

ExtKind parse_kind(const std::string& s) {
    if (s == "a1") return ExtKind::a1;
    if (s == "a2") return ExtKind::a2;
    if (s == "c1") return ExtKind::c1;
    if (s == "c2") return ExtKind::c2;
    if (s == "I" || s == "i") return ExtKind::I;
    if (s == "II" || s == "ii") return ExtKind::II;
    throw error("unknown extending-datum kind '" + s +
                "' (expected a1, a2, c1, c2, I, II)");
}

std::string kind_name(ExtKind k) {
    switch (k) {
        case ExtKind::a1: return "a1";
        case ExtKind::a2: return "a2";
        case ExtKind::c1: return "c1";
        case ExtKind::c2: return "c2";
        case ExtKind::I: return "I";
        case ExtKind::II: return "II";
    }
    throw error("bad kind");
}

bool kind_has_algebra(ExtKind k) {
    return k == ExtKind::a1 || k == ExtKind::a2 || k == ExtKind::I ||
           k == ExtKind::II;
}

bool kind_has_coalgebra(ExtKind k) {
    return k == ExtKind::c1 || k == ExtKind::c2 || k == ExtKind::I ||
           k == ExtKind::II;
}

const std::vector<RosterEntry>& full_roster() {
    static const std::vector<RosterEntry> roster = {
        {"brA", {"A", "A"}, {"A"}},      {"mulA", {"A", "A"}, {"A"}},
        {"cobrA", {"A"}, {"A", "A"}},    {"copA", {"A"}, {"A", "A"}},
        {"brH", {"H", "H"}, {"H"}},      {"mulH", {"H", "H"}, {"H"}},
        {"cobrH", {"H"}, {"H", "H"}},    {"copH", {"H"}, {"H", "H"}},
        {"tri_HA", {"H", "A"}, {"A"}},   {"tl_HA", {"H", "A"}, {"H"}},
        {"hpr_HA", {"H", "A"}, {"A"}},   {"hpl_AH", {"A", "H"}, {"A"}},
        {"rar_AH", {"A", "H"}, {"H"}},   {"lar_HA", {"H", "A"}, {"H"}},
        {"phi_A", {"A"}, {"H", "A"}},    {"psi_H", {"H"}, {"H", "A"}},
        {"rho_A", {"A"}, {"H", "A"}},    {"gamma_A", {"A"}, {"A", "H"}},
        {"alpha_H", {"H"}, {"A", "H"}},  {"beta_H", {"H"}, {"H", "A"}},
        {"sigma_HH", {"H", "H"}, {"A"}}, {"omega_HH", {"H", "H"}, {"A"}},
        {"theta_AA", {"A", "A"}, {"H"}}, {"nu_AA", {"A", "A"}, {"H"}},
        {"p_A", {"A"}, {"H", "H"}},      {"s_A", {"A"}, {"H", "H"}},
        {"q_H", {"H"}, {"A", "A"}},      {"t_H", {"H"}, {"A", "A"}},
    };
    return roster;
}

static std::vector<RosterEntry> pick(const std::vector<std::string>& names) {
    std::vector<RosterEntry> out;
    for (const auto& n : names) {
        bool found = false;
        for (const auto& e : full_roster())
            if (e.name == n) {
                out.push_back(e);
                found = true;
                break;
            }
        if (!found) throw error("internal: unknown roster name " + n);
    }
    return out;
}

std::vector<RosterEntry> kind_roster(ExtKind k) {
    switch (k) {
        case ExtKind::a1:
            return pick({"brA", "mulA", "brH", "mulH", "tl_HA", "theta_AA",
                         "lar_HA", "rar_AH", "nu_AA"});
        case ExtKind::a2:
            return pick({"brA", "mulA", "brH", "mulH", "tri_HA", "tl_HA",
                         "hpr_HA", "hpl_AH", "rar_AH", "lar_HA", "sigma_HH",
                         "omega_HH"});
        case ExtKind::c1:
            return pick({"cobrA", "copA", "cobrH", "copH", "phi_A", "psi_H",
                         "rho_A", "gamma_A", "alpha_H", "beta_H", "p_A",
                         "s_A"});
        case ExtKind::c2:
            return pick({"cobrA", "copA", "cobrH", "copH", "psi_H", "alpha_H",
                         "beta_H", "q_H", "t_H"});
        case ExtKind::I: {
            auto r = kind_roster(ExtKind::a1);
            for (auto& e : kind_roster(ExtKind::c1)) r.push_back(e);
            return r;
        }
        case ExtKind::II: {
            auto r = kind_roster(ExtKind::a2);
            for (auto& e : kind_roster(ExtKind::c2)) r.push_back(e);
            return r;
        }
    }
    throw error("bad kind");
}

bool ExtendingDatum::operator==(const ExtendingDatum& o) const {
    if (kind != o.kind) return false;
    if (env.maps.size() != o.env.maps.size()) return false;
    for (const auto& [name, m] : env.maps) {
        if (!o.env.has_map(name)) return false;
        if (!(o.env.map_at(name) == m)) return false;
    }
    return true;
}

std::vector<ShapeViolation> validate(const StructureEnv& env) {
    std::vector<ShapeViolation> out;
    for (const auto& [name, m] : env.maps) {
        std::size_t expected = 1;
        bool spaces_ok = true;
        auto scan = [&](const std::vector<std::string>& names,
                        const std::vector<int>& dims, const char* side) {
            if (names.size() != dims.size()) {
                out.push_back({name, std::string(side) + " dim list length "
                                         "does not match space list"});
                spaces_ok = false;
                return;
            }
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (!env.has_space(names[i])) {
                    out.push_back({name, std::string("unknown ") + side +
                                             " space '" + names[i] + "'"});
                    spaces_ok = false;
                } else if (env.dim(names[i]) != dims[i]) {
                    out.push_back(
                        {name, std::string(side) + " leg " + std::to_string(i) +
                                   ": expected dim " +
                                   std::to_string(env.dim(names[i])) + ", got " +
                                   std::to_string(dims[i])});
                    spaces_ok = false;
                } else {
                    expected *= static_cast<std::size_t>(dims[i]);
                }
            }
        };
        scan(m.source, m.src_dims, "source");
        scan(m.target, m.tgt_dims, "target");
        if (spaces_ok && m.entries.size() != expected)
            out.push_back({name, "entry array size " +
                                     std::to_string(m.entries.size()) +
                                     " != expected " +
                                     std::to_string(expected)});
        for (const auto& e : m.entries)
            if (e.field() != env.field) {
                out.push_back({name, "entry field " + e.field().to_string() +
                                         " != env field " +
                                         env.field.to_string()});
                break;
            }
    }
    return out;
}

ExtendingDatum zero_datum(ExtKind k, int dim_a, int dim_v, const FieldSpec& f) {
    ExtendingDatum d;
    d.kind = k;
    d.env.field = f;
    d.env.add_space("A", dim_a);
    d.env.add_space("H", dim_v);
    for (const auto& e : kind_roster(k))
        d.env.add_zero_map(e.name, e.source, e.target);
    return d;
}

PoissonBialgebraData zero_bialgebra(const std::string& space_name, int dim,
                                    const FieldSpec& f) {
    StructureEnv env;
    env.field = f;
    env.add_space(space_name, dim);
    PoissonBialgebraData b;
    b.algebra.space = env.space(space_name);
    b.algebra.bracket = make_zero_map(env, {space_name, space_name}, {space_name});
    b.algebra.product = b.algebra.bracket;
    b.coalgebra.space = env.space(space_name);
    b.coalgebra.cobracket =
        make_zero_map(env, {space_name}, {space_name, space_name});
    b.coalgebra.coproduct = b.coalgebra.cobracket;
    return b;
}

// Copies src's entries into dst's block at the given basis offset, for maps
// whose every leg lives on the summed space.
static void place_block(LinMap& dst, const LinMap& src, int offset) {
    if (src.entries.empty()) return;
    std::vector<int> t(src.tgt_dims.size(), 0);
    do {
        std::vector<int> s(src.src_dims.size(), 0);
        do {
            const Scalar& v = src.at(t, s);
            if (!v.is_zero()) {
                std::vector<int> td = t, sd = s;
                for (auto& i : td) i += offset;
                for (auto& i : sd) i += offset;
                dst.set(td, sd, v);
            }
        } while (next_tuple(s, src.src_dims));
    } while (next_tuple(t, src.tgt_dims));
}

PoissonBialgebraData direct_sum(const PoissonBialgebraData& a,
                                const PoissonBialgebraData& b) {
    if (a.algebra.space.name == b.algebra.space.name)
        throw error("direct_sum: space name clash '" + a.algebra.space.name +
                    "'");
    FieldSpec f;
    if (!a.algebra.bracket.entries.empty())
        f = a.algebra.bracket.entries[0].field();
    else if (!b.algebra.bracket.entries.empty())
        f = b.algebra.bracket.entries[0].field();
    const int da = a.algebra.space.dim, db = b.algebra.space.dim;
    std::string name = a.algebra.space.name + "+" + b.algebra.space.name;
    PoissonBialgebraData out = zero_bialgebra(name, da + db, f);
    auto fill = [&](LinMap& dst, const LinMap& ma, const LinMap& mb) {
        place_block(dst, ma, 0);
        place_block(dst, mb, da);
    };
    fill(out.algebra.bracket, a.algebra.bracket, b.algebra.bracket);
    fill(out.algebra.product, a.algebra.product, b.algebra.product);
    fill(out.coalgebra.cobracket, a.coalgebra.cobracket, b.coalgebra.cobracket);
    fill(out.coalgebra.coproduct, a.coalgebra.coproduct, b.coalgebra.coproduct);
    return out;
}

StructureEnv to_env(const PoissonAlgebraData& a, const FieldSpec& f) {
    StructureEnv env;
    env.field = f;
    env.add_space("A", a.space.dim, a.space.basis_labels);
    LinMap br = a.bracket, mul = a.product;
    br.source = {"A", "A"};
    br.target = {"A"};
    mul.source = {"A", "A"};
    mul.target = {"A"};
    env.maps.emplace("brA", br);
    env.maps.emplace("mulA", mul);
    return env;
}

StructureEnv to_env(const PoissonCoalgebraData& c, const FieldSpec& f) {
    StructureEnv env;
    env.field = f;
    env.add_space("A", c.space.dim, c.space.basis_labels);
    LinMap cobr = c.cobracket, cop = c.coproduct;
    cobr.source = {"A"};
    cobr.target = {"A", "A"};
    cop.source = {"A"};
    cop.target = {"A", "A"};
    env.maps.emplace("cobrA", cobr);
    env.maps.emplace("copA", cop);
    return env;
}

StructureEnv to_env(const PoissonBialgebraData& b, const FieldSpec& f) {
    StructureEnv env = to_env(b.algebra, f);
    StructureEnv co = to_env(b.coalgebra, f);
    if (b.coalgebra.space.dim != b.algebra.space.dim)
        throw error("bialgebra data: algebra/coalgebra space dim mismatch");
    env.maps.emplace("cobrA", co.map_at("cobrA"));
    env.maps.emplace("copA", co.map_at("copA"));
    return env;
}

PoissonBialgebraData bialgebra_from_env(const StructureEnv& env,
                                        const std::string& space,
                                        const std::string& br,
                                        const std::string& mul,
                                        const std::string& cobr,
                                        const std::string& cop) {
    PoissonBialgebraData b;
    b.algebra.space = env.space(space);
    b.algebra.bracket = env.map_at(br);
    b.algebra.product = env.map_at(mul);
    b.coalgebra.space = env.space(space);
    b.coalgebra.cobracket = env.map_at(cobr);
    b.coalgebra.coproduct = env.map_at(cop);
    return b;
}

}  // namespace pforge
