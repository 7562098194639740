#include "pforge/catalog.hpp"

#include "pforge/equivalence.hpp"

#include <optional>

namespace pforge {

namespace {

const FieldSpec kQ{0};
const FieldSpec kF2{2};
const FieldSpec kF3{3};

StructureEnv zero_env(int dim) {
    return to_env(zero_bialgebra("A", dim, kQ), kQ);
}

StructureEnv idem1_env() {
    StructureEnv env = zero_env(1);
    env.map_at("mulA").set({0}, {0, 0}, Scalar::one(kQ));
    return env;
}

StructureEnv dual_numbers_env() {
    StructureEnv env = zero_env(2);
    env.spaces[0].basis_labels = {"u", "e"};
    LinMap& mul = env.map_at("mulA");
    mul.set({0}, {0, 0}, Scalar::one(kQ));  // u·u = u
    mul.set({1}, {0, 1}, Scalar::one(kQ));  // u·e = e
    mul.set({1}, {1, 0}, Scalar::one(kQ));  // e·u = e
    return env;
}

StructureEnv nonab_lie2_env() {
    StructureEnv env = zero_env(2);
    LinMap& br = env.map_at("brA");
    br.set({1}, {0, 1}, Scalar::one(kQ));            // [e1,e2] = e2
    br.set({1}, {1, 0}, -Scalar::one(kQ));           // [e2,e1] = -e2
    return env;
}

StructureEnv bad_bracket_env() {
    StructureEnv env = zero_env(1);
    env.map_at("brA").set({0}, {0, 0}, Scalar::one(kQ));  // [e,e] = e
    return env;
}

ExtendingDatum central_ext_a1_datum(const FieldSpec& f) {
    ExtendingDatum d = zero_datum(ExtKind::a1, 1, 1, f);
    d.env.map_at("nu_AA").set({0}, {0, 0}, Scalar::one(f));
    return d;
}

StructureEnv direct_sum_demo_env() {
    PoissonBialgebraData left =
        bialgebra_from_env(idem1_env(), "A", "brA", "mulA", "cobrA", "copA");
    PoissonBialgebraData right = bialgebra_from_env(
        nonab_lie2_env(), "A", "brA", "mulA", "cobrA", "copA");
    right.algebra.space.name = "B";
    right.coalgebra.space.name = "B";
    return to_env(direct_sum(left, right), kQ);
}

// Deterministically searches the dim A = dim V = 1 kind-a1 stratum over F₂
// for a valid datum whose pushforward along (r=1, s=1) exists and differs
// from it.  The result is frozen by the search order, not hand-picked.
std::pair<ExtendingDatum, ExtendingDatum> find_planted_pair() {
    ExtendingDatum d = zero_datum(ExtKind::a1, 1, 1, kF2);
    std::vector<std::string> names;
    for (const RosterEntry& e : kind_roster(ExtKind::a1))
        names.push_back(e.name);
    MorphismPair w;
    w.r = make_zero_map(d.env, {"H"}, {"A"});
    w.r.set({0}, {0}, Scalar::one(kF2));
    w.s_map = make_zero_map(d.env, {"H"}, {"H"});
    w.s_map.set({0}, {0}, Scalar::one(kF2));

    auto advance_all = [&]() -> bool {
        for (std::size_t i = names.size(); i-- > 0;)
            if (advance_entries(d.env.map_at(names[i]), 2)) return true;
        return false;
    };
    std::optional<std::pair<ExtendingDatum, ExtendingDatum>> fallback;
    do {
        if (!check_condition_set("EXT_A1", d.env).empty()) continue;
        ExtendingDatum d2;
        try {
            d2 = pushforward(ExtKind::a1, d, w);
        } catch (const error&) {
            continue;  // (r, s) does not act on this datum
        }
        if (d2 == d) {
            if (!fallback) fallback = {d, d2};
            continue;
        }
        return {d, d2};
    } while (advance_all());
    if (fallback) return *fallback;
    throw error("no planted pair exists at dim 1 over F2");  // unreachable
}

StructureEnv planted_pair_env() {
    auto [d, d2] = planted_pair_f2();
    StructureEnv env;
    env.field = kF2;
    env.add_space("A", 1);
    env.add_space("H", 1);
    for (const RosterEntry& e : kind_roster(ExtKind::a1)) {
        env.maps.emplace(e.name, d.env.map_at(e.name));
        env.maps.emplace(e.name + "2", d2.env.map_at(e.name));
    }
    return env;
}

// Fills a datum's non-base maps with a deterministic pattern of small
// nonzero scalars so round-trip tests see every block populated.
ExtendingDatum patterned_datum(ExtKind kind, int dim_a, int dim_v,
                               const FieldSpec& f) {
    ExtendingDatum d = zero_datum(kind, dim_a, dim_v, f);
    long counter = 1;
    for (const RosterEntry& e : kind_roster(kind))
        for (Scalar& s : d.env.map_at(e.name).entries) {
            s = Scalar::from_int(counter % 5 - 2, f);
            ++counter;
        }
    return d;
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"zero_1",          "zero_2",       "zero_3",
            "idem1",           "dual_numbers", "nonab_lie2",
            "bad_bracket",     "central_ext_a1",
            "direct_sum_demo", "planted_equiv_pair_f2"};
}

StructureEnv catalog(const std::string& name) {
    if (name.rfind("zero_", 0) == 0) {
        std::string tail = name.substr(5);
        if (!tail.empty() &&
            tail.find_first_not_of("0123456789") == std::string::npos)
            return zero_env(std::stoi(tail));
    }
    if (name == "idem1") return idem1_env();
    if (name == "dual_numbers") return dual_numbers_env();
    if (name == "nonab_lie2") return nonab_lie2_env();
    if (name == "bad_bracket") return bad_bracket_env();
    if (name == "central_ext_a1") return central_ext_a1_datum(kQ).env;
    if (name == "direct_sum_demo") return direct_sum_demo_env();
    if (name == "planted_equiv_pair_f2") return planted_pair_env();
    throw error("unknown catalog fixture: " + name);
}

std::vector<ExtendingDatum> catalog_data(ExtKind kind) {
    std::vector<ExtendingDatum> out;
    out.push_back(zero_datum(kind, 1, 1, kQ));
    out.push_back(zero_datum(kind, 2, 1, kF3));
    out.push_back(patterned_datum(kind, 1, 1, kQ));
    out.push_back(patterned_datum(kind, 2, 2, kQ));
    out.push_back(patterned_datum(kind, 1, 2, kF3));
    if (kind == ExtKind::a1) {
        out.push_back(central_ext_a1_datum(kQ));
        auto [d, d2] = planted_pair_f2();
        out.push_back(d);
        out.push_back(d2);
    }
    return out;
}

std::pair<ExtendingDatum, ExtendingDatum> planted_pair_f2() {
    static const std::pair<ExtendingDatum, ExtendingDatum> pair =
        find_planted_pair();
    return pair;
}

}  // namespace pforge
