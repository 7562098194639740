#include "pforge/build.hpp"

#include <algorithm>
#include <set>

namespace pforge {

PoissonBialgebraData BuiltStructure::as_bialgebra() const {
    if (!has_algebra || !has_coalgebra)
        throw error("built structure is not a full bialgebra (" + provenance +
                    ")");
    return bialgebra_from_env(ambient, "E", "brE", "mulE", "cobrE", "copE");
}

namespace {

// Access helper: a roster map from env, or null when absent (= zero map).
const LinMap* fetch(const StructureEnv& env, const std::string& name) {
    return env.has_map(name) ? &env.map_at(name) : nullptr;
}

struct Builder {
    const StructureEnv& env;
    int da, dh;
    FieldSpec f;

    Builder(const StructureEnv& e)
        : env(e), da(e.dim("A")), dh(e.dim("H")), f(e.field) {}

    bool in_a(int i) const { return i < da; }
    int a_of(int i) const { return i; }
    int h_of(int i) const { return i - da; }

    // Adds m's entries into the ambient bilinear map `dst` with the given
    // block placement: src legs (i,j) come from blocks (sa, sb) of E and the
    // target leg goes to block `tgt_a` (true = A block).
    void add_bilinear(LinMap& dst, const LinMap* m, bool src0_a, bool src1_a,
                      bool tgt_a, long sign = 1, bool swap_src = false) const {
        if (!m || m->entries.empty()) return;
        Scalar sg = Scalar::from_int(sign, f);
        std::vector<int> t(1, 0);
        do {
            std::vector<int> s(2, 0);
            do {
                const Scalar& v = m->at(t, s);
                if (v.is_zero()) continue;
                int i = swap_src ? s[1] : s[0];
                int j = swap_src ? s[0] : s[1];
                int e0 = i + (src0_a ? 0 : da);
                int e1 = j + (src1_a ? 0 : da);
                int ek = t[0] + (tgt_a ? 0 : da);
                Scalar cur = dst.at({ek}, {e0, e1});
                dst.set({ek}, {e0, e1}, cur + sg * v);
            } while (next_tuple(s, m->src_dims));
        } while (next_tuple(t, m->tgt_dims));
    }

    // Adds m's entries into an ambient coproduct `dst`: source leg from
    // block src_a, target legs to blocks (t0_a, t1_a); optional swap of the
    // two output legs (for the −τφ terms) and sign.
    void add_colinear(LinMap& dst, const LinMap* m, bool src_a, bool t0_a,
                      bool t1_a, long sign = 1, bool swap_tgt = false) const {
        if (!m || m->entries.empty()) return;
        Scalar sg = Scalar::from_int(sign, f);
        std::vector<int> t(2, 0);
        do {
            std::vector<int> s(1, 0);
            do {
                const Scalar& v = m->at(t, s);
                if (v.is_zero()) continue;
                int u0 = swap_tgt ? t[1] : t[0];
                int u1 = swap_tgt ? t[0] : t[1];
                bool b0 = swap_tgt ? t1_a : t0_a;
                bool b1 = swap_tgt ? t0_a : t1_a;
                int e0 = u0 + (b0 ? 0 : da);
                int e1 = u1 + (b1 ? 0 : da);
                int es = s[0] + (src_a ? 0 : da);
                Scalar cur = dst.at({e0, e1}, {es});
                dst.set({e0, e1}, {es}, cur + sg * v);
            } while (next_tuple(s, m->src_dims));
        } while (next_tuple(t, m->tgt_dims));
    }
};

constexpr bool A = true, H = false;

}  // namespace

// Verifies that every full-roster map present in env but outside `allowed`
// is the zero map; returns the provenance-checked env untouched.
static void require_slice(const StructureEnv& env,
                          const std::set<std::string>& allowed,
                          const std::string& who) {
    for (const auto& e : full_roster()) {
        if (allowed.count(e.name)) continue;
        const LinMap* m = fetch(env, e.name);
        if (m && !m->is_zero())
            throw error(who + ": map '" + e.name +
                        "' must be zero or absent in this slice");
    }
}

static std::set<std::string> names_of(const std::vector<RosterEntry>& r) {
    std::set<std::string> s;
    for (const auto& e : r) s.insert(e.name);
    return s;
}

static BuiltStructure build_generic(const StructureEnv& env, bool algebra,
                                    bool coalgebra,
                                    const std::string& provenance) {
    Builder b(env);
    BuiltStructure out;
    out.dim_a = b.da;
    out.dim_h = b.dh;
    out.has_algebra = algebra;
    out.has_coalgebra = coalgebra;
    out.provenance = provenance;
    out.ambient.field = env.field;
    std::vector<std::string> labels;
    for (int i = 0; i < b.da; ++i) labels.push_back(env.basis_label("A", i));
    for (int i = 0; i < b.dh; ++i) labels.push_back(env.basis_label("H", i));
    out.ambient.add_space("E", b.da + b.dh, labels);
    for (int i = 0; i < b.da; ++i) out.embedding.push_back(i);
    for (int i = 0; i < b.da + b.dh; ++i)
        out.projection.push_back(i < b.da ? i : -1);

    if (algebra) {
        LinMap& br = out.ambient.add_zero_map("brE", {"E", "E"}, {"E"});
        LinMap& mul = out.ambient.add_zero_map("mulE", {"E", "E"}, {"E"});
        // [(a,x),(b,y)] = ([a,b] + x⊳b − y⊳a + σ(x,y),
        //                  [x,y] + x⊲b − y⊲a + θ(a,b))
        b.add_bilinear(br, fetch(env, "brA"), A, A, A);
        b.add_bilinear(br, fetch(env, "theta_AA"), A, A, H);
        b.add_bilinear(br, fetch(env, "tri_HA"), H, A, A);
        b.add_bilinear(br, fetch(env, "tl_HA"), H, A, H);
        // −y⊳a and −y⊲a: source legs (a, y) with the map fed (y, a)
        b.add_bilinear(br, fetch(env, "tri_HA"), A, H, A, -1, true);
        b.add_bilinear(br, fetch(env, "tl_HA"), A, H, H, -1, true);
        b.add_bilinear(br, fetch(env, "sigma_HH"), H, H, A);
        b.add_bilinear(br, fetch(env, "brH"), H, H, H);
        // (a,x)(b,y) = (ab + x⇀b + a↼y + ω(x,y),
        //               xy + x←b + a→y + ν(a,b))
        b.add_bilinear(mul, fetch(env, "mulA"), A, A, A);
        b.add_bilinear(mul, fetch(env, "nu_AA"), A, A, H);
        b.add_bilinear(mul, fetch(env, "hpr_HA"), H, A, A);
        b.add_bilinear(mul, fetch(env, "lar_HA"), H, A, H);
        b.add_bilinear(mul, fetch(env, "hpl_AH"), A, H, A);
        b.add_bilinear(mul, fetch(env, "rar_AH"), A, H, H);
        b.add_bilinear(mul, fetch(env, "omega_HH"), H, H, A);
        b.add_bilinear(mul, fetch(env, "mulH"), H, H, H);
    }
    if (coalgebra) {
        LinMap& cobr = out.ambient.add_zero_map("cobrE", {"E"}, {"E", "E"});
        LinMap& cop = out.ambient.add_zero_map("copE", {"E"}, {"E", "E"});
        // δ_E(a) = δ_A(a) + φ(a) − τφ(a) + p(a);  δ_E(x) = δ_H + ψ − τψ + q
        b.add_colinear(cobr, fetch(env, "cobrA"), A, A, A);
        b.add_colinear(cobr, fetch(env, "phi_A"), A, H, A);
        b.add_colinear(cobr, fetch(env, "phi_A"), A, H, A, -1, true);
        b.add_colinear(cobr, fetch(env, "p_A"), A, H, H);
        b.add_colinear(cobr, fetch(env, "cobrH"), H, H, H);
        b.add_colinear(cobr, fetch(env, "psi_H"), H, H, A);
        b.add_colinear(cobr, fetch(env, "psi_H"), H, H, A, -1, true);
        b.add_colinear(cobr, fetch(env, "q_H"), H, A, A);
        // Δ_E(a) = Δ_A(a) + ρ(a) + γ(a) + s(a);  Δ_E(x) = Δ_H + α + β + t
        b.add_colinear(cop, fetch(env, "copA"), A, A, A);
        b.add_colinear(cop, fetch(env, "rho_A"), A, H, A);
        b.add_colinear(cop, fetch(env, "gamma_A"), A, A, H);
        b.add_colinear(cop, fetch(env, "s_A"), A, H, H);
        b.add_colinear(cop, fetch(env, "copH"), H, H, H);
        b.add_colinear(cop, fetch(env, "alpha_H"), H, A, H);
        b.add_colinear(cop, fetch(env, "beta_H"), H, H, A);
        b.add_colinear(cop, fetch(env, "t_H"), H, A, A);
    }
    return out;
}

BuiltStructure build_cocycle_bicrossproduct(const StructureEnv& env) {
    return build_generic(env, true, true, "cocycle_bicrossproduct");
}

BuiltStructure build_biproduct(const StructureEnv& env) {
    require_slice(env,
                  {"brA", "mulA", "cobrA", "copA", "brH", "mulH", "cobrH",
                   "copH", "tri_HA", "hpr_HA", "hpl_AH", "phi_A", "rho_A",
                   "gamma_A"},
                  "build_biproduct");
    return build_generic(env, true, true, "biproduct");
}

BuiltStructure build_bicrossed_product(const StructureEnv& env) {
    require_slice(env,
                  {"brA", "mulA", "brH", "mulH", "tri_HA", "tl_HA", "hpr_HA",
                   "hpl_AH", "rar_AH", "lar_HA"},
                  "build_bicrossed_product");
    return build_generic(env, true, false, "bicrossed_product");
}

BuiltStructure build_bicrossed_coproduct(const StructureEnv& env) {
    require_slice(env,
                  {"cobrA", "copA", "cobrH", "copH", "phi_A", "psi_H", "rho_A",
                   "gamma_A", "alpha_H", "beta_H"},
                  "build_bicrossed_coproduct");
    return build_generic(env, false, true, "bicrossed_coproduct");
}

BuiltStructure build_cocycle_cross_product(const StructureEnv& env) {
    require_slice(env,
                  {"brA", "mulA", "brH", "mulH", "tri_HA", "tl_HA", "hpr_HA",
                   "hpl_AH", "rar_AH", "lar_HA", "sigma_HH", "omega_HH",
                   "theta_AA", "nu_AA"},
                  "build_cocycle_cross_product");
    return build_generic(env, true, false, "cocycle_cross_product");
}

BuiltStructure build_cycle_cross_coproduct(const StructureEnv& env) {
    require_slice(env,
                  {"cobrA", "copA", "cobrH", "copH", "phi_A", "psi_H", "rho_A",
                   "gamma_A", "alpha_H", "beta_H", "p_A", "s_A", "q_H", "t_H"},
                  "build_cycle_cross_coproduct");
    return build_generic(env, false, true, "cycle_cross_coproduct");
}

BuiltStructure build_double_cross_biproduct(const StructureEnv& env) {
    require_slice(env,
                  {"brA", "mulA", "cobrA", "copA", "brH", "mulH", "cobrH",
                   "copH", "tri_HA", "tl_HA", "hpr_HA", "hpl_AH", "rar_AH",
                   "lar_HA", "phi_A", "psi_H", "rho_A", "gamma_A", "alpha_H",
                   "beta_H"},
                  "build_double_cross_biproduct");
    return build_generic(env, true, true, "double_cross_biproduct");
}

BuiltStructure build_unified(ExtKind kind, const ExtendingDatum& datum) {
    if (datum.kind != kind)
        throw error("build_unified: datum kind " + kind_name(datum.kind) +
                    " does not match requested kind " + kind_name(kind));
    require_slice(datum.env, names_of(kind_roster(kind)),
                  "build_unified(" + kind_name(kind) + ")");
    return build_generic(datum.env, kind_has_algebra(kind),
                         kind_has_coalgebra(kind),
                         "unified_" + kind_name(kind));
}

}  // namespace pforge
