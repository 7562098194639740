#include "pforge/equivalence.hpp"

#include <algorithm>
#include <cmath>

namespace pforge {

namespace {

// Which ambient operation each roster map is a block of.
const std::string& ambient_op_for(const std::string& name) {
    static const std::map<std::string, std::string> table = {
        {"brA", "brE"},      {"brH", "brE"},      {"tri_HA", "brE"},
        {"tl_HA", "brE"},    {"sigma_HH", "brE"}, {"theta_AA", "brE"},
        {"mulA", "mulE"},    {"mulH", "mulE"},    {"hpr_HA", "mulE"},
        {"hpl_AH", "mulE"},  {"rar_AH", "mulE"},  {"lar_HA", "mulE"},
        {"omega_HH", "mulE"},{"nu_AA", "mulE"},
        {"cobrA", "cobrE"},  {"cobrH", "cobrE"},  {"phi_A", "cobrE"},
        {"psi_H", "cobrE"},  {"p_A", "cobrE"},    {"q_H", "cobrE"},
        {"copA", "copE"},    {"copH", "copE"},    {"rho_A", "copE"},
        {"gamma_A", "copE"}, {"alpha_H", "copE"}, {"beta_H", "copE"},
        {"s_A", "copE"},     {"t_H", "copE"},
    };
    auto it = table.find(name);
    if (it == table.end()) throw error("no ambient block for map " + name);
    return it->second;
}

bool projection_side(ExtKind k) {
    // true: the projection must be a homomorphism; false: the embedding.
    return k == ExtKind::a1 || k == ExtKind::c1 || k == ExtKind::I;
}

struct Splitting {
    int dim_e = 0;
    int dim_a = 0;
    std::vector<int> a_index;  // A basis index -> E index
    std::vector<int> v_index;  // V basis index -> E index
    std::vector<bool> is_a;    // over E indices
};

Splitting splitting_of(const ExtensionPresentation& pres) {
    Splitting s;
    s.dim_e = pres.ambient.dim("E");
    s.dim_a = pres.dim_a;
    if (static_cast<int>(pres.embedding.size()) != pres.dim_a)
        throw error("embedding must list one E index per A basis vector");
    if (static_cast<int>(pres.projection.size()) != s.dim_e)
        throw error("projection must cover every E basis vector");
    s.is_a.assign(s.dim_e, false);
    s.a_index = pres.embedding;
    for (int i = 0; i < pres.dim_a; ++i) {
        int e = pres.embedding[i];
        if (e < 0 || e >= s.dim_e || s.is_a[e])
            throw error("embedding is not injective into E");
        if (pres.projection[e] != i)
            throw error("projection is not a left inverse of the embedding");
        s.is_a[e] = true;
    }
    for (int e = 0; e < s.dim_e; ++e) {
        if (s.is_a[e]) continue;
        if (pres.projection[e] != -1)
            throw error("projection must kill the complement coordinates");
        s.v_index.push_back(e);
    }
    return s;
}

// The homomorphism precondition is a set of vanishing blocks of the ambient
// operations; returns a message naming the first violation, or empty.
std::string hom_precondition(const ExtensionPresentation& pres, ExtKind kind,
                             const Splitting& sp) {
    bool proj = projection_side(kind);
    if (kind_has_algebra(kind)) {
        for (const char* op : {"brE", "mulE"}) {
            const LinMap& m = pres.ambient.map_at(op);
            for (int u = 0; u < sp.dim_e; ++u)
                for (int v = 0; v < sp.dim_e; ++v)
                    for (int t = 0; t < sp.dim_e; ++t) {
                        bool forbidden =
                            proj ? (!sp.is_a[u] || !sp.is_a[v]) && sp.is_a[t]
                                 : sp.is_a[u] && sp.is_a[v] && !sp.is_a[t];
                        if (forbidden && !m.at({t}, {u, v}).is_zero())
                            return std::string(proj ? "projection" : "embedding") +
                                   " is not a homomorphism: " + op +
                                   " at tuple " + tuple_to_string({t, u, v});
                    }
        }
    }
    if (kind_has_coalgebra(kind)) {
        for (const char* op : {"cobrE", "copE"}) {
            const LinMap& m = pres.ambient.map_at(op);
            for (int u = 0; u < sp.dim_e; ++u)
                for (int t1 = 0; t1 < sp.dim_e; ++t1)
                    for (int t2 = 0; t2 < sp.dim_e; ++t2) {
                        bool forbidden =
                            proj ? !sp.is_a[u] && sp.is_a[t1] && sp.is_a[t2]
                                 : sp.is_a[u] && !(sp.is_a[t1] && sp.is_a[t2]);
                        if (forbidden && !m.at({t1, t2}, {u}).is_zero())
                            return std::string(proj ? "projection" : "embedding") +
                                   " is not a homomorphism: " + op +
                                   " at tuple " + tuple_to_string({t1, t2, u});
                    }
        }
    }
    return {};
}

int e_index_of(const Splitting& sp, const std::string& space, int i) {
    return space == "A" ? sp.a_index[i] : sp.v_index[i];
}

// Extracts one roster map as the corresponding block of its ambient op.
LinMap extract_block(const ExtensionPresentation& pres, const Splitting& sp,
                     const RosterEntry& entry, const StructureEnv& datum_env) {
    LinMap m = make_zero_map(datum_env, entry.source, entry.target);
    const LinMap& amb = pres.ambient.map_at(ambient_op_for(entry.name));
    std::vector<int> src(entry.source.size(), 0), tgt(entry.target.size(), 0);
    std::vector<int> sdims = m.src_dims, tdims = m.tgt_dims;
    do {
        std::vector<int> esrc(src.size()), etgt(tgt.size());
        for (std::size_t i = 0; i < src.size(); ++i)
            esrc[i] = e_index_of(sp, entry.source[i], src[i]);
        tgt.assign(tgt.size(), 0);
        do {
            for (std::size_t i = 0; i < tgt.size(); ++i)
                etgt[i] = e_index_of(sp, entry.target[i], tgt[i]);
            m.set(tgt, src, amb.at(etgt, esrc));
        } while (next_tuple(tgt, tdims));
    } while (next_tuple(src, sdims));
    return m;
}

// Scalar matrix utilities (column-major action: columns are images of basis
// vectors).
using Matrix = std::vector<std::vector<Scalar>>;  // [row][col]

Matrix phi_matrix(const MorphismPair& w, int dim_a, int dim_v,
                  const FieldSpec& f) {
    int n = dim_a + dim_v;
    Matrix phi(n, std::vector<Scalar>(n, Scalar::zero(f)));
    for (int i = 0; i < dim_a; ++i) phi[i][i] = Scalar::one(f);
    for (int k = 0; k < dim_v; ++k) {
        for (int j = 0; j < dim_a; ++j) phi[j][dim_a + k] = w.r.at({j}, {k});
        for (int j = 0; j < dim_v; ++j)
            phi[dim_a + j][dim_a + k] = w.s_map.at({j}, {k});
    }
    return phi;
}

void append_violation(ViolationList& out, const std::string& set_id,
                      const std::string& cond_id, std::vector<int> tuple,
                      DenseArray diff) {
    out.push_back(Violation{set_id, cond_id, 0, std::move(tuple),
                            std::move(diff)});
}

// φ(op1(e_u, e_v)) - op2(φ e_u, φ e_v) for all u, v.
void hom_check_binary(ViolationList& out, const std::string& op,
                      const LinMap& m1, const LinMap& m2, const Matrix& phi,
                      const FieldSpec& f) {
    int n = static_cast<int>(phi.size());
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            DenseArray diff = DenseArray::zeros({n}, f);
            for (int t = 0; t < n; ++t) {
                const Scalar& c = m1.at({t}, {u, v});
                if (c.is_zero()) continue;
                for (int j = 0; j < n; ++j) diff.at({j}) += c * phi[j][t];
            }
            for (int up = 0; up < n; ++up) {
                if (phi[up][u].is_zero()) continue;
                for (int vp = 0; vp < n; ++vp) {
                    Scalar c = phi[up][u] * phi[vp][v];
                    if (c.is_zero()) continue;
                    for (int t = 0; t < n; ++t)
                        diff.at({t}) -= c * m2.at({t}, {up, vp});
                }
            }
            if (!diff.is_zero())
                append_violation(out, "HOM", "constructive:" + op, {u, v},
                                 std::move(diff));
        }
}

// (φ⊗φ)(δ1(e_u)) - δ2(φ e_u) for all u.
void hom_check_cobinary(ViolationList& out, const std::string& op,
                        const LinMap& m1, const LinMap& m2, const Matrix& phi,
                        const FieldSpec& f) {
    int n = static_cast<int>(phi.size());
    for (int u = 0; u < n; ++u) {
        DenseArray diff = DenseArray::zeros({n, n}, f);
        for (int t1 = 0; t1 < n; ++t1)
            for (int t2 = 0; t2 < n; ++t2) {
                const Scalar& c = m1.at({t1, t2}, {u});
                if (c.is_zero()) continue;
                for (int j1 = 0; j1 < n; ++j1) {
                    if (phi[j1][t1].is_zero()) continue;
                    Scalar cj = c * phi[j1][t1];
                    for (int j2 = 0; j2 < n; ++j2)
                        diff.at({j1, j2}) += cj * phi[j2][t2];
                }
            }
        for (int up = 0; up < n; ++up) {
            if (phi[up][u].is_zero()) continue;
            for (int t1 = 0; t1 < n; ++t1)
                for (int t2 = 0; t2 < n; ++t2)
                    diff.at({t1, t2}) -= phi[up][u] * m2.at({t1, t2}, {up});
        }
        if (!diff.is_zero())
            append_violation(out, "HOM", "constructive:" + op, {u},
                             std::move(diff));
    }
}

std::vector<std::string> mor_sets_for(ExtKind k) {
    switch (k) {
        case ExtKind::a1: return {"MOR_A1"};
        case ExtKind::a2: return {"MOR_A2"};
        case ExtKind::c1: return {"MOR_C1"};
        case ExtKind::c2: return {"MOR_C2"};
        case ExtKind::I: return {"MOR_A1", "MOR_C1"};
        case ExtKind::II: return {"MOR_A2", "MOR_C2"};
    }
    throw error("unknown kind");
}

std::string ext_set_for(ExtKind k) {
    switch (k) {
        case ExtKind::a1: return "EXT_A1";
        case ExtKind::a2: return "EXT_A2";
        case ExtKind::c1: return "EXT_C1";
        case ExtKind::c2: return "EXT_C2";
        case ExtKind::I: return "EXT_I";
        case ExtKind::II: return "EXT_II";
    }
    throw error("unknown kind");
}

void require_compatible(ExtKind kind, const ExtendingDatum& d,
                        const ExtendingDatum& d2) {
    if (d.kind != kind || d2.kind != kind)
        throw error("kind mismatch between data and requested kind");
    if (d.env.field != d2.env.field) throw error("field mismatch");
    if (d.env.dim("A") != d2.env.dim("A") || d.env.dim("H") != d2.env.dim("H"))
        throw error("dimension mismatch between the two data");
}

// Combined env: first datum's maps plainly, second datum's suffixed "2",
// plus the pair (r_VA, s_VV).
StructureEnv combined_env(ExtKind kind, const MorphismPair& w,
                          const ExtendingDatum& d, const ExtendingDatum& d2) {
    StructureEnv env;
    env.field = d.env.field;
    env.add_space("A", d.env.dim("A"));
    env.add_space("H", d.env.dim("H"));
    for (const RosterEntry& e : kind_roster(kind)) {
        env.maps.emplace(e.name, d.env.has_map(e.name)
                                     ? d.env.map_at(e.name)
                                     : make_zero_map(env, e.source, e.target));
        env.maps.emplace(e.name + "2",
                         d2.env.has_map(e.name)
                             ? d2.env.map_at(e.name)
                             : make_zero_map(env, e.source, e.target));
    }
    env.maps.emplace("r_VA", w.r);
    env.maps.emplace("s_VV", w.s_map);
    return env;
}

LinMap identity_map(const StructureEnv& env, const std::string& space) {
    LinMap m = make_zero_map(env, {space}, {space});
    for (int i = 0; i < env.dim(space); ++i)
        m.set({i}, {i}, Scalar::one(env.field));
    return m;
}

}  // namespace

ExtensionPresentation presentation_of(const BuiltStructure& built) {
    ExtensionPresentation pres;
    pres.ambient = built.ambient;
    pres.dim_a = built.dim_a;
    pres.embedding = built.embedding;
    pres.projection = built.projection;
    return pres;
}

ExtendingDatum split_extension(const ExtensionPresentation& pres,
                               ExtKind kind) {
    Splitting sp = splitting_of(pres);
    if (kind_has_algebra(kind) &&
        (!pres.ambient.has_map("brE") || !pres.ambient.has_map("mulE")))
        throw error("ambient lacks the algebra maps brE/mulE");
    if (kind_has_coalgebra(kind) &&
        (!pres.ambient.has_map("cobrE") || !pres.ambient.has_map("copE")))
        throw error("ambient lacks the coalgebra maps cobrE/copE");

    std::string pre = hom_precondition(pres, kind, sp);
    if (!pre.empty()) throw error(pre);

    ExtendingDatum datum;
    datum.kind = kind;
    datum.env.field = pres.ambient.field;
    datum.env.add_space("A", sp.dim_a);
    datum.env.add_space("H", static_cast<int>(sp.v_index.size()));
    for (const RosterEntry& e : kind_roster(kind))
        datum.env.maps.emplace(e.name, extract_block(pres, sp, e, datum.env));

    // Reconstruction check: rebuilding from the extracted datum must give
    // back the ambient operations (up to the coordinate identification).
    BuiltStructure rebuilt = build_unified(kind, datum);
    std::vector<int> to_pres(sp.dim_e);  // rebuilt E index -> pres E index
    for (int i = 0; i < sp.dim_a; ++i) to_pres[i] = sp.a_index[i];
    for (std::size_t k = 0; k < sp.v_index.size(); ++k)
        to_pres[sp.dim_a + k] = sp.v_index[k];
    std::vector<std::string> ops;
    if (kind_has_algebra(kind)) ops.insert(ops.end(), {"brE", "mulE"});
    if (kind_has_coalgebra(kind)) ops.insert(ops.end(), {"cobrE", "copE"});
    for (const std::string& op : ops) {
        const LinMap& rb = rebuilt.ambient.map_at(op);
        const LinMap& orig = pres.ambient.map_at(op);
        std::vector<int> src(rb.src_dims.size(), 0);
        do {
            std::vector<int> tgt(rb.tgt_dims.size(), 0);
            do {
                std::vector<int> psrc(src.size()), ptgt(tgt.size());
                for (std::size_t i = 0; i < src.size(); ++i)
                    psrc[i] = to_pres[src[i]];
                for (std::size_t i = 0; i < tgt.size(); ++i)
                    ptgt[i] = to_pres[tgt[i]];
                if (rb.at(tgt, src) != orig.at(ptgt, psrc))
                    throw error(
                        "reconstruction mismatch in " + op + " at tuple " +
                        tuple_to_string(src) +
                        ": the ambient is not an extension of kind " +
                        kind_name(kind));
            } while (next_tuple(tgt, rb.tgt_dims));
        } while (next_tuple(src, rb.src_dims));
    }
    return datum;
}

ViolationList morphism_is_homomorphism(ExtKind kind, const MorphismPair& w,
                                       const ExtendingDatum& d,
                                       const ExtendingDatum& d2) {
    require_compatible(kind, d, d2);
    BuiltStructure e1 = build_unified(kind, d);
    BuiltStructure e2 = build_unified(kind, d2);
    Matrix phi = phi_matrix(w, e1.dim_a, e1.dim_h, d.env.field);
    ViolationList out;
    if (kind_has_algebra(kind)) {
        hom_check_binary(out, "brE", e1.ambient.map_at("brE"),
                         e2.ambient.map_at("brE"), phi, d.env.field);
        hom_check_binary(out, "mulE", e1.ambient.map_at("mulE"),
                         e2.ambient.map_at("mulE"), phi, d.env.field);
    }
    if (kind_has_coalgebra(kind)) {
        hom_check_cobinary(out, "cobrE", e1.ambient.map_at("cobrE"),
                           e2.ambient.map_at("cobrE"), phi, d.env.field);
        hom_check_cobinary(out, "copE", e1.ambient.map_at("copE"),
                           e2.ambient.map_at("copE"), phi, d.env.field);
    }
    return out;
}

ViolationList check_morphism_pair(ExtKind kind, const MorphismPair& w,
                                  const ExtendingDatum& d,
                                  const ExtendingDatum& d2,
                                  bool cross_validate) {
    require_compatible(kind, d, d2);
    StructureEnv env = combined_env(kind, w, d, d2);
    ViolationList out;
    for (const std::string& set : mor_sets_for(kind))
        for (Violation& v : run_conditions(set, registry_set(set).conditions,
                                           env))
            out.push_back(std::move(v));
    if (cross_validate)
        for (Violation& v : morphism_is_homomorphism(kind, w, d, d2))
            out.push_back(std::move(v));
    return out;
}

bool is_invertible(const LinMap& m) {
    if (m.src_dims.size() != 1 || m.tgt_dims.size() != 1 ||
        m.src_dims[0] != m.tgt_dims[0])
        throw error("invertibility requires a square one-leg map");
    int n = m.src_dims[0];
    if (n == 0) return true;
    Matrix mat(n, std::vector<Scalar>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mat[i][j] = m.at({i}, {j});
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!mat[row][col].is_zero()) { pivot = row; break; }
        if (pivot < 0) return false;
        std::swap(mat[pivot], mat[col]);
        Scalar inv = mat[col][col].inv();
        for (int row = col + 1; row < n; ++row) {
            if (mat[row][col].is_zero()) continue;
            Scalar factor = mat[row][col] * inv;
            for (int j = col; j < n; ++j)
                mat[row][j] -= factor * mat[col][j];
        }
    }
    return true;
}

bool advance_entries(LinMap& m, long prime) {
    for (std::size_t i = m.entries.size(); i-- > 0;) {
        long v = m.entries[i].residue_value() + 1;
        if (v < prime) {
            m.entries[i] = Scalar::residue(prime, v);
            return true;
        }
        m.entries[i] = Scalar::residue(prime, 0);
    }
    return false;
}

bool verify_witness(ExtKind kind, const MorphismPair& w,
                    const ExtendingDatum& d, const ExtendingDatum& d2) {
    return is_invertible(w.s_map) && check_morphism_pair(kind, w, d, d2).empty();
}

EquivalenceResult decide_equivalence(ExtKind kind, const ExtendingDatum& d,
                                     const ExtendingDatum& d2,
                                     const FieldSpec& f,
                                     unsigned long budget) {
    if (f.is_rational())
        throw error("equivalence search requires a prime field; over the "
                    "rationals only supplied witnesses can be verified");
    if (d.env.field != f || d2.env.field != f) throw error("field mismatch");
    require_compatible(kind, d, d2);
    int dim_a = d.env.dim("A"), dim_v = d.env.dim("H");
    double space = std::pow(static_cast<double>(f.prime),
                            static_cast<double>(dim_a * dim_v + dim_v * dim_v));
    if (space > static_cast<double>(budget))
        throw budget_error("equivalence search space of size " +
                               std::to_string(space) +
                               " exceeds the budget of " +
                               std::to_string(budget),
                           space);

    auto probe = [&](const MorphismPair& w) -> bool {
        return is_invertible(w.s_map) &&
               check_morphism_pair(kind, w, d, d2).empty();
    };

    MorphismPair w;
    w.r = make_zero_map(d.env, {"H"}, {"A"});
    w.s_map = identity_map(d.env, "H");
    EquivalenceResult res;
    if (probe(w)) {
        res.found = true;
        res.witness = EquivalenceWitness{w, kind, true};
        return res;
    }
    // Full odometer scan: s outer, r inner, entries in lexicographic order.
    w.s_map = make_zero_map(d.env, {"H"}, {"H"});
    do {
        if (!is_invertible(w.s_map)) continue;
        w.r = make_zero_map(d.env, {"H"}, {"A"});
        do {
            if (probe(w)) {
                res.found = true;
                res.witness = EquivalenceWitness{w, kind, true};
                return res;
            }
        } while (advance_entries(w.r, f.prime));
    } while (advance_entries(w.s_map, f.prime));
    return res;  // exhausted
}

namespace {

Matrix matrix_inverse(const Matrix& m, const FieldSpec& f) {
    int n = static_cast<int>(m.size());
    Matrix a = m;
    Matrix inv(n, std::vector<Scalar>(n, Scalar::zero(f)));
    for (int i = 0; i < n; ++i) inv[i][i] = Scalar::one(f);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!a[row][col].is_zero()) { pivot = row; break; }
        if (pivot < 0) throw error("matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Scalar d = a[col][col].inv();
        for (int j = 0; j < n; ++j) {
            a[col][j] *= d;
            inv[col][j] *= d;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            Scalar factor = a[row][col];
            for (int j = 0; j < n; ++j) {
                a[row][j] -= factor * a[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

LinMap conjugate_binary(const LinMap& m, const Matrix& phi, const Matrix& inv,
                        const FieldSpec& f) {
    int n = static_cast<int>(phi.size());
    LinMap out = m;
    for (int t = 0; t < n; ++t)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                Scalar acc = Scalar::zero(f);
                for (int tp = 0; tp < n; ++tp) {
                    if (phi[t][tp].is_zero()) continue;
                    for (int up = 0; up < n; ++up) {
                        if (inv[up][u].is_zero()) continue;
                        for (int vp = 0; vp < n; ++vp)
                            acc += phi[t][tp] * m.at({tp}, {up, vp}) *
                                   inv[up][u] * inv[vp][v];
                    }
                }
                out.set({t}, {u, v}, acc);
            }
    return out;
}

LinMap conjugate_cobinary(const LinMap& m, const Matrix& phi,
                          const Matrix& inv, const FieldSpec& f) {
    int n = static_cast<int>(phi.size());
    LinMap out = m;
    for (int t1 = 0; t1 < n; ++t1)
        for (int t2 = 0; t2 < n; ++t2)
            for (int u = 0; u < n; ++u) {
                Scalar acc = Scalar::zero(f);
                for (int t1p = 0; t1p < n; ++t1p) {
                    if (phi[t1][t1p].is_zero()) continue;
                    for (int t2p = 0; t2p < n; ++t2p) {
                        if (phi[t2][t2p].is_zero()) continue;
                        for (int up = 0; up < n; ++up)
                            acc += phi[t1][t1p] * phi[t2][t2p] *
                                   m.at({t1p, t2p}, {up}) * inv[up][u];
                    }
                }
                out.set({t1, t2}, {u}, acc);
            }
    return out;
}

}  // namespace

ExtendingDatum pushforward(ExtKind kind, const ExtendingDatum& d,
                           const MorphismPair& w) {
    if (!is_invertible(w.s_map))
        throw error("pushforward requires an invertible s");
    BuiltStructure built = build_unified(kind, d);
    const FieldSpec& f = d.env.field;
    Matrix phi = phi_matrix(w, built.dim_a, built.dim_h, f);
    Matrix inv = matrix_inverse(phi, f);
    ExtensionPresentation pres = presentation_of(built);
    if (kind_has_algebra(kind)) {
        pres.ambient.map_at("brE") =
            conjugate_binary(built.ambient.map_at("brE"), phi, inv, f);
        pres.ambient.map_at("mulE") =
            conjugate_binary(built.ambient.map_at("mulE"), phi, inv, f);
    }
    if (kind_has_coalgebra(kind)) {
        pres.ambient.map_at("cobrE") =
            conjugate_cobinary(built.ambient.map_at("cobrE"), phi, inv, f);
        pres.ambient.map_at("copE") =
            conjugate_cobinary(built.ambient.map_at("copE"), phi, inv, f);
    }
    return split_extension(pres, kind);
}

ClassifyResult classify_small(ExtKind kind, int dim_a, int dim_v,
                              const FieldSpec& f, const StructureEnv* base,
                              unsigned long budget) {
    if (f.is_rational())
        throw error("classification enumerates a prime field");

    StructureEnv env;
    env.field = f;
    env.add_space("A", dim_a);
    env.add_space("H", dim_v);
    static const std::vector<std::string> base_names = {"brA", "mulA", "cobrA",
                                                        "copA"};
    std::vector<std::string> varying;
    for (const RosterEntry& e : kind_roster(kind)) {
        bool is_base = std::find(base_names.begin(), base_names.end(),
                                 e.name) != base_names.end();
        if (is_base && base && base->has_map(e.name)) {
            env.maps.emplace(e.name, base->map_at(e.name));
        } else {
            env.maps.emplace(e.name, make_zero_map(env, e.source, e.target));
            if (!is_base) varying.push_back(e.name);
        }
    }

    std::size_t n_entries = 0;
    for (const std::string& name : varying)
        n_entries += env.map_at(name).entries.size();
    double space = std::pow(static_cast<double>(f.prime),
                            static_cast<double>(n_entries));
    if (space > static_cast<double>(budget))
        throw budget_error("classification space of size " +
                               std::to_string(space) +
                               " exceeds the budget of " +
                               std::to_string(budget),
                           space);

    // Odometer over the concatenated varying entries, roster order, last
    // entry fastest: enumeration order == lexicographic order on the
    // structure constants, so a class's first member is its canonical
    // representative.
    auto advance_all = [&]() -> bool {
        for (std::size_t i = varying.size(); i-- > 0;)
            if (advance_entries(env.map_at(varying[i]), f.prime)) return true;
        return false;
    };

    const std::string ext_set = ext_set_for(kind);
    std::vector<ExtendingDatum> valid;
    do {
        if (check_condition_set(ext_set, env).empty())
            valid.push_back(ExtendingDatum{kind, env});
    } while (advance_all());

    ClassifyResult result;
    result.total_valid = valid.size();
    for (ExtendingDatum& datum : valid) {
        bool placed = false;
        for (EquivalenceClass& cls : result.classes) {
            if (decide_equivalence(kind, datum, cls.representative, f, budget)
                    .found) {
                ++cls.size;
                placed = true;
                break;
            }
        }
        if (!placed)
            result.classes.push_back(EquivalenceClass{std::move(datum), 1});
    }
    return result;
}

}  // namespace pforge
