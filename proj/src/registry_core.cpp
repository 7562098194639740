#include "pforge/registry.hpp"

//
// Core condition sets: Poisson algebra (PA), Poisson coalgebra (PC), the
// bialgebra compatibilities (PB), the Lie-bialgebra cocycle axiom (LIEBI)
// and the infinitesimal-bialgebra axioms (ASI).  Each generator is
// parameterized by space/map names so the same identities can be evaluated
// on A, H, or a built ambient space E.
//

namespace pforge {

static IdentityDescriptor make_desc(const std::string& id,
                                    std::vector<std::string> in,
                                    std::vector<std::string> out,
                                    std::vector<TensorTerm> lhs,
                                    std::vector<TensorTerm> rhs) {
    IdentityDescriptor d;
    d.id = id;
    d.input_spaces = std::move(in);
    d.output_spaces = std::move(out);
    d.lhs_terms = std::move(lhs);
    d.rhs_terms = std::move(rhs);
    return d;
}

static ConditionEntry entry(const std::string& cond_id,
                            std::vector<IdentityDescriptor> ds) {
    return ConditionEntry{cond_id, std::move(ds)};
}

std::vector<ConditionEntry> make_pa_conditions(const std::string& X,
                                               const std::string& br,
                                               const std::string& mul) {
    std::vector<ConditionEntry> out;
    // [x,y] + [y,x] = 0 (checked literally; no char-2 shortcut)
    out.push_back(entry(
        "antisymmetry",
        {make_desc("antisymmetry@" + X, {X, X}, {X},
                   {tt().ap(br, {0, 1}, 0), tt().ap(br, {1, 0}, 0)}, {})}));
    // [[x,y],z] + [[y,z],x] + [[z,x],y] = 0
    out.push_back(entry(
        "jacobi",
        {make_desc("jacobi@" + X, {X, X, X}, {X},
                   {tt().ap(br, {0, 1}, 0).ap(br, {0, 1}, 0),
                    tt().ap(br, {1, 2}, 0).ap(br, {0, 1}, 0),
                    tt().ap(br, {2, 0}, 0).ap(br, {0, 1}, 0)},
                   {})}));
    // (xy)z = x(yz)
    out.push_back(entry(
        "associativity",
        {make_desc("associativity@" + X, {X, X, X}, {X},
                   {tt().ap(mul, {0, 1}, 0).ap(mul, {0, 1}, 0)},
                   {tt().ap(mul, {1, 2}, 1).ap(mul, {0, 1}, 0)})}));
    // [x, yz] = [x,y]z + y[x,z]
    out.push_back(entry(
        "leibniz",
        {make_desc("leibniz@" + X, {X, X, X}, {X},
                   {tt().ap(mul, {1, 2}, 1).ap(br, {0, 1}, 0)},
                   {tt().ap(br, {0, 1}, 0).ap(mul, {0, 1}, 0),
                    tt().ap(br, {0, 2}, 1).ap(mul, {0, 1}, 0)})}));
    return out;
}

std::vector<ConditionEntry> make_pc_conditions(const std::string& X,
                                               const std::string& cobr,
                                               const std::string& cop) {
    std::vector<ConditionEntry> out;
    // δ(x) + τδ(x) = 0
    out.push_back(entry(
        "co-antisymmetry",
        {make_desc("co-antisymmetry@" + X, {X}, {X, X},
                   {tt().ap(cobr, {0}, 0), tt().ap(cobr, {0}, 0).pm({1, 0})},
                   {})}));
    // (id + ξ + ξ²)(δ⊗id)δ(x) = 0 with ξ the cyclic leg rotation
    out.push_back(entry(
        "co-jacobi",
        {make_desc("co-jacobi@" + X, {X}, {X, X, X},
                   {tt().ap(cobr, {0}, 0).ap(cobr, {0}, 0),
                    tt().ap(cobr, {0}, 0).ap(cobr, {0}, 0).pm({1, 2, 0}),
                    tt().ap(cobr, {0}, 0).ap(cobr, {0}, 0).pm({2, 0, 1})},
                   {})}));
    // (Δ⊗id)Δ = (id⊗Δ)Δ
    out.push_back(entry(
        "coassociativity",
        {make_desc("coassociativity@" + X, {X}, {X, X, X},
                   {tt().ap(cop, {0}, 0).ap(cop, {0}, 0)},
                   {tt().ap(cop, {0}, 0).ap(cop, {1}, 1)})}));
    // (id⊗Δ)δ(x) = (δ⊗id)Δ(x) + (τ⊗id)(id⊗δ)Δ(x)
    out.push_back(entry(
        "co-leibniz",
        {make_desc("co-leibniz@" + X, {X}, {X, X, X},
                   {tt().ap(cobr, {0}, 0).ap(cop, {1}, 1)},
                   {tt().ap(cop, {0}, 0).ap(cobr, {0}, 0),
                    tt().ap(cop, {0}, 0).ap(cobr, {1}, 1).pm({1, 0, 2})})}));
    return out;
}

std::vector<ConditionEntry> make_pb_conditions(const std::string& X,
                                               const std::string& br,
                                               const std::string& mul,
                                               const std::string& cobr,
                                               const std::string& cop) {
    std::vector<ConditionEntry> out;
    // δ(xy) = x·y₍₁₎⊗y₍₂₎ + x₍₁₎·y⊗x₍₂₎ + y₁⊗[x,y₂] + x₂⊗[y,x₁]
    out.push_back(entry(
        "LB01",
        {make_desc("LB01@" + X, {X, X}, {X, X},
                   {tt().ap(mul, {0, 1}, 0).ap(cobr, {0}, 0)},
                   {tt().ap(cobr, {1}, 1).ap(mul, {0, 1}, 0),
                    tt().ap(cobr, {0}, 0).ap(mul, {0, 2}, 0),
                    tt().ap(cop, {1}, 1).ap(br, {0, 2}, 1),
                    tt().ap(cop, {0}, 0).ap(br, {2, 0}, 1)})}));
    // Δ([x,y]) = [x,y₁]⊗y₂ + y₁⊗[x,y₂] + x₍₁₎·y⊗x₍₂₎ − x₍₁₎⊗y·x₍₂₎
    out.push_back(entry(
        "LB02",
        {make_desc("LB02@" + X, {X, X}, {X, X},
                   {tt().ap(br, {0, 1}, 0).ap(cop, {0}, 0)},
                   {tt().ap(cop, {1}, 1).ap(br, {0, 1}, 0),
                    tt().ap(cop, {1}, 1).ap(br, {0, 2}, 1),
                    tt().ap(cobr, {0}, 0).ap(mul, {0, 2}, 0),
                    tt(-1).ap(cobr, {0}, 0).ap(mul, {2, 1}, 1)})}));
    return out;
}

std::vector<ConditionEntry> make_liebi_conditions(const std::string& X,
                                                  const std::string& br,
                                                  const std::string& cobr) {
    // δ([x,y]) = (ad_x⊗id + id⊗ad_x)δ(y) − (ad_y⊗id + id⊗ad_y)δ(x)
    return {entry(
        "cobracket-cocycle",
        {make_desc("cobracket-cocycle@" + X, {X, X}, {X, X},
                   {tt().ap(br, {0, 1}, 0).ap(cobr, {0}, 0)},
                   {tt().ap(cobr, {1}, 1).ap(br, {0, 1}, 0),
                    tt().ap(cobr, {1}, 1).ap(br, {0, 2}, 1),
                    tt(-1).ap(cobr, {0}, 0).ap(br, {2, 0}, 0),
                    tt(-1).ap(cobr, {0}, 0).ap(br, {2, 1}, 1)})})};
}

std::vector<ConditionEntry> make_asi_conditions(const std::string& X,
                                                const std::string& mul,
                                                const std::string& cop) {
    std::vector<ConditionEntry> out;
    // Δ(ab) = a·b₁⊗b₂ + a₁⊗a₂·b
    out.push_back(entry(
        "asi-product",
        {make_desc("asi-product@" + X, {X, X}, {X, X},
                   {tt().ap(mul, {0, 1}, 0).ap(cop, {0}, 0)},
                   {tt().ap(cop, {1}, 1).ap(mul, {0, 1}, 0),
                    tt().ap(cop, {0}, 0).ap(mul, {1, 2}, 1)})}));
    // (L_a⊗id − id⊗R_a)(Δ(b) + τΔ(b)) = 0
    out.push_back(entry(
        "asi-balance",
        {make_desc("asi-balance@" + X, {X, X}, {X, X},
                   {tt().ap(cop, {1}, 1).ap(mul, {0, 1}, 0),
                    tt().ap(cop, {1}, 1).ap(mul, {0, 2}, 0),
                    tt(-1).ap(cop, {1}, 1).ap(mul, {2, 0}, 1),
                    tt(-1).ap(cop, {1}, 1).ap(mul, {1, 0}, 1)},
                   {})}));
    return out;
}

void register_core_sets(std::map<std::string, ConditionSet>& reg) {
    reg.emplace("PA", ConditionSet{"PA",
                                   "noncommutative Poisson algebra axioms",
                                   make_pa_conditions("A", "brA", "mulA")});
    reg.emplace("PC", ConditionSet{"PC",
                                   "noncommutative Poisson coalgebra axioms",
                                   make_pc_conditions("A", "cobrA", "copA")});
    reg.emplace("PB",
                ConditionSet{"PB",
                             "Poisson bialgebra compatibilities LB01/LB02",
                             make_pb_conditions("A", "brA", "mulA", "cobrA",
                                                "copA")});
    reg.emplace("LIEBI",
                ConditionSet{"LIEBI", "Lie bialgebra cocycle axiom",
                             make_liebi_conditions("A", "brA", "cobrA")});
    reg.emplace("ASI",
                ConditionSet{"ASI",
                             "antisymmetric infinitesimal bialgebra axioms",
                             make_asi_conditions("A", "mulA", "copA")});
}

}  // namespace pforge
