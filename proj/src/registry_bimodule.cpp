#include "pforge/registry.hpp"

//
// Bimodule / bicomodule layer: the module and comodule compatibilities, the
// mixed Hopf-bimodule conditions HM1-HM8, the braided conditions BB1-BB2,
// and the eighteen proof conditions of the biproduct theorem.
//
// Vocabulary: H acts/coacts on A (A plays the module role V).  Actions
// tri_HA (⊳), hpr_HA (⇀), hpl_AH (↼); coactions phi_A (φ), rho_A (ρ),
// gamma_A (γ).  Sweedler shorthands: Δ(x)=x₁⊗x₂, δ(x)=x₍₁₎⊗x₍₂₎,
// φ(v)=v⟨₋₁⟩⊗v⟨₀⟩, ρ(v)=v₍₋₁₎⊗v₍₀₎, γ(v)=v₍₀₎⊗v₍₁₎.
//

namespace pforge {

namespace {

const std::string A = "A", H = "H";
const std::string tri = "tri_HA", hpr = "hpr_HA", hpl = "hpl_AH";
const std::string phi = "phi_A", rho = "rho_A", gam = "gamma_A";

IdentityDescriptor desc(const std::string& id, std::vector<std::string> in,
                        std::vector<std::string> out,
                        std::vector<TensorTerm> lhs,
                        std::vector<TensorTerm> rhs) {
    return IdentityDescriptor{id, std::move(in), std::move(out),
                              std::move(lhs), std::move(rhs)};
}

ConditionEntry one(const std::string& cond_id, IdentityDescriptor d) {
    return ConditionEntry{cond_id, {std::move(d)}};
}

// --- Poisson bimodule, conditions (6)-(9) and (118)-(120); inputs (x,y,v) --

std::vector<ConditionEntry> bimod_conditions() {
    std::vector<ConditionEntry> cs;
    // (6) (xy)⇀v = x⇀(y⇀v)
    cs.push_back(one("(6)", desc("BIMOD(6)", {H, H, A}, {A},
                               {tt().ap("mulH", {0, 1}, 0).ap(hpr, {0, 1}, 0)},
                               {tt().ap(hpr, {1, 2}, 1).ap(hpr, {0, 1}, 0)})));
    // (7) v↼(xy) = (v↼x)↼y
    cs.push_back(one("(7)", desc("BIMOD(7)", {H, H, A}, {A},
                               {tt().ap("mulH", {0, 1}, 0).ap(hpl, {1, 0}, 0)},
                               {tt().ap(hpl, {2, 0}, 0).ap(hpl, {0, 1}, 0)})));
    // (8) x⇀(v↼y) = (x⇀v)↼y
    cs.push_back(one("(8)", desc("BIMOD(8)", {H, H, A}, {A},
                               {tt().ap(hpl, {2, 1}, 1).ap(hpr, {0, 1}, 0)},
                               {tt().ap(hpr, {0, 2}, 0).ap(hpl, {0, 1}, 0)})));
    // (9) [x,y]⊳v = x⊳(y⊳v) − y⊳(x⊳v)
    cs.push_back(one("(9)", desc("BIMOD(9)", {H, H, A}, {A},
                               {tt().ap("brH", {0, 1}, 0).ap(tri, {0, 1}, 0)},
                               {tt().ap(tri, {1, 2}, 1).ap(tri, {0, 1}, 0),
                                tt(-1).ap(tri, {0, 2}, 1).ap(tri, {0, 1}, 0)})));
    // (118) (xy)⊳v = x⇀(y⊳v) + (x⊳v)↼y
    cs.push_back(one("(118)",
                     desc("BIMOD(118)", {H, H, A}, {A},
                          {tt().ap("mulH", {0, 1}, 0).ap(tri, {0, 1}, 0)},
                          {tt().ap(tri, {1, 2}, 1).ap(hpr, {0, 1}, 0),
                           tt().ap(tri, {0, 2}, 0).ap(hpl, {0, 1}, 0)})));
    // (119) [x,y]⇀v = x⊳(y⇀v) − y⇀(x⊳v)
    cs.push_back(one("(119)",
                     desc("BIMOD(119)", {H, H, A}, {A},
                          {tt().ap("brH", {0, 1}, 0).ap(hpr, {0, 1}, 0)},
                          {tt().ap(hpr, {1, 2}, 1).ap(tri, {0, 1}, 0),
                           tt(-1).ap(tri, {0, 2}, 1).ap(hpr, {0, 1}, 0)})));
    // (120) v↼[x,y] = x⊳(v↼y) − (x⊳v)↼y
    cs.push_back(one("(120)",
                     desc("BIMOD(120)", {H, H, A}, {A},
                          {tt().ap("brH", {0, 1}, 0).ap(hpl, {1, 0}, 0)},
                          {tt().ap(hpl, {2, 1}, 1).ap(tri, {0, 1}, 0),
                           tt(-1).ap(tri, {0, 2}, 0).ap(hpl, {0, 1}, 0)})));
    return cs;
}

// --- Poisson bicomodule, conditions (10)-(18); input v -------------------

std::vector<ConditionEntry> bicomod_conditions() {
    std::vector<ConditionEntry> cs;
    // (10) (Δ_H⊗id)ρ(v) = (id⊗ρ)ρ(v)
    cs.push_back(one("(10)", desc("BICOMOD(10)", {A}, {H, H, A},
                                 {tt().ap(rho, {0}, 0).ap("copH", {0}, 0)},
                                 {tt().ap(rho, {0}, 0).ap(rho, {1}, 1)})));
    // (10') (id⊗Δ_H)γ(v) = (γ⊗id)γ(v)
    cs.push_back(one("(10')", desc("BICOMOD(10')", {A}, {A, H, H},
                                  {tt().ap(gam, {0}, 0).ap("copH", {1}, 1)},
                                  {tt().ap(gam, {0}, 0).ap(gam, {0}, 0)})));
    // (10'') (id⊗γ)ρ(v) = (ρ⊗id)γ(v)
    cs.push_back(one("(10'')", desc("BICOMOD(10'')", {A}, {H, A, H},
                                   {tt().ap(rho, {0}, 0).ap(gam, {1}, 1)},
                                   {tt().ap(gam, {0}, 0).ap(rho, {0}, 0)})));
    // (11) (δ_H⊗id)φ(v) = (id⊗φ)φ(v) − τ₁₂(id⊗φ)φ(v)
    cs.push_back(one(
        "(11)",
        desc("BICOMOD(11)", {A}, {H, H, A},
             {tt().ap(phi, {0}, 0).ap("cobrH", {0}, 0)},
             {tt().ap(phi, {0}, 0).ap(phi, {1}, 1),
              tt(-1).ap(phi, {0}, 0).ap(phi, {1}, 1).pm({1, 0, 2})})));
    // (16) (id⊗Δ_H)τφ(v) = (τφ⊗id)γ(v) + τ₁₂(id⊗τφ)ρ(v)
    cs.push_back(one(
        "(16)",
        desc("BICOMOD(16)", {A}, {A, H, H},
             {tt().ap(phi, {0}, 0).ap("copH", {0}, 0).pm({2, 0, 1})},
             {tt().ap(gam, {0}, 0).ap(phi, {0}, 0).pm({1, 0, 2}),
              tt().ap(rho, {0}, 0).ap(phi, {1}, 1).pm({2, 0, 1})})));
    // (17) v⟨₋₁⟩⊗ρ(v⟨₀⟩) = δ_H(v₍₋₁₎)⊗v₍₀₎ + τ₁₂(v₍₋₁₎⊗φ(v₍₀₎))
    cs.push_back(one(
        "(17)",
        desc("BICOMOD(17)", {A}, {H, H, A},
             {tt().ap(phi, {0}, 0).ap(rho, {1}, 1)},
             {tt().ap(rho, {0}, 0).ap("cobrH", {0}, 0),
              tt().ap(rho, {0}, 0).ap(phi, {1}, 1).pm({1, 0, 2})})));
    // (18) v⟨₋₁⟩⊗γ(v⟨₀⟩) = φ(v₍₀₎)⊗v₍₁₎ + τ₁₂(v₍₀₎⊗δ_H(v₍₁₎))
    cs.push_back(one(
        "(18)",
        desc("BICOMOD(18)", {A}, {H, A, H},
             {tt().ap(phi, {0}, 0).ap(gam, {1}, 1)},
             {tt().ap(gam, {0}, 0).ap(phi, {0}, 0),
              tt().ap(gam, {0}, 0).ap("cobrH", {1}, 1).pm({1, 0, 2})})));
    return cs;
}

// --- bimodule algebra (Def 2.6); inputs (x,a,b) ---------------------------

std::vector<ConditionEntry> modalg_conditions() {
    std::vector<ConditionEntry> cs;
    // x⇀(ab) = (x⇀a)b
    cs.push_back(one("alg-1", desc("MODALG alg-1", {H, A, A}, {A},
                                  {tt().ap("mulA", {1, 2}, 1).ap(hpr, {0, 1}, 0)},
                                  {tt().ap(hpr, {0, 1}, 0).ap("mulA", {0, 1}, 0)})));
    // (ab)↼x = a(b↼x)
    cs.push_back(one("alg-2", desc("MODALG alg-2", {H, A, A}, {A},
                                  {tt().ap("mulA", {1, 2}, 1).ap(hpl, {1, 0}, 0)},
                                  {tt().ap(hpl, {2, 0}, 1).ap("mulA", {0, 1}, 0)})));
    // (a↼x)b = a(x⇀b)
    cs.push_back(one("alg-3", desc("MODALG alg-3", {H, A, A}, {A},
                                  {tt().ap(hpl, {1, 0}, 0).ap("mulA", {0, 1}, 0)},
                                  {tt().ap(hpr, {0, 2}, 1).ap("mulA", {0, 1}, 0)})));
    // x⊳[a,b] = [a, x⊳b] + [x⊳a, b]
    cs.push_back(one("lie-mod",
                     desc("MODALG lie-mod", {H, A, A}, {A},
                          {tt().ap("brA", {1, 2}, 1).ap(tri, {0, 1}, 0)},
                          {tt().ap(tri, {0, 2}, 1).ap("brA", {0, 1}, 0),
                           tt().ap(tri, {0, 1}, 0).ap("brA", {0, 1}, 0)})));
    // (27) x⊳(ab) = (x⊳a)b + a(x⊳b)
    cs.push_back(one("(27)",
                     desc("MODALG(27)", {H, A, A}, {A},
                          {tt().ap("mulA", {1, 2}, 1).ap(tri, {0, 1}, 0)},
                          {tt().ap(tri, {0, 1}, 0).ap("mulA", {0, 1}, 0),
                           tt().ap(tri, {0, 2}, 1).ap("mulA", {0, 1}, 0)})));
    // (28) x⇀[a,b] = [a, x⇀b] + (x⊳a)b
    cs.push_back(one("(28)",
                     desc("MODALG(28)", {H, A, A}, {A},
                          {tt().ap("brA", {1, 2}, 1).ap(hpr, {0, 1}, 0)},
                          {tt().ap(hpr, {0, 2}, 1).ap("brA", {0, 1}, 0),
                           tt().ap(tri, {0, 1}, 0).ap("mulA", {0, 1}, 0)})));
    // (29) [a,b]↼x = [a, b↼x] + b(x⊳a)
    cs.push_back(one("(29)",
                     desc("MODALG(29)", {H, A, A}, {A},
                          {tt().ap("brA", {1, 2}, 1).ap(hpl, {1, 0}, 0)},
                          {tt().ap(hpl, {2, 0}, 1).ap("brA", {0, 1}, 0),
                           tt().ap(tri, {0, 1}, 0).ap("mulA", {1, 0}, 0)})));
    return cs;
}

// --- bicomodule coalgebra (Def 2.7); input a ------------------------------

std::vector<ConditionEntry> comodcoalg_conditions() {
    std::vector<ConditionEntry> cs;
    // (id_H⊗Δ_A)ρ(a) = (ρ⊗id)Δ_A(a)
    cs.push_back(one("coalg-1", desc("COMODCOALG coalg-1", {A}, {H, A, A},
                                    {tt().ap(rho, {0}, 0).ap("copA", {1}, 1)},
                                    {tt().ap("copA", {0}, 0).ap(rho, {0}, 0)})));
    // (Δ_A⊗id_H)γ(a) = (id⊗γ)Δ_A(a)
    cs.push_back(one("coalg-2", desc("COMODCOALG coalg-2", {A}, {A, A, H},
                                    {tt().ap(gam, {0}, 0).ap("copA", {0}, 0)},
                                    {tt().ap("copA", {0}, 0).ap(gam, {1}, 1)})));
    // (γ⊗id_A)Δ_A(a) = (id⊗ρ)Δ_A(a)
    cs.push_back(one("coalg-3", desc("COMODCOALG coalg-3", {A}, {A, H, A},
                                    {tt().ap("copA", {0}, 0).ap(gam, {0}, 0)},
                                    {tt().ap("copA", {0}, 0).ap(rho, {1}, 1)})));
    // (id_H⊗δ_A)φ(a) = (φ⊗id)δ_A(a) + τ₁₂(id⊗φ)δ_A(a)
    cs.push_back(one(
        "lie-comod",
        desc("COMODCOALG lie-comod", {A}, {H, A, A},
             {tt().ap(phi, {0}, 0).ap("cobrA", {1}, 1)},
             {tt().ap("cobrA", {0}, 0).ap(phi, {0}, 0),
              tt().ap("cobrA", {0}, 0).ap(phi, {1}, 1).pm({1, 0, 2})})));
    // (id_H⊗Δ_A)φ(a) = (φ⊗id)Δ_A(a) + τ₁₂(id⊗φ)Δ_A(a)
    cs.push_back(one(
        "(18)",
        desc("COMODCOALG(18)", {A}, {H, A, A},
             {tt().ap(phi, {0}, 0).ap("copA", {1}, 1)},
             {tt().ap("copA", {0}, 0).ap(phi, {0}, 0),
              tt().ap("copA", {0}, 0).ap(phi, {1}, 1).pm({1, 0, 2})})));
    // (id_H⊗δ_A)ρ(a) = τ₁₂(id⊗ρ)δ_A(a) + (φ⊗id)Δ_A(a)
    cs.push_back(one(
        "(19)",
        desc("COMODCOALG(19)", {A}, {H, A, A},
             {tt().ap(rho, {0}, 0).ap("cobrA", {1}, 1)},
             {tt().ap("cobrA", {0}, 0).ap(rho, {1}, 1).pm({1, 0, 2}),
              tt().ap("copA", {0}, 0).ap(phi, {0}, 0)})));
    // (id_A⊗γ)δ_A(a) = (δ_A⊗id)γ(a) − τ₁₂(id⊗τφ)Δ_A(a)
    cs.push_back(one(
        "(20)",
        desc("COMODCOALG(20)", {A}, {A, A, H},
             {tt().ap("cobrA", {0}, 0).ap(gam, {1}, 1)},
             {tt().ap(gam, {0}, 0).ap("cobrA", {0}, 0),
              tt(-1).ap("copA", {0}, 0).ap(phi, {1}, 1).pm({2, 0, 1})})));
    return cs;
}

// --- Hopf-bimodule conditions HM1-HM8; inputs (x,v) with v stored on A ----

IdentityDescriptor hm1() {
    return desc("HM1", {H, A}, {H, A},
                {tt().ap(hpr, {0, 1}, 0).ap(phi, {0}, 0)},
                {tt().ap(phi, {1}, 1).ap("mulH", {0, 1}, 0),
                 tt().ap(rho, {1}, 1).ap(tri, {0, 2}, 1),
                 tt(-1).ap("copH", {0}, 0).ap(tri, {0, 2}, 1)});
}

IdentityDescriptor hm2() {
    return desc("HM2", {H, A}, {A, H},
                {tt().ap(hpr, {0, 1}, 0).ap(phi, {0}, 0).pm({1, 0})},
                {tt().ap(phi, {1}, 1).ap(hpr, {0, 2}, 0),
                 tt(-1).ap(gam, {1}, 1).ap("brH", {0, 2}, 1),
                 tt(-1).ap("cobrH", {0}, 0).ap(hpr, {0, 2}, 0)});
}

// As printed: φ(v↼x) = v⟨₋₁⟩x⊗v⟨₀⟩ − x₁⊗(x₂⊳v) + v₍₁₎⊗(x⊳v₍₀₎), where the
// last term reads the legs of γ(v)=v₍₀₎⊗v₍₁₎.
IdentityDescriptor hm3() {
    return desc("HM3", {H, A}, {H, A},
                {tt().ap(hpl, {1, 0}, 0).ap(phi, {0}, 0)},
                {tt().ap(phi, {1}, 1).ap("mulH", {1, 0}, 0),
                 tt(-1).ap("copH", {0}, 0).ap(tri, {1, 2}, 1),
                 tt().ap(gam, {1}, 1).ap(tri, {0, 1}, 0).pm({1, 0})});
}

// Variant reading with ρ in the last term: v₍₋₁₎⊗(x⊳v₍₀₎).
IdentityDescriptor hm3_variant() {
    return desc("HM3-variant", {H, A}, {H, A},
                {tt().ap(hpl, {1, 0}, 0).ap(phi, {0}, 0)},
                {tt().ap(phi, {1}, 1).ap("mulH", {1, 0}, 0),
                 tt(-1).ap("copH", {0}, 0).ap(tri, {1, 2}, 1),
                 tt().ap(rho, {1}, 1).ap(tri, {0, 2}, 1)});
}

IdentityDescriptor hm4() {
    return desc("HM4", {H, A}, {A, H},
                {tt().ap(hpl, {1, 0}, 0).ap(phi, {0}, 0).pm({1, 0})},
                {tt().ap("cobrH", {0}, 0).ap(hpl, {2, 0}, 0),
                 tt(-1).ap(phi, {1}, 1).ap(hpl, {2, 0}, 0),
                 tt().ap(rho, {1}, 1).ap("brH", {0, 1}, 0).pm({1, 0})});
}

IdentityDescriptor hm5() {
    return desc("HM5", {H, A}, {H, A},
                {tt().ap(tri, {0, 1}, 0).ap(rho, {0}, 0)},
                {tt().ap(rho, {1}, 1).ap("brH", {0, 1}, 0),
                 tt().ap(rho, {1}, 1).ap(tri, {0, 2}, 1),
                 tt(-1).ap("cobrH", {0}, 0).ap(hpl, {2, 1}, 1)});
}

IdentityDescriptor hm6() {
    return desc("HM6", {H, A}, {H, A},
                {tt().ap(tri, {0, 1}, 0).ap(rho, {0}, 0)},
                {tt().ap("copH", {0}, 0).ap(tri, {1, 2}, 1),
                 tt().ap(phi, {1}, 1).ap(hpr, {0, 2}, 1),
                 tt(-1).ap(phi, {1}, 1).ap("mulH", {1, 0}, 0)});
}

IdentityDescriptor hm7() {
    return desc("HM7", {H, A}, {A, H},
                {tt().ap(tri, {0, 1}, 0).ap(gam, {0}, 0)},
                {tt().ap(gam, {1}, 1).ap(tri, {0, 1}, 0),
                 tt().ap(gam, {1}, 1).ap("brH", {0, 2}, 1),
                 tt().ap("cobrH", {0}, 0).ap(hpr, {0, 2}, 0)});
}

IdentityDescriptor hm8() {
    return desc("HM8", {H, A}, {A, H},
                {tt().ap(tri, {0, 1}, 0).ap(gam, {0}, 0)},
                {tt().ap("copH", {0}, 0).ap(tri, {0, 2}, 0),
                 tt(-1).ap(phi, {1}, 1).ap("mulH", {0, 1}, 0).pm({1, 0}),
                 tt().ap(phi, {1}, 1).ap(hpl, {2, 0}, 0)});
}

// --- braided conditions BB1-BB2; inputs (a,b) -----------------------------

IdentityDescriptor bb1() {
    return desc(
        "BB1", {A, A}, {A, A},
        {tt().ap("mulA", {0, 1}, 0).ap("cobrA", {0}, 0)},
        {tt().ap("cobrA", {0}, 0).ap("mulA", {0, 2}, 0),
         tt().ap("cobrA", {1}, 1).ap("mulA", {0, 1}, 0),
         tt().ap("copA", {1}, 1).ap("brA", {0, 2}, 1),
         tt().ap("copA", {0}, 0).ap("brA", {2, 0}, 1),
         tt().ap(phi, {0}, 0).ap(hpr, {0, 2}, 0),
         tt().ap(phi, {1}, 1).ap(hpl, {0, 1}, 0),
         tt(-1).ap(gam, {1}, 1).ap(tri, {2, 0}, 1),
         tt(-1).ap(rho, {0}, 0).ap(tri, {0, 2}, 1)});
}

IdentityDescriptor bb2() {
    return desc(
        "BB2", {A, A}, {A, A},
        {tt().ap("brA", {0, 1}, 0).ap("copA", {0}, 0)},
        {tt().ap("copA", {1}, 1).ap("brA", {0, 1}, 0),
         tt().ap("copA", {1}, 1).ap("brA", {0, 2}, 1),
         tt(-1).ap("cobrA", {0}, 0).ap("mulA", {2, 1}, 1),
         tt().ap("cobrA", {0}, 0).ap("mulA", {0, 2}, 0),
         tt().ap(phi, {0}, 0).ap(hpl, {2, 0}, 1),
         tt().ap(phi, {0}, 0).ap(hpr, {0, 2}, 0),
         tt(-1).ap(rho, {1}, 1).ap(tri, {1, 0}, 0),
         tt(-1).ap(gam, {1}, 1).ap(tri, {2, 0}, 1)});
}

// --- the extra proof conditions (2)-(5), (11)-(14) ------------------------

IdentityDescriptor bp2() {
    // δ_A(x⇀b) = (x⇀b₍₁₎)⊗b₍₂₎ + b₁⊗(x⊳b₂)
    return desc("biprod(2)", {H, A}, {A, A},
                {tt().ap(hpr, {0, 1}, 0).ap("cobrA", {0}, 0)},
                {tt().ap("cobrA", {1}, 1).ap(hpr, {0, 1}, 0),
                 tt().ap("copA", {1}, 1).ap(tri, {0, 2}, 1)});
}

IdentityDescriptor bp3() {
    // δ_A(a↼y) = (a₍₁₎↼y)⊗a₍₂₎ + a₂⊗(y⊳a₁); inputs (y,a)
    return desc("biprod(3)", {H, A}, {A, A},
                {tt().ap(hpl, {1, 0}, 0).ap("cobrA", {0}, 0)},
                {tt().ap("cobrA", {1}, 1).ap(hpl, {1, 0}, 0),
                 tt().ap("copA", {1}, 1).ap(tri, {0, 1}, 1)});
}

IdentityDescriptor bp4() {
    // φ(ab) = b₍₋₁₎⊗[a,b₍₀₎] + a₍₁₎⊗[b,a₍₀₎]
    return desc("biprod(4)", {A, A}, {H, A},
                {tt().ap("mulA", {0, 1}, 0).ap(phi, {0}, 0)},
                {tt().ap(rho, {1}, 1).ap("brA", {0, 2}, 1),
                 tt().ap(gam, {0}, 0).ap("brA", {2, 0}, 0).pm({1, 0})});
}

IdentityDescriptor bp5() {
    // τφ(ab) = a⟨₀⟩b⊗a⟨₋₁⟩ + a·b⟨₀⟩⊗b⟨₋₁⟩
    return desc("biprod(5)", {A, A}, {A, H},
                {tt().ap("mulA", {0, 1}, 0).ap(phi, {0}, 0).pm({1, 0})},
                {tt().ap(phi, {0}, 0).ap("mulA", {1, 2}, 1).pm({1, 0}),
                 tt().ap(phi, {1}, 1).ap("mulA", {0, 2}, 0)});
}

IdentityDescriptor bp11() {
    // Δ_A(x⊳b) = (x⊳b₁)⊗b₂ + b₁⊗(x⊳b₂)
    return desc("biprod(11)", {H, A}, {A, A},
                {tt().ap(tri, {0, 1}, 0).ap("copA", {0}, 0)},
                {tt().ap("copA", {1}, 1).ap(tri, {0, 1}, 0),
                 tt().ap("copA", {1}, 1).ap(tri, {0, 2}, 1)});
}

IdentityDescriptor bp12() {
    // Δ_A(y⊳a) = a₍₁₎⊗(y⇀a₍₂₎) − (a₍₁₎↼y)⊗a₍₂₎; inputs (y,a)
    return desc("biprod(12)", {H, A}, {A, A},
                {tt().ap(tri, {0, 1}, 0).ap("copA", {0}, 0)},
                {tt().ap("cobrA", {1}, 1).ap(hpr, {0, 2}, 1),
                 tt(-1).ap("cobrA", {1}, 1).ap(hpl, {1, 0}, 0)});
}

IdentityDescriptor bp13() {
    // ρ([a,b]) = b₍₋₁₎⊗[a,b₍₀₎] − a⟨₋₁⟩⊗b·a⟨₀⟩
    return desc("biprod(13)", {A, A}, {H, A},
                {tt().ap("brA", {0, 1}, 0).ap(rho, {0}, 0)},
                {tt().ap(rho, {1}, 1).ap("brA", {0, 2}, 1),
                 tt(-1).ap(phi, {0}, 0).ap("mulA", {2, 1}, 1)});
}

IdentityDescriptor bp14() {
    // γ([a,b]) = [a,b₍₀₎]⊗b₍₁₎ − a⟨₀⟩b⊗a⟨₋₁⟩
    return desc("biprod(14)", {A, A}, {A, H},
                {tt().ap("brA", {0, 1}, 0).ap(gam, {0}, 0)},
                {tt().ap(gam, {1}, 1).ap("brA", {0, 1}, 0),
                 tt(-1).ap(phi, {0}, 0).ap("mulA", {1, 2}, 1).pm({1, 0})});
}

}  // namespace

const ConditionSet& hm3_variant_set() {
    static const ConditionSet s{
        "HM3_VARIANT",
        "alternate leg reading of HM3 (ρ instead of γ in the last term)",
        {ConditionEntry{"HM3", {hm3_variant()}}}};
    return s;
}

void register_bimodule_sets(std::map<std::string, ConditionSet>& reg) {
    reg.emplace("BIMOD", ConditionSet{"BIMOD", "Poisson bimodule axioms",
                                      bimod_conditions()});
    reg.emplace("BICOMOD", ConditionSet{"BICOMOD", "Poisson bicomodule axioms",
                                        bicomod_conditions()});
    reg.emplace("MODALG", ConditionSet{"MODALG", "bimodule algebra axioms",
                                       modalg_conditions()});
    reg.emplace("COMODCOALG",
                ConditionSet{"COMODCOALG", "bicomodule coalgebra axioms",
                             comodcoalg_conditions()});
    reg.emplace(
        "HOPF_H",
        ConditionSet{"HOPF_H", "Poisson-Hopf bimodule conditions HM1-HM8",
                     {ConditionEntry{"HM1", {hm1()}},
                      ConditionEntry{"HM2", {hm2()}},
                      ConditionEntry{"HM3", {hm3()}},
                      ConditionEntry{"HM4", {hm4()}},
                      ConditionEntry{"HM5", {hm5()}},
                      ConditionEntry{"HM6", {hm6()}},
                      ConditionEntry{"HM7", {hm7()}},
                      ConditionEntry{"HM8", {hm8()}}}});
    reg.emplace("BRAIDED_A",
                ConditionSet{"BRAIDED_A", "braided bialgebra conditions",
                             {ConditionEntry{"BB1", {bb1()}},
                              ConditionEntry{"BB2", {bb2()}}}});
    reg.emplace(
        "BIPROD18",
        ConditionSet{
            "BIPROD18", "the eighteen proof conditions of the biproduct theorem",
            {ConditionEntry{"(1)", {bb1()}},
             ConditionEntry{"(2)", {bp2()}},
             ConditionEntry{"(3)", {bp3()}},
             ConditionEntry{"(4)", {bp4()}},
             ConditionEntry{"(5)", {bp5()}},
             ConditionEntry{"(6)", {hm1()}},
             ConditionEntry{"(7)", {hm2()}},
             ConditionEntry{"(8)", {hm3()}},
             ConditionEntry{"(9)", {hm4()}},
             ConditionEntry{"(10)", {bb2()}},
             ConditionEntry{"(11)", {bp11()}},
             ConditionEntry{"(12)", {bp12()}},
             ConditionEntry{"(13)", {bp13()}},
             ConditionEntry{"(14)", {bp14()}},
             ConditionEntry{"(15)", {hm5()}},
             ConditionEntry{"(16)", {hm6()}},
             ConditionEntry{"(17)", {hm7()}},
             ConditionEntry{"(18)", {hm8()}}}});
}

}  // namespace pforge
