#include "pforge/registry.hpp"

//
// Matched-pair layer: compatibilities between a pair (A,H) carrying mutual
// actions and coactions.
//
// Actions: hpr_HA (⇀: H⊗A→A), hpl_AH (↼: A⊗H→A), rar_AH (→: A⊗H→H),
// lar_HA (←: H⊗A→H), tri_HA (⊳: H⊗A→A), tl_HA (⊲: H⊗A→H).
// Coactions: rho_A (ρ: A→H⊗A, a₍₋₁₎⊗a₍₀₎), gamma_A (γ: A→A⊗H, a₍₀₎⊗a₍₁₎),
// alpha_H (α: H→A⊗H, x₍₋₁₎⊗x₍₀₎), beta_H (β: H→H⊗A, x₍₀₎⊗x₍₁₎),
// phi_A (φ: A→H⊗A, a⟨₋₁⟩⊗a⟨₀⟩), psi_H (ψ: H→H⊗A, x⟨₀⟩⊗x⟨₁⟩).
//

namespace pforge {

namespace {

const std::string A = "A", H = "H";
const std::string hpr = "hpr_HA", hpl = "hpl_AH", rar = "rar_AH",
                  lar = "lar_HA", tri = "tri_HA", tl = "tl_HA";
const std::string rho = "rho_A", gam = "gamma_A", alp = "alpha_H",
                  bet = "beta_H", phi = "phi_A", psi = "psi_H";

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

// --- matched pair of algebras, AM1-AM6 ------------------------------------

std::vector<ConditionEntry> mp_alg_conditions() {
    std::vector<ConditionEntry> cs;
    // AM1: x⇀[a,b] = [a,x⇀b] − (x←b)⊳a + (x⊳a)b + (x⊲a)⇀b; inputs (x,a,b)
    cs.push_back(one(
        "AM1", desc("AM1", {H, A, A}, {A},
                    {tt().ap("brA", {1, 2}, 1).ap(hpr, {0, 1}, 0)},
                    {tt().ap(hpr, {0, 2}, 1).ap("brA", {0, 1}, 0),
                     tt(-1).ap(lar, {0, 2}, 0).ap(tri, {0, 1}, 0),
                     tt().ap(tri, {0, 1}, 0).ap("mulA", {0, 1}, 0),
                     tt().ap(tl, {0, 1}, 0).ap(hpr, {0, 1}, 0)})));
    // AM2: [a,b]↼x = [a,b↼x] − (b→x)⊳a + b(x⊳a) + b↼(x⊲a)
    cs.push_back(one(
        "AM2", desc("AM2", {H, A, A}, {A},
                    {tt().ap("brA", {1, 2}, 1).ap(hpl, {1, 0}, 0)},
                    {tt().ap(hpl, {2, 0}, 1).ap("brA", {0, 1}, 0),
                     tt(-1).ap(rar, {2, 0}, 0).ap(tri, {0, 1}, 0),
                     tt().ap(tri, {0, 1}, 0).ap("mulA", {1, 0}, 0),
                     tt().ap(tl, {0, 1}, 0).ap(hpl, {1, 0}, 0)})));
    // AM3: x⊳(ab) = (x⊳a)b + (x⊲a)⇀b + a(x⊳b) + a↼(x⊲b)
    cs.push_back(one(
        "AM3", desc("AM3", {H, A, A}, {A},
                    {tt().ap("mulA", {1, 2}, 1).ap(tri, {0, 1}, 0)},
                    {tt().ap(tri, {0, 1}, 0).ap("mulA", {0, 1}, 0),
                     tt().ap(tl, {0, 1}, 0).ap(hpr, {0, 1}, 0),
                     tt().ap(tri, {0, 2}, 1).ap("mulA", {0, 1}, 0),
                     tt().ap(tl, {0, 2}, 1).ap(hpl, {0, 1}, 0)})));
    // AM4: [x,y]←a = [x,y←a] + x⊲(y⇀a) − y(x⊲a) − y←(x⊳a); inputs (x,y,a)
    cs.push_back(one(
        "AM4", desc("AM4", {H, H, A}, {H},
                    {tt().ap("brH", {0, 1}, 0).ap(lar, {0, 1}, 0)},
                    {tt().ap(lar, {1, 2}, 1).ap("brH", {0, 1}, 0),
                     tt().ap(hpr, {1, 2}, 1).ap(tl, {0, 1}, 0),
                     tt(-1).ap(tl, {0, 2}, 0).ap("mulH", {1, 0}, 0),
                     tt(-1).ap(tri, {0, 2}, 0).ap(lar, {1, 0}, 0)})));
    // AM5: a→[x,y] = [x,a→y] + x⊲(a↼y) − (x⊲a)y − (x⊳a)→y
    cs.push_back(one(
        "AM5", desc("AM5", {H, H, A}, {H},
                    {tt().ap("brH", {0, 1}, 0).ap(rar, {1, 0}, 0)},
                    {tt().ap(rar, {2, 1}, 1).ap("brH", {0, 1}, 0),
                     tt().ap(hpl, {2, 1}, 1).ap(tl, {0, 1}, 0),
                     tt(-1).ap(tl, {0, 2}, 0).ap("mulH", {0, 1}, 0),
                     tt(-1).ap(tri, {0, 2}, 0).ap(rar, {0, 1}, 0)})));
    // AM6: (xy)⊲a = (x⊲a)y + (x⊳a)→y + x(y⊲a) + x←(y⊳a)
    cs.push_back(one(
        "AM6", desc("AM6", {H, H, A}, {H},
                    {tt().ap("mulH", {0, 1}, 0).ap(tl, {0, 1}, 0)},
                    {tt().ap(tl, {0, 2}, 0).ap("mulH", {0, 1}, 0),
                     tt().ap(tri, {0, 2}, 0).ap(rar, {0, 1}, 0),
                     tt().ap(tl, {1, 2}, 1).ap("mulH", {0, 1}, 0),
                     tt().ap(tri, {1, 2}, 1).ap(lar, {0, 1}, 0)})));
    return cs;
}

// --- matched pair of coalgebras, CM1-CM6 ----------------------------------

std::vector<ConditionEntry> mp_coalg_conditions() {
    std::vector<ConditionEntry> cs;
    // CM1: a₍₁₎⊗ρ(a₍₂₎) − a⟨₀⟩⊗β(a⟨₋₁⟩)
    //      = −τφ(a₁)⊗a₂ − τψ(a₍₋₁₎)⊗a₍₀₎ + τ₁₂(a₍₋₁₎⊗δ_A(a₍₀₎))
    cs.push_back(one(
        "CM1",
        desc("CM1", {A}, {A, H, A},
             {tt().ap("cobrA", {0}, 0).ap(rho, {1}, 1),
              tt(-1).ap(phi, {0}, 0).ap(bet, {0}, 0).pm({2, 0, 1})},
             {tt(-1).ap("copA", {0}, 0).ap(phi, {0}, 0).pm({1, 0, 2}),
              tt(-1).ap(rho, {0}, 0).ap(psi, {0}, 0).pm({1, 0, 2}),
              tt().ap(rho, {0}, 0).ap("cobrA", {1}, 1).pm({1, 0, 2})})));
    // CM2: a⟨₋₁⟩⊗Δ_A(a⟨₀⟩) = φ(a₁)⊗a₂ + ψ(a₍₋₁₎)⊗a₍₀₎
    //      + τ₁₂(a₁⊗φ(a₂)) + τ₁₂(a₍₀₎⊗ψ(a₍₁₎))
    cs.push_back(one(
        "CM2",
        desc("CM2", {A}, {H, A, A},
             {tt().ap(phi, {0}, 0).ap("copA", {1}, 1)},
             {tt().ap("copA", {0}, 0).ap(phi, {0}, 0),
              tt().ap(rho, {0}, 0).ap(psi, {0}, 0),
              tt().ap("copA", {0}, 0).ap(phi, {1}, 1).pm({1, 0, 2}),
              tt().ap(gam, {0}, 0).ap(psi, {1}, 1).pm({1, 0, 2})})));
    // CM3: a₍₁₎⊗γ(a₍₂₎) − a⟨₀⟩⊗α(a⟨₋₁⟩)
    //      = δ_A(a₍₀₎)⊗a₍₁₎ − τ₁₂(a₁⊗τφ(a₂)) − τ₁₂(a₍₀₎⊗τψ(a₍₁₎))
    cs.push_back(one(
        "CM3",
        desc("CM3", {A}, {A, A, H},
             {tt().ap("cobrA", {0}, 0).ap(gam, {1}, 1),
              tt(-1).ap(phi, {0}, 0).ap(alp, {0}, 0).pm({2, 0, 1})},
             {tt().ap(gam, {0}, 0).ap("cobrA", {0}, 0),
              tt(-1).ap("copA", {0}, 0).ap(phi, {1}, 1).pm({2, 0, 1}),
              tt(-1).ap(gam, {0}, 0).ap(psi, {1}, 1).pm({2, 0, 1})})));
    // CM4: x₍₁₎⊗β(x₍₂₎) + x⟨₀⟩⊗ρ(x⟨₁⟩)
    //      = δ_H(x₍₀₎)⊗x₍₁₎ + τ₁₂(x₁⊗ψ(x₂)) + τ₁₂(x₍₀₎⊗φ(x₍₁₎))
    cs.push_back(one(
        "CM4",
        desc("CM4", {H}, {H, H, A},
             {tt().ap("cobrH", {0}, 0).ap(bet, {1}, 1),
              tt().ap(psi, {0}, 0).ap(rho, {1}, 1)},
             {tt().ap(bet, {0}, 0).ap("cobrH", {0}, 0),
              tt().ap("copH", {0}, 0).ap(psi, {1}, 1).pm({1, 0, 2}),
              tt().ap(bet, {0}, 0).ap(phi, {1}, 1).pm({1, 0, 2})})));
    // CM5: x⟨₁⟩⊗Δ_H(x⟨₀⟩) = τψ(x₁)⊗x₂ + τφ(x₍₋₁₎)⊗x₍₀₎
    //      + τ₁₂(x₁⊗τψ(x₂)) + τ₁₂(x₍₀₎⊗τφ(x₍₁₎))
    cs.push_back(one(
        "CM5",
        desc("CM5", {H}, {A, H, H},
             {tt().ap(psi, {0}, 0).ap("copH", {0}, 0).pm({2, 0, 1})},
             {tt().ap("copH", {0}, 0).ap(psi, {0}, 0).pm({1, 0, 2}),
              tt().ap(alp, {0}, 0).ap(phi, {0}, 0).pm({1, 0, 2}),
              tt().ap("copH", {0}, 0).ap(psi, {1}, 1).pm({2, 0, 1}),
              tt().ap(bet, {0}, 0).ap(phi, {1}, 1).pm({2, 0, 1})})));
    // CM6: x₍₁₎⊗α(x₍₂₎) + x⟨₀⟩⊗γ(x⟨₁⟩)
    //      = ψ(x₁)⊗x₂ + φ(x₍₋₁₎)⊗x₍₀₎ + τ₁₂(x₍₋₁₎⊗δ_H(x₍₀₎))
    cs.push_back(one(
        "CM6",
        desc("CM6", {H}, {H, A, H},
             {tt().ap("cobrH", {0}, 0).ap(alp, {1}, 1),
              tt().ap(psi, {0}, 0).ap(gam, {1}, 1)},
             {tt().ap("copH", {0}, 0).ap(psi, {0}, 0),
              tt().ap(alp, {0}, 0).ap(phi, {0}, 0),
              tt().ap(alp, {0}, 0).ap("cobrH", {1}, 1).pm({1, 0, 2})})));
    return cs;
}

// --- Hopf-bimodule conditions with the roles of A and H exchanged ---------
// (H is the module/comodule over A); inputs (a,x)

std::vector<ConditionEntry> hopf_a_conditions() {
    std::vector<ConditionEntry> cs;
    // HM1': ψ(x←a) = (x⟨₀⟩←a)⊗x⟨₁⟩ + (x←a₍₁₎)⊗a₍₂₎ + x₍₀₎⊗[a,x₍₋₁₎]
    cs.push_back(one(
        "HM1'",
        desc("HM1'", {A, H}, {H, A},
             {tt().ap(lar, {1, 0}, 0).ap(psi, {0}, 0)},
             {tt().ap(psi, {1}, 1).ap(lar, {1, 0}, 0),
              tt().ap("cobrA", {0}, 0).ap(lar, {2, 0}, 0),
              tt().ap(alp, {1}, 1).ap("brA", {0, 1}, 0).pm({1, 0})})));
    // HM2': τψ(x←a) = x⟨₁⟩a⊗x⟨₀⟩ + x₍₁₎⊗(x₍₀₎⊲a) − a₁⊗(x⊲a₂)
    cs.push_back(one(
        "HM2'",
        desc("HM2'", {A, H}, {A, H},
             {tt().ap(lar, {1, 0}, 0).ap(psi, {0}, 0).pm({1, 0})},
             {tt().ap(psi, {1}, 1).ap("mulA", {2, 0}, 0),
              tt().ap(bet, {1}, 1).ap(tl, {1, 0}, 1),
              tt(-1).ap("copA", {0}, 0).ap(tl, {2, 1}, 1)})));
    // HM3': ψ(a→x) = (a→x⟨₀⟩)⊗x⟨₁⟩ + x₍₀₎⊗[a,x₍₁₎] − (a₍₁₎→x)⊗a₍₂₎
    cs.push_back(one(
        "HM3'",
        desc("HM3'", {A, H}, {H, A},
             {tt().ap(rar, {0, 1}, 0).ap(psi, {0}, 0)},
             {tt().ap(psi, {1}, 1).ap(rar, {0, 1}, 0),
              tt().ap(bet, {1}, 1).ap("brA", {0, 2}, 1),
              tt(-1).ap("cobrA", {0}, 0).ap(rar, {0, 2}, 0)})));
    // HM4': τψ(a→x) = a·x⟨₁⟩⊗x⟨₀⟩ + x₍₋₁₎⊗(x₍₀₎⊲a) − a₂⊗(x⊲a₁)
    cs.push_back(one(
        "HM4'",
        desc("HM4'", {A, H}, {A, H},
             {tt().ap(rar, {0, 1}, 0).ap(psi, {0}, 0).pm({1, 0})},
             {tt().ap(psi, {1}, 1).ap("mulA", {0, 2}, 0),
              tt().ap(alp, {1}, 1).ap(tl, {2, 0}, 1),
              tt(-1).ap("copA", {0}, 0).ap(tl, {2, 0}, 1)})));
    // HM5': β(x⊲a) = (x⊲a₁)⊗a₂ − x⟨₀⟩⊗a·x⟨₁⟩ + (x⟨₀⟩←a)⊗x⟨₁⟩
    cs.push_back(one(
        "HM5'",
        desc("HM5'", {A, H}, {H, A},
             {tt().ap(tl, {1, 0}, 0).ap(bet, {0}, 0)},
             {tt().ap("copA", {0}, 0).ap(tl, {2, 0}, 0),
              tt(-1).ap(psi, {1}, 1).ap("mulA", {0, 2}, 1),
              tt().ap(psi, {1}, 1).ap(lar, {1, 0}, 0)})));
    // HM6': β(x⊲a) = (x₍₀₎⊲a)⊗x₍₁₎ − x₍₀₎⊗[a,x₍₁₎] − (a₍₁₎→x)⊗a₍₂₎
    cs.push_back(one(
        "HM6'",
        desc("HM6'", {A, H}, {H, A},
             {tt().ap(tl, {1, 0}, 0).ap(bet, {0}, 0)},
             {tt().ap(bet, {1}, 1).ap(tl, {1, 0}, 0),
              tt(-1).ap(bet, {1}, 1).ap("brA", {0, 2}, 1),
              tt(-1).ap("cobrA", {0}, 0).ap(rar, {0, 2}, 0)})));
    // HM7': α(x⊲a) = a₁⊗(x⊲a₂) + x⟨₁⟩⊗(a→x⟨₀⟩) − x⟨₁⟩a⊗x⟨₀⟩
    cs.push_back(one(
        "HM7'",
        desc("HM7'", {A, H}, {A, H},
             {tt().ap(tl, {1, 0}, 0).ap(alp, {0}, 0)},
             {tt().ap("copA", {0}, 0).ap(tl, {2, 1}, 1),
              tt().ap(psi, {1}, 1).ap(rar, {0, 1}, 0).pm({1, 0}),
              tt(-1).ap(psi, {1}, 1).ap("mulA", {2, 0}, 0)})));
    // HM8': α(x⊲a) = x₍₋₁₎⊗(x₍₀₎⊲a) − [a,x₍₋₁₎]⊗x₍₀₎ + a₍₁₎⊗(x←a₍₂₎)
    cs.push_back(one(
        "HM8'",
        desc("HM8'", {A, H}, {A, H},
             {tt().ap(tl, {1, 0}, 0).ap(alp, {0}, 0)},
             {tt().ap(alp, {1}, 1).ap(tl, {2, 0}, 1),
              tt(-1).ap(alp, {1}, 1).ap("brA", {0, 1}, 0),
              tt().ap("cobrA", {0}, 0).ap(lar, {2, 1}, 1)})));
    return cs;
}

// --- braided conditions for H over A; inputs (x,y) ------------------------

std::vector<ConditionEntry> braided_h_conditions() {
    std::vector<ConditionEntry> cs;
    // BB1': δ_H(xy) = x₍₁₎y⊗x₍₂₎ − (x⟨₁⟩→y)⊗x⟨₀⟩ + x·y₍₁₎⊗y₍₂₎
    //  − (x←y⟨₁⟩)⊗y⟨₀⟩ + y₁⊗[x,y₂] + y₍₀₎⊗(x⊲y₍₁₎) + x₂⊗[y,x₁] + x₍₀₎⊗(y⊲x₍₋₁₎)
    cs.push_back(one(
        "BB1'",
        desc("BB1'", {H, H}, {H, H},
             {tt().ap("mulH", {0, 1}, 0).ap("cobrH", {0}, 0)},
             {tt().ap("cobrH", {0}, 0).ap("mulH", {0, 2}, 0),
              tt(-1).ap(psi, {0}, 0).ap(rar, {1, 2}, 0),
              tt().ap("cobrH", {1}, 1).ap("mulH", {0, 1}, 0),
              tt(-1).ap(psi, {1}, 1).ap(lar, {0, 2}, 0),
              tt().ap("copH", {1}, 1).ap("brH", {0, 2}, 1),
              tt().ap(bet, {1}, 1).ap(tl, {0, 2}, 1),
              tt().ap("copH", {0}, 0).ap("brH", {2, 0}, 1),
              tt().ap(alp, {0}, 0).ap(tl, {2, 0}, 1)})));
    // BB2': Δ_H([x,y]) = [x,y₁]⊗y₂ + (x⊲y₍₋₁₎)⊗y₍₀₎ + y₁⊗[x,y₂]
    //  + y₍₀₎⊗(x⊲y₍₁₎) + x₍₁₎y⊗x₍₂₎ − (x⟨₁⟩→y)⊗x⟨₀⟩ − x₍₁₎⊗y·x₍₂₎ − x⟨₀⟩⊗(y←x⟨₁⟩)
    cs.push_back(one(
        "BB2'",
        desc("BB2'", {H, H}, {H, H},
             {tt().ap("brH", {0, 1}, 0).ap("copH", {0}, 0)},
             {tt().ap("copH", {1}, 1).ap("brH", {0, 1}, 0),
              tt().ap(alp, {1}, 1).ap(tl, {0, 1}, 0),
              tt().ap("copH", {1}, 1).ap("brH", {0, 2}, 1),
              tt().ap(bet, {1}, 1).ap(tl, {0, 2}, 1),
              tt().ap("cobrH", {0}, 0).ap("mulH", {0, 2}, 0),
              tt(-1).ap(psi, {0}, 0).ap(rar, {1, 2}, 0),
              tt(-1).ap("cobrH", {0}, 0).ap("mulH", {2, 1}, 1),
              tt(-1).ap(psi, {0}, 0).ap(lar, {2, 1}, 1)})));
    return cs;
}

// --- double matched pair, DM1-DM24 ----------------------------------------

std::vector<ConditionEntry> dmp_conditions() {
    std::vector<ConditionEntry> cs;
    // DM1: φ(ab)=(a⟨₋₁⟩←b)⊗a⟨₀⟩+(a→b⟨₋₁⟩)⊗b⟨₀⟩+b₍₋₁₎⊗[a,b₍₀₎]+a₍₁₎⊗[b,a₍₀₎]
    cs.push_back(one(
        "DM1",
        desc("DM1", {A, A}, {H, A},
             {tt().ap("mulA", {0, 1}, 0).ap(phi, {0}, 0)},
             {tt().ap(phi, {0}, 0).ap(lar, {0, 2}, 0),
              tt().ap(phi, {1}, 1).ap(rar, {0, 1}, 0),
              tt().ap(rho, {1}, 1).ap("brA", {0, 2}, 1),
              tt().ap(gam, {0}, 0).ap("brA", {2, 0}, 0).pm({1, 0})})));
    // DM2: τφ(ab)=a⟨₀⟩b⊗a⟨₋₁⟩+a·b⟨₀⟩⊗b⟨₋₁⟩+b₍₀₎⊗(b₍₁₎⊲a)+a₍₀₎⊗(a₍₋₁₎⊲b)
    cs.push_back(one(
        "DM2",
        desc("DM2", {A, A}, {A, H},
             {tt().ap("mulA", {0, 1}, 0).ap(phi, {0}, 0).pm({1, 0})},
             {tt().ap(phi, {0}, 0).ap("mulA", {1, 2}, 1).pm({1, 0}),
              tt().ap(phi, {1}, 1).ap("mulA", {0, 2}, 0),
              tt().ap(gam, {1}, 1).ap(tl, {2, 0}, 1),
              tt().ap(rho, {0}, 0).ap(tl, {0, 2}, 1)})));
    // DM3: ψ(xy)=x⟨₀⟩y⊗x⟨₁⟩+x·y⟨₀⟩⊗y⟨₁⟩+y₍₀₎⊗(x⊳y₍₁₎)+x₍₀₎⊗(y⊳x₍₋₁₎)
    cs.push_back(one(
        "DM3",
        desc("DM3", {H, H}, {H, A},
             {tt().ap("mulH", {0, 1}, 0).ap(psi, {0}, 0)},
             {tt().ap(psi, {0}, 0).ap("mulH", {0, 2}, 0),
              tt().ap(psi, {1}, 1).ap("mulH", {0, 1}, 0),
              tt().ap(bet, {1}, 1).ap(tri, {0, 2}, 1),
              tt().ap(alp, {0}, 0).ap(tri, {2, 0}, 1)})));
    // DM4: τψ(xy)=(x⟨₁⟩↼y)⊗x⟨₀⟩+(x⇀y⟨₁⟩)⊗y⟨₀⟩−y₍₋₁₎⊗[x,y₍₀₎]−x₍₁₎⊗[y,x₍₀₎]
    cs.push_back(one(
        "DM4",
        desc("DM4", {H, H}, {A, H},
             {tt().ap("mulH", {0, 1}, 0).ap(psi, {0}, 0).pm({1, 0})},
             {tt().ap(psi, {0}, 0).ap(hpl, {1, 2}, 0),
              tt().ap(psi, {1}, 1).ap(hpr, {0, 2}, 0),
              tt(-1).ap(alp, {1}, 1).ap("brH", {0, 2}, 1),
              tt(-1).ap(bet, {0}, 0).ap("brH", {2, 0}, 0).pm({1, 0})})));
    // DM5: δ_A(x⇀b)=(x⟨₀⟩⇀b)⊗x⟨₁⟩+(x⇀b₍₁₎)⊗b₍₂₎−x₍₁₎⊗(x₍₀₎⊳b)+b₁⊗(x⊳b₂)
    cs.push_back(one(
        "DM5",
        desc("DM5", {H, A}, {A, A},
             {tt().ap(hpr, {0, 1}, 0).ap("cobrA", {0}, 0)},
             {tt().ap(psi, {0}, 0).ap(hpr, {0, 2}, 0),
              tt().ap("cobrA", {1}, 1).ap(hpr, {0, 1}, 0),
              tt(-1).ap(bet, {0}, 0).ap(tri, {0, 2}, 1),
              tt().ap("copA", {1}, 1).ap(tri, {0, 2}, 1)})));
    // DM6: δ_A(a↼y)=(a↼y⟨₀⟩)⊗y⟨₁⟩+(a₍₁₎↼y)⊗a₍₂₎−y₍₋₁₎⊗(y₍₀₎⊳a)+a₂⊗(y⊳a₁)
    cs.push_back(one(
        "DM6",
        desc("DM6", {H, A}, {A, A},
             {tt().ap(hpl, {1, 0}, 0).ap("cobrA", {0}, 0)},
             {tt().ap(psi, {0}, 0).ap(hpl, {2, 0}, 0),
              tt().ap("cobrA", {1}, 1).ap(hpl, {1, 0}, 0),
              tt(-1).ap(alp, {0}, 0).ap(tri, {1, 2}, 1),
              tt().ap("copA", {1}, 1).ap(tri, {0, 1}, 1)})));
    // DM7: δ_H(x←b)=(x₍₁₎←b)⊗x₍₂₎−(x←b⟨₀⟩)⊗b⟨₋₁⟩+b₍₋₁₎⊗(x⊲b₍₀₎)−x₂⊗(x₁⊲b)
    cs.push_back(one(
        "DM7",
        desc("DM7", {H, A}, {H, H},
             {tt().ap(lar, {0, 1}, 0).ap("cobrH", {0}, 0)},
             {tt().ap("cobrH", {0}, 0).ap(lar, {0, 2}, 0),
              tt(-1).ap(phi, {1}, 1).ap(lar, {0, 2}, 0),
              tt().ap(rho, {1}, 1).ap(tl, {0, 2}, 1),
              tt(-1).ap("copH", {0}, 0).ap(tl, {0, 2}, 1)})));
    // DM8: δ_H(a→y)=(a→y₍₁₎)⊗y₍₂₎−(a⟨₀⟩→y)⊗a⟨₋₁⟩+a₍₁₎⊗(y⊲a₍₀₎)−y₁⊗(y₂⊲a)
    cs.push_back(one(
        "DM8",
        desc("DM8", {H, A}, {H, H},
             {tt().ap(rar, {1, 0}, 0).ap("cobrH", {0}, 0)},
             {tt().ap("cobrH", {0}, 0).ap(rar, {2, 0}, 0),
              tt(-1).ap(phi, {1}, 1).ap(rar, {2, 0}, 0),
              tt().ap(gam, {1}, 1).ap(tl, {0, 1}, 1),
              tt(-1).ap("copH", {0}, 0).ap(tl, {1, 2}, 1)})));
    // DM9: φ(x⇀b)+ψ(x←b) = (x⟨₀⟩←b)⊗x⟨₁⟩+(x←b₍₁₎)⊗b₍₂₎+x·b⟨₋₁⟩⊗b⟨₀⟩
    //      +b₍₋₁₎⊗(x⊳b₍₀₎)−x₂⊗(x₁⊳b)+x₍₀₎⊗[b,x₍₋₁₎]
    cs.push_back(one(
        "DM9",
        desc("DM9", {H, A}, {H, A},
             {tt().ap(hpr, {0, 1}, 0).ap(phi, {0}, 0),
              tt().ap(lar, {0, 1}, 0).ap(psi, {0}, 0)},
             {tt().ap(psi, {0}, 0).ap(lar, {0, 2}, 0),
              tt().ap("cobrA", {1}, 1).ap(lar, {0, 1}, 0),
              tt().ap(phi, {1}, 1).ap("mulH", {0, 1}, 0),
              tt().ap(rho, {1}, 1).ap(tri, {0, 2}, 1),
              tt(-1).ap("copH", {0}, 0).ap(tri, {0, 2}, 1),
              tt().ap(alp, {0}, 0).ap("brA", {2, 0}, 1)})));
    // DM10: τφ(x⇀b)+τψ(x←b) = x⟨₁⟩b⊗x⟨₀⟩+(x⇀b⟨₀⟩)⊗b⟨₋₁⟩+x₍₁₎⊗(x₍₀₎⊲b)
    //      −(x₍₁₎⇀b)⊗x₍₂₎−b₍₀₎⊗[x,b₍₁₎]−b₁⊗(x⊲b₂)
    cs.push_back(one(
        "DM10",
        desc("DM10", {H, A}, {A, H},
             {tt().ap(hpr, {0, 1}, 0).ap(phi, {0}, 0).pm({1, 0}),
              tt().ap(lar, {0, 1}, 0).ap(psi, {0}, 0).pm({1, 0})},
             {tt().ap(psi, {0}, 0).ap("mulA", {1, 2}, 0),
              tt().ap(phi, {1}, 1).ap(hpr, {0, 2}, 0),
              tt().ap(bet, {0}, 0).ap(tl, {0, 2}, 1),
              tt(-1).ap("cobrH", {0}, 0).ap(hpr, {0, 2}, 0),
              tt(-1).ap(gam, {1}, 1).ap("brH", {0, 2}, 1),
              tt(-1).ap("copA", {1}, 1).ap(tl, {0, 2}, 1)})));
    // DM11: φ(a↼y)+ψ(a→y) = a⟨₋₁⟩y⊗a⟨₀⟩+(a→y⟨₀⟩)⊗y⟨₁⟩+y₍₀₎⊗[a,y₍₁₎]
    //      −(a₍₁₎→y)⊗a₍₂₎+a₍₁₎⊗(y⊳a₍₀₎)−y₁⊗(y₂⊳a); inputs (y,a)
    cs.push_back(one(
        "DM11",
        desc("DM11", {H, A}, {H, A},
             {tt().ap(hpl, {1, 0}, 0).ap(phi, {0}, 0),
              tt().ap(rar, {1, 0}, 0).ap(psi, {0}, 0)},
             {tt().ap(phi, {1}, 1).ap("mulH", {1, 0}, 0),
              tt().ap(psi, {0}, 0).ap(rar, {2, 0}, 0),
              tt().ap(bet, {0}, 0).ap("brA", {2, 1}, 1),
              tt(-1).ap("cobrA", {1}, 1).ap(rar, {1, 0}, 0),
              tt().ap(gam, {1}, 1).ap(tri, {0, 1}, 1),
              tt(-1).ap("copH", {0}, 0).ap(tri, {1, 2}, 1)})));
    // DM12: τφ(a↼y)+τψ(a→y) = a·y⟨₁⟩⊗y⟨₀⟩+(a⟨₀⟩↼y)⊗a⟨₋₁⟩+y₍₋₁₎⊗(y₍₀₎⊲a)
    //      −(a↼y₍₁₎)⊗y₍₂₎−a₍₀₎⊗[y,a₍₋₁₎]−a₂⊗(y⊲a₁); inputs (y,a)
    cs.push_back(one(
        "DM12",
        desc("DM12", {H, A}, {A, H},
             {tt().ap(hpl, {1, 0}, 0).ap(phi, {0}, 0).pm({1, 0}),
              tt().ap(rar, {1, 0}, 0).ap(psi, {0}, 0).pm({1, 0})},
             {tt().ap(psi, {0}, 0).ap("mulA", {2, 1}, 0),
              tt().ap(phi, {1}, 1).ap(hpl, {2, 0}, 0),
              tt().ap(alp, {0}, 0).ap(tl, {1, 2}, 1),
              tt(-1).ap("cobrH", {0}, 0).ap(hpl, {2, 0}, 0),
              tt(-1).ap(rho, {1}, 1).ap("brH", {0, 1}, 0).pm({1, 0}),
              tt(-1).ap("copA", {1}, 1).ap(tl, {0, 1}, 1)})));
    // DM13: ρ([a,b])=(a⟨₋₁⟩←b)⊗a⟨₀⟩−(b₍₋₁₎⊲a)⊗b₍₀₎+b₍₋₁₎⊗[a,b₍₀₎]−a⟨₋₁⟩⊗b·a⟨₀⟩
    cs.push_back(one(
        "DM13",
        desc("DM13", {A, A}, {H, A},
             {tt().ap("brA", {0, 1}, 0).ap(rho, {0}, 0)},
             {tt().ap(phi, {0}, 0).ap(lar, {0, 2}, 0),
              tt(-1).ap(rho, {1}, 1).ap(tl, {1, 0}, 0),
              tt().ap(rho, {1}, 1).ap("brA", {0, 2}, 1),
              tt(-1).ap(phi, {0}, 0).ap("mulA", {2, 1}, 1)})));
    // DM14: β([x,y])=[x,y₍₀₎]⊗y₍₁₎+y₍₀₎⊗(x⊳y₍₁₎)−x⟨₀⟩⊗(y⇀x⟨₁⟩)+x⟨₀⟩y⊗x⟨₁⟩
    cs.push_back(one(
        "DM14",
        desc("DM14", {H, H}, {H, A},
             {tt().ap("brH", {0, 1}, 0).ap(bet, {0}, 0)},
             {tt().ap(bet, {1}, 1).ap("brH", {0, 1}, 0),
              tt().ap(bet, {1}, 1).ap(tri, {0, 2}, 1),
              tt(-1).ap(psi, {0}, 0).ap(hpr, {2, 1}, 1),
              tt().ap(psi, {0}, 0).ap("mulH", {0, 2}, 0)})));
    // DM15: γ([a,b])=a⟨₀⟩⊗(b→a⟨₋₁⟩)−b₍₀₎⊗(b₍₁₎⊲a)+[a,b₍₀₎]⊗b₍₁₎+a⟨₀⟩⊗(a⟨₋₁⟩←b)
    cs.push_back(one(
        "DM15",
        desc("DM15", {A, A}, {A, H},
             {tt().ap("brA", {0, 1}, 0).ap(gam, {0}, 0)},
             {tt().ap(phi, {0}, 0).ap(rar, {2, 0}, 0).pm({1, 0}),
              tt(-1).ap(gam, {1}, 1).ap(tl, {2, 0}, 1),
              tt().ap(gam, {1}, 1).ap("brA", {0, 1}, 0),
              tt().ap(phi, {0}, 0).ap(lar, {0, 2}, 1)})));
    // DM16: α([x,y])=y₍₋₁₎⊗[x,y₍₀₎]+(x⊳y₍₋₁₎)⊗y₍₀₎−(x⟨₁⟩↼y)⊗x⟨₀⟩+x⟨₁⟩⊗y·x⟨₀⟩
    cs.push_back(one(
        "DM16",
        desc("DM16", {H, H}, {A, H},
             {tt().ap("brH", {0, 1}, 0).ap(alp, {0}, 0)},
             {tt().ap(alp, {1}, 1).ap("brH", {0, 2}, 1),
              tt().ap(alp, {1}, 1).ap(tri, {0, 1}, 0),
              tt(-1).ap(psi, {0}, 0).ap(hpl, {1, 2}, 0),
              tt().ap(psi, {0}, 0).ap("mulH", {2, 0}, 1)})));
    // DM17: Δ_A(x⊳b)=(x⊳b₁)⊗b₂+b₁⊗(x⊳b₂)+(x⟨₀⟩⇀b)⊗x⟨₁⟩+x⟨₁⟩⊗(b↼x⟨₀⟩)
    cs.push_back(one(
        "DM17",
        desc("DM17", {H, A}, {A, A},
             {tt().ap(tri, {0, 1}, 0).ap("copA", {0}, 0)},
             {tt().ap("copA", {1}, 1).ap(tri, {0, 1}, 0),
              tt().ap("copA", {1}, 1).ap(tri, {0, 2}, 1),
              tt().ap(psi, {0}, 0).ap(hpr, {0, 2}, 0),
              tt().ap(psi, {0}, 0).ap(hpl, {2, 0}, 1)})));
    // DM18: Δ_A(y⊳a)=−(a₍₁₎↼y)⊗a₍₂₎+a₍₁₎⊗(y⇀a₍₂₎)+(y₍₀₎⊳a)⊗y₍₁₎+y₍₋₁₎⊗(y₍₀₎⊳a)
    cs.push_back(one(
        "DM18",
        desc("DM18", {H, A}, {A, A},
             {tt().ap(tri, {0, 1}, 0).ap("copA", {0}, 0)},
             {tt(-1).ap("cobrA", {1}, 1).ap(hpl, {1, 0}, 0),
              tt().ap("cobrA", {1}, 1).ap(hpr, {0, 2}, 1),
              tt().ap(bet, {0}, 0).ap(tri, {0, 2}, 0),
              tt().ap(alp, {0}, 0).ap(tri, {1, 2}, 1)})));
    // DM19: Δ_H(x⊲b)=(x⊲b₍₀₎)⊗b₍₁₎+b₍₋₁₎⊗(x⊲b₍₀₎)+(x₍₁₎←b)⊗x₍₂₎−x₍₁₎⊗(b→x₍₂₎)
    cs.push_back(one(
        "DM19",
        desc("DM19", {H, A}, {H, H},
             {tt().ap(tl, {0, 1}, 0).ap("copH", {0}, 0)},
             {tt().ap(gam, {1}, 1).ap(tl, {0, 1}, 0),
              tt().ap(rho, {1}, 1).ap(tl, {0, 2}, 1),
              tt().ap("cobrH", {0}, 0).ap(lar, {0, 2}, 0),
              tt(-1).ap("cobrH", {0}, 0).ap(rar, {2, 1}, 1)})));
    // DM20: Δ_H(y⊲a)=(y₁⊲a)⊗y₂+y₁⊗(y₂⊲a)+(a⟨₀⟩→y)⊗a⟨₋₁⟩+a⟨₋₁⟩⊗(y←a⟨₀⟩)
    cs.push_back(one(
        "DM20",
        desc("DM20", {H, A}, {H, H},
             {tt().ap(tl, {0, 1}, 0).ap("copH", {0}, 0)},
             {tt().ap("copH", {0}, 0).ap(tl, {0, 2}, 0),
              tt().ap("copH", {0}, 0).ap(tl, {1, 2}, 1),
              tt().ap(phi, {1}, 1).ap(rar, {2, 0}, 0),
              tt().ap(phi, {1}, 1).ap(lar, {0, 2}, 1)})));
    // DM21: ρ(x⊳b)+β(x⊲b) = (x⊲b₁)⊗b₂+[x,b₍₋₁₎]⊗b₍₀₎+b₍₋₁₎⊗(x⊳b₍₀₎)
    //      −x⟨₀⟩⊗b·x⟨₁⟩+(x⟨₀⟩←b)⊗x⟨₁⟩−x₍₁₎⊗(b↼x₍₂₎)
    cs.push_back(one(
        "DM21",
        desc("DM21", {H, A}, {H, A},
             {tt().ap(tri, {0, 1}, 0).ap(rho, {0}, 0),
              tt().ap(tl, {0, 1}, 0).ap(bet, {0}, 0)},
             {tt().ap("copA", {1}, 1).ap(tl, {0, 1}, 0),
              tt().ap(rho, {1}, 1).ap("brH", {0, 1}, 0),
              tt().ap(rho, {1}, 1).ap(tri, {0, 2}, 1),
              tt(-1).ap(psi, {0}, 0).ap("mulA", {2, 1}, 1),
              tt().ap(psi, {0}, 0).ap(lar, {0, 2}, 0),
              tt(-1).ap("cobrH", {0}, 0).ap(hpl, {2, 1}, 1)})));
    // DM22: ρ(y⊳a)+β(y⊲a) = (y₍₀₎⊲a)⊗y₍₁₎−y₍₀₎⊗[a,y₍₁₎]−(a₍₁₎→y)⊗a₍₂₎
    //      −a⟨₋₁⟩y⊗a⟨₀⟩+y₁⊗(y₂⊳a)+a⟨₋₁⟩⊗(y⇀a⟨₀⟩); inputs (y,a)
    cs.push_back(one(
        "DM22",
        desc("DM22", {H, A}, {H, A},
             {tt().ap(tri, {0, 1}, 0).ap(rho, {0}, 0),
              tt().ap(tl, {0, 1}, 0).ap(bet, {0}, 0)},
             {tt().ap(bet, {0}, 0).ap(tl, {0, 2}, 0),
              tt(-1).ap(bet, {0}, 0).ap("brA", {2, 1}, 1),
              tt(-1).ap("cobrA", {1}, 1).ap(rar, {1, 0}, 0),
              tt(-1).ap(phi, {1}, 1).ap("mulH", {1, 0}, 0),
              tt().ap("copH", {0}, 0).ap(tri, {1, 2}, 1),
              tt().ap(phi, {1}, 1).ap(hpr, {0, 2}, 1)})));
    // DM23: γ(x⊳b)+α(x⊲b) = b₁⊗(x⊲b₂)+b₍₀₎⊗[x,b₍₁₎]+(x⊳b₍₀₎)⊗b₍₁₎
    //      +x⟨₁⟩⊗(b→x⟨₀⟩)+(x₍₁₎⇀b)⊗x₍₂₎−x⟨₁⟩b⊗x⟨₀⟩
    cs.push_back(one(
        "DM23",
        desc("DM23", {H, A}, {A, H},
             {tt().ap(tri, {0, 1}, 0).ap(gam, {0}, 0),
              tt().ap(tl, {0, 1}, 0).ap(alp, {0}, 0)},
             {tt().ap("copA", {1}, 1).ap(tl, {0, 2}, 1),
              tt().ap(gam, {1}, 1).ap("brH", {0, 2}, 1),
              tt().ap(gam, {1}, 1).ap(tri, {0, 1}, 0),
              tt().ap(psi, {0}, 0).ap(rar, {2, 0}, 1),
              tt().ap("cobrH", {0}, 0).ap(hpr, {0, 2}, 0),
              tt(-1).ap(psi, {0}, 0).ap("mulA", {1, 2}, 0)})));
    // DM24: γ(y⊳a)+α(y⊲a) = y₍₋₁₎⊗(y₍₀₎⊲a)−[a,y₍₋₁₎]⊗y₍₀₎+(y₁⊳a)⊗y₂
    //      −a⟨₀⟩⊗y·a⟨₋₁⟩+a₍₁₎⊗(y←a₍₂₎)+(a⟨₀⟩↼y)⊗a⟨₋₁⟩; inputs (y,a)
    cs.push_back(one(
        "DM24",
        desc("DM24", {H, A}, {A, H},
             {tt().ap(tri, {0, 1}, 0).ap(gam, {0}, 0),
              tt().ap(tl, {0, 1}, 0).ap(alp, {0}, 0)},
             {tt().ap(alp, {0}, 0).ap(tl, {1, 2}, 1),
              tt(-1).ap(alp, {0}, 0).ap("brA", {2, 0}, 0),
              tt().ap("copH", {0}, 0).ap(tri, {0, 2}, 0),
              tt(-1).ap(phi, {1}, 1).ap("mulH", {0, 1}, 0).pm({1, 0}),
              tt().ap("cobrA", {1}, 1).ap(lar, {0, 2}, 1),
              tt().ap(phi, {1}, 1).ap(hpl, {2, 0}, 0)})));
    return cs;
}

}  // namespace

void register_matched_sets(std::map<std::string, ConditionSet>& reg) {
    reg.emplace("MP_ALG",
                ConditionSet{"MP_ALG",
                             "matched pair of algebras: mixed compatibilities "
                             "(the pure algebra laws are cross-checked "
                             "constructively on the bicrossed product)",
                             mp_alg_conditions()});
    reg.emplace("MP_COALG",
                ConditionSet{"MP_COALG",
                             "matched pair of coalgebras: mixed compatibilities "
                             "(the pure coalgebra laws are cross-checked "
                             "constructively on the bicrossed coproduct)",
                             mp_coalg_conditions()});
    reg.emplace("HOPF_A",
                ConditionSet{"HOPF_A",
                             "Hopf bimodule conditions with H as module over A",
                             hopf_a_conditions()});
    reg.emplace("BRAIDED_H",
                ConditionSet{"BRAIDED_H",
                             "braided bialgebra conditions for H over A",
                             braided_h_conditions()});
    reg.emplace("DMP", ConditionSet{"DMP", "double matched pair conditions",
                                    dmp_conditions()});
}

}  // namespace pforge
