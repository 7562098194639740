#include "pforge/registry.hpp"

//
// Cocycle layer: cocycle/cycle compatibilities for the cocycle bicrossproduct.
// Cocycles sigma_HH, omega_HH: H⊗H→A; theta_AA, nu_AA: A⊗A→H.
// Cycles p_A, s_A: A→H⊗H (p(a)=a₁ₚ⊗a₂ₚ, s(a)=a₁ₛ⊗a₂ₛ);
// q_H, t_H: H→A⊗A (q(x)=x₁q⊗x₂q, t(x)=x₁ₜ⊗x₂ₜ).
// The remaining vocabulary is as in the matched-pair layer.
//

namespace pforge {

namespace {

const std::string A = "A", H = "H";
const std::string hpr = "hpr_HA", hpl = "hpl_AH", rar = "rar_AH",
                  lar = "lar_HA", tri = "tri_HA", tl = "tl_HA";
const std::string rho = "rho_A", gam = "gamma_A", alp = "alpha_H",
                  bet = "beta_H", phi = "phi_A", psi = "psi_H";
const std::string sig = "sigma_HH", omg = "omega_HH", tht = "theta_AA",
                  nu = "nu_AA", pp = "p_A", ss = "s_A", qq = "q_H",
                  tth = "t_H";

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

// --- cocycle / cycle laws CC1-CC8 ------------------------------------------

std::vector<ConditionEntry> cc_conditions() {
    std::vector<ConditionEntry> cs;
    // CC1: x⊳ω(y,z)+σ(x,yz) = σ(x,y)↼z+ω([x,y],z)+y⇀σ(x,z)+ω(y,[x,z])
    cs.push_back(one(
        "CC1", desc("CC1", {H, H, H}, {A},
                    {tt().ap(omg, {1, 2}, 1).ap(tri, {0, 1}, 0),
                     tt().ap("mulH", {1, 2}, 1).ap(sig, {0, 1}, 0)},
                    {tt().ap(sig, {0, 1}, 0).ap(hpl, {0, 1}, 0),
                     tt().ap("brH", {0, 1}, 0).ap(omg, {0, 1}, 0),
                     tt().ap(sig, {0, 2}, 1).ap(hpr, {0, 1}, 0),
                     tt().ap("brH", {0, 2}, 1).ap(omg, {0, 1}, 0)})));
    // CC2: θ(a,bc)−ν(b,c)⊲a = θ(a,b)←c+ν([a,b],c)+b→θ(a,c)+ν(b,[a,c])
    cs.push_back(one(
        "CC2", desc("CC2", {A, A, A}, {H},
                    {tt().ap("mulA", {1, 2}, 1).ap(tht, {0, 1}, 0),
                     tt(-1).ap(nu, {1, 2}, 1).ap(tl, {1, 0}, 0)},
                    {tt().ap(tht, {0, 1}, 0).ap(lar, {0, 1}, 0),
                     tt().ap("brA", {0, 1}, 0).ap(nu, {0, 1}, 0),
                     tt().ap(tht, {0, 2}, 1).ap(rar, {0, 1}, 0),
                     tt().ap("brA", {0, 2}, 1).ap(nu, {0, 1}, 0)})));
    // CC3: a⟨₋₁⟩⊗s(a⟨₀⟩)+a₁ₚ⊗Δ_H(a₂ₚ) = p(a₍₀₎)⊗a₍₁₎+δ_H(a₁ₛ)⊗a₂ₛ
    //     +τ₁₂(a₍₋₁₎⊗p(a₍₀₎))+τ₁₂(a₁ₛ⊗δ_H(a₂ₛ))
    cs.push_back(one(
        "CC3",
        desc("CC3", {A}, {H, H, H},
             {tt().ap(phi, {0}, 0).ap(ss, {1}, 1),
              tt().ap(pp, {0}, 0).ap("copH", {1}, 1)},
             {tt().ap(gam, {0}, 0).ap(pp, {0}, 0),
              tt().ap(ss, {0}, 0).ap("cobrH", {0}, 0),
              tt().ap(rho, {0}, 0).ap(pp, {1}, 1).pm({1, 0, 2}),
              tt().ap(ss, {0}, 0).ap("cobrH", {1}, 1).pm({1, 0, 2})})));
    // CC4: x₁q⊗δ_A(x₂q)−x⟨₁⟩⊗t(x⟨₀⟩) = q(x₍₀₎)⊗x₍₁₎+δ_A(x₁ₜ)⊗x₂ₜ
    //     +τ₁₂(x₍₋₁₎⊗q(x₍₀₎))+τ₁₂(x₁ₜ⊗δ_A(x₂ₜ))
    cs.push_back(one(
        "CC4",
        desc("CC4", {H}, {A, A, A},
             {tt().ap(qq, {0}, 0).ap("cobrA", {1}, 1),
              tt(-1).ap(psi, {0}, 0).ap(tth, {0}, 0).pm({2, 0, 1})},
             {tt().ap(bet, {0}, 0).ap(qq, {0}, 0),
              tt().ap(tth, {0}, 0).ap("cobrA", {0}, 0),
              tt().ap(alp, {0}, 0).ap(qq, {1}, 1).pm({1, 0, 2}),
              tt().ap(tth, {0}, 0).ap("cobrA", {1}, 1).pm({1, 0, 2})})));
    // CC5: [x,yz]+x⊲ω(y,z) = [x,y]z+σ(x,y)→z+y[x,z]+y←σ(x,z)
    cs.push_back(one(
        "CC5", desc("CC5", {H, H, H}, {H},
                    {tt().ap("mulH", {1, 2}, 1).ap("brH", {0, 1}, 0),
                     tt().ap(omg, {1, 2}, 1).ap(tl, {0, 1}, 0)},
                    {tt().ap("brH", {0, 1}, 0).ap("mulH", {0, 1}, 0),
                     tt().ap(sig, {0, 1}, 0).ap(rar, {0, 1}, 0),
                     tt().ap("brH", {0, 2}, 1).ap("mulH", {0, 1}, 0),
                     tt().ap(sig, {0, 2}, 1).ap(lar, {0, 1}, 0)})));
    // CC6: [a,bc]−ν(b,c)⊳a = [a,b]c+θ(a,b)⇀c+b[a,c]+b↼θ(a,c)
    cs.push_back(one(
        "CC6", desc("CC6", {A, A, A}, {A},
                    {tt().ap("mulA", {1, 2}, 1).ap("brA", {0, 1}, 0),
                     tt(-1).ap(nu, {1, 2}, 1).ap(tri, {1, 0}, 0)},
                    {tt().ap("brA", {0, 1}, 0).ap("mulA", {0, 1}, 0),
                     tt().ap(tht, {0, 1}, 0).ap(hpr, {0, 1}, 0),
                     tt().ap("brA", {0, 2}, 1).ap("mulA", {0, 1}, 0),
                     tt().ap(tht, {0, 2}, 1).ap(hpl, {0, 1}, 0)})));
    // CC7: x₍₁₎⊗Δ_H(x₍₂₎)+x⟨₀⟩⊗s(x⟨₁⟩) = δ_H(x₁)⊗x₂+p(x₍₋₁₎)⊗x₍₀₎
    //     +τ₁₂(x₁⊗δ_H(x₂))+τ₁₂(x₍₀₎⊗p(x₍₁₎))
    cs.push_back(one(
        "CC7",
        desc("CC7", {H}, {H, H, H},
             {tt().ap("cobrH", {0}, 0).ap("copH", {1}, 1),
              tt().ap(psi, {0}, 0).ap(ss, {1}, 1)},
             {tt().ap("copH", {0}, 0).ap("cobrH", {0}, 0),
              tt().ap(alp, {0}, 0).ap(pp, {0}, 0),
              tt().ap("copH", {0}, 0).ap("cobrH", {1}, 1).pm({1, 0, 2}),
              tt().ap(bet, {0}, 0).ap(pp, {1}, 1).pm({1, 0, 2})})));
    // CC8: a₍₁₎⊗Δ_A(a₍₂₎)−a⟨₀⟩⊗t(a⟨₋₁⟩) = δ_A(a₁)⊗a₂+q(a₍₋₁₎)⊗a₍₀₎
    //     +τ₁₂(a₁⊗δ_A(a₂))+τ₁₂(a₍₀₎⊗q(a₍₁₎))
    cs.push_back(one(
        "CC8",
        desc("CC8", {A}, {A, A, A},
             {tt().ap("cobrA", {0}, 0).ap("copA", {1}, 1),
              tt(-1).ap(phi, {0}, 0).ap(tth, {0}, 0).pm({2, 0, 1})},
             {tt().ap("copA", {0}, 0).ap("cobrA", {0}, 0),
              tt().ap(rho, {0}, 0).ap(qq, {0}, 0),
              tt().ap("copA", {0}, 0).ap("cobrA", {1}, 1).pm({1, 0, 2}),
              tt().ap(gam, {0}, 0).ap(qq, {1}, 1).pm({1, 0, 2})})));
    return cs;
}

// --- cocycle cross product system CP1-CP12 --------------------------------

std::vector<ConditionEntry> cp_conditions() {
    std::vector<ConditionEntry> cs;
    // CP1: [a,x⇀b]−(x←b)⊳a = x⇀[a,b]+ω(x,θ(a,b))−(x⊳a)b−(x⊲a)⇀b; (x,a,b)
    cs.push_back(one(
        "CP1", desc("CP1", {H, A, A}, {A},
                    {tt().ap(hpr, {0, 2}, 1).ap("brA", {0, 1}, 0),
                     tt(-1).ap(lar, {0, 2}, 0).ap(tri, {0, 1}, 0)},
                    {tt().ap("brA", {1, 2}, 1).ap(hpr, {0, 1}, 0),
                     tt().ap(tht, {1, 2}, 1).ap(omg, {0, 1}, 0),
                     tt(-1).ap(tri, {0, 1}, 0).ap("mulA", {0, 1}, 0),
                     tt(-1).ap(tl, {0, 1}, 0).ap(hpr, {0, 1}, 0)})));
    // CP2: [a,b↼x]−(b→x)⊳a = [a,b]↼x+ω(θ(a,b),x)−b(x⊳a)−b↼(x⊲a)
    cs.push_back(one(
        "CP2", desc("CP2", {H, A, A}, {A},
                    {tt().ap(hpl, {2, 0}, 1).ap("brA", {0, 1}, 0),
                     tt(-1).ap(rar, {2, 0}, 0).ap(tri, {0, 1}, 0)},
                    {tt().ap("brA", {1, 2}, 1).ap(hpl, {1, 0}, 0),
                     tt().ap(tht, {1, 2}, 1).ap(omg, {1, 0}, 0),
                     tt(-1).ap(tri, {0, 1}, 0).ap("mulA", {1, 0}, 0),
                     tt(-1).ap(tl, {0, 1}, 0).ap(hpl, {1, 0}, 0)})));
    // CP3: (xy)⊳a−[a,ω(x,y)] = (x⊳a)↼y+ω(x⊲a,y)+x⇀(y⊳a)+ω(x,y⊲a); (x,y,a)
    cs.push_back(one(
        "CP3", desc("CP3", {H, H, A}, {A},
                    {tt().ap("mulH", {0, 1}, 0).ap(tri, {0, 1}, 0),
                     tt(-1).ap(omg, {0, 1}, 0).ap("brA", {1, 0}, 0)},
                    {tt().ap(tri, {0, 2}, 0).ap(hpl, {0, 1}, 0),
                     tt().ap(tl, {0, 2}, 0).ap(omg, {0, 1}, 0),
                     tt().ap(tri, {1, 2}, 1).ap(hpr, {0, 1}, 0),
                     tt().ap(tl, {1, 2}, 1).ap(omg, {0, 1}, 0)})));
    // CP4: x⊳(ab)+σ(x,ν(a,b)) = (x⊳a)b+(x⊲a)⇀b+a(x⊳b)+a↼(x⊲b); (x,a,b)
    cs.push_back(one(
        "CP4", desc("CP4", {H, A, A}, {A},
                    {tt().ap("mulA", {1, 2}, 1).ap(tri, {0, 1}, 0),
                     tt().ap(nu, {1, 2}, 1).ap(sig, {0, 1}, 0)},
                    {tt().ap(tri, {0, 1}, 0).ap("mulA", {0, 1}, 0),
                     tt().ap(tl, {0, 1}, 0).ap(hpr, {0, 1}, 0),
                     tt().ap(tri, {0, 2}, 1).ap("mulA", {0, 1}, 0),
                     tt().ap(tl, {0, 2}, 1).ap(hpl, {0, 1}, 0)})));
    // CP5: x⊳(y⇀a)+σ(x,y←a) = σ(x,y)a+[x,y]⇀a+y⇀(x⊳a)+ω(y,x⊲a); (x,y,a)
    cs.push_back(one(
        "CP5", desc("CP5", {H, H, A}, {A},
                    {tt().ap(hpr, {1, 2}, 1).ap(tri, {0, 1}, 0),
                     tt().ap(lar, {1, 2}, 1).ap(sig, {0, 1}, 0)},
                    {tt().ap(sig, {0, 1}, 0).ap("mulA", {0, 1}, 0),
                     tt().ap("brH", {0, 1}, 0).ap(hpr, {0, 1}, 0),
                     tt().ap(tri, {0, 2}, 0).ap(hpr, {1, 0}, 0),
                     tt().ap(tl, {0, 2}, 0).ap(omg, {1, 0}, 0)})));
    // CP6: x⊳(a↼y)+σ(x,a→y) = aσ(x,y)+a↼[x,y]+(x⊳a)↼y+ω(x⊲a,y)
    cs.push_back(one(
        "CP6", desc("CP6", {H, H, A}, {A},
                    {tt().ap(hpl, {2, 1}, 1).ap(tri, {0, 1}, 0),
                     tt().ap(rar, {2, 1}, 1).ap(sig, {0, 1}, 0)},
                    {tt().ap(sig, {0, 1}, 0).ap("mulA", {1, 0}, 0),
                     tt().ap("brH", {0, 1}, 0).ap(hpl, {1, 0}, 0),
                     tt().ap(tri, {0, 2}, 0).ap(hpl, {0, 1}, 0),
                     tt().ap(tl, {0, 2}, 0).ap(omg, {0, 1}, 0)})));
    // CP7: [x,y←a]+x⊲(y⇀a) = [x,y]←a+ν(σ(x,y),a)+y(x⊲a)+y←(x⊳a)
    cs.push_back(one(
        "CP7", desc("CP7", {H, H, A}, {H},
                    {tt().ap(lar, {1, 2}, 1).ap("brH", {0, 1}, 0),
                     tt().ap(hpr, {1, 2}, 1).ap(tl, {0, 1}, 0)},
                    {tt().ap("brH", {0, 1}, 0).ap(lar, {0, 1}, 0),
                     tt().ap(sig, {0, 1}, 0).ap(nu, {0, 1}, 0),
                     tt().ap(tl, {0, 2}, 0).ap("mulH", {1, 0}, 0),
                     tt().ap(tri, {0, 2}, 0).ap(lar, {1, 0}, 0)})));
    // CP8: [x,a→y]+x⊲(a↼y) = a→[x,y]+ν(a,σ(x,y))+(x⊲a)y+(x⊳a)→y
    cs.push_back(one(
        "CP8", desc("CP8", {H, H, A}, {H},
                    {tt().ap(rar, {2, 1}, 1).ap("brH", {0, 1}, 0),
                     tt().ap(hpl, {2, 1}, 1).ap(tl, {0, 1}, 0)},
                    {tt().ap("brH", {0, 1}, 0).ap(rar, {1, 0}, 0),
                     tt().ap(sig, {0, 1}, 0).ap(nu, {1, 0}, 0),
                     tt().ap(tl, {0, 2}, 0).ap("mulH", {0, 1}, 0),
                     tt().ap(tri, {0, 2}, 0).ap(rar, {0, 1}, 0)})));
    // CP9: [x,ν(a,b)]+x⊲(ab) = (x⊲a)←b+ν(x⊳a,b)+a→(x⊲b)+ν(a,x⊳b); (x,a,b)
    cs.push_back(one(
        "CP9", desc("CP9", {H, A, A}, {H},
                    {tt().ap(nu, {1, 2}, 1).ap("brH", {0, 1}, 0),
                     tt().ap("mulA", {1, 2}, 1).ap(tl, {0, 1}, 0)},
                    {tt().ap(tl, {0, 1}, 0).ap(lar, {0, 1}, 0),
                     tt().ap(tri, {0, 1}, 0).ap(nu, {0, 1}, 0),
                     tt().ap(tl, {0, 2}, 1).ap(rar, {0, 1}, 0),
                     tt().ap(tri, {0, 2}, 1).ap(nu, {0, 1}, 0)})));
    // CP10: (xy)⊲a−θ(a,ω(x,y)) = (x⊲a)y+(x⊳a)→y+x(y⊲a)+x←(y⊳a); (x,y,a)
    cs.push_back(one(
        "CP10", desc("CP10", {H, H, A}, {H},
                     {tt().ap("mulH", {0, 1}, 0).ap(tl, {0, 1}, 0),
                      tt(-1).ap(omg, {0, 1}, 0).ap(tht, {1, 0}, 0)},
                     {tt().ap(tl, {0, 2}, 0).ap("mulH", {0, 1}, 0),
                      tt().ap(tri, {0, 2}, 0).ap(rar, {0, 1}, 0),
                      tt().ap(tl, {1, 2}, 1).ap("mulH", {0, 1}, 0),
                      tt().ap(tri, {1, 2}, 1).ap(lar, {0, 1}, 0)})));
    // CP11: θ(a,x⇀b)−(x←b)⊲a = xθ(a,b)+x←[a,b]−(x⊲a)←b−ν(x⊳a,b); (x,a,b)
    cs.push_back(one(
        "CP11", desc("CP11", {H, A, A}, {H},
                     {tt().ap(hpr, {0, 2}, 1).ap(tht, {0, 1}, 0),
                      tt(-1).ap(lar, {0, 2}, 0).ap(tl, {0, 1}, 0)},
                     {tt().ap(tht, {1, 2}, 1).ap("mulH", {0, 1}, 0),
                      tt().ap("brA", {1, 2}, 1).ap(lar, {0, 1}, 0),
                      tt(-1).ap(tl, {0, 1}, 0).ap(lar, {0, 1}, 0),
                      tt(-1).ap(tri, {0, 1}, 0).ap(nu, {0, 1}, 0)})));
    // CP12: θ(a,b↼x)−(b→x)⊲a = θ(a,b)x+[a,b]→x−b→(x⊲a)−ν(b,x⊳a)
    cs.push_back(one(
        "CP12", desc("CP12", {H, A, A}, {H},
                     {tt().ap(hpl, {2, 0}, 1).ap(tht, {0, 1}, 0),
                      tt(-1).ap(rar, {2, 0}, 0).ap(tl, {0, 1}, 0)},
                     {tt().ap(tht, {1, 2}, 1).ap("mulH", {1, 0}, 0),
                      tt().ap("brA", {1, 2}, 1).ap(rar, {1, 0}, 0),
                      tt(-1).ap(tl, {0, 1}, 0).ap(rar, {1, 0}, 0),
                      tt(-1).ap(tri, {0, 1}, 0).ap(nu, {1, 0}, 0)})));
    return cs;
}

// --- cycle cross coproduct system CCP1-CCP12 -------------------------------

std::vector<ConditionEntry> ccp_conditions() {
    std::vector<ConditionEntry> cs;
    // CCP1: a₍₁₎⊗ρ(a₍₂₎)−a⟨₀⟩⊗β(a⟨₋₁⟩) = −τφ(a₁)⊗a₂−τψ(a₍₋₁₎)⊗a₍₀₎
    //      +τ₁₂(a₍₋₁₎⊗δ_A(a₍₀₎))+τ₁₂(a₁ₛ⊗q(a₂ₛ))
    cs.push_back(one(
        "CCP1",
        desc("CCP1", {A}, {A, H, A},
             {tt().ap("cobrA", {0}, 0).ap(rho, {1}, 1),
              tt(-1).ap(phi, {0}, 0).ap(bet, {0}, 0).pm({2, 0, 1})},
             {tt(-1).ap("copA", {0}, 0).ap(phi, {0}, 0).pm({1, 0, 2}),
              tt(-1).ap(rho, {0}, 0).ap(psi, {0}, 0).pm({1, 0, 2}),
              tt().ap(rho, {0}, 0).ap("cobrA", {1}, 1).pm({1, 0, 2}),
              tt().ap(ss, {0}, 0).ap(qq, {1}, 1).pm({1, 0, 2})})));
    // CCP2: a₍₁₎⊗γ(a₍₂₎)−a⟨₀⟩⊗α(a⟨₋₁⟩) = δ_A(a₍₀₎)⊗a₍₁₎+q(a₁ₛ)⊗a₂ₛ
    //      −τ₁₂(a₁⊗τφ(a₂))−τ₁₂(a₍₀₎⊗τψ(a₍₁₎))
    cs.push_back(one(
        "CCP2",
        desc("CCP2", {A}, {A, A, H},
             {tt().ap("cobrA", {0}, 0).ap(gam, {1}, 1),
              tt(-1).ap(phi, {0}, 0).ap(alp, {0}, 0).pm({2, 0, 1})},
             {tt().ap(gam, {0}, 0).ap("cobrA", {0}, 0),
              tt().ap(ss, {0}, 0).ap(qq, {0}, 0),
              tt(-1).ap("copA", {0}, 0).ap(phi, {1}, 1).pm({2, 0, 1}),
              tt(-1).ap(gam, {0}, 0).ap(psi, {1}, 1).pm({2, 0, 1})})));
    // CCP3: a⟨₀⟩⊗Δ_H(a⟨₋₁⟩)−a₍₁₎⊗s(a₍₂₎) = τφ(a₍₀₎)⊗a₍₁₎+τψ(a₁ₛ)⊗a₂ₛ
    //      +τ₁₂(a₍₋₁₎⊗τφ(a₍₀₎))+τ₁₂(a₁ₛ⊗τψ(a₂ₛ))
    cs.push_back(one(
        "CCP3",
        desc("CCP3", {A}, {A, H, H},
             {tt().ap(phi, {0}, 0).ap("copH", {0}, 0).pm({2, 0, 1}),
              tt(-1).ap("cobrA", {0}, 0).ap(ss, {1}, 1)},
             {tt().ap(gam, {0}, 0).ap(phi, {0}, 0).pm({1, 0, 2}),
              tt().ap(ss, {0}, 0).ap(psi, {0}, 0).pm({1, 0, 2}),
              tt().ap(rho, {0}, 0).ap(phi, {1}, 1).pm({2, 0, 1}),
              tt().ap(ss, {0}, 0).ap(psi, {1}, 1).pm({2, 0, 1})})));
    // CCP4: a⟨₋₁⟩⊗Δ_A(a⟨₀⟩)+a₁ₚ⊗t(a₂ₚ) = φ(a₁)⊗a₂+ψ(a₍₋₁₎)⊗a₍₀₎
    //      +τ₁₂(a₁⊗φ(a₂))+τ₁₂(a₍₀₎⊗ψ(a₍₁₎))
    cs.push_back(one(
        "CCP4",
        desc("CCP4", {A}, {H, A, A},
             {tt().ap(phi, {0}, 0).ap("copA", {1}, 1),
              tt().ap(pp, {0}, 0).ap(tth, {1}, 1)},
             {tt().ap("copA", {0}, 0).ap(phi, {0}, 0),
              tt().ap(rho, {0}, 0).ap(psi, {0}, 0),
              tt().ap("copA", {0}, 0).ap(phi, {1}, 1).pm({1, 0, 2}),
              tt().ap(gam, {0}, 0).ap(psi, {1}, 1).pm({1, 0, 2})})));
    // CCP5: a⟨₋₁⟩⊗ρ(a⟨₀⟩)+a₁ₚ⊗β(a₂ₚ) = δ_H(a₍₋₁₎)⊗a₍₀₎+p(a₁)⊗a₂
    //      +τ₁₂(a₍₋₁₎⊗φ(a₍₀₎))+τ₁₂(a₁ₛ⊗ψ(a₂ₛ))
    cs.push_back(one(
        "CCP5",
        desc("CCP5", {A}, {H, H, A},
             {tt().ap(phi, {0}, 0).ap(rho, {1}, 1),
              tt().ap(pp, {0}, 0).ap(bet, {1}, 1)},
             {tt().ap(rho, {0}, 0).ap("cobrH", {0}, 0),
              tt().ap("copA", {0}, 0).ap(pp, {0}, 0),
              tt().ap(rho, {0}, 0).ap(phi, {1}, 1).pm({1, 0, 2}),
              tt().ap(ss, {0}, 0).ap(psi, {1}, 1).pm({1, 0, 2})})));
    // CCP6: a⟨₋₁⟩⊗γ(a⟨₀⟩)+a₁ₚ⊗α(a₂ₚ) = φ(a₍₀₎)⊗a₍₁₎+ψ(a₁ₛ)⊗a₂ₛ
    //      +τ₁₂(a₁⊗p(a₂))+τ₁₂(a₍₀₎⊗δ_H(a₍₁₎))
    cs.push_back(one(
        "CCP6",
        desc("CCP6", {A}, {H, A, H},
             {tt().ap(phi, {0}, 0).ap(gam, {1}, 1),
              tt().ap(pp, {0}, 0).ap(alp, {1}, 1)},
             {tt().ap(gam, {0}, 0).ap(phi, {0}, 0),
              tt().ap(ss, {0}, 0).ap(psi, {0}, 0),
              tt().ap("copA", {0}, 0).ap(pp, {1}, 1).pm({1, 0, 2}),
              tt().ap(gam, {0}, 0).ap("cobrH", {1}, 1).pm({1, 0, 2})})));
    // CCP7: x₍₁₎⊗β(x₍₂₎)+x⟨₀⟩⊗ρ(x⟨₁⟩) = δ_H(x₍₀₎)⊗x₍₁₎+p(x₁ₜ)⊗x₂ₜ
    //      +τ₁₂(x₁⊗ψ(x₂))+τ₁₂(x₍₀₎⊗φ(x₍₁₎))
    cs.push_back(one(
        "CCP7",
        desc("CCP7", {H}, {H, H, A},
             {tt().ap("cobrH", {0}, 0).ap(bet, {1}, 1),
              tt().ap(psi, {0}, 0).ap(rho, {1}, 1)},
             {tt().ap(bet, {0}, 0).ap("cobrH", {0}, 0),
              tt().ap(tth, {0}, 0).ap(pp, {0}, 0),
              tt().ap("copH", {0}, 0).ap(psi, {1}, 1).pm({1, 0, 2}),
              tt().ap(bet, {0}, 0).ap(phi, {1}, 1).pm({1, 0, 2})})));
    // CCP8: x₍₁₎⊗α(x₍₂₎)+x⟨₀⟩⊗γ(x⟨₁⟩) = ψ(x₁)⊗x₂+φ(x₍₋₁₎)⊗x₍₀₎
    //      +τ₁₂(x₍₋₁₎⊗δ_H(x₍₀₎))+τ₁₂(x₁ₜ⊗p(x₂ₜ))
    cs.push_back(one(
        "CCP8",
        desc("CCP8", {H}, {H, A, H},
             {tt().ap("cobrH", {0}, 0).ap(alp, {1}, 1),
              tt().ap(psi, {0}, 0).ap(gam, {1}, 1)},
             {tt().ap("copH", {0}, 0).ap(psi, {0}, 0),
              tt().ap(alp, {0}, 0).ap(phi, {0}, 0),
              tt().ap(alp, {0}, 0).ap("cobrH", {1}, 1).pm({1, 0, 2}),
              tt().ap(tth, {0}, 0).ap(pp, {1}, 1).pm({1, 0, 2})})));
    // CCP9: x₍₁₎⊗t(x₍₂₎)+x⟨₀⟩⊗Δ_A(x⟨₁⟩) = ψ(x₍₀₎)⊗x₍₁₎+φ(x₁ₜ)⊗x₂ₜ
    //      +τ₁₂(x₍₋₁₎⊗ψ(x₍₀₎))+τ₁₂(x₁ₜ⊗φ(x₂ₜ))
    cs.push_back(one(
        "CCP9",
        desc("CCP9", {H}, {H, A, A},
             {tt().ap("cobrH", {0}, 0).ap(tth, {1}, 1),
              tt().ap(psi, {0}, 0).ap("copA", {1}, 1)},
             {tt().ap(bet, {0}, 0).ap(psi, {0}, 0),
              tt().ap(tth, {0}, 0).ap(phi, {0}, 0),
              tt().ap(alp, {0}, 0).ap(psi, {1}, 1).pm({1, 0, 2}),
              tt().ap(tth, {0}, 0).ap(phi, {1}, 1).pm({1, 0, 2})})));
    // CCP10: x⟨₁⟩⊗Δ_H(x⟨₀⟩)−x₁q⊗s(x₂q) = τψ(x₁)⊗x₂+τφ(x₍₋₁₎)⊗x₍₀₎
    //      +τ₁₂(x₁⊗τψ(x₂))+τ₁₂(x₍₀₎⊗τφ(x₍₁₎))
    cs.push_back(one(
        "CCP10",
        desc("CCP10", {H}, {A, H, H},
             {tt().ap(psi, {0}, 0).ap("copH", {0}, 0).pm({2, 0, 1}),
              tt(-1).ap(qq, {0}, 0).ap(ss, {1}, 1)},
             {tt().ap("copH", {0}, 0).ap(psi, {0}, 0).pm({1, 0, 2}),
              tt().ap(alp, {0}, 0).ap(phi, {0}, 0).pm({1, 0, 2}),
              tt().ap("copH", {0}, 0).ap(psi, {1}, 1).pm({2, 0, 1}),
              tt().ap(bet, {0}, 0).ap(phi, {1}, 1).pm({2, 0, 1})})));
    // CCP11: x⟨₁⟩⊗β(x⟨₀⟩)−x₁q⊗ρ(x₂q) = τψ(x₍₀₎)⊗x₍₁₎+τφ(x₁ₜ)⊗x₂ₜ
    //      −τ₁₂(x₍₀₎⊗δ_A(x₍₁₎))−τ₁₂(x₁⊗q(x₂))
    cs.push_back(one(
        "CCP11",
        desc("CCP11", {H}, {A, H, A},
             {tt().ap(psi, {0}, 0).ap(bet, {0}, 0).pm({2, 0, 1}),
              tt(-1).ap(qq, {0}, 0).ap(rho, {1}, 1)},
             {tt().ap(bet, {0}, 0).ap(psi, {0}, 0).pm({1, 0, 2}),
              tt().ap(tth, {0}, 0).ap(phi, {0}, 0).pm({1, 0, 2}),
              tt(-1).ap(bet, {0}, 0).ap("cobrA", {1}, 1).pm({1, 0, 2}),
              tt(-1).ap("copH", {0}, 0).ap(qq, {1}, 1).pm({1, 0, 2})})));
    // CCP12: x₁q⊗γ(x₂q)−x⟨₁⟩⊗α(x⟨₀⟩) = q(x₁)⊗x₂+δ_A(x₍₋₁₎)⊗x₍₀₎
    //      −τ₁₂(x₍₋₁₎⊗τψ(x₍₀₎))−τ₁₂(x₁ₜ⊗τφ(x₂ₜ))
    cs.push_back(one(
        "CCP12",
        desc("CCP12", {H}, {A, A, H},
             {tt().ap(qq, {0}, 0).ap(gam, {1}, 1),
              tt(-1).ap(psi, {0}, 0).ap(alp, {0}, 0).pm({2, 0, 1})},
             {tt().ap("copH", {0}, 0).ap(qq, {0}, 0),
              tt().ap(alp, {0}, 0).ap("cobrA", {0}, 0),
              tt(-1).ap(alp, {0}, 0).ap(psi, {1}, 1).pm({2, 0, 1}),
              tt(-1).ap(tth, {0}, 0).ap(phi, {1}, 1).pm({2, 0, 1})})));
    return cs;
}

// --- cocycle double matched pair CDM1-CDM24 --------------------------------
// These extend the double-matched-pair conditions by cocycle/cycle terms.

std::vector<ConditionEntry> cdm_conditions() {
    std::vector<ConditionEntry> cs;
    // CDM1 = DM1 with LHS +ψ(ν(a,b)) and RHS +ν(a₍₁₎,b)⊗a₍₂₎+ν(a,b₍₁₎)⊗b₍₂₎
    //       −b₁ₛ⊗(b₂ₛ⊳a)−a₂ₛ⊗(a₁ₛ⊳b)
    cs.push_back(one(
        "CDM1",
        desc("CDM1", {A, A}, {H, A},
             {tt().ap("mulA", {0, 1}, 0).ap(phi, {0}, 0),
              tt().ap(nu, {0, 1}, 0).ap(psi, {0}, 0)},
             {tt().ap(phi, {0}, 0).ap(lar, {0, 2}, 0),
              tt().ap(phi, {1}, 1).ap(rar, {0, 1}, 0),
              tt().ap(rho, {1}, 1).ap("brA", {0, 2}, 1),
              tt().ap(gam, {0}, 0).ap("brA", {2, 0}, 0).pm({1, 0}),
              tt().ap("cobrA", {0}, 0).ap(nu, {0, 2}, 0),
              tt().ap("cobrA", {1}, 1).ap(nu, {0, 1}, 0),
              tt(-1).ap(ss, {1}, 1).ap(tri, {2, 0}, 1),
              tt(-1).ap(ss, {0}, 0).ap(tri, {0, 2}, 1)})));
    // CDM2 = DM2 with LHS +τψ(ν(a,b)) and RHS −(a₁ₚ⇀b)⊗a₂ₚ−(a↼b₁ₚ)⊗b₂ₚ
    //       −b₁⊗θ(a,b₂)−a₂⊗θ(b,a₁)
    cs.push_back(one(
        "CDM2",
        desc("CDM2", {A, A}, {A, H},
             {tt().ap("mulA", {0, 1}, 0).ap(phi, {0}, 0).pm({1, 0}),
              tt().ap(nu, {0, 1}, 0).ap(psi, {0}, 0).pm({1, 0})},
             {tt().ap(phi, {0}, 0).ap("mulA", {1, 2}, 1).pm({1, 0}),
              tt().ap(phi, {1}, 1).ap("mulA", {0, 2}, 0),
              tt().ap(gam, {1}, 1).ap(tl, {2, 0}, 1),
              tt().ap(rho, {0}, 0).ap(tl, {0, 2}, 1),
              tt(-1).ap(pp, {0}, 0).ap(hpr, {0, 2}, 0),
              tt(-1).ap(pp, {1}, 1).ap(hpl, {0, 1}, 0),
              tt(-1).ap("copA", {1}, 1).ap(tht, {0, 2}, 1),
              tt(-1).ap("copA", {0}, 0).ap(tht, {2, 0}, 1)})));
    // CDM3 = DM3 with LHS +φ(ω(x,y)) and RHS +(x₁q→y)⊗x₂q+(x←y₁q)⊗y₂q
    //       +y₁⊗σ(x,y₂)+x₂⊗σ(y,x₁)
    cs.push_back(one(
        "CDM3",
        desc("CDM3", {H, H}, {H, A},
             {tt().ap("mulH", {0, 1}, 0).ap(psi, {0}, 0),
              tt().ap(omg, {0, 1}, 0).ap(phi, {0}, 0)},
             {tt().ap(psi, {0}, 0).ap("mulH", {0, 2}, 0),
              tt().ap(psi, {1}, 1).ap("mulH", {0, 1}, 0),
              tt().ap(bet, {1}, 1).ap(tri, {0, 2}, 1),
              tt().ap(alp, {0}, 0).ap(tri, {2, 0}, 1),
              tt().ap(qq, {0}, 0).ap(rar, {0, 2}, 0),
              tt().ap(qq, {1}, 1).ap(lar, {0, 1}, 0),
              tt().ap("copH", {1}, 1).ap(sig, {0, 2}, 1),
              tt().ap("copH", {0}, 0).ap(sig, {2, 0}, 1)})));
    // CDM4 = DM4 with LHS +τφ(ω(x,y)) and RHS −ω(x₍₁₎,y)⊗x₍₂₎−ω(x,y₍₁₎)⊗y₍₂₎
    //       −y₁ₜ⊗(x⊲y₂ₜ)−x₂ₜ⊗(y⊲x₁ₜ)
    cs.push_back(one(
        "CDM4",
        desc("CDM4", {H, H}, {A, H},
             {tt().ap("mulH", {0, 1}, 0).ap(psi, {0}, 0).pm({1, 0}),
              tt().ap(omg, {0, 1}, 0).ap(phi, {0}, 0).pm({1, 0})},
             {tt().ap(psi, {0}, 0).ap(hpl, {1, 2}, 0),
              tt().ap(psi, {1}, 1).ap(hpr, {0, 2}, 0),
              tt(-1).ap(alp, {1}, 1).ap("brH", {0, 2}, 1),
              tt(-1).ap(bet, {0}, 0).ap("brH", {2, 0}, 0).pm({1, 0}),
              tt(-1).ap("cobrH", {0}, 0).ap(omg, {0, 2}, 0),
              tt(-1).ap("cobrH", {1}, 1).ap(omg, {0, 1}, 0),
              tt(-1).ap(tth, {1}, 1).ap(tl, {0, 2}, 1),
              tt(-1).ap(tth, {0}, 0).ap(tl, {2, 0}, 1)})));
    // CDM5 = DM5 with LHS +q(x←b) and RHS +x₁q·b⊗x₂q+ω(x,b⟨₋₁⟩)⊗b⟨₀⟩
    //       +b₍₀₎⊗σ(x,b₍₁₎)+x₂ₜ⊗[b,x₁ₜ]
    cs.push_back(one(
        "CDM5",
        desc("CDM5", {H, A}, {A, A},
             {tt().ap(hpr, {0, 1}, 0).ap("cobrA", {0}, 0),
              tt().ap(lar, {0, 1}, 0).ap(qq, {0}, 0)},
             {tt().ap(psi, {0}, 0).ap(hpr, {0, 2}, 0),
              tt().ap("cobrA", {1}, 1).ap(hpr, {0, 1}, 0),
              tt(-1).ap(bet, {0}, 0).ap(tri, {0, 2}, 1),
              tt().ap("copA", {1}, 1).ap(tri, {0, 2}, 1),
              tt().ap(qq, {0}, 0).ap("mulA", {0, 2}, 0),
              tt().ap(phi, {1}, 1).ap(omg, {0, 1}, 0),
              tt().ap(gam, {1}, 1).ap(sig, {0, 2}, 1),
              tt().ap(tth, {0}, 0).ap("brA", {2, 0}, 1)})));
    // CDM6 = DM6 with LHS +q(a→y) and RHS +a·y₁q⊗y₂q+ω(a⟨₋₁⟩,y)⊗a⟨₀⟩
    //       +y₁ₜ⊗[a,y₂ₜ]+a₍₀₎⊗σ(y,a₍₋₁₎); inputs (y,a)
    cs.push_back(one(
        "CDM6",
        desc("CDM6", {H, A}, {A, A},
             {tt().ap(hpl, {1, 0}, 0).ap("cobrA", {0}, 0),
              tt().ap(rar, {1, 0}, 0).ap(qq, {0}, 0)},
             {tt().ap(psi, {0}, 0).ap(hpl, {2, 0}, 0),
              tt().ap("cobrA", {1}, 1).ap(hpl, {1, 0}, 0),
              tt(-1).ap(alp, {0}, 0).ap(tri, {1, 2}, 1),
              tt().ap("copA", {1}, 1).ap(tri, {0, 1}, 1),
              tt().ap(qq, {0}, 0).ap("mulA", {2, 0}, 0),
              tt().ap(phi, {1}, 1).ap(omg, {1, 0}, 0),
              tt().ap(tth, {0}, 0).ap("brA", {2, 1}, 1),
              tt().ap(rho, {1}, 1).ap(sig, {0, 1}, 1)})));
    // CDM7 = DM7 with LHS +p(x⇀b) and RHS −ν(x⟨₁⟩,b)⊗x⟨₀⟩+x·b₁ₚ⊗b₂ₚ
    //       +b₁ₛ⊗[x,b₂ₛ]+x₍₀₎⊗θ(b,x₍₋₁₎)
    cs.push_back(one(
        "CDM7",
        desc("CDM7", {H, A}, {H, H},
             {tt().ap(lar, {0, 1}, 0).ap("cobrH", {0}, 0),
              tt().ap(hpr, {0, 1}, 0).ap(pp, {0}, 0)},
             {tt().ap("cobrH", {0}, 0).ap(lar, {0, 2}, 0),
              tt(-1).ap(phi, {1}, 1).ap(lar, {0, 2}, 0),
              tt().ap(rho, {1}, 1).ap(tl, {0, 2}, 1),
              tt(-1).ap("copH", {0}, 0).ap(tl, {0, 2}, 1),
              tt(-1).ap(psi, {0}, 0).ap(nu, {1, 2}, 0),
              tt().ap(pp, {1}, 1).ap("mulH", {0, 1}, 0),
              tt().ap(ss, {1}, 1).ap("brH", {0, 2}, 1),
              tt().ap(alp, {0}, 0).ap(tht, {2, 0}, 1)})));
    // CDM8 = DM8 with LHS +p(a↼y) and RHS −ν(a,y⟨₁⟩)⊗y⟨₀⟩+a₁ₚ·y⊗a₂ₚ
    //       +a₂ₛ⊗[y,a₁ₛ]+y₍₀₎⊗θ(a,y₍₁₎); inputs (y,a)
    cs.push_back(one(
        "CDM8",
        desc("CDM8", {H, A}, {H, H},
             {tt().ap(rar, {1, 0}, 0).ap("cobrH", {0}, 0),
              tt().ap(hpl, {1, 0}, 0).ap(pp, {0}, 0)},
             {tt().ap("cobrH", {0}, 0).ap(rar, {2, 0}, 0),
              tt(-1).ap(phi, {1}, 1).ap(rar, {2, 0}, 0),
              tt().ap(gam, {1}, 1).ap(tl, {0, 1}, 1),
              tt(-1).ap("copH", {0}, 0).ap(tl, {1, 2}, 1),
              tt(-1).ap(psi, {0}, 0).ap(nu, {2, 1}, 0),
              tt().ap(pp, {1}, 1).ap("mulH", {1, 0}, 0),
              tt().ap(ss, {1}, 1).ap("brH", {0, 1}, 1),
              tt().ap(bet, {0}, 0).ap(tht, {2, 1}, 1)})));
    // CDM9 = DM9 with RHS +ν(x₁q,b)⊗x₂q+b₁ₛ⊗σ(x,b₂ₛ)
    cs.push_back(one(
        "CDM9",
        desc("CDM9", {H, A}, {H, A},
             {tt().ap(hpr, {0, 1}, 0).ap(phi, {0}, 0),
              tt().ap(lar, {0, 1}, 0).ap(psi, {0}, 0)},
             {tt().ap(psi, {0}, 0).ap(lar, {0, 2}, 0),
              tt().ap("cobrA", {1}, 1).ap(lar, {0, 1}, 0),
              tt().ap(phi, {1}, 1).ap("mulH", {0, 1}, 0),
              tt().ap(rho, {1}, 1).ap(tri, {0, 2}, 1),
              tt(-1).ap("copH", {0}, 0).ap(tri, {0, 2}, 1),
              tt().ap(alp, {0}, 0).ap("brA", {2, 0}, 1),
              tt().ap(qq, {0}, 0).ap(nu, {0, 2}, 0),
              tt().ap(ss, {1}, 1).ap(sig, {0, 2}, 1)})));
    // CDM10 = DM10 with RHS −ω(x,b₁ₚ)⊗b₂ₚ−x₂ₜ⊗θ(b,x₁ₜ)
    cs.push_back(one(
        "CDM10",
        desc("CDM10", {H, A}, {A, H},
             {tt().ap(hpr, {0, 1}, 0).ap(phi, {0}, 0).pm({1, 0}),
              tt().ap(lar, {0, 1}, 0).ap(psi, {0}, 0).pm({1, 0})},
             {tt().ap(psi, {0}, 0).ap("mulA", {1, 2}, 0),
              tt().ap(phi, {1}, 1).ap(hpr, {0, 2}, 0),
              tt().ap(bet, {0}, 0).ap(tl, {0, 2}, 1),
              tt(-1).ap("cobrH", {0}, 0).ap(hpr, {0, 2}, 0),
              tt(-1).ap(gam, {1}, 1).ap("brH", {0, 2}, 1),
              tt(-1).ap("copA", {1}, 1).ap(tl, {0, 2}, 1),
              tt(-1).ap(pp, {1}, 1).ap(omg, {0, 1}, 0),
              tt(-1).ap(tth, {0}, 0).ap(tht, {2, 0}, 1)})));
    // CDM11 = DM11 with RHS +ν(a,y₁q)⊗y₂q+a₂ₛ⊗σ(y,a₁ₛ); inputs (y,a)
    cs.push_back(one(
        "CDM11",
        desc("CDM11", {H, A}, {H, A},
             {tt().ap(hpl, {1, 0}, 0).ap(phi, {0}, 0),
              tt().ap(rar, {1, 0}, 0).ap(psi, {0}, 0)},
             {tt().ap(phi, {1}, 1).ap("mulH", {1, 0}, 0),
              tt().ap(psi, {0}, 0).ap(rar, {2, 0}, 0),
              tt().ap(bet, {0}, 0).ap("brA", {2, 1}, 1),
              tt(-1).ap("cobrA", {1}, 1).ap(rar, {1, 0}, 0),
              tt().ap(gam, {1}, 1).ap(tri, {0, 1}, 1),
              tt(-1).ap("copH", {0}, 0).ap(tri, {1, 2}, 1),
              tt().ap(qq, {0}, 0).ap(nu, {2, 0}, 0),
              tt().ap(ss, {1}, 1).ap(sig, {0, 1}, 1)})));
    // CDM12 = DM12 with RHS −ω(a₁ₚ,y)⊗a₂ₚ−y₁ₜ⊗θ(a,y₂ₜ); inputs (y,a)
    cs.push_back(one(
        "CDM12",
        desc("CDM12", {H, A}, {A, H},
             {tt().ap(hpl, {1, 0}, 0).ap(phi, {0}, 0).pm({1, 0}),
              tt().ap(rar, {1, 0}, 0).ap(psi, {0}, 0).pm({1, 0})},
             {tt().ap(psi, {0}, 0).ap("mulA", {2, 1}, 0),
              tt().ap(phi, {1}, 1).ap(hpl, {2, 0}, 0),
              tt().ap(alp, {0}, 0).ap(tl, {1, 2}, 1),
              tt(-1).ap("cobrH", {0}, 0).ap(hpl, {2, 0}, 0),
              tt(-1).ap(rho, {1}, 1).ap("brH", {0, 1}, 0).pm({1, 0}),
              tt(-1).ap("copA", {1}, 1).ap(tl, {0, 1}, 1),
              tt(-1).ap(pp, {1}, 1).ap(omg, {1, 0}, 0),
              tt(-1).ap(tth, {0}, 0).ap(tht, {2, 1}, 1)})));
    // CDM13 = DM13 with LHS +β(θ(a,b)) and RHS +θ(a,b₁)⊗b₂−b₁ₛ⊗(b₂ₛ⊳a)
    //        +ν(a₍₁₎,b)⊗a₍₂₎−a₁ₚ⊗(b↼a₂ₚ)
    cs.push_back(one(
        "CDM13",
        desc("CDM13", {A, A}, {H, A},
             {tt().ap("brA", {0, 1}, 0).ap(rho, {0}, 0),
              tt().ap(tht, {0, 1}, 0).ap(bet, {0}, 0)},
             {tt().ap(phi, {0}, 0).ap(lar, {0, 2}, 0),
              tt(-1).ap(rho, {1}, 1).ap(tl, {1, 0}, 0),
              tt().ap(rho, {1}, 1).ap("brA", {0, 2}, 1),
              tt(-1).ap(phi, {0}, 0).ap("mulA", {2, 1}, 1),
              tt().ap("copA", {1}, 1).ap(tht, {0, 1}, 0),
              tt(-1).ap(ss, {1}, 1).ap(tri, {2, 0}, 1),
              tt().ap("cobrA", {0}, 0).ap(nu, {0, 2}, 0),
              tt(-1).ap(pp, {0}, 0).ap(hpl, {2, 1}, 1)})));
    // CDM14 = DM14 with LHS +ρ(σ(x,y)) and RHS +(x⊲y₁ₜ)⊗y₂ₜ+y₁⊗σ(x,y₂)
    //        +(x₁q→y)⊗x₂q−x₍₁₎⊗ω(y,x₍₂₎)
    cs.push_back(one(
        "CDM14",
        desc("CDM14", {H, H}, {H, A},
             {tt().ap("brH", {0, 1}, 0).ap(bet, {0}, 0),
              tt().ap(sig, {0, 1}, 0).ap(rho, {0}, 0)},
             {tt().ap(bet, {1}, 1).ap("brH", {0, 1}, 0),
              tt().ap(bet, {1}, 1).ap(tri, {0, 2}, 1),
              tt(-1).ap(psi, {0}, 0).ap(hpr, {2, 1}, 1),
              tt().ap(psi, {0}, 0).ap("mulH", {0, 2}, 0),
              tt().ap(tth, {1}, 1).ap(tl, {0, 1}, 0),
              tt().ap("copH", {1}, 1).ap(sig, {0, 2}, 1),
              tt().ap(qq, {0}, 0).ap(rar, {0, 2}, 0),
              tt(-1).ap("cobrH", {0}, 0).ap(omg, {2, 1}, 1)})));
    // CDM15 = DM15 with LHS +α(θ(a,b)) and RHS −a₍₁₎⊗ν(b,a₍₂₎)+b₁⊗θ(a,b₂)
    //        −(b₁ₛ⊳a)⊗b₂ₛ+a₍₂₎⊗ν(a₍₁₎,b)
    cs.push_back(one(
        "CDM15",
        desc("CDM15", {A, A}, {A, H},
             {tt().ap("brA", {0, 1}, 0).ap(gam, {0}, 0),
              tt().ap(tht, {0, 1}, 0).ap(alp, {0}, 0)},
             {tt().ap(phi, {0}, 0).ap(rar, {2, 0}, 0).pm({1, 0}),
              tt(-1).ap(gam, {1}, 1).ap(tl, {2, 0}, 1),
              tt().ap(gam, {1}, 1).ap("brA", {0, 1}, 0),
              tt().ap(phi, {0}, 0).ap(lar, {0, 2}, 1),
              tt(-1).ap("cobrA", {0}, 0).ap(nu, {2, 1}, 1),
              tt().ap("copA", {1}, 1).ap(tht, {0, 2}, 1),
              tt(-1).ap(ss, {1}, 1).ap(tri, {1, 0}, 0),
              tt().ap("cobrA", {0}, 0).ap(nu, {0, 2}, 1)})));
    // CDM16 = DM16 with LHS +γ(σ(x,y)) and RHS +y₁ₜ⊗(x⊲y₂ₜ)+σ(x,y₁)⊗y₂
    //        −x₁q⊗(y←x₂q)+ω(x₍₁₎,y)⊗x₍₂₎
    cs.push_back(one(
        "CDM16",
        desc("CDM16", {H, H}, {A, H},
             {tt().ap("brH", {0, 1}, 0).ap(alp, {0}, 0),
              tt().ap(sig, {0, 1}, 0).ap(gam, {0}, 0)},
             {tt().ap(alp, {1}, 1).ap("brH", {0, 2}, 1),
              tt().ap(alp, {1}, 1).ap(tri, {0, 1}, 0),
              tt(-1).ap(psi, {0}, 0).ap(hpl, {1, 2}, 0),
              tt().ap(psi, {0}, 0).ap("mulH", {2, 0}, 1),
              tt().ap(tth, {1}, 1).ap(tl, {0, 2}, 1),
              tt().ap("copH", {1}, 1).ap(sig, {0, 1}, 0),
              tt(-1).ap(qq, {0}, 0).ap(lar, {2, 1}, 1),
              tt().ap("cobrH", {0}, 0).ap(omg, {0, 2}, 0)})));
    // CDM17 = DM17 with LHS +t(x⊲b) and RHS +σ(x,b₍₋₁₎)⊗b₍₀₎+b₍₀₎⊗σ(x,b₍₁₎)
    //        +x₁q·b⊗x₂q−x₁q⊗b·x₂q
    cs.push_back(one(
        "CDM17",
        desc("CDM17", {H, A}, {A, A},
             {tt().ap(tri, {0, 1}, 0).ap("copA", {0}, 0),
              tt().ap(tl, {0, 1}, 0).ap(tth, {0}, 0)},
             {tt().ap("copA", {1}, 1).ap(tri, {0, 1}, 0),
              tt().ap("copA", {1}, 1).ap(tri, {0, 2}, 1),
              tt().ap(psi, {0}, 0).ap(hpr, {0, 2}, 0),
              tt().ap(psi, {0}, 0).ap(hpl, {2, 0}, 1),
              tt().ap(rho, {1}, 1).ap(sig, {0, 1}, 0),
              tt().ap(gam, {1}, 1).ap(sig, {0, 2}, 1),
              tt().ap(qq, {0}, 0).ap("mulA", {0, 2}, 0),
              tt(-1).ap(qq, {0}, 0).ap("mulA", {2, 1}, 1)})));
    // CDM18 = DM18 with LHS +t(y⊲a) and RHS −[a,y₁ₜ]⊗y₂ₜ−y₁ₜ⊗[a,y₂ₜ]
    //        −a⟨₀⟩⊗ω(y,a⟨₋₁⟩)−ω(a⟨₋₁⟩,y)⊗a⟨₀⟩; inputs (y,a)
    cs.push_back(one(
        "CDM18",
        desc("CDM18", {H, A}, {A, A},
             {tt().ap(tri, {0, 1}, 0).ap("copA", {0}, 0),
              tt().ap(tl, {0, 1}, 0).ap(tth, {0}, 0)},
             {tt(-1).ap("cobrA", {1}, 1).ap(hpl, {1, 0}, 0),
              tt().ap("cobrA", {1}, 1).ap(hpr, {0, 2}, 1),
              tt().ap(bet, {0}, 0).ap(tri, {0, 2}, 0),
              tt().ap(alp, {0}, 0).ap(tri, {1, 2}, 1),
              tt(-1).ap(tth, {0}, 0).ap("brA", {2, 0}, 0),
              tt(-1).ap(tth, {0}, 0).ap("brA", {2, 1}, 1),
              tt(-1).ap(phi, {1}, 1).ap(omg, {0, 1}, 1),
              tt(-1).ap(phi, {1}, 1).ap(omg, {1, 0}, 0)})));
    // CDM19 = DM19 with LHS +s(x⊳b) and RHS +[x,b₁ₛ]⊗b₂ₛ+b₁ₛ⊗[x,b₂ₛ]
    //        −ν(x⟨₁⟩,b)⊗x⟨₀⟩−x⟨₀⟩⊗ν(b,x⟨₁⟩)
    cs.push_back(one(
        "CDM19",
        desc("CDM19", {H, A}, {H, H},
             {tt().ap(tl, {0, 1}, 0).ap("copH", {0}, 0),
              tt().ap(tri, {0, 1}, 0).ap(ss, {0}, 0)},
             {tt().ap(gam, {1}, 1).ap(tl, {0, 1}, 0),
              tt().ap(rho, {1}, 1).ap(tl, {0, 2}, 1),
              tt().ap("cobrH", {0}, 0).ap(lar, {0, 2}, 0),
              tt(-1).ap("cobrH", {0}, 0).ap(rar, {2, 1}, 1),
              tt().ap(ss, {1}, 1).ap("brH", {0, 1}, 0),
              tt().ap(ss, {1}, 1).ap("brH", {0, 2}, 1),
              tt(-1).ap(psi, {0}, 0).ap(nu, {1, 2}, 0),
              tt(-1).ap(psi, {0}, 0).ap(nu, {2, 1}, 1)})));
    // CDM20 = DM20 with LHS +s(y⊳a) and RHS −θ(a,y₍₋₁₎)⊗y₍₀₎−y₍₀₎⊗θ(a,y₍₁₎)
    //        −a₁ₚ·y⊗a₂ₚ+a₁ₚ⊗y·a₂ₚ; inputs (y,a)
    cs.push_back(one(
        "CDM20",
        desc("CDM20", {H, A}, {H, H},
             {tt().ap(tl, {0, 1}, 0).ap("copH", {0}, 0),
              tt().ap(tri, {0, 1}, 0).ap(ss, {0}, 0)},
             {tt().ap("copH", {0}, 0).ap(tl, {0, 2}, 0),
              tt().ap("copH", {0}, 0).ap(tl, {1, 2}, 1),
              tt().ap(phi, {1}, 1).ap(rar, {2, 0}, 0),
              tt().ap(phi, {1}, 1).ap(lar, {0, 2}, 1),
              tt(-1).ap(alp, {0}, 0).ap(tht, {2, 0}, 0),
              tt(-1).ap(bet, {0}, 0).ap(tht, {2, 1}, 1),
              tt(-1).ap(pp, {1}, 1).ap("mulH", {1, 0}, 0),
              tt().ap(pp, {1}, 1).ap("mulH", {0, 1}, 1)})));
    // CDM21 = DM21 with RHS +b₁ₛ⊗σ(x,b₂ₛ)+ν(x₁q,b)⊗x₂q
    cs.push_back(one(
        "CDM21",
        desc("CDM21", {H, A}, {H, A},
             {tt().ap(tri, {0, 1}, 0).ap(rho, {0}, 0),
              tt().ap(tl, {0, 1}, 0).ap(bet, {0}, 0)},
             {tt().ap("copA", {1}, 1).ap(tl, {0, 1}, 0),
              tt().ap(rho, {1}, 1).ap("brH", {0, 1}, 0),
              tt().ap(rho, {1}, 1).ap(tri, {0, 2}, 1),
              tt(-1).ap(psi, {0}, 0).ap("mulA", {2, 1}, 1),
              tt().ap(psi, {0}, 0).ap(lar, {0, 2}, 0),
              tt(-1).ap("cobrH", {0}, 0).ap(hpl, {2, 1}, 1),
              tt().ap(ss, {1}, 1).ap(sig, {0, 2}, 1),
              tt().ap(qq, {0}, 0).ap(nu, {0, 2}, 0)})));
    // CDM22 = DM22 with RHS −θ(a,y₁ₜ)⊗y₂ₜ+a₁ₚ⊗ω(y,a₂ₚ); inputs (y,a)
    cs.push_back(one(
        "CDM22",
        desc("CDM22", {H, A}, {H, A},
             {tt().ap(tri, {0, 1}, 0).ap(rho, {0}, 0),
              tt().ap(tl, {0, 1}, 0).ap(bet, {0}, 0)},
             {tt().ap(bet, {0}, 0).ap(tl, {0, 2}, 0),
              tt(-1).ap(bet, {0}, 0).ap("brA", {2, 1}, 1),
              tt(-1).ap("cobrA", {1}, 1).ap(rar, {1, 0}, 0),
              tt(-1).ap(phi, {1}, 1).ap("mulH", {1, 0}, 0),
              tt().ap("copH", {0}, 0).ap(tri, {1, 2}, 1),
              tt().ap(phi, {1}, 1).ap(hpr, {0, 2}, 1),
              tt(-1).ap(tth, {0}, 0).ap(tht, {2, 0}, 0),
              tt().ap(pp, {1}, 1).ap(omg, {0, 2}, 1)})));
    // CDM23 = DM23 with RHS +σ(x,b₁ₛ)⊗b₂ₛ−x₁q⊗ν(b,x₂q)
    cs.push_back(one(
        "CDM23",
        desc("CDM23", {H, A}, {A, H},
             {tt().ap(tri, {0, 1}, 0).ap(gam, {0}, 0),
              tt().ap(tl, {0, 1}, 0).ap(alp, {0}, 0)},
             {tt().ap("copA", {1}, 1).ap(tl, {0, 2}, 1),
              tt().ap(gam, {1}, 1).ap("brH", {0, 2}, 1),
              tt().ap(gam, {1}, 1).ap(tri, {0, 1}, 0),
              tt().ap(psi, {0}, 0).ap(rar, {2, 0}, 1),
              tt().ap("cobrH", {0}, 0).ap(hpr, {0, 2}, 0),
              tt(-1).ap(psi, {0}, 0).ap("mulA", {1, 2}, 0),
              tt().ap(ss, {1}, 1).ap(sig, {0, 1}, 0),
              tt(-1).ap(qq, {0}, 0).ap(nu, {2, 1}, 1)})));
    // CDM24 = DM24 with RHS −y₁ₜ⊗θ(a,y₂ₜ)−ω(a₁ₚ,y)⊗a₂ₚ; inputs (y,a)
    cs.push_back(one(
        "CDM24",
        desc("CDM24", {H, A}, {A, H},
             {tt().ap(tri, {0, 1}, 0).ap(gam, {0}, 0),
              tt().ap(tl, {0, 1}, 0).ap(alp, {0}, 0)},
             {tt().ap(alp, {0}, 0).ap(tl, {1, 2}, 1),
              tt(-1).ap(alp, {0}, 0).ap("brA", {2, 0}, 0),
              tt().ap("copH", {0}, 0).ap(tri, {0, 2}, 0),
              tt(-1).ap(phi, {1}, 1).ap("mulH", {0, 1}, 0).pm({1, 0}),
              tt().ap("cobrA", {1}, 1).ap(lar, {0, 2}, 1),
              tt().ap(phi, {1}, 1).ap(hpl, {2, 0}, 0),
              tt(-1).ap(tth, {0}, 0).ap(tht, {2, 1}, 1),
              tt(-1).ap(pp, {1}, 1).ap(omg, {1, 0}, 0)})));
    return cs;
}

// --- cocycle braided conditions CBB1-CBB4 ----------------------------------

std::vector<ConditionEntry> cbb_conditions() {
    std::vector<ConditionEntry> cs;
    // CBB1: δ_A(ab)+q(ν(a,b)) = braided compatibility of A (inputs a,b)
    cs.push_back(one(
        "CBB1",
        desc("CBB1", {A, A}, {A, A},
             {tt().ap("mulA", {0, 1}, 0).ap("cobrA", {0}, 0),
              tt().ap(nu, {0, 1}, 0).ap(qq, {0}, 0)},
             {tt().ap("cobrA", {0}, 0).ap("mulA", {0, 2}, 0),
              tt().ap(phi, {0}, 0).ap(hpr, {0, 2}, 0),
              tt().ap("cobrA", {1}, 1).ap("mulA", {0, 1}, 0),
              tt().ap(phi, {1}, 1).ap(hpl, {0, 1}, 0),
              tt().ap("copA", {1}, 1).ap("brA", {0, 2}, 1),
              tt(-1).ap(gam, {1}, 1).ap(tri, {2, 0}, 1),
              tt().ap("copA", {0}, 0).ap("brA", {2, 0}, 1),
              tt(-1).ap(rho, {0}, 0).ap(tri, {0, 2}, 1)})));
    // CBB2: Δ_A([a,b])+t(θ(a,b)) = braided co-compatibility of A
    cs.push_back(one(
        "CBB2",
        desc("CBB2", {A, A}, {A, A},
             {tt().ap("brA", {0, 1}, 0).ap("copA", {0}, 0),
              tt().ap(tht, {0, 1}, 0).ap(tth, {0}, 0)},
             {tt().ap("copA", {1}, 1).ap("brA", {0, 1}, 0),
              tt(-1).ap(rho, {1}, 1).ap(tri, {1, 0}, 0),
              tt().ap("copA", {1}, 1).ap("brA", {0, 2}, 1),
              tt(-1).ap(gam, {1}, 1).ap(tri, {2, 0}, 1),
              tt().ap("cobrA", {0}, 0).ap("mulA", {0, 2}, 0),
              tt().ap(phi, {0}, 0).ap(hpr, {0, 2}, 0),
              tt(-1).ap("cobrA", {0}, 0).ap("mulA", {2, 1}, 1),
              tt().ap(phi, {0}, 0).ap(hpl, {2, 0}, 1)})));
    // CBB3: δ_H(xy)+p(ω(x,y)) = braided compatibility of H (inputs x,y)
    cs.push_back(one(
        "CBB3",
        desc("CBB3", {H, H}, {H, H},
             {tt().ap("mulH", {0, 1}, 0).ap("cobrH", {0}, 0),
              tt().ap(omg, {0, 1}, 0).ap(pp, {0}, 0)},
             {tt().ap("cobrH", {0}, 0).ap("mulH", {0, 2}, 0),
              tt(-1).ap(psi, {0}, 0).ap(rar, {1, 2}, 0),
              tt().ap("cobrH", {1}, 1).ap("mulH", {0, 1}, 0),
              tt(-1).ap(psi, {1}, 1).ap(lar, {0, 2}, 0),
              tt().ap("copH", {1}, 1).ap("brH", {0, 2}, 1),
              tt().ap(bet, {1}, 1).ap(tl, {0, 2}, 1),
              tt().ap("copH", {0}, 0).ap("brH", {2, 0}, 1),
              tt().ap(alp, {0}, 0).ap(tl, {2, 0}, 1)})));
    // CBB4: Δ_H([x,y])+s(σ(x,y)) = braided co-compatibility of H
    cs.push_back(one(
        "CBB4",
        desc("CBB4", {H, H}, {H, H},
             {tt().ap("brH", {0, 1}, 0).ap("copH", {0}, 0),
              tt().ap(sig, {0, 1}, 0).ap(ss, {0}, 0)},
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

}  // namespace

void register_cocycle_sets(std::map<std::string, ConditionSet>& reg) {
    reg.emplace("CC", ConditionSet{"CC", "cocycle and cycle laws",
                                   cc_conditions()});
    reg.emplace("CP", ConditionSet{"CP", "cocycle cross product system",
                                   cp_conditions()});
    reg.emplace("CCP", ConditionSet{"CCP", "cycle cross coproduct system",
                                    ccp_conditions()});
    reg.emplace("CDM",
                ConditionSet{"CDM", "cocycle double matched pair conditions",
                             cdm_conditions()});
    reg.emplace("CBB", ConditionSet{"CBB", "cocycle braided compatibilities",
                                    cbb_conditions()});
}

}  // namespace pforge
