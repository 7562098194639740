#include "pforge/registry.hpp"

//
// Morphism-pair conditions: given two extending data of the same kind over a
// shared base A, the pair (r: V→A, s: V→V) defines the A-stabilizing map
// φ(a,x) = (a + r(x), s(x)) between the two unified products.  Each set below
// is the block decomposition of "φ is a structure homomorphism": evaluating
// φ on a (co)product and sorting by input sector and output block gives one
// identity per condition.  Maps of the second datum carry the suffix "2";
// blocks that the literature folds into a neighbouring identity (mirror
// sectors, swapped-leg blocks, base-map agreement) are bundled as additional
// descriptors of the same numbered condition.
//

namespace pforge {

namespace {

const std::string A = "A", H = "H";
const std::string r = "r_VA", sm = "s_VV";
const std::string rar = "rar_AH", lar = "lar_HA", tri = "tri_HA",
                  tl = "tl_HA", hpr = "hpr_HA", hpl = "hpl_AH";
const std::string alp = "alpha_H", bet = "beta_H", phi = "phi_A",
                  psi = "psi_H", rho = "rho_A", gam = "gamma_A";
const std::string sig = "sigma_HH", omg = "omega_HH", tht = "theta_AA",
                  nu = "nu_AA", pp = "p_A", ss = "s_A", qq = "q_H",
                  tth = "t_H";
// Second datum.
const std::string brA2 = "brA2", mulA2 = "mulA2", brH2 = "brH2",
                  mulH2 = "mulH2", cobrA2 = "cobrA2", copA2 = "copA2",
                  cobrH2 = "cobrH2", copH2 = "copH2";
const std::string rar2 = "rar_AH2", lar2 = "lar_HA2", tri2 = "tri_HA2",
                  tl2 = "tl_HA2", hpr2 = "hpr_HA2", hpl2 = "hpl_AH2";
const std::string alp2 = "alpha_H2", bet2 = "beta_H2", phi2 = "phi_A2",
                  psi2 = "psi_H2", rho2 = "rho_A2", gam2 = "gamma_A2";
const std::string sig2 = "sigma_HH2", omg2 = "omega_HH2", tht2 = "theta_AA2",
                  nu2 = "nu_AA2", pp2 = "p_A2", ss2 = "s_A2", qq2 = "q_H2",
                  tth2 = "t_H2";

IdentityDescriptor desc(const std::string& id, std::vector<std::string> in,
                        std::vector<std::string> out,
                        std::vector<TensorTerm> lhs,
                        std::vector<TensorTerm> rhs) {
    return IdentityDescriptor{id, std::move(in), std::move(out),
                              std::move(lhs), std::move(rhs)};
}

ConditionEntry entry(const std::string& cond_id,
                     std::vector<IdentityDescriptor> ds) {
    return ConditionEntry{cond_id, std::move(ds)};
}

// --- kind a1: (r,s) against brackets/products twisted by theta/nu ----------

std::vector<ConditionEntry> mor_a1() {
    std::vector<ConditionEntry> cs;
    // (1) r(x⊲a) = [r(x),a]'   (mirror sector: -r(x⊲a) = [a,r(x)]')
    cs.push_back(entry(
        "(1)",
        {desc("MOR_A1(1)", {H, A}, {A},
              {tt().ap(tl, {0, 1}, 0).ap(r, {0}, 0)},
              {tt().ap(r, {0}, 0).ap(brA2, {0, 1}, 0)}),
         desc("MOR_A1(1m)", {H, A}, {A},
              {tt(-1).ap(tl, {0, 1}, 0).ap(r, {0}, 0)},
              {tt().ap(r, {0}, 0).ap(brA2, {1, 0}, 0)})}));
    // (2) [a,b]' = [a,b] + r(θ(a,b))
    cs.push_back(entry(
        "(2)", {desc("MOR_A1(2)", {A, A}, {A},
                     {tt().ap(brA2, {0, 1}, 0)},
                     {tt().ap("brA", {0, 1}, 0),
                      tt().ap(tht, {0, 1}, 0).ap(r, {0}, 0)})}));
    // (3) r([x,y]) = [r(x),r(y)]'
    cs.push_back(entry(
        "(3)", {desc("MOR_A1(3)", {H, H}, {A},
                     {tt().ap("brH", {0, 1}, 0).ap(r, {0}, 0)},
                     {tt().ap(r, {0}, 0).ap(r, {1}, 1).ap(brA2, {0, 1}, 0)})}));
    // (4) s(x⊲a) = s(x)⊲'a + θ'(r(x),a)   (mirror: -s(x⊲a) = -s(x)⊲'a+θ'(a,r(x)))
    cs.push_back(entry(
        "(4)",
        {desc("MOR_A1(4)", {H, A}, {H},
              {tt().ap(tl, {0, 1}, 0).ap(sm, {0}, 0)},
              {tt().ap(sm, {0}, 0).ap(tl2, {0, 1}, 0),
               tt().ap(r, {0}, 0).ap(tht2, {0, 1}, 0)}),
         desc("MOR_A1(4m)", {H, A}, {H},
              {tt(-1).ap(tl, {0, 1}, 0).ap(sm, {0}, 0)},
              {tt(-1).ap(sm, {0}, 0).ap(tl2, {0, 1}, 0),
               tt().ap(r, {0}, 0).ap(tht2, {1, 0}, 0)})}));
    // (5) θ'(a,b) = s(θ(a,b))
    cs.push_back(entry(
        "(5)", {desc("MOR_A1(5)", {A, A}, {H},
                     {tt().ap(tht2, {0, 1}, 0)},
                     {tt().ap(tht, {0, 1}, 0).ap(sm, {0}, 0)})}));
    // (6) s([x,y]) = [s(x),s(y)]' + s(x)⊲'r(y) - s(y)⊲'r(x) + θ'(r(x),r(y))
    cs.push_back(entry(
        "(6)",
        {desc("MOR_A1(6)", {H, H}, {H},
              {tt().ap("brH", {0, 1}, 0).ap(sm, {0}, 0)},
              {tt().ap(sm, {0}, 0).ap(sm, {1}, 1).ap(brH2, {0, 1}, 0),
               tt().ap(sm, {0}, 0).ap(r, {1}, 1).ap(tl2, {0, 1}, 0),
               tt(-1).ap(sm, {1}, 1).ap(r, {0}, 0).ap(tl2, {1, 0}, 0),
               tt().ap(r, {0}, 0).ap(r, {1}, 1).ap(tht2, {0, 1}, 0)})}));
    // (7) r(x←a) = r(x)·'a
    cs.push_back(entry(
        "(7)", {desc("MOR_A1(7)", {H, A}, {A},
                     {tt().ap(lar, {0, 1}, 0).ap(r, {0}, 0)},
                     {tt().ap(r, {0}, 0).ap(mulA2, {0, 1}, 0)})}));
    // (8) r(a→y) = a·'r(y)
    cs.push_back(entry(
        "(8)", {desc("MOR_A1(8)", {H, A}, {A},
                     {tt().ap(rar, {1, 0}, 0).ap(r, {0}, 0)},
                     {tt().ap(r, {0}, 0).ap(mulA2, {1, 0}, 0)})}));
    // (9) a·'b = ab + r(ν(a,b))
    cs.push_back(entry(
        "(9)", {desc("MOR_A1(9)", {A, A}, {A},
                     {tt().ap(mulA2, {0, 1}, 0)},
                     {tt().ap("mulA", {0, 1}, 0),
                      tt().ap(nu, {0, 1}, 0).ap(r, {0}, 0)})}));
    // (10) r(xy) = r(x)·'r(y)
    cs.push_back(entry(
        "(10)",
        {desc("MOR_A1(10)", {H, H}, {A},
              {tt().ap("mulH", {0, 1}, 0).ap(r, {0}, 0)},
              {tt().ap(r, {0}, 0).ap(r, {1}, 1).ap(mulA2, {0, 1}, 0)})}));
    // (11) s(x←a) = s(x)←'a + ν'(r(x),a)
    cs.push_back(entry(
        "(11)", {desc("MOR_A1(11)", {H, A}, {H},
                      {tt().ap(lar, {0, 1}, 0).ap(sm, {0}, 0)},
                      {tt().ap(sm, {0}, 0).ap(lar2, {0, 1}, 0),
                       tt().ap(r, {0}, 0).ap(nu2, {0, 1}, 0)})}));
    // (12) s(a→y) = a→'s(y) + ν'(a,r(y))
    cs.push_back(entry(
        "(12)", {desc("MOR_A1(12)", {H, A}, {H},
                      {tt().ap(rar, {1, 0}, 0).ap(sm, {0}, 0)},
                      {tt().ap(sm, {0}, 0).ap(rar2, {1, 0}, 0),
                       tt().ap(r, {0}, 0).ap(nu2, {1, 0}, 0)})}));
    // (13) ν'(a,b) = s(ν(a,b))
    cs.push_back(entry(
        "(13)", {desc("MOR_A1(13)", {A, A}, {H},
                      {tt().ap(nu2, {0, 1}, 0)},
                      {tt().ap(nu, {0, 1}, 0).ap(sm, {0}, 0)})}));
    // (14) s(xy) = s(x)·'s(y) + s(x)←'r(y) + r(x)→'s(y) + ν'(r(x),r(y))
    cs.push_back(entry(
        "(14)",
        {desc("MOR_A1(14)", {H, H}, {H},
              {tt().ap("mulH", {0, 1}, 0).ap(sm, {0}, 0)},
              {tt().ap(sm, {0}, 0).ap(sm, {1}, 1).ap(mulH2, {0, 1}, 0),
               tt().ap(sm, {0}, 0).ap(r, {1}, 1).ap(lar2, {0, 1}, 0),
               tt().ap(r, {0}, 0).ap(sm, {1}, 1).ap(rar2, {0, 1}, 0),
               tt().ap(r, {0}, 0).ap(r, {1}, 1).ap(nu2, {0, 1}, 0)})}));
    return cs;
}

// --- kind a2: (r,s) against the action/cocycle datum ------------------------

std::vector<ConditionEntry> mor_a2() {
    std::vector<ConditionEntry> cs;
    // (1) r([x,y]) = [r(x),r(y)]' + σ'(s(x),s(y)) - σ(x,y)
    //              + s(x)⊳'r(y) - s(y)⊳'r(x)   (base: [a,b]' = [a,b])
    cs.push_back(entry(
        "(1)",
        {desc("MOR_A2(1)", {H, H}, {A},
              {tt().ap("brH", {0, 1}, 0).ap(r, {0}, 0)},
              {tt().ap(r, {0}, 0).ap(r, {1}, 1).ap(brA2, {0, 1}, 0),
               tt().ap(sm, {0}, 0).ap(sm, {1}, 1).ap(sig2, {0, 1}, 0),
               tt(-1).ap(sig, {0, 1}, 0),
               tt().ap(sm, {0}, 0).ap(r, {1}, 1).ap(tri2, {0, 1}, 0),
               tt(-1).ap(sm, {1}, 1).ap(r, {0}, 0).ap(tri2, {1, 0}, 0)}),
         desc("MOR_A2(1b)", {A, A}, {A}, {tt().ap(brA2, {0, 1}, 0)},
              {tt().ap("brA", {0, 1}, 0)})}));
    // (2) s([x,y]) = s(x)⊲'r(y) - s(y)⊲'r(x) + [s(x),s(y)]'
    cs.push_back(entry(
        "(2)",
        {desc("MOR_A2(2)", {H, H}, {H},
              {tt().ap("brH", {0, 1}, 0).ap(sm, {0}, 0)},
              {tt().ap(sm, {0}, 0).ap(r, {1}, 1).ap(tl2, {0, 1}, 0),
               tt(-1).ap(sm, {1}, 1).ap(r, {0}, 0).ap(tl2, {1, 0}, 0),
               tt().ap(sm, {0}, 0).ap(sm, {1}, 1).ap(brH2, {0, 1}, 0)})}));
    // (3) r(x⊲a) = [r(x),a]' + s(x)⊳'a - x⊳a
    //     (mirror: -x⊳a - r(x⊲a) = [a,r(x)]' - s(x)⊳'a)
    cs.push_back(entry(
        "(3)",
        {desc("MOR_A2(3)", {H, A}, {A},
              {tt().ap(tl, {0, 1}, 0).ap(r, {0}, 0)},
              {tt().ap(r, {0}, 0).ap(brA2, {0, 1}, 0),
               tt().ap(sm, {0}, 0).ap(tri2, {0, 1}, 0),
               tt(-1).ap(tri, {0, 1}, 0)}),
         desc("MOR_A2(3m)", {H, A}, {A},
              {tt(-1).ap(tri, {0, 1}, 0),
               tt(-1).ap(tl, {0, 1}, 0).ap(r, {0}, 0)},
              {tt().ap(r, {0}, 0).ap(brA2, {1, 0}, 0),
               tt(-1).ap(sm, {0}, 0).ap(tri2, {0, 1}, 0)})}));
    // (4) s(x⊲a) = s(x)⊲'a
    cs.push_back(entry(
        "(4)", {desc("MOR_A2(4)", {H, A}, {H},
                     {tt().ap(tl, {0, 1}, 0).ap(sm, {0}, 0)},
                     {tt().ap(sm, {0}, 0).ap(tl2, {0, 1}, 0)})}));
    // (5) r(xy) = r(x)·'r(y) + ω'(s(x),s(y)) - ω(x,y)
    //           + s(x)⇀'r(y) + r(x)↼'s(y)   (base: a·'b = ab)
    cs.push_back(entry(
        "(5)",
        {desc("MOR_A2(5)", {H, H}, {A},
              {tt().ap("mulH", {0, 1}, 0).ap(r, {0}, 0)},
              {tt().ap(r, {0}, 0).ap(r, {1}, 1).ap(mulA2, {0, 1}, 0),
               tt().ap(sm, {0}, 0).ap(sm, {1}, 1).ap(omg2, {0, 1}, 0),
               tt(-1).ap(omg, {0, 1}, 0),
               tt().ap(sm, {0}, 0).ap(r, {1}, 1).ap(hpr2, {0, 1}, 0),
               tt().ap(r, {0}, 0).ap(sm, {1}, 1).ap(hpl2, {0, 1}, 0)}),
         desc("MOR_A2(5b)", {A, A}, {A}, {tt().ap(mulA2, {0, 1}, 0)},
              {tt().ap("mulA", {0, 1}, 0)})}));
    // (6) s(xy) = r(x)→'s(y) + s(x)←'r(y) + s(x)·'s(y)
    cs.push_back(entry(
        "(6)",
        {desc("MOR_A2(6)", {H, H}, {H},
              {tt().ap("mulH", {0, 1}, 0).ap(sm, {0}, 0)},
              {tt().ap(r, {0}, 0).ap(sm, {1}, 1).ap(rar2, {0, 1}, 0),
               tt().ap(sm, {0}, 0).ap(r, {1}, 1).ap(lar2, {0, 1}, 0),
               tt().ap(sm, {0}, 0).ap(sm, {1}, 1).ap(mulH2, {0, 1}, 0)})}));
    // (7) r(x←b) = r(x)·'b - x⇀b + s(x)⇀'b
    cs.push_back(entry(
        "(7)", {desc("MOR_A2(7)", {H, A}, {A},
                     {tt().ap(lar, {0, 1}, 0).ap(r, {0}, 0)},
                     {tt().ap(r, {0}, 0).ap(mulA2, {0, 1}, 0),
                      tt(-1).ap(hpr, {0, 1}, 0),
                      tt().ap(sm, {0}, 0).ap(hpr2, {0, 1}, 0)})}));
    // (8) r(a→y) = a·'r(y) - a↼y + a↼'s(y)
    cs.push_back(entry(
        "(8)", {desc("MOR_A2(8)", {H, A}, {A},
                     {tt().ap(rar, {1, 0}, 0).ap(r, {0}, 0)},
                     {tt().ap(r, {0}, 0).ap(mulA2, {1, 0}, 0),
                      tt(-1).ap(hpl, {1, 0}, 0),
                      tt().ap(sm, {0}, 0).ap(hpl2, {1, 0}, 0)})}));
    // (9) s(x←b) = s(x)←'b
    cs.push_back(entry(
        "(9)", {desc("MOR_A2(9)", {H, A}, {H},
                     {tt().ap(lar, {0, 1}, 0).ap(sm, {0}, 0)},
                     {tt().ap(sm, {0}, 0).ap(lar2, {0, 1}, 0)})}));
    // (10) s(a→y) = a→'s(y)
    cs.push_back(entry(
        "(10)", {desc("MOR_A2(10)", {H, A}, {H},
                      {tt().ap(rar, {1, 0}, 0).ap(sm, {0}, 0)},
                      {tt().ap(sm, {0}, 0).ap(rar2, {1, 0}, 0)})}));
    return cs;
}

// --- kind c1: (r,s) against the coaction/cycle datum ------------------------

std::vector<ConditionEntry> mor_c1() {
    std::vector<ConditionEntry> cs;
    // (1) p'(a) = (s⊗s)p(a)
    cs.push_back(entry(
        "(1)",
        {desc("MOR_C1(1)", {A}, {H, H}, {tt().ap(pp2, {0}, 0)},
              {tt().ap(pp, {0}, 0).ap(sm, {0}, 0).ap(sm, {1}, 1)})}));
    // (2) φ'(a) = s(a⟨-1⟩)⊗a⟨0⟩ + s(a1p)⊗r(a2p)   (plus the swapped block)
    cs.push_back(entry(
        "(2)",
        {desc("MOR_C1(2)", {A}, {H, A}, {tt().ap(phi2, {0}, 0)},
              {tt().ap(phi, {0}, 0).ap(sm, {0}, 0),
               tt().ap(pp, {0}, 0).ap(sm, {0}, 0).ap(r, {1}, 1)}),
         desc("MOR_C1(2t)", {A}, {A, H},
              {tt().ap(phi2, {0}, 0).pm({1, 0})},
              {tt().ap(phi, {0}, 0).ap(sm, {0}, 0).pm({1, 0}),
               tt(-1).ap(pp, {0}, 0).ap(r, {0}, 0).ap(sm, {1}, 1)})}));
    // (3) δ'_A(a) = δ_A(a) + r(a⟨-1⟩)⊗a⟨0⟩ - a⟨0⟩⊗r(a⟨-1⟩) + r(a1p)⊗r(a2p)
    cs.push_back(entry(
        "(3)",
        {desc("MOR_C1(3)", {A}, {A, A}, {tt().ap(cobrA2, {0}, 0)},
              {tt().ap("cobrA", {0}, 0),
               tt().ap(phi, {0}, 0).ap(r, {0}, 0),
               tt(-1).ap(phi, {0}, 0).ap(r, {0}, 0).pm({1, 0}),
               tt().ap(pp, {0}, 0).ap(r, {0}, 0).ap(r, {1}, 1)})}));
    // (4) δ'_V(s(x)) + p'(r(x)) = (s⊗s)δ_V(x)
    cs.push_back(entry(
        "(4)",
        {desc("MOR_C1(4)", {H}, {H, H},
              {tt().ap(sm, {0}, 0).ap(cobrH2, {0}, 0),
               tt().ap(r, {0}, 0).ap(pp2, {0}, 0)},
              {tt().ap("cobrH", {0}, 0).ap(sm, {0}, 0).ap(sm, {1}, 1)})}));
    // (5) ψ'(s(x)) + φ'(r(x)) = s(x[1])⊗r(x[2]) + s(x⟨0⟩)⊗x⟨1⟩  (plus swap)
    cs.push_back(entry(
        "(5)",
        {desc("MOR_C1(5)", {H}, {H, A},
              {tt().ap(sm, {0}, 0).ap(psi2, {0}, 0),
               tt().ap(r, {0}, 0).ap(phi2, {0}, 0)},
              {tt().ap("cobrH", {0}, 0).ap(sm, {0}, 0).ap(r, {1}, 1),
               tt().ap(psi, {0}, 0).ap(sm, {0}, 0)}),
         desc("MOR_C1(5t)", {H}, {A, H},
              {tt().ap(sm, {0}, 0).ap(psi2, {0}, 0).pm({1, 0}),
               tt().ap(r, {0}, 0).ap(phi2, {0}, 0).pm({1, 0})},
              {tt(-1).ap("cobrH", {0}, 0).ap(r, {0}, 0).ap(sm, {1}, 1),
               tt().ap(psi, {0}, 0).ap(sm, {0}, 0).pm({1, 0})})}));
    // (6) δ'_A(r(x)) = r(x[1])⊗r(x[2]) - x⟨1⟩⊗r(x⟨0⟩) + r(x⟨0⟩)⊗x⟨1⟩
    cs.push_back(entry(
        "(6)",
        {desc("MOR_C1(6)", {H}, {A, A},
              {tt().ap(r, {0}, 0).ap(cobrA2, {0}, 0)},
              {tt().ap("cobrH", {0}, 0).ap(r, {0}, 0).ap(r, {1}, 1),
               tt(-1).ap(psi, {0}, 0).ap(r, {0}, 0).pm({1, 0}),
               tt().ap(psi, {0}, 0).ap(r, {0}, 0)})}));
    // (7) s'_A(a) = (s⊗s)s_A(a)
    cs.push_back(entry(
        "(7)",
        {desc("MOR_C1(7)", {A}, {H, H}, {tt().ap(ss2, {0}, 0)},
              {tt().ap(ss, {0}, 0).ap(sm, {0}, 0).ap(sm, {1}, 1)})}));
    // (8) ρ'(a) = s(a(-1))⊗a(0) + s(a1s)⊗r(a2s)
    cs.push_back(entry(
        "(8)",
        {desc("MOR_C1(8)", {A}, {H, A}, {tt().ap(rho2, {0}, 0)},
              {tt().ap(rho, {0}, 0).ap(sm, {0}, 0),
               tt().ap(ss, {0}, 0).ap(sm, {0}, 0).ap(r, {1}, 1)})}));
    // (9) γ'(a) = a(0)⊗s(a(1)) + r(a1s)⊗s(a2s)
    cs.push_back(entry(
        "(9)",
        {desc("MOR_C1(9)", {A}, {A, H}, {tt().ap(gam2, {0}, 0)},
              {tt().ap(gam, {0}, 0).ap(sm, {1}, 1),
               tt().ap(ss, {0}, 0).ap(r, {0}, 0).ap(sm, {1}, 1)})}));
    // (10) Δ'_A(a) = Δ_A(a) + r(a(-1))⊗a(0) + a(0)⊗r(a(1)) + r(a1s)⊗r(a2s)
    cs.push_back(entry(
        "(10)",
        {desc("MOR_C1(10)", {A}, {A, A}, {tt().ap(copA2, {0}, 0)},
              {tt().ap("copA", {0}, 0),
               tt().ap(rho, {0}, 0).ap(r, {0}, 0),
               tt().ap(gam, {0}, 0).ap(r, {1}, 1),
               tt().ap(ss, {0}, 0).ap(r, {0}, 0).ap(r, {1}, 1)})}));
    // (11) Δ'_V(s(x)) + s'_A(r(x)) = (s⊗s)Δ_V(x)
    cs.push_back(entry(
        "(11)",
        {desc("MOR_C1(11)", {H}, {H, H},
              {tt().ap(sm, {0}, 0).ap(copH2, {0}, 0),
               tt().ap(r, {0}, 0).ap(ss2, {0}, 0)},
              {tt().ap("copH", {0}, 0).ap(sm, {0}, 0).ap(sm, {1}, 1)})}));
    // (12) β'(s(x)) + ρ'(r(x)) = s(x1)⊗r(x2) + s(x{0})⊗x{1}
    cs.push_back(entry(
        "(12)",
        {desc("MOR_C1(12)", {H}, {H, A},
              {tt().ap(sm, {0}, 0).ap(bet2, {0}, 0),
               tt().ap(r, {0}, 0).ap(rho2, {0}, 0)},
              {tt().ap("copH", {0}, 0).ap(sm, {0}, 0).ap(r, {1}, 1),
               tt().ap(bet, {0}, 0).ap(sm, {0}, 0)})}));
    // (13) α'(s(x)) + γ'(r(x)) = r(x1)⊗s(x2) + x{-1}⊗s(x{0})
    cs.push_back(entry(
        "(13)",
        {desc("MOR_C1(13)", {H}, {A, H},
              {tt().ap(sm, {0}, 0).ap(alp2, {0}, 0),
               tt().ap(r, {0}, 0).ap(gam2, {0}, 0)},
              {tt().ap("copH", {0}, 0).ap(r, {0}, 0).ap(sm, {1}, 1),
               tt().ap(alp, {0}, 0).ap(sm, {1}, 1)})}));
    // (14) Δ'_A(r(x)) = r(x1)⊗r(x2) + x{-1}⊗r(x{0}) + r(x{0})⊗x{1}
    cs.push_back(entry(
        "(14)",
        {desc("MOR_C1(14)", {H}, {A, A},
              {tt().ap(r, {0}, 0).ap(copA2, {0}, 0)},
              {tt().ap("copH", {0}, 0).ap(r, {0}, 0).ap(r, {1}, 1),
               tt().ap(alp, {0}, 0).ap(r, {1}, 1),
               tt().ap(bet, {0}, 0).ap(r, {0}, 0)})}));
    return cs;
}

// --- kind c2: (r,s) against the coaction/cocycle datum -----------------------

std::vector<ConditionEntry> mor_c2() {
    std::vector<ConditionEntry> cs;
    // (1) ψ'(s(x)) = s(x[1])⊗r(x[2]) + s(x⟨0⟩)⊗x⟨1⟩   (plus swapped block)
    cs.push_back(entry(
        "(1)",
        {desc("MOR_C2(1)", {H}, {H, A},
              {tt().ap(sm, {0}, 0).ap(psi2, {0}, 0)},
              {tt().ap("cobrH", {0}, 0).ap(sm, {0}, 0).ap(r, {1}, 1),
               tt().ap(psi, {0}, 0).ap(sm, {0}, 0)}),
         desc("MOR_C2(1t)", {H}, {A, H},
              {tt().ap(sm, {0}, 0).ap(psi2, {0}, 0).pm({1, 0})},
              {tt(-1).ap("cobrH", {0}, 0).ap(r, {0}, 0).ap(sm, {1}, 1),
               tt().ap(psi, {0}, 0).ap(sm, {0}, 0).pm({1, 0})})}));
    // (2) δ'_V(s(x)) = (s⊗s)δ_V(x)
    cs.push_back(entry(
        "(2)",
        {desc("MOR_C2(2)", {H}, {H, H},
              {tt().ap(sm, {0}, 0).ap(cobrH2, {0}, 0)},
              {tt().ap("cobrH", {0}, 0).ap(sm, {0}, 0).ap(sm, {1}, 1)})}));
    // (3) δ'_A(r(x)) + q'(s(x)) = r(x[1])⊗r(x[2]) - x⟨1⟩⊗r(x⟨0⟩)
    //    + r(x⟨0⟩)⊗x⟨1⟩ + q(x)   (base: δ'_A = δ_A)
    cs.push_back(entry(
        "(3)",
        {desc("MOR_C2(3)", {H}, {A, A},
              {tt().ap(r, {0}, 0).ap(cobrA2, {0}, 0),
               tt().ap(sm, {0}, 0).ap(qq2, {0}, 0)},
              {tt().ap("cobrH", {0}, 0).ap(r, {0}, 0).ap(r, {1}, 1),
               tt(-1).ap(psi, {0}, 0).ap(r, {0}, 0).pm({1, 0}),
               tt().ap(psi, {0}, 0).ap(r, {0}, 0),
               tt().ap(qq, {0}, 0)}),
         desc("MOR_C2(3b)", {A}, {A, A}, {tt().ap(cobrA2, {0}, 0)},
              {tt().ap("cobrA", {0}, 0)})}));
    // (4) α'(s(x)) = r(x1)⊗s(x2) + x{-1}⊗s(x{0})
    cs.push_back(entry(
        "(4)",
        {desc("MOR_C2(4)", {H}, {A, H},
              {tt().ap(sm, {0}, 0).ap(alp2, {0}, 0)},
              {tt().ap("copH", {0}, 0).ap(r, {0}, 0).ap(sm, {1}, 1),
               tt().ap(alp, {0}, 0).ap(sm, {1}, 1)})}));
    // (5) β'(s(x)) = s(x1)⊗r(x2) + s(x{0})⊗x{1}
    cs.push_back(entry(
        "(5)",
        {desc("MOR_C2(5)", {H}, {H, A},
              {tt().ap(sm, {0}, 0).ap(bet2, {0}, 0)},
              {tt().ap("copH", {0}, 0).ap(sm, {0}, 0).ap(r, {1}, 1),
               tt().ap(bet, {0}, 0).ap(sm, {0}, 0)})}));
    // (6) Δ'_V(s(x)) = (s⊗s)Δ_V(x)
    cs.push_back(entry(
        "(6)",
        {desc("MOR_C2(6)", {H}, {H, H},
              {tt().ap(sm, {0}, 0).ap(copH2, {0}, 0)},
              {tt().ap("copH", {0}, 0).ap(sm, {0}, 0).ap(sm, {1}, 1)})}));
    // (7) Δ'_A(r(x)) + t'(s(x)) = r(x1)⊗r(x2) + x{-1}⊗r(x{0})
    //    + r(x{0})⊗x{1} + t(x)   (base: Δ'_A = Δ_A)
    cs.push_back(entry(
        "(7)",
        {desc("MOR_C2(7)", {H}, {A, A},
              {tt().ap(r, {0}, 0).ap(copA2, {0}, 0),
               tt().ap(sm, {0}, 0).ap(tth2, {0}, 0)},
              {tt().ap("copH", {0}, 0).ap(r, {0}, 0).ap(r, {1}, 1),
               tt().ap(alp, {0}, 0).ap(r, {1}, 1),
               tt().ap(bet, {0}, 0).ap(r, {0}, 0),
               tt().ap(tth, {0}, 0)}),
         desc("MOR_C2(7b)", {A}, {A, A}, {tt().ap(copA2, {0}, 0)},
              {tt().ap("copA", {0}, 0)})}));
    return cs;
}

}  // namespace

void register_mor_sets(std::map<std::string, ConditionSet>& reg) {
    reg.emplace("MOR_A1",
                ConditionSet{"MOR_A1",
                             "morphism-pair conditions, algebra kind 1",
                             mor_a1()});
    reg.emplace("MOR_A2",
                ConditionSet{"MOR_A2",
                             "morphism-pair conditions, algebra kind 2",
                             mor_a2()});
    reg.emplace("MOR_C1",
                ConditionSet{"MOR_C1",
                             "morphism-pair conditions, coalgebra kind 1",
                             mor_c1()});
    reg.emplace("MOR_C2",
                ConditionSet{"MOR_C2",
                             "morphism-pair conditions, coalgebra kind 2",
                             mor_c2()});
    return;
}

}  // namespace pforge
