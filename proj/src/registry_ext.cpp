#include "pforge/registry.hpp"

#include <set>

//
// Extension systems: the per-kind condition lists that characterize when the
// unified product on E = A ⊕ V is a Poisson (co/bi)algebra.  Each kind is the
// full cocycle system with part of the vocabulary set to zero, so every
// numbered condition here is the corresponding cocycle-layer descriptor with
// the terms that mention an absent map removed.  The 0-indexed condition of
// each set is the ambient statement itself: the Poisson (co)algebra axioms
// instantiated on the built space E.
//

namespace pforge {

namespace {

bool term_mentions(const TensorTerm& t, const std::set<std::string>& absent) {
    for (const TermStep& s : t.steps)
        if (absent.count(s.map)) return true;
    return false;
}

// Copies a descriptor, dropping every term that mentions an absent map.
IdentityDescriptor specialize(const IdentityDescriptor& d,
                              const std::string& new_id,
                              const std::set<std::string>& absent) {
    IdentityDescriptor out;
    out.id = new_id;
    out.input_spaces = d.input_spaces;
    out.output_spaces = d.output_spaces;
    for (const TensorTerm& t : d.lhs_terms)
        if (!term_mentions(t, absent)) out.lhs_terms.push_back(t);
    for (const TensorTerm& t : d.rhs_terms)
        if (!term_mentions(t, absent)) out.rhs_terms.push_back(t);
    return out;
}

const IdentityDescriptor& source_descriptor(
    const std::map<std::string, ConditionSet>& reg, const std::string& set_id,
    const std::string& cond_id) {
    for (const ConditionEntry& c : reg.at(set_id).conditions)
        if (c.cond_id == cond_id) return c.descriptors.at(0);
    throw error("missing source condition " + set_id + ":" + cond_id);
}

ConditionEntry specialized(const std::map<std::string, ConditionSet>& reg,
                           const std::string& src_set,
                           const std::string& src_cond,
                           const std::string& new_id,
                           const std::set<std::string>& absent) {
    return ConditionEntry{
        new_id, {specialize(source_descriptor(reg, src_set, src_cond), new_id,
                            absent)}};
}

// The 0-condition: ambient axioms on the built space E, bundled as one entry.
ConditionEntry ambient_entry(const std::string& cond_id, bool algebra,
                             bool coalgebra) {
    ConditionEntry e{cond_id, {}};
    if (algebra)
        for (ConditionEntry& c : make_pa_conditions("E", "brE", "mulE"))
            for (IdentityDescriptor& d : c.descriptors)
                e.descriptors.push_back(std::move(d));
    if (coalgebra)
        for (ConditionEntry& c : make_pc_conditions("E", "cobrE", "copE"))
            for (IdentityDescriptor& d : c.descriptors)
                e.descriptors.push_back(std::move(d));
    return e;
}

// Vocabulary absent from each kind (set to zero in the specialization).
const std::set<std::string> a1_absent = {"tri_HA", "hpr_HA", "hpl_AH",
                                         "sigma_HH", "omega_HH"};
const std::set<std::string> a2_absent = {"theta_AA", "nu_AA"};
const std::set<std::string> c1_absent = {"q_H", "t_H"};
const std::set<std::string> c2_absent = {"phi_A", "rho_A", "gamma_A", "p_A",
                                         "s_A"};
const std::set<std::string> I_absent = {"tri_HA",  "hpr_HA",   "hpl_AH",
                                        "sigma_HH", "omega_HH", "q_H", "t_H"};
const std::set<std::string> II_absent = {"phi_A", "rho_A",    "gamma_A",
                                         "p_A",   "s_A",      "theta_AA",
                                         "nu_AA"};

ConditionSet ext_a1(const std::map<std::string, ConditionSet>& reg) {
    ConditionSet s{"EXT_A1", "unified-product conditions, algebra kind 1", {}};
    s.conditions.push_back(ambient_entry("A0", true, false));
    const char* src[] = {"CP7", "CP8", "CP9", "CP10", "CP11", "CP12", "CC5"};
    for (int i = 0; i < 7; ++i) {
        std::string set = (i < 6) ? "CP" : "CC";
        s.conditions.push_back(specialized(reg, set, src[i],
                                           "A" + std::to_string(i + 1),
                                           a1_absent));
    }
    return s;
}

ConditionSet ext_a2(const std::map<std::string, ConditionSet>& reg) {
    ConditionSet s{"EXT_A2", "unified-product conditions, algebra kind 2", {}};
    s.conditions.push_back(ambient_entry("B0", true, false));
    for (int i = 1; i <= 12; ++i)
        s.conditions.push_back(specialized(reg, "CP",
                                           "CP" + std::to_string(i),
                                           "B" + std::to_string(i),
                                           a2_absent));
    s.conditions.push_back(specialized(reg, "CC", "CC5", "B13", a2_absent));
    return s;
}

ConditionSet ext_c1(const std::map<std::string, ConditionSet>& reg) {
    ConditionSet s{"EXT_C1",
                   "unified-coproduct conditions, coalgebra kind 1", {}};
    s.conditions.push_back(ambient_entry("C0", false, true));
    for (int i = 1; i <= 12; ++i)
        s.conditions.push_back(specialized(reg, "CCP",
                                           "CCP" + std::to_string(i),
                                           "C" + std::to_string(i),
                                           c1_absent));
    s.conditions.push_back(specialized(reg, "CC", "CC7", "C13", c1_absent));
    return s;
}

ConditionSet ext_c2(const std::map<std::string, ConditionSet>& reg) {
    ConditionSet s{"EXT_C2",
                   "unified-coproduct conditions, coalgebra kind 2", {}};
    s.conditions.push_back(ambient_entry("D0", false, true));
    const char* src[] = {"CCP7", "CCP8", "CCP9", "CCP10",
                         "CCP11", "CCP12", "CC7", "CC4"};
    for (int i = 0; i < 8; ++i) {
        std::string set = (i < 6) ? "CCP" : "CC";
        s.conditions.push_back(specialized(reg, set, src[i],
                                           "D" + std::to_string(i + 1),
                                           c2_absent));
    }
    return s;
}

ConditionSet ext_I(const std::map<std::string, ConditionSet>& reg) {
    ConditionSet s{"EXT_I", "unified-bialgebra conditions, kind I", {}};
    s.conditions.push_back(ambient_entry("E0", true, true));
    // CDM5/6/17/18 vanish identically for this kind and are omitted.
    const char* src[] = {"CDM1",  "CDM2",  "CDM3",  "CDM4",  "CDM7",
                         "CDM8",  "CDM9",  "CDM10", "CDM11", "CDM12",
                         "CDM13", "CDM14", "CDM15", "CDM16", "CDM19",
                         "CDM20", "CDM21", "CDM22", "CDM23", "CDM24",
                         "CBB3",  "CBB4"};
    for (int i = 0; i < 22; ++i) {
        std::string set = (i < 20) ? "CDM" : "CBB";
        s.conditions.push_back(specialized(reg, set, src[i],
                                           "E" + std::to_string(i + 1),
                                           I_absent));
    }
    return s;
}

ConditionSet ext_II(const std::map<std::string, ConditionSet>& reg) {
    ConditionSet s{"EXT_II", "unified-bialgebra conditions, kind II", {}};
    s.conditions.push_back(ambient_entry("F0", true, true));
    // CDM1/2/13/15 vanish identically for this kind and are omitted.
    const char* src[] = {"CDM3",  "CDM4",  "CDM5",  "CDM6",  "CDM7",
                         "CDM8",  "CDM9",  "CDM10", "CDM11", "CDM12",
                         "CDM14", "CDM16", "CDM17", "CDM18", "CDM19",
                         "CDM20", "CDM21", "CDM22", "CDM23", "CDM24",
                         "CBB3",  "CBB4"};
    for (int i = 0; i < 22; ++i) {
        std::string set = (i < 20) ? "CDM" : "CBB";
        s.conditions.push_back(specialized(reg, set, src[i],
                                           "F" + std::to_string(i + 1),
                                           II_absent));
    }
    return s;
}

}  // namespace

void register_ext_sets(std::map<std::string, ConditionSet>& reg) {
    reg.emplace("EXT_A1", ext_a1(reg));
    reg.emplace("EXT_A2", ext_a2(reg));
    reg.emplace("EXT_C1", ext_c1(reg));
    reg.emplace("EXT_C2", ext_c2(reg));
    reg.emplace("EXT_I", ext_I(reg));
    reg.emplace("EXT_II", ext_II(reg));
}

}  // namespace pforge
