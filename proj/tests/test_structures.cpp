#include "doctest.h"

#include "pforge/catalog.hpp"
#include "pforge/registry.hpp"
#include "pforge/structures.hpp"

using namespace pforge;

TEST_CASE("kind rosters carry the documented maps") {
    auto names = [](ExtKind k) {
        std::vector<std::string> out;
        for (const RosterEntry& e : kind_roster(k)) out.push_back(e.name);
        return out;
    };
    CHECK(names(ExtKind::a1) ==
          std::vector<std::string>{"brA", "mulA", "brH", "mulH", "tl_HA",
                                   "theta_AA", "lar_HA", "rar_AH", "nu_AA"});
    CHECK(kind_roster(ExtKind::a2).size() == 12);
    CHECK(kind_roster(ExtKind::c1).size() == 12);
    CHECK(kind_roster(ExtKind::c2).size() == 9);
    CHECK(kind_roster(ExtKind::I).size() == 21);
    CHECK(kind_roster(ExtKind::II).size() == 21);
    CHECK(parse_kind("I") == ExtKind::I);
    CHECK(kind_name(ExtKind::c2) == "c2");
    CHECK_THROWS_AS(parse_kind("a3"), error);
}

TEST_CASE("zero data satisfy every extension condition set") {
    for (ExtKind k : {ExtKind::a1, ExtKind::a2, ExtKind::c1, ExtKind::c2,
                      ExtKind::I, ExtKind::II}) {
        ExtendingDatum d = zero_datum(k, 2, 1, FieldSpec{0});
        std::string set = "EXT_";
        std::string kn = kind_name(k);
        for (char c : kn) set.push_back(static_cast<char>(std::toupper(c)));
        CHECK_MESSAGE(check_condition_set(set, d.env).empty(), set);
    }
}

TEST_CASE("validate reports shape defects") {
    StructureEnv env;
    env.field = FieldSpec{0};
    env.add_space("A", 2);
    env.add_zero_map("mulA", {"A", "A"}, {"A"});
    CHECK(validate(env).empty());
    env.map_at("mulA").src_dims = {2, 3};  // corrupt the declared dims
    CHECK_FALSE(validate(env).empty());
}

TEST_CASE("direct sum commutes with axiom checking") {
    PoissonBialgebraData idem = bialgebra_from_env(catalog("idem1"), "A",
                                                   "brA", "mulA", "cobrA",
                                                   "copA");
    PoissonBialgebraData lie = bialgebra_from_env(catalog("nonab_lie2"), "A",
                                                  "brA", "mulA", "cobrA",
                                                  "copA");
    PoissonBialgebraData bad = bialgebra_from_env(catalog("bad_bracket"), "A",
                                                  "brA", "mulA", "cobrA",
                                                  "copA");
    lie.algebra.space.name = lie.coalgebra.space.name = "B";
    bad.algebra.space.name = bad.coalgebra.space.name = "C";
    FieldSpec q{0};
    CHECK(check_poisson_bialgebra(direct_sum(idem, lie), q).empty());
    CHECK_FALSE(check_poisson_bialgebra(direct_sum(idem, bad), q).empty());
    CHECK_FALSE(check_poisson_bialgebra(direct_sum(bad, lie), q).empty());
    PoissonBialgebraData bad2 = bad;
    CHECK_THROWS(direct_sum(bad, bad2));
}

TEST_CASE("extending data compare exactly") {
    ExtendingDatum a = zero_datum(ExtKind::a1, 1, 1, FieldSpec{2});
    ExtendingDatum b = a;
    CHECK(a == b);
    b.env.map_at("nu_AA").set({0}, {0, 0}, Scalar::one(FieldSpec{2}));
    CHECK_FALSE(a == b);
}
