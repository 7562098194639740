#include "doctest.h"

#include "pforge/build.hpp"
#include "pforge/catalog.hpp"
#include "pforge/registry.hpp"

using namespace pforge;

namespace {

// Every ambient operation matches entry-for-entry.
bool same_ambient(const BuiltStructure& a, const BuiltStructure& b) {
    for (const char* op : {"brE", "mulE", "cobrE", "copE"}) {
        if (a.ambient.has_map(op) != b.ambient.has_map(op)) return false;
        if (a.ambient.has_map(op) &&
            !(a.ambient.map_at(op) == b.ambient.map_at(op)))
            return false;
    }
    return a.ambient.dim("E") == b.ambient.dim("E");
}

}  // namespace

TEST_CASE("with zero cocycles the bicrossproduct degenerates to the double "
          "cross biproduct") {
    // A datum with actions/coactions but no cocycle or cycle maps.
    StructureEnv env;
    env.field = FieldSpec{0};
    env.add_space("A", 2);
    env.add_space("H", 1);
    for (const RosterEntry& e : full_roster())
        env.add_zero_map(e.name, e.source, e.target);
    env.map_at("tri_HA").set({0}, {0, 1}, Scalar::one(env.field));
    env.map_at("rho_A").set({0, 1}, {0}, Scalar::from_int(2, env.field));
    CHECK(same_ambient(build_cocycle_bicrossproduct(env),
                       build_double_cross_biproduct(env)));
}

TEST_CASE("unified kinds are slices of the master construction") {
    for (ExtKind k : {ExtKind::a1, ExtKind::a2, ExtKind::c1, ExtKind::c2,
                      ExtKind::I, ExtKind::II}) {
        for (const ExtendingDatum& d : catalog_data(k)) {
            BuiltStructure built = build_unified(k, d);
            StructureEnv full = d.env;
            for (const RosterEntry& e : full_roster())
                if (!full.has_map(e.name))
                    full.add_zero_map(e.name, e.source, e.target);
            BuiltStructure master = build_cocycle_bicrossproduct(full);
            if (built.has_algebra) {
                CHECK(built.ambient.map_at("brE") == master.ambient.map_at("brE"));
                CHECK(built.ambient.map_at("mulE") ==
                      master.ambient.map_at("mulE"));
            }
            if (built.has_coalgebra) {
                CHECK(built.ambient.map_at("cobrE") ==
                      master.ambient.map_at("cobrE"));
                CHECK(built.ambient.map_at("copE") ==
                      master.ambient.map_at("copE"));
            }
        }
    }
}

TEST_CASE("the biproduct embeds A as the leading block") {
    StructureEnv env;
    env.field = FieldSpec{0};
    env.add_space("A", 2);
    env.add_space("H", 2);
    for (const RosterEntry& e : full_roster())
        env.add_zero_map(e.name, e.source, e.target);
    env.map_at("mulA").set({0}, {0, 0}, Scalar::one(env.field));
    BuiltStructure built = build_biproduct(env);
    CHECK(built.dim_a == 2);
    CHECK(built.embedding == std::vector<int>{0, 1});
    CHECK(built.projection == std::vector<int>{0, 1, -1, -1});
    CHECK(built.ambient.map_at("mulE").at({0}, {0, 0}) ==
          Scalar::one(env.field));
    // V coordinates contribute nothing with zero actions.
    CHECK(built.ambient.map_at("mulE").at({0}, {2, 2}).is_zero());
}

TEST_CASE("built biproducts of braided data are Poisson bialgebras") {
    // All-zero data trivially satisfy the hypothesis side; the built object
    // must then pass the bialgebra conditions.
    StructureEnv env;
    env.field = FieldSpec{0};
    env.add_space("A", 1);
    env.add_space("H", 2);
    for (const RosterEntry& e : full_roster())
        env.add_zero_map(e.name, e.source, e.target);
    BuiltStructure built = build_biproduct(env);
    CheckOptions opts;
    opts.lie_bialgebra = false;
    opts.asi = false;
    CHECK(check_poisson_bialgebra(built.as_bialgebra(), env.field, opts)
              .empty());
}
