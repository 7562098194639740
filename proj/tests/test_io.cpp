#include "doctest.h"

#include "pforge/catalog.hpp"
#include "pforge/io.hpp"

#include <sstream>

using namespace pforge;

namespace {

StructureEnv reload(const StructureEnv& env) {
    std::istringstream in(emit_structure(env));
    return load_structure(in);
}

bool same_env(const StructureEnv& a, const StructureEnv& b) {
    if (a.field != b.field) return false;
    if (a.spaces.size() != b.spaces.size()) return false;
    for (std::size_t i = 0; i < a.spaces.size(); ++i) {
        if (a.spaces[i].name != b.spaces[i].name) return false;
        if (a.spaces[i].dim != b.spaces[i].dim) return false;
        if (a.spaces[i].basis_labels != b.spaces[i].basis_labels) return false;
    }
    if (a.maps.size() != b.maps.size()) return false;
    for (const auto& [name, m] : a.maps) {
        if (!b.has_map(name)) return false;
        if (!(b.map_at(name) == m)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("emit/load round-trips every catalog fixture bit-exactly") {
    for (const std::string& name : catalog_names()) {
        StructureEnv env = catalog(name);
        CHECK_MESSAGE(same_env(env, reload(env)), name);
        // and the textual form is stable (canonical scalars)
        CHECK(emit_structure(env) == emit_structure(reload(env)));
    }
}

TEST_CASE("rational scalars keep exact fractional values through files") {
    StructureEnv env;
    env.field = FieldSpec{0};
    env.add_space("A", 2);
    LinMap& m = env.add_zero_map("mulA", {"A", "A"}, {"A"});
    m.set({0}, {0, 1}, Scalar::parse("-22/7", env.field));
    StructureEnv back = reload(env);
    CHECK(back.map_at("mulA").at({0}, {0, 1}).to_string() == "-22/7");
}

TEST_CASE("minimal file loads and trivial entries parse") {
    std::istringstream minimal(R"({
      "format_version": 1,
      "field": "Q",
      "spaces": {"A": {"dim": 1}},
      "maps": {}
    })");
    StructureEnv env = load_structure(minimal);
    CHECK(env.dim("A") == 1);

    std::istringstream idem(R"({
      "format_version": 1,
      "field": "Q",
      "spaces": {"A": {"dim": 1}},
      "maps": {"mulA": {"signature": {"source": ["A","A"], "target": ["A"]},
                        "entries": [[0, 0, 0, "1"]]}}
    })");
    CHECK(load_structure(idem).map_at("mulA").at({0}, {0, 0}) ==
          Scalar::one(FieldSpec{0}));
}

TEST_CASE("defective files are rejected with errors") {
    auto expect_reject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(load_structure(in), error);
    };
    // non-canonical scalar
    expect_reject(R"({"format_version":1,"field":"Q",
      "spaces":{"A":{"dim":1}},
      "maps":{"m":{"signature":{"source":["A"],"target":["A"]},
                   "entries":[[0,0,"2/4"]]}}})");
    // duplicate tuple
    expect_reject(R"({"format_version":1,"field":"Q",
      "spaces":{"A":{"dim":1}},
      "maps":{"m":{"signature":{"source":["A"],"target":["A"]},
                   "entries":[[0,0,"1"],[0,0,"1"]]}}})");
    // index out of range
    expect_reject(R"({"format_version":1,"field":"Q",
      "spaces":{"A":{"dim":1}},
      "maps":{"m":{"signature":{"source":["A"],"target":["A"]},
                   "entries":[[1,0,"1"]]}}})");
    // unknown space in a signature
    expect_reject(R"({"format_version":1,"field":"Q",
      "spaces":{"A":{"dim":1}},
      "maps":{"m":{"signature":{"source":["B"],"target":["A"]},
                   "entries":[]}}})");
    // unknown role target
    expect_reject(R"({"format_version":1,"field":"Q",
      "spaces":{"A":{"dim":1}},"maps":{},"roles":{"brA":"nope"}})");
    // bad format version
    expect_reject(R"({"format_version":2,"field":"Q","spaces":{}})");
    // unsupported prime
    expect_reject(R"({"format_version":1,"field":{"prime":11},"spaces":{}})");
    // not JSON at all
    expect_reject("][");
}

TEST_CASE("roles bind registry vocabulary to local map names") {
    std::istringstream in(R"({
      "format_version": 1,
      "field": "Q",
      "spaces": {"A": {"dim": 1}},
      "maps": {"my_product": {"signature": {"source": ["A","A"],
                                            "target": ["A"]},
                              "entries": [[0, 0, 0, "1"]]},
               "my_bracket": {"signature": {"source": ["A","A"],
                                            "target": ["A"]},
                              "entries": []}},
      "roles": {"mulA": "my_product", "brA": "my_bracket"}
    })");
    StructureEnv env = load_structure(in);
    CHECK(env.has_map("mulA"));
    CHECK(env.map_at("mulA").at({0}, {0, 0}) == Scalar::one(FieldSpec{0}));
}

TEST_CASE("report renderings name the failure") {
    StructureEnv env = catalog("bad_bracket");
    std::vector<SetReport> reports{
        SetReport{"PA", check_condition_set("PA", env)}};
    std::string text = render_report_text(reports, env);
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(text.find("antisymmetry") != std::string::npos);
    std::string json_text = render_report_json(reports, env);
    CHECK(json_text.find("\"verdict\": \"fail\"") != std::string::npos);
    CHECK(json_text.find("antisymmetry") != std::string::npos);
}
