//
// pforge: verify, build, split, and classify finite-dimensional Poisson
// (co/bi)algebra structures stored as JSON structure files.
//
// Exit codes: 0 pass, 1 violations/exhausted, 2 usage or input error,
// 3 search budget exceeded.
//

#include "pforge/catalog.hpp"
#include "pforge/equivalence.hpp"
#include "pforge/io.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>

namespace {

using namespace pforge;

constexpr int kExitPass = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void write_env(const StructureEnv& env, const std::string& out_path) {
    if (out_path.empty() || out_path == "-")
        std::cout << emit_structure(env);
    else
        save_structure_file(out_path, env);
}

// The datum of a kind read from a structure file: spaces A and H plus all
// roster maps (missing maps default to zero).
ExtendingDatum datum_from_file(const std::string& path, ExtKind kind) {
    StructureEnv file = load_structure_file(path);
    if (!file.has_space("A") || !file.has_space("H"))
        throw error(path + ": an extending datum needs spaces A and H");
    ExtendingDatum d = zero_datum(kind, file.dim("A"), file.dim("H"),
                                  file.field);
    for (const RosterEntry& e : kind_roster(kind)) {
        if (!file.has_map(e.name)) continue;
        const LinMap& m = file.map_at(e.name);
        if (m.source != e.source || m.target != e.target)
            throw error(path + ": map " + e.name +
                        " has the wrong signature for kind " +
                        kind_name(kind));
        d.env.map_at(e.name) = m;
    }
    return d;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact checker and builder for Poisson algebra/coalgebra/"
                 "bialgebra structures and their extensions"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // The evaluation engine is serial; the knob is accepted (and validated)
    // so callers can pass it uniformly.
    if (const char* t = std::getenv("POISSON_FORGE_THREADS")) {
        char* end = nullptr;
        long n = std::strtol(t, &end, 10);
        if (end == t || *end != '\0' || n < 1)
            throw error("POISSON_FORGE_THREADS must be a positive integer");
    }

    std::string file_a, file_b, out_path, kind_str, witness_path, set_name;
    std::vector<std::string> set_ids;
    int dim_a = 0, dim_v = 0;
    long field_prime = 0;
    unsigned long budget = 1u << 20;

    CLI::App* verify = app.add_subcommand("verify",
                                          "evaluate condition sets on a file");
    verify->add_option("file", file_a)->required();
    verify->add_option("--set", set_ids, "condition set ids")->required();

    CLI::App* build = app.add_subcommand(
        "build", "build the unified ambient structure from a datum");
    build->add_option("file", file_a)->required();
    build->add_option("--kind", kind_str, "a1|a2|c1|c2|I|II")->required();
    build->add_option("-o,--output", out_path);

    CLI::App* split = app.add_subcommand(
        "split", "extract the extending datum from an ambient structure");
    split->add_option("file", file_a)->required();
    split->add_option("--kind", kind_str)->required();
    split->add_option("--dimA", dim_a,
                      "base dimension (default: dim of space A in the file)");
    split->add_option("-o,--output", out_path);

    CLI::App* equiv = app.add_subcommand(
        "equiv", "decide or verify equivalence of two extending data");
    equiv->add_option("fileA", file_a)->required();
    equiv->add_option("fileB", file_b)->required();
    equiv->add_option("--kind", kind_str)->required();
    equiv->add_option("--field", field_prime, "search field prime");
    equiv->add_option("--witness", witness_path,
                      "verify this witness instead of searching");
    equiv->add_option("--budget", budget);

    CLI::App* classify = app.add_subcommand(
        "classify", "partition all small data into equivalence classes");
    classify->add_option("--kind", kind_str)->required();
    classify->add_option("--dimA", dim_a)->required();
    classify->add_option("--dimV", dim_v)->required();
    classify->add_option("--field", field_prime)->required();
    classify->add_option("--budget", budget);

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "built-in fixtures");
    CLI::App* catalog_list = catalog_cmd->add_subcommand("list");
    CLI::App* catalog_emit = catalog_cmd->add_subcommand("emit");
    catalog_emit->add_option("name", set_name)->required();
    catalog_emit->add_option("-o,--output", out_path);
    catalog_cmd->require_subcommand(1);

    // Let the global --json flag appear after a subcommand as well.
    for (CLI::App* sub : {verify, build, split, equiv, classify, catalog_cmd,
                          catalog_list, catalog_emit})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    if (verify->parsed()) {
        StructureEnv env = load_structure_file(file_a);
        std::vector<SetReport> reports;
        bool all_pass = true;
        for (const std::string& id : set_ids) {
            reports.push_back(SetReport{id, check_condition_set(id, env)});
            all_pass = all_pass && reports.back().violations.empty();
        }
        std::cout << (as_json ? render_report_json(reports, env)
                              : render_report_text(reports, env));
        return all_pass ? kExitPass : kExitViolations;
    }

    if (build->parsed()) {
        ExtKind kind = parse_kind(kind_str);
        BuiltStructure built =
            build_unified(kind, datum_from_file(file_a, kind));
        // Record the splitting: space A's dim marks the leading coordinates.
        built.ambient.add_space("A", built.dim_a);
        write_env(built.ambient, out_path);
        return kExitPass;
    }

    if (split->parsed()) {
        ExtKind kind = parse_kind(kind_str);
        StructureEnv file = load_structure_file(file_a);
        if (!file.has_space("E"))
            throw error(file_a + ": split needs an ambient space E");
        ExtensionPresentation pres;
        pres.ambient = file;
        pres.dim_a = dim_a > 0 ? dim_a
                               : (file.has_space("A") ? file.dim("A") : 0);
        for (int i = 0; i < pres.dim_a; ++i) pres.embedding.push_back(i);
        for (int i = 0; i < file.dim("E"); ++i)
            pres.projection.push_back(i < pres.dim_a ? i : -1);
        ExtendingDatum d = split_extension(pres, kind);
        write_env(d.env, out_path);
        return kExitPass;
    }

    if (equiv->parsed()) {
        ExtKind kind = parse_kind(kind_str);
        ExtendingDatum d = datum_from_file(file_a, kind);
        ExtendingDatum d2 = datum_from_file(file_b, kind);
        if (!witness_path.empty()) {
            StructureEnv wf = load_structure_file(witness_path);
            MorphismPair w{wf.map_at("r_VA"), wf.map_at("s_VV")};
            bool ok = verify_witness(kind, w, d, d2);
            std::cout << (ok ? "witness verified\n" : "witness rejected\n");
            return ok ? kExitPass : kExitViolations;
        }
        FieldSpec f = field_prime > 0 ? FieldSpec{field_prime} : d.env.field;
        EquivalenceResult res = decide_equivalence(kind, d, d2, f, budget);
        if (!res.found) {
            std::cout << "not equivalent (search exhausted)\n";
            return kExitViolations;
        }
        std::cout << "equivalent\n";
        if (!out_path.empty()) {
            StructureEnv wenv;
            wenv.field = d.env.field;
            wenv.add_space("A", d.env.dim("A"));
            wenv.add_space("H", d.env.dim("H"));
            wenv.maps.emplace("r_VA", res.witness.pair.r);
            wenv.maps.emplace("s_VV", res.witness.pair.s_map);
            write_env(wenv, out_path);
        }
        return kExitPass;
    }

    if (classify->parsed()) {
        ExtKind kind = parse_kind(kind_str);
        ClassifyResult res =
            classify_small(kind, dim_a, dim_v, FieldSpec{field_prime},
                           nullptr, budget);
        if (as_json) {
            std::cout << "{\"total_valid\": " << res.total_valid
                      << ", \"class_sizes\": [";
            for (std::size_t i = 0; i < res.classes.size(); ++i)
                std::cout << (i ? ", " : "") << res.classes[i].size;
            std::cout << "]}\n";
        } else {
            std::cout << res.total_valid << " valid data in "
                      << res.classes.size() << " classes; sizes:";
            for (const EquivalenceClass& c : res.classes)
                std::cout << " " << c.size;
            std::cout << "\n";
        }
        return kExitPass;
    }

    if (catalog_list->parsed()) {
        for (const std::string& n : catalog_names()) std::cout << n << "\n";
        return kExitPass;
    }
    if (catalog_emit->parsed()) {
        write_env(catalog(set_name), out_path);
        return kExitPass;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
