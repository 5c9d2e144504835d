// latin-chroma: generate, color, bound and verify Latin squares from the
// command line. Exit codes: 0 success/proper, 1 semantic negative (improper
// coloring, violation), 2 input error, 3 budget exhausted.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "latinchroma/coloring.hpp"
#include "latinchroma/groups.hpp"
#include "latinchroma/io.hpp"
#include "latinchroma/latin_square.hpp"
#include "latinchroma/ls_graph.hpp"
#include "latinchroma/transversals.hpp"

namespace fs = std::filesystem;
using namespace latinchroma;

namespace {

constexpr int kExitProper = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + out_path);
    out << text;
}

struct GenOptions {
    std::string kind;
    std::string param;
    uint64_t seed = 0;
    bool as_group = false;
    std::string out_path;
};

int run_gen(const GenOptions& opt) {
    if (opt.kind == "group") {
        GroupTable group = group_from_spec(opt.param);
        emit(opt.as_group ? to_text(group) : to_text(cayley_square(group)), opt.out_path);
        return kExitProper;
    }
    int n = 0;
    try {
        n = std::stoi(opt.param);
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "expected a numeric order, got '" + opt.param + "'");
    }
    LatinSquare square = [&] {
        if (opt.kind == "circulant") return circulant(n);
        if (opt.kind == "row-complete") return williams_row_complete(n);
        return random_square(n, opt.seed);
    }();
    emit(to_text(square), opt.out_path);
    return kExitProper;
}

Budget budget_from_flags(int64_t ms, uint64_t nodes) {
    Budget budget = Budget::from_env();
    if (ms >= 0) budget.ms = ms;
    if (nodes > 0) budget.max_nodes = nodes;
    return budget;
}

int run_chi(const std::string& file, bool heuristic, int64_t ms, uint64_t nodes, bool json,
            const std::string& witness_path) {
    LatinSquare square = load_square(file);
    Budget budget = budget_from_flags(ms, nodes);
    ChiResult result =
        heuristic ? heuristic_chromatic(square, budget) : exact_chromatic(square, budget);
    if (!witness_path.empty()) emit(to_json(result.witness), witness_path);
    if (json) {
        std::cout << to_json(result) << '\n';
    } else if (result.exact) {
        std::cout << "chi=" << result.chi << " exact\n";
    } else {
        std::cout << "chi in [" << result.lower << "," << result.upper
                  << "] (budget exhausted)\n";
    }
    return result.exact ? kExitProper : kExitBudget;
}

int run_color(const std::string& file, const std::string& method, int64_t ms, uint64_t nodes,
              const std::string& out_path) {
    LatinSquare square = load_square(file);
    int exit_code = kExitProper;
    Coloring coloring;
    if (method == "exact") {
        ChiResult result = exact_chromatic(square, budget_from_flags(ms, nodes));
        coloring = result.witness;
        if (!result.exact) exit_code = kExitBudget;
    } else if (method == "greedy") {
        coloring = greedy_coloring(square);
    } else if (method == "circulant") {
        if (!is_circulant(square))
            throw Error(ErrorCode::MethodInapplicable, "circulant method needs the circulant square");
        coloring = circulant_coloring(square.order());
    } else if (method == "row-complete") {
        coloring = row_complete_coloring(square);
    } else if (method == "plex") {
        coloring = plex_bound_coloring(square, diagonal_plex_partition(square));
    } else {
        throw Error(ErrorCode::MethodInapplicable, "unknown method " + method);
    }
    // Self-verification gate: never emit an improper coloring.
    VerifyReport report = verify_coloring(square, coloring);
    if (!report.proper) {
        std::cerr << "internal error: produced an improper coloring\n";
        return kExitNegative;
    }
    emit(to_json(coloring), out_path);
    return exit_code;
}

int run_verify(const std::string& square_file, const std::string& coloring_file, bool json) {
    LatinSquare square = load_square(square_file);
    Coloring coloring = load_coloring(coloring_file);
    if (coloring.n != square.order())
        throw Error(ErrorCode::ParseError, "coloring order " + std::to_string(coloring.n) +
                                               " does not match square order " +
                                               std::to_string(square.order()));
    VerifyReport report = verify_coloring(square, coloring);
    if (json) {
        std::cout << to_json(report) << '\n';
    } else if (report.proper) {
        std::cout << "proper (" << report.distinct_colors << " colors)\n";
    } else {
        std::cout << "improper: " << report.clashes.size() << " clashes\n";
        for (const auto& clash : report.clashes) {
            std::cout << "  color " << clash.color << " repeats " << clash.kind << "="
                      << clash.index << " on cells";
            for (const auto& t : clash.cells)
                std::cout << " (" << t.r << "," << t.c << "," << t.s << ")";
            std::cout << '\n';
        }
    }
    return report.proper ? kExitProper : kExitNegative;
}

int run_mobius(const std::string& file, int index, bool json) {
    LatinSquare square = load_square(file);
    try {
        MobiusCertificate cert = mobius_check(square, index);
        if (json) {
            std::cout << to_json(cert) << '\n';
        } else {
            std::cout << "ladder of order " << 2 * cert.n << ": rim " << cert.rim.size()
                      << " cells, " << cert.rungs.size() << " rungs, "
                      << cert.nearly_antipodal.size() << " nearly antipodal pairs\n";
        }
        return kExitProper;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::StructureViolation) {
            std::cerr << e.what() << '\n';
            return kExitNegative;
        }
        throw;
    }
}

int run_bounds(const std::string& file, bool json) {
    LatinSquare square = load_square(file);
    BoundReport report = bound_report(square);
    if (json) {
        std::cout << to_json(report) << '\n';
        return kExitProper;
    }
    std::cout << "n=" << report.n << " lower=" << report.lower
              << " greedy=" << report.greedy_colors << " guarantee=" << report.greedy_guarantee
              << " t=" << report.disjoint_transversals
              << (report.packing_exact ? "" : " (lower bound)");
    if (report.chi_equals_n) std::cout << " chi=n";
    if (report.corollary_bound) std::cout << " corollary=" << *report.corollary_bound;
    if (report.row_complete_bound) std::cout << " row-complete=" << *report.row_complete_bound;
    if (report.circulant_bound) std::cout << " circulant=" << *report.circulant_bound;
    std::cout << '\n';
    return kExitProper;
}

struct TableRow {
    std::string label;
    int n = 0;
    ChiResult result;
    std::string witness_path;
    std::string error;
};

struct TableOptions {
    std::vector<std::string> catalog_paths;
    int max_order = 0;
    int64_t ms = -1;
    uint64_t nodes = 0;
    int jobs = 1;
    std::string expect_file;
    std::string witness_dir;
    bool json = false;
};

std::vector<CatalogEntry> load_catalog_arg(const std::string& path) {
    fs::path p(path);
    if (fs::is_directory(p)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(p))
            if (entry.is_regular_file() && entry.path().extension() == ".txt")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        std::vector<CatalogEntry> catalog;
        for (const auto& file : files) {
            auto part = load_catalog(file);
            catalog.insert(catalog.end(), part.begin(), part.end());
        }
        if (catalog.empty()) throw Error(ErrorCode::ParseError, "no catalogs under " + path);
        return catalog;
    }
    return load_catalog(p);
}

int run_table(const TableOptions& opt) {
    std::vector<CatalogEntry> catalog;
    for (const auto& path : opt.catalog_paths) {
        auto part = load_catalog_arg(path);
        catalog.insert(catalog.end(), part.begin(), part.end());
    }
    if (opt.max_order > 0) {
        std::erase_if(catalog, [&](const CatalogEntry& e) {
            return e.square.order() > opt.max_order;
        });
    }
    Budget budget = budget_from_flags(opt.ms, opt.nodes);
    if (!opt.witness_dir.empty()) fs::create_directories(opt.witness_dir);

    std::vector<TableRow> rows(catalog.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < catalog.size(); i = next.fetch_add(1)) {
            TableRow& row = rows[i];
            row.label = catalog[i].label;
            row.n = catalog[i].square.order();
            try {
                row.result = exact_chromatic(catalog[i].square, budget);
                if (!opt.witness_dir.empty()) {
                    fs::path path = fs::path(opt.witness_dir) / (row.label + ".json");
                    std::ofstream out(path, std::ios::binary);
                    out << to_json(row.result.witness);
                    row.witness_path = path.string();
                }
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };
    int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    bool budget_hit = false;
    std::map<std::pair<int, int>, int> exact_counts;
    for (const auto& row : rows) {
        if (row.error.empty() && row.result.exact)
            ++exact_counts[{row.n, row.result.chi}];
        if (row.error.empty() && !row.result.exact) budget_hit = true;
    }

    if (opt.json) {
        std::ostringstream out;
        out << "[";
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i) out << ",";
            const auto& row = rows[i];
            if (!row.error.empty()) {
                out << "{\"label\":\"" << row.label << "\",\"error\":true}";
                continue;
            }
            out << "{\"label\":\"" << row.label << "\",\"n\":" << row.n
                << ",\"chi\":" << row.result.chi << ",\"exact\":" << (row.result.exact ? "true" : "false")
                << ",\"lower\":" << row.result.lower << ",\"upper\":" << row.result.upper
                << ",\"ms\":" << row.result.elapsed_ms << ",\"witness\":\"" << row.witness_path
                << "\"}";
        }
        out << "]";
        std::cout << out.str() << '\n';
    } else {
        std::printf("%-10s %3s %8s %6s %10s  %s\n", "label", "n", "chi", "exact", "ms", "witness");
        for (const auto& row : rows) {
            if (!row.error.empty()) {
                std::printf("%-10s %3d %8s %6s %10s  %s\n", row.label.c_str(), row.n, "-", "-",
                            "-", row.error.c_str());
                continue;
            }
            std::string chi = row.result.exact ? std::to_string(row.result.chi)
                                               : "[" + std::to_string(row.result.lower) + "," +
                                                     std::to_string(row.result.upper) + "]";
            std::printf("%-10s %3d %8s %6s %10.1f  %s\n", row.label.c_str(), row.n, chi.c_str(),
                        row.result.exact ? "yes" : "no", row.result.elapsed_ms,
                        row.witness_path.empty() ? "-" : row.witness_path.c_str());
        }
        for (const auto& [key, count] : exact_counts)
            std::printf("summary: order %d chi %d -> %d classes\n", key.first, key.second, count);
    }

    int exit_code = budget_hit ? kExitBudget : kExitProper;
    if (!opt.expect_file.empty()) {
        std::ifstream in(opt.expect_file);
        if (!in) throw Error(ErrorCode::ParseError, "cannot open " + opt.expect_file);
        int n, chi, count;
        bool ok = true;
        while (in >> n >> chi >> count) {
            auto it = exact_counts.find({n, chi});
            int have = it == exact_counts.end() ? 0 : it->second;
            if (have != count) {
                std::printf("expectation failed: order %d chi %d expected %d got %d\n", n, chi,
                            count, have);
                ok = false;
            }
        }
        if (!ok) exit_code = kExitNegative;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic numbers of Latin squares: partial-transversal covers"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* cmd_gen = app.add_subcommand("gen", "generate a square in the text format");
    cmd_gen->add_option("kind", gen.kind, "circulant|group|row-complete|random")
        ->required()
        ->check(CLI::IsMember({"circulant", "group", "row-complete", "random"}));
    cmd_gen->add_option("param", gen.param, "order, or group spec like z6 / z2xz4")->required();
    cmd_gen->add_option("--seed", gen.seed, "seed for random squares");
    cmd_gen->add_flag("--as-group", gen.as_group, "emit the group file instead of the square");
    cmd_gen->add_option("-o,--out", gen.out_path, "output file (default stdout)");

    std::string chi_file, chi_witness;
    bool chi_heuristic = false, chi_json = false, chi_exact = false;
    int64_t chi_ms = -1;
    uint64_t chi_nodes = 0;
    auto* cmd_chi = app.add_subcommand("chi", "chromatic number of a square file");
    cmd_chi->add_option("file", chi_file)->required();
    cmd_chi->add_flag("--heuristic", chi_heuristic, "upper-bound mode, no open-ended refutations");
    cmd_chi->add_flag("--exact", chi_exact, "exact mode (the default)")
        ->excludes("--heuristic");
    cmd_chi->add_option("--budget-ms", chi_ms, "wall-clock budget (default env or 10000)");
    cmd_chi->add_option("--budget-nodes", chi_nodes, "search node budget");
    cmd_chi->add_flag("--json", chi_json);
    cmd_chi->add_option("--witness", chi_witness, "write the witness coloring JSON here");

    std::string color_file, color_method, color_out;
    int64_t color_ms = -1;
    uint64_t color_nodes = 0;
    auto* cmd_color = app.add_subcommand("color", "produce a verified coloring as JSON");
    cmd_color->add_option("file", color_file)->required();
    cmd_color->add_option("--method", color_method, "exact|greedy|circulant|row-complete|plex")
        ->required()
        ->check(CLI::IsMember({"exact", "greedy", "circulant", "row-complete", "plex"}));
    cmd_color->add_option("--budget-ms", color_ms);
    cmd_color->add_option("--budget-nodes", color_nodes);
    cmd_color->add_option("-o,--out", color_out, "output file (default stdout)");

    std::string verify_square, verify_coloring_file;
    bool verify_json = false;
    auto* cmd_verify = app.add_subcommand("verify", "check a coloring against a square");
    cmd_verify->add_option("square", verify_square)->required();
    cmd_verify->add_option("coloring", verify_coloring_file)->required();
    cmd_verify->add_flag("--json", verify_json);

    std::string mobius_file;
    int mobius_index = 0;
    bool mobius_json = true;
    auto* cmd_mobius = app.add_subcommand("mobius", "ladder certificate for a circulant diagonal");
    cmd_mobius->add_option("file", mobius_file)->required();
    cmd_mobius->add_option("--i", mobius_index, "diagonal index")->required();
    cmd_mobius->add_flag("--json,!--text", mobius_json, "JSON output (default)");

    std::string bounds_file;
    bool bounds_json = false;
    auto* cmd_bounds = app.add_subcommand("bounds", "report all applicable bounds");
    cmd_bounds->add_option("file", bounds_file)->required();
    cmd_bounds->add_flag("--json", bounds_json);

    TableOptions table;
    auto* cmd_table = app.add_subcommand("table", "batch chromatic numbers over a catalog");
    cmd_table->add_option("--catalog", table.catalog_paths, "catalog file or directory")
        ->required();
    cmd_table->add_option("--max-order", table.max_order);
    cmd_table->add_option("--budget-ms", table.ms, "per-entry budget");
    cmd_table->add_option("--budget-nodes", table.nodes);
    cmd_table->add_option("--jobs", table.jobs, "parallel workers");
    cmd_table->add_option("--expect", table.expect_file, "expected (order chi count) lines");
    cmd_table->add_option("--witness-dir", table.witness_dir);
    cmd_table->add_flag("--json", table.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_chi->parsed())
            return run_chi(chi_file, chi_heuristic, chi_ms, chi_nodes, chi_json, chi_witness);
        if (cmd_color->parsed())
            return run_color(color_file, color_method, color_ms, color_nodes, color_out);
        if (cmd_verify->parsed()) return run_verify(verify_square, verify_coloring_file, verify_json);
        if (cmd_mobius->parsed()) return run_mobius(mobius_file, mobius_index, mobius_json);
        if (cmd_bounds->parsed()) return run_bounds(bounds_file, bounds_json);
        if (cmd_table->parsed()) return run_table(table);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return e.code() == ErrorCode::StructureViolation ? kExitNegative : kExitInput;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
