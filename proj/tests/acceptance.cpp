// Acceptance suite: runs every stated criterion and prints one line each.
// Exit code is the number of failed criteria (skips are reported loudly but
// do not fail the run; a skip only happens when a required external input is
// absent by design).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "latinchroma/coloring.hpp"
#include "latinchroma/groups.hpp"
#include "latinchroma/io.hpp"
#include "latinchroma/ls_graph.hpp"
#include "latinchroma/transversals.hpp"
#include "test_support.hpp"

using namespace latinchroma;
namespace lct = latinchroma::testing;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!pass) ++failures;
}

void report_skip(int criterion, const std::string& detail) {
    std::printf("[SKIP] criterion %2d: %s\n", criterion, detail.c_str());
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- criterion 1: orders 2..5 exact values -------------------------------
void criterion_1() {
    auto t0 = Clock::now();
    std::map<int, std::multiset<int>> expected{
        {2, {4}}, {3, {3}}, {4, {4, 6}}, {5, {5, 6}}};
    bool ok = true;
    std::string detail;
    for (auto& [n, chis] : expected) {
        std::multiset<int> got;
        for (const auto& entry :
             load_catalog(lct::data_path("catalogs/order" + std::to_string(n) + ".txt"))) {
            ChiResult result = exact_chromatic(entry.square);
            ok = ok && result.exact;
            got.insert(result.chi);
        }
        if (got != chis) ok = false;
    }
    double elapsed = seconds_since(t0);
    ok = ok && elapsed < 10.0;
    report(1, ok, "orders 2-5 reproduce {4},{3},{4,6},{5,6} in " +
                      std::to_string(elapsed) + "s (<10s)");
}

// ---- criterion 2: order-6 catalog splits 6/6 at chi 7/8 ------------------
void criterion_2() {
    auto t0 = Clock::now();
    auto catalog = load_catalog(lct::data_path("catalogs/order6.txt"));
    Budget budget;
    budget.ms = 600'000 / static_cast<int64_t>(catalog.size());
    int chi7 = 0, chi8 = 0;
    bool all_exact = true;
    for (const auto& entry : catalog) {
        ChiResult result = exact_chromatic(entry.square, budget);
        all_exact = all_exact && result.exact;
        if (result.exact && result.chi == 7) ++chi7;
        if (result.exact && result.chi == 8) ++chi8;
    }
    double elapsed = seconds_since(t0);
    bool ok = all_exact && chi7 == 6 && chi8 == 6 && catalog.size() == 12 && elapsed < 600.0;
    report(2, ok, "order-6 catalog: " + std::to_string(chi7) + " classes at chi=7, " +
                      std::to_string(chi8) + " at chi=8 in " + std::to_string(elapsed) + "s");
}

// ---- criterion 3: order-7 catalog (external input) -----------------------
void criterion_3() {
    std::string path = lct::data_path("catalogs/order7.txt");
    if (const char* env = std::getenv("LATIN_CHROMA_CATALOG7")) path = env;
    if (!std::filesystem::exists(path)) {
        // The 147-class catalog with its published numbering is an external
        // input this repository does not bundle. Run the unconditional part:
        // order-7 instances must solve to chi in {7,8} at desk scale.
        bool sane = true;
        for (uint64_t seed = 0; seed < 20; ++seed) {
            ChiResult result = exact_chromatic(random_square(7, seed));
            sane = sane && result.exact && (result.chi == 7 || result.chi == 8);
        }
        ChiResult z7 = exact_chromatic(circulant(7));
        sane = sane && z7.exact && z7.chi == 7;
        report_skip(3, std::string("order-7 catalog not supplied (external input; labels "
                                   "not reconstructible); sanity: 21 order-7 squares solved "
                                   "exactly, chi in {7,8}: ") +
                           (sane ? "ok" : "FAILED"));
        if (!sane) ++failures;
        return;
    }
    auto catalog = load_catalog(path);
    const std::set<std::string> chi7_classes{"7.3", "7.6", "7.7", "7.71", "7.105", "7.137"};
    Budget budget;
    budget.ms = 10'000;
    int solved = 0, named_solved = 0;
    bool values_ok = true, subset_ok = true;
    for (const auto& entry : catalog) {
        ChiResult result = exact_chromatic(entry.square, budget);
        if (!result.exact) continue;
        ++solved;
        values_ok = values_ok && (result.chi == 7 || result.chi == 8);
        if (chi7_classes.count(entry.label)) {
            ++named_solved;
            subset_ok = subset_ok && result.chi == 7;
        } else {
            subset_ok = subset_ok && result.chi == 8;
        }
    }
    bool ok = values_ok && subset_ok && named_solved == 6 && solved >= 16;
    report(3, ok, "order-7 catalog: " + std::to_string(solved) + " classes solved, chi=7 set "
                      "matches the named classes");
}

// ---- criterion 4: constructive circulant colorings -----------------------
void criterion_4() {
    auto t0 = Clock::now();
    bool ok = true;
    for (int n = 1; n <= 41; n += 2) {
        Coloring coloring = circulant_coloring(n);
        ok = ok && coloring.num_colors == n && verify_coloring(circulant(n), coloring).proper;
    }
    for (int n = 2; n <= 40; n += 2) {
        Coloring coloring = circulant_coloring(n);
        ok = ok && coloring.num_colors == n + 2 && verify_coloring(circulant(n), coloring).proper;
    }
    double elapsed = seconds_since(t0);
    ok = ok && elapsed < 5.0;
    report(4, ok, "constructive colorings: n colors (odd n<=41), n+2 (even n<=40), proper, in " +
                      std::to_string(elapsed) + "s (<5s)");
}

// ---- criterion 5: tightness on even circulants ---------------------------
void criterion_5() {
    bool ok = true;
    std::string chis;
    for (int n = 2; n <= 12; n += 2) {
        ChiResult result = exact_chromatic(circulant(n));
        ok = ok && result.exact && result.chi == n + 2;
        chis += std::to_string(result.chi) + (n < 12 ? "," : "");
    }
    report(5, ok, "exact chi(circulant even 2..12) = n+2: got {" + chis + "}");
}

// ---- criterion 6: independence of the distinguished sets up to 60 --------
void criterion_6() {
    bool ok = true;
    for (int n = 4; n <= 60; n += 2) {
        CirculantEvenParts parts = circulant_even_parts(n);
        LatinSquare square = circulant(n);
        Cells xs = parts.x;
        xs.insert(xs.end(), parts.x_shifted.begin(), parts.x_shifted.end());
        Cells ys = parts.y;
        ys.insert(ys.end(), parts.y_shifted.begin(), parts.y_shifted.end());
        ok = ok && is_partial_transversal(square, xs) && is_partial_transversal(square, ys);
    }
    report(6, ok, "X u X' and Y u Y' independent for every even order 4..60");
}

// ---- criterion 7: ladder certificates, exhaustive ------------------------
void criterion_7() {
    bool ok = true;
    for (int n = 2; n <= 20; ++n) {
        LatinSquare square = circulant(n);
        LSGraph graph(square);
        for (int i = 0; i < n; ++i) {
            MobiusCertificate cert;
            try {
                cert = mobius_check(square, i);
            } catch (const Error&) {
                ok = false;
                continue;
            }
            ok = ok && static_cast<int>(cert.rim.size()) == 2 * n &&
                 static_cast<int>(cert.rungs.size()) == n;
            if (n % 2 == 0) {
                ok = ok && static_cast<int>(cert.nearly_antipodal.size()) == 2 * n;
                for (auto [a, b] : cert.nearly_antipodal) {
                    Cells remaining;
                    for (int id : cert.rim)
                        if (id != a && id != b) remaining.push_back(square.triple_at(id));
                    ok = ok && is_bipartite(induced(graph, remaining)).bipartite;
                }
            }
        }
    }
    report(7, ok, "ladder structure verified for all i, n in 2..20; every reported nearly "
                  "antipodal removal is bipartite");
}

// ---- criterion 8: row-complete colorings ---------------------------------
void criterion_8() {
    bool ok = true;
    for (int n = 2; n <= 20; n += 2) {
        LatinSquare square = williams_row_complete(n);
        Coloring coloring = row_complete_coloring(square);
        ok = ok && coloring.num_colors == 2 * n && verify_coloring(square, coloring).proper;
    }
    // order 4 must match the published subscript pattern up to renaming
    std::vector<int> published{1, 3, 2, 4, 2, 0, 3, 5, 3, 1, 0, 6, 0, 2, 1, 7};
    Coloring built = row_complete_coloring(williams_row_complete(4));
    std::map<int, int> forward, backward;
    bool match = true;
    for (size_t i = 0; i < published.size(); ++i) {
        auto [fit, fnew] = forward.emplace(built.colors[i], published[i]);
        match = match && (fnew || fit->second == published[i]);
        auto [bit, bnew] = backward.emplace(published[i], built.colors[i]);
        match = match && (bnew || bit->second == built.colors[i]);
    }
    ok = ok && match;
    report(8, ok, "row-complete colorings proper with exactly 2n colors (even n<=20); order-4 "
                  "matches the published pattern");
}

// ---- criterion 9: chi = n iff orthogonal mate, with witnesses ------------
void criterion_9() {
    bool ok = true;
    std::vector<LatinSquare> squares;
    for (const auto& entry : lct::catalog_corpus(5)) squares.push_back(entry.square);
    for (uint64_t seed = 0; seed < 50; ++seed)
        squares.push_back(random_square(2 + static_cast<int>(seed % 4), seed));
    for (const auto& square : squares) {
        int n = square.order();
        ChiResult chi = exact_chromatic(square);
        MateResult mate = has_orthogonal_mate(square);
        ok = ok && chi.exact && chi.chi >= n && ((chi.chi == n) == mate.exists);
        ok = ok && verify_coloring(square, chi.witness).proper;
        if (mate.exists) {
            std::set<std::pair<int, int>> covered;
            for (const auto& t : mate.decomposition) {
                ok = ok && is_partial_transversal(square, t) &&
                     static_cast<int>(t.size()) == n;
                for (const auto& cell : t) covered.insert({cell.r, cell.c});
            }
            ok = ok && static_cast<int>(covered.size()) == n * n;
        }
    }
    report(9, ok, "chi = n iff orthogonal mate on " + std::to_string(squares.size()) +
                      " squares of order <= 5, witnesses cross-verified");
}

// ---- criterion 10: group dichotomy ----------------------------------------
void criterion_10() {
    bool ok = true;
    std::vector<GroupTable> groups;
    for (int n = 1; n <= 8; ++n) groups.push_back(cyclic_group(n));
    groups.push_back(group_from_spec("z2xz2"));
    groups.push_back(group_from_spec("z2xz4"));
    groups.push_back(group_from_spec("z2xz2xz2"));
    for (const auto& group : groups) {
        bool hp = hall_paige_product(group).holds;
        bool has_t = count_transversals(cayley_square(group)) > 0;
        bool equal_n = predict_chi_class(group) == ChiClass::EqualN;
        ok = ok && hp == has_t && hp == equal_n;
        ok = ok && hp == !unique_involution(group);  // all listed groups are abelian
    }
    report(10, ok, "product condition == transversal existence == Equal_n prediction on " +
                       std::to_string(groups.size()) + " groups; abelian involution criterion "
                       "agrees");
}

// ---- criterion 11: maximal partial transversals vs independent sets ------
void criterion_11() {
    bool ok = true;
    for (uint64_t seed = 0; seed < 20; ++seed) {
        int n = 3 + static_cast<int>(seed % 3);
        LatinSquare square = random_square(n, 1000 + seed);
        auto maximal = maximal_partial_transversals(square);
        std::set<std::vector<int>> as_ids;
        for (const auto& cells : maximal) {
            std::vector<int> ids;
            for (const auto& cell : cells) ids.push_back(cell.r * n + cell.c);
            std::sort(ids.begin(), ids.end());
            as_ids.insert(std::move(ids));
        }
        LSGraph graph(square);
        ok = ok && as_ids == lct::oracle_maximal_independent_sets(graph);
    }
    report(11, ok, "maximal partial transversals equal the generic enumerator's maximal "
                   "independent sets on 20 random squares of orders 3-5");
}

// ---- criterion 12: bounds sanity over the corpus --------------------------
void criterion_12() {
    bool ok = true;
    std::vector<LatinSquare> corpus;
    for (const auto& entry : lct::catalog_corpus(6)) corpus.push_back(entry.square);
    for (int n = 1; n <= 12; ++n) corpus.push_back(circulant(n));
    for (int n = 2; n <= 8; n += 2) corpus.push_back(williams_row_complete(n));
    for (const char* spec : {"z2xz2", "z2xz4", "z2xz2xz2"})
        corpus.push_back(cayley_square(group_from_spec(spec)));
    for (uint64_t seed = 0; seed < 10; ++seed)
        corpus.push_back(random_square(3 + static_cast<int>(seed % 6), 77 + seed));
    for (const auto& square : corpus) {
        int n = square.order();
        BoundReport report_ = bound_report(square);
        ChiResult chi = exact_chromatic(square);
        ok = ok && n <= chi.lower && chi.upper <= report_.greedy_colors;
        ok = ok && report_.greedy_colors <= report_.greedy_guarantee;
        if (chi.exact) {
            if (report_.corollary_bound) ok = ok && chi.chi <= *report_.corollary_bound;
            if (report_.row_complete_bound) ok = ok && chi.chi <= *report_.row_complete_bound;
            if (report_.circulant_bound) ok = ok && chi.chi <= *report_.circulant_bound;
            if (report_.chi_equals_n) ok = ok && chi.chi == n;
            ok = ok && report_.lower <= chi.chi;
        }
    }
    report(12, ok, "n <= chi <= greedy <= 3n-2 and every constructive bound dominates the "
                   "exact value on " + std::to_string(corpus.size()) + " corpus squares");
}

// ---- criterion 13: order-8 heuristic mode ---------------------------------
void criterion_13() {
    int good = 0;
    for (uint64_t seed = 0; seed < 10; ++seed) {
        LatinSquare square = random_square(8, 500 + seed);
        Budget budget;
        budget.ms = 300'000;
        ChiResult result = heuristic_chromatic(square, budget);
        if (result.upper <= 10 && verify_coloring(square, result.witness).proper &&
            result.witness.num_colors == result.upper)
            ++good;
    }
    report(13, good >= 9, "heuristic mode found verified colorings with <= 10 colors on " +
                              std::to_string(good) + "/10 random order-8 squares (need >= 9)");
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    std::printf("acceptance: %d failure(s) in %.1fs\n", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
