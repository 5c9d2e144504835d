#include <doctest.h>

#include <map>
#include <numeric>

#include "latinchroma/coloring.hpp"
#include "latinchroma/groups.hpp"
#include "latinchroma/ls_graph.hpp"
#include "test_support.hpp"

using namespace latinchroma;
namespace lct = latinchroma::testing;

namespace {

Coloring coloring_from_rows(const std::vector<std::vector<int>>& rows) {
    Coloring coloring;
    coloring.n = static_cast<int>(rows.size());
    for (const auto& row : rows)
        coloring.colors.insert(coloring.colors.end(), row.begin(), row.end());
    std::vector<int> sorted = coloring.colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    coloring.num_colors = static_cast<int>(sorted.size());
    return coloring;
}

bool same_up_to_renaming(const Coloring& a, const Coloring& b) {
    if (a.n != b.n || a.num_colors != b.num_colors) return false;
    std::map<int, int> forward, backward;
    for (size_t i = 0; i < a.colors.size(); ++i) {
        auto [fit, fnew] = forward.emplace(a.colors[i], b.colors[i]);
        if (!fnew && fit->second != b.colors[i]) return false;
        auto [bit, bnew] = backward.emplace(b.colors[i], a.colors[i]);
        if (!bnew && bit->second != a.colors[i]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("verify_coloring") {
    LatinSquare c3 = circulant(3);

    // one color per cell is always proper
    Coloring singletons;
    singletons.n = 3;
    singletons.colors.resize(9);
    std::iota(singletons.colors.begin(), singletons.colors.end(), 0);
    singletons.num_colors = 9;
    CHECK(verify_coloring(c3, singletons).proper);

    // a single color is improper with clashes listed
    Coloring monochrome{3, 1, std::vector<int>(9, 0)};
    VerifyReport report = verify_coloring(c3, monochrome);
    CHECK_FALSE(report.proper);
    CHECK(report.clashes.size() == 9);  // 3 rows + 3 columns + 3 symbols

    CHECK_THROWS_AS(verify_coloring(c3, Coloring{3, 1, std::vector<int>(4, 0)}), Error);
    CHECK_THROWS_AS(verify_coloring(c3, Coloring{3, 1, std::vector<int>(9, -1)}), Error);
}

TEST_CASE("published coloring of the order-4 circulant is proper with 6 colors") {
    Coloring published = coloring_from_rows({{4, 1, 5, 3},
                                             {5, 0, 4, 2},
                                             {3, 2, 1, 0},
                                             {0, 3, 2, 1}});
    CHECK(published.num_colors == 6);
    CHECK(verify_coloring(circulant(4), published).proper);
}

TEST_CASE("published colorings of orders 6 and 8 are proper") {
    Coloring z6 = coloring_from_rows({{6, 1, 3, 2, 7, 5},
                                      {5, 0, 1, 6, 3, 4},
                                      {4, 5, 0, 1, 2, 3},
                                      {3, 4, 7, 0, 6, 2},
                                      {2, 6, 5, 4, 1, 0},
                                      {0, 3, 2, 5, 4, 1}});
    CHECK(z6.num_colors == 8);
    CHECK(verify_coloring(circulant(6), z6).proper);

    Coloring z8 = coloring_from_rows({{8, 1, 2, 3, 9, 5, 6, 7},
                                      {6, 0, 1, 8, 2, 4, 5, 9},
                                      {7, 6, 0, 1, 3, 2, 4, 5},
                                      {9, 7, 6, 0, 8, 3, 2, 4},
                                      {5, 4, 7, 9, 1, 0, 3, 8},
                                      {3, 5, 4, 6, 7, 1, 0, 2},
                                      {2, 3, 5, 4, 6, 7, 1, 0},
                                      {0, 2, 3, 5, 4, 6, 7, 1}});
    CHECK(z8.num_colors == 10);
    CHECK(verify_coloring(circulant(8), z8).proper);
}

TEST_CASE("greedy coloring") {
    CHECK(greedy_coloring(circulant(1)).num_colors == 1);
    Coloring c3 = greedy_coloring(circulant(3));
    CHECK(c3.num_colors <= 4);   // DSATUR does well here
    CHECK(c3.num_colors == 3);   // recorded value for the pinned tie-breaks
    CHECK(verify_coloring(circulant(3), c3).proper);

    for (const auto& entry : lct::catalog_corpus(6)) {
        Coloring greedy = greedy_coloring(entry.square);
        CHECK(verify_coloring(entry.square, greedy).proper);
        CHECK(greedy.num_colors <= 3 * entry.square.order() - 2);
    }

    // fixed-order greedy obeys the same guarantee for arbitrary orders
    LatinSquare square = random_square(6, 3);
    std::vector<int> order(36);
    std::iota(order.begin(), order.end(), 0);
    std::reverse(order.begin(), order.end());
    Coloring fixed = greedy_coloring(square, order);
    CHECK(verify_coloring(square, fixed).proper);
    CHECK(fixed.num_colors <= 16);
}

TEST_CASE("exact chromatic numbers of the bundled classes match the table") {
    std::map<std::string, int> expected{{"2.1", 4}, {"3.1", 3}, {"4.1", 6},
                                        {"4.2", 4}, {"5.1", 5}, {"5.2", 6}};
    for (const auto& entry : lct::catalog_corpus(5)) {
        ChiResult result = exact_chromatic(entry.square);
        CHECK(result.exact);
        CHECK(result.chi == expected.at(entry.name));
        CHECK(verify_coloring(entry.square, result.witness).proper);
        CHECK(result.witness.num_colors == result.chi);
    }
}

TEST_CASE("exact chromatic number equals n exactly for mate squares") {
    for (const auto& entry : lct::catalog_corpus(5)) {
        int n = entry.square.order();
        ChiResult result = exact_chromatic(entry.square);
        CHECK(result.chi >= n);
        CHECK((result.chi == n) == has_orthogonal_mate(entry.square).exists);
    }
    for (uint64_t seed = 0; seed < 10; ++seed) {
        LatinSquare square = random_square(4 + seed % 2, seed);
        ChiResult result = exact_chromatic(square);
        CHECK((result.chi == square.order()) == has_orthogonal_mate(square).exists);
    }
}

TEST_CASE("chi is a main-class invariant at desk scale") {
    for (const auto& entry : lct::catalog_corpus(5)) {
        int chi = exact_chromatic(entry.square).chi;
        for (const auto& rc : all_role_conjugates())
            CHECK(exact_chromatic(conjugate(entry.square, rc)).chi == chi);
        for (uint64_t seed = 0; seed < 10; ++seed) {
            Isotopy iso = random_isotopy(entry.square.order(), seed);
            CHECK(exact_chromatic(apply_isotopy(entry.square, iso)).chi == chi);
        }
    }
}

TEST_CASE("budget exhaustion yields an honest interval") {
    Budget tiny;
    tiny.ms = 60'000;
    tiny.max_nodes = 1;  // forces the color searches to give up immediately
    // circulant(12): the transversal analysis pins lower = 14 without search,
    // the heuristic upper stays above it, and k = 14 cannot run on one node
    ChiResult result = exact_chromatic(circulant(12), tiny);
    CHECK_FALSE(result.exact);
    CHECK(result.lower == 14);
    CHECK(result.upper >= result.lower);
    CHECK(verify_coloring(circulant(12), result.witness).proper);
    CHECK(result.witness.num_colors == result.upper);
}

TEST_CASE("shift vector follows the stated parity of m") {
    CHECK(circulant_shift_vector(6) == std::array<int, 3>{6, 7, 1});
    CHECK(circulant_shift_vector(7) == std::array<int, 3>{6, 7, -1});
    CHECK(circulant_shift_vector(3) == std::array<int, 3>{3, 4, 1});
    CHECK(circulant_shift_vector(2) == std::array<int, 3>{1, 2, -1});
}

TEST_CASE("construction parts for order 12 and 14") {
    CirculantEvenParts p12 = circulant_even_parts(12);
    CHECK(p12.k == 3);
    CHECK(p12.shift == std::array<int, 3>{6, 7, 1});
    CHECK(p12.x.front() == CellTriple{0, 0, 0});
    CHECK(p12.x_shifted.front() == CellTriple{6, 7, 1});
    CHECK(p12.x == Cells{{0, 0, 0}, {1, 3, 4}, {2, 6, 8}});
    CHECK(p12.x_shifted == Cells{{6, 7, 1}, {7, 10, 5}, {8, 1, 9}});
    CHECK(p12.y == Cells{{0, 6, 6}, {1, 9, 10}, {2, 0, 2}});
    CHECK(p12.y_shifted == Cells{{6, 1, 7}, {7, 4, 11}, {8, 7, 3}});

    CirculantEvenParts p14 = circulant_even_parts(14);
    CHECK(p14.k == 4);
    CHECK(p14.shift == std::array<int, 3>{6, 7, -1});
    CHECK(p14.x == Cells{{0, 0, 0}, {1, 3, 4}, {2, 6, 8}, {3, 9, 12}});
    CHECK(p14.x_shifted == Cells{{6, 7, 13}, {7, 10, 3}, {8, 13, 7}, {9, 2, 11}});
    CHECK(p14.y == Cells{{0, 8, 8}, {1, 11, 12}, {2, 0, 2}});
    CHECK(p14.y_shifted == Cells{{6, 1, 7}, {7, 4, 11}, {8, 7, 1}});
}

TEST_CASE("circulant coloring sizes and properness") {
    for (int n = 1; n <= 16; ++n) {
        Coloring coloring = circulant_coloring(n);
        CHECK(coloring.num_colors == (n % 2 == 1 ? n : n + 2));
        CHECK(verify_coloring(circulant(n), coloring).proper);
    }
}

TEST_CASE("distinguished sets are independent for even orders") {
    for (int n = 4; n <= 24; n += 2) {
        CirculantEvenParts parts = circulant_even_parts(n);
        LatinSquare square = circulant(n);
        Cells xs = parts.x;
        xs.insert(xs.end(), parts.x_shifted.begin(), parts.x_shifted.end());
        CHECK(is_partial_transversal(square, xs));
        Cells ys = parts.y;
        ys.insert(ys.end(), parts.y_shifted.begin(), parts.y_shifted.end());
        CHECK(is_partial_transversal(square, ys));
    }
}

TEST_CASE("row-complete coloring") {
    // the order-4 published coloring, colors as subscripts
    Coloring expected = coloring_from_rows({{1, 3, 2, 4},
                                            {2, 0, 3, 5},
                                            {3, 1, 0, 6},
                                            {0, 2, 1, 7}});
    Coloring built = row_complete_coloring(williams_row_complete(4));
    CHECK(built.num_colors == 8);
    CHECK(same_up_to_renaming(built, expected));
    CHECK(built.colors == expected.colors);  // the construction reproduces it exactly

    CHECK(row_complete_coloring(williams_row_complete(2)).num_colors == 4);
    Coloring w6 = row_complete_coloring(williams_row_complete(6));
    CHECK(w6.num_colors == 12);
    CHECK(verify_coloring(williams_row_complete(6), w6).proper);

    CHECK_THROWS_AS(row_complete_coloring(circulant(4)), Error);
}

TEST_CASE("row-complete color classes are right-neighbor fibers") {
    for (int n = 2; n <= 12; n += 2) {
        LatinSquare square = williams_row_complete(n);
        Coloring coloring = row_complete_coloring(square);
        for (int color = 0; color < n; ++color) {
            Cells cls;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    if (coloring.at(r, c) == color) cls.push_back(square.triple(r, c));
            CHECK(is_partial_transversal(square, cls));
            for (const auto& cell : cls) {
                CHECK(cell.c + 1 < n);
                CHECK(square.at(cell.r, cell.c + 1) == color);
            }
        }
    }
}

TEST_CASE("plex-partition coloring obeys the 3n-2d budget") {
    // three disjoint diagonal transversals of the order-3 circulant: d = 3
    std::vector<Cells> diagonals;
    for (int i = 0; i < 3; ++i) diagonals.push_back(right_diagonal(3, i));
    Coloring c3 = plex_bound_coloring(circulant(3), make_plex_partition(circulant(3), diagonals));
    CHECK(c3.num_colors <= 3);
    CHECK(verify_coloring(circulant(3), c3).proper);

    Coloring c4 = plex_bound_coloring(circulant(4), diagonal_plex_partition(circulant(4)));
    CHECK(c4.num_colors <= 8);  // 3n-2d = 12-4
    CHECK(verify_coloring(circulant(4), c4).proper);

    Coloring c8 = plex_bound_coloring(circulant(8), diagonal_plex_partition(circulant(8)));
    CHECK(c8.num_colors <= 16);  // 24-8
    CHECK(verify_coloring(circulant(8), c8).proper);
}

TEST_CASE("bound report") {
    BoundReport b5 = bound_report(circulant(5));
    CHECK(b5.chi_equals_n);
    CHECK(b5.disjoint_transversals == 5);
    CHECK(b5.circulant_bound == 5);

    BoundReport b4 = bound_report(circulant(4));
    CHECK(b4.disjoint_transversals == 0);
    CHECK(b4.corollary_bound == 10);
    CHECK(b4.greedy_guarantee == 10);
    CHECK(b4.circulant_bound == 6);
    CHECK(b4.lower == 6);  // no transversal and max partial transversal 3

    BoundReport bw = bound_report(williams_row_complete(4));
    CHECK(bw.row_complete_bound == 8);
}

TEST_CASE("bounds are mutually consistent on the corpus") {
    for (const auto& entry : lct::catalog_corpus(6)) {
        int n = entry.square.order();
        BoundReport report = bound_report(entry.square);
        ChiResult exact = exact_chromatic(entry.square);
        CHECK(report.lower >= n);
        CHECK(report.lower <= exact.chi);
        CHECK(exact.chi <= report.greedy_colors);
        CHECK(report.greedy_colors <= report.greedy_guarantee);
        if (report.corollary_bound) CHECK(exact.chi <= *report.corollary_bound);
        if (report.row_complete_bound) CHECK(exact.chi <= *report.row_complete_bound);
        if (report.circulant_bound) CHECK(exact.chi <= *report.circulant_bound);
        if (report.chi_equals_n) CHECK(exact.chi == n);
    }
}

TEST_CASE("conjectured bound holds on everything solved here") {
    for (const auto& entry : lct::catalog_corpus(6))
        CHECK(conjectured_bound_holds(entry.square, exact_chromatic(entry.square)));
    for (int n = 1; n <= 10; ++n)
        CHECK(conjectured_bound_holds(circulant(n), exact_chromatic(circulant(n))));
}
