#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latinchroma/latin_square.hpp"
#include "latinchroma/transversals.hpp"

namespace latinchroma {

/// Assignment of one color per cell, row-major. Proper iff every color class
/// is a partial transversal.
struct Coloring {
    int n = 0;
    int num_colors = 0;
    std::vector<int> colors;

    int at(int r, int c) const { return colors[static_cast<size_t>(r) * n + c]; }
};

/// A monochromatic violation: two or more cells of one color sharing a row,
/// column or symbol.
struct ColorClash {
    int color = 0;
    char kind = 'r';  // 'r' row, 'c' column, 's' symbol
    int index = 0;    // the shared row/column/symbol
    Cells cells;
};

struct VerifyReport {
    bool proper = false;
    int distinct_colors = 0;
    std::vector<ColorClash> clashes;
};

/// Checks that every color class is a partial transversal. Throws
/// UncoveredCell if the assignment does not cover the square.
VerifyReport verify_coloring(const LatinSquare& square, const Coloring& coloring);

/// DSATUR greedy coloring: highest saturation first, ties by degree among
/// uncolored vertices, then least cell index. Always <= 3n-2 colors.
Coloring greedy_coloring(const LatinSquare& square);

/// First-fit greedy along the given cell order (a permutation of 0..n^2-1).
Coloring greedy_coloring(const LatinSquare& square, std::span<const int> cell_order);

struct Budget {
    int64_t ms = 10'000;
    uint64_t max_nodes = 500'000'000;

    /// Reads LATIN_CHROMA_BUDGET_MS when set.
    static Budget from_env();
};

enum class LowerBoundProof {
    RowClique,   // chi equals the trivial bound n
    ExhaustedK,  // every k < chi was exhausted (coloring search or
                 // transversal-packing exhaustion for k in {n, n+1})
};

struct ChiResult {
    int chi = 0;  // best known number of colors (= upper)
    bool exact = false;
    int lower = 0;
    int upper = 0;
    Coloring witness;
    LowerBoundProof lower_bound_proof = LowerBoundProof::RowClique;
    uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

/// Exact chromatic number by k-colorability search from the lower bound
/// upward. k = n is decided by orthogonal-mate exact cover, k = n+1 is
/// refuted by transversal absence when applicable, larger k by exhaustive
/// backtracking with the first row pre-colored 0..n-1. Returns exact=false
/// with the best interval when the budget runs out.
ChiResult exact_chromatic(const LatinSquare& square, const Budget& budget = {});

/// Upper-bound-first mode: mate check, DSATUR restarts, then descending
/// k-colorability attempts within budget. Never runs open-ended refutations.
ChiResult heuristic_chromatic(const LatinSquare& square, const Budget& budget = {});

/// The translation applied to X and Y in the even-circulant construction:
/// (m, m+1, 1) when m % 3 == 0, else (m-1, m, -1).
std::array<int, 3> circulant_shift_vector(int m);

/// The distinguished cells of the even-order construction (n = 2m >= 4):
/// X = { (j, 3j, 4j) : j in [k] } with k = ceil(m/2), X' = X + shift,
/// Y = { x_j + (0, 2k, 2k) : j in [m-k] }, Y' = Y + shift.
struct CirculantEvenParts {
    int n = 0;
    int m = 0;
    int k = 0;
    std::array<int, 3> shift{};
    Cells x, x_shifted, y, y_shifted;
};

CirculantEvenParts circulant_even_parts(int n);

/// Proper coloring of the circulant with n colors (odd n, by right
/// diagonals) or n+2 colors (even n, ladder construction). The result is
/// re-verified before being returned.
Coloring circulant_coloring(int n);

/// Proper 2n-coloring of a row-complete square: cell (i,j) with j < n-1 gets
/// its right neighbor's symbol as color, the last column gets n new colors.
/// Throws NotRowComplete.
Coloring row_complete_coloring(const LatinSquare& square);

/// Colors each plex of the partition with its own fresh palette by first-fit
/// greedy; a k-plex takes at most 3k-2 colors, so the total is <= 3n-2d.
Coloring plex_bound_coloring(const LatinSquare& square, const PlexPartition& partition);

struct BoundReport {
    int n = 0;
    int lower = 0;           // clique bound, raised by transversal analysis when run
    bool transversal_analysis = false;
    int greedy_colors = 0;   // DSATUR result
    int greedy_guarantee = 0;  // 3n-2
    int disjoint_transversals = 0;
    bool packing_exact = false;
    bool chi_equals_n = false;           // t >= n-1 with exact packing
    std::optional<int> corollary_bound;  // 3n-2t-2 when t <= n-2
    std::optional<int> row_complete_bound;  // 2n
    std::optional<int> circulant_bound;     // n or n+2
    std::string asymptotic_note;
};

/// Bounds from every applicable route. Exact packing is attempted for
/// n <= packing_exact_order, otherwise the packing row is a lower bound.
BoundReport bound_report(const LatinSquare& square,
                         int packing_exact_order = kDefaultPackingExactOrder);

/// Upper-bound check chi <= n+1 (odd) / n+2 (even) for an exact result.
/// A reporting predicate, never used as an assumption.
bool conjectured_bound_holds(const LatinSquare& square, const ChiResult& result);

}  // namespace latinchroma
