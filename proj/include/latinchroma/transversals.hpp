#pragma once

#include <cstdint>
#include <vector>

#include "latinchroma/latin_square.hpp"

namespace latinchroma {

/// Largest order for which the packing search is exhaustive by default.
inline constexpr int kDefaultPackingExactOrder = 7;

/// True iff the cells are pairwise distinct in row, column and symbol.
/// Throws ForeignCell if a cell does not belong to the square.
bool is_partial_transversal(const LatinSquare& square, const Cells& cells);

/// Exact number of transversals. Uses a layered (column-set, symbol-set)
/// dynamic program for n <= 16, plain row backtracking above that.
uint64_t count_transversals(const LatinSquare& square);

bool has_transversal(const LatinSquare& square);

/// All transversals in deterministic order: rows ascending, columns tried in
/// ascending order. Stops after `limit` witnesses.
std::vector<Cells> enumerate_transversals(const LatinSquare& square, size_t limit = SIZE_MAX);

struct MaxPartialTransversal {
    int length = 0;
    Cells witness;
};

/// Exact maximum partial transversal length with a witness attaining it.
MaxPartialTransversal max_partial_transversal(const LatinSquare& square);

/// All maximal partial transversals (no cell can be added), desk scale n <= 8.
std::vector<Cells> maximal_partial_transversals(const LatinSquare& square);

struct TransversalPacking {
    int count = 0;
    std::vector<Cells> transversals;
    bool exact = false;
};

/// Maximum number of pairwise disjoint transversals. Exhaustive backtracking
/// over the full transversal list, branching on the least uncovered cell, for
/// n <= exact_order; a greedy maximal packing flagged exact=false otherwise.
TransversalPacking max_disjoint_transversals(const LatinSquare& square,
                                             int exact_order = kDefaultPackingExactOrder);

struct MateResult {
    bool exists = false;
    std::vector<Cells> decomposition;  // n disjoint transversals when exists
};

/// A square has an orthogonal mate iff it decomposes into n disjoint
/// transversals; decided by exact cover over the transversal list.
MateResult has_orthogonal_mate(const LatinSquare& square);

/// Exactly k representatives of every row, column and symbol.
bool is_plex(const LatinSquare& square, const Cells& cells, int k);

struct Plex {
    Cells cells;
    int k = 0;
};

struct PlexPartition {
    std::vector<Plex> parts;
};

/// Validates that the parts are plexes, pairwise disjoint and cover the
/// square. Throws InvalidPartition otherwise.
PlexPartition make_plex_partition(const LatinSquare& square, const std::vector<Cells>& parts);

/// For the circulant of even order 2m: the partition into the m 2-plexes
/// T_{2j} U T_{2j+1} built from consecutive right diagonals.
PlexPartition diagonal_plex_partition(const LatinSquare& square);

/// Cells of the i-th right diagonal of the order-n circulant:
/// { (r, r+i, 2r+i) mod n }.
Cells right_diagonal(int n, int i);

/// Per-square check of the Brualdi-Stein statement: an even-order square has
/// a partial transversal of length n-1. Never assumed elsewhere.
bool brualdi_stein_holds(const LatinSquare& square);

/// Per-square check of the Ryser statement: an odd-order square has a
/// transversal. Never assumed elsewhere.
bool ryser_holds(const LatinSquare& square);

}  // namespace latinchroma
