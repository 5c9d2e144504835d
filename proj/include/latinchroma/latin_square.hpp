#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "latinchroma/error.hpp"

namespace latinchroma {

/// A cell of a Latin square together with its symbol: L[r][c] = s.
struct CellTriple {
    int r = 0;
    int c = 0;
    int s = 0;

    auto operator<=>(const CellTriple&) const = default;
};

using Cells = std::vector<CellTriple>;

/// An order-n Latin square over symbols 0..n-1. Construction validates the
/// row/column permutation property; instances are immutable afterwards.
class LatinSquare {
public:
    /// Validates and takes ownership of a row-major grid. Throws Error with
    /// code NonSquare, BadSymbol, RowRepeat or ColumnRepeat.
    LatinSquare(int n, std::vector<int> grid);

    int order() const { return n_; }
    int at(int r, int c) const { return grid_[static_cast<size_t>(r) * n_ + c]; }
    int at_index(int cell) const { return grid_[cell]; }
    const std::vector<int>& cells() const { return grid_; }

    int cell_index(int r, int c) const { return r * n_ + c; }
    CellTriple triple(int r, int c) const { return {r, c, at(r, c)}; }
    CellTriple triple_at(int cell) const { return {cell / n_, cell % n_, grid_[cell]}; }
    Cells triples() const;

    /// True if every cell belongs to this square, including the symbol.
    bool owns(const CellTriple& t) const;

    bool operator==(const LatinSquare&) const = default;

private:
    int n_;
    std::vector<int> grid_;
};

/// Validate a grid given as rows. Same checks as the LatinSquare constructor
/// plus a rectangularity check (NonSquare).
LatinSquare validate(const std::vector<std::vector<int>>& rows);

/// Cayley table of Z_n: grid[r][c] = (r+c) mod n.
LatinSquare circulant(int n);

/// True iff the square is the Cayley table of Z_n in the standard labelling.
bool is_circulant(const LatinSquare& square);

/// Row-complete Latin square of even order by Williams' zigzag sequencing:
/// row 0 is 0, 1, n-1, 2, n-2, ...; row r adds r to every entry mod n.
LatinSquare williams_row_complete(int n);

/// Every ordered pair of distinct symbols appears at most once in
/// horizontally adjacent cells; with n(n-1) pairs total this means exactly once.
bool is_row_complete(const LatinSquare& square);

/// One of the six role permutations of (row, column, symbol).
/// The conjugated square has triple (t[p[0]], t[p[1]], t[p[2]]) for each
/// triple t of the source, so e.g. pattern {0,2,1} realizes (r,c,s) -> (r,s,c).
struct RoleConjugate {
    std::array<int, 3> pattern{0, 1, 2};

    static RoleConjugate identity() { return {{0, 1, 2}}; }
    static RoleConjugate transpose() { return {{1, 0, 2}}; }

    bool valid() const;
    auto operator<=>(const RoleConjugate&) const = default;
};

/// All six members of S_3 in lexicographic pattern order.
std::array<RoleConjugate, 6> all_role_conjugates();

LatinSquare conjugate(const LatinSquare& square, const RoleConjugate& rc);

/// Row, column and symbol relabellings. Each must be a permutation of 0..n-1.
struct Isotopy {
    std::vector<int> row_perm;
    std::vector<int> col_perm;
    std::vector<int> sym_perm;
};

/// result[row_perm[r]][col_perm[c]] = sym_perm[L[r][c]]. Throws SizeMismatch.
LatinSquare apply_isotopy(const LatinSquare& square, const Isotopy& iso);

/// Deterministic pseudo-random square by row-by-row backtracking with
/// seed-shuffled candidate order. The distribution is not uniform.
LatinSquare random_square(int n, uint64_t seed);

/// Seed-derived random isotopy of size n.
Isotopy random_isotopy(int n, uint64_t seed);

}  // namespace latinchroma
