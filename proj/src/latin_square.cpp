#include "latinchroma/latin_square.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace latinchroma {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonSquare: return "NonSquare";
        case ErrorCode::BadSymbol: return "BadSymbol";
        case ErrorCode::RowRepeat: return "RowRepeat";
        case ErrorCode::ColumnRepeat: return "ColumnRepeat";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::OddOrder: return "OddOrder";
        case ErrorCode::NotCirculant: return "NotCirculant";
        case ErrorCode::ForeignCell: return "ForeignCell";
        case ErrorCode::NotRowComplete: return "NotRowComplete";
        case ErrorCode::InvalidPartition: return "InvalidPartition";
        case ErrorCode::InvalidGroup: return "InvalidGroup";
        case ErrorCode::NotLatin: return "NotLatin";
        case ErrorCode::NoIdentity: return "NoIdentity";
        case ErrorCode::NoInverse: return "NoInverse";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
        case ErrorCode::StructureViolation: return "StructureViolation";
        case ErrorCode::UncoveredCell: return "UncoveredCell";
        case ErrorCode::MethodInapplicable: return "MethodInapplicable";
        case ErrorCode::Undecidable: return "Undecidable";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

LatinSquare::LatinSquare(int n, std::vector<int> grid) : n_(n), grid_(std::move(grid)) {
    if (n_ < 1 || grid_.size() != static_cast<size_t>(n_) * n_)
        throw Error(ErrorCode::NonSquare, "expected " + std::to_string(n_) + "x" +
                                              std::to_string(n_) + " grid");
    std::vector<char> seen(n_);
    for (int r = 0; r < n_; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < n_; ++c) {
            int s = at(r, c);
            if (s < 0 || s >= n_)
                throw Error(ErrorCode::BadSymbol, "cell (" + std::to_string(r) + "," +
                                                      std::to_string(c) + ") holds " +
                                                      std::to_string(s));
            if (seen[s])
                throw Error(ErrorCode::RowRepeat, "row " + std::to_string(r) +
                                                      " repeats symbol " + std::to_string(s));
            seen[s] = 1;
        }
    }
    for (int c = 0; c < n_; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = 0; r < n_; ++r) {
            int s = at(r, c);
            if (seen[s])
                throw Error(ErrorCode::ColumnRepeat, "column " + std::to_string(c) +
                                                         " repeats symbol " + std::to_string(s));
            seen[s] = 1;
        }
    }
}

Cells LatinSquare::triples() const {
    Cells out;
    out.reserve(static_cast<size_t>(n_) * n_);
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) out.push_back({r, c, at(r, c)});
    return out;
}

bool LatinSquare::owns(const CellTriple& t) const {
    return t.r >= 0 && t.r < n_ && t.c >= 0 && t.c < n_ && at(t.r, t.c) == t.s;
}

LatinSquare validate(const std::vector<std::vector<int>>& rows) {
    int n = static_cast<int>(rows.size());
    if (n < 1) throw Error(ErrorCode::NonSquare, "empty grid");
    std::vector<int> grid;
    grid.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw Error(ErrorCode::NonSquare, "ragged row of length " +
                                                  std::to_string(row.size()) + ", expected " +
                                                  std::to_string(n));
        grid.insert(grid.end(), row.begin(), row.end());
    }
    return LatinSquare(n, std::move(grid));
}

LatinSquare circulant(int n) {
    std::vector<int> grid(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) grid[static_cast<size_t>(r) * n + c] = (r + c) % n;
    return LatinSquare(n, std::move(grid));
}

bool is_circulant(const LatinSquare& square) {
    int n = square.order();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (square.at(r, c) != (r + c) % n) return false;
    return true;
}

LatinSquare williams_row_complete(int n) {
    if (n < 2 || n % 2 != 0)
        throw Error(ErrorCode::OddOrder, "row-complete construction needs even order, got " +
                                             std::to_string(n));
    std::vector<int> first(n);
    for (int j = 1; j < n; ++j) first[j] = (j % 2 == 1) ? (j + 1) / 2 : n - j / 2;
    std::vector<int> grid(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) grid[static_cast<size_t>(r) * n + c] = (first[c] + r) % n;
    return LatinSquare(n, std::move(grid));
}

bool is_row_complete(const LatinSquare& square) {
    int n = square.order();
    std::vector<char> seen(static_cast<size_t>(n) * n, 0);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c + 1 < n; ++c) {
            int a = square.at(r, c), b = square.at(r, c + 1);
            if (seen[static_cast<size_t>(a) * n + b]) return false;
            seen[static_cast<size_t>(a) * n + b] = 1;
        }
    }
    return true;
}

bool RoleConjugate::valid() const {
    std::array<int, 3> sorted = pattern;
    std::sort(sorted.begin(), sorted.end());
    return sorted == std::array<int, 3>{0, 1, 2};
}

std::array<RoleConjugate, 6> all_role_conjugates() {
    return {RoleConjugate{{0, 1, 2}}, RoleConjugate{{0, 2, 1}}, RoleConjugate{{1, 0, 2}},
            RoleConjugate{{1, 2, 0}}, RoleConjugate{{2, 0, 1}}, RoleConjugate{{2, 1, 0}}};
}

LatinSquare conjugate(const LatinSquare& square, const RoleConjugate& rc) {
    if (!rc.valid()) throw Error(ErrorCode::SizeMismatch, "role pattern is not a permutation");
    int n = square.order();
    std::vector<int> grid(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            std::array<int, 3> t{r, c, square.at(r, c)};
            std::array<int, 3> u{t[rc.pattern[0]], t[rc.pattern[1]], t[rc.pattern[2]]};
            grid[static_cast<size_t>(u[0]) * n + u[1]] = u[2];
        }
    }
    return LatinSquare(n, std::move(grid));
}

namespace {

bool is_perm(const std::vector<int>& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

LatinSquare apply_isotopy(const LatinSquare& square, const Isotopy& iso) {
    int n = square.order();
    if (!is_perm(iso.row_perm, n) || !is_perm(iso.col_perm, n) || !is_perm(iso.sym_perm, n))
        throw Error(ErrorCode::SizeMismatch, "isotopy components must be permutations of 0.." +
                                                 std::to_string(n - 1));
    std::vector<int> grid(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            grid[static_cast<size_t>(iso.row_perm[r]) * n + iso.col_perm[c]] =
                iso.sym_perm[square.at(r, c)];
    return LatinSquare(n, std::move(grid));
}

namespace {

// Cell-by-cell backtracking in row-major order with per-row shuffled symbol
// preference. Complete, so it terminates for every n.
struct RandomFill {
    int n;
    std::vector<int> grid;
    std::vector<std::vector<int>> pref;
    std::vector<uint32_t> row_used, col_used;

    bool place(int cell) {
        if (cell == n * n) return true;
        int r = cell / n, c = cell % n;
        for (int s : pref[r]) {
            uint32_t bit = 1u << s;
            if ((row_used[r] & bit) || (col_used[c] & bit)) continue;
            grid[cell] = s;
            row_used[r] |= bit;
            col_used[c] |= bit;
            if (place(cell + 1)) return true;
            row_used[r] &= ~bit;
            col_used[c] &= ~bit;
        }
        return false;
    }
};

}  // namespace

LatinSquare random_square(int n, uint64_t seed) {
    if (n < 1) throw Error(ErrorCode::NonSquare, "order must be positive");
    if (n > 31) throw Error(ErrorCode::OrderTooLarge, "random_square supports order <= 31");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    RandomFill fill;
    fill.n = n;
    fill.grid.resize(static_cast<size_t>(n) * n);
    fill.row_used.assign(n, 0);
    fill.col_used.assign(n, 0);
    fill.pref.resize(n);
    for (auto& p : fill.pref) {
        p.resize(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
    }
    fill.place(0);
    return LatinSquare(n, std::move(fill.grid));
}

Isotopy random_isotopy(int n, uint64_t seed) {
    std::mt19937_64 rng(seed * 0xd1342543de82ef95ULL + 0x9e3779b97f4a7c15ULL);
    Isotopy iso;
    for (auto* p : {&iso.row_perm, &iso.col_perm, &iso.sym_perm}) {
        p->resize(n);
        std::iota(p->begin(), p->end(), 0);
        std::shuffle(p->begin(), p->end(), rng);
    }
    return iso;
}

}  // namespace latinchroma
