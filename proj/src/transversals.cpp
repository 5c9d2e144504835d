#include "latinchroma/transversals.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_map>

namespace latinchroma {

namespace {

std::string cell_str(const CellTriple& t) {
    return "(" + std::to_string(t.r) + "," + std::to_string(t.c) + "," + std::to_string(t.s) + ")";
}

void require_owned(const LatinSquare& square, const Cells& cells) {
    for (const auto& t : cells)
        if (!square.owns(t))
            throw Error(ErrorCode::ForeignCell, cell_str(t) + " does not belong to the square");
}

// Cell bitmask for orders up to 31 (961 cells).
struct CellMask {
    static constexpr int kWords = 16;
    std::array<uint64_t, kWords> w{};

    void set(int cell) { w[cell >> 6] |= 1ULL << (cell & 63); }
    bool intersects(const CellMask& o) const {
        uint64_t any = 0;
        for (int i = 0; i < kWords; ++i) any |= w[i] & o.w[i];
        return any != 0;
    }
    void merge(const CellMask& o) {
        for (int i = 0; i < kWords; ++i) w[i] |= o.w[i];
    }
    bool test(int cell) const { return w[cell >> 6] >> (cell & 63) & 1; }
};

// Number of transversals extending (cols, syms) from `row` on, all rows below
// taking a cell. Memoized per (cols, syms); row = popcount(cols).
uint64_t count_from(const LatinSquare& square, int row, uint32_t cols, uint32_t syms,
                    std::unordered_map<uint64_t, uint64_t>& memo) {
    int n = square.order();
    if (row == n) return 1;
    uint64_t key = (static_cast<uint64_t>(cols) << 32) | syms;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    uint64_t total = 0;
    for (int c = 0; c < n; ++c) {
        if (cols >> c & 1) continue;
        int s = square.at(row, c);
        if (syms >> s & 1) continue;
        total += count_from(square, row + 1, cols | (1u << c), syms | (1u << s), memo);
    }
    memo.emplace(key, total);
    return total;
}

void enumerate_from(const LatinSquare& square, int row, uint32_t cols, uint32_t syms,
                    Cells& current, std::vector<Cells>& out, size_t limit) {
    if (out.size() >= limit) return;
    int n = square.order();
    if (row == n) {
        out.push_back(current);
        return;
    }
    for (int c = 0; c < n && out.size() < limit; ++c) {
        if (cols >> c & 1) continue;
        int s = square.at(row, c);
        if (syms >> s & 1) continue;
        current.push_back({row, c, s});
        enumerate_from(square, row + 1, cols | (1u << c), syms | (1u << s), current, out, limit);
        current.pop_back();
    }
}

void check_mask_order(const LatinSquare& square, const char* what) {
    if (square.order() > 31)
        throw Error(ErrorCode::OrderTooLarge,
                    std::string(what) + " supports order <= 31, got " +
                        std::to_string(square.order()));
}

}  // namespace

bool is_partial_transversal(const LatinSquare& square, const Cells& cells) {
    require_owned(square, cells);
    int n = square.order();
    std::vector<char> row_seen(n, 0), col_seen(n, 0), sym_seen(n, 0);
    for (const auto& t : cells) {
        if (row_seen[t.r] || col_seen[t.c] || sym_seen[t.s]) return false;
        row_seen[t.r] = col_seen[t.c] = sym_seen[t.s] = 1;
    }
    return true;
}

uint64_t count_transversals(const LatinSquare& square) {
    check_mask_order(square, "count_transversals");
    std::unordered_map<uint64_t, uint64_t> memo;
    return count_from(square, 0, 0, 0, memo);
}

bool has_transversal(const LatinSquare& square) { return count_transversals(square) > 0; }

std::vector<Cells> enumerate_transversals(const LatinSquare& square, size_t limit) {
    check_mask_order(square, "enumerate_transversals");
    std::vector<Cells> out;
    Cells current;
    enumerate_from(square, 0, 0, 0, current, out, limit);
    return out;
}

namespace {

struct MaxPtSearch {
    const LatinSquare& square;
    int best = 0;
    Cells best_cells;
    Cells current;
    int cap;  // stop as soon as best reaches this

    void run(int row, uint32_t cols, uint32_t syms) {
        int n = square.order();
        int count = static_cast<int>(current.size());
        if (count > best) {
            best = count;
            best_cells = current;
        }
        if (row == n || best >= cap) return;
        if (count + (n - row) <= best) return;  // cannot beat best
        for (int c = 0; c < n; ++c) {
            if (cols >> c & 1) continue;
            int s = square.at(row, c);
            if (syms >> s & 1) continue;
            current.push_back({row, c, s});
            run(row + 1, cols | (1u << c), syms | (1u << s));
            current.pop_back();
            if (best >= cap) return;
        }
        run(row + 1, cols, syms);  // skip this row
    }
};

// First-fit maximal partial transversal, rows and columns ascending.
Cells greedy_partial_transversal(const LatinSquare& square) {
    int n = square.order();
    uint32_t cols = 0, syms = 0;
    Cells out;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (cols >> c & 1) continue;
            int s = square.at(r, c);
            if (syms >> s & 1) continue;
            out.push_back({r, c, s});
            cols |= 1u << c;
            syms |= 1u << s;
            break;
        }
    }
    return out;
}

}  // namespace

MaxPartialTransversal max_partial_transversal(const LatinSquare& square) {
    check_mask_order(square, "max_partial_transversal");
    int n = square.order();
    if (has_transversal(square)) {
        auto witnesses = enumerate_transversals(square, 1);
        return {n, witnesses.front()};
    }
    Cells greedy = greedy_partial_transversal(square);
    if (static_cast<int>(greedy.size()) == n - 1)
        return {n - 1, std::move(greedy)};
    MaxPtSearch search{square};
    search.cap = n - 1;  // no transversal exists
    search.best = static_cast<int>(greedy.size());
    search.best_cells = std::move(greedy);
    search.run(0, 0, 0);
    return {search.best, std::move(search.best_cells)};
}

namespace {

void maximal_pts_from(const LatinSquare& square, int row, uint32_t cols, uint32_t syms,
                      Cells& current, std::vector<Cells>& out) {
    int n = square.order();
    if (row == n) {
        // Maximal iff no free cell extends it. Cells in rows already used are
        // covered by the row mask trick below; scan everything for clarity.
        uint32_t rows = 0;
        for (const auto& t : current) rows |= 1u << t.r;
        for (int r = 0; r < n; ++r) {
            if (rows >> r & 1) continue;
            for (int c = 0; c < n; ++c) {
                if (cols >> c & 1) continue;
                if (!(syms >> square.at(r, c) & 1)) return;  // extendable
            }
        }
        out.push_back(current);
        return;
    }
    for (int c = 0; c < n; ++c) {
        if (cols >> c & 1) continue;
        int s = square.at(row, c);
        if (syms >> s & 1) continue;
        current.push_back({row, c, s});
        maximal_pts_from(square, row + 1, cols | (1u << c), syms | (1u << s), current, out);
        current.pop_back();
    }
    maximal_pts_from(square, row + 1, cols, syms, current, out);
}

}  // namespace

std::vector<Cells> maximal_partial_transversals(const LatinSquare& square) {
    if (square.order() > 8)
        throw Error(ErrorCode::OrderTooLarge,
                    "maximal_partial_transversals is a desk-scale enumeration (order <= 8)");
    std::vector<Cells> out;
    Cells current;
    maximal_pts_from(square, 0, 0, 0, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct PackingSearch {
    int n;
    const std::vector<Cells>* transversals;
    std::vector<CellMask> masks;
    // Per-cell list of transversal indices covering it.
    std::vector<std::vector<int>> covering;

    int best = 0;
    std::vector<int> best_pick, current;

    void run(int next_cell, const CellMask& used, const CellMask& excluded, int uncovered) {
        if (static_cast<int>(current.size()) > best) {
            best = static_cast<int>(current.size());
            best_pick = current;
        }
        // Capacity bound: each further transversal needs n usable cells.
        if (static_cast<int>(current.size()) + uncovered / n <= best) return;
        int cell = next_cell;
        while (cell < n * n && (used.test(cell) || excluded.test(cell))) ++cell;
        if (cell == n * n) return;
        for (int idx : covering[cell]) {
            const CellMask& m = masks[idx];
            if (m.intersects(used) || m.intersects(excluded)) continue;
            current.push_back(idx);
            CellMask next_used = used;
            next_used.merge(m);
            run(cell + 1, next_used, excluded, uncovered - n);
            current.pop_back();
        }
        // Or leave this cell uncovered by the packing.
        CellMask next_excluded = excluded;
        next_excluded.set(cell);
        run(cell + 1, used, next_excluded, uncovered - 1);
    }
};

std::vector<CellMask> transversal_masks(const LatinSquare& square,
                                        const std::vector<Cells>& list) {
    int n = square.order();
    std::vector<CellMask> masks(list.size());
    for (size_t i = 0; i < list.size(); ++i)
        for (const auto& t : list[i]) masks[i].set(t.r * n + t.c);
    return masks;
}

}  // namespace

TransversalPacking max_disjoint_transversals(const LatinSquare& square, int exact_order) {
    check_mask_order(square, "max_disjoint_transversals");
    int n = square.order();
    if (n > exact_order) {
        // Lower-bound mode: greedy maximal packing in enumeration order.
        auto list = enumerate_transversals(square);
        auto masks = transversal_masks(square, list);
        TransversalPacking out;
        CellMask used;
        for (size_t i = 0; i < list.size(); ++i) {
            if (masks[i].intersects(used)) continue;
            used.merge(masks[i]);
            out.transversals.push_back(list[i]);
        }
        out.count = static_cast<int>(out.transversals.size());
        out.exact = false;
        return out;
    }
    auto list = enumerate_transversals(square);
    PackingSearch search;
    search.n = n;
    search.transversals = &list;
    search.masks = transversal_masks(square, list);
    search.covering.resize(static_cast<size_t>(n) * n);
    for (size_t i = 0; i < list.size(); ++i)
        for (const auto& t : list[i]) search.covering[t.r * n + t.c].push_back(static_cast<int>(i));
    CellMask used, excluded;
    search.run(0, used, excluded, n * n);
    TransversalPacking out;
    out.count = search.best;
    out.exact = true;
    for (int idx : search.best_pick) out.transversals.push_back(list[idx]);
    return out;
}

namespace {

struct CoverSearch {
    int n;
    const std::vector<CellMask>* masks;
    const std::vector<std::vector<int>>* covering;
    std::vector<int> current;
    bool found = false;
    std::vector<int> solution;

    void run(int next_cell, const CellMask& used) {
        if (found) return;
        int cell = next_cell;
        while (cell < n * n && used.test(cell)) ++cell;
        if (cell == n * n) {
            found = true;
            solution = current;
            return;
        }
        for (int idx : (*covering)[cell]) {
            const CellMask& m = (*masks)[idx];
            if (m.intersects(used)) continue;
            current.push_back(idx);
            CellMask next_used = used;
            next_used.merge(m);
            run(cell + 1, next_used);
            current.pop_back();
            if (found) return;
        }
    }
};

}  // namespace

MateResult has_orthogonal_mate(const LatinSquare& square) {
    check_mask_order(square, "has_orthogonal_mate");
    int n = square.order();
    if (count_transversals(square) < static_cast<uint64_t>(n) && n > 1) return {};
    auto list = enumerate_transversals(square);
    auto masks = transversal_masks(square, list);
    std::vector<std::vector<int>> covering(static_cast<size_t>(n) * n);
    for (size_t i = 0; i < list.size(); ++i)
        for (const auto& t : list[i]) covering[t.r * n + t.c].push_back(static_cast<int>(i));
    CoverSearch search{n, &masks, &covering};
    CellMask used;
    search.run(0, used);
    MateResult out;
    out.exists = search.found;
    for (int idx : search.solution) out.decomposition.push_back(list[idx]);
    return out;
}

bool is_plex(const LatinSquare& square, const Cells& cells, int k) {
    require_owned(square, cells);
    int n = square.order();
    if (k < 1 || static_cast<int>(cells.size()) != k * n) return false;
    std::vector<int> rows(n, 0), cols(n, 0), syms(n, 0);
    std::vector<char> seen(static_cast<size_t>(n) * n, 0);
    for (const auto& t : cells) {
        auto idx = static_cast<size_t>(t.r) * n + t.c;
        if (seen[idx]) return false;  // repeated cell
        seen[idx] = 1;
        ++rows[t.r];
        ++cols[t.c];
        ++syms[t.s];
    }
    for (int i = 0; i < n; ++i)
        if (rows[i] != k || cols[i] != k || syms[i] != k) return false;
    return true;
}

PlexPartition make_plex_partition(const LatinSquare& square, const std::vector<Cells>& parts) {
    int n = square.order();
    PlexPartition out;
    std::vector<char> covered(static_cast<size_t>(n) * n, 0);
    size_t total = 0;
    for (const auto& part : parts) {
        if (part.size() % n != 0)
            throw Error(ErrorCode::InvalidPartition,
                        "part size " + std::to_string(part.size()) + " is not a multiple of n");
        int k = static_cast<int>(part.size()) / n;
        if (!is_plex(square, part, k))
            throw Error(ErrorCode::InvalidPartition, "part is not a " + std::to_string(k) + "-plex");
        for (const auto& t : part) {
            auto idx = static_cast<size_t>(t.r) * n + t.c;
            if (covered[idx])
                throw Error(ErrorCode::InvalidPartition, "cell " + cell_str(t) + " covered twice");
            covered[idx] = 1;
        }
        total += part.size();
        out.parts.push_back({part, k});
    }
    if (total != static_cast<size_t>(n) * n)
        throw Error(ErrorCode::InvalidPartition, "parts do not cover the square");
    return out;
}

Cells right_diagonal(int n, int i) {
    Cells out;
    out.reserve(n);
    for (int r = 0; r < n; ++r) out.push_back({r, (r + i) % n, (2 * r + i) % n});
    return out;
}

PlexPartition diagonal_plex_partition(const LatinSquare& square) {
    if (!is_circulant(square))
        throw Error(ErrorCode::NotCirculant, "diagonal plex partition needs the circulant square");
    int n = square.order();
    if (n % 2 != 0)
        throw Error(ErrorCode::OddOrder, "diagonal 2-plex partition needs even order");
    std::vector<Cells> parts;
    for (int j = 0; j < n / 2; ++j) {
        Cells part = right_diagonal(n, 2 * j);
        Cells upper = right_diagonal(n, 2 * j + 1);
        part.insert(part.end(), upper.begin(), upper.end());
        parts.push_back(std::move(part));
    }
    return make_plex_partition(square, parts);
}

bool brualdi_stein_holds(const LatinSquare& square) {
    if (square.order() % 2 != 0)
        throw Error(ErrorCode::OddOrder, "Brualdi-Stein concerns even order");
    return max_partial_transversal(square).length >= square.order() - 1;
}

bool ryser_holds(const LatinSquare& square) {
    if (square.order() % 2 != 1)
        throw Error(ErrorCode::MethodInapplicable, "Ryser concerns odd order");
    return has_transversal(square);
}

}  // namespace latinchroma
