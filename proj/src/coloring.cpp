#include "latinchroma/coloring.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>

#include "latinchroma/ls_graph.hpp"

namespace latinchroma {

namespace {

using Clock = std::chrono::steady_clock;

int popcount64(uint64_t x) { return static_cast<int>(__builtin_popcountll(x)); }

// Neighbor lists over cell indices, built without an LSGraph (works for any
// order). Two cells are adjacent iff they agree in exactly one coordinate.
std::vector<std::vector<int>> cell_adjacency(const LatinSquare& square) {
    int n = square.order();
    int v_count = n * n;
    std::vector<std::vector<int>> symbol_cells(n);
    for (int v = 0; v < v_count; ++v) symbol_cells[square.at_index(v)].push_back(v);
    std::vector<std::vector<int>> adj(v_count);
    for (int v = 0; v < v_count; ++v) {
        int r = v / n, c = v % n;
        adj[v].reserve(3 * (n - 1));
        for (int c2 = 0; c2 < n; ++c2)
            if (c2 != c) adj[v].push_back(r * n + c2);
        for (int r2 = 0; r2 < n; ++r2)
            if (r2 != r) adj[v].push_back(r2 * n + c);
        for (int u : symbol_cells[square.at_index(v)])
            if (u != v) adj[v].push_back(u);
    }
    return adj;
}

int distinct_color_count(const std::vector<int>& colors) {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return static_cast<int>(sorted.size());
}

Coloring make_coloring(int n, std::vector<int> colors) {
    Coloring out;
    out.n = n;
    out.colors = std::move(colors);
    out.num_colors = distinct_color_count(out.colors);
    return out;
}

}  // namespace

VerifyReport verify_coloring(const LatinSquare& square, const Coloring& coloring) {
    int n = square.order();
    if (coloring.n != n || coloring.colors.size() != static_cast<size_t>(n) * n)
        throw Error(ErrorCode::UncoveredCell, "coloring does not cover the square");
    for (int c : coloring.colors)
        if (c < 0) throw Error(ErrorCode::UncoveredCell, "negative color id");

    VerifyReport report;
    report.distinct_colors = distinct_color_count(coloring.colors);

    // Bucket cells of each color by row, column and symbol.
    std::map<std::tuple<int, char, int>, Cells> buckets;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            int color = coloring.at(r, c);
            CellTriple t = square.triple(r, c);
            buckets[{color, 'r', r}].push_back(t);
            buckets[{color, 'c', c}].push_back(t);
            buckets[{color, 's', t.s}].push_back(t);
        }
    }
    for (auto& [key, cells] : buckets) {
        if (cells.size() < 2) continue;
        auto [color, kind, index] = key;
        report.clashes.push_back({color, kind, index, std::move(cells)});
    }
    report.proper = report.clashes.empty();
    return report;
}

namespace {

// DSATUR with a tie-break hook. pick_among receives the indices that are
// tied on (saturation, uncolored degree) and returns the chosen one.
template <typename Tie>
std::vector<int> dsatur_colors(const std::vector<std::vector<int>>& adj, Tie pick_among) {
    int v_count = static_cast<int>(adj.size());
    std::vector<int> color(v_count, -1);
    std::vector<std::vector<char>> neighbor_has(v_count);
    std::vector<int> saturation(v_count, 0), uncolored_deg(v_count);
    for (int v = 0; v < v_count; ++v) {
        uncolored_deg[v] = static_cast<int>(adj[v].size());
        neighbor_has[v].assign(adj[v].size() + 1, 0);  // grown on demand
    }
    std::vector<int> tied;
    for (int step = 0; step < v_count; ++step) {
        int best_sat = -1, best_deg = -1;
        tied.clear();
        for (int v = 0; v < v_count; ++v) {
            if (color[v] != -1) continue;
            if (saturation[v] > best_sat ||
                (saturation[v] == best_sat && uncolored_deg[v] > best_deg)) {
                best_sat = saturation[v];
                best_deg = uncolored_deg[v];
                tied.clear();
                tied.push_back(v);
            } else if (saturation[v] == best_sat && uncolored_deg[v] == best_deg) {
                tied.push_back(v);
            }
        }
        int v = pick_among(tied);
        // Least color not used by neighbors.
        std::vector<char> used(adj[v].size() + 2, 0);
        for (int u : adj[v])
            if (color[u] != -1 && color[u] < static_cast<int>(used.size())) used[color[u]] = 1;
        int chosen = 0;
        while (used[chosen]) ++chosen;
        color[v] = chosen;
        for (int u : adj[v]) {
            if (color[u] != -1) continue;
            --uncolored_deg[u];
            // saturation tracks distinct neighbor colors
            auto& has = neighbor_has[u];
            if (chosen >= static_cast<int>(has.size())) has.resize(chosen + 1, 0);
            if (!has[chosen]) {
                has[chosen] = 1;
                ++saturation[u];
            }
        }
    }
    return color;
}

}  // namespace

Coloring greedy_coloring(const LatinSquare& square) {
    auto adj = cell_adjacency(square);
    auto colors = dsatur_colors(adj, [](const std::vector<int>& tied) { return tied.front(); });
    return make_coloring(square.order(), std::move(colors));
}

Coloring greedy_coloring(const LatinSquare& square, std::span<const int> cell_order) {
    int n = square.order();
    int v_count = n * n;
    if (static_cast<int>(cell_order.size()) != v_count)
        throw Error(ErrorCode::SizeMismatch, "cell order must list every cell once");
    auto adj = cell_adjacency(square);
    std::vector<int> color(v_count, -1);
    std::vector<char> used(v_count + 1, 0);
    for (int v : cell_order) {
        if (v < 0 || v >= v_count || color[v] != -1)
            throw Error(ErrorCode::SizeMismatch, "cell order must list every cell once");
        std::fill(used.begin(), used.end(), 0);
        for (int u : adj[v])
            if (color[u] != -1) used[color[u]] = 1;
        int chosen = 0;
        while (used[chosen]) ++chosen;
        color[v] = chosen;
    }
    return make_coloring(n, std::move(color));
}

namespace {

Coloring randomized_dsatur(const LatinSquare& square, const std::vector<std::vector<int>>& adj,
                           uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto colors = dsatur_colors(adj, [&rng](const std::vector<int>& tied) {
        return tied[std::uniform_int_distribution<size_t>(0, tied.size() - 1)(rng)];
    });
    return make_coloring(square.order(), std::move(colors));
}

// Exhaustive k-colorability with forward checking. First row pre-colored
// 0..n-1 (a clique), extra colors n..k-1 introduced in order.
struct KColorSearch {
    static constexpr int kMaxWords = 16;

    int n = 0, k = 0, v_count = 0, words = 0;
    const std::vector<std::vector<int>>* adj = nullptr;
    std::vector<std::array<uint64_t, kMaxWords>> adj_bits;
    std::vector<uint64_t> allowed;
    std::vector<int> color, uncolored_deg;
    uint64_t full_mask = 0;

    uint64_t nodes = 0;
    uint64_t node_budget = UINT64_MAX;
    Clock::time_point deadline;
    bool out_of_budget = false;

    std::vector<std::pair<int, uint64_t>> trail;

    enum class Outcome { Sat, Unsat, Budget };

    Outcome run(const LatinSquare& square, const Budget& budget, Clock::time_point start,
                std::vector<int>& solution) {
        if (k > 63) throw Error(ErrorCode::OrderTooLarge, "color search limited to k <= 63");
        n = square.order();
        v_count = n * n;
        words = (v_count + 63) / 64;
        auto adjacency = cell_adjacency(square);
        adj = &adjacency;
        adj_bits.assign(v_count, {});
        for (int v = 0; v < v_count; ++v)
            for (int u : adjacency[v]) adj_bits[v][u >> 6] |= 1ULL << (u & 63);
        full_mask = (k >= 64) ? ~0ULL : ((1ULL << k) - 1);
        allowed.assign(v_count, full_mask);
        color.assign(v_count, -1);
        uncolored_deg.resize(v_count);
        for (int v = 0; v < v_count; ++v) uncolored_deg[v] = static_cast<int>(adjacency[v].size());
        deadline = start + std::chrono::milliseconds(budget.ms);
        node_budget = budget.max_nodes;

        // Pre-color row 0 with colors 0..n-1.
        int extra_used = 0;
        for (int c = 0; c < n; ++c)
            if (!assign(c, c)) return Outcome::Unsat;  // cannot happen

        bool sat = dfs(extra_used);
        if (out_of_budget) return Outcome::Budget;
        if (!sat) return Outcome::Unsat;
        solution = color;
        return Outcome::Sat;
    }

    bool assign(int v, int col) {
        color[v] = col;
        uint64_t bit = 1ULL << col;
        bool ok = true;
        for (int u : (*adj)[v]) {
            if (color[u] != -1) continue;
            --uncolored_deg[u];
            if (allowed[u] & bit) {
                trail.emplace_back(u, allowed[u]);
                allowed[u] &= ~bit;
                if (allowed[u] == 0) ok = false;  // caller unwinds via trail mark
            }
        }
        return ok;
    }

    void unassign(int v, size_t trail_mark) {
        while (trail.size() > trail_mark) {
            auto [u, mask] = trail.back();
            trail.pop_back();
            allowed[u] = mask;
        }
        for (int u : (*adj)[v])
            if (color[u] == -1) ++uncolored_deg[u];
        color[v] = -1;
    }

    bool dfs(int extra_used) {
        if (++nodes >= node_budget || (nodes % 4096 == 0 && Clock::now() > deadline)) {
            out_of_budget = true;
            return false;
        }
        // MRV: fewest allowed colors, then max uncolored degree, then index.
        int pick = -1, pick_count = k + 1, pick_deg = -1;
        for (int v = 0; v < v_count; ++v) {
            if (color[v] != -1) continue;
            int cnt = popcount64(allowed[v]);
            if (cnt < pick_count || (cnt == pick_count && uncolored_deg[v] > pick_deg)) {
                pick = v;
                pick_count = cnt;
                pick_deg = uncolored_deg[v];
                if (cnt == 0) return false;
            }
        }
        if (pick == -1) return true;  // everything colored

        // Interchangeable extra colors: only the first unused one may start.
        int limit = std::min(k, n + extra_used + 1);
        uint64_t candidates = allowed[pick] & ((limit >= 64) ? ~0ULL : ((1ULL << limit) - 1));
        while (candidates) {
            int col = __builtin_ctzll(candidates);
            candidates &= candidates - 1;
            size_t mark = trail.size();
            bool ok = assign(pick, col);
            if (ok && dfs(col >= n + extra_used ? extra_used + 1 : extra_used)) return true;
            unassign(pick, mark);
            if (out_of_budget) return false;
        }
        return false;
    }
};

Coloring coloring_from_decomposition(const LatinSquare& square,
                                     const std::vector<Cells>& decomposition) {
    int n = square.order();
    std::vector<int> colors(static_cast<size_t>(n) * n, -1);
    for (size_t i = 0; i < decomposition.size(); ++i)
        for (const auto& t : decomposition[i])
            colors[static_cast<size_t>(t.r) * n + t.c] = static_cast<int>(i);
    return make_coloring(n, std::move(colors));
}

struct LowerBoundInfo {
    int lower = 0;
    bool mate = false;
    std::vector<Cells> decomposition;
    bool analyzed = false;  // transversal analysis ran
};

// Clique bound n, sharpened by transversal structure: no decomposition rules
// out k = n, and with t transversals any k-coloring has a color class of
// size >= ceil(n^2/k), so no transversal rules out k = n+1 and a maximum
// partial transversal of length l forces k >= ceil(n^2/l).
LowerBoundInfo chromatic_lower_bound(const LatinSquare& square, bool allow_search) {
    int n = square.order();
    LowerBoundInfo info;
    info.lower = n;
    if (!allow_search || n > 12) return info;
    info.analyzed = true;
    MateResult mate = has_orthogonal_mate(square);
    if (mate.exists) {
        info.mate = true;
        info.decomposition = std::move(mate.decomposition);
        return info;
    }
    info.lower = n + 1;
    MaxPartialTransversal max_pt = max_partial_transversal(square);
    int covering = (n * n + max_pt.length - 1) / max_pt.length;
    info.lower = std::max(info.lower, covering);
    return info;
}

Coloring best_heuristic(const LatinSquare& square, int target, int restarts) {
    auto adj = cell_adjacency(square);
    Coloring best = greedy_coloring(square);
    for (int i = 0; i < restarts && best.num_colors > target; ++i) {
        Coloring candidate = randomized_dsatur(square, adj, 0x9e3779b9u + i);
        if (candidate.num_colors < best.num_colors) best = std::move(candidate);
    }
    return best;
}

}  // namespace

Budget Budget::from_env() {
    Budget budget;
    if (const char* env = std::getenv("LATIN_CHROMA_BUDGET_MS")) {
        char* end = nullptr;
        long long ms = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && ms >= 0) budget.ms = ms;
    }
    return budget;
}

ChiResult exact_chromatic(const LatinSquare& square, const Budget& budget) {
    auto start = Clock::now();
    int n = square.order();
    ChiResult result;
    result.lower = n;

    auto finish = [&](ChiResult r) {
        r.elapsed_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return r;
    };

    LowerBoundInfo lb = chromatic_lower_bound(square, /*allow_search=*/true);
    if (lb.mate) {
        result.chi = result.lower = result.upper = n;
        result.exact = true;
        result.witness = coloring_from_decomposition(square, lb.decomposition);
        result.lower_bound_proof = LowerBoundProof::RowClique;
        return finish(result);
    }
    result.lower = lb.lower;
    result.lower_bound_proof =
        lb.lower > n ? LowerBoundProof::ExhaustedK : LowerBoundProof::RowClique;

    Coloring best = best_heuristic(square, result.lower, 32);
    result.upper = best.num_colors;
    result.witness = std::move(best);

    for (int k = result.lower; k < result.upper; ++k) {
        KColorSearch search;
        search.k = k;
        std::vector<int> solution;
        auto outcome = search.run(square, budget, start, solution);
        result.nodes += search.nodes;
        if (outcome == KColorSearch::Outcome::Sat) {
            result.upper = k;
            result.witness = make_coloring(n, std::move(solution));
            break;
        }
        if (outcome == KColorSearch::Outcome::Budget) {
            result.chi = result.upper;
            result.exact = false;
            return finish(result);
        }
        result.lower = k + 1;
        result.lower_bound_proof = LowerBoundProof::ExhaustedK;
    }
    result.chi = result.upper;
    result.exact = true;
    if (result.lower < result.upper) result.lower = result.upper;  // closed by search
    return finish(result);
}

ChiResult heuristic_chromatic(const LatinSquare& square, const Budget& budget) {
    auto start = Clock::now();
    int n = square.order();
    ChiResult result;
    result.lower = n;

    auto finish = [&](ChiResult r) {
        r.chi = r.upper;
        r.exact = r.lower == r.upper;
        r.elapsed_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return r;
    };

    LowerBoundInfo lb = chromatic_lower_bound(square, /*allow_search=*/true);
    if (lb.mate) {
        result.lower = result.upper = n;
        result.witness = coloring_from_decomposition(square, lb.decomposition);
        return finish(result);
    }
    result.lower = lb.lower;
    if (result.lower > n) result.lower_bound_proof = LowerBoundProof::ExhaustedK;

    Coloring best = best_heuristic(square, result.lower, 128);
    result.upper = best.num_colors;
    result.witness = std::move(best);

    // Descend with SAT attempts; stop on the first failure or refutation.
    while (result.upper > result.lower) {
        KColorSearch search;
        search.k = result.upper - 1;
        std::vector<int> solution;
        auto outcome = search.run(square, budget, start, solution);
        result.nodes += search.nodes;
        if (outcome == KColorSearch::Outcome::Sat) {
            result.upper = search.k;
            result.witness = make_coloring(n, std::move(solution));
            continue;
        }
        if (outcome == KColorSearch::Outcome::Unsat) result.lower = result.upper;
        break;
    }
    return finish(result);
}

std::array<int, 3> circulant_shift_vector(int m) {
    return (m % 3 == 0) ? std::array<int, 3>{m, m + 1, 1} : std::array<int, 3>{m - 1, m, -1};
}

CirculantEvenParts circulant_even_parts(int n) {
    if (n < 4 || n % 2 != 0)
        throw Error(ErrorCode::MethodInapplicable,
                    "construction parts are defined for even n >= 4");
    CirculantEvenParts parts;
    parts.n = n;
    parts.m = n / 2;
    parts.k = (parts.m + 1) / 2;
    parts.shift = circulant_shift_vector(parts.m);
    auto mod = [n](int v) { return ((v % n) + n) % n; };
    auto cell = [&](int r, int c) { return CellTriple{mod(r), mod(c), mod(r + c)}; };
    for (int j = 0; j < parts.k; ++j) {
        parts.x.push_back(cell(j, 3 * j));
        parts.x_shifted.push_back(cell(j + parts.shift[0], 3 * j + parts.shift[1]));
    }
    for (int j = 0; j < parts.m - parts.k; ++j) {
        parts.y.push_back(cell(j, 3 * j + 2 * parts.k));
        parts.y_shifted.push_back(cell(j + parts.shift[0], 3 * j + 2 * parts.k + parts.shift[1]));
    }
    return parts;
}

namespace {

// 2-color one part of the ladder partition with {base, base+1} by BFS from
// the least cell index; components are seeded on side `base`.
void two_color_part(const LatinSquare& square, const std::vector<int>& part_cells,
                    std::vector<int>& colors, int base) {
    int n = square.order();
    int count = static_cast<int>(part_cells.size());
    std::vector<int> side(count, -1);
    auto adjacent = [&](int a, int b) {
        int ra = a / n, ca = a % n, rb = b / n, cb = b % n;
        if (ra == rb || ca == cb) return a != b;
        return square.at_index(a) == square.at_index(b);
    };
    for (int start = 0; start < count; ++start) {
        if (side[start] != -1) continue;
        side[start] = 0;
        std::vector<int> queue{start};
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v = 0; v < count; ++v) {
                if (side[v] != -1 || !adjacent(part_cells[u], part_cells[v])) continue;
                side[v] = 1 - side[u];
                queue.push_back(v);
            }
        }
    }
    for (int i = 0; i < count; ++i) colors[part_cells[i]] = base + side[i];
}

}  // namespace

Coloring circulant_coloring(int n) {
    if (n < 1) throw Error(ErrorCode::NonSquare, "order must be positive");
    LatinSquare square = circulant(n);
    std::vector<int> colors(static_cast<size_t>(n) * n, -1);

    if (n % 2 == 1) {
        // The right diagonals are transversals for odd n.
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) colors[static_cast<size_t>(r) * n + c] = (c - r + n) % n;
    } else if (n == 2) {
        colors = {0, 1, 2, 3};  // K_4
    } else {
        int m = n / 2;
        CirculantEvenParts parts = circulant_even_parts(n);
        auto cell_id = [n](const CellTriple& t) { return t.r * n + t.c; };
        std::vector<char> removed(static_cast<size_t>(n) * n, 0);
        std::vector<std::pair<int, int>> pair_of_part(m);
        for (int j = 0; j < parts.k; ++j)
            pair_of_part[j] = {cell_id(parts.x[j]), cell_id(parts.x_shifted[j])};
        for (int j = 0; j < m - parts.k; ++j)
            pair_of_part[parts.k + j] = {cell_id(parts.y[j]), cell_id(parts.y_shifted[j])};
        for (auto [a, b] : pair_of_part) removed[a] = removed[b] = 1;

        for (int j = 0; j < m; ++j) {
            std::vector<int> part_cells;
            for (const auto& t : right_diagonal(n, 2 * j))
                if (!removed[cell_id(t)]) part_cells.push_back(cell_id(t));
            for (const auto& t : right_diagonal(n, 2 * j + 1))
                if (!removed[cell_id(t)]) part_cells.push_back(cell_id(t));
            std::sort(part_cells.begin(), part_cells.end());
            two_color_part(square, part_cells, colors, 2 * j);
        }
        for (const auto& t : parts.x) colors[cell_id(t)] = 2 * m;
        for (const auto& t : parts.x_shifted) colors[cell_id(t)] = 2 * m;
        for (const auto& t : parts.y) colors[cell_id(t)] = 2 * m + 1;
        for (const auto& t : parts.y_shifted) colors[cell_id(t)] = 2 * m + 1;
    }

    Coloring out = make_coloring(n, std::move(colors));
    VerifyReport report = verify_coloring(circulant(n), out);
    if (!report.proper)
        throw Error(ErrorCode::StructureViolation, "construction produced an improper coloring");
    return out;
}

Coloring row_complete_coloring(const LatinSquare& square) {
    if (!is_row_complete(square))
        throw Error(ErrorCode::NotRowComplete, "square is not row-complete");
    int n = square.order();
    std::vector<int> colors(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c + 1 < n; ++c) colors[static_cast<size_t>(r) * n + c] = square.at(r, c + 1);
        colors[static_cast<size_t>(r) * n + n - 1] = n + r;
    }
    Coloring out = make_coloring(n, std::move(colors));
    VerifyReport report = verify_coloring(square, out);
    if (!report.proper)
        throw Error(ErrorCode::StructureViolation, "construction produced an improper coloring");
    return out;
}

Coloring plex_bound_coloring(const LatinSquare& square, const PlexPartition& partition) {
    int n = square.order();
    // Re-validate against this square; throws InvalidPartition.
    std::vector<Cells> raw;
    for (const auto& part : partition.parts) raw.push_back(part.cells);
    PlexPartition checked = make_plex_partition(square, raw);

    std::vector<int> colors(static_cast<size_t>(n) * n, -1);
    int palette_base = 0;
    for (const auto& part : checked.parts) {
        std::vector<int> part_cells;
        for (const auto& t : part.cells) part_cells.push_back(t.r * n + t.c);
        std::sort(part_cells.begin(), part_cells.end());
        auto adjacent = [&](int a, int b) {
            int ra = a / n, ca = a % n, rb = b / n, cb = b % n;
            if (ra == rb || ca == cb) return a != b;
            return square.at_index(a) == square.at_index(b);
        };
        int used = 0;
        for (int v : part_cells) {
            std::vector<char> taken(3 * part.k, 0);
            for (int u : part_cells) {
                if (colors[u] == -1 || u == v || !adjacent(u, v)) continue;
                taken[colors[u] - palette_base] = 1;
            }
            int local = 0;
            while (taken[local]) ++local;
            colors[v] = palette_base + local;
            used = std::max(used, local + 1);
        }
        if (used > 3 * part.k - 2)
            throw Error(ErrorCode::StructureViolation, "plex coloring exceeded 3k-2 colors");
        palette_base += used;
    }
    Coloring out = make_coloring(n, std::move(colors));
    VerifyReport report = verify_coloring(square, out);
    if (!report.proper)
        throw Error(ErrorCode::StructureViolation, "construction produced an improper coloring");
    return out;
}

BoundReport bound_report(const LatinSquare& square, int packing_exact_order) {
    int n = square.order();
    BoundReport report;
    report.n = n;
    report.lower = n;
    report.greedy_guarantee = 3 * n - 2;
    report.greedy_colors = greedy_coloring(square).num_colors;

    LowerBoundInfo lb = chromatic_lower_bound(square, /*allow_search=*/true);
    report.transversal_analysis = lb.analyzed;
    if (!lb.mate) report.lower = lb.lower;

    TransversalPacking packing = max_disjoint_transversals(square, packing_exact_order);
    report.disjoint_transversals = packing.count;
    report.packing_exact = packing.exact;
    // packing.count is a valid lower bound on t even in greedy mode, so
    // t >= n-1 already certifies chi = n.
    if (packing.count <= n - 2)
        report.corollary_bound = 3 * n - 2 * packing.count - 2;
    else
        report.chi_equals_n = true;

    if (is_row_complete(square)) report.row_complete_bound = 2 * n;
    if (is_circulant(square)) report.circulant_bound = (n % 2 == 1) ? n : n + 2;
    report.asymptotic_note =
        "chi <= n + o(n) for large n (linear-hypergraph edge coloring); no numeric constant";
    return report;
}

bool conjectured_bound_holds(const LatinSquare& square, const ChiResult& result) {
    if (!result.exact)
        throw Error(ErrorCode::Undecidable, "conjectured bound check needs an exact value");
    int n = square.order();
    return result.chi <= ((n % 2 == 1) ? n + 1 : n + 2);
}

}  // namespace latinchroma
