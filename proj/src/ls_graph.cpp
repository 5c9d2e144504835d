#include "latinchroma/ls_graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "latinchroma/transversals.hpp"

namespace latinchroma {

const char* edge_kind_name(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Row: return "row";
        case EdgeKind::Column: return "column";
        case EdgeKind::Symbol: return "symbol";
    }
    return "?";
}

namespace {

// In a Latin square two distinct cells agree in at most one of row, column,
// symbol, so the kind is well defined.
bool classify(const LatinSquare& square, int u, int v, EdgeKind& kind) {
    int n = square.order();
    int ur = u / n, uc = u % n, vr = v / n, vc = v % n;
    if (ur == vr) {
        kind = EdgeKind::Row;
        return true;
    }
    if (uc == vc) {
        kind = EdgeKind::Column;
        return true;
    }
    if (square.at_index(u) == square.at_index(v)) {
        kind = EdgeKind::Symbol;
        return true;
    }
    return false;
}

}  // namespace

LSGraph::LSGraph(const LatinSquare& square) : square_(square), n_(square.order()) {
    if (n_ > 100)
        throw Error(ErrorCode::OrderTooLarge, "explicit graph limited to order <= 100");
    int v_count = n_ * n_;
    adj_.resize(v_count);
    // One cell per (row, col): row mates, column mates, symbol mates.
    std::vector<std::vector<int>> symbol_cells(n_);
    for (int v = 0; v < v_count; ++v) symbol_cells[square_.at_index(v)].push_back(v);
    for (int v = 0; v < v_count; ++v) {
        int r = v / n_, c = v % n_;
        auto& out = adj_[v];
        out.reserve(3 * (n_ - 1));
        for (int c2 = 0; c2 < n_; ++c2)
            if (c2 != c) out.emplace_back(r * n_ + c2, EdgeKind::Row);
        for (int r2 = 0; r2 < n_; ++r2)
            if (r2 != r) out.emplace_back(r2 * n_ + c, EdgeKind::Column);
        for (int u : symbol_cells[square_.at_index(v)])
            if (u != v) out.emplace_back(u, EdgeKind::Symbol);
        std::sort(out.begin(), out.end());
        num_edges_ += out.size();
    }
    num_edges_ /= 2;
}

bool LSGraph::adjacent(int u, int v) const {
    if (u == v) return false;
    EdgeKind kind;
    return classify(square_, u, v, kind);
}

InducedSubgraph induced(const LSGraph& graph, const Cells& cells) {
    const LatinSquare& square = graph.square();
    int n = square.order();
    for (const auto& t : cells)
        if (!square.owns(t))
            throw Error(ErrorCode::ForeignCell, "cell (" + std::to_string(t.r) + "," +
                                                    std::to_string(t.c) + "," +
                                                    std::to_string(t.s) +
                                                    ") does not belong to the square");
    InducedSubgraph sub;
    sub.square_order = n;
    sub.vertices.reserve(cells.size());
    for (const auto& t : cells) sub.vertices.push_back(t.r * n + t.c);
    std::sort(sub.vertices.begin(), sub.vertices.end());
    sub.vertices.erase(std::unique(sub.vertices.begin(), sub.vertices.end()),
                       sub.vertices.end());
    int count = static_cast<int>(sub.vertices.size());
    sub.adj.resize(count);
    for (int a = 0; a < count; ++a) {
        for (int b = a + 1; b < count; ++b) {
            EdgeKind kind;
            if (!classify(square, sub.vertices[a], sub.vertices[b], kind)) continue;
            sub.edges.push_back({a, b, kind});
            sub.adj[a].emplace_back(b, kind);
            sub.adj[b].emplace_back(a, kind);
        }
    }
    return sub;
}

BipartiteCheck is_bipartite(const InducedSubgraph& sub) {
    int count = static_cast<int>(sub.vertices.size());
    BipartiteCheck out;
    out.side.assign(count, -1);
    std::vector<int> parent(count, -1);
    for (int start = 0; start < count; ++start) {
        if (out.side[start] != -1) continue;
        out.side[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (auto [v, kind] : sub.adj[u]) {
                if (out.side[v] == -1) {
                    out.side[v] = static_cast<int8_t>(1 - out.side[u]);
                    parent[v] = u;
                    queue.push_back(v);
                } else if (out.side[v] == out.side[u]) {
                    // Odd cycle: climb to the common ancestor of u and v.
                    std::vector<int> up, vp;
                    for (int x = u; x != -1; x = parent[x]) up.push_back(x);
                    for (int x = v; x != -1; x = parent[x]) vp.push_back(x);
                    while (up.size() > 1 && vp.size() > 1 &&
                           up[up.size() - 1] == vp[vp.size() - 1] &&
                           up[up.size() - 2] == vp[vp.size() - 2]) {
                        up.pop_back();
                        vp.pop_back();
                    }
                    out.odd_cycle.reserve(up.size() + vp.size() - 1);
                    for (int x : up) out.odd_cycle.push_back(sub.vertices[x]);
                    for (size_t i = vp.size() - 1; i-- > 0;)
                        out.odd_cycle.push_back(sub.vertices[vp[i]]);
                    out.bipartite = false;
                    return out;
                }
            }
        }
    }
    out.bipartite = true;
    return out;
}

namespace {

[[noreturn]] void structure_violation(const std::string& what) {
    throw Error(ErrorCode::StructureViolation, what);
}

}  // namespace

MobiusCertificate mobius_check(const LatinSquare& square, int i) {
    if (!is_circulant(square))
        throw Error(ErrorCode::NotCirculant, "Moebius diagonals are defined on the circulant");
    int n = square.order();
    if (i < 0 || i >= n)
        throw Error(ErrorCode::NotCirculant, "diagonal index out of range");
    if (n < 2) structure_violation("ladder needs order >= 2");

    Cells cells = right_diagonal(n, i);
    Cells upper = right_diagonal(n, (i + 1) % n);
    cells.insert(cells.end(), upper.begin(), upper.end());
    LSGraph graph(square);
    InducedSubgraph sub = induced(graph, cells);
    int count = static_cast<int>(sub.vertices.size());
    if (count != 2 * n) structure_violation("expected 2n distinct cells");

    // Rim: row and column edges form a single Hamiltonian cycle.
    std::vector<std::vector<int>> rim_adj(count);
    std::vector<std::vector<int>> rung_adj(count);
    for (const auto& e : sub.edges) {
        if (e.kind == EdgeKind::Symbol) {
            rung_adj[e.u].push_back(e.v);
            rung_adj[e.v].push_back(e.u);
        } else {
            rim_adj[e.u].push_back(e.v);
            rim_adj[e.v].push_back(e.u);
        }
    }
    for (int v = 0; v < count; ++v) {
        if (rim_adj[v].size() != 2)
            structure_violation("vertex with " + std::to_string(rim_adj[v].size()) +
                                " rim edges");
        if (rung_adj[v].size() != 1) structure_violation("vertex without unique rung");
    }

    MobiusCertificate cert;
    cert.n = n;
    cert.diagonal = i;

    // Walk the rim from local vertex 0 toward its smaller rim neighbor.
    std::vector<int> pos(count, -1);
    int prev = 0;
    int cur = std::min(rim_adj[0][0], rim_adj[0][1]);
    pos[0] = 0;
    cert.rim.push_back(sub.vertices[0]);
    int steps = 1;
    while (cur != 0) {
        if (pos[cur] != -1) structure_violation("rim edges do not form a single cycle");
        pos[cur] = steps++;
        cert.rim.push_back(sub.vertices[cur]);
        int next = (rim_adj[cur][0] == prev) ? rim_adj[cur][1] : rim_adj[cur][0];
        prev = cur;
        cur = next;
    }
    if (steps != count) structure_violation("rim cycle misses vertices");

    // Rungs must join rim-antipodal vertices.
    for (int v = 0; v < count; ++v) {
        int u = rung_adj[v][0];
        if (v < u) {
            int d = std::abs(pos[v] - pos[u]);
            d = std::min(d, count - d);
            if (d != n) structure_violation("rung joins vertices at rim distance " +
                                            std::to_string(d));
            cert.rungs.emplace_back(sub.vertices[v], sub.vertices[u]);
        }
    }

    if (n % 2 == 0) {
        int m = n / 2;
        auto local = [&](int r, int c) {
            int cell = ((r % n + n) % n) * n + ((c % n + n) % n);
            auto it = std::lower_bound(sub.vertices.begin(), sub.vertices.end(), cell);
            if (it == sub.vertices.end() || *it != cell)
                structure_violation("expected ladder cell missing");
            return static_cast<int>(it - sub.vertices.begin());
        };
        for (int r = 0; r < n; ++r) {
            int c = (r + i) % n;
            int x = local(r, c);
            for (auto [dr, dc] : {std::pair{m, m + 1}, std::pair{m - 1, m}}) {
                int y = local(r + dr, c + dc);
                int d = std::abs(pos[x] - pos[y]);
                d = std::min(d, count - d);
                if (d != n - 1)
                    structure_violation("reported pair at rim distance " + std::to_string(d));
                cert.nearly_antipodal.emplace_back(sub.vertices[x], sub.vertices[y]);
            }
        }
    }
    return cert;
}

}  // namespace latinchroma
