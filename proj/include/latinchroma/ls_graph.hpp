#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "latinchroma/latin_square.hpp"

namespace latinchroma {

enum class EdgeKind : uint8_t { Row, Column, Symbol };

const char* edge_kind_name(EdgeKind kind);

/// The graph on the n^2 cells of a Latin square where distinct cells are
/// adjacent iff they agree in exactly one of row, column, symbol. Vertices
/// are cell indices r*n+c; the graph is regular of degree 3(n-1) and
/// immutable after construction.
class LSGraph {
public:
    explicit LSGraph(const LatinSquare& square);

    int square_order() const { return n_; }
    int num_vertices() const { return n_ * n_; }
    size_t num_edges() const { return num_edges_; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Sorted by neighbor vertex id.
    const std::vector<std::pair<int, EdgeKind>>& neighbors(int v) const { return adj_[v]; }

    bool adjacent(int u, int v) const;

    const LatinSquare& square() const { return square_; }

private:
    LatinSquare square_;
    int n_;
    size_t num_edges_ = 0;
    std::vector<std::vector<std::pair<int, EdgeKind>>> adj_;
};

inline LSGraph build_graph(const LatinSquare& square) { return LSGraph(square); }

struct SubgraphEdge {
    int u = 0;  // indices into InducedSubgraph::vertices
    int v = 0;
    EdgeKind kind = EdgeKind::Row;
};

/// Subgraph induced on a cell subset; vertices holds the cell ids (sorted),
/// adjacency is by local index.
struct InducedSubgraph {
    int square_order = 0;
    std::vector<int> vertices;
    std::vector<SubgraphEdge> edges;
    std::vector<std::vector<std::pair<int, EdgeKind>>> adj;  // local indices
};

InducedSubgraph induced(const LSGraph& graph, const Cells& cells);

struct BipartiteCheck {
    bool bipartite = false;
    /// Per local vertex, 0/1 when bipartite.
    std::vector<int8_t> side;
    /// Odd cycle as cell ids when not bipartite.
    std::vector<int> odd_cycle;
};

/// BFS 2-coloring; components are seeded from their least local vertex with
/// side 0.
BipartiteCheck is_bipartite(const InducedSubgraph& sub);

/// Verified Moebius-ladder structure of the subgraph induced on two
/// consecutive right diagonals of a circulant: the rim is the single
/// Hamiltonian cycle of row and column edges, the n symbol edges are rungs
/// joining rim-antipodal vertices. Nearly antipodal pairs (rim distance n-1)
/// are reported for even n = 2m: for each x in T_i both x+(m,m+1,1) and
/// x+(m-1,m,-1).
struct MobiusCertificate {
    int n = 0;
    int diagonal = 0;
    std::vector<int> rim;                              // 2n cell ids in cycle order
    std::vector<std::pair<int, int>> rungs;            // cell id pairs
    std::vector<std::pair<int, int>> nearly_antipodal; // cell id pairs, even n only
};

/// Throws NotCirculant for non-circulant input and StructureViolation if the
/// induced subgraph is not the expected ladder.
MobiusCertificate mobius_check(const LatinSquare& square, int i);

}  // namespace latinchroma
