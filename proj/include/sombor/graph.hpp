#pragma once

#include <utility>
#include <vector>

namespace sombor {

// Unordered vertex pair, normalized to first < second.
using Edge = std::pair<int, int>;

// Simple undirected labeled graph over vertices 0..n-1. Immutable after
// construction; every operation on it is a pure function, so values can be
// shared freely across threads.
class Graph {
public:
    Graph() = default;

    // Validates and normalizes the edge list: endpoints in range, no
    // self-loops, no duplicates. Edges are stored sorted lexicographically.
    // Throws std::invalid_argument on any violation.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<int>& degrees() const noexcept { return degrees_; }

    // Throws std::invalid_argument if v is out of range.
    int degree(int v) const;

    bool has_edge(int u, int v) const noexcept;

    // Adjacency lists, neighbors ascending. Built on demand so that graphs
    // used only for degree sums stay cheap to construct.
    std::vector<std::vector<int>> adjacency() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
};

// One biconnected component: either a bridge (single edge) or a maximal
// 2-connected subgraph. For a cactus every block is a bridge or a cycle.
struct Block {
    std::vector<int> vertices; // sorted
    std::vector<Edge> edges;   // sorted

    bool is_bridge() const noexcept { return edges.size() == 1; }
    bool is_cycle() const noexcept {
        return edges.size() >= 3 && edges.size() == vertices.size();
    }
};

struct BlockDecomposition {
    std::vector<Block> blocks;             // every edge lies in exactly one block
    std::vector<int> articulation_vertices; // sorted
};

// True iff g has exactly one connected component. The empty graph and a
// single vertex count as connected.
bool is_connected(const Graph& g);

// Biconnected components plus articulation vertices (iterative Tarjan).
BlockDecomposition blocks(const Graph& g);

// Connected and every block is a single edge or a cycle.
bool is_cactus(const Graph& g);

// Cyclomatic number m - n + 1; equals the number of cycle blocks for a
// cactus. Throws std::invalid_argument if g is disconnected.
int cycle_count(const Graph& g);

// Vertices of degree 1, ascending.
std::vector<int> pendant_vertices(const Graph& g);

// Vertices adjacent to at least one pendant vertex, ascending.
std::vector<int> support_vertices(const Graph& g);

// Minimum degree over all vertices; throws std::invalid_argument on the
// empty graph.
int min_degree(const Graph& g);

} // namespace sombor
