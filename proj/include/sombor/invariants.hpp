#pragma once

#include <utility>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

// Exact maximum-matching search is backtracking with a memo on the covered
// vertex set; fine at desk scale, capped well before it stops being fine.
inline constexpr int kMatchingSizeCap = 24;

struct IndexValue {
    double value = 0.0; // >= 0; zero iff the graph has no edges
    int term_count = 0; // number of summed edge terms (= m)
};

// sqrt(du^2 + dv^2). Both degrees must be >= 1 (an edge endpoint always has
// degree at least 1); throws std::invalid_argument otherwise.
double edge_term(int du, int dv);

// Sombor index: sum of edge_term(d_u, d_v) over all edges, accumulated in
// sorted edge order for reproducibility.
IndexValue sombor_index(const Graph& g);

// Sorted multiset of (min(d_u,d_v), max(d_u,d_v)) over edges. Two graphs have
// exactly equal Sombor indices iff these multisets are equal, which is how
// equality of sums of square roots is decided without floating-point hazards.
std::vector<std::pair<int, int>> degree_pair_multiset(const Graph& g);

struct Matching {
    std::vector<Edge> pairs; // pairwise vertex-disjoint edges of the host graph

    int size() const noexcept { return static_cast<int>(pairs.size()); }
};

// A matching of maximum cardinality (the cardinality is unique, the edge set
// need not be; the result is deterministic). Throws unsupported_size_error
// beyond kMatchingSizeCap.
Matching maximum_matching(const Graph& g);

// True iff 2 * |maximum_matching(g)| == n. Odd orders short-circuit to false.
bool has_perfect_matching(const Graph& g);

} // namespace sombor
