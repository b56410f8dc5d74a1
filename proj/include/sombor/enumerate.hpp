#pragma once

#include <map>
#include <string>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

inline constexpr int kEnumerationCap = 10; // exhaustive generation
inline constexpr int kOracleCap = 7;       // labeled brute-force oracle

// Query for the class of cacti with n vertices and t cycles, optionally
// restricted to graphs with a perfect matching. Infeasible (n, t) pairs are
// valid queries with an empty result.
struct EnumerationQuery {
    int n = 1;
    int t = 0;
    bool require_perfect_matching = false;
};

// Exhaustive generator of non-isomorphic cacti by end-block augmentation:
// every cactus on n >= 2 vertices has a terminal block (a pendant edge or a
// terminal cycle), so level (n,t) is built by attaching a pendant vertex to
// every graph of level (n-1,t) at every vertex, and a k-cycle (3 <= k <= n)
// to every graph of level (n-k+1,t-1) at every vertex, deduplicating by
// canonical form. Levels are memoized, so one enumerator instance amortizes
// across many queries. Not thread-safe (the cache mutates).
class CactusEnumerator {
public:
    explicit CactusEnumerator(int cap = kEnumerationCap) : cap_(cap) {}

    // Exactly one representative per isomorphism class, emitted as canonical
    // representatives in ascending canonical-form order. Throws
    // unsupported_size_error beyond the cap and std::invalid_argument for
    // malformed queries (n < 1, t < 0, perfect matching requested with odd n).
    std::vector<Graph> enumerate(const EnumerationQuery& query);

    // Canonical keys of level (n,t), ascending (no matching filter).
    const std::vector<std::string>& level(int n, int t);

private:
    int cap_;
    std::map<std::pair<int, int>, std::vector<std::string>> cache_;
};

// One-shot convenience wrapper around a fresh enumerator.
std::vector<Graph> enumerate_cacti(const EnumerationQuery& query);

struct OracleResult {
    int class_count = 0;
    std::vector<std::string> canonical_keys; // ascending
};

// Independent correctness oracle: iterates every labeled graph on n vertices
// with m = n-1+t edges, filters by the cactus predicate (and the matching
// filter when requested) and deduplicates by canonical form. Must agree
// exactly with enumerate_cacti. Capped at kOracleCap.
OracleResult labeled_oracle(const EnumerationQuery& query);

} // namespace sombor
