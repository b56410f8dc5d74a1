#pragma once

#include <compare>
#include <string>

#include "sombor/graph.hpp"

namespace sombor {

// Hard ceiling for canonical labeling. Exhaustive work in this project stays
// at n <= 10; the search is certifiably exact but brute-force at heart, so it
// is capped rather than pretending to scale.
inline constexpr int kCanonicalSizeCap = 12;

// Total-order key on isomorphism classes: the graph6 encoding of the
// lexicographically minimal adjacency bit-matrix over all vertex relabelings.
// Equal keys iff isomorphic; deterministic across runs and platforms.
struct CanonicalForm {
    std::string key;

    auto operator<=>(const CanonicalForm&) const = default;
};

// Throws unsupported_size_error beyond kCanonicalSizeCap.
CanonicalForm canonical_form(const Graph& g);

// The canonically relabeled copy of g (decode of the key). Two isomorphic
// graphs yield identical representatives.
Graph canonical_representative(const Graph& g);

// canonical_form equality; both graphs must be within the size cap.
bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace sombor
