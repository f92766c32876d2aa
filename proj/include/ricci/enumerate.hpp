#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ricci/graph.hpp"

namespace ricci {

enum class CycleFilter { None, TriangleFree, C3C5Free };

// Largest order the exhaustive enumerator accepts.
inline constexpr std::size_t kMaxEnumerationOrder = 7;

// Upper-triangle adjacency bits of the lexicographically smallest relabelling;
// equal for two graphs on the same order iff they are isomorphic.
std::uint64_t canonical_code(const Graph& g);

// Canonically labelled representative of g's isomorphism class.
Graph canonical_form(const Graph& g);

// One representative per isomorphism class of connected graphs on exactly n
// vertices passing the filter, ordered by canonical code. Throws ScaleError
// for n > kMaxEnumerationOrder.
std::vector<Graph> enumerate_small_connected(std::size_t n, CycleFilter filter = CycleFilter::None);

// Streaming form; the callback sees each class once in the same order.
void for_each_small_connected(std::size_t n, CycleFilter filter,
                              const std::function<void(const Graph&)>& fn);

}  // namespace ricci
