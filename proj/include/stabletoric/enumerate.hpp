#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "stabletoric/graph.hpp"

namespace stabletoric {

/// Calls f on every labeled simple graph on n vertices (2^(n choose 2) of them).
void for_each_labeled_graph(int n, const std::function<void(const SimpleGraph &)> &f);

/// Smallest adjacency code over all vertex relabelings; `marked` vertices
/// (a bit mask) must map onto marked vertices. Brute force, n <= 8.
std::uint64_t canonical_code(const SimpleGraph &g, VertexSet marked = VertexSet());

/// One representative per isomorphism class of graphs on n vertices
/// satisfying a hereditary property (closed under deleting vertices),
/// grown one vertex at a time.
std::vector<SimpleGraph> isomorphism_classes(int n, const std::function<bool(const SimpleGraph &)> &hereditary);

bool is_connected(const SimpleGraph &g);
bool triangle_free(const SimpleGraph &g);

} // namespace stabletoric
