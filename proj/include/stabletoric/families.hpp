#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stabletoric/graph.hpp"

namespace stabletoric {

SimpleGraph complete_graph(int n);
/// G with complement equal to the cycle C_m.
SimpleGraph complement_of_cycle(int m);
/// G whose complement is C_{2k+1} and C_{2l+1} on disjoint vertex sets
/// (vertices 1..2k+1 and 2k+2..2k+2l+2).
SimpleGraph two_odd_holes(int k, int l);
SimpleGraph kn_minus_edge(int n);
/// G whose complement is C_{m1} followed by the complement of C_{m2}.
SimpleGraph hole_antihole(int m1, int m2);
/// G whose complement is complement(C_{m1}) and complement(C_{m2}); with
/// `shared` the two antiholes share vertex 1, otherwise they are disjoint.
/// There are no bridges between them in either case.
SimpleGraph two_antiholes(int m1, int m2, bool shared);
/// Complement of a seeded random triangle-free graph with at least one edge.
SimpleGraph random_alpha2(int n, double edge_probability, std::uint64_t seed);

/// Dispatch by name; params as integers (random_alpha2 takes n, probability
/// in percent, seed). Throws std::invalid_argument on unknown names or bad
/// parameters.
SimpleGraph family(const std::string &name, const std::vector<long long> &params);

/// Parses "name:p1,p2,...".
SimpleGraph family_from_spec(const std::string &spec);

} // namespace stabletoric
