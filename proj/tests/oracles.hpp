#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the SimpleGraph container.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "stabletoric/graph.hpp"

namespace oracle {

using stabletoric::SimpleGraph;

inline bool independent(const SimpleGraph &g, std::uint64_t mask) {
    for (int i = 1; i <= g.order(); ++i)
        for (int j = i + 1; j <= g.order(); ++j)
            if ((mask >> (i - 1) & 1U) && (mask >> (j - 1) & 1U) && g.adjacent(i, j))
                return false;
    return true;
}

inline std::vector<std::uint64_t> stable_masks(const SimpleGraph &g) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m)
        if (independent(g, m))
            out.push_back(m);
    return out;
}

inline bool clique(const SimpleGraph &g, std::uint64_t mask) {
    for (int i = 1; i <= g.order(); ++i)
        for (int j = i + 1; j <= g.order(); ++j)
            if ((mask >> (i - 1) & 1U) && (mask >> (j - 1) & 1U) && !g.adjacent(i, j))
                return false;
    return true;
}

inline int degree_in(const SimpleGraph &g, int v, std::uint64_t mask) {
    int d = 0;
    for (int u = 1; u <= g.order(); ++u)
        if (u != v && (mask >> (u - 1) & 1U) && g.adjacent(u, v))
            ++d;
    return d;
}

inline bool connected_in(const SimpleGraph &g, std::uint64_t mask) {
    if (mask == 0)
        return true;
    std::uint64_t seen = mask & (~mask + 1);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 1; v <= g.order(); ++v)
            if ((seen >> (v - 1) & 1U))
                for (int u = 1; u <= g.order(); ++u)
                    if ((mask >> (u - 1) & 1U) && !(seen >> (u - 1) & 1U) && g.adjacent(u, v)) {
                        seen |= std::uint64_t{1} << (u - 1);
                        grew = true;
                    }
    }
    return seen == mask;
}

/// Vertex sets of chordless cycles: connected induced 2-regular subgraphs.
inline std::set<std::uint64_t> chordless_cycles(const SimpleGraph &g, int min_len) {
    std::set<std::uint64_t> out;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.order()); ++m) {
        if (__builtin_popcountll(m) < std::max(min_len, 3))
            continue;
        bool two_regular = true;
        for (int v = 1; v <= g.order() && two_regular; ++v)
            if ((m >> (v - 1) & 1U))
                two_regular = degree_in(g, v, m) == 2;
        if (two_regular && connected_in(g, m))
            out.insert(m);
    }
    return out;
}

inline bool two_colorable(const SimpleGraph &g) {
    for (std::uint64_t side = 0; side < (std::uint64_t{1} << g.order()); ++side) {
        bool ok = true;
        for (int i = 1; i <= g.order() && ok; ++i)
            for (int j = i + 1; j <= g.order() && ok; ++j)
                if (g.adjacent(i, j) && ((side >> (i - 1)) & 1U) == ((side >> (j - 1)) & 1U))
                    ok = false;
        if (ok)
            return true;
    }
    return false;
}

inline int clique_number(const SimpleGraph &g, std::uint64_t within) {
    int best = 0;
    for (std::uint64_t m = within;; m = (m - 1) & within) {
        if (clique(g, m))
            best = std::max(best, __builtin_popcountll(m));
        if (m == 0)
            break;
    }
    return best;
}

inline bool colorable(const SimpleGraph &g, std::uint64_t within, int k, std::vector<int> &color, int v) {
    while (v <= g.order() && !(within >> (v - 1) & 1U))
        ++v;
    if (v > g.order())
        return true;
    for (int c = 0; c < k; ++c) {
        bool free = true;
        for (int u = 1; u < v && free; ++u)
            if ((within >> (u - 1) & 1U) && g.adjacent(u, v) && color[u] == c)
                free = false;
        if (!free)
            continue;
        color[v] = c;
        if (colorable(g, within, k, color, v + 1))
            return true;
    }
    return false;
}

inline int chromatic_number(const SimpleGraph &g, std::uint64_t within) {
    std::vector<int> color(static_cast<std::size_t>(g.order()) + 1, -1);
    for (int k = 0;; ++k)
        if (colorable(g, within, k, color, 1))
            return k;
}

/// Perfect by definition: clique number equals chromatic number on every
/// induced subgraph.
inline bool perfect_by_definition(const SimpleGraph &g) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m)
        if (clique_number(g, m) != chromatic_number(g, m))
            return false;
    return true;
}

} // namespace oracle
