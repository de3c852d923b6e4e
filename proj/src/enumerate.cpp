#include "stabletoric/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stabletoric {

void for_each_labeled_graph(int n, const std::function<void(const SimpleGraph &)> &f) {
    std::vector<Edge> slots;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            slots.emplace_back(i, j);
    if (slots.size() >= 40)
        throw std::invalid_argument("for_each_labeled_graph: too many vertices");
    const std::uint64_t count = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        SimpleGraph g(n);
        for (std::size_t k = 0; k < slots.size(); ++k)
            if ((mask >> k) & 1U)
                g.add_edge(slots[k].first, slots[k].second);
        f(g);
    }
}

std::uint64_t canonical_code(const SimpleGraph &g, VertexSet marked) {
    const int n = g.order();
    if (n > 8)
        throw std::invalid_argument("canonical_code: at most 8 vertices");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        // perm[k] is the old vertex placed at position k+1.
        std::uint64_t code = 0;
        int bit = 0;
        for (int k = 0; k < n; ++k)
            code |= static_cast<std::uint64_t>(marked.contains(perm[static_cast<std::size_t>(k)]) ? 1 : 0) << bit++;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                code |= static_cast<std::uint64_t>(
                            g.adjacent(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]) ? 1 : 0)
                        << bit++;
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<SimpleGraph> isomorphism_classes(int n, const std::function<bool(const SimpleGraph &)> &hereditary) {
    std::vector<SimpleGraph> level{SimpleGraph(0)};
    for (int size = 1; size <= n; ++size) {
        std::set<std::uint64_t> seen;
        std::vector<SimpleGraph> next;
        for (const auto &base : level) {
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (size - 1)); ++nb) {
                SimpleGraph g(size, base.edges());
                for (int v = 1; v < size; ++v)
                    if ((nb >> (v - 1)) & 1U)
                        g.add_edge(v, size);
                if (!hereditary(g))
                    continue;
                if (seen.insert(canonical_code(g)).second)
                    next.push_back(std::move(g));
            }
        }
        level = std::move(next);
    }
    return level;
}

bool is_connected(const SimpleGraph &g) {
    if (g.order() == 0)
        return true;
    VertexSet reached;
    reached.insert(1);
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier.vertices())
            next = next | g.neighbors(v);
        frontier = next - reached;
        reached = reached | next;
    }
    return reached == g.all_vertices();
}

bool triangle_free(const SimpleGraph &g) {
    for (auto [i, j] : g.edges())
        if (!(g.neighbors(i) & g.neighbors(j)).empty())
            return false;
    return true;
}

} // namespace stabletoric
