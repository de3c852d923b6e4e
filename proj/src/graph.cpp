#include "stabletoric/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace stabletoric {

namespace {

std::uint64_t low_bits(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

int lowest_vertex(std::uint64_t bits) { return __builtin_ctzll(bits) + 1; }

template <typename F>
void for_each_vertex(std::uint64_t bits, F &&f) {
    while (bits != 0) {
        const int v = lowest_vertex(bits);
        bits &= bits - 1;
        f(v);
    }
}

// Connected components of g restricted to `within`.
std::vector<std::uint64_t> components(const SimpleGraph &g, std::uint64_t within) {
    std::vector<std::uint64_t> out;
    std::uint64_t left = within;
    while (left != 0) {
        std::uint64_t comp = left & (~left + 1);
        std::uint64_t frontier = comp;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for_each_vertex(frontier, [&](int v) { next |= g.neighbor_bits(v); });
            next &= within & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

} // namespace

VertexSet VertexSet::of(const std::vector<int> &vertices) {
    VertexSet s;
    for (int v : vertices) {
        if (v < 1 || v > kMaxVertices)
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
        s.insert(v);
    }
    return s;
}

std::vector<int> VertexSet::vertices() const {
    std::vector<int> out;
    for_each_vertex(bits_, [&](int v) { out.push_back(v); });
    return out;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : vertices()) {
        if (!first)
            os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

bool canonical_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    const auto va = a.vertices();
    const auto vb = b.vertices();
    return va < vb;
}

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must be in 0.." + std::to_string(kMaxVertices));
}

SimpleGraph::SimpleGraph(int n, const std::vector<Edge> &edges) : SimpleGraph(n) {
    for (auto [i, j] : edges)
        add_edge(i, j);
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
}

void SimpleGraph::add_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j)
        throw std::invalid_argument("simple graphs have no loops (vertex " + std::to_string(i) + ")");
    adj_[i - 1] |= std::uint64_t{1} << (j - 1);
    adj_[j - 1] |= std::uint64_t{1} << (i - 1);
}

void SimpleGraph::remove_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    adj_[i - 1] &= ~(std::uint64_t{1} << (j - 1));
    adj_[j - 1] &= ~(std::uint64_t{1} << (i - 1));
}

bool SimpleGraph::adjacent(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    return (adj_[i - 1] >> (j - 1)) & 1U;
}

VertexSet SimpleGraph::all_vertices() const { return VertexSet(low_bits(n_)); }

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    for (int i = 1; i <= n_; ++i)
        for_each_vertex(adj_[i - 1] & ~low_bits(i), [&](int j) { out.emplace_back(i, j); });
    return out;
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t twice = 0;
    for (auto bits : adj_)
        twice += static_cast<std::size_t>(__builtin_popcountll(bits));
    return twice / 2;
}

LoopGraph::LoopGraph(SimpleGraph base, VertexSet loops) : base_(std::move(base)), loops_(loops) {
    if ((loops_.bits() & ~base_.all_vertices().bits()) != 0)
        throw std::invalid_argument("loop at a vertex outside the graph");
}

void LoopGraph::add_edge(int i, int j) {
    if (i == j)
        add_loop(i);
    else
        base_.add_edge(i, j);
}

void LoopGraph::add_loop(int v) {
    if (v < 1 || v > order())
        throw std::invalid_argument("loop vertex out of range: " + std::to_string(v));
    loops_.insert(v);
}

bool LoopGraph::adjacent(int i, int j) const { return i == j ? has_loop(i) : base_.adjacent(i, j); }

std::vector<Edge> LoopGraph::edges_and_loops() const {
    std::vector<Edge> out = base_.edges();
    for (int v : loops_.vertices())
        out.emplace_back(v, v);
    std::sort(out.begin(), out.end());
    return out;
}

SimpleGraph complement(const SimpleGraph &g) {
    const int n = g.order();
    SimpleGraph out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (!g.adjacent(i, j))
                out.add_edge(i, j);
    return out;
}

std::vector<VertexSet> stable_sets(const SimpleGraph &g) {
    std::vector<VertexSet> out;
    std::function<void(std::uint64_t, std::uint64_t)> grow = [&](std::uint64_t current, std::uint64_t candidates) {
        out.emplace_back(current);
        while (candidates != 0) {
            const int v = lowest_vertex(candidates);
            candidates &= candidates - 1;
            grow(current | (std::uint64_t{1} << (v - 1)), candidates & ~g.neighbor_bits(v));
        }
    };
    grow(0, g.all_vertices().bits());
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

int stability_number(const SimpleGraph &g) {
    int best = 0;
    std::function<void(int, std::uint64_t)> search = [&](int size, std::uint64_t candidates) {
        if (candidates == 0) {
            best = std::max(best, size);
            return;
        }
        if (size + __builtin_popcountll(candidates) <= best)
            return;
        const int v = lowest_vertex(candidates);
        const std::uint64_t rest = candidates & (candidates - 1);
        search(size + 1, rest & ~g.neighbor_bits(v));
        search(size, rest);
    };
    search(0, g.all_vertices().bits());
    return best;
}

BipartiteResult bipartite_check(const SimpleGraph &g) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> depth(static_cast<std::size_t>(n) + 1, 0);
    for (int root = 1; root <= n; ++root) {
        if (color[root] != -1)
            continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u).vertices()) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    // Tree paths from u and w meet at their lowest common ancestor.
                    std::vector<int> left{u};
                    std::vector<int> right{w};
                    int a = u;
                    int b = w;
                    while (depth[a] > depth[b]) {
                        a = parent[a];
                        left.push_back(a);
                    }
                    while (depth[b] > depth[a]) {
                        b = parent[b];
                        right.push_back(b);
                    }
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    right.pop_back();
                    std::vector<int> cycle(left.rbegin(), left.rend());
                    cycle.insert(cycle.end(), right.begin(), right.end());
                    return {false, cycle};
                }
            }
        }
    }
    return {};
}

std::vector<std::vector<int>> induced_cycles(const SimpleGraph &g, int min_len, Parity parity) {
    if (min_len < 3)
        throw std::invalid_argument("induced_cycles: min_len must be at least 3");
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    const int n = g.order();

    auto accept = [&](std::size_t len) {
        if (static_cast<int>(len) < min_len)
            return false;
        if (parity == Parity::odd)
            return len % 2 == 1;
        if (parity == Parity::even)
            return len % 2 == 0;
        return true;
    };

    // path = s, v1, ..., vk is chordless, all vertices > s, and only v1 is
    // adjacent to s. `interior` holds v1..v_{k-1}.
    std::function<void(int, std::uint64_t, std::uint64_t)> extend = [&](int s, std::uint64_t on_path,
                                                                         std::uint64_t interior) {
        const int last = path.back();
        std::uint64_t next = g.neighbor_bits(last) & ~on_path & ~low_bits(s);
        while (next != 0) {
            const int w = lowest_vertex(next);
            next &= next - 1;
            if ((g.neighbor_bits(w) & interior) != 0)
                continue;
            if (g.adjacent(w, s)) {
                if (path[1] < w && accept(path.size() + 1)) {
                    out.push_back(path);
                    out.back().push_back(w);
                }
                continue;
            }
            path.push_back(w);
            extend(s, on_path | (std::uint64_t{1} << (w - 1)), interior | (std::uint64_t{1} << (last - 1)));
            path.pop_back();
        }
    };

    for (int s = 1; s <= n; ++s) {
        std::uint64_t firsts = g.neighbor_bits(s) & ~low_bits(s);
        while (firsts != 0) {
            const int v1 = lowest_vertex(firsts);
            firsts &= firsts - 1;
            path = {s, v1};
            extend(s, (std::uint64_t{1} << (s - 1)) | (std::uint64_t{1} << (v1 - 1)), 0);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

PerfectResult perfect_check(const SimpleGraph &g) {
    auto holes = induced_cycles(g, 5, Parity::odd);
    if (!holes.empty())
        return {false, "odd hole", holes.front()};
    auto antiholes = induced_cycles(complement(g), 5, Parity::odd);
    if (!antiholes.empty())
        return {false, "odd antihole", antiholes.front()};
    return {};
}

bool is_chordal(const SimpleGraph &g) { return induced_cycles(g, 4, Parity::any).empty(); }

namespace {

bool ring_decomposes(const SimpleGraph &g, std::uint64_t part) {
    const int size = __builtin_popcountll(part);
    if (size <= 1)
        return true;
    auto comps = components(g, part);
    if (comps.size() > 1)
        return std::all_of(comps.begin(), comps.end(), [&](auto c) { return ring_decomposes(g, c); });

    // Single-vertex separators.
    std::uint64_t scan = part;
    while (scan != 0) {
        const int v = lowest_vertex(scan);
        scan &= scan - 1;
        const std::uint64_t vb = std::uint64_t{1} << (v - 1);
        auto pieces = components(g, part & ~vb);
        if (pieces.size() > 1)
            return std::all_of(pieces.begin(), pieces.end(), [&](auto c) { return ring_decomposes(g, c | vb); });
    }
    // Edge separators.
    scan = part;
    while (scan != 0) {
        const int u = lowest_vertex(scan);
        scan &= scan - 1;
        std::uint64_t others = g.neighbor_bits(u) & part & ~low_bits(u);
        while (others != 0) {
            const int w = lowest_vertex(others);
            others &= others - 1;
            const std::uint64_t sep = (std::uint64_t{1} << (u - 1)) | (std::uint64_t{1} << (w - 1));
            auto pieces = components(g, part & ~sep);
            if (pieces.size() > 1)
                return std::all_of(pieces.begin(), pieces.end(),
                                   [&](auto c) { return ring_decomposes(g, c | sep); });
        }
    }
    // Atom: a connected part with no small clique separator.
    if (size == 2)
        return true;
    std::uint64_t check = part;
    while (check != 0) {
        const int v = lowest_vertex(check);
        check &= check - 1;
        if (__builtin_popcountll(g.neighbor_bits(v) & part) != 2)
            return false;
    }
    return true;
}

} // namespace

bool is_ring_graph(const SimpleGraph &g) { return ring_decomposes(g, g.all_vertices().bits()); }

bool is_cycle_of(const SimpleGraph &g, const std::vector<int> &cycle) {
    if (cycle.size() < 3)
        return false;
    VertexSet seen;
    for (int v : cycle) {
        if (v < 1 || v > g.order() || seen.contains(v))
            return false;
        seen.insert(v);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
        if (!g.adjacent(cycle[k], cycle[(k + 1) % cycle.size()]))
            return false;
    return true;
}

std::vector<Edge> bridges_between(const SimpleGraph &g, const std::vector<int> &c1, const std::vector<int> &c2) {
    if (!is_cycle_of(g, c1) || !is_cycle_of(g, c2))
        throw std::invalid_argument("bridges_between: argument is not a cycle of the graph");
    const VertexSet s1 = VertexSet::of(c1);
    const VertexSet s2 = VertexSet::of(c2);
    const VertexSet only1 = s1 - s2;
    const VertexSet only2 = s2 - s1;
    std::vector<Edge> out;
    for (int i : only1.vertices())
        for (int j : (g.neighbors(i) & only2).vertices())
            out.emplace_back(std::min(i, j), std::max(i, j));
    std::sort(out.begin(), out.end());
    return out;
}

OddCycleConditionResult odd_cycle_condition(const SimpleGraph &g) {
    const auto cycles = induced_cycles(g, 3, Parity::odd);
    for (std::size_t a = 0; a < cycles.size(); ++a) {
        const VertexSet sa = VertexSet::of(cycles[a]);
        for (std::size_t b = a + 1; b < cycles.size(); ++b) {
            const VertexSet sb = VertexSet::of(cycles[b]);
            if (!(sa & sb).empty())
                continue;
            if (bridges_between(g, cycles[a], cycles[b]).empty())
                return {false, std::make_pair(cycles[a], cycles[b])};
        }
    }
    return {};
}

LoopGraph star_graph(const SimpleGraph &gbar) {
    const int n = gbar.order();
    SimpleGraph base(n + 1, gbar.edges());
    for (int i = 1; i <= n; ++i)
        base.add_edge(i, n + 1);
    VertexSet loops;
    loops.insert(n + 1);
    return LoopGraph(std::move(base), loops);
}

SimpleGraph clique_sum(const SimpleGraph &g1, const SimpleGraph &g2,
                       const std::vector<std::pair<int, int>> &identification) {
    const int n1 = g1.order();
    const int n2 = g2.order();
    std::vector<int> label(static_cast<std::size_t>(n2) + 1, 0);
    VertexSet used1;
    for (auto [v2, v1] : identification) {
        if (v2 < 1 || v2 > n2 || v1 < 1 || v1 > n1)
            throw std::invalid_argument("clique_sum: identified vertex out of range");
        if (label[v2] != 0 || used1.contains(v1))
            throw std::invalid_argument("clique_sum: identification is not injective");
        label[v2] = v1;
        used1.insert(v1);
    }
    for (std::size_t a = 0; a < identification.size(); ++a)
        for (std::size_t b = a + 1; b < identification.size(); ++b) {
            if (!g2.adjacent(identification[a].first, identification[b].first))
                throw std::invalid_argument("clique_sum: overlap is not a clique in the second graph");
            if (!g1.adjacent(identification[a].second, identification[b].second))
                throw std::invalid_argument("clique_sum: overlap is not a clique in the first graph");
        }
    int next = n1;
    for (int v = 1; v <= n2; ++v)
        if (label[v] == 0)
            label[v] = ++next;
    SimpleGraph out(next, g1.edges());
    for (auto [i, j] : g2.edges())
        out.add_edge(label[i], label[j]);
    return out;
}

InducedSubgraph induced_subgraph(const SimpleGraph &g, const std::vector<int> &vertices) {
    std::vector<int> keep = vertices;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int v : keep)
        if (v < 1 || v > g.order())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
    SimpleGraph sub(static_cast<int>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b)
            if (g.adjacent(keep[a], keep[b]))
                sub.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    return {std::move(sub), keep};
}

SimpleGraph disjoint_union(const SimpleGraph &a, const SimpleGraph &b) {
    SimpleGraph out(a.order() + b.order(), a.edges());
    for (auto [i, j] : b.edges())
        out.add_edge(i + a.order(), j + a.order());
    return out;
}

SimpleGraph cycle_graph(int m) {
    if (m < 3)
        throw std::invalid_argument("cycle length must be at least 3");
    SimpleGraph out(m);
    for (int i = 1; i <= m; ++i)
        out.add_edge(i, i % m + 1);
    return out;
}

} // namespace stabletoric
