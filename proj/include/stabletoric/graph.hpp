#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stabletoric {

/// Vertices are 1-based at every public boundary. Internally a vertex v is
/// bit v-1 of a 64-bit mask, which caps graphs at 64 vertices.
inline constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;

/// A set of vertices stored as a bit mask (bit v-1 for vertex v).
class VertexSet {
  public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    static VertexSet of(const std::vector<int> &vertices);

    constexpr std::uint64_t bits() const { return bits_; }
    bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
    int size() const { return __builtin_popcountll(bits_); }
    bool empty() const { return bits_ == 0; }
    void insert(int v) { bits_ |= std::uint64_t{1} << (v - 1); }
    std::vector<int> vertices() const;
    std::string to_string() const;

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }

  private:
    std::uint64_t bits_ = 0;
};

/// Canonical order on vertex sets: by cardinality, then lexicographically by
/// the sorted vertex list.
bool canonical_less(VertexSet a, VertexSet b);

/// Undirected loopless graph without multiple edges on vertices 1..n.
class SimpleGraph {
  public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    SimpleGraph(int n, const std::vector<Edge> &edges);

    int order() const { return n_; }
    void add_edge(int i, int j);
    void remove_edge(int i, int j);
    bool adjacent(int i, int j) const;
    std::uint64_t neighbor_bits(int v) const { return adj_[v - 1]; }
    VertexSet neighbors(int v) const { return VertexSet(adj_[v - 1]); }
    int degree(int v) const { return __builtin_popcountll(adj_[v - 1]); }
    VertexSet all_vertices() const;

    /// Edges as pairs (i, j) with i < j, sorted lexicographically.
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;

    friend bool operator==(const SimpleGraph &, const SimpleGraph &) = default;

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// Undirected graph allowing at most one loop per vertex and no multiple edges.
class LoopGraph {
  public:
    LoopGraph() = default;
    explicit LoopGraph(int n) : base_(n) {}
    LoopGraph(SimpleGraph base, VertexSet loops);

    int order() const { return base_.order(); }
    void add_edge(int i, int j);
    void add_loop(int v);
    bool has_loop(int v) const { return loops_.contains(v); }
    bool adjacent(int i, int j) const;
    const SimpleGraph &simple_part() const { return base_; }
    VertexSet loops() const { return loops_; }

    /// Edges and loops as pairs (i, j) with i <= j (a loop is (i, i)),
    /// sorted lexicographically. This is the generator order of the edge
    /// polytope.
    std::vector<Edge> edges_and_loops() const;

    friend bool operator==(const LoopGraph &, const LoopGraph &) = default;

  private:
    SimpleGraph base_;
    VertexSet loops_;
};

/// A walk given by its vertex sequence v_1, ..., v_{q+1}; step k uses the
/// edge (or loop, when v_k == v_{k+1}) {v_k, v_{k+1}}.
struct Walk {
    std::vector<int> vertices;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
    bool even() const { return length() % 2 == 0; }
};

enum class Parity { odd, even, any };

SimpleGraph complement(const SimpleGraph &g);

/// All stable sets of g in canonical order; always contains the empty set and
/// every singleton.
std::vector<VertexSet> stable_sets(const SimpleGraph &g);

int stability_number(const SimpleGraph &g);

struct BipartiteResult {
    bool bipartite = true;
    std::vector<int> odd_cycle; // vertex sequence of an odd cycle when not bipartite
};

BipartiteResult bipartite_check(const SimpleGraph &g);

/// Chordless cycles of length >= min_len with the requested parity. Each
/// cycle is reported once, as a vertex sequence starting at its smallest
/// vertex and with the second vertex smaller than the last.
std::vector<std::vector<int>> induced_cycles(const SimpleGraph &g, int min_len, Parity parity);

struct PerfectResult {
    bool perfect = true;
    /// "odd hole" or "odd antihole"; empty when perfect.
    std::string certificate_kind;
    std::vector<int> certificate;
};

PerfectResult perfect_check(const SimpleGraph &g);
bool is_chordal(const SimpleGraph &g);

/// Clique-sum reading of ring graphs: g decomposes along clique separators of
/// size at most two (a cut vertex or an edge whose endpoints separate) into
/// atoms that are single vertices, single edges or chordless cycles.
bool is_ring_graph(const SimpleGraph &g);

/// Edges {i, j} with i in c1 \ c2 and j in c2 \ c1. Throws if c1 or c2 is not
/// a cycle of g.
std::vector<Edge> bridges_between(const SimpleGraph &g, const std::vector<int> &c1,
                                  const std::vector<int> &c2);

bool is_cycle_of(const SimpleGraph &g, const std::vector<int> &cycle);

struct OddCycleConditionResult {
    bool holds = true;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> violating_pair;
};

/// Every two induced odd cycles (triangles included) share a vertex or are
/// joined by a bridge.
OddCycleConditionResult odd_cycle_condition(const SimpleGraph &g);

/// The complement graph with an extra vertex n+1 joined to every vertex and
/// carrying a loop.
LoopGraph star_graph(const SimpleGraph &gbar);

/// Glues g2 onto g1: `identification` maps vertices of g2 to vertices of g1.
/// The result keeps g1's labels and appends the remaining vertices of g2 in
/// increasing order. Throws std::invalid_argument if the overlap is not a
/// clique in both graphs.
SimpleGraph clique_sum(const SimpleGraph &g1, const SimpleGraph &g2,
                       const std::vector<std::pair<int, int>> &identification);

struct InducedSubgraph {
    SimpleGraph graph;
    std::vector<int> original; // original[k-1] is the old label of new vertex k
};

InducedSubgraph induced_subgraph(const SimpleGraph &g, const std::vector<int> &vertices);

SimpleGraph disjoint_union(const SimpleGraph &a, const SimpleGraph &b);
SimpleGraph cycle_graph(int m);

} // namespace stabletoric
