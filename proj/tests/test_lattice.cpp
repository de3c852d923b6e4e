#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "stabletoric/enumerate.hpp"
#include "stabletoric/families.hpp"
#include "stabletoric/lattice.hpp"

using namespace stabletoric;

namespace {

std::set<Point> point_set(const PointConfiguration &p) { return {p.points().begin(), p.points().end()}; }

// Laplace expansion along the first row.
long laplace(const std::vector<std::vector<long>> &m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    long det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0)
            continue;
        std::vector<std::vector<long>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(row);
        }
        det += (c % 2 == 0 ? 1 : -1) * m[0][c] * laplace(minor);
    }
    return det;
}

std::size_t index_of(const PointConfiguration &p, const std::string &label) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.labels()[i] == label)
            return i;
    FAIL("no point labelled " << label);
    return 0;
}

bool reproduces(const PointConfiguration &p, const RationalCertificate &cert, const Point &target) {
    // Summed by hand rather than through certificate_sum.
    std::vector<Rational> sum(target.size(), 0);
    for (const auto &[idx, c] : cert) {
        if (c < 0)
            return false;
        for (int k = 0; k < p.dimension(); ++k)
            sum[static_cast<std::size_t>(k)] += c * p.point(idx)[static_cast<std::size_t>(k)];
        sum.back() += c;
    }
    for (std::size_t k = 0; k < target.size(); ++k)
        if (sum[k] != target[k])
            return false;
    return true;
}

std::map<std::size_t, Rational> nonzero(const RationalCertificate &cert) {
    std::map<std::size_t, Rational> out;
    for (const auto &[idx, c] : cert)
        if (c != 0)
            out[idx] += c;
    return out;
}

Point ones(int n, int last) {
    Point p(static_cast<std::size_t>(n), 1);
    p.push_back(last);
    return p;
}

} // namespace

TEST_SUITE("lattice") {

TEST_CASE("stable set polytope examples") {
    const auto simplex = stable_set_polytope(complete_graph(3));
    CHECK(simplex.points() == std::vector<Point>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(simplex.labels() == std::vector<std::string>{"{}", "{1}", "{2}", "{3}"});
    const auto two_k2 = stable_set_polytope(SimpleGraph(4, {{1, 2}, {3, 4}}));
    CHECK(two_k2.size() == 9);
    CHECK(point_set(two_k2).count({1, 0, 1, 0}) == 1);
    CHECK(stable_set_polytope(SimpleGraph(2)).points() == std::vector<Point>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(two_k2.zero_one());
    CHECK(two_k2.homogenized(5) == Point{1, 0, 1, 0, 1});
}

TEST_CASE("edge polytope examples") {
    const auto tri = edge_polytope(LoopGraph(complete_graph(3), VertexSet()));
    CHECK(tri.points() == std::vector<Point>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    LoopGraph loop(1);
    loop.add_loop(1);
    CHECK(edge_polytope(loop).points() == std::vector<Point>{{2}});
    const auto star = edge_polytope(star_graph(SimpleGraph(2, {{1, 2}})));
    CHECK(star.points() == std::vector<Point>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}});
    CHECK_FALSE(star.zero_one());
}

TEST_CASE("point configuration validation") {
    CHECK_THROWS_AS(PointConfiguration(2, {{1, 2, 3}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(PointConfiguration(2, {{-1, 0}}, {}), std::invalid_argument);
    const PointConfiguration p(2, {{0, 1}, {1, 0}}, {});
    CHECK(p.labels() == std::vector<std::string>{"p1", "p2"});
}

TEST_CASE("exact determinant agrees with Laplace expansion") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int k = 0; k < 400; ++k) {
        const std::size_t n = 1 + static_cast<std::size_t>(k % 6);
        std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
        std::vector<std::vector<long>> b(n, std::vector<long>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                b[i][j] = a[i][j] = entry(rng);
        REQUIRE(determinant(a) == laplace(b));
        std::vector<std::vector<Integer>> big(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                big[i][j] = Integer(static_cast<long>(a[i][j]));
        REQUIRE(determinant(big) == laplace(b));
    }
    // Large entries leave the machine-integer path.
    std::vector<std::vector<std::int64_t>> huge{{4000000000LL, 3}, {5, 4000000000LL}};
    CHECK(determinant(huge) == Integer("16000000000000000000") - 15);
    CHECK(rank({{1, 2}, {2, 4}}) == 1);
    CHECK(rank({{1, 0, 0}, {0, 1, 0}}) == 2);
}

TEST_CASE("exact nonnegative solutions") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int k = 0; k < 200; ++k) {
        const std::size_t rows = 2 + static_cast<std::size_t>(k % 3), cols = 5;
        std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
        std::vector<Rational> x(cols);
        for (auto &v : x) {
            v = Rational(std::abs(entry(rng)), 1 + std::abs(entry(rng)));
            v.canonicalize();
        }
        std::vector<Rational> b(rows, 0);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                a[i][j] = entry(rng);
                b[i] += a[i][j] * x[j];
            }
        const auto sol = nonnegative_solution(a, b);
        REQUIRE(sol.has_value());
        for (std::size_t i = 0; i < rows; ++i) {
            Rational lhs = 0;
            for (std::size_t j = 0; j < cols; ++j) {
                REQUIRE((*sol)[j] >= 0);
                lhs += a[i][j] * (*sol)[j];
            }
            REQUIRE(lhs == b[i]);
        }
    }
    CHECK_FALSE(nonnegative_solution({{1, 1}}, {-1}).has_value());
    CHECK_FALSE(nonnegative_solution({{1, -1}, {1, -1}}, {1, 2}).has_value());
}

TEST_CASE("unimodularity examples") {
    CHECK(is_unimodular(stable_set_polytope(complement_of_cycle(4))).status == UnimodularStatus::unimodular);
    for (int n = 1; n <= 5; ++n)
        CHECK(is_unimodular(stable_set_polytope(complete_graph(n))).status == UnimodularStatus::unimodular);

    const auto p = stable_set_polytope(complement_of_cycle(5));
    for (bool targeted : {true, false}) {
        UnimodularOptions options;
        options.targeted_first = targeted;
        const auto r = is_unimodular(p, options);
        REQUIRE(r.status == UnimodularStatus::not_unimodular);
        // Recompute the refuting minor independently.
        std::vector<std::vector<long>> m(6, std::vector<long>());
        for (std::size_t col : r.refuting) {
            const Point h = p.homogenized(col);
            for (std::size_t row = 0; row < 6; ++row)
                m[row].push_back(h[row]);
        }
        CHECK(std::abs(laplace(m)) != r.common_value);
        CHECK(std::abs(laplace(m)) == abs(r.refuting_value));
        if (targeted) {
            CHECK(abs(r.refuting_value) == 2);
            const std::set<std::string> cols(r.refuting_labels.begin(), r.refuting_labels.end());
            CHECK(cols == std::set<std::string>{"{}", "{1,2}", "{2,3}", "{3,4}", "{4,5}", "{1,5}"});
        }
    }
}

TEST_CASE("unimodular configurations have all nonzero maximal minors equal") {
    // Exhaustive minors by Laplace expansion on small graphs.
    for (int n = 2; n <= 4; ++n)
        for_each_labeled_graph(n, [n](const SimpleGraph &g) {
            const auto p = stable_set_polytope(g);
            const std::size_t m = p.size(), k = static_cast<std::size_t>(n) + 1;
            std::set<long> values;
            std::vector<std::size_t> pick(k);
            std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
                if (depth == k) {
                    std::vector<std::vector<long>> mat(k);
                    for (std::size_t c : pick) {
                        const Point h = p.homogenized(c);
                        for (std::size_t r = 0; r < k; ++r)
                            mat[r].push_back(h[r]);
                    }
                    if (long d = std::abs(laplace(mat)); d != 0)
                        values.insert(d);
                    return;
                }
                for (std::size_t i = start; i < m; ++i) {
                    pick[depth] = i;
                    rec(i + 1, depth + 1);
                }
            };
            rec(0, 0);
            const auto r = is_unimodular(p);
            REQUIRE((r.status == UnimodularStatus::unimodular) == (values.size() == 1));
        });
}

TEST_CASE("cone membership") {
    const auto p = stable_set_polytope(two_odd_holes(2, 2));
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto r = cone_membership(p.homogenized(i), p);
        REQUIRE(r.member);
        REQUIRE(reproduces(p, r.certificate, p.homogenized(i)));
    }
    const Point target = ones(10, 5);
    const auto r = cone_membership(target, p);
    REQUIRE(r.member);
    CHECK(reproduces(p, r.certificate, target));

    // The half-weights on the ten complement edges, summed independently.
    RationalCertificate halves;
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < 5; ++i) {
            const int a = 5 * c + i + 1, b = 5 * c + (i + 1) % 5 + 1;
            halves.emplace_back(index_of(p, VertexSet::of({a, b}).to_string()), Rational(1, 2));
        }
    CHECK(reproduces(p, halves, target));

    Point negative(11, 0);
    negative.back() = -1;
    CHECK_FALSE(cone_membership(negative, p).member);
    Point over = ones(10, 4);
    CHECK_FALSE(cone_membership(over, p).member);
}

TEST_CASE("semigroup membership") {
    const auto p = stable_set_polytope(two_odd_holes(2, 2));
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
    for (int k = 0; k < 30; ++k) {
        const std::size_t a = pick(rng), b = pick(rng);
        Point t(11, 0);
        for (std::size_t i = 0; i < 11; ++i)
            t[i] = p.homogenized(a)[i] + p.homogenized(b)[i];
        const auto r = semigroup_membership(t, p);
        REQUIRE(r.member);
        REQUIRE(r.decomposition.size() == 2);
        Point twice = p.homogenized(a);
        for (auto &x : twice)
            x *= 2;
        REQUIRE(semigroup_membership(twice, p).member);
    }
    CHECK_FALSE(semigroup_membership(ones(10, 5), p).member);
}

TEST_CASE("the all-ones point of degree 5 has no decomposition (multiset oracle)") {
    const auto p = stable_set_polytope(two_odd_holes(2, 2));
    REQUIRE(p.size() == 21);
    const Point target = ones(10, 5);
    bool found = false;
    std::vector<std::size_t> idx(5, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (found)
            return;
        if (depth == 5) {
            Point sum(10, 0);
            for (std::size_t i : idx)
                for (std::size_t k = 0; k < 10; ++k)
                    sum[k] += p.point(i)[k];
            found = sum == Point(10, 1);
            return;
        }
        for (std::size_t i = start; i < p.size(); ++i) {
            idx[depth] = i;
            rec(i, depth + 1);
        }
    };
    rec(0, 0);
    CHECK_FALSE(found);
    CHECK_FALSE(semigroup_membership(target, p).member);
}

TEST_CASE("integer decomposition check") {
    const auto c4 = idp_check(stable_set_polytope(complement_of_cycle(4)), 4);
    CHECK(c4.status == NormalityStatus::normal_up_to);
    CHECK(c4.dmax == 4);

    const auto holes = idp_check(stable_set_polytope(two_odd_holes(2, 2)), 5);
    REQUIRE(holes.status == NormalityStatus::nonnormal);
    CHECK(holes.witness == ones(10, 5));
    CHECK(reproduces(stable_set_polytope(two_odd_holes(2, 2)), holes.certificate, holes.witness));

    for (int d : {1, 3, 6})
        CHECK(idp_check(stable_set_polytope(complete_graph(4)), d).status == NormalityStatus::normal_up_to);
    CHECK(idp_check(stable_set_polytope(complete_graph(4))).dmax == 5);
}

TEST_CASE("integer decomposition check on a non 0/1 configuration") {
    // Empty tetrahedron of volume 2: (1,1,1) is half the sum of its vertices.
    const PointConfiguration reeve(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}}, {});
    const auto r = idp_check(reeve, 3);
    REQUIRE(r.status == NormalityStatus::nonnormal);
    CHECK(r.witness == Point{1, 1, 1, 2});
    CHECK(reproduces(reeve, r.certificate, r.witness));
    CHECK(r.points_per_level.size() >= 1);
    // The unit square is normal.
    const PointConfiguration square(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {});
    CHECK(idp_check(square, 5).status == NormalityStatus::normal_up_to);
}

TEST_CASE("a witness found at some budget persists at larger budgets") {
    const auto p = stable_set_polytope(two_odd_holes(2, 2));
    const auto at5 = idp_check(p, 5);
    const auto at6 = idp_check(p, 6);
    REQUIRE(at5.status == NormalityStatus::nonnormal);
    CHECK(at6.status == NormalityStatus::nonnormal);
    CHECK(at6.witness == at5.witness);
    CHECK(idp_check(p, 4).status == NormalityStatus::normal_up_to);
}

TEST_CASE("proof witnesses reproduce the proof coefficients") {
    struct Case {
        WitnessKind kind;
        SimpleGraph g;
        std::vector<int> first, second;
        int last;
    };
    std::vector<int> c5{1, 2, 3, 4, 5}, c5b{6, 7, 8, 9, 10}, c7{1, 2, 3, 4, 5, 6, 7}, c7b{6, 7, 8, 9, 10, 11, 12};
    const std::vector<Case> cases{
        {WitnessKind::two_antiholes, two_antiholes(5, 5, false), c5, c5b, 5},
        {WitnessKind::hole_antihole, hole_antihole(5, 7), c5, c7b, 5},
        {WitnessKind::shared_vertex_antiholes, two_antiholes(7, 7, true), c7, {1, 8, 9, 10, 11, 12, 13}, 5},
    };
    for (const auto &c : cases) {
        const auto p = stable_set_polytope(c.g);
        const auto w = proof_witness(c.kind, c.g, c.first, c.second);
        CHECK(w.point.back() == c.last);
        REQUIRE(reproduces(p, w.certificate, w.point));
        CHECK(cone_membership(w.point, p).member);
        CHECK_FALSE(semigroup_membership(w.point, p).member);

        // Expected coefficients rebuilt from the stable sets of G.
        const int a = static_cast<int>(c.first.size()) / 2, b = static_cast<int>(c.second.size()) / 2;
        const VertexSet v1 = VertexSet::of(c.first), v2 = VertexSet::of(c.second);
        std::map<std::size_t, Rational> expected;
        Rational rest;
        std::size_t rest_idx = 0;
        const auto sets = stable_sets(c.g);
        for (std::size_t i = 0; i < sets.size(); ++i) {
            const VertexSet w_set = sets[i];
            switch (c.kind) {
            case WitnessKind::two_antiholes:
                if ((w_set - v1).empty() && w_set.size() == a)
                    expected[i] += Rational(1, a);
                if ((w_set - v2).empty() && w_set.size() == b)
                    expected[i] += Rational(1, b);
                rest = Rational(a * b - a - b, a * b);
                break;
            case WitnessKind::hole_antihole:
                if ((w_set - v1).empty() && w_set.size() == 2)
                    expected[i] += Rational(1, 2);
                if ((w_set - v2).empty() && w_set.size() == b)
                    expected[i] += Rational(1, b);
                rest = Rational(b - 2, 2 * b);
                break;
            case WitnessKind::shared_vertex_antiholes: {
                auto qualifies = [&](VertexSet part, int size) {
                    if (!(w_set - part).empty() || w_set.size() != size)
                        return false;
                    // G restricted to the part is the cycle; nb holds the two cycle neighbours of 1.
                    const VertexSet nb = c.g.neighbors(1) & part;
                    return w_set.contains(1) || (nb - w_set).empty();
                };
                if (qualifies(v1, a))
                    expected[i] += Rational(1, a - 1);
                if (qualifies(v2, b))
                    expected[i] += Rational(1, b - 1);
                rest = Rational(1) - Rational(1, a - 1) - Rational(1, b - 1);
                break;
            }
            }
        }
        rest_idx = c.kind == WitnessKind::shared_vertex_antiholes ? 1 : 0; // {1} or the empty set
        if (rest != 0)
            expected[rest_idx] += rest;
        CHECK(nonzero(w.certificate) == expected);
    }
}

TEST_CASE("proof witness preconditions") {
    CHECK_THROWS_AS(proof_witness(WitnessKind::shared_vertex_antiholes, two_antiholes(5, 5, true), {1, 2, 3, 4, 5},
                                  {1, 6, 7, 8, 9}),
                    std::invalid_argument);
    SimpleGraph bridged = two_odd_holes(2, 2);
    bridged.remove_edge(1, 6);
    CHECK_THROWS_AS(proof_witness(WitnessKind::two_antiholes, bridged, {1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}),
                    std::invalid_argument);
    CHECK_THROWS_AS(proof_witness(WitnessKind::hole_antihole, two_odd_holes(2, 2), {1, 2, 3, 4}, {6, 7, 8, 9, 10}),
                    std::invalid_argument);
}

TEST_CASE("face restriction") {
    CHECK(point_set(face_restriction(stable_set_polytope(complete_graph(3)), {3})) ==
          point_set(stable_set_polytope(complete_graph(2))));
    const auto p = stable_set_polytope(cycle_graph(5));
    CHECK(face_restriction(p, {}).points() == p.points());
    CHECK(point_set(face_restriction(stable_set_polytope(two_odd_holes(2, 2)), {6, 7, 8, 9, 10})) ==
          point_set(stable_set_polytope(complement(cycle_graph(5)))));
}

TEST_CASE("faces of stable set polytopes are stable set polytopes of induced subgraphs") {
    std::mt19937_64 rng(31);
    std::bernoulli_distribution coin(0.5);
    for (int n = 2; n <= 6; ++n)
        for_each_labeled_graph(n, [&](const SimpleGraph &g) {
            if (!coin(rng))
                return;
            std::vector<int> zero, keep;
            for (int v = 1; v <= n; ++v)
                (coin(rng) ? zero : keep).push_back(v);
            REQUIRE(point_set(face_restriction(stable_set_polytope(g), zero)) ==
                    point_set(stable_set_polytope(induced_subgraph(g, keep).graph)));
        });
}

TEST_CASE("witness text format") {
    std::ostringstream out;
    write_witness(out, Point{1, 1, 2}, {{0, Rational(1, 2)}, {3, Rational(3)}});
    CHECK(out.str() == "w 2 1 1\nλ 1 1/2\nλ 4 3/1\n");
}

} // TEST_SUITE
