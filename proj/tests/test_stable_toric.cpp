#include <doctest.h>

#include <set>

#include "stabletoric/enumerate.hpp"
#include "stabletoric/families.hpp"
#include "stabletoric/stable_toric.hpp"

using namespace stabletoric;

namespace {

bool same_up_to_sign(const Binomial &a, const Binomial &b) {
    return a == b || (a.lead() == b.trail() && a.trail() == b.lead());
}

bool contains(const std::vector<Binomial> &list, const Binomial &b) {
    for (const auto &x : list)
        if (same_up_to_sign(x, b))
            return true;
    return false;
}

std::size_t var(const SimpleGraph &g, std::vector<int> w) {
    const auto sets = stable_sets(g);
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i] == VertexSet::of(w))
            return i;
    FAIL("not a stable set");
    return 0;
}

// y_a y_b - y_c y_d over the stable set variables of g.
Binomial quadric(const SimpleGraph &g, std::vector<int> a, std::vector<int> b, std::vector<int> c,
                 std::vector<int> d) {
    std::vector<int> u(stable_sets(g).size(), 0);
    ++u[var(g, a)];
    ++u[var(g, b)];
    --u[var(g, c)];
    --u[var(g, d)];
    return Binomial::from_vector(u);
}

int mu_of(const SimpleGraph &g) {
    const auto p = stable_set_polytope(g);
    return minimal_generators(toric_ideal(p), MonomialOrder(OrderKind::grevlex, p.size())).mu;
}

SimpleGraph with_bridges(SimpleGraph g, const std::vector<Edge> &bridges) {
    for (auto [i, j] : bridges)
        g.remove_edge(i, j);
    return g;
}

std::set<std::uint64_t> vertex_sets(const std::vector<int> &a, const std::vector<int> &b) {
    return {VertexSet::of(a).bits(), VertexSet::of(b).bits()};
}

} // namespace

TEST_SUITE("stable toric") {

TEST_CASE("walk binomials") {
    const LoopGraph c4(cycle_graph(4), VertexSet());
    // Generators (1,2),(1,4),(2,3),(3,4); the walk uses (1,2),(2,3),(3,4),(1,4).
    CHECK(walk_binomial({{1, 2, 3, 4, 1}}, c4) == Binomial(Exponent{1, 0, 0, 1}, Exponent{0, 1, 1, 0}));
    CHECK(walk_binomial({{1, 2, 3, 2, 1}}, LoopGraph(cycle_graph(4), VertexSet())).zero());

    // Complement edge {1,2}, hub 3 with a loop: (12)(33) - (23)(13).
    const LoopGraph star = star_graph(SimpleGraph(2, {{1, 2}}));
    CHECK(walk_binomial({{1, 2, 3, 3, 1}}, star) == Binomial(Exponent{1, 0, 0, 1}, Exponent{0, 1, 1, 0}));

    const LoopGraph tri(complete_graph(3), VertexSet());
    CHECK_THROWS_AS(walk_binomial({{1, 2, 3, 1}}, tri), std::invalid_argument);
    CHECK_THROWS_AS(walk_binomial({{1, 2, 3}}, tri), std::invalid_argument);
    CHECK_THROWS_AS(walk_binomial({{1, 3, 2, 4, 1}}, c4), std::invalid_argument);
    CHECK_THROWS_AS(walk_binomial({{1, 1, 2, 1}}, c4), std::invalid_argument);
}

TEST_CASE("edge ideal generators from walks") {
    const LoopGraph c5(cycle_graph(5), VertexSet());
    for (int bound : {4, 10, 20})
        CHECK(edge_toric_generators(c5, bound).empty());
    CHECK(toric_ideal(edge_polytope(c5)).empty());

    const LoopGraph c4(cycle_graph(4), VertexSet());
    const auto gens = edge_toric_generators(c4, 4);
    REQUIRE(gens.size() == 1);
    CHECK(same_up_to_sign(gens[0], Binomial::from_vector({1, -1, -1, 1})));
    CHECK(ideal_equal(gens, toric_ideal(edge_polytope(c4)), MonomialOrder(OrderKind::grevlex, 4)));

    const LoopGraph tree(SimpleGraph(5, {{1, 2}, {2, 3}, {2, 4}, {4, 5}}), VertexSet());
    CHECK(edge_toric_generators(tree, 8).empty());
}

TEST_CASE("walk binomials generate edge ideals of small loop graphs") {
    for (int n = 2; n <= 5; ++n)
        for (const auto &g : isomorphism_classes(n, [](const SimpleGraph &) { return true; })) {
            if (!is_connected(g))
                continue;
            for (int loop = 0; loop <= 1; ++loop) {
                VertexSet loops;
                if (loop)
                    loops.insert(1);
                const LoopGraph h(g, loops);
                const auto p = edge_polytope(h);
                const auto ideal = toric_ideal(p);
                const MonomialOrder o(OrderKind::grevlex, p.size());
                const int base = 2 * static_cast<int>(p.size());
                bool equal = false;
                for (int bound = base; bound <= 4 * base && !equal; bound *= 2) {
                    const auto gens = edge_toric_generators(h, bound);
                    for (const auto &b : gens)
                        REQUIRE(ideal_equal(ideal, [&] {
                            auto both = ideal;
                            both.push_back(b);
                            return both;
                        }(), o));
                    equal = ideal_equal(gens, ideal, o);
                }
                REQUIRE(equal);
            }
        }
}

TEST_CASE("generators for stability number 2") {
    const SimpleGraph k3e = complement(SimpleGraph(3, {{1, 2}}));
    const auto one = alpha2_generators(k3e, 2);
    REQUIRE(one.size() == 1);
    CHECK(same_up_to_sign(one[0], quadric(k3e, {1, 2}, {}, {1}, {2})));

    const SimpleGraph path = complement(SimpleGraph(3, {{1, 2}, {2, 3}}));
    const auto gens = alpha2_generators(path, 4);
    CHECK(gens.size() == 3);
    CHECK(contains(gens, quadric(path, {1, 2}, {}, {1}, {2})));
    CHECK(contains(gens, quadric(path, {2, 3}, {}, {2}, {3})));
    CHECK(contains(gens, quadric(path, {1, 2}, {3}, {2, 3}, {1})));

    const SimpleGraph holes = two_odd_holes(2, 2);
    const auto hg = alpha2_generators(holes, 20);
    for (const auto &b : hg)
        CHECK(b.degree() == 2);
    CHECK(edge_toric_generators(LoopGraph(complement(holes), VertexSet()), 20).empty());
    const auto p = stable_set_polytope(holes);
    CHECK(ideal_equal(hg, toric_ideal(p), MonomialOrder(OrderKind::grevlex, p.size())));

    CHECK(stable_set_variable_names(k3e) == std::vector<std::string>{"y{}", "y{1}", "y{2}", "y{3}", "y{1,2}"});
}

TEST_CASE("generator degree formula for bipartite complements") {
    CHECK(mu_bipartite_complement(complete_graph(5)) == 0);
    CHECK(mu_bipartite_complement(complement_of_cycle(8)) == 4);
    CHECK(mu_bipartite_complement(complement(SimpleGraph(5, {{1, 2}, {2, 3}, {2, 4}, {4, 5}}))) == 2);
    CHECK_THROWS_AS(mu_bipartite_complement(complement_of_cycle(5)), std::invalid_argument);
}

TEST_CASE("bipartite complements: formula, computed degree and quadratic bases") {
    for (int n = 2; n <= 6; ++n)
        for (const auto &gbar : isomorphism_classes(n, [](const SimpleGraph &h) { return bipartite_check(h).bipartite; })) {
            const SimpleGraph g = complement(gbar);
            const int mu = mu_of(g);
            REQUIRE(mu == mu_bipartite_complement(g));
            bool long_hole = false;
            for (const auto &c : induced_cycles(gbar, 4, Parity::even))
                long_hole = long_hole || c.size() > 4;
            REQUIRE((mu <= 2) == !long_hole);
            const auto p = stable_set_polytope(g);
            QuadraticSearchOptions qo;
            qo.toric = true;
            qo.variables = p.size();
            REQUIRE(quadratic_gb_search(toric_ideal(p), 8, 1, qo).found == (mu <= 2));
        }
}

TEST_CASE("normality for stability number 2") {
    CHECK(normality_verdict_alpha2(complement_of_cycle(5)).normal);
    const auto holes = normality_verdict_alpha2(two_odd_holes(2, 2));
    REQUIRE_FALSE(holes.normal);
    CHECK(vertex_sets(holes.violating_pair->first, holes.violating_pair->second) ==
          vertex_sets({1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}));
    CHECK(normality_verdict_alpha2(with_bridges(two_odd_holes(2, 2), {{1, 6}})).normal);
    CHECK_THROWS_AS(normality_verdict_alpha2(complete_graph(3)), std::invalid_argument);
}

TEST_CASE("one bridge between two 5-holes: no witness up to degree 8") {
    const SimpleGraph g = with_bridges(two_odd_holes(2, 2), {{1, 6}});
    CHECK(idp_check(stable_set_polytope(g), 8).status == NormalityStatus::normal_up_to);
}

TEST_CASE("normality audit") {
    const auto holes = normality_necessary_audit(two_odd_holes(2, 2));
    REQUIRE(holes.size() == 1);
    CHECK(holes[0].kind == "odd holes");
    CHECK(holes[0].bridges == 0);

    const auto anti = normality_necessary_audit(two_antiholes(7, 7, false));
    REQUIRE(anti.size() == 1);
    CHECK(anti[0].kind == "odd antiholes");

    const auto shared = normality_necessary_audit(two_antiholes(7, 7, true));
    REQUIRE(shared.size() == 1);
    CHECK(shared[0].kind == "odd antiholes sharing a vertex");

    // C5 is its own complement, so next to C7 it also counts as an antihole.
    const auto five = normality_necessary_audit(hole_antihole(5, 7));
    REQUIRE(five.size() == 1);
    CHECK(five[0].kind == "odd antiholes");
    const auto mixed = normality_necessary_audit(hole_antihole(7, 7));
    REQUIRE(mixed.size() == 1);
    CHECK(mixed[0].kind == "odd hole and odd antihole");

    CHECK(normality_necessary_audit(with_bridges(two_odd_holes(2, 2), {{1, 6}})).empty());
}

TEST_CASE("perfect graphs pass the normality audit") {
    for (int n = 1; n <= 6; ++n)
        for (const auto &g : isomorphism_classes(n, [](const SimpleGraph &h) { return perfect_check(h).perfect; }))
            REQUIRE(normality_necessary_audit(g).empty());
}

TEST_CASE("quadratic generation audit") {
    const auto c6 = quadratic_necessary_audit(complement_of_cycle(6));
    REQUIRE(c6.size() == 1);
    CHECK(c6[0].kind == "chordless even cycle");
    CHECK(mu_of(complement_of_cycle(6)) == 3);
    CHECK(quadratic_necessary_audit(complement_of_cycle(4)).empty());

    // Disjoint holes: nothing to report, and the ideal is quadratic.
    CHECK(quadratic_necessary_audit(two_odd_holes(2, 2)).empty());
    CHECK(mu_of(two_odd_holes(2, 2)) == 2);

    // A single bridge is reported and the ideal needs higher degrees.
    const SimpleGraph one = with_bridges(two_odd_holes(2, 2), {{1, 6}});
    const auto v = quadratic_necessary_audit(one);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == "odd holes with one bridge");
    CHECK(v[0].bridges == 1);
    CHECK(mu_of(one) > 2);

    // Two bridges: condition satisfied. Bridges at a common vertex close a
    // triangle and give a quadratic ideal; parallel ones keep stability
    // number 2 and still need degree 5.
    const SimpleGraph fan = with_bridges(two_odd_holes(2, 2), {{1, 6}, {1, 7}});
    CHECK(quadratic_necessary_audit(fan).empty());
    CHECK(mu_of(fan) == 2);
    const SimpleGraph parallel = with_bridges(two_odd_holes(2, 2), {{1, 6}, {2, 7}});
    CHECK(quadratic_necessary_audit(parallel).empty());
    CHECK(mu_of(parallel) == 5);

    // Two holes sharing one vertex.
    SimpleGraph bowtie = complement(clique_sum(cycle_graph(5), cycle_graph(5), {{1, 1}}));
    const auto s = quadratic_necessary_audit(bowtie);
    REQUIRE(s.size() == 1);
    CHECK(s[0].kind == "odd holes sharing a vertex");
}

TEST_CASE("quadratic audit is consistent with computed generator degrees") {
    for (int n = 2; n <= 6; ++n)
        for (const auto &g : isomorphism_classes(n, [](const SimpleGraph &) { return true; }))
            if (!quadratic_necessary_audit(g).empty())
                REQUIRE(mu_of(g) > 2);
}

TEST_CASE("no quadratic Groebner basis certificates") {
    const auto holes = no_quadratic_gb_certificate(two_odd_holes(2, 2), 5);
    REQUIRE(holes.certified);
    CHECK(holes.route == "odd cycle condition");
    Point expected(10, 1);
    expected.push_back(5);
    CHECK(holes.witness == expected);
    const auto p = stable_set_polytope(two_odd_holes(2, 2));
    CHECK(cone_membership(holes.witness, p).member);
    CHECK_FALSE(semigroup_membership(holes.witness, p).member);

    const auto perfect = no_quadratic_gb_certificate(complement_of_cycle(4), 5);
    CHECK_FALSE(perfect.certified);
    CHECK_FALSE(perfect.reason.empty());
    const auto c7 = no_quadratic_gb_certificate(complement_of_cycle(7), 5);
    CHECK_FALSE(c7.certified);
    CHECK_FALSE(c7.reason.empty());

    const auto idp = no_quadratic_gb_certificate(hole_antihole(5, 7), 5);
    CHECK(idp.certified);
    CHECK(idp.route == "idp");

    CHECK(odd_hole_pair_witness(10, {{1, 2, 3, 4, 5}, {6, 7, 8, 9, 10}}) == expected);
    Point wide(12, 1);
    wide.push_back(6);
    CHECK(odd_hole_pair_witness(12, {{1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11, 12}}) == wide);
}

TEST_CASE("stable set ideal equals the edge ideal of the augmented complement") {
    CHECK(keylemma_check(kn_minus_edge(4)));
    CHECK(keylemma_check(complement_of_cycle(5)));
    CHECK(keylemma_check(complement_of_cycle(4)));
    CHECK_THROWS_AS(keylemma_check(complete_graph(4)), std::invalid_argument);
}

TEST_CASE("normality verdicts") {
    CHECK(to_string(NormalityKind::normal_up_to) == "normal-up-to");
    const auto perfect = normality_verdict(complete_graph(4), 5);
    CHECK(perfect.kind == NormalityKind::normal);
    CHECK(perfect.route == "perfect");
    const auto theorem = normality_verdict(two_odd_holes(2, 2), 5);
    CHECK(theorem.kind == NormalityKind::nonnormal);
    CHECK(theorem.route == "theorem");
    const auto idp = normality_verdict(hole_antihole(5, 7), 5);
    CHECK(idp.kind == NormalityKind::nonnormal);
    CHECK(idp.route == "idp");
}

TEST_CASE("clique sums and normality") {
    const auto perfect = clique_sum_normality_check(kn_minus_edge(4), complement_of_cycle(4), {{1, 1}, {3, 3}}, 4);
    CHECK(perfect.first.kind == NormalityKind::normal);
    CHECK(perfect.second.kind == NormalityKind::normal);
    CHECK(perfect.glued.kind == NormalityKind::normal_up_to);
    CHECK(perfect.held);

    const auto holes = clique_sum_normality_check(two_odd_holes(2, 2), complete_graph(2), {{1, 1}, {2, 3}}, 5);
    CHECK(holes.first.kind == NormalityKind::nonnormal);
    CHECK(holes.glued.kind == NormalityKind::nonnormal);
    CHECK(holes.held);
    CHECK_FALSE(holes.confirmed_counterexample);

    const auto apart = clique_sum_normality_check(complement_of_cycle(5), complete_graph(2), {}, 4);
    CHECK(apart.sum.order() == 7);
    CHECK(apart.held);
}

TEST_CASE("analysis reports") {
    AnalysisOptions options;
    const auto holes = analyze(two_odd_holes(2, 2), options);
    CHECK(holes["version"] == kVersion);
    CHECK(holes["mu"] == 2);
    CHECK(holes["normal"]["status"] == "nonnormal");
    CHECK(holes["quadratic_gb"]["status"] == "certified-impossible");
    CHECK(holes["alpha2_generators"]["verified"] == true);
    CHECK(holes["unimodular"] == "false");

    const auto c6 = analyze(complement_of_cycle(6), options);
    CHECK(c6["mu"] == 3);
    CHECK(c6["unimodular"] == "true");
    CHECK(c6["quadratic_gb"]["status"] == "unknown");

    const auto k5 = analyze(complete_graph(5), options);
    CHECK(k5["mu"] == 0);
    CHECK(k5["stable_sets"] == 6);
    CHECK(k5["normal"]["status"] == "normal");
    CHECK(k5["quadratic_gb"]["status"] == "found");
    CHECK(k5["alpha2_generators"].contains("skipped"));

    options.order = MonomialOrder(OrderKind::grevlex, 3);
    CHECK_THROWS_AS(analyze(complete_graph(5), options), std::invalid_argument);
}

TEST_CASE("analysis is deterministic") {
    AnalysisOptions options;
    options.seed = 42;
    for (const auto &g : {two_odd_holes(2, 2), complement_of_cycle(6), random_alpha2(6, 0.5, 3), cycle_graph(7)})
        CHECK(analyze(g, options).dump() == analyze(g, options).dump());
}

} // TEST_SUITE
