#include "stabletoric/stable_toric.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace stabletoric {

namespace {

void require_alpha2(const SimpleGraph &g, const char *op) {
    if (stability_number(g) != 2)
        throw std::invalid_argument(std::string(op) + ": stability number must be 2");
}

int edge_index(const std::vector<Edge> &edges, int a, int b) {
    const Edge e{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e)
        return -1;
    return static_cast<int>(it - edges.begin());
}

// Edges of gbar between s1 \ s2 and s2 \ s1.
int count_bridges(const SimpleGraph &gbar, VertexSet s1, VertexSet s2) {
    int count = 0;
    for (int i : (s1 - s2).vertices())
        count += (gbar.neighbors(i) & (s2 - s1)).size();
    return count;
}

// Index of every stable set of g in canonical order.
std::map<std::uint64_t, std::size_t> stable_index(const SimpleGraph &g) {
    std::map<std::uint64_t, std::size_t> index;
    const auto sets = stable_sets(g);
    for (std::size_t i = 0; i < sets.size(); ++i)
        index.emplace(sets[i].bits(), i);
    return index;
}

} // namespace

Binomial walk_binomial(const Walk &w, const LoopGraph &h) {
    if (w.vertices.size() < 2 || !w.closed() || !w.even())
        throw std::invalid_argument("walk_binomial: walk must be closed and of even length");
    const auto edges = h.edges_and_loops();
    Exponent odd(edges.size(), 0);
    Exponent even(edges.size(), 0);
    for (std::size_t k = 0; k + 1 < w.vertices.size(); ++k) {
        const int a = w.vertices[k];
        const int b = w.vertices[k + 1];
        if (a < 1 || b < 1 || a > h.order() || b > h.order() || !h.adjacent(a, b))
            throw std::invalid_argument("walk_binomial: step is not an edge of the graph");
        const int idx = edge_index(edges, a, b);
        (k % 2 == 0 ? odd : even)[static_cast<std::size_t>(idx)] += 1;
    }
    return {std::move(odd), std::move(even)};
}

std::vector<Binomial> edge_toric_generators(const LoopGraph &h, int len_bound) {
    const auto edges = h.edges_and_loops();
    const int n = h.order();
    const MonomialOrder order(OrderKind::grevlex, edges.size());
    std::set<std::vector<int>> found;

    // States (current vertex, signed edge counts) per start vertex; the
    // start is the smallest vertex of the walk.
    for (int s = 1; s <= n; ++s) {
        struct State {
            int at;
            std::vector<int> u;
            int length;
        };
        std::set<std::pair<int, std::vector<int>>> seen;
        std::deque<State> queue;
        queue.push_back({s, std::vector<int>(edges.size(), 0), 0});
        seen.emplace(s, queue.front().u);
        while (!queue.empty()) {
            State cur = std::move(queue.front());
            queue.pop_front();
            if (cur.length >= len_bound)
                continue;
            const int sign = cur.length % 2 == 0 ? 1 : -1;
            std::vector<int> next_vertices;
            for (int v = s; v <= n; ++v)
                if (h.adjacent(cur.at, v))
                    next_vertices.push_back(v);
            for (int v : next_vertices) {
                const auto idx = static_cast<std::size_t>(edge_index(edges, cur.at, v));
                std::vector<int> u = cur.u;
                u[idx] += sign;
                if (std::abs(u[idx]) > 2)
                    continue;
                const int length = cur.length + 1;
                if (v == s && length % 2 == 0 && std::any_of(u.begin(), u.end(), [](int x) { return x != 0; }))
                    found.insert(Binomial::from_vector(u).oriented(order).vector());
                if (seen.emplace(v, u).second)
                    queue.push_back({v, std::move(u), length});
            }
        }
    }
    std::vector<Binomial> out;
    for (const auto &u : found)
        out.push_back(Binomial::from_vector(u));
    std::sort(out.begin(), out.end(), [&](const Binomial &a, const Binomial &b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a.vector() < b.vector();
    });
    return out;
}

std::vector<std::string> stable_set_variable_names(const SimpleGraph &g) {
    std::vector<std::string> names;
    for (auto w : stable_sets(g))
        names.push_back("y" + w.to_string());
    return names;
}

std::vector<Binomial> alpha2_generators(const SimpleGraph &g, int len_bound) {
    require_alpha2(g, "alpha2_generators");
    const int n = g.order();
    const SimpleGraph gbar = complement(g);
    const auto index = stable_index(g);
    const std::size_t m = index.size();
    const MonomialOrder order(OrderKind::grevlex, m);
    auto var = [&](std::vector<int> vs) { return index.at(VertexSet::of(vs).bits()); };

    std::vector<Binomial> out;
    std::set<std::vector<int>> seen;
    auto emit = [&](Exponent lead, Exponent trail) {
        Binomial b = Binomial(std::move(lead), std::move(trail)).oriented(order);
        if (!b.zero() && seen.insert(b.vector()).second)
            out.push_back(std::move(b));
    };

    // Complement edges are the stable pairs, in the same order.
    const auto gbar_edges = gbar.edges();
    for (const auto &b : edge_toric_generators(LoopGraph(gbar, VertexSet()), len_bound)) {
        Exponent lead(m, 0);
        Exponent trail(m, 0);
        for (std::size_t k = 0; k < gbar_edges.size(); ++k) {
            const auto v = var({gbar_edges[k].first, gbar_edges[k].second});
            lead[v] = b.lead()[k];
            trail[v] = b.trail()[k];
        }
        emit(std::move(lead), std::move(trail));
    }
    for (int j = 1; j <= n; ++j)
        for (int i : gbar.neighbors(j).vertices())
            for (int k : gbar.neighbors(j).vertices()) {
                if (i >= k)
                    continue;
                Exponent lead(m, 0);
                Exponent trail(m, 0);
                lead[var({i, j})] += 1;
                lead[var({k})] += 1;
                trail[var({j, k})] += 1;
                trail[var({i})] += 1;
                emit(std::move(lead), std::move(trail));
            }
    for (auto [i, j] : gbar_edges) {
        Exponent lead(m, 0);
        Exponent trail(m, 0);
        lead[var({i, j})] += 1;
        lead[var({})] += 1;
        trail[var({i})] += 1;
        trail[var({j})] += 1;
        emit(std::move(lead), std::move(trail));
    }
    return out;
}

int mu_bipartite_complement(const SimpleGraph &g) {
    const SimpleGraph gbar = complement(g);
    if (!bipartite_check(gbar).bipartite)
        throw std::invalid_argument("mu_bipartite_complement: complement is not bipartite");
    if (gbar.edge_count() == 0)
        return 0;
    std::size_t longest = 0;
    for (const auto &c : induced_cycles(gbar, 4, Parity::even))
        longest = std::max(longest, c.size());
    return longest > 0 ? static_cast<int>(longest / 2) : 2;
}

Alpha2Verdict normality_verdict_alpha2(const SimpleGraph &g) {
    require_alpha2(g, "normality_verdict_alpha2");
    auto occ = odd_cycle_condition(complement(g));
    Alpha2Verdict v;
    v.normal = occ.holds;
    if (occ.violating_pair)
        v.violating_pair = CyclePair{occ.violating_pair->first, occ.violating_pair->second};
    return v;
}

std::vector<Violation> normality_necessary_audit(const SimpleGraph &g) {
    const SimpleGraph gbar = complement(g);
    const auto holes = induced_cycles(gbar, 5, Parity::odd);
    const auto antiholes = induced_cycles(g, 5, Parity::odd);
    std::vector<Violation> out;
    std::set<std::pair<std::uint64_t, std::uint64_t>> reported;
    auto report = [&](const char *kind, const std::vector<int> &a, const std::vector<int> &b) {
        const auto sa = VertexSet::of(a).bits();
        const auto sb = VertexSet::of(b).bits();
        if (reported.emplace(std::min(sa, sb), std::max(sa, sb)).second)
            out.push_back({kind, a, b, 0});
    };
    auto scan = [&](const char *kind, const std::vector<std::vector<int>> &xs, const std::vector<std::vector<int>> &ys,
                    bool same, int shared, std::size_t min_len) {
        for (std::size_t a = 0; a < xs.size(); ++a)
            for (std::size_t b = same ? a + 1 : 0; b < ys.size(); ++b) {
                if (xs[a].size() < min_len || ys[b].size() < min_len)
                    continue;
                const VertexSet sa = VertexSet::of(xs[a]);
                const VertexSet sb = VertexSet::of(ys[b]);
                if ((sa & sb).size() != shared)
                    continue;
                if (count_bridges(gbar, sa, sb) == 0)
                    report(kind, xs[a], ys[b]);
            }
    };
    scan("odd holes", holes, holes, true, 0, 5);
    scan("odd antiholes", antiholes, antiholes, true, 0, 5);
    scan("odd antiholes sharing a vertex", antiholes, antiholes, true, 1, 7);
    scan("odd hole and odd antihole", holes, antiholes, false, 0, 5);
    return out;
}

std::vector<Violation> quadratic_necessary_audit(const SimpleGraph &g) {
    const SimpleGraph gbar = complement(g);
    std::vector<Violation> out;
    for (const auto &c : induced_cycles(gbar, 6, Parity::even))
        out.push_back({"chordless even cycle", c, {}, 0});
    const auto holes = induced_cycles(gbar, 5, Parity::odd);
    for (std::size_t a = 0; a < holes.size(); ++a)
        for (std::size_t b = a + 1; b < holes.size(); ++b) {
            const VertexSet sa = VertexSet::of(holes[a]);
            const VertexSet sb = VertexSet::of(holes[b]);
            const int shared = (sa & sb).size();
            const int bridges = count_bridges(gbar, sa, sb);
            if (shared == 1 && bridges == 0)
                out.push_back({"odd holes sharing a vertex", holes[a], holes[b], 0});
            // With no bridge at all the two holes lie in different components
            // and the ideal can still be generated by quadrics.
            if (shared == 0 && bridges == 1)
                out.push_back({"odd holes with one bridge", holes[a], holes[b], 1});
        }
    return out;
}

Point odd_hole_pair_witness(int n, const CyclePair &pair) {
    Point w(static_cast<std::size_t>(n) + 1, 0);
    for (int v : pair.first)
        w[v - 1] = 1;
    for (int v : pair.second)
        w[v - 1] = 1;
    const auto k = (pair.first.size() - 1) / 2;
    const auto l = (pair.second.size() - 1) / 2;
    w[static_cast<std::size_t>(n)] = static_cast<int>(k + l + 1);
    return w;
}

NoQuadraticCertificate no_quadratic_gb_certificate(const SimpleGraph &g, int dmax) {
    NoQuadraticCertificate out;
    const auto p = stable_set_polytope(g);
    if (stability_number(g) == 2) {
        const auto verdict = normality_verdict_alpha2(g);
        if (verdict.normal) {
            out.reason = "normal by the odd cycle condition";
            return out;
        }
        const Point w = odd_hole_pair_witness(g.order(), *verdict.violating_pair);
        auto cone = cone_membership(w, p);
        if (cone.member && !semigroup_membership(w, p).member) {
            out.certified = true;
            out.route = "odd cycle condition";
            out.witness = w;
            out.certificate = std::move(cone.certificate);
            return out;
        }
    }
    const auto verdict = idp_check(p, dmax);
    if (verdict.status == NormalityStatus::nonnormal) {
        out.certified = true;
        out.route = "idp";
        out.witness = verdict.witness;
        out.certificate = verdict.certificate;
    } else {
        out.reason = "no nonnormality witness up to degree " + std::to_string(dmax);
    }
    return out;
}

bool keylemma_check(const SimpleGraph &g) {
    require_alpha2(g, "keylemma_check");
    const int n = g.order();
    const auto index = stable_index(g);
    const auto star = star_graph(complement(g));
    const auto star_edges = star.edges_and_loops();
    if (star_edges.size() != index.size())
        return false;
    // Star variable k -> stable set variable.
    std::vector<std::size_t> to_stable(star_edges.size());
    for (std::size_t k = 0; k < star_edges.size(); ++k) {
        auto [i, j] = star_edges[k];
        VertexSet w;
        if (i != n + 1)
            w.insert(i);
        if (j != n + 1)
            w.insert(j);
        auto it = index.find(w.bits());
        if (it == index.end())
            return false;
        to_stable[k] = it->second;
    }
    const auto lhs = toric_ideal(stable_set_polytope(g));
    std::vector<Binomial> rhs;
    for (const auto &b : toric_ideal(edge_polytope(star))) {
        Exponent lead(index.size(), 0);
        Exponent trail(index.size(), 0);
        for (std::size_t k = 0; k < star_edges.size(); ++k) {
            lead[to_stable[k]] = b.lead()[k];
            trail[to_stable[k]] = b.trail()[k];
        }
        rhs.emplace_back(std::move(lead), std::move(trail));
    }
    return ideal_equal(lhs, rhs, MonomialOrder(OrderKind::grevlex, index.size()));
}

std::string to_string(NormalityKind kind) {
    switch (kind) {
    case NormalityKind::normal:
        return "normal";
    case NormalityKind::normal_up_to:
        return "normal-up-to";
    case NormalityKind::nonnormal:
        return "nonnormal";
    }
    return "?";
}

namespace {

NormalityVerdict idp_verdict(const SimpleGraph &g, int dmax) {
    NormalityVerdict v;
    v.route = "idp";
    v.dmax = dmax;
    const auto result = idp_check(stable_set_polytope(g), dmax);
    if (result.status == NormalityStatus::nonnormal) {
        v.kind = NormalityKind::nonnormal;
        v.witness = result.witness;
    }
    return v;
}

} // namespace

NormalityVerdict normality_verdict(const SimpleGraph &g, int dmax) {
    if (stability_number(g) == 2) {
        NormalityVerdict v;
        v.route = "theorem";
        const auto a2 = normality_verdict_alpha2(g);
        v.kind = a2.normal ? NormalityKind::normal : NormalityKind::nonnormal;
        if (!a2.normal)
            v.witness = odd_hole_pair_witness(g.order(), *a2.violating_pair);
        return v;
    }
    if (perfect_check(g).perfect) {
        NormalityVerdict v;
        v.route = "perfect";
        v.kind = NormalityKind::normal;
        return v;
    }
    return idp_verdict(g, dmax);
}

CliqueSumCheck clique_sum_normality_check(const SimpleGraph &g1, const SimpleGraph &g2,
                                          const std::vector<std::pair<int, int>> &identification, int dmax) {
    CliqueSumCheck out;
    out.sum = clique_sum(g1, g2, identification);
    out.first = normality_verdict(g1, dmax);
    out.second = normality_verdict(g2, dmax);
    out.glued = idp_verdict(out.sum, dmax);
    const bool part_bad =
        out.first.kind == NormalityKind::nonnormal || out.second.kind == NormalityKind::nonnormal;
    const bool sum_bad = out.glued.kind == NormalityKind::nonnormal;
    out.held = part_bad == sum_bad;
    if (sum_bad && out.first.kind == NormalityKind::normal && out.second.kind == NormalityKind::normal)
        out.confirmed_counterexample = true;
    // A part's witness lives on a face of the glued polytope at the same
    // degree, so it must show up within the same budget.
    auto within = [&](const NormalityVerdict &v) {
        return v.kind == NormalityKind::nonnormal && !v.witness.empty() && v.witness.back() <= dmax;
    };
    if (!sum_bad && (within(out.first) || within(out.second)))
        out.confirmed_counterexample = true;
    return out;
}

// --------------------------------------------------------------- report

namespace {

nlohmann::ordered_json violations_json(const char *audit, const std::vector<Violation> &vs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &v : vs) {
        nlohmann::ordered_json j;
        j["audit"] = audit;
        j["kind"] = v.kind;
        j["first"] = v.first;
        if (!v.second.empty())
            j["second"] = v.second;
        j["bridges"] = v.bridges;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string unimodular_string(UnimodularStatus s) {
    switch (s) {
    case UnimodularStatus::unimodular:
        return "true";
    case UnimodularStatus::not_unimodular:
        return "false";
    case UnimodularStatus::infeasible:
        return "skipped";
    }
    return "?";
}

} // namespace

nlohmann::ordered_json analyze(const SimpleGraph &g, const AnalysisOptions &opts) {
    using json = nlohmann::ordered_json;
    AnalysisOptions options = opts;
    if (options.dmax == 0)
        options.dmax = g.order() + 1;
    json r;
    r["version"] = kVersion;
    const SimpleGraph gbar = complement(g);
    const int alpha = stability_number(g);
    const auto perfect = perfect_check(g);
    r["n"] = g.order();
    json edges = json::array();
    for (auto [i, j] : g.edges())
        edges.push_back({i, j});
    r["edges"] = edges;
    r["alpha"] = alpha;
    r["perfect"] = perfect.perfect;
    if (!perfect.perfect)
        r["perfect_certificate"] = {{"kind", perfect.certificate_kind}, {"cycle", perfect.certificate}};
    r["chordal"] = is_chordal(g);
    r["complement_bipartite"] = bipartite_check(gbar).bipartite;
    r["complement"] = {{"odd_holes", induced_cycles(gbar, 5, Parity::odd)},
                       {"odd_antiholes", induced_cycles(g, 5, Parity::odd)}};

    const auto p = stable_set_polytope(g);
    const auto names = stable_set_variable_names(g);
    r["stable_sets"] = p.size();

    const auto uni = is_unimodular(p);
    r["unimodular"] = unimodular_string(uni.status);
    if (uni.status == UnimodularStatus::not_unimodular)
        r["unimodular_refutation"] = {{"columns", uni.refuting_labels}, {"minor", uni.refuting_value.get_str()}};

    const auto normal = normality_verdict(g, options.dmax);
    json nj;
    nj["status"] = to_string(normal.kind);
    nj["route"] = normal.route;
    if (normal.kind == NormalityKind::normal_up_to || normal.route == "idp")
        nj["dmax"] = options.dmax;
    else
        nj["dmax"] = nullptr;
    nj["witness"] = normal.witness.empty() ? json(nullptr) : json(normal.witness);
    r["normal"] = nj;

    const auto occ = odd_cycle_condition(gbar);
    json oj;
    oj["holds"] = occ.holds;
    if (occ.violating_pair)
        oj["pair"] = {occ.violating_pair->first, occ.violating_pair->second};
    r["odd_cycle_condition"] = oj;

    try {
        const auto ideal = toric_ideal(p);
        const MonomialOrder grevlex(OrderKind::grevlex, p.size());
        const auto mg = minimal_generators(ideal, grevlex);
        r["mu"] = mg.mu;
        json gens = json::array();
        for (const auto &b : mg.generators)
            gens.push_back(b.to_string(names));
        r["generators"] = gens;

        if (alpha == 2) {
            const int base = options.walk_bound > 0 ? options.walk_bound
                                                    : std::max(2, 2 * static_cast<int>(gbar.edge_count()));
            json th;
            th["verified"] = false;
            for (int bound = base; bound <= 4 * base; bound *= 2) {
                if (ideal_equal(alpha2_generators(g, bound), ideal, grevlex)) {
                    th["verified"] = true;
                    th["walk_bound"] = bound;
                    break;
                }
            }
            r["alpha2_generators"] = th;
        } else {
            r["alpha2_generators"] = {{"skipped", "stability number is not 2"}};
        }

        const MonomialOrder order = options.order.value_or(grevlex);
        if (order.variables() != p.size())
            throw std::invalid_argument("order has " + std::to_string(order.variables()) + " variables, expected " +
                                        std::to_string(p.size()));
        BuchbergerOptions bo;
        bo.cancel_common_factors = true;
        const auto gb = buchberger(ideal, order, bo);
        const auto in = initial_ideal(gb);
        r["groebner"] = {{"order", order.describe()},
                         {"size", gb.elements.size()},
                         {"maxdeg", gb.max_degree()},
                         {"squarefree", in.squarefree}};

        json q;
        std::optional<NoQuadraticCertificate> cert;
        if (mg.mu <= 2) {
            QuadraticSearchOptions qo;
            qo.toric = true;
            qo.variables = p.size();
            const auto search = quadratic_gb_search(ideal, options.budget, options.seed, qo);
            if (search.found) {
                q["status"] = "found";
                q["order"] = search.order->describe();
            }
        }
        if (!q.contains("status")) {
            cert = no_quadratic_gb_certificate(g, options.dmax);
            if (cert->certified) {
                q["status"] = "certified-impossible";
                q["route"] = cert->route;
                q["witness"] = cert->witness;
            } else {
                q["status"] = "unknown";
                q["reason"] = mg.mu > 2 ? "generators of degree above 2 are required" : cert->reason;
            }
        }
        r["quadratic_gb"] = q;
    } catch (const ResourceError &e) {
        r["ideal_skipped"] = e.what();
        r["mu"] = nullptr;
        r["generators"] = json::array();
        r["alpha2_generators"] = {{"skipped", e.what()}};
        r["groebner"] = {{"skipped", e.what()}};
        r["quadratic_gb"] = {{"status", "unknown"}, {"reason", e.what()}};
    }

    json audits = violations_json("normality", normality_necessary_audit(g));
    for (auto &v : violations_json("quadratic", quadratic_necessary_audit(g)))
        audits.push_back(std::move(v));
    r["audits"] = audits;
    return r;
}

} // namespace stabletoric
