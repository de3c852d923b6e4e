#include "stabletoric/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "stabletoric/enumerate.hpp"
#include "stabletoric/families.hpp"
#include "stabletoric/stable_toric.hpp"

namespace stabletoric {

SuiteParams::SuiteParams(const std::vector<std::string> &tokens) {
    for (const auto &t : tokens) {
        const auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("suite parameter must read key=value: " + t);
        values_[t.substr(0, eq)] = t.substr(eq + 1);
    }
}

int SuiteParams::integer(const std::string &key, int fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : std::stoi(it->second);
}

std::vector<int> SuiteParams::integers(const std::string &key, const std::vector<int> &fallback) const {
    auto it = values_.find(key);
    if (it == values_.end())
        return fallback;
    std::vector<int> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

std::string SuiteParams::text(const std::string &key, const std::string &fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

namespace {

class Recorder {
  public:
    Recorder(std::string name, std::ostream *log) : log_(log) { result_.name = std::move(name); }

    void check(bool ok, const std::string &what) {
        ++result_.instances;
        if (!ok)
            ++result_.failures;
        if (log_ != nullptr && (!ok || verbose))
            *log_ << (ok ? "  ok   " : "  FAIL ") << what << '\n';
    }
    SuiteResult &result() { return result_; }

    bool verbose = true;

  private:
    std::ostream *log_;
    SuiteResult result_;
};

std::string edges_string(const SimpleGraph &g) {
    std::string out = "n=" + std::to_string(g.order()) + " E={";
    bool first = true;
    for (auto [i, j] : g.edges()) {
        out += (first ? "" : ",") + std::to_string(i) + std::to_string(j);
        first = false;
    }
    return out + "}";
}

std::string complement_string(const SimpleGraph &g) { return "complement " + edges_string(complement(g)); }

int mu_of(const std::vector<Binomial> &ideal, std::size_t variables) {
    return minimal_generators(ideal, MonomialOrder(OrderKind::grevlex, variables)).mu;
}

int mu_stable(const SimpleGraph &g) {
    const auto p = stable_set_polytope(g);
    return mu_of(toric_ideal(p), p.size());
}

SimpleGraph graph_from_complement(const SimpleGraph &gbar) { return complement(gbar); }

// ------------------------------------------------------------------ suites

SuiteResult unimodularity(const SuiteParams &params, std::ostream *log) {
    Recorder rec("unimodularity", log);
    rec.verbose = false;
    const int n = params.integer("n", 5);
    std::size_t unimodular = 0;
    for_each_labeled_graph(n, [&](const SimpleGraph &g) {
        UnimodularOptions options;
        options.targeted_first = false; // plain enumeration, independent of the graph side
        const auto r = is_unimodular(stable_set_polytope(g), options);
        const bool algebra = r.status == UnimodularStatus::unimodular;
        const bool graph = bipartite_check(complement(g)).bipartite;
        unimodular += algebra ? 1 : 0;
        rec.check(r.status != UnimodularStatus::infeasible && algebra == graph,
                  edges_string(g) + (algebra ? " unimodular" : " not unimodular") +
                      (graph ? ", complement bipartite" : ", complement not bipartite"));
    });
    rec.result().summary = std::to_string(rec.result().instances) + " labeled graphs on " + std::to_string(n) +
                           " vertices, " + std::to_string(unimodular) + " unimodular";
    return rec.result();
}

SuiteResult mu(const SuiteParams &params, std::ostream *log) {
    Recorder rec("mu", log);
    std::ostringstream summary;
    auto run = [&](const SimpleGraph &g, int expected, const std::string &label) {
        const int computed = mu_stable(g);
        const int formula = mu_bipartite_complement(g);
        rec.check(computed == expected && formula == expected,
                  label + ": mu=" + std::to_string(computed) + " formula=" + std::to_string(formula) +
                      " expected=" + std::to_string(expected));
        return computed;
    };
    summary << "cycles:";
    for (int len : params.integers("cycles", {4, 6, 8}))
        summary << ' ' << len << "->" << run(complement_of_cycle(len), len / 2, "complement C" + std::to_string(len));
    const int tree_max = params.integer("trees", 7);
    std::size_t trees = 0;
    for (int n = 2; n <= tree_max; ++n)
        for (const auto &t : isomorphism_classes(n, [](const SimpleGraph &f) {
                 return induced_cycles(f, 3, Parity::any).empty();
             })) {
            if (!is_connected(t))
                continue;
            ++trees;
            run(graph_from_complement(t), 2, "tree complement " + edges_string(t));
        }
    const int complete_max = params.integer("complete", 6);
    for (int n = 1; n <= complete_max; ++n)
        run(complete_graph(n), 0, "K" + std::to_string(n));
    summary << "; " << trees << " trees up to " << tree_max << " vertices give 2; complete graphs give 0";
    rec.result().summary = summary.str();
    return rec.result();
}

SuiteResult generators(const SuiteParams &params, std::ostream *log) {
    Recorder rec("generators", log);
    rec.verbose = false;
    const int nmax = params.integer("n", 6);
    std::map<int, std::size_t> bounds_used;
    for (int n = 2; n <= nmax; ++n)
        for_each_labeled_graph(n, [&](const SimpleGraph &g) {
            const SimpleGraph gbar = complement(g);
            if (gbar.edge_count() == 0 || !triangle_free(gbar))
                return;
            const auto p = stable_set_polytope(g);
            const auto ideal = toric_ideal(p);
            const MonomialOrder order(OrderKind::grevlex, p.size());
            const int base = 2 * static_cast<int>(gbar.edge_count());
            int bound = 0;
            for (int b = base; b <= 4 * base && bound == 0; b *= 2)
                if (ideal_equal(alpha2_generators(g, b), ideal, order))
                    bound = b;
            bounds_used[bound == base ? 1 : bound == 0 ? 0 : 2]++;
            const auto edge = edge_polytope(LoopGraph(gbar, VertexSet()));
            const int mu_q = mu_of(ideal, p.size());
            const int mu_p = mu_of(toric_ideal(edge), edge.size());
            rec.check(bound != 0 && mu_q == std::max(mu_p, 2),
                      complement_string(g) + " generators " + (bound ? "equal" : "differ") +
                          ", mu=" + std::to_string(mu_q) + " edge mu=" + std::to_string(mu_p));
        });
    rec.result().summary = std::to_string(rec.result().instances) + " labeled alpha-2 graphs on <= " +
                           std::to_string(nmax) + " vertices; " + std::to_string(bounds_used[1]) +
                           " at walk bound 2|E|, " + std::to_string(bounds_used[2]) + " needed a larger bound";
    return rec.result();
}

SuiteResult normality(const SuiteParams &params, std::ostream *log) {
    Recorder rec("normality", log);
    rec.verbose = false;
    const int nmax = params.integer("n", 7);
    const int dmax = params.integer("dmax", 8);
    std::size_t nonnormal = 0;
    for (int n = 2; n <= nmax; ++n)
        for (const auto &g : isomorphism_classes(n, [](const SimpleGraph &h) { return triangle_free(complement(h)); })) {
            if (complement(g).edge_count() == 0)
                continue;
            const bool theorem = normality_verdict_alpha2(g).normal;
            const auto idp = idp_check(stable_set_polytope(g), dmax);
            const bool oracle = idp.status == NormalityStatus::normal_up_to;
            nonnormal += oracle ? 0 : 1;
            rec.check(theorem == oracle, complement_string(g) + (theorem ? " normal" : " nonnormal") +
                                             ", idp " + (oracle ? "no witness" : "witness"));
        }
    rec.result().summary = std::to_string(rec.result().instances) + " alpha-2 isomorphism classes on <= " +
                           std::to_string(nmax) + " vertices, dmax " + std::to_string(dmax) + ", " +
                           std::to_string(nonnormal) + " nonnormal";
    return rec.result();
}

SuiteResult twooddholes(const SuiteParams &params, std::ostream *log) {
    Recorder rec("twooddholes", log);
    const int k = params.integer("k", 2);
    const int l = params.integer("l", 2);
    const int dmax = params.integer("dmax", 5);
    const SimpleGraph g = two_odd_holes(k, l);
    rec.check(stability_number(g) == 2, "stability number 2");
    const int m = mu_stable(g);
    rec.check(m == 2, "mu=" + std::to_string(m));
    const auto idp = idp_check(stable_set_polytope(g), dmax);
    const bool witnessed = idp.status == NormalityStatus::nonnormal;
    std::string w;
    for (int x : idp.witness)
        w += std::to_string(x) + " ";
    rec.check(witnessed && idp.witness.back() <= dmax, "idp witness " + (witnessed ? w : std::string("none")));
    const auto cert = no_quadratic_gb_certificate(g, dmax);
    rec.check(cert.certified, "no quadratic Groebner basis: " + (cert.certified ? cert.route : cert.reason));
    rec.result().summary = "complement C" + std::to_string(2 * k + 1) + " + C" + std::to_string(2 * l + 1) +
                           ": mu " + std::to_string(m) + ", witness at degree " +
                           (witnessed ? std::to_string(idp.witness.back()) : std::string("-"));
    return rec.result();
}

SuiteResult witnesses(const SuiteParams &params, std::ostream *log) {
    Recorder rec("witnesses", log);
    const std::string only = params.text("kind", "");
    std::ostringstream summary;
    struct Case {
        std::string kind;
        WitnessKind wk;
        std::vector<int> lengths;
    };
    std::vector<Case> cases{{"i", WitnessKind::two_antiholes, {7, 7}},
                            {"ii", WitnessKind::shared_vertex_antiholes, {7, 7}},
                            {"iii", WitnessKind::hole_antihole, {5, 7}}};
    for (auto &c : cases) {
        if (!only.empty() && only != c.kind)
            continue;
        c.lengths = params.integers("lengths", c.lengths);
        const int a = c.lengths.at(0);
        const int b = c.lengths.at(1);
        SimpleGraph g;
        std::vector<int> first;
        std::vector<int> second;
        for (int v = 1; v <= a; ++v)
            first.push_back(v);
        switch (c.wk) {
        case WitnessKind::two_antiholes:
            g = two_antiholes(a, b, false);
            for (int v = a + 1; v <= a + b; ++v)
                second.push_back(v);
            break;
        case WitnessKind::shared_vertex_antiholes:
            g = two_antiholes(a, b, true);
            second.push_back(1);
            for (int v = a + 1; v < a + b; ++v)
                second.push_back(v);
            break;
        case WitnessKind::hole_antihole:
            g = hole_antihole(a, b);
            for (int v = a + 1; v <= a + b; ++v)
                second.push_back(v);
            break;
        }
        const auto p = stable_set_polytope(g);
        const auto w = proof_witness(c.wk, g, first, second);
        bool nonnegative = true;
        for (const auto &[idx, coeff] : w.certificate)
            nonnegative = nonnegative && coeff > 0;
        const auto sum = certificate_sum(p, w.certificate);
        bool exact = sum.size() == w.point.size();
        for (std::size_t i = 0; exact && i < sum.size(); ++i)
            exact = sum[i] == w.point[i];
        const bool cone = cone_membership(w.point, p).member;
        const bool semigroup = semigroup_membership(w.point, p).member;
        std::string pt;
        for (int x : w.point)
            pt += std::to_string(x) + " ";
        const std::string label = "kind " + c.kind + " lengths " + std::to_string(a) + "," + std::to_string(b);
        rec.check(nonnegative && exact, label + ": proof coefficients reproduce " + pt);
        rec.check(cone, label + ": in the cone");
        rec.check(!semigroup, label + ": not in the semigroup");
        summary << (summary.tellp() > 0 ? "; " : "") << label
                << (nonnegative && exact && cone && !semigroup ? " pass" : " FAIL");
    }
    rec.result().summary = summary.str();
    return rec.result();
}

SuiteResult keylemma(const SuiteParams &params, std::ostream *log) {
    Recorder rec("keylemma", log);
    rec.verbose = false;
    const int nmax = params.integer("n", 5);
    for (int n = 2; n <= nmax; ++n)
        for_each_labeled_graph(n, [&](const SimpleGraph &g) {
            const SimpleGraph gbar = complement(g);
            if (gbar.edge_count() == 0 || !triangle_free(gbar))
                return;
            rec.check(keylemma_check(g), complement_string(g));
        });
    for (int len : params.integers("cycles", {4, 5, 6}))
        rec.check(keylemma_check(complement_of_cycle(len)), "complement C" + std::to_string(len));
    rec.result().summary = std::to_string(rec.result().instances) + " alpha-2 graphs (labeled, <= " +
                           std::to_string(nmax) + " vertices, plus cycle complements)";
    return rec.result();
}

SuiteResult compressed(const SuiteParams &params, std::ostream *log) {
    Recorder rec("compressed", log);
    rec.verbose = false;
    const int nmax = params.integer("n", 5);
    const int orders = params.integer("orders", 50);
    std::mt19937_64 rng(static_cast<std::uint64_t>(params.integer("seed", 1)));
    std::size_t graphs = 0;
    for (int n = 1; n <= nmax; ++n)
        for_each_labeled_graph(n, [&](const SimpleGraph &g) {
            if (!perfect_check(g).perfect)
                return;
            ++graphs;
            const auto p = stable_set_polytope(g);
            const auto ideal = toric_ideal(p);
            std::vector<int> perm(p.size());
            std::iota(perm.begin(), perm.end(), 0);
            for (int k = 0; k < orders; ++k) {
                std::shuffle(perm.begin(), perm.end(), rng);
                BuchbergerOptions bo;
                bo.cancel_common_factors = true;
                const MonomialOrder order(OrderKind::grevlex, perm);
                const auto in = initial_ideal(buchberger(ideal, order, bo));
                rec.check(in.squarefree, edges_string(g) + " " + order.describe());
            }
        });
    rec.result().summary = std::to_string(graphs) + " labeled perfect graphs on <= " +
                           std::to_string(nmax) + " vertices, " + std::to_string(orders) + " orders each";
    return rec.result();
}

SuiteResult walks(const SuiteParams &params, std::ostream *log) {
    Recorder rec("walks", log);
    rec.verbose = false;
    const int nmax = params.integer("n", 6);
    std::map<std::pair<int, std::uint64_t>, bool> zero_ideal; // per isomorphism class
    std::size_t zero_count = 0;
    for (int n = 1; n <= nmax; ++n)
        for_each_labeled_graph(n, [&](const SimpleGraph &g) {
            if (!is_connected(g))
                return;
            for (int loop = 0; loop <= n; ++loop) {
                VertexSet loops;
                if (loop > 0)
                    loops.insert(loop);
                const auto key = std::make_pair(n, canonical_code(g, loops));
                auto it = zero_ideal.find(key);
                if (it == zero_ideal.end()) {
                    const auto p = edge_polytope(LoopGraph(g, loops));
                    it = zero_ideal.emplace(key, toric_ideal(p).empty()).first;
                }
                // Cycles of a connected graph: |E| - |V| + 1 plus one per loop.
                const int cycles = static_cast<int>(g.edge_count()) - n + 1 + (loop > 0 ? 1 : 0);
                bool graph_side = cycles == 0;
                if (cycles == 1)
                    graph_side = loop > 0 || !bipartite_check(g).bipartite;
                zero_count += it->second ? 1 : 0;
                rec.check(graph_side == it->second,
                          edges_string(g) + (loop > 0 ? " loop " + std::to_string(loop) : std::string()) +
                              (it->second ? " zero ideal" : " nonzero ideal"));
            }
        });
    rec.result().summary = std::to_string(rec.result().instances) + " labeled connected loop graphs on <= " +
                           std::to_string(nmax) + " vertices (" + std::to_string(zero_ideal.size()) +
                           " isomorphism classes), " + std::to_string(zero_count) + " with zero ideal";
    return rec.result();
}

SuiteResult cliquesum(const SuiteParams &params, std::ostream *log) {
    Recorder rec("cliquesum", log);
    const int pairs = params.integer("pairs", 20);
    const int dmax = params.integer("dmax", 6);
    const int nmax = params.integer("n", 5);
    std::mt19937_64 rng(static_cast<std::uint64_t>(params.integer("seed", 7)));
    std::size_t nonnormal = 0;
    for (int k = 0; k < pairs; ++k) {
        std::uniform_int_distribution<int> size(3, nmax);
        const SimpleGraph g1 = random_alpha2(size(rng), 0.5, rng());
        const SimpleGraph g2 = random_alpha2(size(rng), 0.5, rng());
        std::vector<std::pair<int, int>> ident;
        const bool on_edge = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
        if (on_edge) {
            const auto e1 = g1.edges();
            const auto e2 = g2.edges();
            const auto a = e1[std::uniform_int_distribution<std::size_t>(0, e1.size() - 1)(rng)];
            const auto b = e2[std::uniform_int_distribution<std::size_t>(0, e2.size() - 1)(rng)];
            ident = {{b.first, a.first}, {b.second, a.second}};
        } else {
            ident = {{std::uniform_int_distribution<int>(1, g2.order())(rng),
                      std::uniform_int_distribution<int>(1, g1.order())(rng)}};
        }
        const auto r = clique_sum_normality_check(g1, g2, ident, dmax);
        nonnormal += r.glued.kind == NormalityKind::nonnormal ? 1 : 0;
        rec.check(r.held && !r.confirmed_counterexample,
                  "pair " + std::to_string(k + 1) + " glued on " + (on_edge ? "an edge" : "a vertex") + ": parts " +
                      to_string(r.first.kind) + "/" + to_string(r.second.kind) + ", sum " + to_string(r.glued.kind) +
                      " (" + std::to_string(r.sum.order()) + " vertices)");
    }
    rec.result().summary = std::to_string(pairs) + " seeded pairs, dmax " + std::to_string(dmax) + ", " +
                           std::to_string(nonnormal) + " nonnormal sums";
    return rec.result();
}

} // namespace

std::vector<std::string> suite_names() {
    return {"unimodularity", "mu",       "generators", "normality", "twooddholes",
            "witnesses",     "keylemma", "compressed", "walks",     "cliquesum"};
}

SuiteResult run_suite(const std::string &name, const SuiteParams &params, std::ostream *log) {
    using Fn = SuiteResult (*)(const SuiteParams &, std::ostream *);
    static const std::map<std::string, Fn> table{
        {"unimodularity", unimodularity}, {"mu", mu},           {"generators", generators},
        {"normality", normality},         {"twooddholes", twooddholes}, {"witnesses", witnesses},
        {"keylemma", keylemma},           {"compressed", compressed},   {"walks", walks},
        {"cliquesum", cliquesum}};
    auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument("unknown suite: " + name);
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r = it->second(params, log);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace stabletoric
