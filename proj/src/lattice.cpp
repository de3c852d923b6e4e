#include "stabletoric/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace stabletoric {

namespace {

// Points are packed two bytes per coordinate for hashing.
std::string pack(const Point &z) {
    std::string key(z.size() * 2, '\0');
    for (std::size_t i = 0; i < z.size(); ++i) {
        const auto v = static_cast<unsigned>(z[i]);
        key[2 * i] = static_cast<char>(v & 0xFF);
        key[2 * i + 1] = static_cast<char>((v >> 8) & 0xFF);
    }
    return key;
}

std::uint64_t binomial_coefficient_capped(std::uint64_t m, std::uint64_t k, std::uint64_t cap) {
    if (k > m)
        return 0;
    k = std::min(k, m - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (m - k + i) / i;
        if (acc > cap)
            return cap + 1;
    }
    return static_cast<std::uint64_t>(acc);
}

std::vector<std::vector<Rational>> homogenized_matrix(const PointConfiguration &p) {
    const auto rows = static_cast<std::size_t>(p.dimension()) + 1;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(p.size()));
    for (std::size_t j = 0; j < p.size(); ++j) {
        for (std::size_t i = 0; i + 1 < rows; ++i)
            a[i][j] = p.point(j)[i];
        a[rows - 1][j] = 1;
    }
    return a;
}

RationalCertificate certificate_from(const std::vector<Rational> &x) {
    RationalCertificate cert;
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] != 0)
            cert.emplace_back(j, x[j]);
    return cert;
}

std::optional<std::vector<Rational>> solve_cone(const PointConfiguration &p, const Point &target) {
    std::vector<Rational> b(target.begin(), target.end());
    return nonnegative_solution(homogenized_matrix(p), b);
}

} // namespace

PointConfiguration::PointConfiguration(int dimension, std::vector<Point> points, std::vector<std::string> labels)
    : dimension_(dimension), points_(std::move(points)), labels_(std::move(labels)) {
    if (dimension_ < 0)
        throw std::invalid_argument("negative dimension");
    for (const auto &pt : points_) {
        if (static_cast<int>(pt.size()) != dimension_)
            throw std::invalid_argument("point of wrong dimension");
        if (std::any_of(pt.begin(), pt.end(), [](int v) { return v < 0; }))
            throw std::invalid_argument("configurations must have nonnegative coordinates");
    }
    if (labels_.empty())
        for (std::size_t i = 0; i < points_.size(); ++i)
            labels_.push_back("p" + std::to_string(i + 1));
    if (labels_.size() != points_.size())
        throw std::invalid_argument("one label per point required");
}

Point PointConfiguration::homogenized(std::size_t i) const {
    Point out = points_[i];
    out.push_back(1);
    return out;
}

bool PointConfiguration::zero_one() const {
    return std::all_of(points_.begin(), points_.end(),
                       [](const Point &pt) { return std::all_of(pt.begin(), pt.end(), [](int v) { return v <= 1; }); });
}

std::vector<Rational> certificate_sum(const PointConfiguration &p, const RationalCertificate &cert) {
    std::vector<Rational> sum(static_cast<std::size_t>(p.dimension()) + 1);
    for (const auto &[idx, coeff] : cert) {
        if (idx >= p.size())
            throw std::out_of_range("certificate index out of range");
        const Point h = p.homogenized(idx);
        for (std::size_t i = 0; i < h.size(); ++i)
            sum[i] += coeff * h[i];
    }
    return sum;
}

PointConfiguration stable_set_polytope(const SimpleGraph &g) {
    const int n = g.order();
    std::vector<Point> points;
    std::vector<std::string> labels;
    for (VertexSet w : stable_sets(g)) {
        Point pt(static_cast<std::size_t>(n), 0);
        for (int v : w.vertices())
            pt[v - 1] = 1;
        points.push_back(std::move(pt));
        labels.push_back(w.to_string());
    }
    return {n, std::move(points), std::move(labels)};
}

PointConfiguration edge_polytope(const LoopGraph &h) {
    const int n = h.order();
    std::vector<Point> points;
    std::vector<std::string> labels;
    for (auto [i, j] : h.edges_and_loops()) {
        Point pt(static_cast<std::size_t>(n), 0);
        pt[i - 1] += 1;
        pt[j - 1] += 1;
        points.push_back(std::move(pt));
        labels.push_back("{" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
    return {n, std::move(points), std::move(labels)};
}

UnimodularResult is_unimodular(const PointConfiguration &p, const UnimodularOptions &options) {
    const int n = p.dimension();
    const auto rows = static_cast<std::size_t>(n) + 1;
    const std::size_t m = p.size();
    std::vector<std::vector<std::int64_t>> full(rows, std::vector<std::int64_t>(m));
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i + 1 < rows; ++i)
            full[i][j] = p.point(j)[i];
        full[rows - 1][j] = 1;
    }
    if (rank(full) != static_cast<int>(rows))
        throw std::invalid_argument("is_unimodular: homogenized configuration is rank deficient");

    auto minor = [&](const std::vector<std::size_t> &cols) {
        std::vector<std::vector<std::int64_t>> sub(rows, std::vector<std::int64_t>(rows));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t c = 0; c < rows; ++c)
                sub[i][c] = full[i][cols[c]];
        return determinant(sub);
    };

    UnimodularResult result;
    auto refute = [&](const std::vector<std::size_t> &cols, const Integer &value) {
        result.status = UnimodularStatus::not_unimodular;
        result.refuting = cols;
        result.refuting_value = value;
        for (auto c : cols)
            result.refuting_labels.push_back(p.labels()[c]);
    };

    if (options.targeted_first && p.zero_one()) {
        std::map<Point, std::size_t> index;
        for (std::size_t j = 0; j < m; ++j)
            index.emplace(p.point(j), j);
        Point origin(static_cast<std::size_t>(n), 0);
        bool has_units = index.count(origin) != 0;
        std::vector<std::size_t> unit(static_cast<std::size_t>(n));
        for (int i = 0; i < n && has_units; ++i) {
            Point e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = 1;
            auto it = index.find(e);
            has_units = it != index.end();
            if (has_units)
                unit[static_cast<std::size_t>(i)] = it->second;
        }
        if (has_units && n <= kMaxVertices) {
            // The origin and the unit vectors give a minor of absolute value 1.
            SimpleGraph pairs(n);
            for (const auto &pt : p.points())
                if (std::accumulate(pt.begin(), pt.end(), 0) == 2) {
                    std::vector<int> ones;
                    for (int i = 0; i < n; ++i)
                        if (pt[static_cast<std::size_t>(i)] == 1)
                            ones.push_back(i + 1);
                    pairs.add_edge(ones[0], ones[1]);
                }
            auto bip = bipartite_check(pairs);
            result.common_value = 1;
            if (!bip.bipartite) {
                const auto &cyc = bip.odd_cycle;
                std::vector<std::size_t> cols;
                VertexSet on_cycle = VertexSet::of(cyc);
                for (std::size_t k = 0; k < cyc.size(); ++k) {
                    Point pt(static_cast<std::size_t>(n), 0);
                    pt[cyc[k] - 1] = 1;
                    pt[cyc[(k + 1) % cyc.size()] - 1] = 1;
                    cols.push_back(index.at(pt));
                }
                cols.push_back(index.at(origin));
                for (int v = 1; v <= n; ++v)
                    if (!on_cycle.contains(v))
                        cols.push_back(unit[static_cast<std::size_t>(v - 1)]);
                Integer value = minor(cols);
                ++result.minors_checked;
                if (abs(value) != 1) {
                    refute(cols, value);
                    return result;
                }
            }
        }
    }

    if (binomial_coefficient_capped(m, rows, options.exhaustive_limit) > options.exhaustive_limit) {
        result.status = UnimodularStatus::infeasible;
        return result;
    }

    std::vector<std::size_t> cols(rows);
    Integer reference = result.common_value;
    bool done = false;
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t slot, std::size_t from) {
        if (done)
            return;
        if (slot == rows) {
            Integer value = minor(cols);
            ++result.minors_checked;
            if (value == 0)
                return;
            Integer a = abs(value);
            if (reference == 0) {
                reference = a;
            } else if (a != reference) {
                refute(cols, value);
                done = true;
            }
            return;
        }
        for (std::size_t j = from; j + (rows - slot) <= m && !done; ++j) {
            cols[slot] = j;
            choose(slot + 1, j + 1);
        }
    };
    choose(0, 0);
    result.common_value = reference;
    return result;
}

MembershipResult cone_membership(const Point &target, const PointConfiguration &p) {
    if (static_cast<int>(target.size()) != p.dimension() + 1)
        throw std::invalid_argument("cone_membership: target must be homogenized");
    auto x = solve_cone(p, target);
    if (!x)
        return {};
    return {true, certificate_from(*x)};
}

SemigroupResult semigroup_membership(const Point &target, const PointConfiguration &p) {
    const auto n = static_cast<std::size_t>(p.dimension());
    if (target.size() != n + 1)
        throw std::invalid_argument("semigroup_membership: target must be homogenized");
    const int degree = target.back();
    if (degree < 0)
        return {};
    Point z(target.begin(), target.end() - 1);
    if (std::any_of(z.begin(), z.end(), [](int v) { return v < 0; }))
        return {};

    std::optional<std::size_t> zero_point;
    int max_sum = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        const int s = std::accumulate(p.point(j).begin(), p.point(j).end(), 0);
        if (s == 0 && !zero_point)
            zero_point = j;
        max_sum = std::max(max_sum, s);
    }
    // covering[k]: points with a positive k-th coordinate.
    std::vector<std::vector<std::size_t>> covering(n);
    for (std::size_t j = 0; j < p.size(); ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (p.point(j)[k] > 0)
                covering[k].push_back(j);

    std::unordered_set<std::string> failed;
    std::vector<std::size_t> chosen;
    std::function<bool(Point &, int, long)> search = [&](Point &rest, int count, long total) -> bool {
        if (total == 0) {
            if (count > 0 && !zero_point)
                return false;
            chosen.insert(chosen.end(), static_cast<std::size_t>(count), zero_point.value_or(0));
            return true;
        }
        if (count == 0 || total > static_cast<long>(count) * max_sum)
            return false;
        std::string key = pack(rest);
        key.push_back(static_cast<char>(count & 0xFF));
        key.push_back(static_cast<char>((count >> 8) & 0xFF));
        if (failed.count(key) != 0)
            return false;
        std::size_t first = 0;
        while (rest[first] == 0)
            ++first;
        for (std::size_t j : covering[first]) {
            const Point &a = p.point(j);
            bool fits = true;
            for (std::size_t k = first; k < n && fits; ++k)
                fits = a[k] <= rest[k];
            if (!fits)
                continue;
            long sum = 0;
            for (std::size_t k = first; k < n; ++k) {
                rest[k] -= a[k];
                sum += a[k];
            }
            chosen.push_back(j);
            if (search(rest, count - 1, total - sum))
                return true;
            chosen.pop_back();
            for (std::size_t k = first; k < n; ++k)
                rest[k] += a[k];
        }
        failed.insert(std::move(key));
        return false;
    };
    const long total = std::accumulate(z.begin(), z.end(), 0L);
    if (!search(z, degree, total))
        return {};
    std::sort(chosen.begin(), chosen.end());
    return {true, chosen};
}

IdpVerdict idp_check(const PointConfiguration &p, int dmax) {
    if (dmax == 0)
        dmax = p.dimension() + 1;
    if (dmax < 1)
        throw std::invalid_argument("idp_check: dmax must be positive");
    const auto n = static_cast<std::size_t>(p.dimension());
    const bool zero_one = p.zero_one();

    std::vector<int> max_coord(n, 0);
    for (const auto &pt : p.points())
        for (std::size_t k = 0; k < n; ++k)
            max_coord[k] = std::max(max_coord[k], pt[k]);

    // For 0/1 configurations, coordinates that never appear together in a
    // point form conflict cliques; their sum is at most d on the d-th
    // dilation. cliques_ending[k] lists the cliques whose largest member is k.
    std::vector<std::vector<std::size_t>> cliques_of(n);
    std::size_t clique_count = 0;
    if (zero_one && n <= 64) {
        std::vector<std::uint64_t> conflict(n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b)
                    continue;
                const bool together = std::any_of(p.points().begin(), p.points().end(),
                                                  [&](const Point &pt) { return pt[a] > 0 && pt[b] > 0; });
                if (!together)
                    conflict[a] |= std::uint64_t{1} << b;
            }
        std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> bron_kerbosch =
            [&](std::uint64_t r, std::uint64_t cand, std::uint64_t excl) {
                if (cand == 0 && excl == 0) {
                    if (__builtin_popcountll(r) >= 2) {
                        for (std::uint64_t bits = r; bits != 0; bits &= bits - 1)
                            cliques_of[static_cast<std::size_t>(__builtin_ctzll(bits))].push_back(clique_count);
                        ++clique_count;
                    }
                    return;
                }
                while (cand != 0) {
                    const std::size_t v = static_cast<std::size_t>(__builtin_ctzll(cand));
                    const std::uint64_t vb = std::uint64_t{1} << v;
                    bron_kerbosch(r | vb, cand & conflict[v], excl & conflict[v]);
                    cand &= ~vb;
                    excl |= vb;
                }
            };
        const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        bron_kerbosch(0, all, 0);
    }

    IdpVerdict verdict;
    verdict.dmax = dmax;
    std::unordered_set<std::string> previous; // lattice points of the (d-1)-th dilation
    std::unordered_set<std::string> configuration;
    for (const auto &pt : p.points())
        configuration.insert(pack(pt));
    previous.insert(pack(Point(n, 0)));

    const auto cone = homogenized_matrix(p);
    for (int d = 1; d <= dmax; ++d) {
        std::unordered_set<std::string> current;
        std::vector<long> clique_sum(clique_count, 0);
        Point z(n, 0);
        std::optional<Point> witness;
        RationalCertificate witness_cert;

        auto prefix_feasible = [&](std::size_t fixed) {
            // Some point of d * conv(p) starts with z[0..fixed).
            std::vector<std::vector<Rational>> a;
            std::vector<Rational> b;
            for (std::size_t i = 0; i < fixed; ++i) {
                a.push_back(cone[i]);
                b.emplace_back(z[i]);
            }
            a.push_back(cone[n]);
            b.emplace_back(d);
            return nonnegative_solution(a, b).has_value();
        };

        auto decomposes = [&](Point &pt) {
            if (d == 1)
                return configuration.count(pack(pt)) != 0;
            for (const auto &a : p.points()) {
                bool fits = true;
                for (std::size_t k = 0; k < n && fits; ++k)
                    fits = a[k] <= pt[k];
                if (!fits)
                    continue;
                for (std::size_t k = 0; k < n; ++k)
                    pt[k] -= a[k];
                const bool hit = previous.count(pack(pt)) != 0;
                for (std::size_t k = 0; k < n; ++k)
                    pt[k] += a[k];
                if (hit)
                    return true;
            }
            return false;
        };

        std::function<bool(std::size_t)> enumerate = [&](std::size_t k) -> bool {
            if (k == n) {
                if (decomposes(z)) {
                    current.insert(pack(z));
                    return false;
                }
                Point target = z;
                target.push_back(d);
                auto x = nonnegative_solution(cone, std::vector<Rational>(target.begin(), target.end()));
                if (x) {
                    witness = target;
                    witness_cert = certificate_from(*x);
                    return true;
                }
                return false;
            }
            const int upper = d * max_coord[k];
            for (int v = 0; v <= upper; ++v) {
                bool ok = true;
                for (auto c : cliques_of[k])
                    if (clique_sum[c] + v > d) {
                        ok = false;
                        break;
                    }
                if (!ok)
                    break; // larger values only make it worse
                z[k] = v;
                if (!zero_one && !prefix_feasible(k + 1))
                    continue;
                for (auto c : cliques_of[k])
                    clique_sum[c] += v;
                const bool stop = enumerate(k + 1);
                for (auto c : cliques_of[k])
                    clique_sum[c] -= v;
                if (stop)
                    return true;
            }
            z[k] = 0;
            return false;
        };

        const bool found = enumerate(0);
        verdict.points_per_level.push_back(current.size());
        if (found) {
            verdict.status = NormalityStatus::nonnormal;
            verdict.witness = *witness;
            verdict.certificate = std::move(witness_cert);
            return verdict;
        }
        previous = std::move(current);
    }
    return verdict;
}

namespace {

// Cycle order of g[vs] when it is a chordless cycle, else nothing.
std::optional<std::vector<int>> chordless_cycle_order(const SimpleGraph &g, const std::vector<int> &vs) {
    if (vs.size() < 3)
        return std::nullopt;
    const VertexSet s = VertexSet::of(vs);
    if (s.size() != static_cast<int>(vs.size()))
        return std::nullopt;
    for (int v : vs)
        if ((g.neighbors(v) & s).size() != 2)
            return std::nullopt;
    std::vector<int> order{vs.front()};
    int prev = 0;
    int cur = vs.front();
    for (std::size_t step = 1; step < vs.size(); ++step) {
        auto nb = (g.neighbors(cur) & s).vertices();
        const int next = nb[0] != prev ? nb[0] : nb[1];
        prev = cur;
        cur = next;
        if (cur == vs.front())
            return std::nullopt; // shorter cycle: g[vs] is disconnected
        order.push_back(cur);
    }
    return order;
}

void require(bool ok, const std::string &what) {
    if (!ok)
        throw std::invalid_argument("proof_witness: " + what);
}

} // namespace

ProofWitness proof_witness(WitnessKind kind, const SimpleGraph &g, const std::vector<int> &first,
                           const std::vector<int> &second) {
    const int n = g.order();
    const SimpleGraph gbar = complement(g);
    const VertexSet v1 = VertexSet::of(first);
    const VertexSet v2 = VertexSet::of(second);
    for (int v : (v1 | v2).vertices())
        require(v <= n, "vertex out of range");

    // An odd antihole of the complement is an odd hole of g, and vice versa.
    auto antihole = [&](const std::vector<int> &vs) {
        auto order = chordless_cycle_order(g, vs);
        require(order && order->size() % 2 == 1 && order->size() >= 5,
                "vertex set does not induce an odd antihole of the complement");
        return *order;
    };
    auto hole = [&](const std::vector<int> &vs) {
        auto order = chordless_cycle_order(gbar, vs);
        require(order && order->size() % 2 == 1 && order->size() >= 5,
                "vertex set does not induce an odd hole of the complement");
        return *order;
    };
    for (int a : (v1 - v2).vertices())
        require((gbar.neighbors(a) & (v2 - v1)).empty(), "the cycles have a bridge in the complement");

    const auto config = stable_set_polytope(g);
    std::unordered_map<std::uint64_t, std::size_t> index;
    {
        const auto sets = stable_sets(g);
        for (std::size_t i = 0; i < sets.size(); ++i)
            index.emplace(sets[i].bits(), i);
    }
    const auto all_stable = stable_sets(g);
    auto stable_within = [&](VertexSet within, int size) {
        std::vector<VertexSet> out;
        for (auto w : all_stable)
            if (w.size() == size && (w - within).empty())
                out.push_back(w);
        return out;
    };

    ProofWitness out;
    out.point.assign(static_cast<std::size_t>(n) + 1, 0);
    auto add_sets = [&](const std::vector<VertexSet> &sets, const Rational &coeff) {
        if (coeff == 0)
            return;
        for (auto w : sets)
            out.certificate.emplace_back(index.at(w.bits()), coeff);
    };

    switch (kind) {
    case WitnessKind::two_antiholes: {
        require((v1 & v2).empty(), "antiholes must be vertex-disjoint");
        antihole(first);
        antihole(second);
        const int k = (v1.size() - 1) / 2;
        const int l = (v2.size() - 1) / 2;
        require(k >= 2 && l >= 2, "antihole lengths must be at least 5");
        for (int v : (v1 | v2).vertices())
            out.point[v - 1] = 1;
        out.point[static_cast<std::size_t>(n)] = 5;
        add_sets(stable_within(v1, k), Rational(1, k));
        add_sets(stable_within(v2, l), Rational(1, l));
        add_sets({VertexSet()}, Rational(k * l - k - l, k * l));
        break;
    }
    case WitnessKind::shared_vertex_antiholes: {
        require((v1 & v2).size() == 1, "antiholes must share exactly one vertex");
        const auto c1 = antihole(first);
        const auto c2 = antihole(second);
        const int k = (v1.size() - 1) / 2;
        const int l = (v2.size() - 1) / 2;
        require(k >= 3 && l >= 3, "antihole lengths must be at least 7");
        const int shared = (v1 & v2).vertices().front();
        auto family_for = [&](const std::vector<int> &cyc, VertexSet within, int size) {
            // Neighbours of the shared vertex along the hole g[within].
            const auto pos = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), shared) - cyc.begin());
            const int before = cyc[(pos + cyc.size() - 1) % cyc.size()];
            const int after = cyc[(pos + 1) % cyc.size()];
            std::vector<VertexSet> out_sets;
            for (auto w : stable_within(within, size))
                if (w.contains(shared) || (w.contains(before) && w.contains(after)))
                    out_sets.push_back(w);
            return out_sets;
        };
        for (int v : (v1 | v2).vertices())
            out.point[v - 1] = 1;
        out.point[shared - 1] = 3;
        out.point[static_cast<std::size_t>(n)] = 5;
        add_sets(family_for(c1, v1, k), Rational(1, k - 1));
        add_sets(family_for(c2, v2, l), Rational(1, l - 1));
        add_sets({VertexSet::of({shared})}, Rational(1) - Rational(1, k - 1) - Rational(1, l - 1));
        break;
    }
    case WitnessKind::hole_antihole: {
        require((v1 & v2).empty(), "hole and antihole must be vertex-disjoint");
        hole(first);
        antihole(second);
        const int k = (v1.size() - 1) / 2;
        const int l = (v2.size() - 1) / 2;
        require(k >= 2 && l >= 2, "cycle lengths must be at least 5");
        for (int v : (v1 | v2).vertices())
            out.point[v - 1] = 1;
        out.point[static_cast<std::size_t>(n)] = k + 3;
        add_sets(stable_within(v1, 2), Rational(1, 2));
        add_sets(stable_within(v2, l), Rational(1, l));
        add_sets({VertexSet()}, Rational(l - 2, 2 * l));
        break;
    }
    }
    for (auto &entry : out.certificate)
        entry.second.canonicalize();

    const auto sum = certificate_sum(config, out.certificate);
    for (std::size_t i = 0; i < sum.size(); ++i)
        if (sum[i] != out.point[i])
            throw std::logic_error("proof_witness: certificate does not reproduce the witness");
    return out;
}

PointConfiguration face_restriction(const PointConfiguration &p, const std::vector<int> &zero_coords) {
    const auto n = static_cast<std::size_t>(p.dimension());
    std::vector<bool> drop(n, false);
    for (int c : zero_coords) {
        if (c < 1 || static_cast<std::size_t>(c) > n)
            throw std::invalid_argument("face_restriction: coordinate out of range");
        drop[static_cast<std::size_t>(c - 1)] = true;
    }
    std::vector<Point> points;
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < p.size(); ++j) {
        const Point &pt = p.point(j);
        bool vanishes = true;
        for (std::size_t k = 0; k < n && vanishes; ++k)
            vanishes = !drop[k] || pt[k] == 0;
        if (!vanishes)
            continue;
        Point projected;
        for (std::size_t k = 0; k < n; ++k)
            if (!drop[k])
                projected.push_back(pt[k]);
        points.push_back(std::move(projected));
        labels.push_back(p.labels()[j]);
    }
    const int kept = static_cast<int>(std::count(drop.begin(), drop.end(), false));
    return {kept, std::move(points), std::move(labels)};
}

void write_witness(std::ostream &out, const Point &homogenized_point, const RationalCertificate &cert) {
    out << "w " << homogenized_point.back();
    for (std::size_t i = 0; i + 1 < homogenized_point.size(); ++i)
        out << ' ' << homogenized_point[i];
    out << '\n';
    for (const auto &[idx, coeff] : cert)
        out << "λ " << idx + 1 << ' ' << coeff.get_num() << '/' << coeff.get_den() << '\n';
}

} // namespace stabletoric
