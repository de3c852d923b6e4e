#include "stabletoric/families.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace stabletoric {

namespace {

void require(bool ok, const std::string &what) {
    if (!ok)
        throw std::invalid_argument(what);
}

SimpleGraph from_complement(const SimpleGraph &gbar) { return complement(gbar); }

// The complement of C_m placed on vertex labels `labels` (cycle order).
void add_antihole(SimpleGraph &gbar, const std::vector<int> &labels) {
    const int m = static_cast<int>(labels.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const bool cycle_edge = (b == a + 1) || (a == 0 && b == m - 1);
            if (!cycle_edge)
                gbar.add_edge(labels[a], labels[b]);
        }
}

} // namespace

SimpleGraph complete_graph(int n) {
    require(n >= 1, "complete: n must be at least 1");
    return complement(SimpleGraph(n));
}

SimpleGraph complement_of_cycle(int m) {
    require(m >= 3, "complement_of_cycle: m must be at least 3");
    return from_complement(cycle_graph(m));
}

SimpleGraph two_odd_holes(int k, int l) {
    require(k >= 1 && l >= 1, "two_odd_holes: k and l must be at least 1");
    return from_complement(disjoint_union(cycle_graph(2 * k + 1), cycle_graph(2 * l + 1)));
}

SimpleGraph kn_minus_edge(int n) {
    require(n >= 2, "kn_minus_edge: n must be at least 2");
    SimpleGraph g = complete_graph(n);
    g.remove_edge(1, 2);
    return g;
}

SimpleGraph hole_antihole(int m1, int m2) {
    require(m1 >= 3 && m2 >= 3, "hole_antihole: cycle lengths must be at least 3");
    return from_complement(disjoint_union(cycle_graph(m1), complement(cycle_graph(m2))));
}

SimpleGraph two_antiholes(int m1, int m2, bool shared) {
    require(m1 >= 3 && m2 >= 3, "two_antiholes: cycle lengths must be at least 3");
    const int n = shared ? m1 + m2 - 1 : m1 + m2;
    SimpleGraph gbar(n);
    std::vector<int> first(static_cast<std::size_t>(m1));
    for (int i = 0; i < m1; ++i)
        first[i] = i + 1;
    std::vector<int> second;
    if (shared)
        second.push_back(1);
    while (static_cast<int>(second.size()) < m2)
        second.push_back(m1 + static_cast<int>(second.size()) + (shared ? 0 : 1));
    add_antihole(gbar, first);
    add_antihole(gbar, second);
    return from_complement(gbar);
}

SimpleGraph random_alpha2(int n, double edge_probability, std::uint64_t seed) {
    require(n >= 2, "random_alpha2: n must be at least 2");
    require(edge_probability >= 0.0 && edge_probability <= 1.0, "random_alpha2: probability outside [0,1]");
    std::mt19937_64 rng(seed);
    // Raw 53-bit draws keep the sequence identical across standard libraries.
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    SimpleGraph gbar(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (uniform() >= edge_probability)
                continue;
            if ((gbar.neighbor_bits(i) & gbar.neighbor_bits(j)) != 0)
                continue;
            gbar.add_edge(i, j);
        }
    if (gbar.edge_count() == 0) {
        const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(n)) + 1;
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1)) + 1;
        if (j >= i)
            ++j;
        gbar.add_edge(i, j);
    }
    return from_complement(gbar);
}

SimpleGraph family(const std::string &name, const std::vector<long long> &p) {
    auto arity = [&](std::size_t k) {
        require(p.size() == k, name + ": expected " + std::to_string(k) + " parameter(s)");
    };
    auto as_int = [&](std::size_t i) {
        require(p[i] >= -1000000 && p[i] <= 1000000, name + ": parameter out of range");
        return static_cast<int>(p[i]);
    };
    if (name == "complete") {
        arity(1);
        return complete_graph(as_int(0));
    }
    if (name == "complement_of_cycle") {
        arity(1);
        return complement_of_cycle(as_int(0));
    }
    if (name == "two_odd_holes") {
        arity(2);
        return two_odd_holes(as_int(0), as_int(1));
    }
    if (name == "kn_minus_edge") {
        arity(1);
        return kn_minus_edge(as_int(0));
    }
    if (name == "hole_antihole") {
        arity(2);
        return hole_antihole(as_int(0), as_int(1));
    }
    if (name == "two_antiholes") {
        require(p.size() == 2 || p.size() == 3, "two_antiholes: expected 2 or 3 parameters");
        return two_antiholes(as_int(0), as_int(1), p.size() == 3 && p[2] != 0);
    }
    if (name == "random_alpha2") {
        arity(3);
        require(p[1] >= 0 && p[1] <= 100, "random_alpha2: probability percent outside 0..100");
        return random_alpha2(as_int(0), static_cast<double>(p[1]) / 100.0, static_cast<std::uint64_t>(p[2]));
    }
    if (name == "cycle") {
        arity(1);
        return cycle_graph(as_int(0));
    }
    if (name == "empty") {
        arity(1);
        require(p[0] >= 0, "empty: n must be nonnegative");
        return SimpleGraph(as_int(0));
    }
    throw std::invalid_argument("unknown graph family: " + name);
}

SimpleGraph family_from_spec(const std::string &spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::vector<long long> params;
    if (colon != std::string::npos) {
        std::stringstream rest(spec.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            try {
                std::size_t used = 0;
                params.push_back(std::stoll(item, &used));
                require(used == item.size(), "bad family parameter: " + item);
            } catch (const std::logic_error &) {
                throw std::invalid_argument("bad family parameter: '" + item + "'");
            }
        }
    }
    return family(name, params);
}

} // namespace stabletoric
