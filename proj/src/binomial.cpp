#include "stabletoric/binomial.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "stabletoric/lattice.hpp"

namespace stabletoric {

// ---------------------------------------------------------------- orders

std::string to_string(OrderKind kind) {
    switch (kind) {
    case OrderKind::lex:
        return "lex";
    case OrderKind::grlex:
        return "grlex";
    case OrderKind::grevlex:
        return "grevlex";
    }
    return "?";
}

OrderKind parse_order_kind(const std::string &name) {
    if (name == "lex")
        return OrderKind::lex;
    if (name == "grlex" || name == "graded-lex" || name == "deglex")
        return OrderKind::grlex;
    if (name == "grevlex" || name == "graded-reverse-lex" || name == "degrevlex")
        return OrderKind::grevlex;
    throw std::invalid_argument("unknown monomial order kind: " + name);
}

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t variables) : kind_(kind), perm_(variables) {
    std::iota(perm_.begin(), perm_.end(), 0);
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<int> permutation, std::size_t block,
                             std::vector<int> weights)
    : kind_(kind), perm_(std::move(permutation)), block_(block), weights_(std::move(weights)) {
    std::vector<int> sorted = perm_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i))
            throw std::invalid_argument("monomial order: not a permutation");
    if (block_ > perm_.size())
        throw std::invalid_argument("monomial order: block larger than variable count");
    if (!weights_.empty() && weights_.size() != perm_.size())
        throw std::invalid_argument("monomial order: weight row has wrong length");
}

int MonomialOrder::compare_range(const Exponent &a, const Exponent &b, std::size_t from, std::size_t to) const {
    if (kind_ != OrderKind::lex) {
        long da = 0;
        long db = 0;
        for (std::size_t r = from; r < to; ++r) {
            da += a[static_cast<std::size_t>(perm_[r])];
            db += b[static_cast<std::size_t>(perm_[r])];
        }
        if (da != db)
            return da < db ? -1 : 1;
    }
    if (kind_ == OrderKind::grevlex) {
        for (std::size_t r = to; r-- > from;) {
            const auto v = static_cast<std::size_t>(perm_[r]);
            if (a[v] != b[v])
                return a[v] < b[v] ? 1 : -1;
        }
        return 0;
    }
    for (std::size_t r = from; r < to; ++r) {
        const auto v = static_cast<std::size_t>(perm_[r]);
        if (a[v] != b[v])
            return a[v] < b[v] ? -1 : 1;
    }
    return 0;
}

int MonomialOrder::compare(const Exponent &a, const Exponent &b) const {
    if (!weights_.empty()) {
        long wa = 0;
        long wb = 0;
        for (std::size_t v = 0; v < weights_.size(); ++v) {
            wa += static_cast<long>(weights_[v]) * a[v];
            wb += static_cast<long>(weights_[v]) * b[v];
        }
        if (wa != wb)
            return wa < wb ? -1 : 1;
    }
    if (block_ > 0) {
        if (int c = compare_range(a, b, 0, block_); c != 0)
            return c;
        return compare_range(a, b, block_, perm_.size());
    }
    return compare_range(a, b, 0, perm_.size());
}

namespace {

std::string join(const std::vector<int> &v, int offset) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(v[i] + offset);
    }
    return out;
}

std::vector<int> split_ints(const std::string &s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

} // namespace

std::string MonomialOrder::describe() const {
    std::string out = "o " + to_string(kind_) + " " + (perm_.empty() ? std::string("-") : join(perm_, 1));
    if (!weights_.empty())
        out += " " + join(weights_, 0);
    if (block_ > 0)
        out += " block=" + std::to_string(block_);
    return out;
}

MonomialOrder MonomialOrder::parse(const std::string &line) {
    std::istringstream in(line);
    std::string tag;
    std::string kind;
    std::string perm;
    if (!(in >> tag >> kind >> perm) || tag != "o")
        throw std::invalid_argument("order line must read `o <kind> <perm> [<weights>]`");
    std::vector<int> p;
    if (perm != "-")
        for (int v : split_ints(perm))
            p.push_back(v - 1);
    std::vector<int> weights;
    std::size_t block = 0;
    std::string token;
    while (in >> token) {
        if (token.rfind("block=", 0) == 0)
            block = std::stoul(token.substr(6));
        else
            weights = split_ints(token);
    }
    return {parse_order_kind(kind), std::move(p), block, std::move(weights)};
}

// ------------------------------------------------------------- binomials

int total_degree(const Exponent &e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides(const Exponent &a, const Exponent &b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

std::string monomial_string(const Exponent &e, const std::vector<std::string> &names) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += i < names.size() ? names[i] : "y" + std::to_string(i + 1);
        if (e[i] > 1)
            out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

Binomial::Binomial(Exponent lead, Exponent trail) : lead_(std::move(lead)), trail_(std::move(trail)) {
    if (lead_.size() != trail_.size())
        throw std::invalid_argument("binomial terms over different variable counts");
}

Binomial Binomial::from_vector(const std::vector<int> &u) {
    Exponent plus(u.size(), 0);
    Exponent minus(u.size(), 0);
    for (std::size_t i = 0; i < u.size(); ++i)
        (u[i] > 0 ? plus[i] : minus[i]) = std::abs(u[i]);
    return {std::move(plus), std::move(minus)};
}

std::vector<int> Binomial::vector() const {
    std::vector<int> u(lead_.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = lead_[i] - trail_[i];
    return u;
}

int Binomial::degree() const { return std::max(total_degree(lead_), total_degree(trail_)); }

bool Binomial::homogeneous() const { return total_degree(lead_) == total_degree(trail_); }

Binomial Binomial::oriented(const MonomialOrder &o) const {
    if (o.compare(lead_, trail_) < 0)
        return {trail_, lead_};
    return *this;
}

Binomial Binomial::coprime() const {
    Binomial out = *this;
    for (std::size_t i = 0; i < lead_.size(); ++i) {
        const int c = std::min(lead_[i], trail_[i]);
        out.lead_[i] -= c;
        out.trail_[i] -= c;
    }
    return out;
}

std::string Binomial::to_string(const std::vector<std::string> &names) const {
    if (zero())
        return "0";
    return monomial_string(lead_, names) + " - " + monomial_string(trail_, names);
}

void write_binomial(std::ostream &out, const Binomial &b) {
    out << "b " << b.variables();
    for (int x : b.vector())
        out << ' ' << x;
    out << '\n';
}

Binomial parse_binomial(const std::string &line) {
    std::istringstream in(line);
    std::string tag;
    std::size_t m = 0;
    if (!(in >> tag >> m) || tag != "b")
        throw std::invalid_argument("binomial line must read `b <m> <u_1> ... <u_m>`");
    std::vector<int> u(m);
    for (auto &x : u)
        if (!(in >> x))
            throw std::invalid_argument("binomial line has fewer than m entries");
    std::string extra;
    if (in >> extra)
        throw std::invalid_argument("binomial line has more than m entries");
    return Binomial::from_vector(u);
}

int GroebnerBasis::max_degree() const {
    int d = 0;
    for (const auto &b : elements)
        d = std::max(d, b.degree());
    return d;
}

void write_groebner_basis(std::ostream &out, const GroebnerBasis &gb) {
    out << gb.order.describe() << '\n';
    for (const auto &b : gb.elements)
        write_binomial(out, b);
}

GroebnerBasis read_groebner_basis(std::istream &in) {
    GroebnerBasis gb;
    std::string line;
    bool have_order = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        if (!have_order) {
            gb.order = MonomialOrder::parse(line);
            have_order = true;
            continue;
        }
        gb.elements.push_back(parse_binomial(line).oriented(gb.order));
    }
    if (!have_order)
        throw std::invalid_argument("missing order line");
    return gb;
}

// ------------------------------------------------------------ Buchberger

namespace {

struct Mask {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static Mask of(const Exponent &e) {
        Mask m;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) {
                const std::size_t bit = i % 128;
                (bit < 64 ? m.lo : m.hi) |= std::uint64_t{1} << (bit % 64);
            }
        return m;
    }
    bool subset_of(const Mask &o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }
    bool disjoint(const Mask &o) const { return (lo & o.lo) == 0 && (hi & o.hi) == 0; }
};

Exponent lcm(const Exponent &a, const Exponent &b) {
    Exponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = std::max(a[i], b[i]);
    return out;
}

bool coprime(const Exponent &a, const Exponent &b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            return false;
    return true;
}

} // namespace

struct BuchbergerEngine::State {
    struct Element {
        Exponent lead;
        Exponent trail;
        Mask mask;
        bool active = true;
    };
    struct Pair {
        int first = -1;  // -1 marks a queued generator
        int second = -1; // generator index when first == -1
        Exponent lcm;
        Mask mask;
        bool alive = true;
    };
    using Key = std::tuple<long, long, std::uint64_t>; // degree, total degree, pair index

    MonomialOrder order;
    BuchbergerOptions options;
    std::vector<Element> basis;
    std::vector<Binomial> generators;
    std::vector<Pair> pairs;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
    std::size_t active = 0;
    bool aborted = false;

    long grade(const Exponent &e) const {
        if (options.grading.empty())
            return total_degree(e);
        long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            d += static_cast<long>(options.grading[i]) * e[i];
        return d;
    }

    void push_pair(Pair p) {
        const long deg = grade(p.lcm);
        const long tdeg = total_degree(p.lcm);
        pairs.push_back(std::move(p));
        queue.emplace(deg, tdeg, pairs.size() - 1);
    }

    void cancel(Exponent &lead, Exponent &trail) const {
        for (std::size_t i = 0; i < lead.size(); ++i) {
            const int c = std::min(lead[i], trail[i]);
            lead[i] -= c;
            trail[i] -= c;
        }
    }

    const Element *divisor_of(const Exponent &e) const {
        const Mask m = Mask::of(e);
        for (const auto &g : basis)
            if (g.active && g.mask.subset_of(m) && divides(g.lead, e))
                return &g;
        return nullptr;
    }

    // Reduces the leading term until it is irreducible; false when zero.
    bool top_reduce(Exponent &lead, Exponent &trail) const {
        if (options.cancel_common_factors)
            cancel(lead, trail);
        while (true) {
            int c = order.compare(lead, trail);
            if (c == 0)
                return false;
            if (c < 0)
                std::swap(lead, trail);
            const Element *g = divisor_of(lead);
            if (g == nullptr)
                return true;
            for (std::size_t i = 0; i < lead.size(); ++i)
                lead[i] += g->trail[i] - g->lead[i];
            if (options.cancel_common_factors)
                cancel(lead, trail);
        }
    }

    void tail_reduce(Exponent &lead, Exponent &trail) const {
        while (true) {
            const Element *g = divisor_of(trail);
            if (g == nullptr)
                return;
            for (std::size_t i = 0; i < trail.size(); ++i)
                trail[i] += g->trail[i] - g->lead[i];
            if (options.cancel_common_factors)
                cancel(lead, trail);
        }
    }

    void insert(Exponent lead, Exponent trail) {
        const int h = static_cast<int>(basis.size());
        Element e{std::move(lead), std::move(trail), {}, true};
        e.mask = Mask::of(e.lead);

        // New pairs (g, h), thinned by the chain and coprime criteria.
        struct Candidate {
            int g;
            Exponent lcm;
            Mask mask;
            bool coprime;
            bool keep = true;
        };
        std::vector<Candidate> cands;
        for (int g = 0; g < h; ++g) {
            if (!basis[g].active)
                continue;
            Exponent l = lcm(basis[g].lead, e.lead);
            Mask m = Mask::of(l);
            cands.push_back({g, std::move(l), m, basis[g].mask.disjoint(e.mask) && coprime(basis[g].lead, e.lead)});
        }
        for (std::size_t a = 0; a < cands.size(); ++a) {
            for (std::size_t b = 0; b < cands.size() && cands[a].keep; ++b) {
                if (a == b || !cands[b].mask.subset_of(cands[a].mask) || !divides(cands[b].lcm, cands[a].lcm))
                    continue;
                if (cands[b].lcm != cands[a].lcm)
                    cands[a].keep = false; // a proper divisor exists
            }
        }
        // Equal lcms: drop the whole class when one member is coprime, else keep one.
        std::map<Exponent, std::vector<std::size_t>> classes;
        for (std::size_t a = 0; a < cands.size(); ++a)
            if (cands[a].keep)
                classes[cands[a].lcm].push_back(a);
        std::vector<std::size_t> fresh;
        for (auto &[l, members] : classes) {
            const bool any_coprime =
                std::any_of(members.begin(), members.end(), [&](std::size_t a) { return cands[a].coprime; });
            if (!any_coprime)
                fresh.push_back(members.front());
        }

        // Old pairs whose lcm is a proper multiple through h.
        for (auto &p : pairs) {
            if (!p.alive || p.first < 0)
                continue;
            if (!e.mask.subset_of(p.mask) || !divides(e.lead, p.lcm))
                continue;
            if (lcm(basis[p.first].lead, e.lead) != p.lcm && lcm(basis[p.second].lead, e.lead) != p.lcm)
                p.alive = false;
        }

        for (auto &g : basis)
            if (g.active && e.mask.subset_of(g.mask) && divides(e.lead, g.lead)) {
                g.active = false;
                --active;
            }
        basis.push_back(std::move(e));
        ++active;
        if (active > options.max_size)
            throw ResourceError("Groebner basis exceeded " + std::to_string(options.max_size) + " elements");

        std::sort(fresh.begin(), fresh.end(), [&](std::size_t a, std::size_t b) { return cands[a].g < cands[b].g; });
        for (std::size_t a : fresh)
            push_pair({cands[a].g, h, std::move(cands[a].lcm), cands[a].mask, true});
    }

    void process(const Pair &p) {
        Exponent lead;
        Exponent trail;
        if (p.first < 0) {
            const Binomial &b = generators[static_cast<std::size_t>(p.second)];
            lead = b.lead();
            trail = b.trail();
        } else {
            const Element &f = basis[p.first];
            const Element &g = basis[p.second];
            lead.resize(p.lcm.size());
            trail.resize(p.lcm.size());
            for (std::size_t i = 0; i < p.lcm.size(); ++i) {
                lead[i] = p.lcm[i] - f.lead[i] + f.trail[i];
                trail[i] = p.lcm[i] - g.lead[i] + g.trail[i];
            }
        }
        if (!top_reduce(lead, trail))
            return;
        if (options.abort_above_degree >= 0 &&
            std::max(total_degree(lead), total_degree(trail)) > options.abort_above_degree) {
            aborted = true;
            return;
        }
        insert(std::move(lead), std::move(trail));
    }

    void compact() {
        if (pairs.size() < 4096)
            return;
        std::size_t alive = 0;
        for (const auto &p : pairs)
            alive += p.alive ? 1 : 0;
        if (alive * 2 > pairs.size())
            return;
        // Rebuild the queue over the surviving pairs, keeping their order.
        std::vector<Key> keys;
        while (!queue.empty()) {
            keys.push_back(queue.top());
            queue.pop();
        }
        std::vector<Pair> kept;
        for (auto &k : keys) {
            auto &p = pairs[std::get<2>(k)];
            if (!p.alive)
                continue;
            kept.push_back(std::move(p));
            queue.emplace(std::get<0>(k), std::get<1>(k), kept.size() - 1);
        }
        pairs = std::move(kept);
    }
};

BuchbergerEngine::BuchbergerEngine(MonomialOrder order, BuchbergerOptions options)
    : state_(std::make_unique<State>()) {
    if (!options.grading.empty() && options.grading.size() != order.variables())
        throw std::invalid_argument("grading has wrong length");
    state_->order = std::move(order);
    state_->options = std::move(options);
}

BuchbergerEngine::~BuchbergerEngine() = default;
BuchbergerEngine::BuchbergerEngine(BuchbergerEngine &&) noexcept = default;
BuchbergerEngine &BuchbergerEngine::operator=(BuchbergerEngine &&) noexcept = default;

void BuchbergerEngine::add(const Binomial &b) {
    if (b.variables() != state_->order.variables())
        throw std::invalid_argument("binomial and order have different variable counts");
    if (b.zero())
        return;
    state_->generators.push_back(b);
    State::Pair p;
    p.second = static_cast<int>(state_->generators.size() - 1);
    const long dl = state_->grade(b.lead());
    const long dt = state_->grade(b.trail());
    p.lcm = dl >= dt ? b.lead() : b.trail();
    state_->push_pair(std::move(p));
}

void BuchbergerEngine::complete(int degree) {
    auto &s = *state_;
    while (!s.queue.empty() && !s.aborted) {
        const auto [deg, tdeg, idx] = s.queue.top();
        if (degree >= 0 && deg > degree)
            break;
        s.queue.pop();
        if (!s.pairs[idx].alive)
            continue;
        s.pairs[idx].alive = false;
        const State::Pair p = s.pairs[idx];
        s.process(p);
        s.compact();
    }
}

bool BuchbergerEngine::aborted() const { return state_->aborted; }

bool BuchbergerEngine::reduces_to_zero(const Binomial &b) const {
    Exponent lead = b.lead();
    Exponent trail = b.trail();
    return !state_->top_reduce(lead, trail);
}

Binomial BuchbergerEngine::normal_form(const Binomial &b) const {
    Exponent lead = b.lead();
    Exponent trail = b.trail();
    if (!state_->top_reduce(lead, trail))
        return {lead, lead};
    state_->tail_reduce(lead, trail);
    return {std::move(lead), std::move(trail)};
}

std::size_t BuchbergerEngine::size() const { return state_->active; }

GroebnerBasis BuchbergerEngine::reduced_basis() const {
    const auto &s = *state_;
    GroebnerBasis gb;
    gb.order = s.order;
    gb.reduced = true;
    for (const auto &e : s.basis) {
        if (!e.active)
            continue;
        Exponent lead = e.lead;
        Exponent trail = e.trail;
        s.tail_reduce(lead, trail);
        gb.elements.emplace_back(std::move(lead), std::move(trail));
    }
    std::sort(gb.elements.begin(), gb.elements.end(), [&](const Binomial &a, const Binomial &b) {
        const int da = total_degree(a.lead());
        const int db = total_degree(b.lead());
        if (da != db)
            return da < db;
        return s.order.compare(a.lead(), b.lead()) < 0;
    });
    return gb;
}

GroebnerBasis buchberger(const std::vector<Binomial> &gens, const MonomialOrder &o, const BuchbergerOptions &options) {
    BuchbergerEngine engine(o, options);
    for (const auto &b : gens)
        engine.add(b);
    engine.complete();
    return engine.reduced_basis();
}

// --------------------------------------------------------- toric ideals

std::vector<Binomial> toric_ideal(const PointConfiguration &p) {
    const auto n = static_cast<std::size_t>(p.dimension());
    const std::size_t m = p.size();
    if (m == 0)
        return {};
    // Variables x_1..x_n, t, y_1..y_m.
    const std::size_t total = n + 1 + m;
    std::vector<int> perm(total);
    std::iota(perm.begin(), perm.end(), 0);
    BuchbergerOptions options;
    options.cancel_common_factors = true;
    options.grading.assign(total, 1);
    std::fill(options.grading.begin(), options.grading.begin() + static_cast<long>(n), 0);
    BuchbergerEngine engine(MonomialOrder(OrderKind::grevlex, perm, n + 1), options);
    for (std::size_t i = 0; i < m; ++i) {
        Exponent y(total, 0);
        Exponent xt(total, 0);
        y[n + 1 + i] = 1;
        for (std::size_t k = 0; k < n; ++k) {
            if (p.point(i)[k] < 0)
                throw std::invalid_argument("toric_ideal: negative coordinates are not supported");
            xt[k] = p.point(i)[k];
        }
        xt[n] = 1;
        engine.add({y, xt});
    }
    engine.complete();
    const MonomialOrder y_order(OrderKind::grevlex, m);
    std::vector<Binomial> out;
    for (const auto &b : engine.reduced_basis().elements) {
        bool y_only = true;
        for (std::size_t k = 0; k <= n && y_only; ++k)
            y_only = b.lead()[k] == 0 && b.trail()[k] == 0;
        if (!y_only)
            continue;
        Exponent lead(b.lead().begin() + static_cast<long>(n + 1), b.lead().end());
        Exponent trail(b.trail().begin() + static_cast<long>(n + 1), b.trail().end());
        out.push_back(Binomial(std::move(lead), std::move(trail)).oriented(y_order));
    }
    return out;
}

namespace {

bool contained(const std::vector<Binomial> &a, const std::vector<Binomial> &b, const MonomialOrder &o) {
    BuchbergerEngine engine(o);
    for (const auto &g : b)
        engine.add(g);
    engine.complete();
    return std::all_of(a.begin(), a.end(), [&](const Binomial &f) { return engine.reduces_to_zero(f); });
}

} // namespace

bool ideal_equal(const std::vector<Binomial> &a, const std::vector<Binomial> &b, const MonomialOrder &o) {
    return contained(a, b, o) && contained(b, a, o);
}

MinimalGenerators minimal_generators(const std::vector<Binomial> &gens, const MonomialOrder &o) {
    std::vector<Binomial> sorted;
    for (const auto &g : gens) {
        if (!g.homogeneous())
            throw std::invalid_argument("minimal_generators: generators must be homogeneous");
        if (!g.zero())
            sorted.push_back(g);
    }
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Binomial &a, const Binomial &b) { return a.degree() < b.degree(); });
    MinimalGenerators out;
    BuchbergerEngine engine(o);
    for (const auto &g : sorted) {
        engine.complete(g.degree());
        if (engine.reduces_to_zero(g))
            continue;
        engine.add(g);
        out.generators.push_back(g.oriented(o));
        out.mu = std::max(out.mu, g.degree());
    }
    return out;
}

InitialIdeal initial_ideal(const GroebnerBasis &gb) {
    InitialIdeal out;
    std::vector<Exponent> leads;
    for (const auto &b : gb.elements)
        if (!b.zero())
            leads.push_back(b.oriented(gb.order).lead());
    for (std::size_t i = 0; i < leads.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < leads.size() && minimal; ++j)
            if (j != i && divides(leads[j], leads[i]) && (leads[j] != leads[i] || j < i))
                minimal = false;
        if (!minimal)
            continue;
        out.squarefree = out.squarefree && std::all_of(leads[i].begin(), leads[i].end(), [](int e) { return e <= 1; });
        out.max_degree = std::max(out.max_degree, total_degree(leads[i]));
        out.generators.push_back(leads[i]);
    }
    return out;
}

QuadraticSearchResult quadratic_gb_search(const std::vector<Binomial> &gens, int budget, std::uint64_t seed,
                                          const QuadraticSearchOptions &options) {
    std::vector<Binomial> nonzero;
    for (const auto &g : gens) {
        if (!g.homogeneous())
            throw std::invalid_argument("quadratic_gb_search: generators must be homogeneous");
        if (!g.zero())
            nonzero.push_back(g);
    }
    std::size_t m = options.variables;
    if (m == 0 && !gens.empty())
        m = gens.front().variables();

    QuadraticSearchResult result;
    if (nonzero.empty()) {
        result.found = true;
        result.order = MonomialOrder(OrderKind::grevlex, m);
        result.basis.order = *result.order;
        result.basis.reduced = true;
        return result;
    }

    std::vector<int> identity(m);
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<int> reversed(identity.rbegin(), identity.rend());
    std::vector<int> occurrences(m, 0);
    for (const auto &g : nonzero)
        for (std::size_t i = 0; i < m; ++i)
            occurrences[i] += (g.lead()[i] != 0 ? 1 : 0) + (g.trail()[i] != 0 ? 1 : 0);
    std::vector<int> by_count = identity;
    std::stable_sort(by_count.begin(), by_count.end(),
                     [&](int a, int b) { return occurrences[static_cast<std::size_t>(a)] > occurrences[static_cast<std::size_t>(b)]; });

    std::vector<std::vector<int>> perms{identity, reversed, by_count};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < budget; ++i) {
        std::vector<int> p = identity;
        std::shuffle(p.begin(), p.end(), rng);
        perms.push_back(std::move(p));
    }

    std::set<std::pair<std::vector<int>, int>> tried;
    for (const auto &perm : perms) {
        for (OrderKind kind : {OrderKind::grevlex, OrderKind::lex}) {
            if (!tried.emplace(perm, static_cast<int>(kind)).second)
                continue;
            ++result.orders_tried;
            MonomialOrder order(kind, perm);
            BuchbergerOptions bo;
            bo.cancel_common_factors = options.toric;
            bo.abort_above_degree = 2;
            bo.max_size = options.max_size;
            try {
                BuchbergerEngine engine(order, bo);
                for (const auto &g : nonzero)
                    engine.add(g);
                engine.complete();
                if (engine.aborted())
                    continue;
                result.found = true;
                result.order = order;
                result.basis = engine.reduced_basis();
                return result;
            } catch (const ResourceError &) {
                continue;
            }
        }
    }
    return result;
}

} // namespace stabletoric
