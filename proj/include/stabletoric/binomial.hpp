#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabletoric {

using Exponent = std::vector<int>;

enum class OrderKind { lex, grlex, grevlex };

/// Monomial order on a fixed number of variables. `permutation[r]` is the
/// variable (0-based) of rank r; rank 0 is the largest variable. An
/// elimination block of size b makes the variables of ranks 0..b-1 dominate:
/// monomials are compared on the block first and on the rest after that,
/// both with `kind`. An optional weight row is compared before everything.
class MonomialOrder {
  public:
    MonomialOrder() = default;
    MonomialOrder(OrderKind kind, std::size_t variables);
    MonomialOrder(OrderKind kind, std::vector<int> permutation, std::size_t block = 0,
                  std::vector<int> weights = {});

    OrderKind kind() const { return kind_; }
    const std::vector<int> &permutation() const { return perm_; }
    std::size_t block() const { return block_; }
    const std::vector<int> &weights() const { return weights_; }
    std::size_t variables() const { return perm_.size(); }

    /// -1, 0 or 1 as a is less than, equal to or greater than b.
    int compare(const Exponent &a, const Exponent &b) const;

    /// `o <kind> <perm> [<weights>] [block=<b>]`, perm and weights comma
    /// separated, perm 1-based.
    std::string describe() const;
    static MonomialOrder parse(const std::string &line);

  private:
    int compare_range(const Exponent &a, const Exponent &b, std::size_t from, std::size_t to) const;

    OrderKind kind_ = OrderKind::grevlex;
    std::vector<int> perm_;
    std::size_t block_ = 0;
    std::vector<int> weights_;
};

std::string to_string(OrderKind kind);
OrderKind parse_order_kind(const std::string &name);

/// Pure difference binomial y^lead - y^trail with coefficients +1/-1. The
/// two monomials may share factors; the zero binomial has lead == trail.
class Binomial {
  public:
    Binomial() = default;
    Binomial(Exponent lead, Exponent trail);
    /// y^{u+} - y^{u-}.
    static Binomial from_vector(const std::vector<int> &u);

    const Exponent &lead() const { return lead_; }
    const Exponent &trail() const { return trail_; }
    std::size_t variables() const { return lead_.size(); }
    bool zero() const { return lead_ == trail_; }
    /// lead - trail.
    std::vector<int> vector() const;
    int degree() const;
    bool homogeneous() const;
    /// Same binomial up to sign with lead > trail under `o`.
    Binomial oriented(const MonomialOrder &o) const;
    /// Removes the common monomial factor.
    Binomial coprime() const;
    std::string to_string(const std::vector<std::string> &names = {}) const;

    friend bool operator==(const Binomial &, const Binomial &) = default;

  private:
    Exponent lead_;
    Exponent trail_;
};

int total_degree(const Exponent &e);
bool divides(const Exponent &a, const Exponent &b);
std::string monomial_string(const Exponent &e, const std::vector<std::string> &names = {});

/// `b <m> <u_1> ... <u_m>`.
void write_binomial(std::ostream &out, const Binomial &b);
Binomial parse_binomial(const std::string &line);

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Binomial> elements;
    bool reduced = false;

    int max_degree() const;
};

/// Order line followed by one binomial line per element.
void write_groebner_basis(std::ostream &out, const GroebnerBasis &gb);
GroebnerBasis read_groebner_basis(std::istream &in);

class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct BuchbergerOptions {
    /// Divide out common monomial factors after every step. Only valid for
    /// ideals I with I : m = I for every monomial m (toric and other prime
    /// monomial-free binomial ideals).
    bool cancel_common_factors = false;
    /// Stop as soon as an element of degree above this joins the basis;
    /// negative means never. Meaningful for homogeneous input only.
    int abort_above_degree = -1;
    std::size_t max_size = 20000;
    /// Degree used to schedule pairs; empty means the standard grading.
    std::vector<int> grading;
};

/// Incremental binomial Buchberger algorithm with the normal selection
/// strategy and the Gebauer-Moeller criteria. Generators are queued like
/// pairs, so for homogeneous input complete(d) leaves a basis that is a
/// Groebner basis up to degree d.
class BuchbergerEngine {
  public:
    BuchbergerEngine(MonomialOrder order, BuchbergerOptions options = {});
    ~BuchbergerEngine();
    BuchbergerEngine(BuchbergerEngine &&) noexcept;
    BuchbergerEngine &operator=(BuchbergerEngine &&) noexcept;

    void add(const Binomial &b);
    /// Processes every queued pair and generator of degree <= degree.
    void complete(int degree = -1);
    bool aborted() const;
    /// Top-reduces by the current basis; zero means b is in the ideal when
    /// the basis is complete up to deg b.
    bool reduces_to_zero(const Binomial &b) const;
    Binomial normal_form(const Binomial &b) const;
    GroebnerBasis reduced_basis() const;
    std::size_t size() const;

  private:
    struct State;
    std::unique_ptr<State> state_;
};

GroebnerBasis buchberger(const std::vector<Binomial> &gens, const MonomialOrder &o,
                         const BuchbergerOptions &options = {});

class PointConfiguration;

/// Reduced Groebner basis of the toric ideal under grevlex on the point
/// variables, by elimination of x and t from (y_i - x^{a_i} t).
std::vector<Binomial> toric_ideal(const PointConfiguration &p);

bool ideal_equal(const std::vector<Binomial> &a, const std::vector<Binomial> &b, const MonomialOrder &o);

struct MinimalGenerators {
    std::vector<Binomial> generators;
    int mu = 0;
};

/// Drops generators lying in the ideal of the kept ones, by increasing
/// degree. Requires homogeneous input.
MinimalGenerators minimal_generators(const std::vector<Binomial> &gens, const MonomialOrder &o);

struct InitialIdeal {
    std::vector<Exponent> generators;
    bool squarefree = true;
    int max_degree = 0;
};

InitialIdeal initial_ideal(const GroebnerBasis &gb);

struct QuadraticSearchOptions {
    /// The generators span a toric ideal; enables factor cancellation.
    bool toric = false;
    std::size_t max_size = 20000;
    /// Number of variables; 0 takes it from the generators.
    std::size_t variables = 0;
};

struct QuadraticSearchResult {
    bool found = false;
    std::optional<MonomialOrder> order;
    GroebnerBasis basis; // when found
    int orders_tried = 0;
};

/// Tries grevlex and lex under the identity, the reversed and an
/// occurrence-sorted variable order, then `budget` seeded random
/// permutations. Never concludes that no quadratic basis exists.
QuadraticSearchResult quadratic_gb_search(const std::vector<Binomial> &gens, int budget, std::uint64_t seed,
                                          const QuadraticSearchOptions &options = {});

} // namespace stabletoric
