#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabletoric/exact.hpp"
#include "stabletoric/graph.hpp"

namespace stabletoric {

using Point = std::vector<int>;

/// Finite list of nonnegative integer points in Z^n with one label each.
/// Homogenizing appends a trailing 1 to every point.
class PointConfiguration {
  public:
    PointConfiguration() = default;
    PointConfiguration(int dimension, std::vector<Point> points, std::vector<std::string> labels);

    int dimension() const { return dimension_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Point> &points() const { return points_; }
    const Point &point(std::size_t i) const { return points_[i]; }
    const std::vector<std::string> &labels() const { return labels_; }
    Point homogenized(std::size_t i) const;
    bool zero_one() const;

  private:
    int dimension_ = 0;
    std::vector<Point> points_;
    std::vector<std::string> labels_;
};

/// Weighted sum of configuration points; coefficients are nonnegative.
using RationalCertificate = std::vector<std::pair<std::size_t, Rational>>;

/// Sum of coefficient * homogenized point; used to check certificates.
std::vector<Rational> certificate_sum(const PointConfiguration &p, const RationalCertificate &cert);

/// One 0/1 point per stable set in canonical order; labels "{i,j,...}".
PointConfiguration stable_set_polytope(const SimpleGraph &g);

/// e_i + e_j per edge and 2 e_i per loop, in LoopGraph::edges_and_loops order.
PointConfiguration edge_polytope(const LoopGraph &h);

enum class UnimodularStatus { unimodular, not_unimodular, infeasible };

struct UnimodularResult {
    UnimodularStatus status = UnimodularStatus::unimodular;
    Integer common_value;               // absolute value shared by the nonzero maximal minors seen
    std::vector<std::size_t> refuting;  // column indices of a refuting minor
    std::vector<std::string> refuting_labels;
    Integer refuting_value;
    std::uint64_t minors_checked = 0;
};

struct UnimodularOptions {
    /// Try the odd-cycle column pattern before enumerating; applies to 0/1
    /// configurations that contain the origin and every unit vector.
    bool targeted_first = true;
    /// Exhaustive enumeration only when C(m, n+1) stays below this.
    std::uint64_t exhaustive_limit = 10'000'000;
};

/// Unimodularity of the homogenized configuration: all nonzero maximal minors
/// share one absolute value. Throws std::invalid_argument when the
/// homogenized matrix is rank deficient.
UnimodularResult is_unimodular(const PointConfiguration &p, const UnimodularOptions &options = {});

struct MembershipResult {
    bool member = false;
    RationalCertificate certificate;
};

/// Exact rational cone membership of a homogenized target.
MembershipResult cone_membership(const Point &target, const PointConfiguration &p);

struct SemigroupResult {
    bool member = false;
    std::vector<std::size_t> decomposition; // point indices, with multiplicity
};

/// Whether target = sum of exactly d homogenized points, d the last
/// coordinate of target. Exhaustive search with memoised failures.
SemigroupResult semigroup_membership(const Point &target, const PointConfiguration &p);

enum class NormalityStatus { normal_up_to, nonnormal };

struct IdpVerdict {
    NormalityStatus status = NormalityStatus::normal_up_to;
    int dmax = 0;
    Point witness;                // homogenized, when nonnormal
    RationalCertificate certificate;
    std::vector<std::uint64_t> points_per_level; // index d-1 for level d
};

/// Integer decomposition check up to dilation dmax. Enumerates the lattice
/// points of every dilation d <= dmax and tests each for a decomposition into
/// d points; the first point of the cone that has none is the witness.
/// dmax 0 means dimension + 1.
IdpVerdict idp_check(const PointConfiguration &p, int dmax = 0);

enum class WitnessKind { two_antiholes, shared_vertex_antiholes, hole_antihole };

struct ProofWitness {
    Point point; // homogenized
    RationalCertificate certificate;
};

/// Explicit non-normality witness for g whose complement contains two odd
/// antiholes without common vertices (two_antiholes), two odd antiholes of
/// length >= 7 with exactly one common vertex (shared_vertex_antiholes) or an
/// odd hole followed by a disjoint odd antihole (hole_antihole), in every case
/// without bridges. Cycles are vertex lists; their order is not used.
/// Certificate indices refer to stable_set_polytope(g).
ProofWitness proof_witness(WitnessKind kind, const SimpleGraph &g, const std::vector<int> &first,
                           const std::vector<int> &second);

/// Points vanishing on `zero_coords` (1-based), with those coordinates
/// projected away.
PointConfiguration face_restriction(const PointConfiguration &p, const std::vector<int> &zero_coords);

/// `w <d> <z_1> ... <z_n>` followed by `λ <point-index> <num>/<den>` lines
/// (point indices 1-based).
void write_witness(std::ostream &out, const Point &homogenized_point, const RationalCertificate &cert);

} // namespace stabletoric
