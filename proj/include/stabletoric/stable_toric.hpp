#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stabletoric/binomial.hpp"
#include "stabletoric/graph.hpp"
#include "stabletoric/lattice.hpp"

namespace stabletoric {

inline constexpr const char *kVersion = "1.0.0";

/// Product of the variables at odd steps minus the product at even steps,
/// over the generators of edge_polytope(h). Common factors are kept.
/// Throws std::invalid_argument for odd, open or broken walks.
Binomial walk_binomial(const Walk &w, const LoopGraph &h);

/// Binomials of the even closed walks of length <= len_bound, with common
/// factors removed, deduplicated and oriented by grevlex. Walks using an
/// edge more than twice are skipped.
std::vector<Binomial> edge_toric_generators(const LoopGraph &h, int len_bound);

/// Generators of the toric ideal of the stable set polytope of g (alpha 2)
/// over the stable sets in canonical order: lifted walk binomials of the
/// complement, then y_{ij} y_k - y_{jk} y_i for paths i-j-k of the
/// complement (i < k), then y_{ij} y_0 - y_i y_j for its edges.
std::vector<Binomial> alpha2_generators(const SimpleGraph &g, int len_bound);

/// 0 for an edgeless complement, half the longest induced cycle of the
/// complement when it has one, 2 otherwise. Requires a bipartite complement.
int mu_bipartite_complement(const SimpleGraph &g);

struct CyclePair {
    std::vector<int> first;
    std::vector<int> second;
};

struct Alpha2Verdict {
    bool normal = true;
    std::optional<CyclePair> violating_pair;
};

/// Normal iff the complement satisfies the odd cycle condition. Requires
/// stability number 2.
Alpha2Verdict normality_verdict_alpha2(const SimpleGraph &g);

struct Violation {
    std::string kind;
    std::vector<int> first;
    std::vector<int> second; // empty for single-cycle violations
    int bridges = 0;
};

/// Odd hole / odd antihole pairs of the complement without bridges (and
/// antiholes of length >= 7 sharing one vertex), each deduplicated by the
/// pair of vertex sets.
std::vector<Violation> normality_necessary_audit(const SimpleGraph &g);

/// Chordless even cycles of length >= 6 of the complement, odd holes
/// sharing one vertex without a bridge, and disjoint odd holes joined by
/// exactly one bridge.
std::vector<Violation> quadratic_necessary_audit(const SimpleGraph &g);

struct NoQuadraticCertificate {
    bool certified = false;
    std::string route;  // "odd cycle condition" or "idp"
    std::string reason; // why it does not apply
    Point witness;      // homogenized
    RationalCertificate certificate;
};

/// Certified when the stable set polytope is shown nonnormal: by the odd
/// cycle condition for stability number 2, otherwise by idp_check.
NoQuadraticCertificate no_quadratic_gb_certificate(const SimpleGraph &g, int dmax);

/// Witness for two disjoint odd holes of the complement without bridges:
/// the indicator of their vertices at degree k+l+1.
Point odd_hole_pair_witness(int n, const CyclePair &pair);

/// The toric ideal of the stable set polytope equals that of the edge
/// polytope of star_graph(complement(g)) under the empty set -> loop,
/// {i} -> {i,n+1}, {i,j} -> {i,j} identification. Requires alpha 2.
bool keylemma_check(const SimpleGraph &g);

enum class NormalityKind { normal, normal_up_to, nonnormal };

std::string to_string(NormalityKind kind);

struct NormalityVerdict {
    NormalityKind kind = NormalityKind::normal_up_to;
    std::string route; // "theorem", "perfect", "idp"
    int dmax = 0;
    Point witness;
};

/// Stability number 2 uses the odd cycle condition, perfect graphs are
/// normal, everything else goes through idp_check up to dmax.
NormalityVerdict normality_verdict(const SimpleGraph &g, int dmax);

struct CliqueSumCheck {
    SimpleGraph sum;
    NormalityVerdict first;
    NormalityVerdict second;
    NormalityVerdict glued; // always the idp oracle
    /// glued nonnormal within budget <=> some part nonnormal.
    bool held = true;
    /// A disagreement that no larger budget can repair.
    bool confirmed_counterexample = false;
};

CliqueSumCheck clique_sum_normality_check(const SimpleGraph &g1, const SimpleGraph &g2,
                                          const std::vector<std::pair<int, int>> &identification, int dmax);

struct AnalysisOptions {
    int dmax = 0; // 0 means n+1
    int walk_bound = 0; // 0 means 2|E(complement)|
    std::optional<MonomialOrder> order;
    int budget = 8;
    std::uint64_t seed = 1;
};

/// Every verdict about g, serialised as JSON with stable field names.
nlohmann::ordered_json analyze(const SimpleGraph &g, const AnalysisOptions &options);

/// Names y{...} of the stable set variables of g.
std::vector<std::string> stable_set_variable_names(const SimpleGraph &g);

} // namespace stabletoric
