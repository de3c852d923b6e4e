#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace stabletoric {

using Integer = mpz_class;
using Rational = mpq_class;

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination. Small matrices whose Hadamard bound fits in 62 bits run on
/// machine integers with 128-bit intermediates; everything else on GMP.
Integer determinant(const std::vector<std::vector<std::int64_t>> &matrix);
Integer determinant(std::vector<std::vector<Integer>> matrix);

/// Rank over the rationals.
int rank(const std::vector<std::vector<std::int64_t>> &matrix);

/// Exact feasibility of { x >= 0 : A x = b } by a Phase I simplex with
/// Bland's rule. Returns a basic feasible solution or nothing.
std::optional<std::vector<Rational>> nonnegative_solution(const std::vector<std::vector<Rational>> &a,
                                                          const std::vector<Rational> &b);

} // namespace stabletoric
