#include "stabletoric/exact.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace stabletoric {

namespace {

bool fits_machine_bareiss(const std::vector<std::vector<std::int64_t>> &m) {
    // Every Bareiss intermediate is a minor, bounded by the Hadamard bound.
    double log2_bound = 0.0;
    for (const auto &row : m) {
        long double sq = 0;
        for (auto v : row)
            sq += static_cast<long double>(v) * static_cast<long double>(v);
        if (sq == 0)
            return true;
        log2_bound += 0.5 * std::log2(static_cast<double>(sq));
    }
    return log2_bound < 62.0;
}

Integer bareiss_machine(std::vector<std::vector<std::int64_t>> a) {
    const std::size_t n = a.size();
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                const __int128 num = static_cast<__int128>(a[i][j]) * a[k][k] - static_cast<__int128>(a[i][k]) * a[k][j];
                a[i][j] = static_cast<std::int64_t>(num / prev);
            }
        prev = a[k][k];
    }
    return Integer(static_cast<long>(sign * a[n - 1][n - 1]));
}

} // namespace

Integer determinant(std::vector<std::vector<Integer>> a) {
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    for (const auto &row : a)
        if (row.size() != n)
            throw std::invalid_argument("determinant: matrix is not square");
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Integer determinant(const std::vector<std::vector<std::int64_t>> &m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    for (const auto &row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant: matrix is not square");
    if (fits_machine_bareiss(m))
        return bareiss_machine(m);
    std::vector<std::vector<Integer>> big(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            big[i][j] = Integer(static_cast<long>(m[i][j]));
    return determinant(std::move(big));
}

int rank(const std::vector<std::vector<std::int64_t>> &m) {
    if (m.empty())
        return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = Rational(static_cast<long>(m[i][j]));
    int r = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
        std::size_t pivot = static_cast<std::size_t>(r);
        while (pivot < rows && a[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[static_cast<std::size_t>(r)]);
        auto &prow = a[static_cast<std::size_t>(r)];
        for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows; ++i) {
            if (a[i][c] == 0)
                continue;
            const Rational f = a[i][c] / prow[c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * prow[j];
        }
        ++r;
    }
    return r;
}

std::optional<std::vector<Rational>> nonnegative_solution(const std::vector<std::vector<Rational>> &a,
                                                          const std::vector<Rational> &b) {
    const std::size_t rows = a.size();
    if (b.size() != rows)
        throw std::invalid_argument("nonnegative_solution: dimension mismatch");
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    if (rows == 0)
        return std::vector<Rational>(cols);

    // Tableau [A | I | b] with one artificial per row; row signs make b >= 0.
    const std::size_t width = cols + rows + 1;
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols)
            throw std::invalid_argument("nonnegative_solution: ragged matrix");
        const int s = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < cols; ++j)
            t[i][j] = s * a[i][j];
        t[i][cols + i] = 1;
        t[i][width - 1] = s * b[i];
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i)
        basis[i] = cols + i;

    // Reduced costs of the Phase I objective (sum of artificials).
    std::vector<Rational> cost(width);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < width; ++j)
            if (j < cols || j == width - 1)
                cost[j] -= t[i][j];

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == width)
            break;
        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0)
                continue;
            Rational ratio = t[i][width - 1] / t[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows)
            break; // unbounded direction; cannot happen for a bounded-below objective
        const Rational piv = t[leave][enter];
        for (auto &v : t[leave])
            v /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0)
                continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0)
                    t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            const Rational f = cost[enter];
            for (std::size_t j = 0; j < width; ++j)
                if (t[leave][j] != 0)
                    cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    if (cost[width - 1] != 0)
        return std::nullopt; // positive artificial sum at optimum
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] < cols)
            x[basis[i]] = t[i][width - 1];
    return x;
}

} // namespace stabletoric
