#ifndef PERIPARTS_COUNTING_HPP
#define PERIPARTS_COUNTING_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "periparts/bigint.hpp"

/* Closed-form and recurrence-based counters. Every value produced here is
 * independently checkable against exhaustive enumeration; the verifier and
 * the test suite do exactly that. */

namespace periparts {

/* One row of a counting triangle: k -> count, zero entries omitted. */
struct CountTable {
    int n = 0;
    std::map<int, BigInt> values;

    BigInt at(int k) const {
        auto it = values.find(k);
        return it == values.end() ? BigInt(0) : it->second;
    }

    BigInt total() const {
        BigInt s = 0;
        for (const auto& [k, v] : values)
            s += v;
        return s;
    }

    bool operator==(const CountTable&) const = default;
};

namespace detail {

/* Rows of T(n,k) = T(n-1,k) + T(n-1,k-1) + T(n-2,k) - T(n-2,k-1) with
 * T(1,0) = 1 and everything out of range zero. Both the repeat and the
 * even statistic over the perimeter-n family satisfy this same recurrence
 * with the same initial value, which is exactly why they are
 * equidistributed; the two public tables therefore share this engine and
 * their real validation is against enumeration. */
inline std::vector<BigInt> binomial_like_row(int n) {
    if (n < 1)
        throw std::domain_error("row index must be >= 1");
    std::vector<BigInt> prev2;        // row n-2
    std::vector<BigInt> prev = {1};   // row 1
    for (int m = 2; m <= n; ++m) {
        std::vector<BigInt> row(static_cast<std::size_t>(m));
        auto get = [](const std::vector<BigInt>& r, int k) {
            return (k < 0 || k >= static_cast<int>(r.size())) ? BigInt(0) : r[static_cast<std::size_t>(k)];
        };
        for (int k = 0; k < m; ++k)
            row[static_cast<std::size_t>(k)] =
                get(prev, k) + get(prev, k - 1) + get(prev2, k) - get(prev2, k - 1);
        prev2 = std::move(prev);
        prev = std::move(row);
    }
    return prev;
}

inline CountTable table_from_row(int n, const std::vector<BigInt>& row, int first_k) {
    CountTable t;
    t.n = n;
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0)
            t.values[first_k + static_cast<int>(i)] = row[i];
    return t;
}

}  // namespace detail

/// Counts of perimeter-n partitions by number of repeated parts.
inline CountTable repeat_table(int n) {
    return detail::table_from_row(n, detail::binomial_like_row(n), 0);
}

/// Counts of perimeter-n partitions by number of even parts.
inline CountTable even_table(int n) {
    return detail::table_from_row(n, detail::binomial_like_row(n), 0);
}

/* Counts of k-extraordinary subsets of {1..n}, via the recurrence
 * C(n,k) = C(n-1,k) + sum_{i=1..k} C(n-k-2+i, i) with C(1,1) = 1 and
 * out-of-range entries zero. The diagonal C(n,n) = 1 is seeded directly
 * (only {1..n} has its n-th smallest element equal to its size); the
 * recurrence alone loses it. */
inline CountTable extraordinary_table(int n) {
    if (n < 1)
        throw std::domain_error("n must be >= 1");
    std::vector<std::vector<BigInt>> c(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m <= n; ++m)
        c[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(m) + 1, 0);
    auto get = [&](int m, int i) {
        return (m < 1 || i < 1 || i > m) ? BigInt(0)
                                         : c[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)];
    };
    for (int m = 1; m <= n; ++m) {
        c[static_cast<std::size_t>(m)][static_cast<std::size_t>(m)] = 1;
        for (int k = 1; k < m; ++k) {
            BigInt v = get(m - 1, k);
            for (int i = 1; i <= k; ++i)
                v += get(m - k - 2 + i, i);
            c[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] = v;
        }
    }
    CountTable t;
    t.n = n;
    for (int k = 1; k <= n; ++k)
        if (get(n, k) != 0)
            t.values[k] = get(n, k);
    return t;
}

/* Dense univariate polynomial with exact integer coefficients, ascending
 * degrees, trailing zeros trimmed. */
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    BigInt coeff(int k) const {
        return (k < 0 || k >= static_cast<int>(coeffs_.size()))
                   ? BigInt(0)
                   : coeffs_[static_cast<std::size_t>(k)];
    }

    BigInt operator()(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    IntPolynomial operator+(const IntPolynomial& o) const {
        std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            out[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            out[i] += o.coeffs_[i];
        return IntPolynomial(std::move(out));
    }

    IntPolynomial operator-(const IntPolynomial& o) const { return *this + (-o); }

    IntPolynomial operator-() const {
        std::vector<BigInt> out = coeffs_;
        for (auto& v : out)
            v = -v;
        return IntPolynomial(std::move(out));
    }

    IntPolynomial operator*(const IntPolynomial& o) const {
        if (is_zero() || o.is_zero())
            return {};
        std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                out[i + j] += coeffs_[i] * o.coeffs_[j];
        return IntPolynomial(std::move(out));
    }

    bool operator==(const IntPolynomial&) const = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/* Signed distribution of the repeat statistic over the perimeter-n family:
 * each partition contributes (-1)^(number of parts) p^(repeated parts).
 * Satisfies h_n = (1-p)(h_{n-1} - h_{n-2}) with h_1 = -1, h_2 = p-1. */
inline IntPolynomial signed_repeat_poly(int n) {
    if (n < 1)
        throw std::domain_error("n must be >= 1");
    IntPolynomial prev2({BigInt(-1)});           // h_1
    if (n == 1)
        return prev2;
    IntPolynomial prev({BigInt(-1), BigInt(1)});  // h_2
    const IntPolynomial one_minus_p({BigInt(1), BigInt(-1)});
    for (int m = 3; m <= n; ++m) {
        IntPolynomial cur = one_minus_p * (prev - prev2);
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

/// Total number of odd parts over all perimeter-n partitions: (n+2)*2^(n-3).
inline BigInt odd_parts_total(int n) {
    if (n < 2)
        throw std::domain_error("closed form holds for n >= 2");
    return (BigInt(n + 2) << (n - 2)) / 2;
}

/// Total number of even parts over all perimeter-n partitions: n*2^(n-3).
inline BigInt even_parts_total(int n) {
    if (n < 2)
        throw std::domain_error("closed form holds for n >= 2");
    return (BigInt(n) << (n - 2)) / 2;
}

/* Total of the gaps-below-d statistic over all perimeter-n partitions:
 * (n-1)*2^(n-2) - (n-d-1)*2^(n-d-2). The closed form is validated for
 * 1 <= d <= n-1. For d >= n every adjacent gap counts and the total
 * degenerates to the limit value (n-1)*2^(n-2); that value is returned only
 * when explicitly requested. */
inline BigInt small_gap_total(int n, int d, bool allow_degenerate = false) {
    if (n < 1 || d < 1)
        throw std::domain_error("n and d must be >= 1");
    if (d > n - 1 && !allow_degenerate)
        throw std::domain_error("closed form requires d <= n-1 (or the degenerate-range flag)");
    const BigInt first = n >= 2 ? BigInt(n - 1) << (n - 2) : BigInt(0);
    const BigInt second = n - d - 1 >= 1 ? BigInt(n - d - 1) << (n - d - 2) : BigInt(0);
    return first - second;
}

inline BigInt fibonacci(int n) {
    if (n < 1)
        throw std::domain_error("n must be >= 1");
    BigInt a = 1, b = 1;  // F_1, F_2
    for (int i = 3; i <= n; ++i) {
        BigInt c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return n == 1 ? a : b;
}

}  // namespace periparts

#endif
