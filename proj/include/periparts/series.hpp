#ifndef PERIPARTS_SERIES_HPP
#define PERIPARTS_SERIES_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "periparts/polynomial.hpp"

/* Truncated formal power series in x, optionally jointly in y, over the
 * Polynomial coefficient ring, plus the rational-expression expander that
 * produces every generating function in the library.
 *
 * All arithmetic is exact over the integers. Series division performs long
 * division and requires the denominator's constant term to be +1 or -1;
 * every denominator expanded here satisfies that after normalization, so no
 * rational coefficients ever appear. Bivariate truncation is rectangular:
 * separate bounds in x and in y.
 */

namespace periparts {

/* Finite polynomial in x and y over Polynomial, used to spell out numerators
 * and denominators before expansion. */
class PolyXY {
public:
    using Key = std::pair<int, int>;  // (x-degree, y-degree)

    PolyXY() = default;

    static PolyXY constant(Polynomial c) { return term(0, 0, std::move(c)); }
    static PolyXY x() { return term(1, 0, 1); }
    static PolyXY y() { return term(0, 1, 1); }

    static PolyXY term(int xdeg, int ydeg, Polynomial c) {
        if (xdeg < 0 || ydeg < 0)
            throw std::domain_error("negative degree");
        PolyXY out;
        if (!c.is_zero())
            out.terms_[{xdeg, ydeg}] = std::move(c);
        return out;
    }

    const std::map<Key, Polynomial>& terms() const { return terms_; }

    Polynomial coeff(int xdeg, int ydeg) const {
        auto it = terms_.find({xdeg, ydeg});
        return it == terms_.end() ? Polynomial{} : it->second;
    }

    bool pure_x() const {
        for (const auto& [key, c] : terms_)
            if (key.second != 0)
                return false;
        return true;
    }

    PolyXY& operator+=(const PolyXY& o) {
        for (const auto& [key, c] : o.terms_)
            add(key, c);
        return *this;
    }

    PolyXY& operator-=(const PolyXY& o) {
        for (const auto& [key, c] : o.terms_)
            add(key, -c);
        return *this;
    }

    friend PolyXY operator+(PolyXY a, const PolyXY& b) { return a += b; }
    friend PolyXY operator-(PolyXY a, const PolyXY& b) { return a -= b; }

    PolyXY operator-() const {
        PolyXY out;
        for (const auto& [key, c] : terms_)
            out.terms_[key] = -c;
        return out;
    }

    friend PolyXY operator*(const PolyXY& a, const PolyXY& b) {
        PolyXY out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return out;
    }

    PolyXY& operator*=(const PolyXY& o) { return *this = *this * o; }

    PolyXY pow(int e) const {
        if (e < 0)
            throw std::domain_error("negative power");
        PolyXY acc = constant(1);
        PolyXY base = *this;
        while (e > 0) {
            if (e & 1)
                acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const PolyXY&) const = default;

private:
    void add(const Key& key, Polynomial c) {
        if (c.is_zero())
            return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    std::map<Key, Polynomial> terms_;
};

/* A displayed rational formula, kept as numerator over denominator. The
 * denominator's constant term must be a unit (+1 or -1) for expansion. */
struct RationalExpr {
    PolyXY num;
    PolyXY den;
};

class TruncatedSeries {
public:
    TruncatedSeries() : TruncatedSeries(0) {}

    explicit TruncatedSeries(int order_x)
        : nx_(check_order(order_x)), ny_(0), bivariate_(false),
          cells_(static_cast<std::size_t>(order_x) + 1) {}

    TruncatedSeries(int order_x, int order_y)
        : nx_(check_order(order_x)), ny_(check_order(order_y)), bivariate_(true),
          cells_((static_cast<std::size_t>(order_x) + 1) * (static_cast<std::size_t>(order_y) + 1)) {}

    static TruncatedSeries from_poly(const PolyXY& p, int order_x) {
        if (!p.pure_x())
            throw std::domain_error("univariate expansion of a polynomial involving y");
        TruncatedSeries s(order_x);
        for (const auto& [key, c] : p.terms())
            if (key.first <= order_x)
                s.cell(key.first, 0) = c;
        return s;
    }

    static TruncatedSeries from_poly(const PolyXY& p, int order_x, int order_y) {
        TruncatedSeries s(order_x, order_y);
        for (const auto& [key, c] : p.terms())
            if (key.first <= order_x && key.second <= order_y)
                s.cell(key.first, key.second) = c;
        return s;
    }

    int order_x() const { return nx_; }
    bool bivariate() const { return bivariate_; }
    std::optional<int> order_y() const {
        return bivariate_ ? std::optional<int>(ny_) : std::nullopt;
    }

    const Polynomial& coeff(int xdeg) const {
        if (bivariate_)
            throw std::domain_error("bivariate series needs a y-degree");
        return cell(xdeg, 0);
    }

    const Polynomial& coeff(int xdeg, int ydeg) const {
        if (!bivariate_)
            throw std::domain_error("univariate series has no y-degree");
        return cell(xdeg, ydeg);
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < cells_.size(); ++i)
            cells_[i] += o.cells_[i];
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < cells_.size(); ++i)
            cells_[i] -= o.cells_[i];
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    TruncatedSeries operator-() const {
        TruncatedSeries out = *this;
        for (auto& c : out.cells_)
            c = -c;
        return out;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_shape(b);
        TruncatedSeries out = a.zero_like();
        for (int bx = 0; bx <= a.nx_; ++bx)
            for (int by = 0; by <= a.ny_; ++by) {
                const Polynomial& ca = a.cell(bx, by);
                if (ca.is_zero())
                    continue;
                for (int cx = 0; bx + cx <= a.nx_; ++cx)
                    for (int cy = 0; by + cy <= a.ny_; ++cy) {
                        const Polynomial& cb = b.cell(cx, cy);
                        if (cb.is_zero())
                            continue;
                        out.cell(bx + cx, by + cy) += ca * cb;
                    }
            }
        return out;
    }

    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    /* Exact long division; the divisor's constant term must be +1 or -1. */
    friend TruncatedSeries operator/(const TruncatedSeries& num, const TruncatedSeries& den) {
        num.require_same_shape(den);
        const int ny = num.ny_;
        const auto inv0 = row_inverse(den.row(0), ny);
        TruncatedSeries out = num.zero_like();
        std::vector<Polynomial> residue(static_cast<std::size_t>(ny) + 1);
        for (int b = 0; b <= num.nx_; ++b) {
            residue = num.row(b);
            for (int k = 1; k <= b; ++k)
                row_mul_sub(residue, den.row(k), out.row(b - k), ny);
            auto quotient = row_mul(inv0, residue, ny);
            for (int a = 0; a <= ny; ++a)
                out.cell(b, a) = std::move(quotient[static_cast<std::size_t>(a)]);
        }
        return out;
    }

    bool operator==(const TruncatedSeries&) const = default;

    TruncatedSeries substitute(Var v, const Polynomial& value) const {
        TruncatedSeries out = *this;
        for (auto& c : out.cells_)
            c = c.substitute(v, value);
        return out;
    }

    /* Symbolic d/dt followed by t = 1, applied coefficientwise. */
    TruncatedSeries derivative_t_at_one() const {
        TruncatedSeries out = *this;
        for (auto& c : out.cells_)
            c = c.derivative(Var::t).substitute(Var::t, 1);
        return out;
    }

    bool is_integer() const {
        for (const auto& c : cells_)
            if (!c.is_constant())
                return false;
        return true;
    }

    /* Coefficientwise >= 0; defined only once all marker variables are gone. */
    bool is_nonnegative() const {
        for (const auto& c : cells_) {
            auto v = c.as_integer();
            if (!v)
                throw std::domain_error("nonnegativity needs integer coefficients");
            if (*v < 0)
                return false;
        }
        return true;
    }

private:
    static int check_order(int order) {
        if (order < 0)
            throw std::domain_error("truncation order must be >= 0");
        return order;
    }

    Polynomial& cell(int xdeg, int ydeg) {
        return cells_[static_cast<std::size_t>(xdeg) * (static_cast<std::size_t>(ny_) + 1) +
                      static_cast<std::size_t>(ydeg)];
    }

    const Polynomial& cell(int xdeg, int ydeg) const {
        if (xdeg < 0 || xdeg > nx_ || ydeg < 0 || ydeg > ny_)
            throw std::domain_error("series coefficient index out of range");
        return cells_[static_cast<std::size_t>(xdeg) * (static_cast<std::size_t>(ny_) + 1) +
                      static_cast<std::size_t>(ydeg)];
    }

    TruncatedSeries zero_like() const {
        return bivariate_ ? TruncatedSeries(nx_, ny_) : TruncatedSeries(nx_);
    }

    void require_same_shape(const TruncatedSeries& o) const {
        if (nx_ != o.nx_ || ny_ != o.ny_ || bivariate_ != o.bivariate_)
            throw std::domain_error("series truncation orders must match");
    }

    // One x-degree slice, viewed as a truncated series in y.
    std::vector<Polynomial> row(int xdeg) const {
        std::vector<Polynomial> r(static_cast<std::size_t>(ny_) + 1);
        for (int a = 0; a <= ny_; ++a)
            r[static_cast<std::size_t>(a)] = cell(xdeg, a);
        return r;
    }

    static Polynomial unit_inverse(const Polynomial& c) {
        if (c == Polynomial(1) || c == Polynomial(-1))
            return c;  // +/-1 are their own inverses
        throw std::domain_error("series division needs constant term +1 or -1");
    }

    static std::vector<Polynomial> row_mul(const std::vector<Polynomial>& a,
                                           const std::vector<Polynomial>& b, int ny) {
        std::vector<Polynomial> out(static_cast<std::size_t>(ny) + 1);
        for (int i = 0; i <= ny; ++i) {
            if (a[static_cast<std::size_t>(i)].is_zero())
                continue;
            for (int j = 0; i + j <= ny; ++j)
                out[static_cast<std::size_t>(i + j)] +=
                    a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
        return out;
    }

    static void row_mul_sub(std::vector<Polynomial>& target, const std::vector<Polynomial>& a,
                            const std::vector<Polynomial>& b, int ny) {
        for (int i = 0; i <= ny; ++i) {
            if (a[static_cast<std::size_t>(i)].is_zero())
                continue;
            for (int j = 0; i + j <= ny; ++j)
                target[static_cast<std::size_t>(i + j)] -=
                    a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    }

    static std::vector<Polynomial> row_inverse(const std::vector<Polynomial>& a, int ny) {
        std::vector<Polynomial> r(static_cast<std::size_t>(ny) + 1);
        const Polynomial u = unit_inverse(a[0]);
        r[0] = u;
        for (int m = 1; m <= ny; ++m) {
            Polynomial acc;
            for (int k = 1; k <= m; ++k)
                acc += a[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(m - k)];
            r[static_cast<std::size_t>(m)] = -(u * acc);
        }
        return r;
    }

    int nx_;
    int ny_;
    bool bivariate_;
    std::vector<Polynomial> cells_;
};

inline TruncatedSeries expand(const RationalExpr& expr, int order_x) {
    return TruncatedSeries::from_poly(expr.num, order_x) /
           TruncatedSeries::from_poly(expr.den, order_x);
}

inline TruncatedSeries expand(const RationalExpr& expr, int order_x, int order_y) {
    return TruncatedSeries::from_poly(expr.num, order_x, order_y) /
           TruncatedSeries::from_poly(expr.den, order_x, order_y);
}

/* ------------------------------------------------------------------ */
/* The named generating functions.                                     */
/* ------------------------------------------------------------------ */

namespace gf {

inline PolyXY X() { return PolyXY::x(); }
inline PolyXY Y() { return PolyXY::y(); }
inline PolyXY C(long long v) { return PolyXY::constant(v); }
inline PolyXY P() { return PolyXY::constant(Polynomial::variable(Var::p)); }
inline PolyXY Q() { return PolyXY::constant(Polynomial::variable(Var::q)); }
inline PolyXY T() { return PolyXY::constant(Polynomial::variable(Var::t)); }

}  // namespace gf

/* Coefficient of x^n: sum over perimeter-n partitions of p^rep q^even, where
 * rep counts repeated parts and even counts even parts. */
inline RationalExpr repeat_even_expr() {
    using namespace gf;
    const PolyXY one = C(1);
    const PolyXY marked = (P() - one) * Q();  // (p-1)q
    RationalExpr e;
    e.num = X() - marked * (X().pow(2) + X().pow(3));
    e.den = one - P() * (one + Q()) * X() - (one - P().pow(2) * Q()) * X().pow(2) -
            (one - P()) * (one + Q()) * X().pow(3) - (P() - one).pow(2) * Q() * X().pow(4);
    return e;
}

inline TruncatedSeries repeat_even_series(int order) {
    return expand(repeat_even_expr(), order);
}

/* Coefficient of x^b y^a: sum over all partitions with b parts and largest
 * part a of p^dist q^even. This is the nested-fraction formula cleared, once,
 * into a single fraction:
 *
 *            p x y (1 - qx + qy(1 - x + px))
 *   -----------------------------------------------------
 *   (1-x)(1-qx) - (1 - x + px)(1 - qx + pqx) y^2
 *
 * The clearing is not trusted: the expansion is checked against exhaustive
 * enumeration by the verifier and the test suite. */
inline RationalExpr dist_even_expr() {
    using namespace gf;
    const PolyXY one = C(1);
    RationalExpr e;
    e.num = P() * X() * Y() * (one - Q() * X() + Q() * Y() * (one - X() + P() * X()));
    e.den = (one - X()) * (one - Q() * X()) -
            (one - X() + P() * X()) * (one - Q() * X() + P() * Q() * X()) * Y() * Y();
    return e;
}

inline TruncatedSeries dist_even_series(int order_x, int order_y) {
    return expand(dist_even_expr(), order_x, order_y);
}

/* Coefficient of x^n: sum over perimeter-n partitions of t^(number of parts
 * NOT congruent to 1 modulo d+1). */
inline RationalExpr residue_expr(int d) {
    using namespace gf;
    if (d < 1)
        throw std::domain_error("d must be >= 1");
    const PolyXY one = C(1);
    const PolyXY base = (one - T() * X()).pow(d) * (X() - one);
    RationalExpr e;
    e.num = X() * (T() * X().pow(d + 1) + base);
    e.den = (one - X() - T() * X()) * (base + X().pow(d + 1));
    return e;
}

inline TruncatedSeries residue_series(int d, int order) {
    return expand(residue_expr(d), order);
}

/* Bivariate companion: t marks the parts congruent to 1 modulo d+1 (not the
 * complement), x the number of parts, y the largest part. */
inline RationalExpr residue_xy_expr(int d) {
    using namespace gf;
    if (d < 1)
        throw std::domain_error("d must be >= 1");
    const PolyXY one = C(1);
    const PolyXY clearing = X() + Y() - one;
    RationalExpr e;
    e.num = T() * X() * Y() * (one - X()).pow(d) * clearing +
            X() * Y() * (Y().pow(d + 1) - Y() * (one - X()).pow(d));
    e.den = clearing * ((one - T() * X()) * (one - X()).pow(d) - Y().pow(d + 1));
    return e;
}

inline TruncatedSeries residue_xy_series(int d, int order_x, int order_y) {
    return expand(residue_xy_expr(d), order_x, order_y);
}

/* Coefficient of x^n: sum over perimeter-n partitions of t^(number of
 * adjacent gaps below d). */
inline RationalExpr gap_expr(int d) {
    using namespace gf;
    if (d < 1)
        throw std::domain_error("d must be >= 1");
    const PolyXY one = C(1);
    RationalExpr e;
    e.num = X();
    e.den = one - X() - T() * X() * (one - X().pow(d)) - X().pow(d + 1);
    return e;
}

inline TruncatedSeries gap_series(int d, int order) {
    return expand(gap_expr(d), order);
}

inline RationalExpr gap_xy_expr(int d) {
    using namespace gf;
    if (d < 1)
        throw std::domain_error("d must be >= 1");
    const PolyXY one = C(1);
    RationalExpr e;
    e.num = X() * Y();
    e.den = one - Y() - T() * X() * (one - Y().pow(d)) - X() * Y().pow(d);
    return e;
}

inline TruncatedSeries gap_xy_series(int d, int order_x, int order_y) {
    return expand(gap_xy_expr(d), order_x, order_y);
}

/* Coefficient of x^n: total of the not-congruent-to-1 statistic over the
 * perimeter-n family (the t-derivative of residue_series at t = 1). */
inline RationalExpr residue_total_expr(int d) {
    using namespace gf;
    if (d < 1)
        throw std::domain_error("d must be >= 1");
    const PolyXY one = C(1);
    RationalExpr e;
    e.num = X() * (one - X()) * (X().pow(d + 1) - X() * (one - X()).pow(d));
    e.den = (one - C(2) * X()).pow(2) * (X().pow(d + 1) - (one - X()).pow(d + 1));
    return e;
}

inline TruncatedSeries residue_total_series(int d, int order) {
    return expand(residue_total_expr(d), order);
}

/* Coefficient of x^n: total of the gaps-below-d statistic over the
 * perimeter-n family. */
inline RationalExpr gap_total_expr(int d) {
    using namespace gf;
    if (d < 1)
        throw std::domain_error("d must be >= 1");
    const PolyXY one = C(1);
    RationalExpr e;
    e.num = X().pow(2) * (one - X().pow(d));
    e.den = (one - C(2) * X()).pow(2);
    return e;
}

inline TruncatedSeries gap_total_series(int d, int order) {
    return expand(gap_total_expr(d), order);
}

/* The positivity witness: 1/((1-x)^(d+1) - x^(d+1)) - 1/(1-2x). Identically
 * zero for d = 0 and d = 1, coefficientwise nonnegative for every d. */
struct DeltaSeries {
    TruncatedSeries series;
    bool nonnegative = false;
};

inline DeltaSeries delta_series(int d, int order) {
    using namespace gf;
    if (d < 0)
        throw std::domain_error("d must be >= 0");
    const PolyXY one = C(1);
    const TruncatedSeries lhs =
        expand({one, (one - X()).pow(d + 1) - X().pow(d + 1)}, order);
    const TruncatedSeries rhs = expand({one, one - C(2) * X()}, order);
    DeltaSeries out{lhs - rhs, false};
    out.nonnegative = out.series.is_nonnegative();
    return out;
}

/* Coefficientwise comparison f >= g; both sides must be fully numeric. */
inline bool series_geq(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (!f.is_integer() || !g.is_integer())
        throw std::domain_error("coefficientwise comparison needs integer coefficients");
    return (f - g).is_nonnegative();
}

/* The displayed identity for the gap total minus the residue total:
 * both equal x^(d+2) (1-2x+x^(d+1)-(1-x)^(d+1)) over
 * (1-2x)^2 ((1-x)^(d+1)-x^(d+1)), which factors through 1/(1-2x) times the
 * positivity witness. Checks both routes and returns the conjunction. */
inline bool difference_identity_holds(int d, int order) {
    using namespace gf;
    if (d < 1)
        throw std::domain_error("d must be >= 1");
    const PolyXY one = C(1);

    const TruncatedSeries lhs =
        gap_total_series(d, order) - residue_total_series(d, order);

    RationalExpr closed;
    closed.num = X().pow(d + 2) *
                 (one - C(2) * X() + X().pow(d + 1) - (one - X()).pow(d + 1));
    closed.den = (one - C(2) * X()).pow(2) * ((one - X()).pow(d + 1) - X().pow(d + 1));
    const TruncatedSeries rhs_closed = expand(closed, order);

    const TruncatedSeries factored =
        TruncatedSeries::from_poly(X().pow(d + 2), order) *
        expand({one, one - C(2) * X()}, order) * delta_series(d, order).series;

    return lhs == rhs_closed && lhs == factored;
}

}  // namespace periparts

#endif
