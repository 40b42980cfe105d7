#ifndef PERIPARTS_POLYNOMIAL_HPP
#define PERIPARTS_POLYNOMIAL_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "periparts/bigint.hpp"

/* Sparse multivariate polynomials in the three marker variables p, q, t with
 * exact integer coefficients: the coefficient ring of every truncated series.
 * No zero coefficient is ever stored. */

namespace periparts {

enum class Var : int { p = 0, q = 1, t = 2 };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::p: return "p";
        case Var::q: return "q";
        case Var::t: return "t";
    }
    return "?";
}

class Polynomial {
public:
    using Exponents = std::array<int, 3>;  // degrees in p, q, t

    Polynomial() = default;

    Polynomial(long long c) {  // NOLINT(google-explicit-constructor): constants embed freely
        if (c != 0)
            terms_[{0, 0, 0}] = c;
    }

    Polynomial(BigInt c) {  // NOLINT(google-explicit-constructor)
        if (c != 0)
            terms_[{0, 0, 0}] = std::move(c);
    }

    static Polynomial variable(Var v) {
        return monomial(exponents_for(v, 1), 1);
    }

    static Polynomial monomial(Exponents e, BigInt c) {
        Polynomial out;
        if (c != 0)
            out.terms_[e] = std::move(c);
        return out;
    }

    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
    }

    std::optional<BigInt> as_integer() const {
        if (terms_.empty())
            return BigInt(0);
        if (is_constant())
            return terms_.begin()->second;
        return std::nullopt;
    }

    BigInt coeff(Exponents e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& [e, c] : out.terms_)
            c = -c;
        return out;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return out;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(int e) const {
        if (e < 0)
            throw std::domain_error("negative polynomial power");
        Polynomial acc = 1;
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1)
                acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const Polynomial&) const = default;

    /* Replace one variable by an arbitrary polynomial. */
    Polynomial substitute(Var v, const Polynomial& value) const {
        const int slot = static_cast<int>(v);
        std::map<int, Polynomial> value_powers;  // cache value^e
        auto power = [&](int e) -> const Polynomial& {
            auto it = value_powers.find(e);
            if (it == value_powers.end())
                it = value_powers.emplace(e, value.pow(e)).first;
            return it->second;
        };
        Polynomial out;
        for (const auto& [e, c] : terms_) {
            Exponents rest = e;
            rest[static_cast<std::size_t>(slot)] = 0;
            out += monomial(rest, c) * power(e[static_cast<std::size_t>(slot)]);
        }
        return out;
    }

    Polynomial derivative(Var v) const {
        const std::size_t slot = static_cast<std::size_t>(static_cast<int>(v));
        Polynomial out;
        for (const auto& [e, c] : terms_) {
            if (e[slot] == 0)
                continue;
            Exponents d = e;
            --d[slot];
            out.add_term(d, c * e[slot]);
        }
        return out;
    }

    /* Canonical rendering, terms in ascending (p,q,t)-exponent order:
     * "5 + 5*p + 4*p^2", "-1 + p", "p*q^2", "0". */
    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0)
                    s += '-';
                first = false;
            } else {
                s += c < 0 ? " - " : " + ";
            }
            std::string vars;
            for (int slot = 0; slot < 3; ++slot) {
                const int deg = e[static_cast<std::size_t>(slot)];
                if (deg == 0)
                    continue;
                if (!vars.empty())
                    vars += '*';
                vars += var_name(static_cast<Var>(slot));
                if (deg > 1)
                    vars += '^' + std::to_string(deg);
            }
            if (vars.empty()) {
                s += mag.str();
            } else {
                if (mag != 1)
                    s += mag.str() + '*';
                s += vars;
            }
        }
        return s;
    }

private:
    static Exponents exponents_for(Var v, int deg) {
        Exponents e{0, 0, 0};
        e[static_cast<std::size_t>(static_cast<int>(v))] = deg;
        return e;
    }

    void add_term(const Exponents& e, BigInt c) {
        if (c == 0)
            return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    std::map<Exponents, BigInt> terms_;
};

}  // namespace periparts

#endif
