#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "periparts/series.hpp"

#include "oracles.hpp"

using namespace periparts;
using namespace periparts::gf;

namespace {

const Polynomial p = Polynomial::variable(Var::p);
const Polynomial q = Polynomial::variable(Var::q);
const Polynomial t = Polynomial::variable(Var::t);

std::vector<BigInt> int_coeffs(const TruncatedSeries& s) {
    std::vector<BigInt> out;
    for (int n = 0; n <= s.order_x(); ++n) {
        auto v = s.coeff(n).as_integer();
        REQUIRE(v.has_value());
        out.push_back(*v);
    }
    return out;
}

Polynomial repeat_even_sum(int n) {
    Polynomial sum;
    for (const auto& parts : oracle::partitions_with_perimeter(n))
        sum += Polynomial::monomial({static_cast<int>(oracle::rep(parts)),
                                     static_cast<int>(oracle::even(parts)), 0}, 1);
    return sum;
}

}  // namespace

TEST_CASE("geometric and Fibonacci expansions") {
    const PolyXY one = C(1);
    CHECK(int_coeffs(expand({one, one - C(2) * X()}, 4)) ==
          std::vector<BigInt>{1, 2, 4, 8, 16});
    CHECK(int_coeffs(expand({X(), one - X() - X().pow(2)}, 5)) ==
          std::vector<BigInt>{0, 1, 1, 2, 3, 5});
}

TEST_CASE("division requires a unit constant term") {
    const PolyXY one = C(1);
    CHECK_THROWS_AS(expand({one, C(2) - X()}, 3), std::domain_error);
    CHECK_THROWS_AS(expand({one, X()}, 3), std::domain_error);
    // constant term -1 is fine
    CHECK(int_coeffs(expand({one, X() - one}, 3)) ==
          std::vector<BigInt>{-1, -1, -1, -1});
}

TEST_CASE("the perimeter-5 coefficient of the marked expansion") {
    const PolyXY one = C(1);
    // x / (1 - (1+p)x - (1-p)x^2): the single-statistic form
    const auto s = expand({X(), one - (one + P()) * X() - (one - P()) * X().pow(2)}, 5);
    CHECK(s.coeff(5) == 5 + 5 * p + 4 * p.pow(2) + p.pow(3) + p.pow(4));
    CHECK(s.coeff(1) == Polynomial(1));
}

TEST_CASE("joint repeat/even series against enumeration") {
    const auto s = repeat_even_series(10);
    CHECK(s.coeff(0).is_zero());
    CHECK(s.coeff(1) == Polynomial(1));
    for (int n = 1; n <= 10; ++n)
        REQUIRE(s.coeff(n) == repeat_even_sum(n));
    // both one-variable specializations of the perimeter-5 coefficient
    CHECK(s.coeff(5).substitute(Var::q, 1) ==
          5 + 5 * p + 4 * p.pow(2) + p.pow(3) + p.pow(4));
    CHECK(s.coeff(5).substitute(Var::p, 1) ==
          5 + 5 * q + 4 * q.pow(2) + q.pow(3) + q.pow(4));
}

TEST_CASE("bivariate distinct/even series") {
    const auto s = dist_even_series(6, 6);
    CHECK(s.coeff(1, 1) == p);
    CHECK(s.coeff(1, 2) == p * q);
    CHECK(s.coeff(2, 2) == p * q.pow(2) + p.pow(2) * q);
    CHECK(s.coeff(0, 0).is_zero());
    // against enumeration for total degree <= 7: length b, largest part a
    std::map<std::pair<int, int>, Polynomial> want;
    for (int n = 1; n <= 6; ++n)
        for (const auto& parts : oracle::partitions_with_perimeter(n)) {
            std::set<long long> values(parts.begin(), parts.end());
            want[{static_cast<int>(parts.size()), static_cast<int>(parts[0])}] +=
                Polynomial::monomial({static_cast<int>(values.size()),
                                      static_cast<int>(oracle::even(parts)), 0}, 1);
        }
    for (int b = 0; b <= 6; ++b)
        for (int a = 0; a + b <= 7 && a <= 6; ++a) {
            auto it = want.find({b, a});
            REQUIRE(s.coeff(b, a) == (it == want.end() ? Polynomial{} : it->second));
        }
}

TEST_CASE("residue and gap series specialize to the repeat/even display") {
    const auto residue = residue_series(1, 5);
    const auto gap = gap_series(1, 5);
    const Polynomial display = 5 + 5 * t + 4 * t.pow(2) + t.pow(3) + t.pow(4);
    CHECK(residue.coeff(5) == display);
    CHECK(gap.coeff(5) == display);
    CHECK(residue.coeff(1) == Polynomial(1));
    CHECK(gap.coeff(1) == Polynomial(1));
}

TEST_CASE("residue and gap series against enumeration") {
    for (int d = 1; d <= 4; ++d) {
        const auto residue = residue_series(d, 9);
        const auto gap = gap_series(d, 9);
        for (int n = 1; n <= 9; ++n) {
            Polynomial want_residue, want_gap;
            for (const auto& parts : oracle::partitions_with_perimeter(n)) {
                want_residue += Polynomial::monomial(
                    {0, 0, static_cast<int>(oracle::mod_prime(parts, d))}, 1);
                want_gap += Polynomial::monomial(
                    {0, 0, static_cast<int>(oracle::dif(parts, d))}, 1);
            }
            REQUIRE(residue.coeff(n) == want_residue);
            REQUIRE(gap.coeff(n) == want_gap);
        }
    }
}

TEST_CASE("bivariate residue and gap series against enumeration") {
    constexpr int total = 14;
    for (int d = 1; d <= 4; ++d) {
        const auto residue = residue_xy_series(d, total, total);
        const auto gap = gap_xy_series(d, total, total);
        std::map<std::pair<int, int>, Polynomial> want_residue, want_gap;
        for (int n = 1; n < total; ++n)
            for (const auto& parts : oracle::partitions_with_perimeter(n)) {
                const std::pair<int, int> cell{static_cast<int>(parts.size()),
                                               static_cast<int>(parts[0])};
                const long long congruent =
                    static_cast<long long>(parts.size()) - oracle::mod_prime(parts, d);
                want_residue[cell] +=
                    Polynomial::monomial({0, 0, static_cast<int>(congruent)}, 1);
                want_gap[cell] += Polynomial::monomial(
                    {0, 0, static_cast<int>(oracle::dif(parts, d))}, 1);
            }
        for (int b = 0; b <= total; ++b)
            for (int a = 0; a + b <= total; ++a) {
                auto itr = want_residue.find({b, a});
                REQUIRE(residue.coeff(b, a) ==
                        (itr == want_residue.end() ? Polynomial{} : itr->second));
                auto itg = want_gap.find({b, a});
                REQUIRE(gap.coeff(b, a) ==
                        (itg == want_gap.end() ? Polynomial{} : itg->second));
            }
    }
}

TEST_CASE("total series and derivative consistency") {
    CHECK(gap_total_series(1, 5).coeff(5).as_integer() == BigInt(20));
    CHECK(gap_total_series(2, 4).coeff(4).as_integer() == BigInt(11));
    CHECK(residue_total_series(2, 4).coeff(4).as_integer() == BigInt(11));
    for (int d = 1; d <= 4; ++d) {
        REQUIRE(gap_series(d, 16).derivative_t_at_one() == gap_total_series(d, 16));
        REQUIRE(residue_series(d, 16).derivative_t_at_one() ==
                residue_total_series(d, 16));
    }
}

TEST_CASE("specialization chain") {
    const auto joint = repeat_even_series(16);
    CHECK(joint.substitute(Var::q, 1) == gap_series(1, 16).substitute(Var::t, p));
    CHECK(joint.substitute(Var::p, 1) == residue_series(1, 16).substitute(Var::t, q));
}

TEST_CASE("positivity witness") {
    const auto d2 = delta_series(2, 6);
    CHECK(int_coeffs(d2.series) == std::vector<BigInt>{0, 1, 2, 3, 5, 10, 21});
    CHECK(d2.nonnegative);
    CHECK(int_coeffs(delta_series(3, 6).series) ==
          std::vector<BigInt>{0, 2, 6, 12, 20, 32, 56});
    CHECK(int_coeffs(delta_series(4, 6).series) ==
          std::vector<BigInt>{0, 3, 11, 27, 54, 95, 156});
    for (int d = 0; d <= 1; ++d) {
        const auto flat = delta_series(d, 30);
        CHECK(flat.nonnegative);
        for (int n = 0; n <= 30; ++n)
            REQUIRE(flat.series.coeff(n).is_zero());
    }
    for (int d = 0; d <= 8; ++d)
        REQUIRE(delta_series(d, 100).nonnegative);
    CHECK_THROWS_AS(delta_series(-1, 5), std::domain_error);
}

TEST_CASE("coefficientwise comparison") {
    const PolyXY one = C(1);
    // the binomial comparison, x/(1-x)^d >= x^d/(1-x)^d
    const auto lhs = expand({X(), (one - X()).pow(3)}, 30);
    const auto rhs = expand({X().pow(3), (one - X()).pow(3)}, 30);
    CHECK(series_geq(lhs, rhs));
    CHECK(series_geq(lhs, lhs));
    // the dominated direction restates the d=2 positivity witness
    const auto wide = expand({one, (one - X()).pow(3) - X().pow(3)}, 30);
    const auto narrow = expand({one, one - C(2) * X()}, 30);
    CHECK(series_geq(wide, narrow));
    CHECK_FALSE(series_geq(narrow, wide));
    // symbolic coefficients are rejected
    const auto symbolic = expand({T() * X(), one - X()}, 30);
    CHECK_THROWS_AS(series_geq(symbolic, symbolic), std::domain_error);
}

TEST_CASE("difference identity") {
    CHECK(difference_identity_holds(1, 20));
    CHECK(difference_identity_holds(2, 20));
    CHECK(difference_identity_holds(5, 40));
    // the d=1 difference vanishes identically
    const auto diff = gap_total_series(1, 20) - residue_total_series(1, 20);
    for (int n = 0; n <= 20; ++n)
        REQUIRE(diff.coeff(n).is_zero());
}

TEST_CASE("series ring laws on random inputs") {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto random_series = [&](int order) {
        PolyXY poly;
        for (int n = 0; n <= order; ++n)
            poly += PolyXY::term(n, 0, coeff(rng) + coeff(rng) * Polynomial::variable(Var::t));
        return TruncatedSeries::from_poly(poly, order);
    };
    for (int round = 0; round < 25; ++round) {
        const auto a = random_series(6);
        const auto b = random_series(6);
        const auto c = random_series(6);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
    }
    // division inverts multiplication when the divisor has a unit constant
    const PolyXY one = C(1);
    const auto divisor = expand({one - X() + C(3) * X().pow(2), one}, 8);
    const auto value = expand({X() + C(2) * X().pow(3), one}, 8);
    REQUIRE((value * divisor) / divisor == value);
}

TEST_CASE("shape mismatches are rejected") {
    CHECK_THROWS_AS(TruncatedSeries(3) + TruncatedSeries(4), std::domain_error);
    CHECK_THROWS_AS(TruncatedSeries(3) + TruncatedSeries(3, 2), std::domain_error);
    CHECK_THROWS_AS(TruncatedSeries(3).coeff(9), std::domain_error);
    CHECK_THROWS_AS(TruncatedSeries(3).coeff(1, 1), std::domain_error);
    CHECK_THROWS_AS(TruncatedSeries(3, 2).coeff(1), std::domain_error);
    CHECK_THROWS_AS(TruncatedSeries::from_poly(PolyXY::y(), 3), std::domain_error);
}
