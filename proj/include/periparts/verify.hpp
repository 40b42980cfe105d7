#ifndef PERIPARTS_VERIFY_HPP
#define PERIPARTS_VERIFY_HPP

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "periparts/bijections.hpp"
#include "periparts/counting.hpp"
#include "periparts/enumerate.hpp"
#include "periparts/format.hpp"
#include "periparts/series.hpp"

/* Theorem-level checkers. Every checker recomputes what it needs from
 * exhaustive enumeration, the ground truth throughout, so a bug in a closed
 * form, a recurrence, a bijection or a series cannot hide behind itself.
 * A failing report always carries the smallest offending object as a witness.
 */

namespace periparts {

struct VerificationReport {
    std::string theorem;
    std::vector<std::pair<std::string, std::int64_t>> params;
    bool pass = false;
    std::optional<std::string> witness;  // present exactly when the check fails
    std::vector<std::pair<std::string, std::string>> detail;
    std::chrono::duration<double> elapsed{};
};

namespace detail {

class ReportBuilder {
public:
    ReportBuilder(std::string theorem,
                  std::vector<std::pair<std::string, std::int64_t>> params) {
        report_.theorem = std::move(theorem);
        report_.params = std::move(params);
        report_.pass = true;
        start_ = std::chrono::steady_clock::now();
    }

    void fail(std::string witness) {
        if (report_.pass) {
            report_.pass = false;
            report_.witness = std::move(witness);
        }
    }

    void note(std::string key, std::string value) {
        report_.detail.emplace_back(std::move(key), std::move(value));
    }

    VerificationReport finish() {
        report_.elapsed = std::chrono::steady_clock::now() - start_;
        return std::move(report_);
    }

private:
    VerificationReport report_;
    std::chrono::steady_clock::time_point start_;
};

inline std::string distribution_text(const std::vector<BigInt>& dist) {
    std::string s = "(";
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (i)
            s += ',';
        s += dist[i].str();
    }
    s += ')';
    return s;
}

/* Counts by statistic value over the perimeter-n family. */
template <class Stat>
std::vector<BigInt> statistic_distribution(int n, Stat&& stat) {
    std::vector<BigInt> dist;
    for_each_with_perimeter(n, [&](const Partition& p) {
        const auto v = static_cast<std::size_t>(stat(p));
        if (v >= dist.size())
            dist.resize(v + 1, BigInt(0));
        ++dist[v];
    });
    return dist;
}

template <class Stat>
std::vector<BigInt> size_statistic_distribution(int n, Stat&& stat) {
    std::vector<BigInt> dist;
    for_each_of_size(n, [&](const Partition& p) {
        const auto v = static_cast<std::size_t>(stat(p));
        if (v >= dist.size())
            dist.resize(v + 1, BigInt(0));
        ++dist[v];
    });
    return dist;
}

inline void compare_distributions(ReportBuilder& rb, const std::vector<BigInt>& lhs,
                                  const std::vector<BigInt>& rhs, const std::string& label) {
    const std::size_t width = std::max(lhs.size(), rhs.size());
    for (std::size_t k = 0; k < width; ++k) {
        const BigInt a = k < lhs.size() ? lhs[k] : BigInt(0);
        const BigInt b = k < rhs.size() ? rhs[k] : BigInt(0);
        if (a != b) {
            rb.fail(label + " differ at k=" + std::to_string(k) + ": " + a.str() +
                    " vs " + b.str());
            return;
        }
    }
}

}  // namespace detail

/* Equinumerosity of all-odd-parts and all-distinct-parts partitions with
 * perimeter n. */
inline VerificationReport check_straub(int n) {
    detail::ReportBuilder rb("straub", {{"n", n}});
    BigInt all_odd = 0, all_distinct = 0;
    for_each_with_perimeter(n, [&](const Partition& p) {
        bool odd = true;
        for (auto v : p.parts())
            if (v % 2 == 0) {
                odd = false;
                break;
            }
        if (odd)
            ++all_odd;
        if (repeated_parts(p) == 0)
            ++all_distinct;
    });
    rb.note("odd-parts", all_odd.str());
    rb.note("distinct-parts", all_distinct.str());
    if (all_odd != all_distinct)
        rb.fail("counts differ: " + all_odd.str() + " vs " + all_distinct.str());
    return rb.finish();
}

/* Equinumerosity of all-parts-congruent-to-1 (mod d+1) and minimal-gap >= d
 * partitions with perimeter n. */
inline VerificationReport check_fu_tang(int n, int d) {
    detail::ReportBuilder rb("fu-tang", {{"n", n}, {"d", d}});
    BigInt all_congruent = 0, all_spread = 0;
    for_each_with_perimeter(n, [&](const Partition& p) {
        if (parts_not_congruent_one(p, d) == 0)
            ++all_congruent;
        if (gaps_below(p, d) == 0)
            ++all_spread;
    });
    rb.note("congruent", all_congruent.str());
    rb.note("min-gap", all_spread.str());
    if (all_congruent != all_spread)
        rb.fail("counts differ: " + all_congruent.str() + " vs " + all_spread.str());
    return rb.finish();
}

/* Equidistribution of repeated parts and even parts over the perimeter-n
 * family. */
inline VerificationReport check_rep_even(int n) {
    detail::ReportBuilder rb("rep-even", {{"n", n}});
    const auto rep = detail::statistic_distribution(n, [](const Partition& p) { return repeated_parts(p); });
    const auto even = detail::statistic_distribution(n, [](const Partition& p) { return even_parts(p); });
    rb.note("rep", detail::distribution_text(rep));
    rb.note("even", detail::distribution_text(even));
    detail::compare_distributions(rb, rep, even, "distributions");
    return rb.finish();
}

/* Same with the by-value statistics: repeated values vs even values. */
inline VerificationReport check_rep_even_valued(int n) {
    detail::ReportBuilder rb("rep-even-valued", {{"n", n}});
    const auto rep = detail::statistic_distribution(n, [](const Partition& p) { return repeated_values(p); });
    const auto even = detail::statistic_distribution(n, [](const Partition& p) { return even_values(p); });
    rb.note("rep-valued", detail::distribution_text(rep));
    rb.note("even-valued", detail::distribution_text(even));
    detail::compare_distributions(rb, rep, even, "distributions");
    return rb.finish();
}

/* The by-value equidistribution over partitions of n (rather than partitions
 * with perimeter n). */
inline VerificationReport check_wilf(int n) {
    detail::ReportBuilder rb("wilf", {{"n", n}});
    const auto rep = detail::size_statistic_distribution(n, [](const Partition& p) { return repeated_values(p); });
    const auto even = detail::size_statistic_distribution(n, [](const Partition& p) { return even_values(p); });
    rb.note("rep-valued", detail::distribution_text(rep));
    rb.note("even-valued", detail::distribution_text(even));
    detail::compare_distributions(rb, rep, even, "distributions");
    return rb.finish();
}

/* Total gaps below d dominate total parts not congruent to 1 (mod d+1);
 * the slack must equal the size of the injection complement. */
inline VerificationReport check_ineq(int n, int d) {
    detail::ReportBuilder rb("ineq", {{"n", n}, {"d", d}});
    BigInt gap_total = 0, residue_total = 0;
    for_each_with_perimeter(n, [&](const Partition& p) {
        gap_total += gaps_below(p, d);
        residue_total += parts_not_congruent_one(p, d);
    });
    rb.note("gap-total", gap_total.str());
    rb.note("residue-total", residue_total.str());
    const BigInt slack = gap_total - residue_total;
    rb.note("slack", slack.str());
    if (gap_total < residue_total)
        rb.fail("inequality fails: " + gap_total.str() + " < " + residue_total.str());
    const auto complement = injection_complement(n, d);
    if (slack != BigInt(complement.size()))
        rb.fail("slack " + slack.str() + " != complement size " +
                std::to_string(complement.size()));
    return rb.finish();
}

/* The d = 1 boundary-word bijection: a perimeter-preserving permutation that
 * carries repeated parts to even parts, repeated values to even values, and
 * round-trips with its inverse. */
inline VerificationReport check_bijection(int n) {
    detail::ReportBuilder rb("phi", {{"n", n}});
    const std::uint64_t total = perimeter_family_size(n);
    std::vector<bool> hit(total, false);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const auto w = boundary_word_at(n, idx);
        const auto image = bit_bijection(w, 1);
        if (image.size() != w.size()) {
            rb.fail("length changed at " + to_text(w));
            break;
        }
        if (bit_bijection_inverse(image, 1) != w) {
            rb.fail("round trip failed at " + to_text(w));
            break;
        }
        std::uint64_t image_idx = 0;
        for (std::size_t i = 1; i + 1 < image.size(); ++i)
            image_idx = (image_idx << 1) | image[i];
        if (hit[image_idx]) {
            rb.fail("image collision at " + to_text(w));
            break;
        }
        hit[image_idx] = true;
        const Partition before = from_bits(w);
        const Partition after = from_bits(image);
        if (repeated_parts(before) != even_parts(after)) {
            rb.fail("rep/even mismatch at " + to_text(before));
            break;
        }
        if (repeated_values(before) != even_values(after)) {
            rb.fail("valued rep/even mismatch at " + to_text(before));
            break;
        }
    }
    return rb.finish();
}

/* The general-d bijection: permutation, gap statistic dominates the residue
 * statistic of the image, and the two vanish together. */
inline VerificationReport check_bijection_d(int n, int d) {
    detail::ReportBuilder rb("phi-d", {{"n", n}, {"d", d}});
    const std::uint64_t total = perimeter_family_size(n);
    std::vector<bool> hit(total, false);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const auto w = boundary_word_at(n, idx);
        const auto image = bit_bijection(w, d);
        if (bit_bijection_inverse(image, d) != w) {
            rb.fail("round trip failed at " + to_text(w));
            break;
        }
        std::uint64_t image_idx = 0;
        for (std::size_t i = 1; i + 1 < image.size(); ++i)
            image_idx = (image_idx << 1) | image[i];
        if (hit[image_idx]) {
            rb.fail("image collision at " + to_text(w));
            break;
        }
        hit[image_idx] = true;
        const auto gaps = gaps_below(from_bits(w), d);
        const auto residues = parts_not_congruent_one(from_bits(image), d);
        if (gaps < residues) {
            rb.fail("domination fails at " + to_text(w));
            break;
        }
        if ((gaps == 0) != (residues == 0)) {
            rb.fail("vanishing equivalence fails at " + to_text(w));
            break;
        }
    }
    return rb.finish();
}

/* The labeled injection: injective and into the gap-labeled family, with the
 * set-difference complement tiling what the image misses. */
inline VerificationReport check_injection(int n, int d) {
    detail::ReportBuilder rb("xi", {{"n", n}, {"d", d}});
    const auto source = noncongruent_labelings(n, d);
    const auto target = small_gap_labelings(n, d);
    const std::set<LabeledPartition> target_set(target.begin(), target.end());
    std::set<LabeledPartition> image;
    for (const auto& lp : source) {
        auto mapped = labeled_injection(lp, d);
        if (!target_set.contains(mapped)) {
            rb.fail("image escapes target family at " + to_text(lp));
            break;
        }
        if (!image.insert(mapped).second) {
            rb.fail("not injective at " + to_text(lp));
            break;
        }
    }
    const auto complement = injection_complement(n, d);
    rb.note("source", std::to_string(source.size()));
    rb.note("target", std::to_string(target.size()));
    rb.note("complement", std::to_string(complement.size()));
    if (image.size() + complement.size() != target.size())
        rb.fail("image and complement do not tile the target family");
    return rb.finish();
}

/* The closed description of the missed elements, checked literally against
 * the set difference. This fails from (n, d) = (7, 3) on: the description
 * undercounts whenever a starred part sits under a non-congruent part whose
 * gap exceeds its residue bound (see characterized_complement). */
inline VerificationReport check_injection_characterization(int n, int d) {
    detail::ReportBuilder rb("xi-characterization", {{"n", n}, {"d", d}});
    const auto difference = injection_complement(n, d);
    const auto described = characterized_complement(n, d);
    rb.note("set-difference", std::to_string(difference.size()));
    rb.note("described", std::to_string(described.size()));
    const std::set<LabeledPartition> described_set(described.begin(), described.end());
    for (const auto& lp : difference)
        if (!described_set.contains(lp)) {
            rb.fail("missed element not in the described set: " + to_text(lp));
            break;
        }
    const std::set<LabeledPartition> difference_set(difference.begin(), difference.end());
    for (const auto& lp : described)
        if (!difference_set.contains(lp)) {
            rb.fail("described element is actually covered: " + to_text(lp));
            break;
        }
    return rb.finish();
}

/* Recurrence tables against enumeration, and the extraordinary-subset
 * triangle against both its own recurrence row and the shifted table. */
inline VerificationReport check_tables(int n) {
    detail::ReportBuilder rb("tables", {{"n", n}});
    const auto by_rep = detail::statistic_distribution(n, [](const Partition& p) { return repeated_parts(p); });
    const auto by_even = detail::statistic_distribution(n, [](const Partition& p) { return even_parts(p); });
    const auto a = repeat_table(n);
    const auto b = even_table(n);
    const auto c = extraordinary_table(n);
    if (a != b)
        rb.fail("repeat and even tables differ");
    for (int k = 0; k < n; ++k) {
        const BigInt enum_rep = k < static_cast<int>(by_rep.size()) ? by_rep[static_cast<std::size_t>(k)] : BigInt(0);
        const BigInt enum_even = k < static_cast<int>(by_even.size()) ? by_even[static_cast<std::size_t>(k)] : BigInt(0);
        if (a.at(k) != enum_rep) {
            rb.fail("repeat table differs from enumeration at k=" + std::to_string(k));
            break;
        }
        if (b.at(k) != enum_even) {
            rb.fail("even table differs from enumeration at k=" + std::to_string(k));
            break;
        }
        if (c.at(k + 1) != a.at(k)) {
            rb.fail("extraordinary table shift fails at k=" + std::to_string(k));
            break;
        }
    }
    if (a.total() != BigInt(perimeter_family_size(n)))
        rb.fail("table row total is not the family size");
    return rb.finish();
}

/* The signed repeat polynomial from its recurrence against the enumerated
 * signed sum. */
inline VerificationReport check_signed_poly(int n) {
    detail::ReportBuilder rb("h-poly", {{"n", n}});
    const auto h = signed_repeat_poly(n);
    std::map<int, BigInt> expected;
    for_each_with_perimeter(n, [&](const Partition& p) {
        const int sign = p.length() % 2 == 0 ? 1 : -1;
        expected[static_cast<int>(repeated_parts(p))] += sign;
    });
    for (int k = 0; k <= std::max(h.degree(), n); ++k) {
        auto it = expected.find(k);
        const BigInt want = it == expected.end() ? BigInt(0) : it->second;
        if (h.coeff(k) != want) {
            rb.fail("coefficient differs at k=" + std::to_string(k) + ": " +
                    h.coeff(k).str() + " vs " + want.str());
            break;
        }
    }
    return rb.finish();
}

/* Closed-form totals against enumerated totals. */
inline VerificationReport check_closed_forms(int n, int d) {
    detail::ReportBuilder rb("closed-forms", {{"n", n}, {"d", d}});
    BigInt odd = 0, even = 0, gaps = 0;
    for_each_with_perimeter(n, [&](const Partition& p) {
        for (auto v : p.parts())
            (v % 2 == 0 ? even : odd) += 1;
        gaps += gaps_below(p, d);
    });
    if (n >= 2) {
        if (odd_parts_total(n) != odd)
            rb.fail("odd-part total differs: " + odd_parts_total(n).str() + " vs " + odd.str());
        if (even_parts_total(n) != even)
            rb.fail("even-part total differs: " + even_parts_total(n).str() + " vs " + even.str());
    }
    const BigInt closed = small_gap_total(n, d, /*allow_degenerate=*/d > n - 1);
    if (closed != gaps)
        rb.fail("gap total differs: " + closed.str() + " vs " + gaps.str());
    if (BigInt(small_gap_labelings(n, d).size()) != gaps)
        rb.fail("gap-labeled family size differs from the enumerated total");
    return rb.finish();
}

namespace detail {

inline Polynomial repeat_even_monomial(const Partition& p) {
    return Polynomial::monomial({static_cast<int>(repeated_parts(p)),
                                 static_cast<int>(even_parts(p)), 0}, 1);
}

}  // namespace detail

/* Every univariate generating function against brute-force sums up to the
 * given order, plus derivative consistency of the totals. */
inline VerificationReport check_series(int d, int order) {
    detail::ReportBuilder rb("series", {{"d", d}, {"order", order}});
    std::vector<Polynomial> want_rep_even(static_cast<std::size_t>(order) + 1);
    std::vector<Polynomial> want_residue(static_cast<std::size_t>(order) + 1);
    std::vector<Polynomial> want_gap(static_cast<std::size_t>(order) + 1);
    std::vector<BigInt> want_residue_total(static_cast<std::size_t>(order) + 1, BigInt(0));
    std::vector<BigInt> want_gap_total(static_cast<std::size_t>(order) + 1, BigInt(0));
    for (int n = 1; n <= order; ++n) {
        for_each_with_perimeter(n, [&](const Partition& p) {
            const auto idx = static_cast<std::size_t>(n);
            want_rep_even[idx] += detail::repeat_even_monomial(p);
            want_residue[idx] += Polynomial::monomial(
                {0, 0, static_cast<int>(parts_not_congruent_one(p, d))}, 1);
            want_gap[idx] += Polynomial::monomial(
                {0, 0, static_cast<int>(gaps_below(p, d))}, 1);
            want_residue_total[idx] += parts_not_congruent_one(p, d);
            want_gap_total[idx] += gaps_below(p, d);
        });
    }
    const auto rep_even = repeat_even_series(order);
    const auto residue = residue_series(d, order);
    const auto gap = gap_series(d, order);
    const auto residue_total = residue_total_series(d, order);
    const auto gap_total = gap_total_series(d, order);
    for (int n = 0; n <= order; ++n) {
        const auto idx = static_cast<std::size_t>(n);
        if (rep_even.coeff(n) != want_rep_even[idx]) {
            rb.fail("repeat/even series differs at x^" + std::to_string(n));
            break;
        }
        if (residue.coeff(n) != want_residue[idx]) {
            rb.fail("residue series differs at x^" + std::to_string(n));
            break;
        }
        if (gap.coeff(n) != want_gap[idx]) {
            rb.fail("gap series differs at x^" + std::to_string(n));
            break;
        }
        if (residue_total.coeff(n).as_integer() != want_residue_total[idx]) {
            rb.fail("residue total series differs at x^" + std::to_string(n));
            break;
        }
        if (gap_total.coeff(n).as_integer() != want_gap_total[idx]) {
            rb.fail("gap total series differs at x^" + std::to_string(n));
            break;
        }
    }
    if (residue.derivative_t_at_one() != residue_total)
        rb.fail("residue total is not the t-derivative of the distribution series");
    if (gap.derivative_t_at_one() != gap_total)
        rb.fail("gap total is not the t-derivative of the distribution series");
    if (!difference_identity_holds(d, order))
        rb.fail("difference identity fails");
    return rb.finish();
}

/* The bivariate distinct/even expansion against brute force up to a total
 * degree. */
inline VerificationReport check_series_xy(int order) {
    detail::ReportBuilder rb("series-xy", {{"order", order}});
    const auto series = dist_even_series(order, order);
    std::map<std::pair<int, int>, Polynomial> want;
    for (int n = 1; n < order; ++n) {
        for_each_with_perimeter(n, [&](const Partition& p) {
            want[{static_cast<int>(p.length()), static_cast<int>(p.largest())}] +=
                Polynomial::monomial({static_cast<int>(distinct_parts(p)),
                                      static_cast<int>(even_parts(p)), 0}, 1);
        });
    }
    for (int b = 0; b <= order; ++b) {
        for (int a = 0; a + b <= order; ++a) {
            auto it = want.find({b, a});
            const Polynomial expect = it == want.end() ? Polynomial{} : it->second;
            if (series.coeff(b, a) != expect) {
                rb.fail("bivariate expansion differs at x^" + std::to_string(b) +
                        " y^" + std::to_string(a));
                return rb.finish();
            }
        }
    }
    return rb.finish();
}

/* Positivity witness and the binomial comparison lemma. */
inline VerificationReport check_delta(int d, int order) {
    detail::ReportBuilder rb("delta", {{"d", d}, {"order", order}});
    const auto delta = delta_series(d, order);
    if (!delta.nonnegative)
        rb.fail("negative coefficient in the positivity witness");
    if (d <= 1) {
        bool zero = true;
        for (int n = 0; n <= order; ++n)
            if (!delta.series.coeff(n).is_zero())
                zero = false;
        if (!zero)
            rb.fail("witness should vanish identically for d <= 1");
    }
    return rb.finish();
}

inline VerificationReport check_binomial_lemma(int d, int order) {
    detail::ReportBuilder rb("binomial-lemma", {{"d", d}, {"order", order}});
    using namespace gf;
    const PolyXY one = C(1);
    const auto lhs = expand({X(), (one - X()).pow(d)}, order);
    const auto rhs = expand({X().pow(d), (one - X()).pow(d)}, order);
    if (!series_geq(lhs, rhs))
        rb.fail("binomial comparison fails");
    return rb.finish();
}

/* The enumerated joint distribution of the gap and residue statistics, the
 * data behind the open question of a joint generating function. */
inline std::map<std::pair<std::int64_t, std::int64_t>, BigInt>
joint_gap_residue_counts(int n, int d) {
    std::map<std::pair<std::int64_t, std::int64_t>, BigInt> counts;
    for_each_with_perimeter(n, [&](const Partition& p) {
        ++counts[{gaps_below(p, d), parts_not_congruent_one(p, d)}];
    });
    return counts;
}

/* Run every checker over the parameter grid. Grid points are independent and
 * execute on `jobs` threads; the merged order is deterministic. */
inline std::vector<VerificationReport> check_all(int n_max, int d_max, int order,
                                                 int jobs = 1) {
    if (n_max < 1 || d_max < 1 || order < 1)
        throw std::domain_error("grid bounds must be >= 1");
    std::vector<std::function<VerificationReport()>> tasks;
    for (int n = 1; n <= n_max; ++n) {
        tasks.push_back([n] { return check_straub(n); });
        tasks.push_back([n] { return check_rep_even(n); });
        tasks.push_back([n] { return check_rep_even_valued(n); });
        tasks.push_back([n] { return check_wilf(n); });
        tasks.push_back([n] { return check_bijection(n); });
        tasks.push_back([n] { return check_tables(n); });
        tasks.push_back([n] { return check_signed_poly(n); });
        for (int d = 1; d <= d_max; ++d) {
            tasks.push_back([n, d] { return check_fu_tang(n, d); });
            tasks.push_back([n, d] { return check_ineq(n, d); });
            tasks.push_back([n, d] { return check_bijection_d(n, d); });
            tasks.push_back([n, d] { return check_injection(n, d); });
            tasks.push_back([n, d] { return check_injection_characterization(n, d); });
            tasks.push_back([n, d] { return check_closed_forms(n, d); });
        }
    }
    tasks.push_back([order] { return check_series_xy(order); });
    for (int d = 1; d <= d_max; ++d) {
        tasks.push_back([d, order] { return check_series(d, order); });
        tasks.push_back([d, order] { return check_delta(d, order); });
        tasks.push_back([d, order] { return check_binomial_lemma(d, order); });
    }

    std::vector<VerificationReport> reports(tasks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            reports[i] = tasks[i]();
        return reports;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            reports[i] = tasks[i]();
        }
    };
    std::vector<std::thread> pool;
    const int threads = std::min<int>(jobs, static_cast<int>(tasks.size()));
    pool.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    return reports;
}

}  // namespace periparts

#endif
