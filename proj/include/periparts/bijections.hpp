#ifndef PERIPARTS_BIJECTIONS_HPP
#define PERIPARTS_BIJECTIONS_HPP

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "periparts/enumerate.hpp"
#include "periparts/partition.hpp"

/* The recursive boundary-word bijection (CLI name "phi") and its inverse,
 * for every parameter d >= 1, together with the induced map on partitions,
 * orbit iteration, and the labeled-partition injection (CLI name "xi").
 *
 * The word map is defined recursively: the empty word and 01 are fixed;
 * a word 00... maps to the image of the word with its second letter removed,
 * with a 1 reinserted after the initial 0; a word 01... splits at its
 * (d+1)-th 0 (or at the end if there are fewer), the prefix turns its 1
 * into a 0, and the map recurses on the suffix. The inverse peels in the
 * opposite direction, splitting at the (d+2)-th 0. Both are implemented as
 * a single left-to-right pass over suffixes, so the recursion depth of the
 * naive form (one level per 0) can never exhaust the stack.
 */

namespace periparts {

inline void require_d(int d) {
    if (d < 1)
        throw std::domain_error("d must be >= 1");
}

inline BoundarySequence bit_bijection(const BoundarySequence& w, int d) {
    require_d(d);
    const auto& in = w.bits();
    std::vector<std::uint8_t> out;
    out.reserve(in.size());
    const std::size_t end = in.size();
    std::size_t lo = 0;  // current suffix in[lo..end), always a valid word
    while (lo < end) {
        std::size_t first_one = lo;
        while (in[first_one] == 0)
            ++first_one;
        const std::size_t peeled = first_one - lo - 1;
        out.push_back(0);
        out.insert(out.end(), peeled, 1);
        const std::size_t vlo = lo + peeled;  // suffix now reads 0 1 ...
        if (end - vlo == 2) {
            out.push_back(1);
            break;
        }
        // split at the (d+1)-th 0, counting the leading one
        std::size_t m = end;
        int zeros = 0;
        for (std::size_t i = vlo; i < end; ++i) {
            if (in[i] == 0 && ++zeros == d + 1) {
                m = i;
                break;
            }
        }
        out.push_back(0);
        out.insert(out.end(), in.begin() + static_cast<std::ptrdiff_t>(vlo) + 2,
                   in.begin() + static_cast<std::ptrdiff_t>(m));
        lo = m;
    }
    return BoundarySequence(std::move(out));
}

inline BoundarySequence bit_bijection_inverse(const BoundarySequence& w, int d) {
    require_d(d);
    const auto& in = w.bits();
    std::vector<std::uint8_t> out;
    out.reserve(in.size());
    const std::size_t end = in.size();
    std::size_t lo = 0;
    while (lo < end) {
        std::size_t first_zero = lo + 1;  // scan the run of 1s after the initial 0
        while (first_zero < end && in[first_zero] == 1)
            ++first_zero;
        const std::size_t peeled = first_zero - lo - 1;
        if (first_zero == end) {
            // suffix is 0 1^peeled: image is 0 0^(peeled-1) 1
            out.push_back(0);
            out.insert(out.end(), peeled - 1, 0);
            out.push_back(1);
            break;
        }
        out.push_back(0);
        out.insert(out.end(), peeled, 0);
        out.push_back(1);
        // conceptual suffix 0 0 ...: its leading 0 is the first of d+2 to find
        std::size_t m = end;
        int zeros = 1;
        for (std::size_t i = first_zero; i < end; ++i) {
            if (in[i] == 0 && ++zeros == d + 2) {
                m = i;
                break;
            }
        }
        out.insert(out.end(), in.begin() + static_cast<std::ptrdiff_t>(first_zero) + 1,
                   in.begin() + static_cast<std::ptrdiff_t>(m));
        lo = m;
    }
    return BoundarySequence(std::move(out));
}

inline Partition partition_bijection(const Partition& p, int d) {
    p.require_nonempty();
    return from_bits(bit_bijection(to_bits(p), d));
}

inline Partition partition_bijection_inverse(const Partition& p, int d) {
    p.require_nonempty();
    return from_bits(bit_bijection_inverse(to_bits(p), d));
}

struct OrbitReport {
    BoundarySequence start;
    std::vector<BoundarySequence> cycle;  // starts at `start`, closes back to it
    std::size_t length() const { return cycle.size(); }
};

inline OrbitReport orbit(const BoundarySequence& w, int d) {
    require_d(d);
    if (w.empty())
        throw std::domain_error("orbit requires a nonempty boundary word");
    const int n = static_cast<int>(w.size()) - 1;
    const std::uint64_t cap =
        n >= 64 ? UINT64_MAX : (std::uint64_t{1} << (n - 1));
    OrbitReport report;
    report.start = w;
    BoundarySequence cur = w;
    std::uint64_t steps = 0;
    while (true) {
        report.cycle.push_back(cur);
        cur = bit_bijection(cur, d);
        if (cur == w)
            break;
        if (++steps > cap)
            throw std::logic_error("orbit failed to close within the family size");
    }
    return report;
}

/* The injection from the residue-labeled family M_{n,d} into the gap-labeled
 * family D_{n,d}. Writing the starred part as l(d+1)+k with 2 <= k <= d+1 and
 * taking the part below the star as 0 when absent: if the gap below the star
 * is at most k-2 the star just moves down one position; otherwise every part
 * up to the star shrinks by one and a new part l(d+1)+1 is inserted below it. */
inline LabeledPartition labeled_injection(const LabeledPartition& lp, int d) {
    require_d(d);
    const auto& parts = lp.partition().parts();
    const std::size_t i = lp.star();
    const std::int64_t modulus = d + 1;
    const std::int64_t starred = parts[i - 1];
    if (starred % modulus == 1)
        throw std::domain_error("starred part is congruent to 1 modulo d+1");
    std::int64_t k = starred % modulus;
    if (k < 2)
        k += modulus;  // residue 0 reads as k = d+1
    const std::int64_t level = (starred - k) / modulus;
    const std::int64_t below = i < parts.size() ? parts[i] : 0;

    if (starred - below <= k - 2)
        return LabeledPartition(lp.partition(), i + 1);

    std::vector<std::int64_t> out;
    out.reserve(parts.size() + 1);
    for (std::size_t j = 0; j < i; ++j)
        out.push_back(parts[j] - 1);
    out.push_back(level * modulus + 1);
    for (std::size_t j = i; j < parts.size(); ++j)
        out.push_back(parts[j]);
    return LabeledPartition(Partition(std::move(out)), i + 1);
}

/* Elements of D_{n,d} missed by the injection, as a literal set difference
 * against the computed image. Its size always equals |D| - |M|. */
inline std::vector<LabeledPartition> injection_complement(int n, int d) {
    require_d(d);
    std::set<LabeledPartition> image;
    for (const auto& lp : noncongruent_labelings(n, d))
        image.insert(labeled_injection(lp, d));
    std::vector<LabeledPartition> difference;
    for (const auto& lp : small_gap_labelings(n, d))
        if (!image.contains(lp))
            difference.push_back(lp);
    return difference;
}

/* The claimed closed description of the missed elements: part above the star
 * congruent to 1 modulo d+1, starred part not congruent. It agrees with the
 * set difference for d <= 2 but is a strict subset from (n, d) = (7, 3) on:
 * an element like (6,4*) in D_{7,3} has no preimage, because its would-be
 * source (6*,4) falls into the second case of the injection (6 = 1*(3+1)+2,
 * so the gap bound is k-2 = 0 < 2) and maps to (5,5*,4) instead. */
inline std::vector<LabeledPartition> characterized_complement(int n, int d) {
    require_d(d);
    std::vector<LabeledPartition> out;
    for (const auto& lp : small_gap_labelings(n, d)) {
        const auto& v = lp.partition().parts();
        const std::int64_t above = v[lp.star() - 2];
        const std::int64_t starred = v[lp.star() - 1];
        if (above % (d + 1) == 1 && starred % (d + 1) != 1)
            out.push_back(lp);
    }
    return out;
}

}  // namespace periparts

#endif
