#ifndef PERIPARTS_ENUMERATE_HPP
#define PERIPARTS_ENUMERATE_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "periparts/partition.hpp"

/* Exhaustive generators for the finite families the library quantifies over:
 * partitions with a fixed perimeter, partitions of a fixed size, extraordinary
 * subsets, and the two labeled-partition families obtained by starring either
 * a small-gap position or a part not congruent to 1 modulo d+1.
 *
 * Partitions with perimeter n correspond to boundary words with n-1 free
 * middle bits, so that family is walked by a plain 2^(n-1) counter whose bits
 * decode in O(1) memory per item; ascending counter order is lexicographic
 * order of the words. Every generator is duplicate-free and deterministic.
 */

namespace periparts {

inline std::uint64_t perimeter_family_size(int n) {
    if (n < 1)
        throw std::domain_error("perimeter must be >= 1");
    if (n > 63)
        throw std::domain_error("perimeter family too large to enumerate");
    return std::uint64_t{1} << (n - 1);
}

/* The index-th boundary word of length n+1: fixed endpoints 0...1, middle
 * bits w_1..w_{n-1} spelling index in binary, most significant bit first. */
inline BoundarySequence boundary_word_at(int n, std::uint64_t index) {
    if (index >= perimeter_family_size(n))
        throw std::domain_error("boundary word index out of range");
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n) + 1);
    bits[0] = 0;
    bits[static_cast<std::size_t>(n)] = 1;
    for (int i = 1; i < n; ++i)
        bits[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>((index >> (n - 1 - i)) & 1);
    return BoundarySequence(std::move(bits));
}

/* Visit the slice [first, last) of the perimeter-n family in word order.
 * Disjoint slices make independent sweeps trivially parallel. */
template <class F>
void for_each_with_perimeter(int n, std::uint64_t first, std::uint64_t last, F&& f) {
    const std::uint64_t total = perimeter_family_size(n);
    if (first > last || last > total)
        throw std::domain_error("bad perimeter family slice");
    for (std::uint64_t idx = first; idx < last; ++idx)
        f(from_bits(boundary_word_at(n, idx)));
}

template <class F>
void for_each_with_perimeter(int n, F&& f) {
    for_each_with_perimeter(n, 0, perimeter_family_size(n), std::forward<F>(f));
}

inline std::vector<Partition> partitions_with_perimeter(int n) {
    std::vector<Partition> out;
    out.reserve(perimeter_family_size(n));
    for_each_with_perimeter(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

namespace detail {

template <class F>
void size_descent(std::int64_t remaining, std::int64_t max_part,
                  std::vector<std::int64_t>& acc, F& f) {
    if (remaining == 0) {
        f(Partition(acc));
        return;
    }
    for (std::int64_t part = std::min(max_part, remaining); part >= 1; --part) {
        acc.push_back(part);
        size_descent(remaining - part, part, acc, f);
        acc.pop_back();
    }
}

}  // namespace detail

/* Partitions of n, largest part first, in lexicographically decreasing order. */
template <class F>
void for_each_of_size(int n, F&& f) {
    if (n < 1)
        throw std::domain_error("size must be >= 1");
    std::vector<std::int64_t> acc;
    detail::size_descent(n, n, acc, f);
}

inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_of_size(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

/* Subsets S of {1..n} whose size equals the k-th smallest element of S.
 * Writing s = |S|, such a set is s itself, k-1 elements below s and s-k
 * elements above s; the three blocks are enumerated directly. */
inline std::vector<std::vector<int>> extraordinary_subsets(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw std::domain_error("extraordinary subsets require 1 <= k <= n");

    // all size-r subsets of the window [lo, hi], in lexicographic order
    auto combinations = [](int lo, int hi, int r) {
        std::vector<std::vector<int>> out;
        if (r < 0 || lo + r - 1 > hi)
            return out;
        std::vector<int> cur(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i)
            cur[static_cast<std::size_t>(i)] = lo + i;
        while (true) {
            out.push_back(cur);
            int i = r - 1;
            while (i >= 0 && cur[static_cast<std::size_t>(i)] == hi - (r - 1 - i))
                --i;
            if (i < 0)
                break;
            ++cur[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < r; ++j)
                cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
        return out;
    };

    std::vector<std::vector<int>> out;
    for (int s = k; s <= n; ++s) {
        auto lows = combinations(1, s - 1, k - 1);
        auto highs = combinations(s + 1, n, s - k);
        for (const auto& below : lows) {
            for (const auto& above : highs) {
                std::vector<int> subset = below;
                subset.push_back(s);
                subset.insert(subset.end(), above.begin(), above.end());
                out.push_back(std::move(subset));
            }
        }
    }
    return out;
}

/* Labeled family D_{n,d}: star any position i >= 2 whose gap above is < d. */
inline std::vector<LabeledPartition> small_gap_labelings(int n, int d) {
    if (d < 1)
        throw std::domain_error("d must be >= 1");
    std::vector<LabeledPartition> out;
    for_each_with_perimeter(n, [&](const Partition& p) {
        const auto& v = p.parts();
        for (std::size_t i = 2; i <= v.size(); ++i)
            if (v[i - 2] - v[i - 1] < d)
                out.emplace_back(p, i);
    });
    return out;
}

/* Labeled family M_{n,d}: star any part not congruent to 1 modulo d+1. */
inline std::vector<LabeledPartition> noncongruent_labelings(int n, int d) {
    if (d < 1)
        throw std::domain_error("d must be >= 1");
    std::vector<LabeledPartition> out;
    for_each_with_perimeter(n, [&](const Partition& p) {
        const auto& v = p.parts();
        for (std::size_t i = 1; i <= v.size(); ++i)
            if (v[i - 1] % (d + 1) != 1)
                out.emplace_back(p, i);
    });
    return out;
}

}  // namespace periparts

#endif
