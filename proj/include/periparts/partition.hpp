#ifndef PERIPARTS_PARTITION_HPP
#define PERIPARTS_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

/* Partitions, their boundary words and the statistics defined on them.
 *
 * A partition is a weakly decreasing sequence of positive parts. Its
 * perimeter is (largest part) + (number of parts) - 1. Walking the boundary
 * of the Young diagram from the bottom-left corner to the top-right corner
 * and writing 0 for every horizontal edge and 1 for every vertical edge
 * yields a 01-word of length perimeter+1 that starts with 0 and ends with 1;
 * this codec is a bijection onto such words.
 *
 * All types here are immutable values and all operations are pure, so
 * everything is safe for unrestricted concurrent use.
 */

namespace periparts {

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::domain_error("partition parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw std::domain_error("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<std::int64_t> parts)
        : Partition(std::vector<std::int64_t>(parts)) {}

    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    std::int64_t largest() const {
        require_nonempty();
        return parts_.front();
    }

    /* Derived multiplicity view: (value, count) pairs, largest value first. */
    std::vector<std::pair<std::int64_t, std::int64_t>> multiplicities() const {
        std::vector<std::pair<std::int64_t, std::int64_t>> out;
        for (auto v : parts_) {
            if (!out.empty() && out.back().first == v)
                ++out.back().second;
            else
                out.emplace_back(v, 1);
        }
        return out;
    }

    void require_nonempty() const {
        if (parts_.empty())
            throw std::domain_error("operation requires a nonempty partition");
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<std::int64_t> parts_;
};

/* Boundary word w_0 w_1 ... w_n, stored with w_0 first. Nonempty words start
 * with 0 and end with 1; the empty word encodes the empty partition. */
class BoundarySequence {
public:
    BoundarySequence() = default;

    explicit BoundarySequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_)
            if (b > 1)
                throw std::invalid_argument("boundary word bits must be 0 or 1");
        if (!bits_.empty() && (bits_.front() != 0 || bits_.back() != 1))
            throw std::invalid_argument("boundary word must start with 0 and end with 1");
    }

    const std::vector<std::uint8_t>& bits() const { return bits_; }
    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

    auto operator<=>(const BoundarySequence&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/* A partition with one starred part (1-based index). */
class LabeledPartition {
public:
    LabeledPartition(Partition partition, std::size_t star)
        : partition_(std::move(partition)), star_(star) {
        if (star_ < 1 || star_ > partition_.length())
            throw std::domain_error("star index out of range");
    }

    const Partition& partition() const { return partition_; }
    std::size_t star() const { return star_; }
    std::int64_t starred_part() const { return partition_.parts()[star_ - 1]; }

    auto operator<=>(const LabeledPartition&) const = default;

private:
    Partition partition_;
    std::size_t star_;
};

inline std::int64_t perimeter(const Partition& p) {
    p.require_nonempty();
    return p.largest() + static_cast<std::int64_t>(p.length()) - 1;
}

/* Partition -> boundary word: walk parts from the smallest up, emitting the
 * horizontal run that widens the diagram to the current value and then one
 * vertical edge per part. */
inline BoundarySequence to_bits(const Partition& p) {
    if (p.empty())
        return BoundarySequence{};
    std::vector<std::uint8_t> w;
    w.reserve(static_cast<std::size_t>(perimeter(p)) + 1);
    std::int64_t reached = 0;
    const auto& parts = p.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        for (std::int64_t c = reached; c < *it; ++c)
            w.push_back(0);
        w.push_back(1);
        reached = *it;
    }
    return BoundarySequence(std::move(w));
}

/* Boundary word -> partition: each 1 contributes a part equal to the number
 * of 0s before it; the scan sees parts smallest-first. */
inline Partition from_bits(const BoundarySequence& w) {
    std::vector<std::int64_t> parts;
    std::int64_t zeros = 0;
    for (auto b : w.bits()) {
        if (b == 0)
            ++zeros;
        else
            parts.push_back(zeros);
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

/// Number of adjacent equal pairs.
inline std::int64_t repeated_parts(const Partition& p) {
    p.require_nonempty();
    std::int64_t c = 0;
    const auto& v = p.parts();
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] == v[i + 1])
            ++c;
    return c;
}

/// Number of even parts.
inline std::int64_t even_parts(const Partition& p) {
    p.require_nonempty();
    std::int64_t c = 0;
    for (auto v : p.parts())
        if (v % 2 == 0)
            ++c;
    return c;
}

/// Number of distinct part values; always length - repeated_parts.
inline std::int64_t distinct_parts(const Partition& p) {
    p.require_nonempty();
    return static_cast<std::int64_t>(p.multiplicities().size());
}

/// Number of distinct values occurring at least twice.
inline std::int64_t repeated_values(const Partition& p) {
    p.require_nonempty();
    std::int64_t c = 0;
    for (const auto& [value, count] : p.multiplicities())
        if (count >= 2)
            ++c;
    return c;
}

/// Number of distinct even values.
inline std::int64_t even_values(const Partition& p) {
    p.require_nonempty();
    std::int64_t c = 0;
    for (const auto& [value, count] : p.multiplicities())
        if (value % 2 == 0)
            ++c;
    return c;
}

/// Number of adjacent gaps strictly below d; with d = 1 this counts repeats.
inline std::int64_t gaps_below(const Partition& p, std::int64_t d) {
    p.require_nonempty();
    if (d < 1)
        throw std::domain_error("d must be >= 1");
    std::int64_t c = 0;
    const auto& v = p.parts();
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] - v[i + 1] < d)
            ++c;
    return c;
}

/// Number of parts congruent to 1 modulo d+1.
inline std::int64_t parts_congruent_one(const Partition& p, std::int64_t d) {
    p.require_nonempty();
    if (d < 1)
        throw std::domain_error("d must be >= 1");
    std::int64_t c = 0;
    for (auto v : p.parts())
        if (v % (d + 1) == 1)
            ++c;
    return c;
}

/// Number of parts not congruent to 1 modulo d+1; with d = 1 this counts
/// even parts.
inline std::int64_t parts_not_congruent_one(const Partition& p, std::int64_t d) {
    return static_cast<std::int64_t>(p.length()) - parts_congruent_one(p, d);
}

}  // namespace periparts

#endif
