#ifndef PERIPARTS_FORMAT_HPP
#define PERIPARTS_FORMAT_HPP

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "periparts/partition.hpp"

/* Text forms shared by every CLI surface: partitions as comma-separated part
 * lists ("6,3,3,1"), labeled partitions with a star suffix on the starred
 * part ("2,2*,1"), boundary words as 01-strings ("0100110001"). */

namespace periparts {

inline std::string to_text(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

inline std::string to_text(const BoundarySequence& w) {
    std::string s;
    s.reserve(w.size());
    for (auto b : w.bits())
        s += static_cast<char>('0' + b);
    return s;
}

inline std::string to_text(const LabeledPartition& lp) {
    std::string s;
    for (std::size_t i = 0; i < lp.partition().parts().size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(lp.partition().parts()[i]);
        if (i + 1 == lp.star())
            s += '*';
    }
    return s;
}

inline std::int64_t parse_int64(std::string_view s) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("invalid integer: '" + std::string(s) + "'");
    return value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

inline Partition parse_partition(std::string_view s) {
    if (s.empty())
        throw std::invalid_argument("empty partition text");
    std::vector<std::int64_t> parts;
    for (auto piece : split(s, ','))
        parts.push_back(parse_int64(piece));
    return Partition(std::move(parts));
}

/* "a,b*,c": exactly one part carries a trailing star. */
inline LabeledPartition parse_labeled(std::string_view s) {
    if (s.empty())
        throw std::invalid_argument("empty labeled partition text");
    std::vector<std::int64_t> parts;
    std::size_t star = 0;
    auto pieces = split(s, ',');
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        auto piece = pieces[i];
        if (!piece.empty() && piece.back() == '*') {
            if (star != 0)
                throw std::invalid_argument("labeled partition must have exactly one star");
            star = i + 1;
            piece.remove_suffix(1);
        }
        parts.push_back(parse_int64(piece));
    }
    if (star == 0)
        throw std::invalid_argument("labeled partition must have exactly one star");
    return LabeledPartition(Partition(std::move(parts)), star);
}

inline BoundarySequence parse_bits(std::string_view s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("boundary word may contain only 0 and 1");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BoundarySequence(std::move(bits));
}

}  // namespace periparts

#endif
