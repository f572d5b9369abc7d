#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sied {

/// Message payloads are bit sequences. The wire form is a lowercase hex
/// string plus an explicit bit count; bits are consumed most-significant
/// first, so "a3" with bit_count 8 is 1,0,1,0,0,0,1,1.
struct BitString {
    std::vector<int> bits;

    std::size_t size() const { return bits.size(); }
    bool empty() const { return bits.empty(); }

    std::string to_hex() const;
    static BitString from_hex(const std::string& hex, std::size_t bit_count);
    static BitString from_hex(const std::string& hex); // bit_count = 4 * |hex|
    static BitString random(std::size_t bit_count, class Rng& rng);
};

bool operator==(const BitString& a, const BitString& b);

} // namespace sied
