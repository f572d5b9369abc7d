#include "sied/bits.hpp"

#include "sied/errors.hpp"
#include "sied/rng.hpp"

namespace sied {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw FormatError(std::string("invalid hex digit '") + c + "'");
}

} // namespace

std::string BitString::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve((bits.size() + 3) / 4);
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        int nibble = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            nibble <<= 1;
            if (i + j < bits.size()) nibble |= bits[i + j] & 1;
        }
        out.push_back(digits[nibble]);
    }
    return out;
}

BitString BitString::from_hex(const std::string& hex, std::size_t bit_count) {
    if (bit_count > hex.size() * 4)
        throw FormatError("bit count exceeds hex payload length");
    BitString out;
    out.bits.reserve(bit_count);
    for (std::size_t i = 0; i < bit_count; ++i) {
        const int nibble = hex_digit(hex[i / 4]);
        out.bits.push_back((nibble >> (3 - i % 4)) & 1);
    }
    return out;
}

BitString BitString::from_hex(const std::string& hex) {
    return from_hex(hex, hex.size() * 4);
}

BitString BitString::random(std::size_t bit_count, Rng& rng) {
    BitString out;
    out.bits.reserve(bit_count);
    for (std::size_t i = 0; i < bit_count; ++i) out.bits.push_back(rng.next_bit());
    return out;
}

bool operator==(const BitString& a, const BitString& b) {
    return a.bits == b.bits;
}

} // namespace sied
