#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sied {

// Canonical non-negative arbitrary-precision residues.
using BigInt = mpz_class;

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& mod);

// Modular inverse; throws Error if gcd(a, mod) != 1.
BigInt invmod(const BigInt& a, const BigInt& mod);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

std::size_t bit_length(const BigInt& v);
int bit_at(const BigInt& v, std::size_t index);

// Lowercase hex, no prefix; zero-padded to hex_width when given.
std::string to_hex(const BigInt& v, std::size_t hex_width = 0);
BigInt from_hex(const std::string& hex); // throws FormatError

// Big-endian bytes, zero-padded to width.
std::vector<std::uint8_t> to_bytes_be(const BigInt& v, std::size_t width);

} // namespace sied
