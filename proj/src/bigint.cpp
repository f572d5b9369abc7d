#include "sied/bigint.hpp"

#include <algorithm>
#include <cctype>

#include "sied/errors.hpp"

namespace sied {

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& mod) {
    BigInt out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return out;
}

BigInt invmod(const BigInt& a, const BigInt& mod) {
    BigInt out;
    if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw Error("invmod: element not invertible");
    return out;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

std::size_t bit_length(const BigInt& v) {
    if (v == 0) return 1;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

int bit_at(const BigInt& v, std::size_t index) {
    return mpz_tstbit(v.get_mpz_t(), static_cast<mp_bitcnt_t>(index)) ? 1 : 0;
}

std::string to_hex(const BigInt& v, std::size_t hex_width) {
    std::string s = v.get_str(16);
    if (s.size() < hex_width) s.insert(0, hex_width - s.size(), '0');
    return s;
}

BigInt from_hex(const std::string& hex) {
    if (hex.empty()) throw FormatError("empty hex string");
    for (char c : hex)
        if (!std::isxdigit(static_cast<unsigned char>(c)))
            throw FormatError("invalid hex digit in '" + hex + "'");
    BigInt out;
    out.set_str(hex, 16);
    return out;
}

std::vector<std::uint8_t> to_bytes_be(const BigInt& v, std::size_t width) {
    std::vector<std::uint8_t> out(width, 0);
    std::size_t count = 0;
    std::vector<std::uint8_t> raw((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8);
    if (v != 0)
        mpz_export(raw.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
    raw.resize(count);
    if (count > width) throw Error("to_bytes_be: value wider than requested width");
    std::copy(raw.begin(), raw.end(), out.begin() + (width - count));
    return out;
}

} // namespace sied
