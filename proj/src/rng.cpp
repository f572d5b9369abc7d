#include "sied/rng.hpp"

#include <cmath>
#include <vector>

#include "sied/errors.hpp"

namespace sied {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), gen_(splitmix64(seed)) {}

std::uint64_t Rng::next_u64() {
    return gen_();
}

std::uint64_t Rng::below_u64(std::uint64_t n) {
    if (n == 0) throw Error("below_u64: empty range");
    // rejection sampling over the largest multiple of n
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % n;
}

int Rng::next_bit() {
    return static_cast<int>(next_u64() >> 63);
}

double Rng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

long Rng::gaussian_int(double sigma) {
    double z;
    if (have_cached_gauss_) {
        have_cached_gauss_ = false;
        z = cached_gauss_;
    } else {
        double u1, u2;
        do {
            u1 = next_unit();
        } while (u1 <= 0.0);
        u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        z = r * std::cos(theta);
        cached_gauss_ = r * std::sin(theta);
        have_cached_gauss_ = true;
    }
    return std::lround(z * sigma);
}

BigInt Rng::below(const BigInt& n) {
    if (n <= 0) throw Error("below: empty range");
    const std::size_t bits = bit_length(n);
    const std::size_t words = (bits + 63) / 64;
    std::vector<std::uint64_t> buf(words);
    BigInt v;
    do {
        for (auto& w : buf) w = next_u64();
        mpz_import(v.get_mpz_t(), words, 1, sizeof(std::uint64_t), 0, 0, buf.data());
        // keep `bits` bits so the rejection rate stays below 1/2
        v >>= words * 64 - bits;
    } while (v >= n);
    return v;
}

BigInt Rng::unit(const BigInt& n) {
    BigInt v;
    do {
        v = below(n);
    } while (v == 0 || gcd(v, n) != 1);
    return v;
}

Rng Rng::fork(std::uint64_t salt) const {
    return Rng(splitmix64(seed_ ^ splitmix64(salt ^ 0xa5a5a5a5a5a5a5a5ULL)));
}

} // namespace sied
