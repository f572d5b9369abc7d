#include "sied/paillier.hpp"

#include "sied/errors.hpp"

namespace sied {

namespace {

// Probabilistic primality with error bound <= 4^-40 = 2^-80; GMP runs
// trial division over small primes first.
bool is_prime(const BigInt& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

BigInt random_prime(unsigned bits, Rng& rng, unsigned max_draws) {
    for (unsigned i = 0; i < max_draws; ++i) {
        BigInt c = rng.below(BigInt(1) << bits);
        mpz_setbit(c.get_mpz_t(), bits - 1); // exact bit length
        mpz_setbit(c.get_mpz_t(), 0);        // odd
        if (is_prime(c)) return c;
    }
    throw PrimeGenerationFailure("no prime found in " + std::to_string(max_draws) +
                                 " draws at " + std::to_string(bits) + " bits");
}

// g^m mod N^2, with the closed form (1 + mN) for the default g = N + 1.
BigInt g_pow(const PaillierPublicKey& pk, const BigInt& m) {
    if (pk.g == pk.N + 1) return (1 + m * pk.N) % pk.N2;
    return powm(pk.g, m, pk.N2);
}

} // namespace

PaillierPublicKey PaillierPublicKey::make(BigInt N, BigInt g) {
    PaillierPublicKey pk;
    pk.N = std::move(N);
    pk.g = std::move(g);
    pk.N2 = pk.N * pk.N;
    pk.ct_bytes = (bit_length(pk.N2) + 7) / 8;
    return pk;
}

BigInt l_function(const BigInt& x, const BigInt& N) {
    BigInt num = x - 1;
    if (num % N != 0)
        throw NonDivisibleInput("L(x): N does not divide x-1");
    return num / N;
}

PaillierKeyPair paillier_keygen(unsigned prime_bits, Rng& rng) {
    if (prime_bits < 3)
        throw Error("paillier_keygen: prime_bits must be >= 3");
    const unsigned max_draws = 64 * prime_bits;
    for (int attempt = 0; attempt < 64; ++attempt) {
        BigInt p = random_prime(prime_bits, rng, max_draws);
        BigInt q = random_prime(prime_bits, rng, max_draws);
        if (p == q) continue;
        BigInt N = p * q;
        BigInt lambda = lcm(p - 1, q - 1);
        // p | q-1 or q | p-1 would make the encryption randomness
        // unrecoverable; redraw (never triggers for p=5, q=7 toy keys).
        if (gcd(N, lambda) != 1) continue;

        PaillierPublicKey pk = PaillierPublicKey::make(N, N + 1);
        BigInt lg = l_function(powm(pk.g, lambda, pk.N2), N);
        if (gcd(lg, N) != 1) continue; // cannot happen for g = N+1 once gcd(N, lambda) = 1

        PaillierSecretKey sk;
        sk.p = std::move(p);
        sk.q = std::move(q);
        sk.lambda = std::move(lambda);
        sk.mu = invmod(lg % N, N);
        return {std::move(pk), std::move(sk)};
    }
    throw PrimeGenerationFailure("no admissible prime pair found");
}

Randomness paillier_draw_randomness(const PaillierPublicKey& pk, Rng& rng) {
    return Randomness{rng.unit(pk.N)};
}

PaillierCiphertext paillier_encrypt(const PaillierPublicKey& pk, const BigInt& m,
                                    const Randomness& r) {
    if (m < 0 || m >= pk.N)
        throw PlaintextOutOfRange("plaintext not in [0, N)");
    if (r.r <= 0 || r.r >= pk.N || gcd(r.r, pk.N) != 1)
        throw BadRandomness("r not a unit of Z_N");
    BigInt c = g_pow(pk, m) * powm(r.r, pk.N, pk.N2) % pk.N2;
    return PaillierCiphertext{std::move(c)};
}

PaillierCiphertext paillier_rerandomize(const PaillierPublicKey& pk,
                                        const PaillierCiphertext& c,
                                        const Randomness& s) {
    if (s.r <= 0 || s.r >= pk.N || gcd(s.r, pk.N) != 1)
        throw BadRandomness("s not a unit of Z_N");
    return PaillierCiphertext{c.value * powm(s.r, pk.N, pk.N2) % pk.N2};
}

BigInt paillier_decrypt(const PaillierSecretKey& sk, const PaillierPublicKey& pk,
                        const PaillierCiphertext& c) {
    if (c.value <= 0 || c.value >= pk.N2 || gcd(c.value, pk.N2) != 1)
        throw MalformedCiphertext("ciphertext not a unit of Z_{N^2}");
    BigInt u = powm(c.value, sk.lambda, pk.N2);
    BigInt lu;
    try {
        lu = l_function(u, pk.N);
    } catch (const NonDivisibleInput&) {
        throw MalformedCiphertext("c^lambda not congruent to 1 mod N");
    }
    return lu * sk.mu % pk.N;
}

BigInt paillier_recover_randomness(const PaillierSecretKey& sk,
                                   const PaillierPublicKey& pk,
                                   const PaillierCiphertext& c) {
    BigInt m = paillier_decrypt(sk, pk, c);
    // strip the plaintext component: c * g^-m = r^N mod N^2
    BigInt g_inv_m = invmod(g_pow(pk, m), pk.N2);
    BigInt rn = c.value * g_inv_m % pk.N2 % pk.N;
    // gcd(N, lambda) = 1 is enforced at key generation
    BigInt d = invmod(pk.N % sk.lambda, sk.lambda);
    return powm(rn, d, pk.N);
}

void paillier_validate(const PaillierKeyPair& kp) {
    const auto& pk = kp.pk;
    const auto& sk = kp.sk;
    if (pk.N < 15) throw Error("key invariant: N < 15");
    if (sk.p == sk.q) throw Error("key invariant: p == q");
    if (sk.p % 2 == 0 || sk.q % 2 == 0) throw Error("key invariant: even prime");
    if (!is_prime(sk.p) || !is_prime(sk.q)) throw Error("key invariant: p or q composite");
    if (pk.N != sk.p * sk.q) throw Error("key invariant: N != p*q");
    if (pk.N2 != pk.N * pk.N) throw Error("key invariant: stale N^2 cache");
    if (sk.lambda != lcm(sk.p - 1, sk.q - 1)) throw Error("key invariant: lambda != lcm(p-1, q-1)");
    BigInt lg = l_function(powm(pk.g, sk.lambda, pk.N2), pk.N);
    if (gcd(lg, pk.N) != 1) throw Error("key invariant: gcd(L(g^lambda), N) != 1");
    if (sk.mu * lg % pk.N != 1) throw Error("key invariant: mu * L(g^lambda) != 1 mod N");
}

nlohmann::json paillier_pk_to_json(const PaillierPublicKey& pk) {
    return {{"kind", "paillier-pk"}, {"N", to_hex(pk.N)}, {"g", to_hex(pk.g)}};
}

nlohmann::json paillier_sk_to_json(const PaillierSecretKey& sk) {
    return {{"kind", "paillier-sk"},
            {"p", to_hex(sk.p)},
            {"q", to_hex(sk.q)},
            {"lambda", to_hex(sk.lambda)},
            {"mu", to_hex(sk.mu)}};
}

nlohmann::json paillier_ct_to_json(const PaillierPublicKey& pk,
                                   const PaillierCiphertext& c) {
    return {{"c", to_hex(c.value, pk.ct_bytes * 2)}};
}

namespace {

std::string json_hex_field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw FormatError(std::string("missing hex field '") + key + "'");
    return j[key].get<std::string>();
}

void expect_kind(const nlohmann::json& j, const char* kind) {
    if (!j.contains("kind") || j["kind"] != kind)
        throw FormatError(std::string("record is not a ") + kind);
}

} // namespace

PaillierPublicKey paillier_pk_from_json(const nlohmann::json& j) {
    expect_kind(j, "paillier-pk");
    return PaillierPublicKey::make(from_hex(json_hex_field(j, "N")),
                                   from_hex(json_hex_field(j, "g")));
}

PaillierSecretKey paillier_sk_from_json(const nlohmann::json& j) {
    expect_kind(j, "paillier-sk");
    PaillierSecretKey sk;
    sk.p = from_hex(json_hex_field(j, "p"));
    sk.q = from_hex(json_hex_field(j, "q"));
    sk.lambda = from_hex(json_hex_field(j, "lambda"));
    sk.mu = from_hex(json_hex_field(j, "mu"));
    return sk;
}

PaillierCiphertext paillier_ct_from_json(const nlohmann::json& j) {
    return PaillierCiphertext{from_hex(json_hex_field(j, "c"))};
}

} // namespace sied
