#pragma once

#include <cstdint>

#include <json.hpp>

#include "sied/bigint.hpp"
#include "sied/rng.hpp"

namespace sied {

/// Paillier cryptosystem: N = p*q for distinct odd primes, ciphertexts live
/// in the units of Z_{N^2}, c = g^m * r^N mod N^2 with r uniform in Z*_N.
struct PaillierPublicKey {
    BigInt N;
    BigInt g;

    // cached
    BigInt N2;              // N^2
    std::size_t ct_bytes;   // serialized ciphertext width, bytes

    static PaillierPublicKey make(BigInt N, BigInt g);
};

struct PaillierSecretKey {
    BigInt p;
    BigInt q;
    BigInt lambda; // lcm(p-1, q-1)
    BigInt mu;     // L(g^lambda mod N^2)^-1 mod N
};

struct PaillierKeyPair {
    PaillierPublicKey pk;
    PaillierSecretKey sk;
};

struct PaillierCiphertext {
    BigInt value; // unit of Z_{N^2}
    bool operator==(const PaillierCiphertext&) const = default;
};

/// Encryption process variable r, a unit of Z_N.
struct Randomness {
    BigInt r;
};

/// L(x) = (x - 1) / N; the quotient must be exact.
/// Throws NonDivisibleInput otherwise (malformed ciphertext or wrong key).
BigInt l_function(const BigInt& x, const BigInt& N);

/// Generates a keypair with primes of prime_bits bits each (prime_bits >= 3;
/// tiny keys are allowed so the whole plaintext/randomness space can be
/// enumerated in tests). g defaults to N+1. Keys with gcd(N, lambda) != 1
/// are redrawn: that keeps g = N+1 valid and makes the encryption
/// randomness recoverable from a ciphertext, which the steganalysis harness
/// relies on. Throws PrimeGenerationFailure after a bounded number of draws.
PaillierKeyPair paillier_keygen(unsigned prime_bits, Rng& rng);

/// Draws a fresh encryption process variable r, uniform over Z*_N.
Randomness paillier_draw_randomness(const PaillierPublicKey& pk, Rng& rng);

/// c = g^m * r^N mod N^2. Deterministic given (pk, m, r).
PaillierCiphertext paillier_encrypt(const PaillierPublicKey& pk, const BigInt& m,
                                    const Randomness& r);

/// c' = c * s^N mod N^2: refreshes the hidden randomness (r becomes r*s)
/// without needing the plaintext. decrypt(c') == decrypt(c).
PaillierCiphertext paillier_rerandomize(const PaillierPublicKey& pk,
                                        const PaillierCiphertext& c,
                                        const Randomness& s);

/// m = L(c^lambda mod N^2) * mu mod N.
BigInt paillier_decrypt(const PaillierSecretKey& sk, const PaillierPublicKey& pk,
                        const PaillierCiphertext& c);

/// Recovers the encryption process variable of c:
/// r = (c * g^-m)^(N^-1 mod lambda) mod N. This is the delta the chosen-cover
/// evaluators trace through decryption.
BigInt paillier_recover_randomness(const PaillierSecretKey& sk,
                                   const PaillierPublicKey& pk,
                                   const PaillierCiphertext& c);

/// Checks every key invariant (N = p*q, primality, lambda, mu, g).
/// Throws Error naming the violated invariant.
void paillier_validate(const PaillierKeyPair& kp);

// versioned text records: {"kind":"paillier-pk","N":"<hex>","g":"<hex>"} etc.
nlohmann::json paillier_pk_to_json(const PaillierPublicKey& pk);
nlohmann::json paillier_sk_to_json(const PaillierSecretKey& sk);
nlohmann::json paillier_ct_to_json(const PaillierPublicKey& pk,
                                   const PaillierCiphertext& c);
PaillierPublicKey paillier_pk_from_json(const nlohmann::json& j);
PaillierSecretKey paillier_sk_from_json(const nlohmann::json& j);
PaillierCiphertext paillier_ct_from_json(const nlohmann::json& j);

} // namespace sied
