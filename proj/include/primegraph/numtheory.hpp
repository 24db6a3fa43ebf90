#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "primegraph/error.hpp"

namespace primegraph {

using BigInt = mpz_class;

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 platform required");

inline BigInt to_big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

/// 2^64, the largest value for which the fixed Miller-Rabin witness set is used.
BigInt two_pow_64();

struct PrimalityConfig {
    // Inputs strictly below this are tested with a fixed witness set and are
    // exact. Must not exceed 2^64.
    BigInt deterministic_threshold = two_pow_64();
    // Random witnesses drawn for inputs at or above the threshold.
    int probabilistic_rounds = 64;
    std::uint64_t rng_seed = 0;
};

/// Primality test. Exact below cfg.deterministic_threshold; above it a
/// Miller-Rabin test with cfg.probabilistic_rounds witnesses drawn from a
/// generator seeded by (rng_seed, n), so the answer is a pure function of
/// its arguments. Never reports a prime as composite.
bool is_prime(const BigInt& n, const PrimalityConfig& cfg = {});

/// Exact fixed-width test; same result as is_prime for every n < 2^64.
bool is_prime_u64(std::uint64_t n);

BigInt gcd(const BigInt& a, const BigInt& b);

/// The first d primes that are >= 5, in increasing order.
std::vector<std::uint64_t> primes_from_5(std::size_t d);

/// Sieve of Eratosthenes; flags[k] is true iff k is prime, for 0 <= k <= limit.
std::vector<bool> prime_sieve(std::uint64_t limit);

struct Congruence {
    BigInt residue;
    BigInt modulus;
};

/// Unique x in [0, prod moduli) with x = residue_i (mod modulus_i) for all i.
/// Throws InputError for an empty system, a modulus < 2, an unreduced
/// residue, or a pair of moduli that are not coprime.
BigInt crt_solve(std::span<const Congruence> congruences);

struct ApSearchResult {
    BigInt prime;
    // Number of progression members a + tq (t >= t0) examined, including the
    // even ones skipped without a primality call.
    std::uint64_t candidates = 0;
};

/// Smallest prime P >= x_min with P = a (mod q). Requires q >= 1 and
/// gcd(a, q) = 1 (InputError otherwise). When candidate_cap is set and that
/// many progression members are examined without success, throws
/// SearchBudgetExceeded.
ApSearchResult next_prime_in_ap(const BigInt& a, const BigInt& q, const BigInt& x_min,
                                const PrimalityConfig& cfg = {},
                                std::optional<std::uint64_t> candidate_cap = std::nullopt);

/// Euler's totient of the product of the given distinct primes.
BigInt euler_phi_of_squarefree(std::span<const std::uint64_t> primes);

/// Smallest prime factor of n found by trial division up to `bound`, if any.
std::optional<std::uint64_t> small_factor(const BigInt& n, std::uint64_t bound);

BigInt parse_bigint(const std::string& text);

}  // namespace primegraph
