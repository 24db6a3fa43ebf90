#include "primegraph/numtheory.hpp"

#include <array>
#include <cctype>

namespace primegraph {

namespace {

// Bases sufficient for an exact Miller-Rabin answer below 3.18e23 (> 2^64).
constexpr std::array<std::uint64_t, 12> kFixedWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

constexpr std::array<std::uint64_t, 25> kSmallPrimes{2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                     43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

// One Miller-Rabin round; n odd, n > 3, n - 1 = d * 2^s with d odd.
bool strong_probable_prime_u64(std::uint64_t n, std::uint64_t d, unsigned s, std::uint64_t witness) {
    std::uint64_t x = pow_mod(witness, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool strong_probable_prime(const BigInt& n, const BigInt& d, unsigned long s, const BigInt& witness) {
    const BigInt n_minus_1 = n - 1;
    BigInt x;
    mpz_powm(x.get_mpz_t(), witness.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == n_minus_1) return true;
    }
    return false;
}

// Returns true (and sets verdict) when n is settled by small-prime division.
bool settled_by_small_primes(const BigInt& n, bool& verdict) {
    if (n < 2) {
        verdict = false;
        return true;
    }
    for (auto p : kSmallPrimes) {
        if (n == p) {
            verdict = true;
            return true;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            verdict = false;
            return true;
        }
    }
    if (n < 97 * 97) {
        verdict = true;
        return true;
    }
    return false;
}

bool probabilistic_test(const BigInt& n, const PrimalityConfig& cfg) {
    BigInt d = n - 1;
    const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    // Seed from both the configured seed and n so each call is reproducible
    // on its own, independent of call order.
    BigInt seed = n;
    seed <<= 64;
    seed += to_big(cfg.rng_seed);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(seed);

    const BigInt span = n - 3;  // witnesses drawn from [2, n - 2]
    for (int round = 0; round < cfg.probabilistic_rounds; ++round) {
        const BigInt witness = rng.get_z_range(span) + 2;
        if (!strong_probable_prime(n, d, s, witness)) return false;
    }
    return true;
}

}  // namespace

BigInt two_pow_64() {
    BigInt v = 1;
    v <<= 64;
    return v;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (auto p : kSmallPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 97 * 97) return true;
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (auto w : kFixedWitnesses) {
        if (!strong_probable_prime_u64(n, d, s, w)) return false;
    }
    return true;
}

bool is_prime(const BigInt& n, const PrimalityConfig& cfg) {
    if (cfg.deterministic_threshold > two_pow_64()) {
        throw InputError("deterministic_threshold must not exceed 2^64");
    }
    if (cfg.probabilistic_rounds < 1) {
        throw InputError("probabilistic_rounds must be positive");
    }
    bool verdict = false;
    if (settled_by_small_primes(n, verdict)) return verdict;
    if (n < cfg.deterministic_threshold) {
        return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
    }
    return probabilistic_test(n, cfg);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

std::vector<bool> prime_sieve(std::uint64_t limit) {
    std::vector<bool> flags(limit + 1, true);
    flags[0] = false;
    if (limit >= 1) flags[1] = false;
    for (std::uint64_t p = 2; p * p <= limit; ++p) {
        if (!flags[p]) continue;
        for (std::uint64_t k = p * p; k <= limit; k += p) flags[k] = false;
    }
    return flags;
}

std::vector<std::uint64_t> primes_from_5(std::size_t d) {
    std::vector<std::uint64_t> out;
    out.reserve(d);
    for (std::uint64_t candidate = 5; out.size() < d; candidate += 2) {
        if (is_prime_u64(candidate)) out.push_back(candidate);
    }
    return out;
}

BigInt crt_solve(std::span<const Congruence> congruences) {
    if (congruences.empty()) throw InputError("crt_solve: empty system of congruences");
    for (const auto& c : congruences) {
        if (c.modulus < 2) throw InputError("crt_solve: modulus " + c.modulus.get_str() + " is below 2");
        if (c.residue < 0 || c.residue >= c.modulus) {
            throw InputError("crt_solve: residue " + c.residue.get_str() + " not reduced modulo " +
                             c.modulus.get_str());
        }
    }
    for (std::size_t i = 0; i < congruences.size(); ++i) {
        for (std::size_t j = i + 1; j < congruences.size(); ++j) {
            if (gcd(congruences[i].modulus, congruences[j].modulus) != 1) {
                throw InputError("crt_solve: moduli " + congruences[i].modulus.get_str() + " and " +
                                 congruences[j].modulus.get_str() + " are not coprime");
            }
        }
    }

    // Incremental Garner-style combination: x solves the first k congruences mod M.
    BigInt x = congruences.front().residue;
    BigInt modulus = congruences.front().modulus;
    for (std::size_t i = 1; i < congruences.size(); ++i) {
        const auto& c = congruences[i];
        BigInt inverse;
        mpz_invert(inverse.get_mpz_t(), modulus.get_mpz_t(), c.modulus.get_mpz_t());
        BigInt t = (c.residue - x) * inverse;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), c.modulus.get_mpz_t());
        x += modulus * t;
        modulus *= c.modulus;
    }
    return x;
}

ApSearchResult next_prime_in_ap(const BigInt& a, const BigInt& q, const BigInt& x_min,
                                const PrimalityConfig& cfg, std::optional<std::uint64_t> candidate_cap) {
    if (q < 1) throw InputError("next_prime_in_ap: modulus must be >= 1");
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
    if (gcd(r, q) != 1) {
        throw InputError("next_prime_in_ap: gcd(" + a.get_str() + ", " + q.get_str() +
                         ") > 1, progression holds at most one prime");
    }

    BigInt candidate = r;
    if (candidate < x_min) {
        BigInt steps;
        const BigInt gap = x_min - r;
        mpz_cdiv_q(steps.get_mpz_t(), gap.get_mpz_t(), q.get_mpz_t());
        candidate += steps * q;
    }

    const bool odd_modulus = mpz_odd_p(q.get_mpz_t()) != 0;
    ApSearchResult result;
    for (;;) {
        if (candidate_cap && result.candidates >= *candidate_cap) {
            throw SearchBudgetExceeded("no prime = " + r.get_str() + " (mod " + q.get_str() + ") among " +
                                       std::to_string(*candidate_cap) + " candidates from " + x_min.get_str());
        }
        ++result.candidates;
        const bool skip = odd_modulus && mpz_even_p(candidate.get_mpz_t()) != 0 && candidate != 2;
        if (!skip && is_prime(candidate, cfg)) {
            result.prime = candidate;
            return result;
        }
        candidate += q;
    }
}

BigInt euler_phi_of_squarefree(std::span<const std::uint64_t> primes) {
    BigInt phi = 1;
    for (auto p : primes) phi *= to_big(p - 1);
    return phi;
}

std::optional<std::uint64_t> small_factor(const BigInt& n, std::uint64_t bound) {
    if (n < 4) return std::nullopt;
    for (std::uint64_t p = 2; p <= bound && n > to_big(p); p = (p == 2 ? 3 : p + 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return p;
    }
    return std::nullopt;
}

BigInt parse_bigint(const std::string& text) {
    if (text.empty()) throw InputError("expected a non-negative integer, got an empty string");
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch)) == 0) {
            throw InputError("expected a non-negative integer, got '" + text + "'");
        }
    }
    return BigInt(text, 10);
}

}  // namespace primegraph
