#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "primegraph/embed.hpp"

using namespace primegraph;

namespace {

// GMP's own primality test, independent of the library's Miller-Rabin.
bool gmp_prime(const BigInt& x) { return mpz_probab_prime_p(x.get_mpz_t(), 40) > 0; }

bool coprime(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g == 1;
}

void check_prime_induced(const Tree& t, const Embedding& e) {
    const int m = t.size();
    std::set<BigInt> distinct(e.labels.begin(), e.labels.end());
    CHECK(static_cast<int>(distinct.size()) == m);
    for (Vertex x = 1; x <= m; ++x) {
        CHECK(e.label(x) >= 1);
        for (Vertex y = x + 1; y <= m; ++y) CHECK(gmp_prime(e.label(x) + e.label(y)) == t.adjacent(x, y));
    }
}

}  // namespace

TEST_CASE("residues for a single edge") {
    const auto r = assign_residues(encode_tree(Tree::path(2)));
    CHECK(r.d == 3);
    CHECK(r.moduli == std::vector<std::uint64_t>{5, 7, 11});
    CHECK(r.q == 385);
    CHECK(r.residue(1) == 134);
    CHECK(r.residue(2) == 197);
    CHECK(oracle::crt_scan({{4, 5}, {1, 7}, {2, 11}}) == 134u);
    CHECK(oracle::crt_scan({{2, 5}, {1, 7}, {10, 11}}) == 197u);
}

TEST_CASE("residue sums of non-adjacent path ends share a factor with q") {
    const auto r = assign_residues(encode_tree(Tree::path(3)));
    CHECK((r.residue(1) + r.residue(3)) % 5 == 0);
    CHECK(coprime(r.residue(1) + r.residue(2), r.q));
    CHECK(coprime(r.residue(2) + r.residue(3), r.q));
    // vertex 3 has code (1, 2, -1)
    CHECK(r.residue(3) == BigInt(static_cast<unsigned long>(*oracle::crt_scan({{1, 5}, {2, 7}, {10, 11}}))));
}

TEST_CASE("residue properties on random trees") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Tree t = random_tree(2 + static_cast<int>(seed % 30), seed);
        const auto r = assign_residues(encode_tree(t));
        std::set<BigInt> distinct(r.residues.begin(), r.residues.end());
        CHECK(distinct.size() == r.residues.size());
        for (Vertex x = 1; x <= t.size(); ++x) {
            CHECK(coprime(2 * r.residue(x), r.q));
            for (Vertex y = x + 1; y <= t.size(); ++y) CHECK(coprime(r.residue(x) + r.residue(y), r.q) == t.adjacent(x, y));
        }
    }
}

TEST_CASE("prime embedding of a single edge") {
    const Embedding e = embed_prime(Tree::path(2));
    CHECK(e.label(1) == 519);
    CHECK(e.label(2) == 1352);
    CHECK(e.max_label == 1352);
    CHECK(e.host_n == 1352);
    REQUIRE(e.trace.size() == 2);
    CHECK(e.trace[1].prime == BigInt(1871));
    CHECK(e.trace[1].candidates == 3);
    CHECK(oracle::next_prime_scan(331, 385, 519 + 385) == 1871u);
    CHECK(oracle::trial_division_prime(519 + 1352));
}

TEST_CASE("prime embedding of a single vertex") {
    const Embedding e = embed_prime(Tree::single_vertex());
    CHECK(e.labels == std::vector<BigInt>{519});
    CHECK(e.trace.size() == 1);
    CHECK_FALSE(e.trace[0].prime.has_value());
}

TEST_CASE("coprime embeddings") {
    const Embedding single = embed_coprime(Tree::single_vertex());
    CHECK(single.labels == std::vector<BigInt>{134});
    CHECK(single.host_n == 384);

    const Embedding edge = embed_coprime(Tree::path(2));
    CHECK(edge.labels == std::vector<BigInt>{134, 197});
    CHECK(coprime(BigInt(134 + 197), 385));
}

TEST_CASE("prime embeddings are induced on random trees") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Tree t = random_tree(1 + static_cast<int>(seed % 25), seed + 100);
        const Embedding e = embed_prime(t);
        check_prime_induced(t, e);
        // labels congruent to residues, all above q except possibly the first
        for (Vertex v = 1; v <= t.size(); ++v) CHECK(e.label(v) % e.residues.q == e.residues.residue(v));
    }
    check_prime_induced(Tree::star(8), embed_prime(Tree::star(8)));
    check_prime_induced(Tree::path(8), embed_prime(Tree::path(8)));
}

TEST_CASE("embedding is deterministic and root-sensitive only in labels") {
    const Tree t = random_tree(15, 3);
    const Embedding a = embed_prime(t);
    const Embedding b = embed_prime(t);
    CHECK(a.labels == b.labels);
    EmbedConfig cfg;
    cfg.root = 7;
    cfg.start_multiplier = 5;
    const Embedding c = embed_prime(t, cfg);
    check_prime_induced(t, c);
    CHECK(c.trace.front().vertex == 7);
    CHECK(c.label(7) == c.residues.residue(7) + 5 * c.residues.q);
}

TEST_CASE("the two targets share the residue layer") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Tree t = random_tree(10, seed);
        const Embedding p = embed_prime(t);
        const Embedding c = embed_coprime(t);
        CHECK(p.residues.residues == c.residues.residues);
        for (Vertex v = 1; v <= t.size(); ++v) CHECK(p.label(v) % p.residues.q == c.label(v));
    }
}

TEST_CASE("bad embed configs") {
    EmbedConfig cfg;
    cfg.start_multiplier = 0;
    CHECK_THROWS_AS(embed_prime(Tree::path(2), cfg), InputError);
    EmbedConfig tight;
    tight.step_candidate_cap = 2;
    CHECK_THROWS_AS(embed_prime(Tree::path(2), tight), SearchBudgetExceeded);
    EmbedConfig root;
    root.root = 9;
    CHECK_THROWS_AS(embed_prime(Tree::path(2), root), InputError);
}
