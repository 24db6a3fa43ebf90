#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "primegraph/embed.hpp"
#include "primegraph/verify.hpp"

using namespace primegraph;

namespace {

std::vector<BigInt> big(std::initializer_list<unsigned long> xs) {
    std::vector<BigInt> out;
    for (auto x : xs) out.emplace_back(x);
    return out;
}

// Lexicographically least induced copy of t in the prime-sum graph on 1..n,
// labels assigned in BFS order from vertex 1 by trying every value. Tiny
// inputs only.
std::optional<std::vector<std::uint64_t>> brute_least_induced(const Tree& t, std::uint64_t n) {
    const int m = t.size();
    std::vector<Vertex> order{1};
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (Vertex w : t.neighbors(order[k])) {
            if (std::find(order.begin(), order.end(), w) == order.end()) order.push_back(w);
        }
    }
    std::vector<std::uint64_t> labels(static_cast<std::size_t>(m) + 1, 0);
    auto assign = [&](auto&& self, std::size_t k) -> bool {
        if (k == order.size()) return true;
        const Vertex v = order[k];
        for (std::uint64_t x = 1; x <= n; ++x) {
            bool ok = true;
            for (std::size_t e = 0; e < k && ok; ++e) {
                const Vertex u = order[e];
                ok = labels[u] != x && oracle::trial_division_prime(labels[u] + x) == t.adjacent(u, v);
            }
            if (!ok) continue;
            labels[v] = x;
            if (self(self, k + 1)) return true;
        }
        labels[v] = 0;
        return false;
    };
    if (!assign(assign, 0)) return std::nullopt;
    return std::vector<std::uint64_t>(labels.begin() + 1, labels.end());
}

std::uint64_t minimal_host(const Tree& t) {
    for (std::uint64_t n = 1;; ++n) {
        if (find_induced(t, AmbientGraph::prime_sum(to_big(n)))) return n;
    }
}

// Induced m-vertex paths as vertex sequences up to reversal, by checking every
// ordered m-tuple of distinct vertices.
std::uint64_t brute_induced_paths(const AmbientGraph& g, int m) {
    const auto n = static_cast<int>(mpz_get_ui(g.order().get_mpz_t()));
    std::vector<int> seq(static_cast<std::size_t>(m));
    std::uint64_t count = 0;
    auto walk = [&](auto&& self, int k) -> void {
        if (k == m) {
            for (int a = 0; a < m; ++a) {
                for (int b = a + 1; b < m; ++b) {
                    if (seq[a] == seq[b]) return;
                    if (is_edge(g, seq[a], seq[b]) != (b == a + 1)) return;
                }
            }
            ++count;
            return;
        }
        for (int v = 1; v <= n; ++v) {
            seq[static_cast<std::size_t>(k)] = v;
            self(self, k + 1);
        }
    };
    walk(walk, 0);
    return count / 2;
}

}  // namespace

TEST_CASE("verify_induced on small fixtures") {
    const auto p4 = AmbientGraph::prime_sum(4);
    const auto report = verify_induced(Tree::path(4), big({1, 2, 3, 4}), p4);
    CHECK_FALSE(report.ok);
    REQUIRE(report.violations.size() == 1);
    const auto& v = report.violations.front();
    CHECK(v.kind == Violation::Kind::UnexpectedEdge);
    CHECK(v.x == 1);
    CHECK(v.y == 4);
    CHECK(v.sum == "5");
    CHECK(to_string(v.kind) == "unexpected_edge");

    CHECK(verify_induced(Tree::path(3), big({1, 2, 3}), AmbientGraph::prime_sum(3)).ok);
    CHECK(verify_induced(Tree::path(4), big({1, 2, 3, 8}), AmbientGraph::prime_sum(8)).ok);
    CHECK(verify_induced(Tree::single_vertex(), big({1}), AmbientGraph::prime_sum(1)).ok);

    const auto missing = verify_induced(Tree::path(2), big({1, 3}), AmbientGraph::prime_sum(3));
    REQUIRE(missing.violations.size() == 1);
    CHECK(missing.violations[0].kind == Violation::Kind::MissingEdge);

    const auto dup = verify_induced(Tree::path(2), big({2, 2}), AmbientGraph::prime_sum(3));
    REQUIRE(dup.violations.size() == 1);
    CHECK(dup.violations[0].kind == Violation::Kind::DuplicateLabel);

    const auto out = verify_induced(Tree::path(2), big({1, 9}), AmbientGraph::prime_sum(3));
    REQUIRE(out.violations.size() == 1);
    CHECK(out.violations[0].kind == Violation::Kind::OutOfRange);

    CHECK_THROWS_AS(verify_induced(Tree::path(2), big({1}), p4), InputError);
}

TEST_CASE("constructed embeddings verify in both targets") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Tree t = random_tree(2 + static_cast<int>(seed), seed);
        const Embedding p = embed_prime(t);
        CHECK(verify_induced(t, p.labels, AmbientGraph::prime_sum(p.host_n)).ok);
        const Embedding c = embed_coprime(t);
        CHECK(verify_induced(t, c.labels, AmbientGraph::coprime_sum(c.host_n, c.residues.q)).ok);
    }
}

TEST_CASE("find_induced examples") {
    const auto p3 = find_induced(Tree::path(3), AmbientGraph::prime_sum(3));
    REQUIRE(p3.has_value());
    CHECK(*p3 == std::vector<std::uint64_t>{1, 2, 3});
    CHECK_FALSE(find_induced(Tree::star(4), AmbientGraph::prime_sum(4)).has_value());
    const auto star = find_induced(Tree::star(4), AmbientGraph::prime_sum(5));
    REQUIRE(star.has_value());
    std::vector<BigInt> labels(star->begin(), star->end());
    CHECK(verify_induced(Tree::star(4), labels, AmbientGraph::prime_sum(5)).ok);
    CHECK_THROWS_AS(find_induced(Tree::path(15), AmbientGraph::prime_sum(20)), CapExceeded);
    CHECK_THROWS_AS(find_induced(Tree::path(3), AmbientGraph::prime_sum(5000)), CapExceeded);
}

TEST_CASE("find_induced returns the least solution found by exhaustive assignment") {
    for (int m = 1; m <= 7; ++m) {
        for (const auto& t : enumerate_free_trees(m)) {
            for (std::uint64_t n = 1; n <= 18; ++n) {
                const auto found = find_induced(t, AmbientGraph::prime_sum(to_big(n)));
                CHECK(found == brute_least_induced(t, n));
                if (found) {
                    std::vector<BigInt> labels(found->begin(), found->end());
                    CHECK(verify_induced(t, labels, AmbientGraph::prime_sum(to_big(n))).ok);
                }
            }
        }
    }
}

TEST_CASE("smallest host for each tree on at most six vertices") {
    // Frozen from an independent exhaustive search.
    struct Case {
        int m;
        std::vector<Edge> edges;
        std::uint64_t n;
    };
    const std::vector<Case> cases{
        {1, {}, 1},
        {2, {{1, 2}}, 2},
        {3, {{1, 2}, {2, 3}}, 3},
        {4, {{1, 2}, {2, 3}, {3, 4}}, 5},
        {4, {{1, 2}, {1, 3}, {1, 4}}, 5},
        {5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}, 6},
        {5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}, 9},
        {5, {{1, 2}, {2, 3}, {2, 4}, {1, 5}}, 8},
        {6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}, 8},
        {6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}}, 11},
        {6, {{1, 2}, {2, 3}, {2, 4}, {2, 5}, {1, 6}}, 13},
        {6, {{1, 2}, {2, 3}, {2, 4}, {1, 5}, {5, 6}}, 8},
        {6, {{1, 2}, {2, 3}, {2, 4}, {1, 5}, {1, 6}}, 11},
        {6, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}}, 13},
    };
    for (const auto& c : cases) {
        const Tree t = c.m == 1 ? Tree::single_vertex() : Tree(c.m, c.edges);
        CHECK(minimal_host(t) == c.n);
    }
}

TEST_CASE("universal tree size for small n") {
    const std::vector<int> expected{1, 2, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 6, 6, 6, 7, 7, 7, 7, 7};
    int previous = 0;
    for (std::uint64_t n = 1; n <= expected.size(); ++n) {
        const int got = max_universal_m(n);
        CHECK(got == expected[n - 1]);
        CHECK(got >= previous);
        previous = got;
    }
}

TEST_CASE("universal tree size beyond the enumeration cap") {
    OracleCaps small;
    small.max_tree_size = 8;
    CHECK(max_universal_m(20, small) == 7);
    CHECK_THROWS_AS(max_universal_m(40, small), CapExceeded);
    CHECK(max_universal_m(33) == 10);
}

TEST_CASE("oracle_table bookkeeping") {
    const auto table = oracle_table(4, 4);
    CHECK(table.universal_m == 3);
    CHECK_FALSE(table.lower_bound);
    CHECK(table.entries.size() == 1 + 1 + 1 + 2);
    const auto partial = oracle_table(20, 5);
    CHECK(partial.universal_m == 5);
    CHECK(partial.lower_bound);
    const auto stopped = oracle_table(4, 6, {}, true);
    CHECK(stopped.max_m == 4);
}

TEST_CASE("expected induced path counts") {
    const auto three = expected_induced_path_count(5, 0.5, 3);
    CHECK(three.exact == doctest::Approx(3.75));
    CHECK(three.coarse_bound == doctest::Approx(15.625));
    const auto two = expected_induced_path_count(30, 0.2, 2);
    CHECK(two.exact == doctest::Approx(435 * 0.2));
    const auto four = expected_induced_path_count(30, 0.2, 4);
    CHECK(four.exact == doctest::Approx(328860.0 * 0.008 * 0.512));
    CHECK_THROWS_AS(expected_induced_path_count(3, 0.5, 4), InputError);
    CHECK_THROWS_AS(expected_induced_path_count(5, 1.5, 3), InputError);
}

TEST_CASE("count_induced_paths against tuple enumeration") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const auto g = sample_gnp(9, 0.4, seed);
        for (int m = 2; m <= 4; ++m) CHECK(count_induced_paths(g, m) == brute_induced_paths(g, m));
    }
    const auto g = AmbientGraph::prime_sum(8);
    CHECK(count_induced_paths(g, 3) == brute_induced_paths(g, 3));
}

TEST_CASE("sampled path counts match the expectation") {
    const int samples = 200;
    const double expected = expected_induced_path_count(30, 0.2, 4).exact;
    std::vector<double> counts;
    for (int s = 0; s < samples; ++s) counts.push_back(static_cast<double>(count_induced_paths(sample_gnp(30, 0.2, static_cast<std::uint64_t>(s)), 4)));
    const double mean = std::accumulate(counts.begin(), counts.end(), 0.0) / samples;
    double var = 0.0;
    for (double c : counts) var += (c - mean) * (c - mean);
    var /= samples - 1;
    CHECK(std::abs(mean - expected) <= 4.0 * std::sqrt(var / samples));
}

TEST_CASE("sample_gnp extremes") {
    CHECK(average_degree(sample_gnp(20, 0.0, 1)).edge_count == 0);
    CHECK(average_degree(sample_gnp(20, 1.0, 1)).edge_count == 190);
    CHECK_THROWS_AS(sample_gnp(5, -0.1, 1), InputError);
}
