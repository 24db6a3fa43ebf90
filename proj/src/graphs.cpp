#include "primegraph/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace primegraph {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::uint64_t to_u64(const BigInt& v) { return mpz_get_ui(v.get_mpz_t()); }

// Number of pairs 1 <= i < j <= n with i + j = s.
std::uint64_t pairs_with_sum(std::uint64_t s, std::uint64_t n) {
    const std::uint64_t lo = s > n ? s - n : 1;
    const std::uint64_t hi = (s - 1) / 2;
    return hi >= lo ? hi - lo + 1 : 0;
}

}  // namespace

AmbientGraph AmbientGraph::prime_sum(const BigInt& n, const PrimalityConfig& cfg) {
    if (n < 1) throw InputError("prime-sum graph needs n >= 1");
    return AmbientGraph(PrimeSumGraph{n}, n, cfg);
}

AmbientGraph AmbientGraph::coprime_sum(const BigInt& n, const BigInt& q) {
    if (n < 1) throw InputError("coprime-sum graph needs n >= 1");
    if (q < 2) throw InputError("coprime-sum graph needs q >= 2");
    return AmbientGraph(CoprimeSumGraph{n, q}, n, {});
}

AmbientGraph AmbientGraph::explicit_graph(int n, std::span<const Edge> edges) {
    if (n < 1) throw InputError("explicit graph needs n >= 1");
    ExplicitGraph g;
    g.n = n;
    g.adjacency.resize(static_cast<std::size_t>(n) + 1);
    for (const auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) throw InputError("explicit graph edge outside 1..n");
        if (u == v) throw InputError("explicit graph edges must join distinct vertices");
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& list : g.adjacency) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return AmbientGraph(std::move(g), BigInt(n), {});
}

std::string AmbientGraph::describe() const {
    return std::visit(Overloaded{
                          [](const PrimeSumGraph& g) { return "PrimeSum(" + g.n.get_str() + ")"; },
                          [](const CoprimeSumGraph& g) {
                              return "CoprimeSum(" + g.n.get_str() + ", " + g.q.get_str() + ")";
                          },
                          [](const ExplicitGraph& g) { return "Explicit(" + std::to_string(g.n) + ")"; },
                      },
                      kind_);
}

bool is_edge(const AmbientGraph& g, const BigInt& i, const BigInt& j) {
    if (!g.contains(i) || !g.contains(j)) {
        throw InputError("vertex pair (" + i.get_str() + ", " + j.get_str() + ") outside 1.." + g.order().get_str());
    }
    if (i == j) return false;
    return std::visit(Overloaded{
                          [&](const PrimeSumGraph&) { return is_prime(i + j, g.primality()); },
                          [&](const CoprimeSumGraph& c) { return gcd(i + j, c.q) == 1; },
                          [&](const ExplicitGraph& e) {
                              const auto& list = e.adjacency[static_cast<std::size_t>(to_u64(i))];
                              return std::binary_search(list.begin(), list.end(), static_cast<int>(to_u64(j)));
                          },
                      },
                      g.kind());
}

DegreeStats average_degree(const AmbientGraph& g, std::uint64_t cap) {
    if (g.order() > to_big(cap)) {
        throw CapExceeded("exact degree statistics capped at n = " + std::to_string(cap) + ", graph has n = " +
                          g.order().get_str() + "; use the sampling estimate instead");
    }
    const std::uint64_t n = to_u64(g.order());
    DegreeStats stats;
    stats.n = n;

    std::visit(Overloaded{
                   [&](const PrimeSumGraph&) {
                       const auto sieve = prime_sieve(2 * n);
                       for (std::uint64_t s = 3; s < 2 * n; ++s) {
                           if (sieve[s]) stats.edge_count += pairs_with_sum(s, n);
                       }
                   },
                   [&](const CoprimeSumGraph& c) {
                       for (std::uint64_t s = 3; s < 2 * n; ++s) {
                           if (mpz_gcd_ui(nullptr, c.q.get_mpz_t(), s) == 1) stats.edge_count += pairs_with_sum(s, n);
                       }
                   },
                   [&](const ExplicitGraph& e) {
                       std::uint64_t degree_sum = 0;
                       for (const auto& list : e.adjacency) degree_sum += list.size();
                       stats.edge_count = degree_sum / 2;
                   },
               },
               g.kind());

    stats.average_degree = mpq_class(to_big(2 * stats.edge_count), to_big(n));
    stats.average_degree.canonicalize();
    return stats;
}

DegreeEstimate estimate_average_degree(const AmbientGraph& g, std::uint64_t samples, std::uint64_t seed) {
    if (samples == 0) throw InputError("sampling estimate needs at least one sample");
    DegreeEstimate est;
    est.samples = samples;
    if (g.order() < 2) return est;

    gmp_randclass rng(gmp_randinit_default);
    rng.seed(to_big(seed));
    std::uint64_t hits = 0;
    for (std::uint64_t k = 0; k < samples; ++k) {
        const BigInt i = rng.get_z_range(g.order()) + 1;
        // j uniform over the other n - 1 vertices.
        BigInt j = rng.get_z_range(g.order() - 1) + 1;
        if (j >= i) j += 1;
        if (is_edge(g, i, j)) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    const double others = BigInt(g.order() - 1).get_d();
    est.average_degree = others * p;
    est.standard_error = others * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    return est;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> first_parity_violation(std::uint64_t n_max) {
    if (n_max < 2) return std::nullopt;
    const auto sieve = prime_sieve(2 * n_max);
    for (std::uint64_t j = 2; j <= n_max; ++j) {
        for (std::uint64_t i = (j % 2 == 0) ? 2 : 1; i < j; i += 2) {
            if (sieve[i + j]) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

std::uint64_t same_parity_edge_count(std::uint64_t n) {
    if (n < 2) return 0;
    const auto sieve = prime_sieve(2 * n);
    std::uint64_t count = 0;
    for (std::uint64_t s = 4; s < 2 * n; s += 2) {
        if (sieve[s]) count += pairs_with_sum(s, n);
    }
    return count;
}

bool check_bipartite_parity(std::uint64_t n) {
    if (n < 1) throw InputError("check_bipartite_parity needs n >= 1");
    return same_parity_edge_count(n) == 0;
}

std::string to_dot(const AmbientGraph& g, std::span<const BigInt> vertices, std::span<const std::string> names) {
    if (names.size() != vertices.size()) throw InputError("to_dot: one name per vertex required");
    std::ostringstream out;
    out << "graph G {\n";
    out << "  // " << g.describe() << '\n';
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        out << "  n" << k << " [label=\"" << names[k] << "\"];\n";
    }
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (is_edge(g, vertices[a], vertices[b])) out << "  n" << a << " -- n" << b << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace primegraph
