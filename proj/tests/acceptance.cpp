// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock limits.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "primegraph/cli.hpp"
#include "primegraph/embed.hpp"
#include "primegraph/encode.hpp"
#include "primegraph/graphs.hpp"
#include "primegraph/verify.hpp"

using namespace primegraph;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void run(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && elapsed > limit_seconds) {
        out.ok = false;
        std::ostringstream msg;
        msg << "took " << elapsed << " s, limit " << limit_seconds << " s";
        out.detail = msg.str();
    }
    if (!out.ok) ++failures;
    std::printf("%s %2d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), elapsed,
                out.detail.empty() ? "" : ": ", out.detail.c_str());
    std::fflush(stdout);
}

std::vector<Tree> corpus_up_to_9() {
    std::vector<Tree> all;
    for (int m = 1; m <= 9; ++m) {
        for (auto& t : enumerate_free_trees(m)) all.push_back(std::move(t));
    }
    return all;
}

bool encoding_conditions(const Tree& t, const Encoding& enc, std::string& why) {
    const int m = t.size();
    if (enc.d % 3 != 0) return why = "d not divisible by 3", false;
    if (m >= 2 && static_cast<double>(enc.d) > dimension_bound(m)) return why = "d above the bound", false;
    for (const auto& code : enc.codes) {
        if (static_cast<int>(code.size()) != enc.d) return why = "code length", false;
        for (int value : {-1, 1, 2}) {
            if (std::count(code.begin(), code.end(), value) != enc.d / 3) return why = "unbalanced code", false;
        }
    }
    for (Vertex x = 1; x <= m; ++x) {
        for (Vertex y = x + 1; y <= m; ++y) {
            bool no_zero = true;
            for (int k = 0; k < enc.d; ++k) no_zero = no_zero && enc.code(x)[k] + enc.code(y)[k] != 0;
            if (no_zero != t.adjacent(x, y)) return why = "adjacency characterization", false;
        }
    }
    return true;
}

std::string tree_label(const Tree& t) { return "tree " + canonical_form(t); }

}  // namespace

int main() {
    const std::vector<Tree> corpus = corpus_up_to_9();

    run(1, "every free tree with m <= 9 embeds in the prime-sum graph", 300, [&](Outcome& out) {
        const std::vector<std::size_t> counts{1, 1, 1, 2, 3, 6, 11, 23};
        for (int m = 1; m <= 8; ++m) {
            out.require(enumerate_free_trees(m).size() == counts[static_cast<std::size_t>(m) - 1],
                        "free tree count at m = " + std::to_string(m));
            if (m < 2) continue;
            // independent count: isomorphism classes of all labeled trees
            std::set<std::string> classes;
            oracle::for_each_labeled_tree(m, [&](const oracle::EdgeList& edges) {
                classes.insert(canonical_form(Tree(m, std::vector<Edge>(edges.begin(), edges.end()))));
            });
            out.require(classes.size() == counts[static_cast<std::size_t>(m) - 1],
                        "labeled-tree oracle count at m = " + std::to_string(m));
        }
        for (const auto& t : corpus) {
            const Embedding e = embed_prime(t);
            out.require(verify_induced(t, e.labels, AmbientGraph::prime_sum(e.max_label)).ok, tree_label(t));
        }
    });

    run(2, "encoding dimension bound and adjacency characterization", 120, [&](Outcome& out) {
        std::vector<Tree> trees = corpus;
        for (std::uint64_t seed = 0; seed < 200; ++seed) trees.push_back(random_tree(1 + static_cast<int>(seed % 128), seed));
        for (const auto& t : trees) {
            std::string why;
            out.require(encoding_conditions(t, encode_tree(t), why), why + " for m = " + std::to_string(t.size()));
        }
    });

    run(3, "three-vertex path base vectors", 10, [&](Outcome& out) {
        const Encoding e = encode_tree(Tree::path(3));
        out.require(e.d == 3, "d");
        out.require(e.code(1) == Code{-1, 1, 2}, "first end");
        out.require(e.code(2) == Code{2, 1, -1}, "middle");
        out.require(e.code(3) == Code{1, 2, -1}, "other end");
        out.require(e.code(1)[0] + e.code(3)[0] == 0, "non-adjacent sum first coordinate");
    });

    run(4, "CRT fixtures for the single edge", 10, [&](Outcome& out) {
        const auto r = assign_residues(encode_tree(Tree::path(2)));
        out.require(r.q == 385, "q");
        out.require(r.residue(1) == 134 && r.residue(2) == 197, "residues");
        out.require(oracle::crt_scan({{4, 5}, {1, 7}, {2, 11}}) == 134u, "scan 134");
        out.require(oracle::crt_scan({{2, 5}, {1, 7}, {10, 11}}) == 197u, "scan 197");
        out.require(oracle::trial_division_prime(331), "331 prime");
        out.require(oracle::gcd(331, 385) == 1, "331 coprime to 385");
    });

    run(5, "coprime embeddings and the cross-target invariant", 120, [&](Outcome& out) {
        for (const auto& t : corpus) {
            const Embedding c = embed_coprime(t);
            const BigInt& q = c.residues.q;
            out.require(verify_induced(t, c.labels, AmbientGraph::coprime_sum(q - 1, q)).ok, "coprime " + tree_label(t));
            const Embedding p = embed_prime(t);
            out.require(verify_induced(t, p.labels, AmbientGraph::coprime_sum(p.max_label, q)).ok,
                        "cross-target " + tree_label(t));
        }
    });

    run(6, "universal tree size: M(3) = M(4) = 3, non-decreasing to n = 50", 600, [&](Outcome& out) {
        out.require(max_universal_m(3) == 3, "M(3)");
        out.require(max_universal_m(4) == 3, "M(4)");
        out.require(!find_induced(Tree::star(4), AmbientGraph::prime_sum(4)), "star in P_4");
        int previous = 0;
        for (std::uint64_t n = 1; n <= 50; ++n) {
            const int m = max_universal_m(n);
            out.require(m >= previous, "decrease at n = " + std::to_string(n));
            previous = m;
        }
    });

    run(7, "prime-sum graphs are parity-bipartite for n <= 10^4", 60, [&](Outcome& out) {
        for (std::uint64_t n = 1; n <= 10'000; ++n) out.require(check_bipartite_parity(n), "n = " + std::to_string(n));
        out.require(!first_parity_violation(10'000).has_value(), "pair scan");
    });

    run(8, "degree statistics", 120, [&](Outcome& out) {
        const double n = 1e5;
        const double avg = average_degree(AmbientGraph::prime_sum(100'000)).average();
        const double ratio = avg / (n / std::log(n));
        out.require(ratio >= 0.8 && ratio <= 1.25, "prime-sum ratio " + std::to_string(ratio));
        for (std::uint64_t q : {385u, 85085u}) {
            const double bound = 0.5 * euler_phi_of_squarefree(q == 385 ? std::vector<std::uint64_t>{5, 7, 11}
                                                                        : std::vector<std::uint64_t>{5, 7, 11, 13, 17})
                                           .get_d();
            const double got = average_degree(AmbientGraph::coprime_sum(to_big(q), to_big(q))).average();
            out.require(got >= bound, "coprime q = " + std::to_string(q));
        }
    });

    run(9, "induced path counts in G(30, 0.2) and the coarse bound", 180, [&](Outcome& out) {
        const int samples = 2000;
        std::vector<double> counts;
        counts.reserve(samples);
        for (int s = 0; s < samples; ++s) {
            counts.push_back(static_cast<double>(count_induced_paths(sample_gnp(30, 0.2, static_cast<std::uint64_t>(s)), 4)));
        }
        const double mean = std::accumulate(counts.begin(), counts.end(), 0.0) / samples;
        double var = 0.0;
        for (double c : counts) var += (c - mean) * (c - mean);
        var /= samples - 1;
        const double se = std::sqrt(var / samples);
        const double expected = expected_induced_path_count(30, 0.2, 4).exact;
        out.require(std::abs(mean - expected) <= 4 * se,
                    "mean " + std::to_string(mean) + " vs " + std::to_string(expected) + " (se " + std::to_string(se) + ")");
        // 10 x 10 grid: n and p vary, m cycles through 2..6
        int point = 0;
        for (std::uint64_t n : {6u, 10u, 20u, 30u, 50u, 100u, 200u, 500u, 1000u, 5000u}) {
            for (int k = 1; k <= 10; ++k) {
                const double p = k / 11.0;
                const int m = 2 + point++ % 5;
                const auto e = expected_induced_path_count(n, p, m);
                out.require(e.exact <= e.coarse_bound, "grid point " + std::to_string(point));
            }
        }
    });

    run(10, "embed output is byte-identical across runs", 120, [&](Outcome& out) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            cli::EmbedOptions opts;
            opts.tree = {serialize_tree(random_tree(2 + static_cast<int>(seed * 3), seed)), "random"};
            opts.want_dot = true;
            const auto a = cli::cmd_embed(opts);
            const auto b = cli::cmd_embed(opts);
            out.require(a.exit_code == cli::kOk, "exit code for seed " + std::to_string(seed));
            out.require(a.document.dump(2) == b.document.dump(2) && a.dot == b.dot, "seed " + std::to_string(seed));
        }
    });

    std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
