#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primegraph/encode.hpp"
#include "primegraph/numtheory.hpp"
#include "primegraph/tree.hpp"

namespace primegraph {

/// Moduli q_1 < ... < q_d (the first d primes from 5), their product q, and
/// one CRT residue per vertex matching its code coordinate by coordinate.
/// Sums of residues are coprime to q exactly for adjacent vertices.
struct ResidueAssignment {
    int d = 0;
    std::vector<std::uint64_t> moduli;
    BigInt q;
    std::vector<BigInt> residues;  // residues[v - 1]

    const BigInt& residue(Vertex v) const { return residues.at(static_cast<std::size_t>(v) - 1); }
};

ResidueAssignment assign_residues(const Encoding& enc);

enum class Target { PrimeSum, CoprimeSum };

std::string to_string(Target target);

struct EmbedConfig {
    BigInt start_multiplier = 1;
    PrimalityConfig primality{};
    // Progression members examined per prime search before giving up.
    std::optional<std::uint64_t> step_candidate_cap;
    Vertex root = 1;
};

/// One step of the labeling: `vertex` got its label either from a prime
/// sum with its BFS parent or directly from its residue.
struct TraceStep {
    Vertex vertex = 0;
    Vertex parent = 0;          // 0 for the first vertex
    std::optional<BigInt> prime;  // label(vertex) + label(parent)
    std::uint64_t candidates = 0;  // progression members examined
};

struct Embedding {
    Target target = Target::PrimeSum;
    Encoding encoding;
    ResidueAssignment residues;
    std::vector<BigInt> labels;  // labels[v - 1]
    BigInt max_label;
    // Order of the host graph the labels live in: max_label for prime sums,
    // q - 1 for coprime sums.
    BigInt host_n;
    std::vector<TraceStep> trace;
    EmbedConfig config;

    const BigInt& label(Vertex v) const { return labels.at(static_cast<std::size_t>(v) - 1); }
};

/// Labels for an induced copy of t in the prime-sum graph. The first BFS
/// vertex gets residue + q * start_multiplier; every later vertex v with
/// parent i gets P - label(i), where P is the least prime >= label(i) + q
/// congruent to residue(v) + residue(i) mod q.
Embedding embed_prime(const Tree& t, const EmbedConfig& cfg = {});

/// Labels equal to the CRT residues: an induced copy of t in the coprime-sum
/// graph on 1..q-1.
Embedding embed_coprime(const Tree& t);

}  // namespace primegraph
