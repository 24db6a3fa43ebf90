#include "primegraph/embed.hpp"

#include <set>
#include <stdexcept>

namespace primegraph {

namespace {

BigInt mod(const BigInt& x, const BigInt& q) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
    return r;
}

void require(bool condition, const char* what) {
    if (!condition) throw std::logic_error(std::string("embed: ") + what);
}

}  // namespace

std::string to_string(Target target) { return target == Target::PrimeSum ? "prime" : "coprime"; }

ResidueAssignment assign_residues(const Encoding& enc) {
    ResidueAssignment out;
    out.d = enc.d;
    out.moduli = primes_from_5(static_cast<std::size_t>(enc.d));
    out.q = 1;
    for (auto p : out.moduli) out.q *= to_big(p);

    std::vector<Congruence> system(out.moduli.size());
    out.residues.reserve(enc.codes.size());
    for (const auto& code : enc.codes) {
        for (std::size_t i = 0; i < out.moduli.size(); ++i) {
            const std::uint64_t p = out.moduli[i];
            const std::uint64_t reduced = code[i] < 0 ? p - 1 : static_cast<std::uint64_t>(code[i]);
            system[i] = Congruence{to_big(reduced), to_big(p)};
        }
        out.residues.push_back(crt_solve(system));
    }

    std::set<BigInt> distinct;
    for (const auto& a : out.residues) {
        require(gcd(a, out.q) == 1, "residue shares a factor with q");
        require(gcd(2 * a, out.q) == 1, "twice a residue shares a factor with q");
        distinct.insert(a);
    }
    require(distinct.size() == out.residues.size(), "residues are not pairwise distinct");
    return out;
}

Embedding embed_prime(const Tree& t, const EmbedConfig& cfg) {
    if (cfg.start_multiplier < 1) throw InputError("start_multiplier must be a positive integer");
    Embedding out;
    out.target = Target::PrimeSum;
    out.config = cfg;
    out.encoding = encode_tree(t);
    out.residues = assign_residues(out.encoding);
    const BigInt& q = out.residues.q;

    const BfsOrder bfs = bfs_order(t, cfg.root);
    out.labels.assign(static_cast<std::size_t>(t.size()), BigInt(0));
    auto label = [&](Vertex v) -> BigInt& { return out.labels[static_cast<std::size_t>(v) - 1]; };

    const Vertex first = bfs.order.front();
    label(first) = out.residues.residue(first) + q * cfg.start_multiplier;
    out.trace.push_back(TraceStep{first, 0, std::nullopt, 0});

    std::set<BigInt> used{label(first)};
    for (std::size_t k = 1; k < bfs.order.size(); ++k) {
        const Vertex v = bfs.order[k];
        const Vertex parent = bfs.parent[v];
        const BigInt& parent_label = label(parent);
        const BigInt progression = mod(out.residues.residue(v) + out.residues.residue(parent), q);
        const auto found = next_prime_in_ap(progression, q, parent_label + q, cfg.primality, cfg.step_candidate_cap);

        label(v) = found.prime - parent_label;
        require(label(v) != parent_label, "label equals its parent's label");
        require(label(v) > q, "label does not exceed q");
        require(mod(label(v), q) == out.residues.residue(v), "label is not congruent to its residue");
        require(used.insert(label(v)).second, "labels are not distinct");
        out.trace.push_back(TraceStep{v, parent, found.prime, found.candidates});
    }

    out.max_label = *used.rbegin();
    out.host_n = out.max_label;
    return out;
}

Embedding embed_coprime(const Tree& t) {
    Embedding out;
    out.target = Target::CoprimeSum;
    out.encoding = encode_tree(t);
    out.residues = assign_residues(out.encoding);
    out.labels = out.residues.residues;
    for (Vertex v = 1; v <= t.size(); ++v) out.trace.push_back(TraceStep{v, 0, std::nullopt, 0});
    out.max_label = 0;
    for (const auto& j : out.labels) {
        if (j > out.max_label) out.max_label = j;
    }
    out.host_n = out.residues.q - 1;
    return out;
}

}  // namespace primegraph
