#include "primegraph/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "primegraph/graphs.hpp"
#include "primegraph/verify.hpp"

namespace primegraph::cli {

using nlohmann::json;

namespace {

json manifest(const std::string& subcommand, json config, const std::string& input) {
    return json{{"subcommand", subcommand},
                {"config", std::move(config)},
                {"input_digest", input.empty() ? json(nullptr) : json(digest(input))},
                {"tool_version", kToolVersion}};
}

json strings(const std::vector<BigInt>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(v.get_str());
    return out;
}

json strings(const std::vector<std::uint64_t>& values) {
    json out = json::array();
    for (auto v : values) out.push_back(std::to_string(v));
    return out;
}

json report_json(const VerificationReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations) {
        violations.push_back(json{{"kind", to_string(v.kind)},
                                  {"x", v.x},
                                  {"y", v.y},
                                  {"expected_edge", v.expected_edge},
                                  {"observed_edge", v.observed_edge},
                                  {"sum", v.sum.empty() ? json(nullptr) : json(v.sum)},
                                  {"witness", v.witness}});
    }
    return json{{"ok", report.ok}, {"violations", std::move(violations)}};
}

Tree read_tree(const TreeInput& input) {
    try {
        return parse_tree(input.text);
    } catch (const TreeError& e) {
        throw InputError(input.origin + ": " + e.what());
    }
}

// Runs body, mapping library errors to exit codes.
CommandResult guarded(const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const SearchBudgetExceeded& e) {
        return CommandResult{kBudgetExceeded, nullptr, {}, std::string("search budget exceeded: ") + e.what()};
    } catch (const Error& e) {
        return CommandResult{kInputError, nullptr, {}, e.what()};
    } catch (const json::exception& e) {
        return CommandResult{kInputError, nullptr, {}, e.what()};
    }
}

PrimalityConfig primality(std::uint64_t seed, int rounds) {
    PrimalityConfig cfg;
    cfg.rng_seed = seed;
    cfg.probabilistic_rounds = rounds;
    return cfg;
}

std::string dot_for_embedding(const Tree& t, const Embedding& e, const AmbientGraph& host) {
    std::ostringstream out;
    out << "graph embedding {\n";
    out << "  // " << host.describe() << '\n';
    for (Vertex v = 1; v <= t.size(); ++v) {
        out << "  v" << v << " [label=\"" << v << ':' << e.label(v).get_str() << "\"];\n";
    }
    for (Vertex x = 1; x <= t.size(); ++x) {
        for (Vertex y = x + 1; y <= t.size(); ++y) {
            const bool in_tree = t.adjacent(x, y);
            const bool in_host = is_edge(host, e.label(x), e.label(y));
            if (in_tree && in_host) {
                out << "  v" << x << " -- v" << y << " [style=solid];\n";
            } else if (in_tree != in_host) {
                out << "  v" << x << " -- v" << y << " [style=dashed, color=red];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace

std::string digest(const std::string& bytes) {
    unsigned char hash[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(bytes.data(), bytes.size(), hash, &length, EVP_sha256(), nullptr);
    std::ostringstream out;
    out << "sha256:";
    for (unsigned int k = 0; k < length; ++k) out << std::hex << std::setw(2) << std::setfill('0') << int{hash[k]};
    return out.str();
}

std::vector<std::string> split_labels(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n') {
            if (!current.empty()) out.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

Target parse_target(const std::string& text) {
    if (text == "prime") return Target::PrimeSum;
    if (text == "coprime") return Target::CoprimeSum;
    throw InputError("unknown target '" + text + "', expected prime or coprime");
}

CommandResult cmd_embed(const EmbedOptions& opts) {
    return guarded([&] {
        const Tree tree = read_tree(opts.tree);
        EmbedConfig cfg;
        cfg.root = opts.root;
        cfg.start_multiplier = parse_bigint(opts.start_multiplier);
        cfg.primality = primality(opts.seed, opts.mr_rounds);
        cfg.step_candidate_cap = opts.budget;

        const Embedding e = opts.target == Target::PrimeSum ? embed_prime(tree, cfg) : embed_coprime(tree);
        const BigInt& q = e.residues.q;
        const AmbientGraph host = opts.target == Target::PrimeSum
                                      ? AmbientGraph::prime_sum(e.host_n, cfg.primality)
                                      : AmbientGraph::coprime_sum(e.host_n, q);
        const VerificationReport report = verify_induced(tree, e.labels, host);

        json codes = json::array();
        for (const auto& code : e.encoding.codes) {
            json row = json::array();
            for (auto c : code) row.push_back(static_cast<int>(c));
            codes.push_back(std::move(row));
        }
        json trace = json::array();
        for (const auto& step : e.trace) {
            trace.push_back(json{{"vertex", step.vertex},
                                 {"parent", step.parent == 0 ? json(nullptr) : json(step.parent)},
                                 {"source", step.prime ? "prime_sum" : "residue"},
                                 {"prime", step.prime ? json(step.prime->get_str()) : json(nullptr)},
                                 {"candidates", step.candidates}});
        }
        json config{{"target", to_string(opts.target)},
                    {"root", opts.root},
                    {"start_multiplier", cfg.start_multiplier.get_str()},
                    {"seed", opts.seed},
                    {"mr_rounds", opts.mr_rounds},
                    {"budget", opts.budget ? json(*opts.budget) : json(nullptr)}};

        CommandResult result;
        result.document = json{{"m", tree.size()},
                               {"d", e.encoding.d},
                               {"q", q.get_str()},
                               {"moduli", e.residues.moduli},
                               {"codes", std::move(codes)},
                               {"residues", strings(e.residues.residues)},
                               {"labels", strings(e.labels)},
                               {"max_label", e.max_label.get_str()},
                               {"n", e.host_n.get_str()},
                               {"target", to_string(opts.target)},
                               {"trace", std::move(trace)},
                               {"verification", report_json(report)},
                               {"manifest", manifest("embed", std::move(config), opts.tree.text)}};
        if (opts.want_dot) result.dot = dot_for_embedding(tree, e, host);
        if (!report.ok) {
            result.exit_code = kVerificationFailed;
            result.diagnostic = "internal verification rejected the embedding";
        }
        return result;
    });
}

CommandResult cmd_verify(const VerifyOptions& opts) {
    return guarded([&] {
        const Tree tree = read_tree(opts.tree);
        std::vector<BigInt> labels;
        for (const auto& text : opts.labels) labels.push_back(parse_bigint(text));
        if (static_cast<int>(labels.size()) != tree.size()) {
            throw InputError("tree has " + std::to_string(tree.size()) + " vertices but " +
                             std::to_string(labels.size()) + " labels were given");
        }
        BigInt n = 1;
        if (opts.n) {
            n = parse_bigint(*opts.n);
        } else {
            for (const auto& j : labels) n = std::max(n, j);
        }
        std::optional<AmbientGraph> host;
        if (opts.target == Target::PrimeSum) {
            host = AmbientGraph::prime_sum(n, primality(opts.seed, opts.mr_rounds));
        } else {
            if (!opts.q) throw InputError("--q is required for the coprime target");
            host = AmbientGraph::coprime_sum(n, parse_bigint(*opts.q));
        }
        const auto report = verify_induced(tree, labels, *host);

        json config{{"target", to_string(opts.target)},
                    {"n", n.get_str()},
                    {"q", opts.q ? json(*opts.q) : json(nullptr)},
                    {"labels", strings(labels)},
                    {"seed", opts.seed},
                    {"mr_rounds", opts.mr_rounds}};
        CommandResult result;
        result.document = report_json(report);
        result.document["graph"] = host->describe();
        result.document["manifest"] = manifest("verify", std::move(config), opts.tree.text);
        result.exit_code = report.ok ? kOk : kVerificationFailed;
        return result;
    });
}

CommandResult cmd_oracle(const OracleOptions& opts) {
    return guarded([&] {
        const OracleCaps caps;
        const bool open_ended = !opts.max_m.has_value();
        const int max_m = open_ended
                              ? static_cast<int>(std::min<std::uint64_t>(opts.n, static_cast<std::uint64_t>(caps.max_tree_size)))
                              : *opts.max_m;
        const OracleTable table = oracle_table(opts.n, max_m, caps, open_ended);

        json trees = json::array();
        for (const auto& entry : table.entries) {
            trees.push_back(json{{"m", entry.m},
                                 {"key", entry.key},
                                 {"edges", entry.tree.edges()},
                                 {"labels", entry.labels ? strings(*entry.labels) : json(nullptr)}});
        }
        json config{{"n", opts.n}, {"max_m", opts.max_m ? json(*opts.max_m) : json(nullptr)}};
        CommandResult result;
        result.document = json{{"n", opts.n},
                               {"max_m", table.max_m},
                               {"M", table.universal_m},
                               {"M_is_lower_bound", table.lower_bound},
                               {"trees", std::move(trees)},
                               {"manifest", manifest("oracle", std::move(config), "")}};
        return result;
    });
}

CommandResult cmd_stats(const StatsOptions& opts) {
    return guarded([&] {
        const BigInt n = parse_bigint(opts.n);
        std::optional<AmbientGraph> g;
        if (opts.kind == Target::PrimeSum) {
            g = AmbientGraph::prime_sum(n);
        } else {
            if (!opts.q) throw InputError("--q is required for coprime statistics");
            g = AmbientGraph::coprime_sum(n, parse_bigint(*opts.q));
        }

        json config{{"kind", to_string(opts.kind)},
                    {"n", n.get_str()},
                    {"q", opts.q ? json(*opts.q) : json(nullptr)},
                    {"seed", opts.seed},
                    {"samples", opts.samples},
                    {"cap", opts.cap}};
        json doc{{"kind", to_string(opts.kind)}, {"n", n.get_str()}, {"q", opts.q ? json(*opts.q) : json(nullptr)}};
        if (n <= to_big(opts.cap)) {
            const DegreeStats stats = average_degree(*g, opts.cap);
            doc["mode"] = "exact";
            doc["edge_count"] = stats.edge_count;
            doc["average_degree"] = stats.average();
            doc["average_degree_exact"] = stats.average_degree.get_str();
            doc["standard_error"] = nullptr;
            doc["bipartite"] = opts.kind == Target::PrimeSum ? json(check_bipartite_parity(stats.n)) : json(nullptr);
        } else {
            const DegreeEstimate est = estimate_average_degree(*g, opts.samples, opts.seed);
            doc["mode"] = "sampled";
            doc["edge_count"] = nullptr;
            doc["average_degree"] = est.average_degree;
            doc["average_degree_exact"] = nullptr;
            doc["standard_error"] = est.standard_error;
            doc["bipartite"] = nullptr;
        }
        doc["manifest"] = manifest("stats", std::move(config), "");
        CommandResult result;
        result.document = std::move(doc);
        return result;
    });
}

CommandResult cmd_generate(const GenerateOptions& opts) {
    return guarded([&] {
        CommandResult result;
        json config{{"m", opts.m}, {"seed", opts.seed}, {"all", opts.all}};
        if (opts.all) {
            json trees = json::array();
            for (const auto& t : enumerate_free_trees(opts.m)) {
                trees.push_back(json{{"key", canonical_form(t)}, {"text", serialize_tree(t)}});
            }
            result.document = json{{"m", opts.m}, {"count", trees.size()}, {"trees", std::move(trees)}};
        } else {
            const Tree t = random_tree(opts.m, opts.seed);
            result.document = json{{"m", opts.m}, {"seed", opts.seed}, {"text", serialize_tree(t)}};
        }
        result.document["manifest"] = manifest("generate", std::move(config), "");
        return result;
    });
}

}  // namespace primegraph::cli
