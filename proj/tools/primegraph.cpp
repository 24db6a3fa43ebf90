// primegraph: embed trees as induced subgraphs of prime-sum and coprime-sum
// graphs, verify label sets, tabulate small-n oracle values and degree stats.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "primegraph/cli.hpp"

namespace {

using namespace primegraph;

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return true;
}

int emit(const cli::CommandResult& result, const std::string& json_path, const std::string& dot_path) {
    if (!result.diagnostic.empty()) std::cerr << "primegraph: " << result.diagnostic << '\n';
    if (result.document.is_null()) return result.exit_code;

    const std::string text = result.document.dump(2) + "\n";
    if (json_path.empty() || json_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
            std::cerr << "primegraph: cannot write " << json_path << '\n';
            return cli::kInputError;
        }
        out << text;
    }
    if (!dot_path.empty()) {
        std::ofstream out(dot_path, std::ios::binary);
        if (!out) {
            std::cerr << "primegraph: cannot write " << dot_path << '\n';
            return cli::kInputError;
        }
        out << result.dot;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Induced tree embeddings in prime-sum graphs"};
    app.set_version_flag("--version", cli::kToolVersion);
    app.require_subcommand(1);

    std::string tree_path;
    std::string target = "prime";
    std::string json_path;
    std::string dot_path;

    cli::EmbedOptions embed;
    auto* embed_cmd = app.add_subcommand("embed", "Compute labels embedding a tree as an induced subgraph");
    embed_cmd->add_option("--tree", tree_path, "Tree edge-list file")->required();
    embed_cmd->add_option("--target", target, "prime or coprime")->check(CLI::IsMember({"prime", "coprime"}));
    embed_cmd->add_option("--root", embed.root, "BFS root vertex");
    embed_cmd->add_option("--start-multiplier", embed.start_multiplier, "First label is residue + q * K");
    embed_cmd->add_option("--seed", embed.seed, "Miller-Rabin witness seed");
    embed_cmd->add_option("--mr-rounds", embed.mr_rounds, "Miller-Rabin rounds above 2^64");
    embed_cmd->add_option("--budget", embed.budget, "Candidate cap per prime search");
    embed_cmd->add_option("--dot", dot_path, "Write a Graphviz rendering here");
    embed_cmd->add_option("--json", json_path, "Write JSON here (default stdout)");

    cli::VerifyOptions verify;
    std::string labels_text;
    auto* verify_cmd = app.add_subcommand("verify", "Check that labels form an induced copy of a tree");
    verify_cmd->add_option("--tree", tree_path, "Tree edge-list file")->required();
    verify_cmd->add_option("--labels", labels_text, "Labels j_1..j_m, comma separated")->required();
    verify_cmd->add_option("--target", target, "prime or coprime")->check(CLI::IsMember({"prime", "coprime"}));
    verify_cmd->add_option("--n", verify.n, "Host graph order (default: largest label)");
    verify_cmd->add_option("--q", verify.q, "Modulus for the coprime target");
    verify_cmd->add_option("--seed", verify.seed, "Miller-Rabin witness seed");
    verify_cmd->add_option("--mr-rounds", verify.mr_rounds, "Miller-Rabin rounds above 2^64");
    verify_cmd->add_option("--json", json_path, "Write JSON here (default stdout)");

    cli::OracleOptions oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive induced-copy search in the prime-sum graph on 1..n");
    oracle_cmd->add_option("--n", oracle.n, "Host graph order")->required()->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--max-m", oracle.max_m, "Largest tree size to tabulate");
    oracle_cmd->add_option("--json", json_path, "Write JSON here (default stdout)");

    cli::StatsOptions stats;
    std::string kind = "prime";
    auto* stats_cmd = app.add_subcommand("stats", "Degree statistics of a prime-sum or coprime-sum graph");
    stats_cmd->add_option("--kind,--target", kind, "prime or coprime")->check(CLI::IsMember({"prime", "coprime"}));
    stats_cmd->add_option("--n", stats.n, "Graph order")->required();
    stats_cmd->add_option("--q", stats.q, "Modulus for the coprime kind");
    stats_cmd->add_option("--seed", stats.seed, "Sampling seed beyond the exact cap");
    stats_cmd->add_option("--samples", stats.samples, "Pair samples beyond the exact cap");
    stats_cmd->add_option("--json", json_path, "Write JSON here (default stdout)");

    cli::GenerateOptions generate;
    auto* generate_cmd = app.add_subcommand("generate", "Emit a random tree, or all free trees with --all");
    generate_cmd->add_option("--m", generate.m, "Vertex count")->required()->check(CLI::PositiveNumber);
    generate_cmd->add_option("--seed", generate.seed, "Random seed");
    generate_cmd->add_flag("--all", generate.all, "List every free tree on m vertices as JSON");
    generate_cmd->add_option("--json", json_path, "Write JSON here (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kInputError;
    }

    auto load_tree = [&](cli::TreeInput& input) {
        input.origin = tree_path;
        if (!read_file(tree_path, input.text)) {
            std::cerr << "primegraph: cannot read tree file " << tree_path << '\n';
            return false;
        }
        return true;
    };

    if (*embed_cmd) {
        if (!load_tree(embed.tree)) return cli::kInputError;
        embed.target = cli::parse_target(target);
        embed.want_dot = !dot_path.empty();
        return emit(cli::cmd_embed(embed), json_path, dot_path);
    }
    if (*verify_cmd) {
        if (!load_tree(verify.tree)) return cli::kInputError;
        verify.target = cli::parse_target(target);
        verify.labels = cli::split_labels(labels_text);
        return emit(cli::cmd_verify(verify), json_path, "");
    }
    if (*oracle_cmd) return emit(cli::cmd_oracle(oracle), json_path, "");
    if (*stats_cmd) {
        stats.kind = cli::parse_target(kind);
        return emit(cli::cmd_stats(stats), json_path, "");
    }
    if (*generate_cmd) {
        const auto result = cli::cmd_generate(generate);
        if (!generate.all && result.exit_code == cli::kOk && json_path.empty()) {
            std::cout << result.document["text"].get<std::string>();
            return cli::kOk;
        }
        return emit(result, json_path, "");
    }
    return cli::kInputError;
}
