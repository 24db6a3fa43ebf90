#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "primegraph/embed.hpp"

namespace primegraph::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kBudgetExceeded = 3 };

struct CommandResult {
    int exit_code = kOk;
    nlohmann::json document;  // null when the command failed before producing output
    std::string dot;          // only filled when requested
    std::string diagnostic;   // for the error stream
};

/// Tree input: the raw file text plus the path it came from (for messages).
struct TreeInput {
    std::string text;
    std::string origin;
};

struct EmbedOptions {
    TreeInput tree;
    Target target = Target::PrimeSum;
    Vertex root = 1;
    std::string start_multiplier = "1";
    std::uint64_t seed = 0;
    int mr_rounds = 64;
    std::optional<std::uint64_t> budget;
    bool want_dot = false;
};

struct VerifyOptions {
    TreeInput tree;
    std::vector<std::string> labels;
    Target target = Target::PrimeSum;
    std::optional<std::string> n;  // defaults to the largest label
    std::optional<std::string> q;  // required for coprime
    std::uint64_t seed = 0;
    int mr_rounds = 64;
};

struct OracleOptions {
    std::uint64_t n = 1;
    std::optional<int> max_m;
};

struct StatsOptions {
    Target kind = Target::PrimeSum;
    std::string n = "1";
    std::optional<std::string> q;
    std::uint64_t seed = 0;
    std::uint64_t samples = 100'000;
    std::uint64_t cap = 200'000;
};

struct GenerateOptions {
    int m = 1;
    std::uint64_t seed = 0;
    bool all = false;
};

CommandResult cmd_embed(const EmbedOptions& opts);
CommandResult cmd_verify(const VerifyOptions& opts);
CommandResult cmd_oracle(const OracleOptions& opts);
CommandResult cmd_stats(const StatsOptions& opts);
/// A random tree (edge-list text in document["text"]) or, with `all`, every
/// free tree on m vertices.
CommandResult cmd_generate(const GenerateOptions& opts);

/// "sha256:<hex>" of the bytes.
std::string digest(const std::string& bytes);

/// Parses "1,2,3" or "1 2 3" into decimal label strings.
std::vector<std::string> split_labels(const std::string& text);

Target parse_target(const std::string& text);

}  // namespace primegraph::cli
