#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hcot {

enum class Domain { Game24, ListFn, Arc1D };

std::string domain_name(Domain d);
std::optional<Domain> domain_from_name(const std::string& name);

struct IOPair {
    std::vector<long long> input;
    std::optional<std::vector<long long>> output;  // absent for unlabeled test inputs

    bool operator==(const IOPair&) const = default;
};

struct Task {
    std::string id;
    Domain domain = Domain::Game24;
    std::vector<IOPair> train;
    std::vector<IOPair> test;
    std::optional<std::string> annotation;  // ground-truth rule/scheme name when provided

    bool operator==(const Task&) const = default;
};

struct TokenUsage {
    long long prompt_tokens = 0;
    long long generated_tokens = 0;
    bool estimated = false;  // true when any contribution was estimated, not reported

    TokenUsage operator+(const TokenUsage& o) const {
        return {prompt_tokens + o.prompt_tokens, generated_tokens + o.generated_tokens,
                estimated || o.estimated};
    }
    TokenUsage& operator+=(const TokenUsage& o) { return *this = *this + o; }
    bool operator==(const TokenUsage&) const = default;
};

enum class Stage { Describe, Match, Refine, Baseline, Generate, Evaluate };

std::string stage_name(Stage s);
std::optional<Stage> stage_from_name(const std::string& name);

struct StageRecord {
    Stage stage = Stage::Describe;
    std::string prompt_text;
    std::string response_text;
    std::optional<nlohmann::json> parsed;    // structured parse result, if any
    TokenUsage usage;
    std::optional<int> partition_index;      // Match under a split strategy only
    std::optional<int> sample_index;         // Refine best-of-k samples only

    bool operator==(const StageRecord&) const = default;
};

struct RunResult {
    std::string task_id;
    std::string strategy_name;
    bool correct = false;
    std::optional<std::string> matched_template_id;
    std::optional<bool> match_correct;  // set only when the task carries an annotation
    std::vector<StageRecord> stages;
    TokenUsage total_usage;

    bool operator==(const RunResult&) const = default;
};

/// Thrown by loaders and the transcript reader; message carries the
/// location (line or task index) of the offending record.
class LoadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Plain-text puzzles, four whitespace-separated integers per line.
std::vector<Task> load_game24(const std::string& path);

/// JSONL (or a single JSON array) of {id, category, train, test} tasks
/// with 3 train + 1 test grid pairs, values in [0,9].
std::vector<Task> load_arc1d(const std::string& path);

/// JSONL (or a single JSON array) of {id, category?, train, test} tasks
/// with 8 train + 8 test list pairs.
std::vector<Task> load_listfn(const std::string& path);

}  // namespace hcot
