#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hcot/model.hpp"

namespace hcot::llm {

struct Message {
    std::string role;  // "system" | "user" | "assistant"
    std::string text;
};

struct CompletionRequest {
    std::vector<Message> messages;
    double temperature = 1.0;
    std::string model_name;
    std::optional<long long> max_tokens;
    std::string tag;  // stage label, also the replay script key
};

struct Completion {
    std::string text;
    TokenUsage usage;
    std::string backend_id;
};

class GatewayError : public std::runtime_error {
public:
    enum class Kind { Precondition, Auth, Timeout, Transport, BadResponse, ScriptExhausted };
    GatewayError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }
    bool retryable() const { return kind_ == Kind::Timeout || kind_ == Kind::Transport; }

private:
    Kind kind_;
};

/// Shareable completion backend handle. Implementations must tolerate
/// concurrent complete() calls.
class ChatBackend {
public:
    virtual ~ChatBackend() = default;
    virtual Completion complete(const CompletionRequest& request) = 0;
    virtual std::string id() const = 0;
};

void validate_request(const CompletionRequest& request);

/// Deterministic token count: a token is a maximal alphanumeric run or a
/// single punctuation character. An approximation only, used when a
/// backend reports no usage; such counts are flagged estimated=true.
long long estimate_tokens(const std::string& text);

struct ScriptEntry {
    std::string text;
    TokenUsage usage;
};

/// Scripted backend for tests and deterministic replay: the nth request
/// with a given tag returns the nth scripted entry for that tag.
class ReplayBackend : public ChatBackend {
public:
    explicit ReplayBackend(std::map<std::string, std::vector<ScriptEntry>> script);

    Completion complete(const CompletionRequest& request) override;
    std::string id() const override { return "replay"; }

    /// Tags of every request served so far, in arrival order.
    std::vector<std::string> call_log() const;

private:
    std::map<std::string, std::vector<ScriptEntry>> script_;
    std::map<std::string, std::size_t> cursor_;
    std::vector<std::string> calls_;
    mutable std::mutex mutex_;
};

std::shared_ptr<ReplayBackend> make_replay_backend(
    std::map<std::string, std::vector<ScriptEntry>> script);

/// Parses a replay script file: {"tasks": {task_id: {tag: [{text, usage:
/// {prompt, generated}}...]}}}. Each task gets an isolated backend so
/// parallel replay stays deterministic.
std::map<std::string, std::map<std::string, std::vector<ScriptEntry>>> load_replay_script(
    const std::string& path);

}  // namespace hcot::llm
