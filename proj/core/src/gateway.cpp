#include "hcot/gateway.hpp"

#include <cctype>
#include <fstream>

namespace hcot::llm {

void validate_request(const CompletionRequest& request) {
    if (request.messages.empty())
        throw GatewayError(GatewayError::Kind::Precondition, "request has no messages");
    if (request.temperature < 0.0 || request.temperature > 2.0)
        throw GatewayError(GatewayError::Kind::Precondition,
                           "temperature outside [0,2]: " + std::to_string(request.temperature));
}

long long estimate_tokens(const std::string& text) {
    long long count = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char c = text[i];
        if (std::isspace(c)) { ++i; continue; }
        if (std::isalnum(c)) {
            ++count;
            while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
            continue;
        }
        ++count;  // every other byte counts as one token
        ++i;
    }
    return count;
}

ReplayBackend::ReplayBackend(std::map<std::string, std::vector<ScriptEntry>> script)
    : script_(std::move(script)) {}

Completion ReplayBackend::complete(const CompletionRequest& request) {
    validate_request(request);
    std::lock_guard<std::mutex> lock(mutex_);
    calls_.push_back(request.tag);
    auto it = script_.find(request.tag);
    std::size_t& n = cursor_[request.tag];
    if (it == script_.end() || n >= it->second.size())
        throw GatewayError(GatewayError::Kind::ScriptExhausted,
                           "script exhausted: " + request.tag + "[" + std::to_string(n) + "]");
    const ScriptEntry& entry = it->second[n];
    ++n;
    return {entry.text, entry.usage, id()};
}

std::vector<std::string> ReplayBackend::call_log() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return calls_;
}

std::shared_ptr<ReplayBackend> make_replay_backend(
    std::map<std::string, std::vector<ScriptEntry>> script) {
    return std::make_shared<ReplayBackend>(std::move(script));
}

std::map<std::string, std::map<std::string, std::vector<ScriptEntry>>> load_replay_script(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw LoadError(path + ": " + e.what());
    }
    std::map<std::string, std::map<std::string, std::vector<ScriptEntry>>> out;
    if (!doc.contains("tasks")) throw LoadError(path + ": missing 'tasks'");
    for (auto& [task_id, tags] : doc.at("tasks").items()) {
        for (auto& [tag, entries] : tags.items()) {
            for (auto& e : entries) {
                ScriptEntry entry;
                entry.text = e.at("text").get<std::string>();
                if (e.contains("usage")) {
                    entry.usage.prompt_tokens = e.at("usage").value("prompt", 0LL);
                    entry.usage.generated_tokens = e.at("usage").value("generated", 0LL);
                } else {
                    entry.usage.generated_tokens = estimate_tokens(entry.text);
                    entry.usage.estimated = true;
                }
                out[task_id][tag].push_back(std::move(entry));
            }
        }
    }
    return out;
}

}  // namespace hcot::llm
