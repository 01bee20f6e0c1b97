#include "hcot/transcript.hpp"

#include <fstream>
#include <sstream>

namespace hcot {

using nlohmann::json;

namespace {

json usage_to_json(const TokenUsage& u) {
    json j{{"prompt_tokens", u.prompt_tokens}, {"generated_tokens", u.generated_tokens}};
    if (u.estimated) j["estimated"] = true;
    return j;
}

TokenUsage usage_from_json(const json& j) {
    TokenUsage u;
    u.prompt_tokens = j.at("prompt_tokens").get<long long>();
    u.generated_tokens = j.at("generated_tokens").get<long long>();
    u.estimated = j.value("estimated", false);
    return u;
}

json stage_to_json(const StageRecord& s) {
    json j{{"stage", stage_name(s.stage)},
           {"prompt_text", s.prompt_text},
           {"response_text", s.response_text},
           {"usage", usage_to_json(s.usage)}};
    if (s.parsed) j["parsed"] = *s.parsed;
    if (s.partition_index) j["partition_index"] = *s.partition_index;
    if (s.sample_index) j["sample_index"] = *s.sample_index;
    return j;
}

StageRecord stage_from_json(const json& j) {
    StageRecord s;
    auto st = stage_from_name(j.at("stage").get<std::string>());
    if (!st) throw LoadError("unknown stage name: " + j.at("stage").get<std::string>());
    s.stage = *st;
    s.prompt_text = j.at("prompt_text").get<std::string>();
    s.response_text = j.at("response_text").get<std::string>();
    s.usage = usage_from_json(j.at("usage"));
    if (j.contains("parsed")) s.parsed = j.at("parsed");
    if (j.contains("partition_index")) s.partition_index = j.at("partition_index").get<int>();
    if (j.contains("sample_index")) s.sample_index = j.at("sample_index").get<int>();
    return s;
}

}  // namespace

json run_result_to_json(const RunResult& r) {
    json j{{"task_id", r.task_id},
           {"strategy_name", r.strategy_name},
           {"correct", r.correct},
           {"total_usage", usage_to_json(r.total_usage)}};
    if (r.matched_template_id) j["matched_template_id"] = *r.matched_template_id;
    if (r.match_correct) j["match_correct"] = *r.match_correct;
    j["stages"] = json::array();
    for (const auto& s : r.stages) j["stages"].push_back(stage_to_json(s));
    return j;
}

RunResult run_result_from_json(const json& j) {
    RunResult r;
    r.task_id = j.at("task_id").get<std::string>();
    r.strategy_name = j.at("strategy_name").get<std::string>();
    r.correct = j.at("correct").get<bool>();
    r.total_usage = usage_from_json(j.at("total_usage"));
    if (j.contains("matched_template_id"))
        r.matched_template_id = j.at("matched_template_id").get<std::string>();
    if (j.contains("match_correct")) r.match_correct = j.at("match_correct").get<bool>();
    for (const auto& s : j.at("stages")) r.stages.push_back(stage_from_json(s));
    return r;
}

namespace {

std::string header_line(const std::string& created_at) {
    json h{{"schema_version", kTranscriptSchemaVersion}, {"created_at", created_at}};
    return h.dump();
}

}  // namespace

void write_transcript(const std::vector<RunResult>& results, const std::string& path,
                      const std::string& created_at) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw LoadError("cannot write " + path);
    out << header_line(created_at) << "\n";
    for (const auto& r : results) out << run_result_to_json(r).dump() << "\n";
    if (!out) throw LoadError("write failure on " + path);
}

std::vector<RunResult> read_transcript(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw LoadError(path + ": missing transcript header");
    json header;
    try {
        header = json::parse(line);
    } catch (const json::parse_error& e) {
        throw LoadError(path + ": bad header: " + e.what());
    }
    if (!header.contains("schema_version") ||
        header.at("schema_version").get<int>() != kTranscriptSchemaVersion)
        throw LoadError("unsupported transcript version");
    std::vector<RunResult> out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(run_result_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw LoadError(path + ": line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

TranscriptWriter::TranscriptWriter(const std::string& path, const std::string& created_at,
                                   bool append)
    : path_(path) {
    bool need_header = true;
    if (append) {
        std::ifstream existing(path);
        std::string first;
        if (existing && std::getline(existing, first) && !first.empty()) need_header = false;
    }
    std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
    if (!out) throw LoadError("cannot write " + path);
    if (need_header) out << header_line(created_at) << "\n";
}

void TranscriptWriter::append(const RunResult& r) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw LoadError("cannot write " + path_);
    out << run_result_to_json(r).dump() << "\n";
    out.flush();
}

}  // namespace hcot
