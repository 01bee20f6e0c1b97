#pragma once

#include <string>
#include <vector>

#include "hcot/model.hpp"

namespace hcot {

inline constexpr int kTranscriptSchemaVersion = 1;

nlohmann::json run_result_to_json(const RunResult& r);
RunResult run_result_from_json(const nlohmann::json& j);

/// Line-delimited JSON: a one-line {schema_version, created_at} header,
/// then one RunResult object per line. Appendable and stream-readable.
void write_transcript(const std::vector<RunResult>& results, const std::string& path,
                      const std::string& created_at);

std::vector<RunResult> read_transcript(const std::string& path);

/// Incremental writer used by the experiment runner: writes the header on
/// first use (unless the file already has one) and appends one line per
/// result, flushing after each so interrupted runs keep a valid prefix.
class TranscriptWriter {
public:
    TranscriptWriter(const std::string& path, const std::string& created_at, bool append);
    void append(const RunResult& r);

private:
    std::string path_;
};

}  // namespace hcot
