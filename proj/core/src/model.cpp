#include "hcot/model.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hcot {

using nlohmann::json;

std::string domain_name(Domain d) {
    switch (d) {
        case Domain::Game24: return "game24";
        case Domain::ListFn: return "listfn";
        case Domain::Arc1D: return "arc1d";
    }
    return "?";
}

std::optional<Domain> domain_from_name(const std::string& name) {
    if (name == "game24") return Domain::Game24;
    if (name == "listfn") return Domain::ListFn;
    if (name == "arc1d") return Domain::Arc1D;
    return std::nullopt;
}

std::string stage_name(Stage s) {
    switch (s) {
        case Stage::Describe: return "describe";
        case Stage::Match: return "match";
        case Stage::Refine: return "refine";
        case Stage::Baseline: return "baseline";
        case Stage::Generate: return "generate";
        case Stage::Evaluate: return "evaluate";
    }
    return "?";
}

std::optional<Stage> stage_from_name(const std::string& name) {
    if (name == "describe") return Stage::Describe;
    if (name == "match") return Stage::Match;
    if (name == "refine") return Stage::Refine;
    if (name == "baseline") return Stage::Baseline;
    if (name == "generate") return Stage::Generate;
    if (name == "evaluate") return Stage::Evaluate;
    return std::nullopt;
}

std::vector<Task> load_game24(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open " + path);
    std::vector<Task> tasks;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // Skip blank lines; everything else must be exactly four integers.
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        std::istringstream fields(line);
        std::vector<long long> nums;
        std::string tok;
        while (fields >> tok) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                nums.push_back(v);
            } catch (const std::exception&) {
                throw LoadError("line " + std::to_string(lineno) + ": not an integer: '" + tok +
                                "'");
            }
        }
        if (nums.size() != 4)
            throw LoadError("line " + std::to_string(lineno) + ": expected 4 integers, got " +
                            std::to_string(nums.size()));
        for (long long v : nums)
            if (v < 1 || v > 13)
                throw LoadError("line " + std::to_string(lineno) + ": value " +
                                std::to_string(v) + " outside [1,13]");
        Task t;
        t.id = "game24-" + std::to_string(lineno);
        t.domain = Domain::Game24;
        IOPair p;
        p.input = nums;
        t.test.push_back(std::move(p));
        tasks.push_back(std::move(t));
    }
    return tasks;
}

namespace {

// Accepts either a flat integer list or the dataset's [[...]] single-row
// nesting used for 1D grids.
std::vector<long long> parse_value_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw LoadError(where + ": expected array");
    const json* row = &j;
    if (!j.empty() && j[0].is_array()) {
        if (j.size() != 1) throw LoadError(where + ": expected a single row");
        row = &j[0];
    }
    std::vector<long long> out;
    for (const auto& v : *row) {
        if (!v.is_number_integer()) throw LoadError(where + ": expected integer values");
        out.push_back(v.get<long long>());
    }
    return out;
}

IOPair parse_pair(const json& j, const std::string& where, bool output_required) {
    if (!j.is_object() || !j.contains("input"))
        throw LoadError(where + ": expected {input, output}");
    IOPair p;
    p.input = parse_value_list(j.at("input"), where + ".input");
    if (j.contains("output") && !j.at("output").is_null())
        p.output = parse_value_list(j.at("output"), where + ".output");
    else if (output_required)
        throw LoadError(where + ": missing output");
    return p;
}

std::vector<json> read_task_documents(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open " + path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<json> docs;
    std::size_t first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return docs;
    if (content[first] == '[') {
        json arr = json::parse(content);
        for (auto& d : arr) docs.push_back(std::move(d));
        return docs;
    }
    std::istringstream lines(content);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            docs.push_back(json::parse(line));
        } catch (const json::parse_error& e) {
            throw LoadError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return docs;
}

}  // namespace

std::vector<Task> load_arc1d(const std::string& path) {
    std::vector<Task> tasks;
    std::size_t index = 0;
    for (const auto& doc : read_task_documents(path)) {
        ++index;
        std::string where = "task " + std::to_string(index);
        if (!doc.is_object() || !doc.contains("train") || !doc.contains("test"))
            throw LoadError(where + ": missing train/test");
        Task t;
        t.domain = Domain::Arc1D;
        t.id = doc.value("id", "arc1d-" + std::to_string(index));
        if (doc.contains("category")) t.annotation = doc.at("category").get<std::string>();
        for (const auto& p : doc.at("train"))
            t.train.push_back(parse_pair(p, where + ".train", true));
        for (const auto& p : doc.at("test"))
            t.test.push_back(parse_pair(p, where + ".test", false));
        if (t.train.size() != 3)
            throw LoadError(where + ": expected 3 train pairs, got " +
                            std::to_string(t.train.size()));
        if (t.test.size() != 1)
            throw LoadError(where + ": expected 1 test pair, got " +
                            std::to_string(t.test.size()));
        auto check_grid = [&](const std::vector<long long>& g, const std::string& label) {
            for (long long v : g)
                if (v < 0 || v > 9)
                    throw LoadError(where + "." + label + ": grid value " + std::to_string(v) +
                                    " outside [0,9]");
        };
        for (const auto& p : t.train) {
            check_grid(p.input, "train");
            check_grid(*p.output, "train");
        }
        for (const auto& p : t.test) {
            check_grid(p.input, "test");
            if (p.output) check_grid(*p.output, "test");
        }
        tasks.push_back(std::move(t));
    }
    return tasks;
}

std::vector<Task> load_listfn(const std::string& path) {
    std::vector<Task> tasks;
    std::size_t index = 0;
    for (const auto& doc : read_task_documents(path)) {
        ++index;
        std::string where = "task " + std::to_string(index);
        if (!doc.is_object() || !doc.contains("train") || !doc.contains("test"))
            throw LoadError(where + ": missing train/test");
        Task t;
        t.domain = Domain::ListFn;
        t.id = doc.value("id", "listfn-" + std::to_string(index));
        if (doc.contains("category")) t.annotation = doc.at("category").get<std::string>();
        for (const auto& p : doc.at("train"))
            t.train.push_back(parse_pair(p, where + ".train", true));
        for (const auto& p : doc.at("test"))
            t.test.push_back(parse_pair(p, where + ".test", false));
        if (t.train.size() != 8)
            throw LoadError(where + ": expected 8 train pairs, got " +
                            std::to_string(t.train.size()));
        if (t.test.size() != 8)
            throw LoadError(where + ": expected 8 test pairs, got " +
                            std::to_string(t.test.size()));
        tasks.push_back(std::move(t));
    }
    return tasks;
}

}  // namespace hcot
