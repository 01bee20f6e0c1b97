#include "hcot/arc1d.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdint>
#include <sstream>

namespace hcot::arc1d {

std::vector<Block> find_blocks(const Grid& g) {
    std::vector<Block> out;
    std::size_t i = 0;
    while (i < g.size()) {
        if (g[i] == 0) { ++i; continue; }
        std::size_t j = i;
        while (j < g.size() && g[j] == g[i]) ++j;
        out.push_back({i, j - i, g[i]});
        i = j;
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> find_segments(const Grid& g) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t i = 0;
    while (i < g.size()) {
        if (g[i] == 0) { ++i; continue; }
        std::size_t j = i;
        while (j < g.size() && g[j] != 0) ++j;
        out.emplace_back(i, j - i);
        i = j;
    }
    return out;
}

namespace {

std::optional<Grid> not_applicable() { return std::nullopt; }

// Mover convention shared by the mirror/move-dp/scale-dp family: the
// longer of the two regions moves (or scales), ties resolved to the
// leftmost, matching every worked example in the catalog.
template <typename Region>
std::pair<Region, Region> mover_and_pivot(const Region& a, const Region& b,
                                          std::size_t len_a, std::size_t len_b) {
    if (len_b > len_a) return {b, a};
    return {a, b};
}

std::optional<Grid> shift_single_block(const Grid& g, int distance) {
    auto blocks = find_blocks(g);
    if (blocks.size() != 1) return not_applicable();
    const Block& b = blocks[0];
    long long new_start = static_cast<long long>(b.start) + distance;
    if (new_start < 0 || new_start + static_cast<long long>(b.length) >
                             static_cast<long long>(g.size()))
        return not_applicable();
    Grid out(g.size(), 0);
    for (std::size_t i = 0; i < b.length; ++i)
        out[static_cast<std::size_t>(new_start) + i] = b.color;
    return out;
}

std::optional<Grid> apply_denoising_1c(const Grid& g) {
    auto blocks = find_blocks(g);
    if (blocks.empty()) return not_applicable();
    Block best = blocks[0];
    for (const auto& b : blocks)
        if (b.length > best.length) best = b;
    Grid out(g.size(), 0);
    for (std::size_t i = 0; i < best.length; ++i) out[best.start + i] = best.color;
    return out;
}

std::optional<Grid> apply_denoising_mc(const Grid& g) {
    auto segments = find_segments(g);
    if (segments.empty()) return not_applicable();
    Grid out = g;
    for (auto [start, len] : segments) {
        int counts[10] = {0};
        for (std::size_t i = start; i < start + len; ++i) ++counts[g[i]];
        int majority = 0, best = 0;
        bool tie = false;
        for (int c = 1; c <= 9; ++c) {
            if (counts[c] > best) { best = counts[c]; majority = c; tie = false; }
            else if (counts[c] == best && best > 0) tie = true;
        }
        if (tie) return not_applicable();
        for (std::size_t i = start; i < start + len; ++i) out[i] = majority;
    }
    return out;
}

std::optional<Grid> apply_fill(const Grid& g) {
    auto blocks = find_blocks(g);
    if (blocks.size() != 2 || blocks[0].color != blocks[1].color) return not_applicable();
    Grid out = g;
    for (std::size_t i = blocks[0].start + blocks[0].length; i < blocks[1].start; ++i)
        out[i] = blocks[0].color;
    return out;
}

std::optional<Grid> apply_flip(const Grid& g) {
    auto segments = find_segments(g);
    if (segments.size() != 1) return not_applicable();
    auto [start, len] = segments[0];
    Grid out = g;
    std::reverse(out.begin() + static_cast<long long>(start),
                 out.begin() + static_cast<long long>(start + len));
    return out;
}

std::optional<Grid> apply_hollow(const Grid& g) {
    auto blocks = find_blocks(g);
    if (blocks.empty()) return not_applicable();
    Grid out = g;
    for (const auto& b : blocks)
        for (std::size_t i = b.start + 1; i + 1 < b.start + b.length; ++i) out[i] = 0;
    return out;
}

std::optional<Grid> apply_mirror(const Grid& g) {
    auto segments = find_segments(g);
    if (segments.size() != 2) return not_applicable();
    auto [mover, pivot] = mover_and_pivot(segments[0], segments[1], segments[0].second,
                                          segments[1].second);
    auto [m_start, m_len] = mover;
    auto [p_start, p_len] = pivot;
    Grid out(g.size(), 0);
    for (std::size_t i = 0; i < p_len; ++i) out[p_start + i] = g[p_start + i];
    long long target_start;
    if (m_start < p_start) {
        long long gap = static_cast<long long>(p_start) -
                        static_cast<long long>(m_start + m_len);
        target_start = static_cast<long long>(p_start + p_len) + gap;
    } else {
        long long gap = static_cast<long long>(m_start) -
                        static_cast<long long>(p_start + p_len);
        target_start = static_cast<long long>(p_start) - gap - static_cast<long long>(m_len);
    }
    if (target_start < 0 ||
        target_start + static_cast<long long>(m_len) > static_cast<long long>(g.size()))
        return not_applicable();
    for (std::size_t i = 0; i < m_len; ++i)
        out[static_cast<std::size_t>(target_start) + i] = g[m_start + m_len - 1 - i];
    return out;
}

std::optional<Grid> apply_move_2p_dp(const Grid& g) {
    auto blocks = find_blocks(g);
    if (blocks.size() != 2) return not_applicable();
    auto [mover, pivot] = mover_and_pivot(blocks[0], blocks[1], blocks[0].length,
                                          blocks[1].length);
    int direction = mover.start < pivot.start ? 1 : -1;
    long long new_start = static_cast<long long>(mover.start) + 2 * direction;
    long long new_end = new_start + static_cast<long long>(mover.length);
    if (new_start < 0 || new_end > static_cast<long long>(g.size())) return not_applicable();
    // The moved block must not run into the stationary one.
    if (direction > 0 && new_end > static_cast<long long>(pivot.start)) return not_applicable();
    if (direction < 0 && new_start < static_cast<long long>(pivot.start + pivot.length))
        return not_applicable();
    Grid out(g.size(), 0);
    for (std::size_t i = 0; i < pivot.length; ++i) out[pivot.start + i] = pivot.color;
    for (std::size_t i = 0; i < mover.length; ++i)
        out[static_cast<std::size_t>(new_start) + i] = mover.color;
    return out;
}

std::optional<Grid> apply_move_dp(const Grid& g) {
    auto blocks = find_blocks(g);
    if (blocks.size() != 2) return not_applicable();
    auto [mover, pivot] = mover_and_pivot(blocks[0], blocks[1], blocks[0].length,
                                          blocks[1].length);
    std::size_t new_start =
        mover.start < pivot.start ? pivot.start - mover.length : pivot.start + pivot.length;
    Grid out(g.size(), 0);
    for (std::size_t i = 0; i < pivot.length; ++i) out[pivot.start + i] = pivot.color;
    for (std::size_t i = 0; i < mover.length; ++i) out[new_start + i] = mover.color;
    return out;
}

std::optional<Grid> apply_padded_fill(const Grid& g) {
    auto blocks = find_blocks(g);
    if (blocks.empty()) return not_applicable();
    Grid out = g;
    for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
        if (blocks[k].color != blocks[k + 1].color) continue;
        for (std::size_t i = blocks[k].start + blocks[k].length; i < blocks[k + 1].start; ++i)
            out[i] = blocks[k].color;
    }
    return out;
}

std::optional<Grid> apply_pcopy(const Grid& g, bool multi_color) {
    auto blocks = find_blocks(g);
    const Block* seed = nullptr;
    for (const auto& b : blocks) {
        if (b.length > 1) {
            if (seed) return not_applicable();  // exactly one template block
            seed = &b;
        }
    }
    if (!seed || blocks.size() < 2) return not_applicable();
    if (seed->length % 2 == 0) return not_applicable();  // copies are centered
    std::size_t half = (seed->length - 1) / 2;
    Grid out(g.size(), 0);
    for (std::size_t i = 0; i < seed->length; ++i) out[seed->start + i] = seed->color;
    for (const auto& b : blocks) {
        if (b.length != 1) continue;
        if (!multi_color && b.color != seed->color) return not_applicable();
        if (b.start < half || b.start + half >= g.size()) return not_applicable();
        for (std::size_t i = b.start - half; i <= b.start + half; ++i) {
            if (out[i] != 0) return not_applicable();  // copies may not collide
            out[i] = b.color;
        }
    }
    return out;
}

std::optional<Grid> apply_recolor_cmp(const Grid& g, const RuleParams& params) {
    if (params.mode < 0 || params.target_color < 1) return not_applicable();
    auto blocks = find_blocks(g);
    if (blocks.size() < 2) return not_applicable();
    std::size_t longest = 0;
    for (const auto& b : blocks) longest = std::max(longest, b.length);
    Grid out = g;
    for (const auto& b : blocks) {
        bool is_longest = b.length == longest;
        bool recolor = params.mode == 0 ? is_longest : !is_longest;
        if (recolor)
            for (std::size_t i = 0; i < b.length; ++i) out[b.start + i] = params.target_color;
    }
    return out;
}

std::optional<Grid> apply_recolor_cnt(const Grid& g, const RuleParams& params) {
    auto blocks = find_blocks(g);
    if (blocks.empty()) return not_applicable();
    Grid out = g;
    for (const auto& b : blocks) {
        auto it = params.length_recolor.find(static_cast<long long>(b.length));
        if (it == params.length_recolor.end()) return not_applicable();
        for (std::size_t i = 0; i < b.length; ++i) out[b.start + i] = it->second;
    }
    return out;
}

std::optional<Grid> apply_recolor_oe(const Grid& g, const RuleParams& params) {
    if (params.parity < 0 || params.target_color < 1) return not_applicable();
    auto blocks = find_blocks(g);
    if (blocks.empty()) return not_applicable();
    Grid out = g;
    for (const auto& b : blocks) {
        if (static_cast<int>(b.length % 2) != params.parity) continue;
        for (std::size_t i = 0; i < b.length; ++i) out[b.start + i] = params.target_color;
    }
    return out;
}

std::optional<Grid> apply_scale_dp(const Grid& g) {
    auto blocks = find_blocks(g);
    if (blocks.size() != 2) return not_applicable();
    auto [scaled, pivot] = mover_and_pivot(blocks[0], blocks[1], blocks[0].length,
                                           blocks[1].length);
    Grid out = g;
    if (scaled.start < pivot.start) {
        for (std::size_t i = scaled.start + scaled.length; i < pivot.start; ++i)
            out[i] = scaled.color;
    } else {
        for (std::size_t i = pivot.start + pivot.length; i < scaled.start; ++i)
            out[i] = scaled.color;
    }
    return out;
}

}  // namespace

std::optional<Grid> apply_rule(int rule_id, const RuleParams& params, const Grid& g) {
    if (g.empty()) return not_applicable();
    switch (rule_id) {
        case 1: return apply_denoising_1c(g);
        case 2: return apply_denoising_mc(g);
        case 3: return apply_fill(g);
        case 4: return apply_flip(g);
        case 5: return apply_hollow(g);
        case 6: return apply_mirror(g);
        case 7: return shift_single_block(g, 1);
        case 8: return shift_single_block(g, 2 * params.direction);
        case 9: return apply_move_2p_dp(g);
        case 10: return shift_single_block(g, 3);
        case 11: return apply_move_dp(g);
        case 12: return apply_padded_fill(g);
        case 13: return apply_pcopy(g, false);
        case 14: return apply_pcopy(g, true);
        case 15: return apply_recolor_cmp(g, params);
        case 16: return apply_recolor_cnt(g, params);
        case 17: return apply_recolor_oe(g, params);
        case 18: return apply_scale_dp(g);
        default: return not_applicable();
    }
}

namespace {

// First pair a candidate parameterization fails on, or SIZE_MAX if all
// pairs are reproduced.
std::size_t first_failure(int rule_id, const RuleParams& params, const std::vector<Pair>& train) {
    for (std::size_t i = 0; i < train.size(); ++i) {
        auto got = apply_rule(rule_id, params, train[i].input);
        if (!got || *got != train[i].output) return i;
    }
    return SIZE_MAX;
}

std::variant<RuleParams, InferenceFailure> best_of(int rule_id,
                                                   const std::vector<RuleParams>& candidates,
                                                   const std::vector<Pair>& train) {
    std::size_t best_fail = 0;
    for (const auto& c : candidates) {
        std::size_t f = first_failure(rule_id, c, train);
        if (f == SIZE_MAX) return c;
        best_fail = std::max(best_fail, f);
    }
    return InferenceFailure{best_fail};
}

}  // namespace

std::variant<RuleParams, InferenceFailure> infer_params(int rule_id,
                                                        const std::vector<Pair>& train) {
    RuleParams params;
    switch (rule_id) {
        case 8: {  // move_2p direction
            std::vector<RuleParams> candidates(2);
            candidates[0].direction = 1;
            candidates[1].direction = -1;
            return best_of(rule_id, candidates, train);
        }
        case 15: {  // recolor_cmp: mode and target color
            std::vector<RuleParams> candidates;
            for (int mode = 0; mode < 2; ++mode)
                for (int color = 1; color <= 9; ++color) {
                    RuleParams c;
                    c.mode = mode;
                    c.target_color = color;
                    candidates.push_back(c);
                }
            return best_of(rule_id, candidates, train);
        }
        case 16: {  // recolor_cnt: block length -> new color, learned
            for (std::size_t i = 0; i < train.size(); ++i) {
                auto in_blocks = find_blocks(train[i].input);
                auto out_blocks = find_blocks(train[i].output);
                if (in_blocks.size() != out_blocks.size()) return InferenceFailure{i};
                for (std::size_t k = 0; k < in_blocks.size(); ++k) {
                    if (in_blocks[k].start != out_blocks[k].start ||
                        in_blocks[k].length != out_blocks[k].length)
                        return InferenceFailure{i};
                    long long len = static_cast<long long>(in_blocks[k].length);
                    auto [it, inserted] =
                        params.length_recolor.emplace(len, out_blocks[k].color);
                    if (!inserted && it->second != out_blocks[k].color)
                        return InferenceFailure{i};
                }
            }
            std::size_t f = first_failure(rule_id, params, train);
            if (f != SIZE_MAX) return InferenceFailure{f};
            return params;
        }
        case 17: {  // recolor_oe: parity and target color
            std::vector<RuleParams> candidates;
            for (int parity = 0; parity < 2; ++parity)
                for (int color = 1; color <= 9; ++color) {
                    RuleParams c;
                    c.parity = parity;
                    c.target_color = color;
                    candidates.push_back(c);
                }
            return best_of(rule_id, candidates, train);
        }
        default: {
            std::size_t f = first_failure(rule_id, params, train);
            if (f != SIZE_MAX) return InferenceFailure{f};
            return params;
        }
    }
}

std::vector<Classification> classify_rule(const std::vector<Pair>& train,
                                          const std::vector<RuleInfo>& catalog) {
    std::vector<Classification> out;
    for (const auto& rule : catalog) {
        auto inferred = infer_params(rule.id, train);
        if (auto* params = std::get_if<RuleParams>(&inferred))
            out.push_back({rule.id, *params});
    }
    return out;
}

std::optional<int> parse_rule_selection(const std::string& text,
                                        const std::vector<RuleInfo>& catalog) {
    std::optional<int> selected;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::size_t i = 0;
        while (i < line.size() && (std::isspace(static_cast<unsigned char>(line[i])) ||
                                   line[i] == '-' || line[i] == '*'))
            ++i;
        std::size_t dstart = i;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
        if (i == dstart || i >= line.size() || (line[i] != ')' && line[i] != '.')) continue;
        int id = std::stoi(line.substr(dstart, i - dstart));
        ++i;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::string name;
        while (i < line.size() &&
               (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_'))
            name += line[i++];
        // Names are dataset category names, so a recognizable name beats
        // a conflicting number.
        const RuleInfo* by_name = nullptr;
        for (const auto& r : catalog)
            if (r.name == name) by_name = &r;
        if (by_name) { selected = by_name->id; continue; }
        for (const auto& r : catalog)
            if (r.id == id) selected = r.id;
    }
    if (selected) return selected;

    // Fallback: any catalog name mentioned in prose; rightmost mention
    // wins, longer names beat their prefixes.
    std::size_t best_pos = std::string::npos;
    std::size_t best_len = 0;
    for (const auto& r : catalog) {
        std::size_t pos = text.rfind(r.name);
        if (pos == std::string::npos) continue;
        if (best_pos == std::string::npos || pos > best_pos ||
            (pos == best_pos && r.name.size() > best_len)) {
            best_pos = pos;
            best_len = r.name.size();
            selected = r.id;
        }
    }
    return selected;
}

}  // namespace hcot::arc1d
