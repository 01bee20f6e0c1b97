#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hcot/catalog.hpp"

namespace hcot::arc1d {

/// Linear grid of color values in [0,9]; 0 is background.
using Grid = std::vector<int>;

struct Pair {
    Grid input;
    Grid output;
};

struct Block {
    std::size_t start = 0;
    std::size_t length = 0;
    int color = 0;

    bool operator==(const Block&) const = default;
};

/// Maximal same-color nonzero runs, left to right.
std::vector<Block> find_blocks(const Grid& g);

/// Maximal nonzero runs regardless of color (used by flip/mirror-style
/// rules whose "segment" may span two colors).
std::vector<std::pair<std::size_t, std::size_t>> find_segments(const Grid& g);  // (start, length)

/// Learned per-task data for the rules that need inference.
struct RuleParams {
    std::map<long long, int> length_recolor;  // recolor_cnt: block length -> new color
    int parity = -1;                          // recolor_oe: 0 even, 1 odd
    int target_color = -1;                    // recolor_oe / recolor_cmp
    int mode = -1;                            // recolor_cmp: 0 = longest, 1 = non-longest
    int direction = 1;                        // move_2p: +1 right, -1 left

    bool operator==(const RuleParams&) const = default;
};

/// Applies rule `rule_id` (catalog order, 1..18). nullopt means the rule's
/// stated preconditions do not hold on this grid (NotApplicable); the
/// harness scores that as incorrect rather than erroring.
std::optional<Grid> apply_rule(int rule_id, const RuleParams& params, const Grid& g);

struct InferenceFailure {
    std::size_t pair_index = 0;  // first training pair no parameterization explains
};

std::variant<RuleParams, InferenceFailure> infer_params(int rule_id,
                                                        const std::vector<Pair>& train);

struct Classification {
    int rule_id = 0;
    RuleParams params;
};

/// Every rule (with inferred params) that exactly reproduces all training
/// pairs, ordered by catalog id; the first entry is the primary match.
std::vector<Classification> classify_rule(const std::vector<Pair>& train,
                                          const std::vector<RuleInfo>& catalog);

/// Parses `<id>) <rule_name>`; on id/name mismatch the name wins (rule
/// names are dataset category names). Falls back to a substring search
/// for any catalog name. nullopt = no fit extractable.
std::optional<int> parse_rule_selection(const std::string& text,
                                        const std::vector<RuleInfo>& catalog);

}  // namespace hcot::arc1d
