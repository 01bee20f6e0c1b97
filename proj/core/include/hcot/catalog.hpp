#pragma once

#include <string>
#include <vector>

#include "hcot/game24.hpp"

namespace hcot {

/// Resolves the directory holding the catalog/prompt data files.
/// Precedence: explicit argument, HCOT_DATA_DIR env var, compiled-in
/// default (the source tree's core/data, or the install share dir).
std::string resolve_data_dir(const std::string& override_dir = "");

namespace listfn {
struct Scheme {
    int id = 0;            // 1..24; 1..16 = partition A, 17..24 = partition B
    std::string name;      // catalog name, e.g. "FixedIndexSelector"
    std::string prompt_text;  // verbatim catalog line shown to the model
    int alias_of = 0;      // nonzero when this entry shares another's semantics
};
}  // namespace listfn

namespace arc1d {
struct RuleInfo {
    int id = 0;            // 1..18 in catalog order
    std::string name;      // dataset category name, e.g. "1d_fill"
    std::string prompt_text;  // verbatim rule block shown to the model
    bool needs_inference = false;
};
}  // namespace arc1d

struct PromptLibrary {
    // HCoT stage prompt templates per domain; placeholders {{task}},
    // {{description}} and {{templates}} are substituted at run time.
    std::string game24_abstract, game24_match_header, game24_match_fallback, game24_refine,
        game24_refine_fallback;
    std::string listfn_abstract, listfn_match_header, listfn_match_return, listfn_refine,
        listfn_refine_fallback;
    std::string arc1d_abstract, arc1d_match_header, arc1d_match_return, arc1d_refine,
        arc1d_refine_fallback;

    // Baseline strategy pieces.
    std::string io_header, cot_header, autocot_suffix, tot_prompt_preamble;
    std::vector<std::pair<std::string, std::string>> game24_io_shots;   // puzzle -> answer
    std::vector<std::pair<std::string, std::string>> game24_cot_shots;  // puzzle -> reasoned trace
    std::string tot_propose, tot_value;  // 24 Game search prompts
};

struct Catalogs {
    std::vector<game24::Pattern24> game24;  // 16 patterns
    std::vector<listfn::Scheme> listfn;     // 24 schemes
    std::vector<arc1d::RuleInfo> arc1d;     // 18 rules
    PromptLibrary prompts;
};

/// Loads every catalog and the prompt library from the data directory.
/// Throws std::runtime_error on missing files or schema violations.
Catalogs load_catalogs(const std::string& data_dir);

}  // namespace hcot
