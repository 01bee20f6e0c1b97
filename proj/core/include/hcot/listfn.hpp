#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcot/catalog.hpp"

namespace hcot::listfn {

using IntList = std::vector<long long>;

struct Pair {
    IntList input;
    IntList output;
};

enum class Cmp : int { Lt = 0, Gt = 1, Le = 2, Ge = 3 };
bool cmp_holds(Cmp c, long long lhs, long long rhs);

/// A scheme with concrete parameter values. Parameters use a canonical
/// flat encoding per scheme (documented in listfn.cpp next to each
/// apply function), which makes ordering and equality trivial.
struct SchemeInstance {
    int scheme_id = 0;
    std::vector<long long> params;

    bool operator==(const SchemeInstance& o) const = default;
    bool operator<(const SchemeInstance& o) const {
        if (scheme_id != o.scheme_id) return scheme_id < o.scheme_id;
        return params < o.params;
    }
};

std::string instance_to_string(const SchemeInstance& inst, const std::vector<Scheme>& catalog);

/// Total on every input: out-of-range addressing yields the empty list or
/// leaves the list unchanged per the catalog wording; never throws for
/// in-domain instances.
IntList apply_scheme(const SchemeInstance& inst, const IntList& input);

struct FitResult {
    std::vector<SchemeInstance> candidates;  // each reproduces every training pair
    bool exhaustive = true;                  // grid fully enumerated
};

/// Enumerates each scheme's bounded parameter grid and keeps exactly the
/// instances consistent with all training pairs. Deterministic order:
/// scheme id ascending, then lexicographic parameters.
FitResult fit_scheme(const std::vector<Pair>& train, const std::vector<Scheme>& catalog);

/// The bounded parameter grid for one scheme given the training pairs
/// (value-dependent domains draw from the pairs). Exposed for the
/// fit-completeness oracle in tests.
std::vector<SchemeInstance> parameter_grid(const Scheme& scheme, const std::vector<Pair>& train);

enum class NoFitKind { Explicit, Unparseable };

struct SelectionResult {
    std::vector<int> scheme_ids;            // empty on no-fit
    std::optional<NoFitKind> no_fit;
    std::vector<std::string> warnings;      // id/name mismatches, etc.
};

/// Parses numbered `<id>) <SchemeName>` lines; "no abstract scheme fits"
/// maps to an explicit no-fit. On id/name mismatch the id wins and a
/// warning is recorded.
SelectionResult parse_scheme_selection(const std::string& text, const std::vector<Scheme>& catalog);

/// Exact list equality.
bool score_prediction(const IntList& predicted, const IntList& expected);

}  // namespace hcot::listfn
