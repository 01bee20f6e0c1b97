#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcot/expr.hpp"

namespace hcot::game24 {

/// A puzzle is a multiset of four integers in [1,13], kept sorted.
using Puzzle = std::array<int, 4>;

Puzzle make_puzzle(int a, int b, int c, int d);

struct Verdict {
    bool valid = false;
    std::string reason;  // empty when valid
};

/// Checks the full game contract: the text parses, its leaves equal the
/// puzzle multiset, and it evaluates to exactly 24. All failures are
/// reported through the verdict, never thrown.
Verdict verify_solution(const Puzzle& puzzle, const std::string& text);

/// Exhaustive search over leaf orderings, operator choices and the five
/// parenthesization shapes (at most 4! * 4^3 * 5 = 7680 candidates).
/// Division by zero silently rejects a candidate.
std::optional<ExprPtr> brute_force_solve(const Puzzle& puzzle);

/// All ways to reach `target` from an arbitrary list of leaves (used by
/// the compositional pattern search; exposed for tests).
std::vector<ExprPtr> reach_exact(const std::vector<std::int64_t>& values, const Rational& target);

/// Every solvable multiset over {1..13} choose 4 with repetition, sorted
/// ascending. The full space has 1820 multisets; the solvable subset is
/// the canonical 4nums puzzle list.
std::vector<Puzzle> generate_canonical_puzzles();

enum class PatternKind { Template, Compositional, Constraint };

/// One pre-enumerated solution pattern from the matching catalog.
struct Pattern24 {
    int id = 0;                     // 1..16 across the full catalog
    PatternKind kind = PatternKind::Template;
    std::string prompt_text;        // verbatim block shown in the matching prompt
    std::string example;            // worked example expression, "" if none

    // Template: one or more expression skeletons over slots a,b,c,d.
    std::vector<std::string> skeletons;
    // Constraint: skeleton plus a required slot equality (e.g. c == d).
    std::pair<char, char> equal_slots{'c', 'd'};
    // Compositional: build t1 and t2 from the four numbers, then combine.
    // combine == "mul" multiplies the parts; "sum_or_diff" accepts any
    // split whose parts sum or differ to 24 (targets unused).
    std::int64_t target1 = 0, target2 = 0;
    std::string combine;
};

struct Assignment {
    // Values bound to slots a,b,c,d in order; for compositional patterns
    // this is the leaf order of the produced expression.
    std::array<std::int64_t, 4> slots{};
};

struct Instantiation {
    Assignment assignment;
    ExprPtr expr;
};

/// All distinct instantiations of a pattern on a puzzle. Every returned
/// expression passes verify_solution; an empty result means the pattern
/// does not apply. Deterministic order (render-string ascending).
std::vector<Instantiation> pattern_instantiations(const Puzzle& puzzle, const Pattern24& pattern);

struct CoverageReport {
    // pattern id -> number of puzzles with at least one instantiation
    std::map<int, std::size_t> per_pattern;
    std::size_t union_count = 0;
    std::size_t total_puzzles = 0;
};

CoverageReport oracle_pattern_coverage(const std::vector<Puzzle>& puzzles,
                                       const std::vector<Pattern24>& catalog);

std::string coverage_to_csv(const CoverageReport& report);

/// Pulls the last `Answer: <expr>` line out of a completion; falls back to
/// the last parseable 4-leaf expression anywhere in the text.
std::optional<std::string> extract_answer_expr(const std::string& completion_text);

}  // namespace hcot::game24
