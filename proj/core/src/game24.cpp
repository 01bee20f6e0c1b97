#include "hcot/game24.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace hcot::game24 {

namespace {

const Rational kTarget(24);

constexpr std::array<BinOp, 4> kOps{BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div};

std::optional<Rational> apply_op(BinOp op, const Rational& l, const Rational& r) {
    switch (op) {
        case BinOp::Add: return l + r;
        case BinOp::Sub: return l - r;
        case BinOp::Mul: return l * r;
        case BinOp::Div:
            if (r.is_zero()) return std::nullopt;
            return l / r;
    }
    return std::nullopt;
}

}  // namespace

Puzzle make_puzzle(int a, int b, int c, int d) {
    Puzzle p{a, b, c, d};
    std::sort(p.begin(), p.end());
    return p;
}

Verdict verify_solution(const Puzzle& puzzle, const std::string& text) {
    ExprPtr e;
    try {
        e = parse_expr(text);
    } catch (const ParseError& err) {
        return {false, std::string("parse error: ") + err.what() + " at position " +
                           std::to_string(err.position())};
    }
    auto leaves = leaf_values(*e);
    std::vector<std::int64_t> want(puzzle.begin(), puzzle.end());
    if (leaves != want) return {false, "numbers used != puzzle"};
    auto value = eval_exact(*e);
    if (!value) return {false, "division by zero"};
    if (*value != kTarget) return {false, "evaluates to " + value->str()};
    return {true, ""};
}

std::optional<ExprPtr> brute_force_solve(const Puzzle& puzzle) {
    std::array<std::int64_t, 4> v{puzzle[0], puzzle[1], puzzle[2], puzzle[3]};
    // next_permutation over the sorted array enumerates each distinct
    // ordering of the multiset exactly once.
    do {
        std::array<Rational, 4> r{Rational(v[0]), Rational(v[1]), Rational(v[2]), Rational(v[3])};
        for (BinOp o1 : kOps) {
            for (BinOp o2 : kOps) {
                for (BinOp o3 : kOps) {
                    for (int shape = 0; shape < 5; ++shape) {
                        std::optional<Rational> value;
                        switch (shape) {
                            case 0: {  // ((a o1 b) o2 c) o3 d
                                auto t1 = apply_op(o1, r[0], r[1]);
                                if (!t1) break;
                                auto t2 = apply_op(o2, *t1, r[2]);
                                if (!t2) break;
                                value = apply_op(o3, *t2, r[3]);
                                break;
                            }
                            case 1: {  // (a o1 (b o2 c)) o3 d
                                auto t1 = apply_op(o2, r[1], r[2]);
                                if (!t1) break;
                                auto t2 = apply_op(o1, r[0], *t1);
                                if (!t2) break;
                                value = apply_op(o3, *t2, r[3]);
                                break;
                            }
                            case 2: {  // (a o1 b) o2 (c o3 d)
                                auto t1 = apply_op(o1, r[0], r[1]);
                                if (!t1) break;
                                auto t2 = apply_op(o3, r[2], r[3]);
                                if (!t2) break;
                                value = apply_op(o2, *t1, *t2);
                                break;
                            }
                            case 3: {  // a o1 ((b o2 c) o3 d)
                                auto t1 = apply_op(o2, r[1], r[2]);
                                if (!t1) break;
                                auto t2 = apply_op(o3, *t1, r[3]);
                                if (!t2) break;
                                value = apply_op(o1, r[0], *t2);
                                break;
                            }
                            case 4: {  // a o1 (b o2 (c o3 d))
                                auto t1 = apply_op(o3, r[2], r[3]);
                                if (!t1) break;
                                auto t2 = apply_op(o2, r[1], *t1);
                                if (!t2) break;
                                value = apply_op(o1, r[0], *t2);
                                break;
                            }
                        }
                        if (!value || *value != kTarget) continue;
                        auto a = make_leaf(v[0]), b = make_leaf(v[1]);
                        auto c = make_leaf(v[2]), d = make_leaf(v[3]);
                        switch (shape) {
                            case 0: return make_node(o3, make_node(o2, make_node(o1, a, b), c), d);
                            case 1: return make_node(o3, make_node(o1, a, make_node(o2, b, c)), d);
                            case 2: return make_node(o2, make_node(o1, a, b), make_node(o3, c, d));
                            case 3: return make_node(o1, a, make_node(o3, make_node(o2, b, c), d));
                            case 4: return make_node(o1, a, make_node(o2, b, make_node(o3, c, d)));
                        }
                    }
                }
            }
        }
    } while (std::next_permutation(v.begin(), v.end()));
    return std::nullopt;
}

namespace {

struct Valued {
    Rational value;
    ExprPtr expr;
};

// All values reachable from the exact multiset `values`, with witnessing
// expressions. Lists here never exceed 3 elements.
std::vector<Valued> all_results(const std::vector<std::int64_t>& values) {
    std::vector<Valued> out;
    const std::size_t n = values.size();
    if (n == 1) {
        out.push_back({Rational(values[0]), make_leaf(values[0])});
        return out;
    }
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<std::int64_t> left, right;
        for (std::size_t i = 0; i < n; ++i)
            ((mask >> i) & 1u ? left : right).push_back(values[i]);
        for (const auto& l : all_results(left)) {
            for (const auto& r : all_results(right)) {
                for (BinOp op : kOps) {
                    auto v = apply_op(op, l.value, r.value);
                    if (!v) continue;
                    out.push_back({*v, make_node(op, l.expr, r.expr)});
                }
            }
        }
    }
    return out;
}

std::vector<std::int64_t> expr_leaf_order(const Expr& e) {
    std::vector<std::int64_t> out;
    std::function<void(const Expr&)> walk = [&](const Expr& n) {
        if (n.is_leaf()) { out.push_back(n.leaf); return; }
        walk(*n.lhs);
        walk(*n.rhs);
    };
    walk(e);
    return out;
}

Assignment assignment_from_expr(const Expr& e) {
    auto order = expr_leaf_order(e);
    Assignment a;
    for (std::size_t i = 0; i < 4 && i < order.size(); ++i) a.slots[i] = order[i];
    return a;
}

// --- skeleton parsing: expressions over integer literals and slots a-d ---

struct Skel;
using SkelPtr = std::shared_ptr<const Skel>;
struct Skel {
    int slot = -1;  // 0..3 when a slot leaf
    std::int64_t leaf = 0;
    bool is_leaf_node = false;
    BinOp op = BinOp::Add;
    SkelPtr lhs, rhs;
};

class SkelParser {
public:
    explicit SkelParser(const std::string& text) : text_(text) {}
    SkelPtr parse() {
        auto e = sum();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    SkelPtr binary(BinOp op, SkelPtr l, SkelPtr r) {
        auto n = std::make_shared<Skel>();
        n->op = op; n->lhs = std::move(l); n->rhs = std::move(r);
        return n;
    }
    SkelPtr sum() {
        auto e = product();
        for (;;) {
            if (peek_is('+')) { ++pos_; e = binary(BinOp::Add, e, product()); }
            else if (peek_is('-')) { ++pos_; e = binary(BinOp::Sub, e, product()); }
            else return e;
        }
    }
    SkelPtr product() {
        auto e = atom();
        for (;;) {
            if (peek_is('*')) { ++pos_; e = binary(BinOp::Mul, e, atom()); }
            else if (peek_is('/')) { ++pos_; e = binary(BinOp::Div, e, atom()); }
            else return e;
        }
    }
    SkelPtr atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = sum();
            if (!peek_is(')')) throw ParseError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (c >= 'a' && c <= 'd') {
            ++pos_;
            auto n = std::make_shared<Skel>();
            n->is_leaf_node = true;
            n->slot = c - 'a';
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            auto n = std::make_shared<Skel>();
            n->is_leaf_node = true;
            n->slot = -1;
            n->leaf = v;
            return n;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
    const std::string& text_;
    std::size_t pos_ = 0;
};

ExprPtr instantiate_skel(const Skel& s, const std::array<std::int64_t, 4>& slots) {
    if (s.is_leaf_node)
        return make_leaf(s.slot >= 0 ? slots[s.slot] : s.leaf);
    return make_node(s.op, instantiate_skel(*s.lhs, slots), instantiate_skel(*s.rhs, slots));
}

void add_template_instantiations(const Puzzle& puzzle, const Pattern24& pattern,
                                 bool require_equal_slots,
                                 std::vector<Instantiation>& out) {
    std::vector<SkelPtr> skels;
    skels.reserve(pattern.skeletons.size());
    for (const auto& s : pattern.skeletons) skels.push_back(SkelParser(s).parse());

    std::array<std::int64_t, 4> v{puzzle[0], puzzle[1], puzzle[2], puzzle[3]};
    std::set<std::string> seen;
    do {
        if (require_equal_slots) {
            int i = pattern.equal_slots.first - 'a';
            int j = pattern.equal_slots.second - 'a';
            if (v[i] != v[j]) continue;
        }
        for (const auto& sk : skels) {
            ExprPtr e = instantiate_skel(*sk, v);
            auto value = eval_exact(*e);
            if (!value || *value != kTarget) continue;
            std::string key = to_string(*e);
            if (!seen.insert(key).second) continue;
            Assignment a;
            a.slots = v;
            out.push_back({a, e});
        }
    } while (std::next_permutation(v.begin(), v.end()));
}

void add_compositional_instantiations(const Puzzle& puzzle, const Pattern24& pattern,
                                      std::vector<Instantiation>& out) {
    const bool sum_or_diff = pattern.combine == "sum_or_diff";
    const Rational t1(pattern.target1), t2(pattern.target2);
    std::set<std::string> seen;

    auto emit = [&](ExprPtr e) {
        std::string key = to_string(*e);
        if (!seen.insert(key).second) return;
        out.push_back({assignment_from_expr(*e), e});
    };
    auto try_combine = [&](const Valued& l, const Valued& r) {
        if (sum_or_diff) {
            if (l.value + r.value == kTarget) emit(make_node(BinOp::Add, l.expr, r.expr));
            if (l.value - r.value == kTarget) emit(make_node(BinOp::Sub, l.expr, r.expr));
            if (r.value - l.value == kTarget) emit(make_node(BinOp::Sub, r.expr, l.expr));
            return;
        }
        if (l.value == t1 && r.value == t2) emit(make_node(BinOp::Mul, l.expr, r.expr));
        if (l.value == t2 && r.value == t1) emit(make_node(BinOp::Mul, r.expr, l.expr));
    };

    std::vector<std::int64_t> values(puzzle.begin(), puzzle.end());
    // 2+2 splits: one binary op per side.
    for (unsigned mask = 1; mask < 15; ++mask) {
        if (__builtin_popcount(mask) != 2) continue;
        std::vector<std::int64_t> g1, g2;
        for (int i = 0; i < 4; ++i) ((mask >> i) & 1u ? g1 : g2).push_back(values[i]);
        for (const auto& l : all_results(g1))
            for (const auto& r : all_results(g2)) try_combine(l, r);
    }
    // 1+3 splits: a bare number on one side, two ops on the other.
    for (int i = 0; i < 4; ++i) {
        std::vector<std::int64_t> rest;
        for (int j = 0; j < 4; ++j)
            if (j != i) rest.push_back(values[j]);
        Valued single{Rational(values[i]), make_leaf(values[i])};
        for (const auto& r : all_results(rest)) try_combine(single, r);
    }
}

}  // namespace

std::vector<ExprPtr> reach_exact(const std::vector<std::int64_t>& values, const Rational& target) {
    std::vector<ExprPtr> out;
    std::set<std::string> seen;
    for (const auto& v : all_results(values)) {
        if (v.value != target) continue;
        if (seen.insert(to_string(*v.expr)).second) out.push_back(v.expr);
    }
    return out;
}

std::vector<Puzzle> generate_canonical_puzzles() {
    std::vector<Puzzle> out;
    for (int a = 1; a <= 13; ++a)
        for (int b = a; b <= 13; ++b)
            for (int c = b; c <= 13; ++c)
                for (int d = c; d <= 13; ++d) {
                    Puzzle p{a, b, c, d};
                    if (brute_force_solve(p)) out.push_back(p);
                }
    return out;  // loop order is already canonical ascending
}

std::vector<Instantiation> pattern_instantiations(const Puzzle& puzzle, const Pattern24& pattern) {
    std::vector<Instantiation> out;
    switch (pattern.kind) {
        case PatternKind::Template:
            add_template_instantiations(puzzle, pattern, false, out);
            break;
        case PatternKind::Constraint:
            add_template_instantiations(puzzle, pattern, true, out);
            break;
        case PatternKind::Compositional:
            add_compositional_instantiations(puzzle, pattern, out);
            break;
    }
    std::sort(out.begin(), out.end(), [](const Instantiation& x, const Instantiation& y) {
        return to_string(*x.expr) < to_string(*y.expr);
    });
    return out;
}

CoverageReport oracle_pattern_coverage(const std::vector<Puzzle>& puzzles,
                                       const std::vector<Pattern24>& catalog) {
    CoverageReport report;
    report.total_puzzles = puzzles.size();
    for (const auto& p : catalog) report.per_pattern[p.id] = 0;
    for (const auto& puzzle : puzzles) {
        bool any = false;
        for (const auto& p : catalog) {
            if (!pattern_instantiations(puzzle, p).empty()) {
                ++report.per_pattern[p.id];
                any = true;
            }
        }
        if (any) ++report.union_count;
    }
    return report;
}

std::string coverage_to_csv(const CoverageReport& report) {
    std::ostringstream out;
    out << "pattern_id,covered_count\n";
    for (const auto& [id, count] : report.per_pattern) out << id << "," << count << "\n";
    out << "union," << report.union_count << "\n";
    return out.str();
}

std::optional<std::string> extract_answer_expr(const std::string& completion_text) {
    // Normalize the unicode operators chat models like to emit.
    std::string text;
    text.reserve(completion_text.size());
    for (std::size_t i = 0; i < completion_text.size();) {
        unsigned char c = completion_text[i];
        if (c == 0xC3 && i + 1 < completion_text.size()) {
            unsigned char d = completion_text[i + 1];
            if (d == 0x97) { text += '*'; i += 2; continue; }  // ×
            if (d == 0xB7) { text += '/'; i += 2; continue; }  // ÷
        }
        if (c == 0xE2 && i + 2 < completion_text.size() &&
            static_cast<unsigned char>(completion_text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(completion_text[i + 2]) == 0x92) {
            text += '-';  // − (minus sign)
            i += 3;
            continue;
        }
        text += static_cast<char>(c);
        ++i;
    }

    auto try_parse4 = [](const std::string& s) -> std::optional<std::string> {
        std::string trimmed = s;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        std::size_t b = 0;
        while (b < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[b]))) ++b;
        trimmed = trimmed.substr(b);
        if (trimmed.empty()) return std::nullopt;
        try {
            auto e = parse_expr(trimmed);
            if (leaf_values(*e).size() == 4) return trimmed;
        } catch (const ParseError&) {
        }
        return std::nullopt;
    };

    // Preferred: the last line of the form "Answer: <expr>" (an "= 24"
    // tail is tolerated).
    std::optional<std::string> found;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto pos = line.find("Answer:");
        if (pos == std::string::npos) pos = line.find("answer:");
        if (pos == std::string::npos) continue;
        std::string rhs = line.substr(pos + 7);
        auto eq = rhs.find('=');
        if (eq != std::string::npos) rhs = rhs.substr(0, eq);
        if (auto e = try_parse4(rhs)) found = e;
    }
    if (found) return found;

    // Fallback: the last maximal arithmetic-looking substring that parses
    // to a 4-leaf expression. '=' terminates a candidate.
    auto is_expr_char = [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '*' ||
               c == '/' || c == '(' || c == ')' || c == ' ' || c == '\t';
    };
    std::size_t i = 0;
    while (i < text.size()) {
        if (!is_expr_char(text[i])) { ++i; continue; }
        std::size_t j = i;
        while (j < text.size() && is_expr_char(text[j])) ++j;
        if (auto e = try_parse4(text.substr(i, j - i))) found = e;
        i = j;
    }
    return found;
}

}  // namespace hcot::game24
