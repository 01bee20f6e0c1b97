#include "hcot/listfn.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace hcot::listfn {

bool cmp_holds(Cmp c, long long lhs, long long rhs) {
    switch (c) {
        case Cmp::Lt: return lhs < rhs;
        case Cmp::Gt: return lhs > rhs;
        case Cmp::Le: return lhs <= rhs;
        case Cmp::Ge: return lhs >= rhs;
    }
    return false;
}

namespace {

// Negative indices count from the end (index -1 is the last element).
std::optional<std::size_t> resolve_index(long long i, std::size_t len) {
    long long n = static_cast<long long>(len);
    if (i < 0) i += n;
    if (i < 0 || i >= n) return std::nullopt;
    return static_cast<std::size_t>(i);
}

// Python slice bound resolution for a positive step: clamp into [0, len].
std::size_t resolve_bound(long long b, std::size_t len) {
    long long n = static_cast<long long>(len);
    if (b < 0) b += n;
    if (b < 0) b = 0;
    if (b > n) b = n;
    return static_cast<std::size_t>(b);
}

long long sum_slice(const IntList& x, long long start, long long end) {
    std::size_t s = resolve_bound(start, x.size());
    std::size_t e = resolve_bound(end, x.size());
    long long total = 0;
    for (std::size_t i = s; i < e; ++i) total += x[i];
    return total;
}

IntList erase_slice(const IntList& x, long long pos, long long len) {
    std::size_t s = resolve_bound(pos, x.size());
    std::size_t e = s + static_cast<std::size_t>(std::max<long long>(len, 0));
    if (e > x.size()) e = x.size();
    IntList out(x.begin(), x.begin() + static_cast<long long>(s));
    out.insert(out.end(), x.begin() + static_cast<long long>(e), x.end());
    return out;
}

IntList insert_at(IntList x, long long p, long long value, bool append_when_oob) {
    long long n = static_cast<long long>(x.size());
    long long q = p;
    if (q < 0) q += n;
    if (q < 0 || q > n) {
        if (append_when_oob) q = n;
        else q = std::clamp<long long>(q, 0, n);
    }
    x.insert(x.begin() + q, value);
    return x;
}

// Trims identical edge pairs until neither end has one. Repeating to a
// fixed point keeps the operation idempotent even on uniform runs.
IntList trim_edge_pairs(IntList x) {
    bool changed = true;
    while (changed && x.size() >= 2) {
        changed = false;
        if (x.size() >= 2 && x[0] == x[1]) {
            x.erase(x.begin(), x.begin() + 2);
            changed = true;
        }
        if (x.size() >= 2 && x[x.size() - 1] == x[x.size() - 2]) {
            x.erase(x.end() - 2, x.end());
            changed = true;
        }
    }
    return x;
}

long long trunc_div(long long a, long long k) { return a / k; }

}  // namespace

// Canonical parameter encodings (all values are long long):
//   1  FixedIndexSelector      [m]
//   2  SliceExtractor          [start, end, step]
//   3  ExtremumPicker          [0 = max, 1 = min]
//   4  FixedIndexSummer        [i...]          (1..3 sorted indices)
//   5  FixedIndexMultiplier    [i...]          (1..3 sorted indices)
//   6  SimpleSwap              [i, j]          (i < j)
//   7  ValueBasedSwap          [i, j, cmp]
//   8  FixedIndexRemover       [m]
//   9  ValueChanger            [i1, v1, (i2, v2)]  (pairs sorted by index)
//   10 SliceReverser           [start, end]
//   11 ThresholdFilter         [keep, cmp_gt(1)/cmp_lt(0), T]
//   12 ScalarArithmetic        [op(0 add,1 sub,2 mul,3 div), k]
//   13 DuplicateFilter         []
//   14 SliceSumInserter        [start, end, p]
//   15 SliceRemover            [pos, L]
//   16 EdgeDuplicateTrimmer    []
//   17 HeadTailChooser         [L, cmp]        (cmp(first,last) -> drop head, else tail)
//   18 SliceSumReinserter      [start, end, p]
//   19 FixedSliceRemover       [pos, L]        (alias of 15)
//   20 TwinEdgeRemover         []              (alias of 16)
//   21 AdaptiveEdgeSliceRemover [end(0 head,1 tail), L, cmp]
//   22 RelativeValueSwap       [cmp]           (addresses first min / first max)
//   23 SafeInserter            [v, p]
//   24 LengthReporter          []
IntList apply_scheme(const SchemeInstance& inst, const IntList& x) {
    const auto& p = inst.params;
    switch (inst.scheme_id) {
        case 1: {  // return element at fixed index m (empty if out of range)
            auto i = resolve_index(p[0], x.size());
            if (!i) return {};
            return {x[*i]};
        }
        case 2: {  // slice [start:end:step]
            if (p[2] <= 0) return {};
            std::size_t s = resolve_bound(p[0], x.size());
            std::size_t e = resolve_bound(p[1], x.size());
            IntList out;
            for (std::size_t i = s; i < e; i += static_cast<std::size_t>(p[2])) out.push_back(x[i]);
            return out;
        }
        case 3: {  // max or min
            if (x.empty()) return {};
            return {p[0] == 0 ? *std::max_element(x.begin(), x.end())
                              : *std::min_element(x.begin(), x.end())};
        }
        case 4: case 5: {  // sum / product of elements at specific indices
            long long acc = inst.scheme_id == 4 ? 0 : 1;
            for (long long raw : p) {
                auto i = resolve_index(raw, x.size());
                if (!i) return {};
                if (inst.scheme_id == 4) acc += x[*i];
                else acc *= x[*i];
            }
            return {acc};
        }
        case 6: {  // swap two specified indices
            auto i = resolve_index(p[0], x.size());
            auto j = resolve_index(p[1], x.size());
            if (!i || !j) return x;
            IntList out = x;
            std::swap(out[*i], out[*j]);
            return out;
        }
        case 7: {  // swap two fixed indices only if the size condition holds
            auto i = resolve_index(p[0], x.size());
            auto j = resolve_index(p[1], x.size());
            if (!i || !j) return x;
            if (!cmp_holds(static_cast<Cmp>(p[2]), x[*i], x[*j])) return x;
            IntList out = x;
            std::swap(out[*i], out[*j]);
            return out;
        }
        case 8: {  // remove element at fixed index m
            auto i = resolve_index(p[0], x.size());
            if (!i) return x;
            IntList out = x;
            out.erase(out.begin() + static_cast<long long>(*i));
            return out;
        }
        case 9: {  // replace values at selected indices
            IntList out = x;
            for (std::size_t k = 0; k + 1 < p.size(); k += 2) {
                auto i = resolve_index(p[k], x.size());
                if (i) out[*i] = p[k + 1];
            }
            return out;
        }
        case 10: {  // reverse a specified slice in place
            std::size_t s = resolve_bound(p[0], x.size());
            std::size_t e = resolve_bound(p[1], x.size());
            IntList out = x;
            if (s < e) std::reverse(out.begin() + static_cast<long long>(s),
                                    out.begin() + static_cast<long long>(e));
            return out;
        }
        case 11: {  // keep or discard elements greater/less than T
            bool keep = p[0] == 1;
            bool gt = p[1] == 1;
            long long t = p[2];
            IntList out;
            for (long long v : x) {
                bool hit = gt ? v > t : v < t;
                if (hit == keep) out.push_back(v);
            }
            return out;
        }
        case 12: {  // elementwise arithmetic with constant k
            IntList out;
            out.reserve(x.size());
            for (long long v : x) {
                switch (p[0]) {
                    case 0: out.push_back(v + p[1]); break;
                    case 1: out.push_back(v - p[1]); break;
                    case 2: out.push_back(v * p[1]); break;
                    default: out.push_back(trunc_div(v, p[1])); break;
                }
            }
            return out;
        }
        case 13: {  // remove repeated values, keep first occurrence
            IntList out;
            std::set<long long> seen;
            for (long long v : x)
                if (seen.insert(v).second) out.push_back(v);
            return out;
        }
        case 14: {  // insert the sum of a slice at fixed position p
            return insert_at(x, p[2], sum_slice(x, p[0], p[1]), false);
        }
        case 15: case 19:  // delete a slice of length L starting at pos
            return erase_slice(x, p[0], p[1]);
        case 16: case 20:  // identical edge pairs are deleted
            return trim_edge_pairs(x);
        case 17: {  // drop a head or tail segment based on endpoint sizes
            if (x.empty()) return {};
            std::size_t l = static_cast<std::size_t>(std::clamp<long long>(
                p[0], 0, static_cast<long long>(x.size())));
            bool head = cmp_holds(static_cast<Cmp>(p[1]), x.front(), x.back());
            if (head) return IntList(x.begin() + static_cast<long long>(l), x.end());
            return IntList(x.begin(), x.end() - static_cast<long long>(l));
        }
        case 18: {  // remove slice [start:end], re-insert its sum at p
            long long s = sum_slice(x, p[0], p[1]);
            std::size_t lo = resolve_bound(p[0], x.size());
            std::size_t hi = resolve_bound(p[1], x.size());
            IntList shortened(x.begin(), x.begin() + static_cast<long long>(lo));
            shortened.insert(shortened.end(), x.begin() + static_cast<long long>(hi), x.end());
            return insert_at(shortened, p[2], s, false);
        }
        case 21: {  // conditionally drop a fixed end's slice of length L
            if (x.empty()) return {};
            if (!cmp_holds(static_cast<Cmp>(p[2]), x.front(), x.back())) return x;
            std::size_t l = static_cast<std::size_t>(std::clamp<long long>(
                p[1], 0, static_cast<long long>(x.size())));
            if (p[0] == 0) return IntList(x.begin() + static_cast<long long>(l), x.end());
            return IntList(x.begin(), x.end() - static_cast<long long>(l));
        }
        case 22: {  // swap first minimum with first maximum under the condition
            if (x.empty()) return x;
            std::size_t pmin = static_cast<std::size_t>(
                std::min_element(x.begin(), x.end()) - x.begin());
            std::size_t pmax = static_cast<std::size_t>(
                std::max_element(x.begin(), x.end()) - x.begin());
            if (pmin == pmax) return x;
            if (!cmp_holds(static_cast<Cmp>(p[0]), x[pmin], x[pmax])) return x;
            IntList out = x;
            std::swap(out[pmin], out[pmax]);
            return out;
        }
        case 23:  // insert value at p; append when out of bounds
            return insert_at(x, p[1], p[0], true);
        case 24:  // sequence length as a singleton list
            return {static_cast<long long>(x.size())};
        default:
            return x;
    }
}

namespace {

constexpr long long kIndexLo = -8, kIndexHi = 8;

std::vector<long long> index_range() {
    std::vector<long long> out;
    for (long long i = kIndexLo; i <= kIndexHi; ++i) out.push_back(i);
    return out;
}

std::vector<long long> values_in_pairs(const std::vector<Pair>& train, bool outputs_only) {
    std::set<long long> vals;
    for (const auto& p : train) {
        if (!outputs_only)
            for (long long v : p.input) vals.insert(v);
        for (long long v : p.output) vals.insert(v);
    }
    return {vals.begin(), vals.end()};
}

std::vector<long long> scalar_constants(const std::vector<Pair>& train) {
    std::set<long long> vals;
    for (long long k = -10; k <= 10; ++k) vals.insert(k);
    for (long long v : values_in_pairs(train, false)) vals.insert(v);
    return {vals.begin(), vals.end()};
}

void push(std::vector<SchemeInstance>& grid, int id, std::vector<long long> params) {
    grid.push_back({id, std::move(params)});
}

}  // namespace

std::vector<SchemeInstance> parameter_grid(const Scheme& scheme, const std::vector<Pair>& train) {
    std::vector<SchemeInstance> grid;
    const auto idx = index_range();
    const int effective = scheme.alias_of != 0 ? scheme.alias_of : scheme.id;
    switch (effective) {
        case 1: case 8:
            for (long long m : idx) push(grid, scheme.id, {m});
            break;
        case 2:
            for (long long s : idx)
                for (long long e : idx)
                    for (long long step : {1, 2, 3}) push(grid, scheme.id, {s, e, step});
            break;
        case 3:
            push(grid, scheme.id, {0});
            push(grid, scheme.id, {1});
            break;
        case 4: case 5: {
            for (std::size_t i = 0; i < idx.size(); ++i) {
                push(grid, scheme.id, {idx[i]});
                for (std::size_t j = i + 1; j < idx.size(); ++j) {
                    push(grid, scheme.id, {idx[i], idx[j]});
                    for (std::size_t k = j + 1; k < idx.size(); ++k)
                        push(grid, scheme.id, {idx[i], idx[j], idx[k]});
                }
            }
            break;
        }
        case 6:
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = i + 1; j < idx.size(); ++j)
                    push(grid, scheme.id, {idx[i], idx[j]});
            break;
        case 7:
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = i + 1; j < idx.size(); ++j)
                    for (int c = 0; c < 4; ++c) push(grid, scheme.id, {idx[i], idx[j], c});
            break;
        case 9: {
            auto vals = values_in_pairs(train, true);
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (long long v : vals) push(grid, scheme.id, {idx[i], v});
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = i + 1; j < idx.size(); ++j)
                    for (long long v1 : vals)
                        for (long long v2 : vals)
                            push(grid, scheme.id, {idx[i], v1, idx[j], v2});
            break;
        }
        case 10:
            for (long long s : idx)
                for (long long e : idx) push(grid, scheme.id, {s, e});
            break;
        case 11:
            for (int keep = 0; keep < 2; ++keep)
                for (int gt = 0; gt < 2; ++gt)
                    for (long long t : values_in_pairs(train, false))
                        push(grid, scheme.id, {keep, gt, t});
            break;
        case 12:
            for (int op = 0; op < 4; ++op)
                for (long long k : scalar_constants(train)) {
                    if (op == 3 && k == 0) continue;
                    push(grid, scheme.id, {op, k});
                }
            break;
        case 13: case 16: case 24:
            push(grid, scheme.id, {});
            break;
        case 14: case 18:
            for (long long s : idx)
                for (long long e : idx)
                    for (long long p : idx) push(grid, scheme.id, {s, e, p});
            break;
        case 15:
            for (long long pos : idx)
                for (long long l = 1; l <= 8; ++l) push(grid, scheme.id, {pos, l});
            break;
        case 17:
            for (long long l = 1; l <= 8; ++l)
                for (int c = 0; c < 4; ++c) push(grid, scheme.id, {l, c});
            break;
        case 21:
            for (int end = 0; end < 2; ++end)
                for (long long l = 1; l <= 8; ++l)
                    for (int c = 0; c < 4; ++c) push(grid, scheme.id, {end, l, c});
            break;
        case 22:
            for (int c = 0; c < 4; ++c) push(grid, scheme.id, {c});
            break;
        case 23:
            for (long long v : values_in_pairs(train, true))
                for (long long p : idx) push(grid, scheme.id, {v, p});
            break;
        default:
            break;
    }
    return grid;
}

FitResult fit_scheme(const std::vector<Pair>& train, const std::vector<Scheme>& catalog) {
    FitResult result;
    for (const auto& scheme : catalog) {
        for (auto& inst : parameter_grid(scheme, train)) {
            bool ok = true;
            for (const auto& pair : train) {
                if (apply_scheme(inst, pair.input) != pair.output) {
                    ok = false;
                    break;
                }
            }
            if (ok) result.candidates.push_back(std::move(inst));
        }
    }
    std::sort(result.candidates.begin(), result.candidates.end());
    result.candidates.erase(std::unique(result.candidates.begin(), result.candidates.end()),
                            result.candidates.end());
    return result;
}

std::string instance_to_string(const SchemeInstance& inst, const std::vector<Scheme>& catalog) {
    std::string name = "scheme" + std::to_string(inst.scheme_id);
    for (const auto& s : catalog)
        if (s.id == inst.scheme_id) name = s.name;
    std::ostringstream out;
    out << name << "(";
    for (std::size_t i = 0; i < inst.params.size(); ++i) {
        if (i) out << ",";
        out << inst.params[i];
    }
    out << ")";
    return out.str();
}

SelectionResult parse_scheme_selection(const std::string& text,
                                       const std::vector<Scheme>& catalog) {
    SelectionResult result;
    std::string lower;
    lower.reserve(text.size());
    for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const bool explicit_nofit = lower.find("no abstract scheme fits") != std::string::npos;

    std::istringstream lines(text);
    std::string line;
    std::set<int> seen;
    while (std::getline(lines, line)) {
        // Accept "1) Name", "- 1) Name", "1. Name".
        std::size_t i = 0;
        while (i < line.size() && (std::isspace(static_cast<unsigned char>(line[i])) ||
                                   line[i] == '-' || line[i] == '*'))
            ++i;
        std::size_t dstart = i;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
        if (i == dstart) continue;
        if (i >= line.size() || (line[i] != ')' && line[i] != '.')) continue;
        int id = std::stoi(line.substr(dstart, i - dstart));
        ++i;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::string name;
        while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) ||
                                   line[i] == '_'))
            name += line[i++];

        const Scheme* by_id = nullptr;
        for (const auto& s : catalog)
            if (s.id == id) by_id = &s;
        if (!by_id) continue;
        if (!name.empty() && name != by_id->name) {
            bool known_name = false;
            for (const auto& s : catalog) known_name |= s.name == name;
            if (known_name)
                result.warnings.push_back("id/name mismatch: " + std::to_string(id) + ") " + name +
                                          "; id wins");
        }
        if (seen.insert(id).second) result.scheme_ids.push_back(id);
    }

    if (!result.scheme_ids.empty()) return result;
    result.no_fit = explicit_nofit ? NoFitKind::Explicit : NoFitKind::Unparseable;
    return result;
}

bool score_prediction(const IntList& predicted, const IntList& expected) {
    return predicted == expected;
}

}  // namespace hcot::listfn
