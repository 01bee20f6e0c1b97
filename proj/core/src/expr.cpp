#include "hcot/expr.hpp"

#include <algorithm>
#include <cctype>

namespace hcot::game24 {

char op_symbol(BinOp op) {
    switch (op) {
        case BinOp::Add: return '+';
        case BinOp::Sub: return '-';
        case BinOp::Mul: return '*';
        case BinOp::Div: return '/';
    }
    return '?';
}

ExprPtr make_leaf(std::int64_t value) {
    auto e = std::make_shared<Expr>();
    e->leaf = value;
    return e;
}

ExprPtr make_node(BinOp op, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
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

    ExprPtr sum() {
        ExprPtr e = product();
        for (;;) {
            if (peek_is('+')) { ++pos_; e = make_node(BinOp::Add, e, product()); }
            else if (peek_is('-')) { ++pos_; e = make_node(BinOp::Sub, e, product()); }
            else return e;
        }
    }

    ExprPtr product() {
        ExprPtr e = atom();
        for (;;) {
            if (peek_is('*')) { ++pos_; e = make_node(BinOp::Mul, e, atom()); }
            else if (peek_is('x') || peek_is('X')) { ++pos_; e = make_node(BinOp::Mul, e, atom()); }
            else if (peek_is('/')) { ++pos_; e = make_node(BinOp::Div, e, atom()); }
            else return e;
        }
    }

    ExprPtr atom() {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = sum();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw ParseError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::int64_t v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + (text_[pos_] - '0');
                if (v > 1'000'000) throw ParseError("integer literal too large", start);
                ++pos_;
            }
            // A decimal point would make the leaf non-integer; reject it.
            if (pos_ < text_.size() && text_[pos_] == '.')
                throw ParseError("non-integer literal", pos_);
            return make_leaf(v);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::optional<Rational> eval_exact(const Expr& e) {
    if (e.is_leaf()) return Rational(e.leaf);
    auto l = eval_exact(*e.lhs);
    if (!l) return std::nullopt;
    auto r = eval_exact(*e.rhs);
    if (!r) return std::nullopt;
    switch (e.op) {
        case BinOp::Add: return *l + *r;
        case BinOp::Sub: return *l - *r;
        case BinOp::Mul: return *l * *r;
        case BinOp::Div:
            if (r->is_zero()) return std::nullopt;
            return *l / *r;
    }
    return std::nullopt;
}

namespace {
void collect_leaves(const Expr& e, std::vector<std::int64_t>& out) {
    if (e.is_leaf()) { out.push_back(e.leaf); return; }
    collect_leaves(*e.lhs, out);
    collect_leaves(*e.rhs, out);
}
}  // namespace

std::vector<std::int64_t> leaf_values(const Expr& e) {
    std::vector<std::int64_t> out;
    collect_leaves(e, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Expr& e) {
    if (e.is_leaf()) return std::to_string(e.leaf);
    std::string l = to_string(*e.lhs);
    std::string r = to_string(*e.rhs);
    return "(" + l + " " + op_symbol(e.op) + " " + r + ")";
}

}  // namespace hcot::game24
