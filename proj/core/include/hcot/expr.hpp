#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hcot/rational.hpp"

namespace hcot::game24 {

enum class BinOp { Add, Sub, Mul, Div };

char op_symbol(BinOp op);

/// Binary expression tree over + - * / with integer leaves.
/// Immutable after construction; shared_ptr children make subtree reuse
/// during search cheap.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    // Leaf when children are null.
    std::int64_t leaf = 0;
    BinOp op = BinOp::Add;
    ExprPtr lhs;
    ExprPtr rhs;

    bool is_leaf() const { return lhs == nullptr; }
};

ExprPtr make_leaf(std::int64_t value);
ExprPtr make_node(BinOp op, ExprPtr lhs, ExprPtr rhs);

/// Thrown by parse_expr with a 0-based character position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Standard precedence (*, / over +, -), left-associative, parentheses
/// honored. Leaves must be nonnegative integer literals; unary minus is
/// rejected.
ExprPtr parse_expr(const std::string& text);

/// Exact rational evaluation; nullopt signals division by zero somewhere
/// in the tree (a value outcome, not an error).
std::optional<Rational> eval_exact(const Expr& e);

/// Multiset of integer leaves, sorted ascending.
std::vector<std::int64_t> leaf_values(const Expr& e);

/// Renders with parentheses around every binary node, so the output
/// reparses to the identical tree.
std::string to_string(const Expr& e);

}  // namespace hcot::game24
