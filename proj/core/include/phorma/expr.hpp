#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace phorma {

/// Relation between two coordinates of an index vector.
enum class OrderOp { Le, Ge, Lt, Gt, Eq, Ne };

/// The relation with the opposite truth table (Le <-> Gt, Ge <-> Lt, Eq <-> Ne).
OrderOp negation(OrderOp op) noexcept;

/// Evaluates `lhs <op> rhs`.
bool apply(OrderOp op, int lhs, int rhs) noexcept;

/// Spelling used by the restriction grammar: "<=", ">=", "<", ">", "=", "!=".
std::string_view symbol(OrderOp op) noexcept;

/// Boolean restriction over the coordinates of an index vector, stored as a
/// tree. Leaves compare two coordinates (1-based); inner nodes are AND, OR
/// and NOT. Trees come out of parse_expr() and are immutable afterwards, so
/// evaluation is safe from any number of threads.
struct ExprTree {
  enum class Kind { And, Or, Not, Literal, True };

  Kind kind = Kind::True;
  std::vector<ExprTree> children;  // And/Or: one or more; Not: exactly one
  int lhs = 0;                     // literal only, 1-based coordinate
  OrderOp op = OrderOp::Le;        // literal only
  int rhs = 0;                     // literal only, 1-based coordinate
  int dimension = 0;               // set on the root by parse_expr()
};

/// Raised by parse_expr(); carries the offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses a restriction against vectors of length `dimension`.
///
/// Grammar (whitespace insignificant):
///   expr    := term { "|" term }
///   term    := factor { "&" factor }
///   factor  := "!" factor | "(" expr ")" | literal
///   literal := coord op coord
///   coord   := "a" integer                      (1-based, at most dimension)
///   op      := "<=" | ">=" | "<" | ">" | "=" | "!="
///
/// An empty (or all-whitespace) string yields the constant-true restriction.
ExprTree parse_expr(std::string_view text, int dimension);

/// Evaluates the restriction on a vector. For parsed trees the vector length
/// must equal the dimension the tree was parsed against.
bool evaluate(const ExprTree& tree, std::span<const int> values);

/// Renders the tree back to the grammar above, fully parenthesized.
std::string to_string(const ExprTree& tree);

}  // namespace phorma
