#include "phorma/expr.hpp"

#include <algorithm>
#include <cctype>

namespace phorma {

OrderOp negation(OrderOp op) noexcept {
  switch (op) {
    case OrderOp::Le: return OrderOp::Gt;
    case OrderOp::Ge: return OrderOp::Lt;
    case OrderOp::Lt: return OrderOp::Ge;
    case OrderOp::Gt: return OrderOp::Le;
    case OrderOp::Eq: return OrderOp::Ne;
    case OrderOp::Ne: return OrderOp::Eq;
  }
  return OrderOp::Le;  // unreachable
}

bool apply(OrderOp op, int lhs, int rhs) noexcept {
  switch (op) {
    case OrderOp::Le: return lhs <= rhs;
    case OrderOp::Ge: return lhs >= rhs;
    case OrderOp::Lt: return lhs < rhs;
    case OrderOp::Gt: return lhs > rhs;
    case OrderOp::Eq: return lhs == rhs;
    case OrderOp::Ne: return lhs != rhs;
  }
  return false;  // unreachable
}

std::string_view symbol(OrderOp op) noexcept {
  switch (op) {
    case OrderOp::Le: return "<=";
    case OrderOp::Ge: return ">=";
    case OrderOp::Lt: return "<";
    case OrderOp::Gt: return ">";
    case OrderOp::Eq: return "=";
    case OrderOp::Ne: return "!=";
  }
  return "?";  // unreachable
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int dimension) : text_(text), dimension_(dimension) {}

  ExprTree run() {
    skip_ws();
    if (done()) return ExprTree{};  // empty restriction: constant true
    ExprTree tree = parse_or();
    skip_ws();
    if (!done()) fail("unexpected trailing input");
    return tree;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  ExprTree parse_or() {
    std::vector<ExprTree> terms;
    terms.push_back(parse_and());
    skip_ws();
    while (peek() == '|') {
      ++pos_;
      terms.push_back(parse_and());
      skip_ws();
    }
    if (terms.size() == 1) return std::move(terms.front());
    ExprTree node;
    node.kind = ExprTree::Kind::Or;
    node.children = std::move(terms);
    return node;
  }

  ExprTree parse_and() {
    std::vector<ExprTree> factors;
    factors.push_back(parse_factor());
    skip_ws();
    while (peek() == '&') {
      ++pos_;
      factors.push_back(parse_factor());
      skip_ws();
    }
    if (factors.size() == 1) return std::move(factors.front());
    ExprTree node;
    node.kind = ExprTree::Kind::And;
    node.children = std::move(factors);
    return node;
  }

  ExprTree parse_factor() {
    skip_ws();
    if (peek() == '!') {
      // A lone "!" would be a negation without operand; parse_factor below
      // rejects it. "!=" never reaches here because literals consume their
      // operator themselves.
      ++pos_;
      ExprTree node;
      node.kind = ExprTree::Kind::Not;
      node.children.push_back(parse_factor());
      return node;
    }
    if (peek() == '(') {
      ++pos_;
      ExprTree inner = parse_or();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    return parse_literal();
  }

  ExprTree parse_literal() {
    ExprTree node;
    node.kind = ExprTree::Kind::Literal;
    node.lhs = parse_coord();
    node.op = parse_op();
    node.rhs = parse_coord();
    return node;
  }

  int parse_coord() {
    skip_ws();
    if (peek() != 'a') fail("expected coordinate 'a<k>'");
    const std::size_t start = pos_;
    ++pos_;
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected coordinate index after 'a'");
    }
    long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > dimension_) {  // also catches absurdly long digit runs
        throw ParseError("coordinate index out of range 1.." + std::to_string(dimension_), start);
      }
      ++pos_;
    }
    if (value < 1) {
      throw ParseError("coordinate index out of range 1.." + std::to_string(dimension_), start);
    }
    return static_cast<int>(value);
  }

  OrderOp parse_op() {
    skip_ws();
    const char c = peek();
    const char n = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
    if (c == '<') { pos_ += n == '=' ? 2 : 1; return n == '=' ? OrderOp::Le : OrderOp::Lt; }
    if (c == '>') { pos_ += n == '=' ? 2 : 1; return n == '=' ? OrderOp::Ge : OrderOp::Gt; }
    if (c == '=') { ++pos_; return OrderOp::Eq; }
    if (c == '!' && n == '=') { pos_ += 2; return OrderOp::Ne; }
    fail("expected comparison operator");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int dimension_;
};

bool evaluate_node(const ExprTree& tree, std::span<const int> values) {
  switch (tree.kind) {
    case ExprTree::Kind::True:
      return true;
    case ExprTree::Kind::Literal: {
      const auto n = static_cast<int>(values.size());
      if (tree.lhs < 1 || tree.lhs > n || tree.rhs < 1 || tree.rhs > n) {
        throw std::invalid_argument("evaluate: literal coordinate outside the vector");
      }
      return apply(tree.op, values[tree.lhs - 1], values[tree.rhs - 1]);
    }
    case ExprTree::Kind::Not:
      return !evaluate_node(tree.children.front(), values);
    case ExprTree::Kind::And:
      return std::all_of(tree.children.begin(), tree.children.end(),
                         [&](const ExprTree& c) { return evaluate_node(c, values); });
    case ExprTree::Kind::Or:
      return std::any_of(tree.children.begin(), tree.children.end(),
                         [&](const ExprTree& c) { return evaluate_node(c, values); });
  }
  return false;  // unreachable
}

void append_string(const ExprTree& tree, std::string& out) {
  switch (tree.kind) {
    case ExprTree::Kind::True:
      out += "()";  // never produced by the parser; placeholder for display
      return;
    case ExprTree::Kind::Literal:
      out += 'a';
      out += std::to_string(tree.lhs);
      out += symbol(tree.op);
      out += 'a';
      out += std::to_string(tree.rhs);
      return;
    case ExprTree::Kind::Not:
      out += '!';
      out += '(';
      append_string(tree.children.front(), out);
      out += ')';
      return;
    case ExprTree::Kind::And:
    case ExprTree::Kind::Or: {
      const char* sep = tree.kind == ExprTree::Kind::And ? " & " : " | ";
      out += '(';
      for (std::size_t i = 0; i < tree.children.size(); ++i) {
        if (i > 0) out += sep;
        append_string(tree.children[i], out);
      }
      out += ')';
      return;
    }
  }
}

}  // namespace

ExprTree parse_expr(std::string_view text, int dimension) {
  if (dimension < 1) throw std::invalid_argument("parse_expr: dimension must be at least 1");
  Parser parser(text, dimension);
  ExprTree tree = parser.run();
  tree.dimension = dimension;
  return tree;
}

bool evaluate(const ExprTree& tree, std::span<const int> values) {
  if (tree.dimension > 0 && values.size() != static_cast<std::size_t>(tree.dimension)) {
    throw std::invalid_argument("evaluate: vector length does not match the parsed dimension");
  }
  return evaluate_node(tree, values);
}

std::string to_string(const ExprTree& tree) {
  if (tree.kind == ExprTree::Kind::True) return "";
  std::string out;
  append_string(tree, out);
  return out;
}

}  // namespace phorma
