#pragma once

#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "phorma/expr.hpp"

namespace phorma {

/// A vector argument lies outside the restricted index set.
class NotMemberError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Bound vector plus restriction. The index set consists of the integer
/// vectors v with 1 <= v_i <= bounds_i for all i that satisfy `where`.
struct PhormaSpec {
  std::vector<int> bounds;
  ExprTree where;

  int dimension() const noexcept { return static_cast<int>(bounds.size()); }
  int max_bound() const;

  /// Membership test. The argument must have the spec's dimension.
  bool contains(std::span<const int> alpha) const;
};

/// Validates the bounds and parses the restriction text ("" means none).
PhormaSpec make_spec(std::vector<int> bounds, std::string_view where_text);

/// Throws std::invalid_argument unless bounds and restriction are coherent.
void validate_spec(const PhormaSpec& spec);

}  // namespace phorma
