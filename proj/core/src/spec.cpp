#include "phorma/spec.hpp"

#include <algorithm>

namespace phorma {

int PhormaSpec::max_bound() const {
  if (bounds.empty()) throw std::invalid_argument("spec has no bounds");
  return *std::max_element(bounds.begin(), bounds.end());
}

bool PhormaSpec::contains(std::span<const int> alpha) const {
  if (alpha.size() != bounds.size()) {
    throw std::invalid_argument("contains: vector dimension mismatch");
  }
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    if (alpha[i] < 1 || alpha[i] > bounds[i]) return false;
  }
  return evaluate(where, alpha);
}

PhormaSpec make_spec(std::vector<int> bounds, std::string_view where_text) {
  if (bounds.empty()) throw std::invalid_argument("bounds must be nonempty");
  for (int b : bounds) {
    if (b < 1) throw std::invalid_argument("bounds must be positive");
  }
  const int n = static_cast<int>(bounds.size());
  ExprTree where = parse_expr(where_text, n);  // parse before moving the bounds in
  return PhormaSpec{std::move(bounds), std::move(where)};
}

void validate_spec(const PhormaSpec& spec) {
  if (spec.bounds.empty()) throw std::invalid_argument("bounds must be nonempty");
  for (int b : spec.bounds) {
    if (b < 1) throw std::invalid_argument("bounds must be positive");
  }
  if (spec.where.dimension != 0 && spec.where.dimension != spec.dimension()) {
    throw std::invalid_argument("restriction was parsed against a different dimension");
  }
}

}  // namespace phorma
