#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phorma/spec.hpp"

namespace phorma {

/// Order pattern of a vector: entry i is the 1-based rank of the i-th
/// coordinate among the distinct values present. A pattern of length n with
/// m distinct symbols uses each of 1..m at least once.
struct Pattern {
  std::vector<int> symbols;
  int symbol_count = 0;  // m

  int length() const noexcept { return static_cast<int>(symbols.size()); }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

/// Validates that each of 1..m occurs in `symbols` and builds the Pattern.
Pattern make_pattern(std::vector<int> symbols);

/// The symbol count m if the distinct values of `seq` are exactly {1..m}.
std::optional<int> is_pattern(std::span<const int> seq);

/// The unique pattern order-compatible with `alpha` (all entries >= 1).
Pattern pattern_of(std::span<const int> alpha);

/// Patterns in strictly increasing lexicographic order, no duplicates.
struct PatternList {
  std::vector<Pattern> patterns;

  int size() const noexcept { return static_cast<int>(patterns.size()); }
};

/// Every length-n sequence over {1..n} that is a pattern, satisfies the
/// spec's restriction and fits its bounds (a maximal value sequence exists),
/// in lexicographic order. Comparing the restriction on the pattern itself
/// is sound because literals only see the relative order of entries, which
/// the pattern preserves. Scans all n^n candidates, so dimensions above
/// `max_dimension` are rejected.
PatternList enumerate_patterns(const PhormaSpec& spec, int max_dimension = 8);

/// Digit string when all symbols are single digits, else comma-separated.
std::string to_display_string(const Pattern& pattern);

}  // namespace phorma
