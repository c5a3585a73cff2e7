#include "phorma/pattern.hpp"

#include <algorithm>
#include <stdexcept>

#include "phorma/sequence.hpp"

namespace phorma {

std::optional<int> is_pattern(std::span<const int> seq) {
  if (seq.empty()) return std::nullopt;
  int max = 0;
  for (int v : seq) {
    if (v < 1) return std::nullopt;
    max = std::max(max, v);
  }
  if (static_cast<std::size_t>(max) > seq.size()) return std::nullopt;
  std::vector<char> seen(static_cast<std::size_t>(max), 0);
  for (int v : seq) seen[static_cast<std::size_t>(v) - 1] = 1;
  for (char s : seen) {
    if (!s) return std::nullopt;
  }
  return max;
}

Pattern make_pattern(std::vector<int> symbols) {
  const auto m = is_pattern(symbols);
  if (!m) throw std::invalid_argument("make_pattern: each of the symbols 1..m must occur");
  return Pattern{std::move(symbols), *m};
}

Pattern pattern_of(std::span<const int> alpha) {
  if (alpha.empty()) throw std::invalid_argument("pattern_of: empty vector");
  for (int v : alpha) {
    if (v < 1) throw std::invalid_argument("pattern_of: entries must be positive");
  }
  std::vector<int> distinct(alpha.begin(), alpha.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  Pattern out;
  out.symbols.reserve(alpha.size());
  for (int v : alpha) {
    const auto it = std::lower_bound(distinct.begin(), distinct.end(), v);
    out.symbols.push_back(static_cast<int>(it - distinct.begin()) + 1);
  }
  out.symbol_count = static_cast<int>(distinct.size());
  return out;
}

PatternList enumerate_patterns(const PhormaSpec& spec, int max_dimension) {
  validate_spec(spec);
  const int n = spec.dimension();
  if (n > max_dimension) {
    throw std::length_error("enumerate_patterns: dimension " + std::to_string(n) +
                            " exceeds the enumeration limit " + std::to_string(max_dimension) +
                            " (the scan tries n^n candidates; raise max_dimension to allow it)");
  }

  PatternList out;
  std::vector<int> candidate(static_cast<std::size_t>(n), 1);
  while (true) {
    if (const auto m = is_pattern(candidate)) {
      if (evaluate(spec.where, candidate)) {
        Pattern p{candidate, *m};
        if (maximal_values(spec.bounds, p)) out.patterns.push_back(std::move(p));
      }
    }
    // lexicographic odometer over {1..n}^n, so the output needs no sort
    int i = n - 1;
    while (i >= 0 && candidate[static_cast<std::size_t>(i)] == n) {
      candidate[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++candidate[static_cast<std::size_t>(i)];
  }
  return out;
}

std::string to_display_string(const Pattern& pattern) {
  const bool digits = std::all_of(pattern.symbols.begin(), pattern.symbols.end(),
                                  [](int v) { return v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < pattern.symbols.size(); ++i) {
    if (digits) {
      out += static_cast<char>('0' + pattern.symbols[i]);
    } else {
      if (i > 0) out += ',';
      out += std::to_string(pattern.symbols[i]);
    }
  }
  return out;
}

}  // namespace phorma
