#include "phorma/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <climits>
#include <stdexcept>

namespace phorma {

IncSeq::IncSeq(std::vector<int> entries) : entries_(std::move(entries)) {
  int prev = 0;
  for (int v : entries_) {
    if (v <= prev) {
      throw std::invalid_argument("IncSeq: entries must be positive and strictly increasing");
    }
    prev = v;
  }
}

IncSeq distinct_values(std::span<const int> alpha) {
  if (alpha.empty()) throw std::invalid_argument("distinct_values: empty vector");
  for (int v : alpha) {
    if (v < 1) throw std::invalid_argument("distinct_values: entries must be positive");
  }
  std::vector<int> sorted(alpha.begin(), alpha.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return IncSeq(std::move(sorted));
}

std::vector<int> apply_pattern(const Pattern& pattern, const IncSeq& values) {
  if (pattern.symbol_count != values.length()) {
    throw std::invalid_argument("apply_pattern: pattern symbol count differs from value count");
  }
  std::vector<int> out;
  out.reserve(pattern.symbols.size());
  for (int s : pattern.symbols) out.push_back(values[s - 1]);
  return out;
}

std::optional<IncSeq> maximal_values(std::span<const int> bounds, const Pattern& pattern) {
  if (bounds.size() != pattern.symbols.size()) {
    throw std::invalid_argument("maximal_values: pattern length differs from dimension");
  }
  for (int b : bounds) {
    if (b < 1) throw std::invalid_argument("maximal_values: bounds must be positive");
  }
  const int m = pattern.symbol_count;
  if (m < 1) throw std::invalid_argument("maximal_values: pattern has no symbols");
  // tightest bound over the positions where each symbol occurs
  std::vector<int> low(static_cast<std::size_t>(m), INT_MAX);
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    auto& slot = low[static_cast<std::size_t>(pattern.symbols[i]) - 1];
    slot = std::min(slot, bounds[i]);
  }
  std::vector<int> out(static_cast<std::size_t>(m));
  out[static_cast<std::size_t>(m) - 1] = low[static_cast<std::size_t>(m) - 1];
  for (int i = m - 2; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] =
        std::min(low[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(i) + 1] - 1);
  }
  if (out.front() < 1) return std::nullopt;
  return IncSeq(std::move(out));
}

std::optional<IncSeq> step_west(const IncSeq& seq) {
  const int m = seq.length();
  if (m == 0 || seq.last() == m) return std::nullopt;
  std::vector<int> out(static_cast<std::size_t>(m));
  out[static_cast<std::size_t>(m) - 1] = seq.last() - 1;
  for (int i = m - 2; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] =
        std::min(out[static_cast<std::size_t>(i) + 1] - 1, seq[i]);
  }
  return IncSeq(std::move(out));
}

std::optional<IncSeq> step_southwest(const IncSeq& seq) {
  if (seq.empty()) return std::nullopt;
  std::vector<int> out(seq.entries().begin(), seq.entries().end() - 1);
  return IncSeq(std::move(out));
}

std::optional<IncSeq> jump_west(const IncSeq& seq, int steps) {
  if (steps < 0) throw std::invalid_argument("jump_west: negative step count");
  const int m = seq.length();
  if (m == 0 || seq.last() < m + steps) return std::nullopt;
  std::vector<int> out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    out[static_cast<std::size_t>(i)] = std::min(seq.last() - steps - m + i + 1, seq[i]);
  }
  return IncSeq(std::move(out));
}

std::vector<IncSeq> falls_of(const IncSeq& from, const IncSeq& target) {
  const int m = from.length();
  if (m == 0 || target.length() != m) {
    throw std::invalid_argument("falls_of: sequences must have equal nonzero length");
  }
  for (int i = 0; i < m; ++i) {
    if (target[i] > from[i]) {
      throw std::invalid_argument("falls_of: target must be dominated entry-wise");
    }
  }
  std::vector<IncSeq> falls;
  falls.reserve(static_cast<std::size_t>(m));
  auto cur = jump_west(from, from.last() - target.last());
  if (!cur) throw std::logic_error("falls_of: missing west jump");  // impossible under domination
  falls.push_back(*cur);
  for (int i = m - 1; i >= 1; --i) {
    const int overshoot = falls.back()[i - 1] - target[i - 1];
    cur = jump_west(*step_southwest(falls.back()), overshoot);
    if (!cur) throw std::logic_error("falls_of: missing west jump");
    falls.push_back(*cur);
  }
  return falls;
}

std::string to_display_string(const IncSeq& seq) {
  if (seq.empty()) return "t";
  const int max = seq.last();
  std::string out;
  if (max <= 9) {
    for (int v : seq.entries()) out += static_cast<char>('0' + v);
  } else if (max <= 19) {
    for (int v : seq.entries()) {
      out += v <= 9 ? static_cast<char>('0' + v) : static_cast<char>('A' + v - 10);
    }
  } else {
    for (std::size_t i = 0; i < seq.entries().size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(seq.entries()[i]);
    }
  }
  return out;
}

IncSeq parse_inc_seq(std::string_view text) {
  const auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!text.empty() && is_ws(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_ws(text.back())) text.remove_suffix(1);
  if (text.empty() || text == "t") return IncSeq{};

  std::vector<int> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    while (!piece.empty() && is_ws(piece.front())) piece.remove_prefix(1);
    while (!piece.empty() && is_ws(piece.back())) piece.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw std::invalid_argument("parse_inc_seq: expected comma-separated integers");
    }
    entries.push_back(value);
    start = end + 1;
    if (end == text.size()) break;
  }
  return IncSeq(std::move(entries));
}

}  // namespace phorma
