#include "phorma/hash.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phorma {

namespace {

void require_member(const PhormaGraph& graph, std::span<const int> alpha) {
  const PhormaSpec& spec = graph.spec;
  if (alpha.size() != spec.bounds.size()) {
    throw std::invalid_argument("vector dimension mismatch");
  }
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 1 || alpha[i] > spec.bounds[i]) {
      throw NotMemberError("not a member: entry outside the bounds");
    }
  }
  if (!evaluate(spec.where, alpha)) {
    throw NotMemberError("not a member: restriction not satisfied");
  }
}

std::size_t class_of(const PhormaGraph& graph, const Pattern& pattern) {
  const auto& patterns = graph.patterns.patterns;
  const auto it = std::lower_bound(patterns.begin(), patterns.end(), pattern);
  if (it == patterns.end() || *it != pattern) {
    throw std::logic_error("pattern of a member vector is missing from the pattern list");
  }
  return static_cast<std::size_t>(it - patterns.begin());
}

}  // namespace

std::uint64_t count(const PhormaGraph& graph) noexcept { return graph.total; }

Rank rank(const PhormaGraph& graph, std::span<const int> alpha) {
  require_member(graph, alpha);
  const std::size_t j = class_of(graph, pattern_of(alpha));
  const IncSeq values = distinct_values(alpha);
  Rank within = 0;
  for (const IncSeq& fall : falls_of(graph.entry_points[j], values)) {
    within += graph.table.west_count(fall);
  }
  return graph.class_offsets[j] + within;
}

std::vector<int> unrank(const PhormaGraph& graph, Rank r) {
  if (r >= graph.total) throw std::out_of_range("unrank: rank out of range");
  const auto it =
      std::upper_bound(graph.class_offsets.begin(), graph.class_offsets.end(), r);
  const std::size_t j = static_cast<std::size_t>(it - graph.class_offsets.begin()) - 1;
  std::uint64_t remaining = r - graph.class_offsets[j];

  IncSeq current = graph.entry_points[j];
  std::vector<int> values(static_cast<std::size_t>(current.length()));
  while (!current.empty()) {
    const std::uint64_t west = graph.table.west_count(current);
    if (remaining >= west) {
      // southwest edge: this vertex is the path's fall of its length
      values[static_cast<std::size_t>(current.length()) - 1] = current.last();
      remaining -= west;
      current = *step_southwest(current);
    } else {
      current = *step_west(current);
    }
  }
  if (remaining != 0) throw std::logic_error("unrank: rank not consumed by the walk");
  return apply_pattern(graph.patterns.patterns[j], IncSeq(std::move(values)));
}

std::optional<std::vector<int>> next(const PhormaGraph& graph, std::span<const int> alpha) {
  const Rank r = rank(graph, alpha);
  if (r + 1 == graph.total) return std::nullopt;
  return unrank(graph, r + 1);
}

std::vector<int> sample(const PhormaGraph& graph, double xi) {
  if (graph.total == 0) throw std::domain_error("sample: empty index set");
  if (!(xi >= 0.0 && xi < 1.0)) throw std::invalid_argument("sample: xi must be in [0, 1)");
  auto index = static_cast<std::uint64_t>(xi * static_cast<double>(graph.total));
  if (index >= graph.total) index = graph.total - 1;  // guard the rounding edge
  return unrank(graph, index);
}

PathCode encode_path(const PhormaGraph& graph, std::span<const int> alpha) {
  require_member(graph, alpha);
  const std::size_t j = class_of(graph, pattern_of(alpha));
  const IncSeq values = distinct_values(alpha);

  PathCode code;
  IncSeq current = graph.entry_points[j];
  while (!current.empty()) {
    const bool has_west = current.last() > current.length();
    if (current.last() == values[current.length() - 1]) {
      code += has_west ? '1' : '0';
      current = *step_southwest(current);
    } else {
      code += '0';
      current = *step_west(current);
    }
  }
  return code;
}

}  // namespace phorma
