#include "phorma/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "checked_math.hpp"

namespace phorma::oracle {

namespace {

// Path counts by plain recursion over the step operators; deliberately does
// not touch the lookup table.
std::uint64_t path_count(const IncSeq& seq, std::map<IncSeq, std::uint64_t>& memo) {
  if (seq.empty()) return 1;
  if (const auto it = memo.find(seq); it != memo.end()) return it->second;
  std::uint64_t total = path_count(*step_southwest(seq), memo);
  if (const auto west = step_west(seq)) {
    total = checked_add(total, path_count(*west, memo));
  }
  memo.emplace(seq, total);
  return total;
}

void walk_paths(const IncSeq& vertex, const Pattern& pattern, std::vector<int>& values,
                std::string& code, std::vector<CodedPath>& out) {
  if (vertex.empty()) {
    out.push_back(CodedPath{apply_pattern(pattern, IncSeq(values)), code});
    return;
  }
  const auto west = step_west(vertex);
  if (west) {  // west edge first: its local rank is 0
    code += '0';
    walk_paths(*west, pattern, values, code, out);
    code.pop_back();
  }
  values[static_cast<std::size_t>(vertex.length()) - 1] = vertex.last();
  code += west ? '1' : '0';
  walk_paths(*step_southwest(vertex), pattern, values, code, out);
  code.pop_back();
}

}  // namespace

std::vector<std::vector<int>> enumerate_members(const PhormaSpec& spec,
                                                std::uint64_t box_limit) {
  validate_spec(spec);
  std::uint64_t box = 1;
  for (int b : spec.bounds) box = checked_mul(box, static_cast<std::uint64_t>(b));
  if (box > box_limit) {
    throw std::length_error("enumerate_members: bounding box of size " + std::to_string(box) +
                            " exceeds the oracle limit " + std::to_string(box_limit));
  }

  const int n = spec.dimension();
  std::vector<std::vector<int>> members;
  std::vector<int> candidate(static_cast<std::size_t>(n), 1);
  while (true) {
    if (evaluate(spec.where, candidate)) members.push_back(candidate);
    int i = n - 1;
    while (i >= 0 && candidate[static_cast<std::size_t>(i)] == spec.bounds[static_cast<std::size_t>(i)]) {
      candidate[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++candidate[static_cast<std::size_t>(i)];
  }
  return members;
}

std::vector<CodedPath> enumerate_coded_paths(const PhormaGraph& graph) {
  std::vector<CodedPath> out;
  for (std::size_t j = 0; j < graph.patterns.patterns.size(); ++j) {
    const IncSeq& top = graph.entry_points[j];
    std::vector<int> values(static_cast<std::size_t>(top.length()));
    std::string code;
    walk_paths(top, graph.patterns.patterns[j], values, code, out);
  }
  return out;
}

std::vector<std::vector<int>> enumerate_paths(const PhormaGraph& graph) {
  std::vector<std::vector<int>> out;
  for (CodedPath& path : enumerate_coded_paths(graph)) out.push_back(std::move(path.alpha));
  return out;
}

Rank walk_rank(const PhormaGraph& graph, std::span<const int> alpha) {
  const PhormaSpec& spec = graph.spec;
  if (alpha.size() != spec.bounds.size()) {
    throw std::invalid_argument("walk_rank: vector dimension mismatch");
  }
  if (!spec.contains(alpha)) throw NotMemberError("walk_rank: not a member");

  const Pattern pattern = pattern_of(alpha);
  const auto& patterns = graph.patterns.patterns;
  const auto it = std::lower_bound(patterns.begin(), patterns.end(), pattern);
  if (it == patterns.end() || *it != pattern) {
    throw std::logic_error("walk_rank: pattern missing from the pattern list");
  }
  const std::size_t j = static_cast<std::size_t>(it - patterns.begin());

  std::map<IncSeq, std::uint64_t> memo;
  // Edge from the root into class j skips the full classes before it.
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < j; ++k) {
    total = checked_add(total, path_count(graph.entry_points[k], memo));
  }

  const IncSeq values = distinct_values(alpha);
  IncSeq current = graph.entry_points[j];
  while (!current.empty()) {
    if (current.last() == values[current.length() - 1]) {
      // southwest edge; its west sibling (local rank 0) contributes its count
      if (const auto west = step_west(current)) {
        total = checked_add(total, path_count(*west, memo));
      }
      current = *step_southwest(current);
    } else {
      current = *step_west(current);
    }
  }
  return total;
}

}  // namespace phorma::oracle
