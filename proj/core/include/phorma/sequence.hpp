#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phorma/pattern.hpp"

namespace phorma {

/// Strictly increasing sequence of positive integers. The empty sequence is
/// a first-class value: it is the sink of the path digraph. Note that a
/// nonempty sequence always satisfies entry_i >= i.
class IncSeq {
 public:
  IncSeq() = default;
  explicit IncSeq(std::vector<int> entries);  // validates, throws otherwise

  const std::vector<int>& entries() const noexcept { return entries_; }
  int length() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }
  int last() const { return entries_.back(); }
  int operator[](int index) const { return entries_[static_cast<std::size_t>(index)]; }

  friend bool operator==(const IncSeq&, const IncSeq&) = default;
  friend auto operator<=>(const IncSeq&, const IncSeq&) = default;

 private:
  std::vector<int> entries_;
};

/// The sorted sequence of distinct values of `alpha` (all entries >= 1).
IncSeq distinct_values(std::span<const int> alpha);

/// Rebuilds the vector whose pattern is `pattern` and whose distinct values
/// are `values`: entry i is values[pattern_i]. Requires matching lengths.
std::vector<int> apply_pattern(const Pattern& pattern, const IncSeq& values);

/// The lexicographically maximal value sequence gamma such that
/// apply_pattern(pattern, gamma) stays within `bounds`, or nullopt when the
/// bounds are too small for the pattern's symbol count.
std::optional<IncSeq> maximal_values(std::span<const int> bounds, const Pattern& pattern);

/// West step: decrement the last entry and repair the rest downwards,
/// keeping the sequence strictly increasing and each entry at most its old
/// value. Absent exactly when the last entry equals the length (the minimal
/// sequence of that length).
std::optional<IncSeq> step_west(const IncSeq& seq);

/// Southwest step: drop the last entry. Absent for the empty sequence.
std::optional<IncSeq> step_southwest(const IncSeq& seq);

/// `steps` west steps in closed form: entry i becomes
/// min(last - steps - length + i, entry_i) (1-based). Absent when the last
/// entry is below length + steps. jump_west(seq, 0) == seq.
std::optional<IncSeq> jump_west(const IncSeq& seq, int steps);

/// Falls of the path that leads from `from` down to the sink while visiting
/// `target`'s entries: element k (k = 0..m-1) is the last vertex of length
/// m-k on that path, so it has length m-k and last entry target_{m-k}.
/// Requires equal lengths m >= 1 and target dominated by `from`.
std::vector<IncSeq> falls_of(const IncSeq& from, const IncSeq& target);

/// Digit string when all entries are single digits; base-20 digits
/// (A=10..J=19) when all are below 20; comma-separated otherwise. The empty
/// sequence renders as "t".
std::string to_display_string(const IncSeq& seq);

/// Parses the comma-separated form ("" and "t" give the empty sequence).
IncSeq parse_inc_seq(std::string_view text);

}  // namespace phorma
