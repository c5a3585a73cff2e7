#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "phorma/sequence.hpp"

namespace phorma {

/// One stored vertex, keyed in its cell by the prefix (the vertex minus its
/// last entry). `count` is the number of paths from the vertex to the sink.
struct SeqEntry {
  IncSeq prefix;
  std::uint64_t count = 0;
};

/// Lookup table for the sequence layer. Cell (length m, last entry p) holds
/// the vertices of that shape sorted by prefix, so a vertex is found with
/// one binary search. Length 0 is implicit: the sink alone, with count 1.
///
/// Counts are 64-bit; build() aborts with std::overflow_error rather than
/// let a count wrap.
class SeqTable {
 public:
  SeqTable();
  SeqTable(int dimension, int max_bound);

  int dimension() const noexcept { return dimension_; }
  int max_bound() const noexcept { return max_bound_; }
  std::size_t vertex_count() const noexcept;

  /// Path count of the vertex west of `vertex`, or 0 when `vertex` has no
  /// west neighbour. One table query.
  std::uint64_t west_count(const IncSeq& vertex) const;

  /// Entry of the vertex with the given length, last entry and prefix.
  /// Throws std::out_of_range when the cell or the prefix is absent. One
  /// table query.
  const SeqEntry& lookup(int length, int last, const IncSeq& prefix) const;

  /// Queries served so far by west_count() and lookup().
  std::uint64_t query_count() const noexcept;

  /// Non-counting variant of lookup(); nullptr when absent.
  const SeqEntry* find_entry(int length, int last, const IncSeq& prefix) const noexcept;

  /// Direct cell access for inspection; does not count as a query.
  const std::vector<SeqEntry>& cell(int length, int last) const;

  // Build-time interface: insert every vertex, then freeze() once. freeze()
  // sorts the cells and fills in all counts bottom-up.
  void insert(const IncSeq& vertex);
  void freeze();

 private:
  std::size_t cell_index(int length, int last) const;

  int dimension_ = 0;
  int max_bound_ = 0;
  bool frozen_ = false;
  std::vector<std::vector<SeqEntry>> cells_;
  std::unique_ptr<std::atomic<std::uint64_t>> queries_;
};

/// The built digraph of a spec: the sorted pattern list, the entry point
/// (maximal value sequence) of each pattern class, per-class path counts
/// with their exclusive prefix sums, the grand total, and the sequence-layer
/// table. Immutable once built; queries are safe from any number of threads.
struct PhormaGraph {
  PhormaSpec spec;
  PatternList patterns;
  std::vector<IncSeq> entry_points;
  std::vector<std::uint64_t> class_counts;
  std::vector<std::uint64_t> class_offsets;
  std::uint64_t total = 0;
  SeqTable table;
};

/// Enumerates the pattern list, closes the entry points under west and
/// southwest steps, and computes every path count. Deterministic.
PhormaGraph build(const PhormaSpec& spec, int max_dimension = 8);

/// Paths from `seq` to the sink. The empty sequence has count 1; any other
/// argument must be a stored vertex.
std::uint64_t count_of(const PhormaGraph& graph, const IncSeq& seq);

/// Graphviz DOT rendering: root s, one node per pattern, every stored
/// vertex, and the sink t. Nodes carry a `count` attribute (pattern nodes
/// also `prefix_count`); root-layer edges are dashed, and the edge from s to
/// the j-th pattern is labelled with its local rank j.
std::string export_graph(const PhormaGraph& graph);

}  // namespace phorma
