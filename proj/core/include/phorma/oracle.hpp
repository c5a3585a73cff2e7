#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "phorma/hash.hpp"

// Brute-force reference implementations, kept deliberately independent of
// the lookup table so that a construction bug cannot validate itself. Not a
// performance path.
namespace phorma::oracle {

/// Every member of the index set, found by scanning the whole bounding box
/// in lexicographic order. Refuses boxes larger than `box_limit`.
std::vector<std::vector<int>> enumerate_members(const PhormaSpec& spec,
                                                std::uint64_t box_limit = 10'000'000);

struct CodedPath {
  std::vector<int> alpha;
  std::string code;  // sequence-layer edge labels, as in encode_path()
};

/// Depth-first enumeration of every root-to-sink path, taking out-edges in
/// local rank order; each path is decoded to its member vector. The result
/// order is the reference rank order.
std::vector<CodedPath> enumerate_coded_paths(const PhormaGraph& graph);

/// The member vectors of enumerate_coded_paths(), in the same order.
std::vector<std::vector<int>> enumerate_paths(const PhormaGraph& graph);

/// Rank computed the slow way: walk alpha's full path edge by edge and sum,
/// over its southwest edges, the path counts of the west neighbours skipped
/// over. Counts come from a private memoized recursion, not from the table.
Rank walk_rank(const PhormaGraph& graph, std::span<const int> alpha);

}  // namespace phorma::oracle
