#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phorma/graph.hpp"

namespace phorma {

using Rank = std::uint64_t;

/// Edge labels of a sequence-layer path, '0'/'1' per edge; decodes to a
/// valid path ending at the sink.
using PathCode = std::string;

/// Size of the index set.
std::uint64_t count(const PhormaGraph& graph) noexcept;

/// Perfect hash of a member vector into [0, count). Validates membership
/// first (dimension, bounds, restriction), then resolves the pattern with
/// one binary search on the pattern list and the in-class rank with exactly
/// m table queries, where m is the number of distinct values of `alpha`.
Rank rank(const PhormaGraph& graph, std::span<const int> alpha);

/// Inverse of rank(): the member vector with the given rank. Walks the path
/// the rank selects, edge by edge. Throws std::out_of_range for
/// r >= count().
std::vector<int> unrank(const PhormaGraph& graph, Rank r);

/// Successor of `alpha` in rank order, or nullopt when it is the last one.
std::optional<std::vector<int>> next(const PhormaGraph& graph, std::span<const int> alpha);

/// Member with rank floor(count * xi), for xi in [0, 1). Uniform xi gives a
/// uniform member. Throws std::domain_error on an empty index set.
std::vector<int> sample(const PhormaGraph& graph, double xi);

/// Edge labels of alpha's path through the sequence layer, from its class
/// entry point down to the sink: '0' for a west edge, '1' for a southwest
/// edge, except that the single edge of a vertex without west neighbour is
/// labelled '0'.
PathCode encode_path(const PhormaGraph& graph, std::span<const int> alpha);

}  // namespace phorma
