#pragma once

#include <algorithm>
#include <string_view>
#include <vector>

#include <phorma/graph.hpp>
#include <phorma/sequence.hpp>
#include <phorma/spec.hpp>

namespace fixtures {

// Restriction for canonically positioned L-shaped-piece indices.
inline constexpr std::string_view kLWhere =
    "a1>=a3 & a2>=a4 & a1>=a2 & (a1!=a2 | a3>=a4) & (a1!=a3 | a2=a4) & (a2!=a4 | a1=a3)";

inline phorma::PhormaSpec l_piece(std::vector<int> bounds) {
  return phorma::make_spec(std::move(bounds), kLWhere);
}

inline phorma::PhormaSpec symmetric2(int p, int q) {
  return phorma::make_spec({p, q}, "a1>=a2");
}

inline phorma::PhormaSpec symmetric3(int p, int q, int r) {
  return phorma::make_spec({p, q, r}, "a1>=a2 | a2>=a3");
}

inline phorma::PhormaSpec swap12(int p, int q, int r) {
  return phorma::make_spec({p, q, r}, "a1>=a2");
}

// Single class with entry point (2,3,5): strictly increasing triples.
inline phorma::PhormaSpec chain235() {
  return phorma::make_spec({2, 3, 5}, "a1<a2 & a2<a3");
}

inline phorma::IncSeq inc(std::vector<int> entries) {
  return phorma::IncSeq(std::move(entries));
}

// Compare from the last entry backwards (sequences of equal length).
inline bool colex_less(const phorma::IncSeq& a, const phorma::IncSeq& b) {
  return std::lexicographical_compare(a.entries().rbegin(), a.entries().rend(),
                                      b.entries().rbegin(), b.entries().rend());
}

}  // namespace fixtures
