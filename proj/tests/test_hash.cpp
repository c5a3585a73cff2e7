#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>
#include <vector>

#include <phorma/hash.hpp>
#include <phorma/oracle.hpp>

#include "fixtures.hpp"

using namespace phorma;
using fixtures::inc;

TEST_SUITE_BEGIN("hash");

TEST_CASE("rank anchors on the 7575 L-piece spec") {
  const auto graph = build(fixtures::l_piece({7, 5, 7, 5}));
  CHECK(count(graph) == 190);
  CHECK(rank(graph, std::vector<int>{1, 1, 1, 1}) == 0);
  CHECK(rank(graph, std::vector<int>{3, 3, 3, 3}) == 2);
}

TEST_CASE("rank within the 235 chain follows the listed order") {
  const auto chain = build(fixtures::chain235());
  const std::vector<std::vector<int>> order = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4},
                                               {1, 2, 5}, {1, 3, 5}, {2, 3, 5}};
  for (std::size_t r = 0; r < order.size(); ++r) {
    CHECK(rank(chain, order[r]) == r);
    CHECK(unrank(chain, r) == order[r]);
  }
  CHECK(rank(chain, std::vector<int>{2, 3, 4}) == 3);
}

TEST_CASE("rank validates its argument") {
  const auto graph = build(fixtures::l_piece({7, 5, 7, 5}));
  CHECK_THROWS_AS(rank(graph, std::vector<int>{1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(rank(graph, std::vector<int>{8, 1, 1, 1}), NotMemberError);
  CHECK_THROWS_AS(rank(graph, std::vector<int>{1, 1, 1, 0}), NotMemberError);
  CHECK_THROWS_AS(rank(graph, std::vector<int>{1, 2, 3, 4}), NotMemberError);
}

TEST_CASE("unrank edges") {
  const auto graph = build(fixtures::l_piece({7, 5, 7, 5}));
  CHECK(unrank(graph, 0) == std::vector<int>{1, 1, 1, 1});
  CHECK(unrank(graph, 189) == std::vector<int>{7, 5, 4, 3});
  CHECK_THROWS_AS(unrank(graph, 190), std::out_of_range);

  const auto empty = build(make_spec({2, 2}, "a1>a2 & a2>a1"));
  CHECK_THROWS_AS(unrank(empty, 0), std::out_of_range);
}

TEST_CASE("next walks the rank order") {
  const auto graph = build(fixtures::l_piece({7, 5, 7, 5}));
  CHECK(next(graph, std::vector<int>{1, 1, 1, 1}) == std::vector<int>{2, 2, 2, 2});
  CHECK_FALSE(next(graph, unrank(graph, 189)).has_value());

  const auto chain = build(fixtures::chain235());
  CHECK(next(chain, unrank(chain, 2)) == unrank(chain, 3));
}

TEST_CASE("sample maps the unit interval onto ranks") {
  const auto graph = build(fixtures::l_piece({7, 5, 7, 5}));
  CHECK(sample(graph, 0.0) == unrank(graph, 0));
  CHECK(sample(graph, 1.0 - 1e-9) == unrank(graph, 189));
  CHECK(sample(graph, 0.5) == unrank(graph, 95));
  CHECK_THROWS_AS(sample(graph, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(sample(graph, -0.1), std::invalid_argument);

  const auto empty = build(make_spec({2, 2}, "a1>a2 & a2>a1"));
  CHECK_THROWS_AS(sample(empty, 0.5), std::domain_error);
}

TEST_CASE("path codes of the 235 chain") {
  const auto chain = build(fixtures::chain235());
  CHECK(encode_path(chain, std::vector<int>{1, 2, 3}) == "00000");
  CHECK(encode_path(chain, std::vector<int>{2, 3, 5}) == "111");
  // The vertex (1) has no west edge, so the final southwest edge of this
  // path carries label 0.
  CHECK(encode_path(chain, std::vector<int>{1, 3, 5}) == "1100");
  CHECK(encode_path(chain, std::vector<int>{1, 2, 5}) == "1000");
}

TEST_CASE("bijection on every desk-scale spec") {
  for (const auto& spec :
       {fixtures::symmetric2(2, 2), fixtures::symmetric2(3, 5), fixtures::symmetric3(3, 4, 5),
        fixtures::swap12(3, 4, 5), fixtures::l_piece({3, 3, 3, 3})}) {
    const auto graph = build(spec);
    const auto members = oracle::enumerate_members(spec);
    REQUIRE(count(graph) == members.size());

    std::set<Rank> image;
    for (const auto& alpha : members) {
      const Rank r = rank(graph, alpha);
      CHECK(r < count(graph));
      CHECK(image.insert(r).second);
      CHECK(unrank(graph, r) == alpha);
    }
    CHECK(image.size() == members.size());
  }
}

TEST_CASE("rank order is pattern-major, then colexicographic in the values") {
  const auto spec = fixtures::l_piece({7, 5, 7, 5});
  const auto graph = build(spec);
  auto expected = oracle::enumerate_members(spec);
  std::sort(expected.begin(), expected.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              const Pattern pa = pattern_of(a);
              const Pattern pb = pattern_of(b);
              if (pa != pb) return pa < pb;
              return fixtures::colex_less(distinct_values(a), distinct_values(b));
            });
  for (std::size_t r = 0; r < expected.size(); ++r) {
    CHECK(unrank(graph, r) == expected[r]);
  }
}

TEST_CASE("next chain visits every member exactly once") {
  const auto spec = fixtures::symmetric3(3, 4, 5);
  const auto graph = build(spec);
  std::vector<std::vector<int>> visited;
  std::optional<std::vector<int>> current = unrank(graph, 0);
  while (current) {
    visited.push_back(*current);
    current = next(graph, *current);
  }
  CHECK(visited.size() == count(graph));
  CHECK(visited == oracle::enumerate_paths(graph));
}

TEST_CASE("rank needs exactly one table query per distinct value") {
  const auto graph = build(fixtures::l_piece({7, 5, 7, 5}));
  for (Rank r = 0; r < count(graph); ++r) {
    const auto alpha = unrank(graph, r);
    const auto m = static_cast<std::uint64_t>(distinct_values(alpha).length());
    const auto before = graph.table.query_count();
    (void)rank(graph, alpha);
    CHECK(graph.table.query_count() - before == m);
  }
}

TEST_CASE("concurrent queries agree with serial ones") {
  const auto graph = build(fixtures::l_piece({7, 5, 7, 5}));
  std::vector<std::vector<int>> members;
  for (Rank r = 0; r < count(graph); ++r) members.push_back(unrank(graph, r));

  std::vector<std::thread> workers;
  std::atomic<int> mismatches{0};
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&] {
      for (std::size_t r = 0; r < members.size(); ++r) {
        if (rank(graph, members[r]) != r) ++mismatches;
        if (unrank(graph, r) != members[r]) ++mismatches;
      }
    });
  }
  for (auto& worker : workers) worker.join();
  CHECK(mismatches == 0);
}

TEST_CASE("single-dimension spec ranks by value") {
  const auto graph = build(make_spec({5}, ""));
  CHECK(count(graph) == 5);
  for (int v = 1; v <= 5; ++v) {
    CHECK(rank(graph, std::vector<int>{v}) == static_cast<Rank>(v - 1));
  }
}

TEST_SUITE_END();
