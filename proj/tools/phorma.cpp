// phorma — perfect hashing for order-restricted multidimensional index sets.
//
// Loads a spec file (bounds + where-expression), builds the path digraph and
// answers count / rank / unrank / next / sample / list / dot / check.
//
// Exit status: 0 ok, 1 malformed spec or arguments, 2 membership violation
// (vector outside the set, rank out of range), 3 oracle check failure.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <phorma/hash.hpp>
#include <phorma/oracle.hpp>
#include <phorma/spec_file.hpp>
#include <phorma/splitmix64.hpp>

namespace {

void print_vector(const std::vector<int>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) std::cout << ' ';
    std::cout << values[i];
  }
  std::cout << '\n';
}

phorma::PhormaGraph build_from_file(const std::string& path) {
  return phorma::build(phorma::to_spec(phorma::load_spec_file(path)));
}

int run_check(const std::string& path) {
  const phorma::PhormaSpec spec = phorma::to_spec(phorma::load_spec_file(path));
  const phorma::PhormaGraph graph = phorma::build(spec);
  const auto members = phorma::oracle::enumerate_members(spec);
  const auto paths = phorma::oracle::enumerate_coded_paths(graph);

  bool ok = true;
  const auto report = [&ok](bool pass, const std::string& what) {
    std::cout << (pass ? "PASS " : "FAIL ") << what << '\n';
    ok = ok && pass;
  };

  report(phorma::count(graph) == members.size(),
         "count matches box enumeration (" + std::to_string(members.size()) + " members)");
  report(paths.size() == members.size(), "path enumeration has one path per member");

  std::set<std::vector<int>> member_set(members.begin(), members.end());
  bool sets_equal = paths.size() == member_set.size();
  for (const auto& path : paths) {
    if (!sets_equal) break;
    sets_equal = member_set.count(path.alpha) > 0;
  }
  report(sets_equal, "path enumeration visits exactly the members");

  bool ranks_ok = true;
  bool unranks_ok = true;
  bool walks_ok = true;
  bool codes_ok = true;
  for (std::size_t r = 0; r < paths.size(); ++r) {
    ranks_ok = ranks_ok && phorma::rank(graph, paths[r].alpha) == r;
    unranks_ok = unranks_ok && phorma::unrank(graph, r) == paths[r].alpha;
    walks_ok = walks_ok && phorma::oracle::walk_rank(graph, paths[r].alpha) == r;
    codes_ok = codes_ok && phorma::encode_path(graph, paths[r].alpha) == paths[r].code;
  }
  report(ranks_ok, "rank agrees with path order");
  report(unranks_ok, "unrank inverts rank");
  report(walks_ok, "walked rank agrees with table rank");
  report(codes_ok, "path codes round-trip");

  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phorma: perfect hashing for order-restricted multidimensional index sets"};
  app.require_subcommand(1);

  std::string spec_path;
  std::vector<int> vector_arg;
  std::uint64_t rank_arg = 0;
  std::uint64_t seed = 0;
  std::uint64_t limit = 1000;

  auto* cmd_count = app.add_subcommand("count", "Print the number of members");
  cmd_count->add_option("specfile", spec_path, "Phorma spec file")->required();

  auto* cmd_rank = app.add_subcommand("rank", "Print the rank of a member vector");
  cmd_rank->add_option("specfile", spec_path)->required();
  cmd_rank->add_option("vector", vector_arg, "Member vector, space-separated")->required();

  auto* cmd_unrank = app.add_subcommand("unrank", "Print the member with the given rank");
  cmd_unrank->add_option("specfile", spec_path)->required();
  cmd_unrank->add_option("rank", rank_arg, "Rank in [0, count)")->required();

  auto* cmd_next = app.add_subcommand("next", "Print the successor of a member, or 'last'");
  cmd_next->add_option("specfile", spec_path)->required();
  cmd_next->add_option("vector", vector_arg, "Member vector, space-separated")->required();

  auto* cmd_sample = app.add_subcommand("sample", "Print one member drawn uniformly at random");
  cmd_sample->add_option("specfile", spec_path)->required();
  cmd_sample->add_option("--seed", seed, "SplitMix64 seed (default 0)");

  auto* cmd_list = app.add_subcommand("list", "Print members in rank order");
  cmd_list->add_option("specfile", spec_path)->required();
  cmd_list->add_option("--limit", limit, "Print at most this many members (default 1000)");

  auto* cmd_dot = app.add_subcommand("dot", "Write the digraph in Graphviz DOT form");
  cmd_dot->add_option("specfile", spec_path)->required();

  auto* cmd_check = app.add_subcommand("check", "Run the brute-force oracle suite");
  cmd_check->add_option("specfile", spec_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_count->parsed()) {
      std::cout << phorma::count(build_from_file(spec_path)) << '\n';
    } else if (cmd_rank->parsed()) {
      std::cout << phorma::rank(build_from_file(spec_path), vector_arg) << '\n';
    } else if (cmd_unrank->parsed()) {
      print_vector(phorma::unrank(build_from_file(spec_path), rank_arg));
    } else if (cmd_next->parsed()) {
      const auto successor = phorma::next(build_from_file(spec_path), vector_arg);
      if (successor) {
        print_vector(*successor);
      } else {
        std::cout << "last\n";
      }
    } else if (cmd_sample->parsed()) {
      phorma::SplitMix64 rng(seed);
      print_vector(phorma::sample(build_from_file(spec_path), rng.next_unit()));
    } else if (cmd_list->parsed()) {
      const phorma::PhormaGraph graph = build_from_file(spec_path);
      const std::uint64_t total = phorma::count(graph);
      const std::uint64_t shown = std::min(total, limit);
      for (std::uint64_t r = 0; r < shown; ++r) print_vector(phorma::unrank(graph, r));
      if (shown < total) {
        std::cerr << "list truncated to " << shown << " of " << total
                  << " members (raise --limit)\n";
      }
    } else if (cmd_dot->parsed()) {
      std::cout << phorma::export_graph(build_from_file(spec_path));
    } else if (cmd_check->parsed()) {
      return run_check(spec_path);
    }
  } catch (const phorma::NotMemberError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
