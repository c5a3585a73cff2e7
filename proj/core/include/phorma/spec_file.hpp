#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "phorma/spec.hpp"

namespace phorma {

/// On-disk description of a phorma. Text file, UTF-8, one `key: value` pair
/// per line, `#` starts a comment:
///   bounds: 7 5 7 5
///   where: a1>=a3 & a2>=a4
/// `where` may be omitted or empty, meaning no restriction.
struct SpecFile {
  std::vector<int> bounds;
  std::string where;
};

/// Parses spec-file text. Throws std::runtime_error with the line number.
SpecFile parse_spec_file(std::string_view text);

/// Reads and parses the file at `path`.
SpecFile load_spec_file(const std::string& path);

/// Validates the bounds and parses the restriction.
PhormaSpec to_spec(const SpecFile& file);

}  // namespace phorma
