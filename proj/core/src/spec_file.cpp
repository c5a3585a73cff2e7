#include "phorma/spec_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace phorma {

namespace {

std::string_view trim(std::string_view text) {
  const auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!text.empty() && is_ws(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_ws(text.back())) text.remove_suffix(1);
  return text;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::runtime_error("spec file, line " + std::to_string(line) + ": " + what);
}

std::vector<int> parse_bounds(std::string_view text, int line) {
  std::vector<int> bounds;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    int value = 0;
    const auto piece = text.substr(pos, end - pos);
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size()) {
      fail(line, "bounds must be space-separated integers");
    }
    if (value < 1) fail(line, "bounds must be positive");
    bounds.push_back(value);
    pos = end;
  }
  if (bounds.empty()) fail(line, "bounds must list at least one entry");
  return bounds;
}

}  // namespace

SpecFile parse_spec_file(std::string_view text) {
  SpecFile out;
  bool have_bounds = false;
  bool have_where = false;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) {
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) fail(line_no, "expected 'key: value'");
      const std::string_view key = trim(line.substr(0, colon));
      const std::string_view value = trim(line.substr(colon + 1));
      if (key == "bounds") {
        if (have_bounds) fail(line_no, "duplicate 'bounds'");
        out.bounds = parse_bounds(value, line_no);
        have_bounds = true;
      } else if (key == "where") {
        if (have_where) fail(line_no, "duplicate 'where'");
        out.where = std::string(value);
        have_where = true;
      } else {
        fail(line_no, "unknown key '" + std::string(key) + "' (expected 'bounds' or 'where')");
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!have_bounds) throw std::runtime_error("spec file: missing required key 'bounds'");
  return out;
}

SpecFile load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_file(buffer.str());
}

PhormaSpec to_spec(const SpecFile& file) { return make_spec(file.bounds, file.where); }

}  // namespace phorma
