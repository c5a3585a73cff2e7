#include "phorma/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "checked_math.hpp"

namespace phorma {

namespace {

bool prefix_less(const SeqEntry& entry, const IncSeq& prefix) { return entry.prefix < prefix; }

IncSeq drop_last(const IncSeq& seq) {
  std::vector<int> out(seq.entries().begin(), seq.entries().end() - 1);
  return IncSeq(std::move(out));
}

IncSeq extend(const IncSeq& prefix, int last) {
  std::vector<int> out(prefix.entries());
  out.push_back(last);
  return IncSeq(std::move(out));
}

}  // namespace

SeqTable::SeqTable() : queries_(std::make_unique<std::atomic<std::uint64_t>>(0)) {}

SeqTable::SeqTable(int dimension, int max_bound)
    : dimension_(dimension),
      max_bound_(max_bound),
      cells_(static_cast<std::size_t>(dimension) * static_cast<std::size_t>(max_bound)),
      queries_(std::make_unique<std::atomic<std::uint64_t>>(0)) {
  if (dimension < 1 || max_bound < 1) {
    throw std::invalid_argument("SeqTable: dimension and max bound must be positive");
  }
}

std::size_t SeqTable::cell_index(int length, int last) const {
  return static_cast<std::size_t>(length - 1) * static_cast<std::size_t>(max_bound_) +
         static_cast<std::size_t>(last - 1);
}

std::size_t SeqTable::vertex_count() const noexcept {
  std::size_t total = 0;
  for (const auto& cell : cells_) total += cell.size();
  return total;
}

void SeqTable::insert(const IncSeq& vertex) {
  if (frozen_) throw std::logic_error("SeqTable: insert after freeze");
  if (vertex.empty() || vertex.length() > dimension_ || vertex.last() > max_bound_) {
    throw std::invalid_argument("SeqTable: vertex does not fit the table");
  }
  cells_[cell_index(vertex.length(), vertex.last())].push_back(SeqEntry{drop_last(vertex), 0});
}

void SeqTable::freeze() {
  if (frozen_) throw std::logic_error("SeqTable: freeze called twice");
  for (auto& cell : cells_) {
    std::sort(cell.begin(), cell.end(),
              [](const SeqEntry& a, const SeqEntry& b) { return a.prefix < b.prefix; });
  }
  frozen_ = true;

  // Counts bottom-up: a west neighbour has the same length and a smaller
  // last entry, a southwest neighbour is shorter, so scanning lengths
  // ascending and last entries ascending sees every dependency first.
  for (int m = 1; m <= dimension_; ++m) {
    for (int p = 1; p <= max_bound_; ++p) {
      for (SeqEntry& entry : cells_[cell_index(m, p)]) {
        std::uint64_t west = 0;
        if (p > m) {
          const IncSeq vertex = extend(entry.prefix, p);
          const auto west_vertex = step_west(vertex);
          const SeqEntry* found = find_entry(m, p - 1, drop_last(*west_vertex));
          if (!found) throw std::logic_error("SeqTable: west neighbour missing from closure");
          west = found->count;
        }
        std::uint64_t south = 1;  // length 1 drops to the sink
        if (m > 1) {
          const SeqEntry* found =
              find_entry(m - 1, entry.prefix.last(), drop_last(entry.prefix));
          if (!found) throw std::logic_error("SeqTable: southwest neighbour missing from closure");
          south = found->count;
        }
        entry.count = checked_add(west, south);
      }
    }
  }
}

const SeqEntry* SeqTable::find_entry(int length, int last, const IncSeq& prefix) const noexcept {
  if (length < 1 || length > dimension_ || last < 1 || last > max_bound_) return nullptr;
  const auto& cell = cells_[cell_index(length, last)];
  const auto it = std::lower_bound(cell.begin(), cell.end(), prefix, prefix_less);
  if (it == cell.end() || it->prefix != prefix) return nullptr;
  return &*it;
}

std::uint64_t SeqTable::west_count(const IncSeq& vertex) const {
  queries_->fetch_add(1, std::memory_order_relaxed);
  if (vertex.empty() || vertex.last() <= vertex.length()) return 0;  // no west neighbour
  const auto west_vertex = step_west(vertex);
  const SeqEntry* found = find_entry(vertex.length(), vertex.last() - 1, drop_last(*west_vertex));
  if (!found) throw std::out_of_range("west_count: vertex is not stored in the table");
  return found->count;
}

const SeqEntry& SeqTable::lookup(int length, int last, const IncSeq& prefix) const {
  queries_->fetch_add(1, std::memory_order_relaxed);
  const SeqEntry* found = find_entry(length, last, prefix);
  if (!found) throw std::out_of_range("lookup: no vertex with this length, last entry and prefix");
  return *found;
}

std::uint64_t SeqTable::query_count() const noexcept {
  return queries_->load(std::memory_order_relaxed);
}

const std::vector<SeqEntry>& SeqTable::cell(int length, int last) const {
  if (length < 1 || length > dimension_ || last < 1 || last > max_bound_) {
    throw std::out_of_range("cell: index outside the table");
  }
  return cells_[cell_index(length, last)];
}

PhormaGraph build(const PhormaSpec& spec, int max_dimension) {
  validate_spec(spec);

  PhormaGraph graph;
  graph.spec = spec;
  graph.patterns = enumerate_patterns(spec, max_dimension);
  graph.table = SeqTable(spec.dimension(), spec.max_bound());

  graph.entry_points.reserve(graph.patterns.patterns.size());
  for (const Pattern& pattern : graph.patterns.patterns) {
    auto top = maximal_values(spec.bounds, pattern);
    if (!top) throw std::logic_error("build: enumerated pattern has no value sequence");
    graph.entry_points.push_back(std::move(*top));
  }

  // Close the entry points under west and southwest steps; the sink stays
  // implicit.
  std::set<IncSeq> seen;
  std::vector<IncSeq> pending(graph.entry_points.begin(), graph.entry_points.end());
  while (!pending.empty()) {
    IncSeq vertex = std::move(pending.back());
    pending.pop_back();
    if (vertex.empty() || !seen.insert(vertex).second) continue;
    const IncSeq& stored = *seen.find(vertex);
    if (auto west = step_west(stored)) pending.push_back(std::move(*west));
    if (auto south = step_southwest(stored); south && !south->empty()) {
      pending.push_back(std::move(*south));
    }
  }
  for (const IncSeq& vertex : seen) graph.table.insert(vertex);
  graph.table.freeze();

  std::uint64_t running = 0;
  graph.class_counts.reserve(graph.entry_points.size());
  graph.class_offsets.reserve(graph.entry_points.size());
  for (const IncSeq& top : graph.entry_points) {
    const SeqEntry* entry = graph.table.find_entry(top.length(), top.last(), drop_last(top));
    if (!entry) throw std::logic_error("build: entry point missing from the table");
    graph.class_offsets.push_back(running);
    graph.class_counts.push_back(entry->count);
    running = checked_add(running, entry->count);
  }
  graph.total = running;
  return graph;
}

std::uint64_t count_of(const PhormaGraph& graph, const IncSeq& seq) {
  if (seq.empty()) return 1;
  return graph.table.lookup(seq.length(), seq.last(), *step_southwest(seq)).count;
}

std::string export_graph(const PhormaGraph& graph) {
  const auto gamma_id = [](const IncSeq& seq) {
    std::string id = "g";
    for (std::size_t i = 0; i < seq.entries().size(); ++i) {
      if (i > 0) id += '_';
      id += std::to_string(seq.entries()[i]);
    }
    return id;
  };

  std::string out = "digraph phorma {\n";
  out += "  s [count=\"" + std::to_string(graph.total) + "\"];\n";
  out += "  t [count=\"1\"];\n";
  for (std::size_t j = 0; j < graph.patterns.patterns.size(); ++j) {
    out += "  p" + std::to_string(j) + " [label=\"" +
           to_display_string(graph.patterns.patterns[j]) + "\", count=\"" +
           std::to_string(graph.class_counts[j]) + "\", prefix_count=\"" +
           std::to_string(graph.class_offsets[j]) + "\"];\n";
  }
  const SeqTable& table = graph.table;
  for (int m = 1; m <= table.dimension(); ++m) {
    for (int p = 1; p <= table.max_bound(); ++p) {
      for (const SeqEntry& entry : table.cell(m, p)) {
        const IncSeq vertex = extend(entry.prefix, p);
        out += "  " + gamma_id(vertex) + " [label=\"" + to_display_string(vertex) +
               "\", count=\"" + std::to_string(entry.count) + "\"];\n";
      }
    }
  }
  for (std::size_t j = 0; j < graph.patterns.patterns.size(); ++j) {
    out += "  s -> p" + std::to_string(j) + " [label=\"" + std::to_string(j) +
           "\", style=dashed];\n";
    out += "  p" + std::to_string(j) + " -> " + gamma_id(graph.entry_points[j]) +
           " [style=dashed];\n";
  }
  for (int m = 1; m <= table.dimension(); ++m) {
    for (int p = 1; p <= table.max_bound(); ++p) {
      for (const SeqEntry& entry : table.cell(m, p)) {
        const IncSeq vertex = extend(entry.prefix, p);
        if (const auto west = step_west(vertex)) {
          out += "  " + gamma_id(vertex) + " -> " + gamma_id(*west) + ";\n";
        }
        const IncSeq south = *step_southwest(vertex);
        out += "  " + gamma_id(vertex) + " -> " + (south.empty() ? "t" : gamma_id(south)) + ";\n";
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace phorma
