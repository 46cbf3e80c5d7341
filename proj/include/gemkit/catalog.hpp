#pragma once

// The bundled example gems: data files under data/gems plus markers for rows
// whose graphs are too large to derive by search and must be supplied.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/io.hpp"

namespace gemkit {

// Expected table values; any of them may be unknown.
struct ExpectedRow {
  std::optional<std::int64_t> rho;
  std::optional<std::int64_t> gurau_degree;
  std::optional<std::int64_t> complexity;

  bool empty() const { return !rho && !gurau_degree && !complexity; }
};

struct CatalogEntry {
  std::string name;
  std::string path;                   // empty for markers
  std::optional<ColoredGraph> graph;  // absent for ingest-only markers
  std::optional<ExpectedRow> expected;

  bool ingest_only() const { return !graph.has_value(); }
};

inline std::optional<ExpectedRow> expected_row(const ColoredGraph& g) {
  auto read = [&](const char* key) -> std::optional<std::int64_t> {
    auto it = g.meta().find(key);
    if (it == g.meta().end()) return std::nullopt;
    return std::stoll(it->second);
  };
  ExpectedRow row{read("expected_rho"), read("expected_dg"), read("expected_k")};
  if (row.empty()) return std::nullopt;
  return row;
}

struct IngestOnlyRow {
  const char* name;
  ExpectedRow expected;
};

// Rows beyond the enumeration ceiling.
inline const std::vector<IngestOnlyRow>& ingest_only_rows() {
  static const std::vector<IngestOnlyRow> rows{
      {"S2xS2", {4, 48, 6}},
      {"RP4", {3, 36, 7}},
      {"K3", {44, 528, 66}},
  };
  return rows;
}

// Every *.gem file in `dir` (by file name), then a marker for each
// ingest-only row that no file supplies.
inline std::vector<CatalogEntry> bundled_examples(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  if (fs::is_directory(dir))
    for (const auto& e : fs::directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".gem") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> out;
  for (const auto& f : files) {
    auto g = load_gem(f);
    CatalogEntry e;
    e.name = g.meta_or("name", fs::path(f).stem().string());
    e.path = f;
    e.expected = expected_row(g);
    e.graph = std::move(g);
    out.push_back(std::move(e));
  }
  for (const auto& row : ingest_only_rows()) {
    const bool supplied =
        std::any_of(out.begin(), out.end(), [&](const CatalogEntry& e) { return e.name == row.name; });
    if (!supplied) out.push_back({row.name, "", std::nullopt, row.expected});
  }
  return out;
}

inline std::optional<CatalogEntry> find_example(const std::vector<CatalogEntry>& all, const std::string& name) {
  for (const auto& e : all)
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace gemkit
