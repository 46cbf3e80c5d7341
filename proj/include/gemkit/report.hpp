#pragma once

// Rendering of invariant reports: JSON, plain text, and the summary table
// with columns name, G, D_G, k, class, notes.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gemkit/catalog.hpp"
#include "gemkit/invariants.hpp"
#include "gemkit/recognition.hpp"

namespace gemkit {

inline nlohmann::ordered_json genus_json(GenusValue v) {
  if (v.is_integer()) return v.value();
  return v.to_string();
}

inline nlohmann::ordered_json to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["n"] = r.n;
  j["order"] = r.order;
  j["bipartite"] = r.bipartite;
  j["crystallization"] = r.crystallization;
  auto rho = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.sweep.classes.size(); ++i)
    rho.push_back({{"permutation", r.sweep.classes[i].to_string()}, {"rho", genus_json(r.sweep.rho[i])}});
  j["rho_by_permutation"] = rho;
  j["regular_genus"] = genus_json(r.regular_genus);
  j["gurau_degree"] = genus_json(r.gurau_degree);
  j["complexity_witness"] = r.complexity_witness;
  j["chi"] = r.chi ? nlohmann::ordered_json(*r.chi) : nlohmann::ordered_json(nullptr);
  auto counts = nlohmann::ordered_json::object();
  for (const auto& [c, v] : r.residue_counts) counts[c.to_string()] = v;
  j["residue_counts"] = counts;
  if (r.ranks) j["ranks"] = {{"m", r.ranks->m}, {"mprime", r.ranks->mprime}};
  if (r.t) {
    auto t = nlohmann::ordered_json::object();
    for (const auto& [c, v] : r.t->entries) t[c.to_string()] = v;
    j["t"] = t;
  }
  if (r.semi_simple) j["semi_simple"] = *r.semi_simple;
  if (r.ranks) {
    auto w = nlohmann::ordered_json::array();
    for (const auto& eps : r.weak_semi_simple) w.push_back(eps.to_string());
    j["weak_semi_simple"] = w;
  }
  if (r.bounds)
    j["lower_bounds"] = {{"regular_genus", r.bounds->genus},
                         {"gurau_degree", r.bounds->gurau_degree},
                         {"complexity", r.bounds->complexity}};
  j["classification"] = r.classification();
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

inline std::string to_text(const InvariantReport& r) {
  std::ostringstream s;
  s << "name: " << r.name << "\n";
  s << "colors: " << r.n + 1 << ", order: " << r.order << (r.bipartite ? ", bipartite" : ", non-bipartite")
    << (r.crystallization ? ", crystallization" : "") << "\n";
  s << "rho by permutation:\n";
  for (std::size_t i = 0; i < r.sweep.classes.size(); ++i)
    s << "  " << r.sweep.classes[i].to_string() << "  " << r.sweep.rho[i].to_string() << "\n";
  s << "rho=" << r.regular_genus.to_string() << " omega_G=" << r.gurau_degree.to_string()
    << " k-witness=" << r.complexity_witness << "\n";
  if (r.chi) s << "chi=" << *r.chi << "\n";
  s << "residue counts:";
  for (const auto& [c, v] : r.residue_counts)
    if (c.size() == 3) s << " g" << c.to_string() << "=" << v;
  s << "\n";
  if (r.ranks) s << "ranks: m=" << r.ranks->m << " m'=" << r.ranks->mprime << "\n";
  if (r.t) {
    s << "t:";
    for (const auto& [c, v] : r.t->entries) s << " " << c.to_string() << "=" << v;
    s << "\n";
  }
  if (r.ranks) {
    s << "weak semi-simple at:";
    if (r.weak_semi_simple.empty()) s << " none";
    for (const auto& eps : r.weak_semi_simple) s << " " << eps.to_string();
    s << "\n";
  }
  if (r.bounds)
    s << "lower bounds: G>=" << r.bounds->genus << " D_G>=" << r.bounds->gurau_degree << " k>=" << r.bounds->complexity
      << "\n";
  s << "classification: " << r.classification() << "\n";
  if (!r.notes.empty()) s << "notes: " << r.notes << "\n";
  return s.str();
}

enum class RowStatus { Ok, Mismatch, IngestOnly };

struct TableRow {
  std::string name;
  std::string genus;         // empty for ingest-only rows
  std::string gurau_degree;
  std::string complexity;
  std::string cls;
  std::vector<std::string> notes;
  RowStatus status = RowStatus::Ok;
};

// One row per catalog entry; a row is Mismatch when a computed value
// differs from an expectation carried by the graph.
inline TableRow table_row(const CatalogEntry& e, const SphereOptions& opt = {}) {
  TableRow row;
  row.name = e.name;
  if (e.ingest_only()) {
    row.status = RowStatus::IngestOnly;
    row.cls = "-";
    row.notes.push_back("ingest-only: no graph file supplied");
    if (e.expected) {
      std::ostringstream s;
      s << "expects";
      if (e.expected->rho) s << " G=" << *e.expected->rho;
      if (e.expected->gurau_degree) s << " D_G=" << *e.expected->gurau_degree;
      if (e.expected->complexity) s << " k=" << *e.expected->complexity;
      row.notes.push_back(s.str());
    }
    return row;
  }
  const auto& g = *e.graph;
  const auto rep = invariant_report(g);
  row.genus = rep.regular_genus.to_string();
  row.gurau_degree = rep.gurau_degree.to_string();
  row.complexity = std::to_string(rep.complexity_witness);
  row.cls = rep.classification();
  if (g.dimension() == 4) {
    const auto kind = gem_class(g, opt);
    row.cls = to_string(kind.kind) + ", " + row.cls;
  }
  auto expect = [&](const char* what, const std::optional<std::int64_t>& want, GenusValue got) {
    if (!want) return;
    if (got != GenusValue::integer(*want)) {
      row.status = RowStatus::Mismatch;
      row.notes.push_back(std::string(what) + " expected " + std::to_string(*want) + ", computed " + got.to_string());
    }
  };
  if (e.expected) {
    expect("G", e.expected->rho, rep.regular_genus);
    expect("D_G", e.expected->gurau_degree, rep.gurau_degree);
    expect("k", e.expected->complexity, GenusValue::integer(rep.complexity_witness));
    // Ranges rather than exact values where only the genus is known.
    if (!e.expected->gurau_degree) row.notes.push_back("D_G <= " + rep.gurau_degree.to_string());
    if (!e.expected->complexity) row.notes.push_back("k <= " + std::to_string(rep.complexity_witness));
  }
  if (rep.bounds) {
    const auto& b = *rep.bounds;
    const bool attained = rep.regular_genus == GenusValue::integer(b.genus) &&
                          rep.gurau_degree == GenusValue::integer(b.gurau_degree) &&
                          rep.complexity_witness == b.complexity;
    if (rep.regular_genus < GenusValue::integer(b.genus) || rep.gurau_degree < GenusValue::integer(b.gurau_degree) ||
        rep.complexity_witness < b.complexity) {
      row.status = RowStatus::Mismatch;
      row.notes.push_back("below the rank lower bounds");
    } else if (attained) {
      row.notes.push_back("all lower bounds attained");
    } else if (rep.regular_genus == GenusValue::integer(b.genus)) {
      row.notes.push_back("genus bound attained");
    }
  }
  if (!rep.notes.empty()) row.notes.push_back(rep.notes);
  return row;
}

inline std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Ok: return "ok";
    case RowStatus::Mismatch: return "mismatch";
    case RowStatus::IngestOnly: return "ingest-only";
  }
  return "?";
}

inline std::string join_notes(const std::vector<std::string>& notes) {
  std::string s;
  for (const auto& n : notes) s += (s.empty() ? "" : "; ") + n;
  return s;
}

inline std::string render_table(const std::vector<TableRow>& rows) {
  const std::vector<std::string> head{"name", "G", "D_G", "k", "class", "notes"};
  std::vector<std::vector<std::string>> cells{head};
  for (const auto& r : rows)
    cells.push_back({r.name, r.genus.empty() ? "-" : r.genus, r.gurau_degree.empty() ? "-" : r.gurau_degree,
                     r.complexity.empty() ? "-" : r.complexity, r.cls, join_notes(r.notes)});
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  std::ostringstream s;
  for (const auto& line : cells) {
    std::string out;
    for (std::size_t i = 0; i < line.size(); ++i) {
      out += line[i];
      if (i + 1 < line.size()) out += std::string(width[i] - line[i].size() + 2, ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    s << out << "\n";
  }
  return s.str();
}

inline nlohmann::ordered_json table_json(const std::vector<TableRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["G"] = r.genus.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.genus);
    j["D_G"] = r.gurau_degree.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.gurau_degree);
    j["k"] = r.complexity.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.complexity);
    j["class"] = r.cls;
    j["notes"] = r.notes;
    j["status"] = to_string(r.status);
    arr.push_back(j);
  }
  return arr;
}

}  // namespace gemkit
