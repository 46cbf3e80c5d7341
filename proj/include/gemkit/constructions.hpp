#pragma once

// Graph connected sums, the standard sphere, and the exhaustive enumerator of
// small colored graphs that serves as the ground-truth oracle for examples.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gemkit/canonical.hpp"
#include "gemkit/colored_graph.hpp"
#include "gemkit/recognition.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

// Order-2 graph, every color pairing 0 and 1.
inline ColoredGraph standard_sphere(int n) {
  if (n < 1) throw GemError(ErrorKind::Precondition, "standard_sphere needs n >= 1");
  return ColoredGraph(n, std::vector<std::vector<Vertex>>(n + 1, {1, 0}),
                      Metadata{{"name", "S" + std::to_string(n)}, {"m", "0"}, {"mprime", "0"}});
}

namespace detail {

inline std::string sum_kind(const ColoredGraph& a, const ColoredGraph& b) {
  const std::string x = a.meta_or("boundary"), y = b.meta_or("boundary");
  if (x == "empty" || y == "empty") return "internal";
  if (x == "connected" && y == "connected") return "boundary";
  return "unknown";
}

}  // namespace detail

// Deletes v1 and v2 and welds the hanging edges of equal color. The vertices
// of g1 come first (in order), then those of g2.
inline ColoredGraph connected_sum(const ColoredGraph& g1, Vertex v1, const ColoredGraph& g2, Vertex v2) {
  require_valid(g1);
  require_valid(g2);
  if (g1.dimension() != g2.dimension())
    throw GemError(ErrorKind::Precondition, "connected sum needs graphs with the same number of colors");
  if (v1 < 0 || v1 >= g1.order() || v2 < 0 || v2 >= g2.order())
    throw GemError(ErrorKind::Precondition, "welding vertex out of range");
  const auto b1 = is_bipartite(g1), b2 = is_bipartite(g2);
  if (b1.bipartite && b2.bipartite && b1.classes[v1] == b2.classes[v2])
    throw GemError(ErrorKind::Precondition,
                   "welding vertices of bipartite summands must lie in opposite classes");
  const int n = g1.dimension();
  const int o1 = g1.order(), o2 = g2.order();
  auto id1 = [&](Vertex v) { return v < v1 ? v : v - 1; };
  auto id2 = [&](Vertex v) { return (o1 - 1) + (v < v2 ? v : v - 1); };
  std::vector<std::vector<Vertex>> m(n + 1, std::vector<Vertex>(o1 + o2 - 2));
  for (Color c = 0; c <= n; ++c) {
    for (Vertex v = 0; v < o1; ++v)
      if (v != v1 && g1.partner(c, v) != v1) m[c][id1(v)] = id1(g1.partner(c, v));
    for (Vertex v = 0; v < o2; ++v)
      if (v != v2 && g2.partner(c, v) != v2) m[c][id2(v)] = id2(g2.partner(c, v));
    const Vertex a = id1(g1.partner(c, v1)), b = id2(g2.partner(c, v2));
    m[c][a] = b;
    m[c][b] = a;
  }
  Metadata meta{{"name", g1.meta_or("name", "?") + "#" + g2.meta_or("name", "?")},
                {"sum_kind", detail::sum_kind(g1, g2)}};
  for (const char* key : {"m", "mprime"})
    if (g1.meta().count(key) && g2.meta().count(key))
      meta[key] = std::to_string(std::stoi(g1.meta_or(key)) + std::stoi(g2.meta_or(key)));
  const std::string x = g1.meta_or("boundary"), y = g2.meta_or("boundary");
  if (!x.empty() && !y.empty()) meta["boundary"] = (x == "empty" && y == "empty") ? "empty" : "connected";
  return ColoredGraph(n, std::move(m), std::move(meta));
}

// Welds at vertex 0 of g1 and at the first vertex of g2 allowed by the
// bipartition rule.
inline ColoredGraph connected_sum(const ColoredGraph& g1, const ColoredGraph& g2) {
  const auto b1 = is_bipartite(g1), b2 = is_bipartite(g2);
  Vertex v2 = 0;
  if (b1.bipartite && b2.bipartite)
    while (b2.classes[v2] == b1.classes[0]) ++v2;
  return connected_sum(g1, 0, g2, v2);
}

// --------------------------------------------------------------- enumeration

inline constexpr int kDefaultEnumerationCeiling = 14;
inline constexpr int kHardEnumerationCeiling = 16;

struct SearchSpec {
  int n = 4;
  int min_order = 2;
  int max_order = 2;
  bool bipartite_only = false;
  bool crystallization = true;
  bool spherical_triples = true;  // every 3-residue a 2-sphere
  bool dipole_free = false;
  bool rigid = false;             // experimental: dipole-free and no rho_n-pair
  std::vector<std::pair<ColorSet, int>> residue_counts;  // exact g_C constraints
  int ceiling = kDefaultEnumerationCeiling;
};

struct SearchStats {
  std::vector<std::int64_t> nodes;  // completed matchings per color
  std::int64_t leaves = 0;          // complete graphs passing every filter
  std::int64_t distinct = 0;
};

// True iff some two equally colored edges lie on the same bicolored cycle
// for every other color.
inline bool has_rho_n_pair(const ColoredGraph& g) {
  const int n = g.dimension();
  for (Color c = 0; c <= n; ++c) {
    std::vector<ResiduePartition> cyc;
    for (Color i = 0; i <= n; ++i)
      if (i != c) cyc.push_back(residues(g, {c, i}));
    std::vector<Vertex> edges;
    for (Vertex v = 0; v < g.order(); ++v)
      if (v < g.partner(c, v)) edges.push_back(v);
    for (std::size_t a = 0; a < edges.size(); ++a)
      for (std::size_t b = a + 1; b < edges.size(); ++b) {
        bool all = true;
        for (const auto& p : cyc) all = all && p.block_of[edges[a]] == p.block_of[edges[b]];
        if (all) return true;
      }
  }
  return false;
}

namespace detail {

inline void partitions(int p, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (p == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(p, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(p - k, k, cur, out);
    cur.pop_back();
  }
}

// Color-1 matchings in standard form, one per cycle type of the {0,1}-cycles
// when color 0 pairs 2i with 2i+1.
inline std::vector<std::vector<Vertex>> standard_second_colors(int p) {
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(p, p, cur, parts);
  std::vector<std::vector<Vertex>> out;
  for (const auto& lambda : parts) {
    std::vector<Vertex> m(2 * p);
    int s = 0;
    for (int k : lambda) {
      for (int j = 0; j < k; ++j) {
        const Vertex a = s + 2 * j + 1;
        const Vertex b = (j + 1 == k) ? s : s + 2 * j + 2;
        m[a] = b;
        m[b] = a;
      }
      s += 2 * k;
    }
    out.push_back(std::move(m));
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(const SearchSpec& spec, int order, std::function<void(const ColoredGraph&)> leaf,
             SearchStats& stats)
      : spec_(spec), n_(spec.n), order_(order), leaf_(std::move(leaf)), stats_(stats),
        m_(spec.n + 1, std::vector<Vertex>(order, -1)) {
    if (stats_.nodes.size() < static_cast<std::size_t>(n_ + 1)) stats_.nodes.resize(n_ + 1, 0);
  }

  void run() {
    const int p = order_ / 2;
    for (Vertex v = 0; v < order_; ++v) m_[0][v] = v ^ 1;
    if (!level_ok(0)) return;
    ++stats_.nodes[0];
    if (n_ == 0) return;
    for (const auto& second : standard_second_colors(p)) {
      m_[1] = second;
      if (!level_ok(1)) continue;
      ++stats_.nodes[1];
      if (n_ == 1)
        finish();
      else
        fill(2, 0);
    }
  }

 private:
  // Chooses a partner for the lowest unmatched vertex >= from, for color c.
  void fill(Color c, Vertex from) {
    auto& mc = m_[c];
    Vertex v = from;
    while (v < order_ && mc[v] >= 0) ++v;
    if (v == order_) {
      if (!level_ok(c)) return;
      ++stats_.nodes[c];
      if (c == n_)
        finish();
      else
        fill(c + 1, 0);
      return;
    }
    const int step = spec_.bipartite_only ? 2 : 1;
    for (Vertex w = v + 1; w < order_; w += step) {
      if (mc[w] >= 0) continue;
      mc[v] = w;
      mc[w] = v;
      fill(c, v + 1);
      mc[v] = -1;
      mc[w] = -1;
    }
  }

  int count(std::uint32_t mask) const { return component_count(m_, mask, order_); }

  // Constraints decidable once colors 0..c are placed and that involve c.
  bool level_ok(Color c) const {
    const std::uint32_t top = std::uint32_t{1} << c;
    const std::uint32_t upto = (top << 1) - 1;
    if (spec_.spherical_triples && c >= 2) {
      const int p = order_ / 2;
      for (Color a = 0; a < c; ++a)
        for (Color b = a + 1; b < c; ++b) {
          const std::uint32_t ab = (1u << a) | (1u << b);
          const int lhs = count(ab) + count((1u << a) | top) + count((1u << b) | top) - p;
          if (lhs != 2 * count(ab | top)) return false;
        }
    }
    for (const auto& [set, value] : spec_.residue_counts)
      if ((set.mask() & top) && (set.mask() & ~upto) == 0 && count(set.mask()) != value) return false;
    if (spec_.crystallization && c == n_ - 1 && n_ >= 1 && count(upto) != 1) return false;
    if (c == n_) {
      const std::uint32_t all = upto;
      if (count(all) != 1) return false;
      if (spec_.crystallization)
        for (Color d = 0; d < n_; ++d)
          if (count(all & ~(1u << d)) != 1) return false;
    }
    return true;
  }

  void finish() {
    ColoredGraph g(n_, m_);
    if (spec_.dipole_free || spec_.rigid) {
      for (const auto& d : find_dipoles(g))
        if (d.proper) return;
    }
    if (spec_.rigid && has_rho_n_pair(g)) return;
    ++stats_.leaves;
    leaf_(g);
  }

  const SearchSpec& spec_;
  int n_;
  int order_;
  std::function<void(const ColoredGraph&)> leaf_;
  SearchStats& stats_;
  std::vector<std::vector<Vertex>> m_;
};

inline void check_spec(const SearchSpec& spec) {
  if (spec.n < 1 || spec.n + 1 > kMaxColors) throw GemError(ErrorKind::Precondition, "bad color count");
  if (spec.min_order < 2 || spec.min_order % 2 || spec.max_order % 2 || spec.max_order < spec.min_order)
    throw GemError(ErrorKind::Precondition, "order bounds must be even and at least 2");
  if (spec.ceiling > kHardEnumerationCeiling)
    throw GemError(ErrorKind::Precondition,
                   "enumeration ceiling above " + std::to_string(kHardEnumerationCeiling) + " is not supported");
  if (spec.max_order > spec.ceiling)
    throw GemError(ErrorKind::Precondition, "order " + std::to_string(spec.max_order) +
                                                " exceeds the enumeration ceiling " +
                                                std::to_string(spec.ceiling));
  for (const auto& [set, value] : spec.residue_counts)
    if (!set.subset_of(ColorSet::all(spec.n)) || set.empty())
      throw GemError(ErrorKind::Precondition, "residue constraint on " + set.to_string() + " is out of range");
}

}  // namespace detail

// Visits every graph meeting the spec once per isomorphism class, in
// discovery order, as its canonical relabeling. Returning false stops.
inline SearchStats enumerate_each(const SearchSpec& spec, const std::function<bool(const ColoredGraph&)>& visit) {
  detail::check_spec(spec);
  SearchStats stats;
  std::set<std::vector<int>> seen;
  struct Stop {};
  try {
    for (int order = spec.min_order; order <= spec.max_order; order += 2) {
      detail::Enumerator e(spec, order, [&](const ColoredGraph& g) {
        auto f = canonical_form(g);
        if (!seen.insert(f.key).second) return;
        ++stats.distinct;
        if (!visit(g.relabeled(f.relabeling))) throw Stop{};
      }, stats);
      e.run();
    }
  } catch (const Stop&) {
  }
  return stats;
}

// All graphs meeting the spec, one per isomorphism class, ordered by order
// and then canonical key.
inline std::vector<ColoredGraph> enumerate(const SearchSpec& spec, SearchStats* stats = nullptr) {
  std::vector<std::pair<std::vector<int>, ColoredGraph>> found;
  auto s = enumerate_each(spec, [&](const ColoredGraph& g) {
    std::vector<int> key{g.order()};
    auto k = canonical_form(g).key;
    key.insert(key.end(), k.begin(), k.end());
    found.emplace_back(std::move(key), g);
    return true;
  });
  if (stats) *stats = s;
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ColoredGraph> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

}  // namespace gemkit
