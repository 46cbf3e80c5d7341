#pragma once

// Edge-colored graphs: the data model shared by every gemkit module.
//
// An (n+1)-colored graph on 2p vertices is stored as one fixed-point-free
// involution per color. Vertex ids are dense (0 .. 2p-1), colors are dense
// (0 .. n). Multi-edges are implicit: two colors may pair the same vertices.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gemkit {

using Vertex = int;
using Color = int;

inline constexpr Vertex kNoVertex = -1;
inline constexpr int kMaxColors = 16;

enum class ErrorKind {
  Syntax,        // malformed input text
  Structure,     // not a legal colored graph
  Precondition,  // operation applied outside its domain
  Inconsistent,  // supplied claims contradict the graph (e.g. negative t)
  Internal,      // invariant breach inside gemkit itself
};

class GemError : public std::runtime_error {
 public:
  GemError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// A subset of the color set, as a bitmask. Iteration is ascending.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint32_t mask) : mask_(mask) {}
  ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors) mask_ |= bit(c);
  }

  static constexpr ColorSet all(int n) { return ColorSet((std::uint32_t{1} << (n + 1)) - 1); }
  static constexpr ColorSet single(Color c) { return ColorSet(bit(c)); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool contains(Color c) const { return (mask_ & bit(c)) != 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr ColorSet with(Color c) const { return ColorSet(mask_ | bit(c)); }
  constexpr ColorSet without(Color c) const { return ColorSet(mask_ & ~bit(c)); }
  // The complement within Delta_n = {0, ..., n}.
  constexpr ColorSet complement(int n) const { return ColorSet(all(n).mask_ & ~mask_); }
  constexpr bool subset_of(ColorSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr int max_color() const { return mask_ == 0 ? -1 : 31 - std::countl_zero(mask_); }

  std::vector<Color> colors() const {
    std::vector<Color> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }
  // Position of c among the members, ascending. c must be a member.
  constexpr int rank_of(Color c) const { return std::popcount(mask_ & (bit(c) - 1)); }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (Color c : colors()) {
      if (!first) s += ",";
      s += std::to_string(c);
      first = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(ColorSet a, ColorSet b) = default;
  friend constexpr auto operator<=>(ColorSet a, ColorSet b) = default;

 private:
  static constexpr std::uint32_t bit(Color c) { return std::uint32_t{1} << c; }
  std::uint32_t mask_ = 0;
};

using Metadata = std::map<std::string, std::string>;

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(const std::string& code) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.code == code; });
  }
};

class ColoredGraph {
 public:
  ColoredGraph() = default;

  // Stores the data as given. Use validate_structure() or checked() to
  // enforce the colored-graph axioms.
  ColoredGraph(int n, std::vector<std::vector<Vertex>> matchings, Metadata meta = {})
      : n_(n), matchings_(std::move(matchings)), meta_(std::move(meta)) {
    order_ = matchings_.empty() ? 0 : static_cast<int>(matchings_.front().size());
  }

  static ColoredGraph checked(int n, std::vector<std::vector<Vertex>> matchings,
                              Metadata meta = {});

  int dimension() const { return n_; }
  int num_colors() const { return n_ + 1; }
  int order() const { return order_; }
  int half_order() const { return order_ / 2; }
  ColorSet all_colors() const { return ColorSet::all(n_); }

  Vertex partner(Color c, Vertex v) const { return matchings_[c][v]; }
  std::span<const Vertex> matching(Color c) const { return matchings_[c]; }
  const std::vector<std::vector<Vertex>>& matchings() const { return matchings_; }

  const Metadata& meta() const { return meta_; }
  std::string meta_or(const std::string& key, const std::string& fallback = {}) const {
    auto it = meta_.find(key);
    return it == meta_.end() ? fallback : it->second;
  }
  ColoredGraph with_meta(const std::string& key, const std::string& value) const {
    ColoredGraph g = *this;
    g.meta_[key] = value;
    return g;
  }
  ColoredGraph with_meta(Metadata meta) const {
    ColoredGraph g = *this;
    g.meta_ = std::move(meta);
    return g;
  }

  // The colors joining u and v (empty if they are not adjacent).
  ColorSet colors_between(Vertex u, Vertex v) const {
    ColorSet s;
    for (Color c = 0; c <= n_; ++c)
      if (matchings_[c][u] == v) s = s.with(c);
    return s;
  }

  // Same colored graph after renaming vertex v to perm[v].
  ColoredGraph relabeled(std::span<const Vertex> perm) const {
    std::vector<std::vector<Vertex>> m(matchings_.size(), std::vector<Vertex>(order_));
    for (std::size_t c = 0; c < matchings_.size(); ++c)
      for (Vertex v = 0; v < order_; ++v) m[c][perm[v]] = perm[matchings_[c][v]];
    return ColoredGraph(n_, std::move(m), meta_);
  }

  // Same graph with color c renamed to perm[c].
  ColoredGraph recolored(std::span<const Color> perm) const {
    std::vector<std::vector<Vertex>> m(matchings_.size());
    for (std::size_t c = 0; c < matchings_.size(); ++c) m[perm[c]] = matchings_[c];
    return ColoredGraph(n_, std::move(m), meta_);
  }

  // Structural equality: metadata is ignored.
  bool same_structure(const ColoredGraph& o) const {
    return n_ == o.n_ && matchings_ == o.matchings_;
  }

 private:
  int n_ = 0;
  int order_ = 0;
  std::vector<std::vector<Vertex>> matchings_;
  Metadata meta_;
};

// Lists every violated colored-graph axiom; empty iff g is legal.
inline ValidationReport validate_structure(const ColoredGraph& g) {
  ValidationReport report;
  auto add = [&](std::string code, std::string msg) {
    report.violations.push_back({std::move(code), std::move(msg)});
  };
  const int n = g.dimension();
  if (n < 1 || n + 1 > kMaxColors) {
    add("bad dimension", "number of colors must lie in 2.." + std::to_string(kMaxColors));
    return report;
  }
  if (static_cast<int>(g.matchings().size()) != n + 1) {
    add("color count mismatch", "expected " + std::to_string(n + 1) + " matchings, found " +
                                    std::to_string(g.matchings().size()));
    return report;
  }
  const int order = g.order();
  if (order <= 0) add("empty graph", "vertex count must be positive");
  if (order % 2 != 0) add("odd order", "vertex count " + std::to_string(order) + " is odd");
  for (Color c = 0; c <= n; ++c) {
    auto m = g.matching(c);
    if (static_cast<int>(m.size()) != order) {
      add("incomplete matching", "incomplete matching for color " + std::to_string(c));
      continue;
    }
    bool incomplete = false, loop = false, involution = true;
    for (Vertex v = 0; v < order; ++v) {
      Vertex w = m[v];
      if (w < 0 || w >= order) {
        incomplete = true;
        continue;
      }
      if (w == v) {
        loop = true;
        continue;
      }
      if (m[w] != v) involution = false;
    }
    if (incomplete) add("incomplete matching", "incomplete matching for color " + std::to_string(c));
    if (loop) add("loop detected", "loop detected for color " + std::to_string(c));
    if (!involution) add("not an involution", "color " + std::to_string(c) + " map is not an involution");
  }
  return report;
}

inline ColoredGraph ColoredGraph::checked(int n, std::vector<std::vector<Vertex>> matchings,
                                          Metadata meta) {
  ColoredGraph g(n, std::move(matchings), std::move(meta));
  auto report = validate_structure(g);
  if (!report.ok()) throw GemError(ErrorKind::Structure, report.violations.front().message);
  return g;
}

inline void require_valid(const ColoredGraph& g) {
  auto report = validate_structure(g);
  if (!report.ok()) throw GemError(ErrorKind::Structure, report.violations.front().message);
}

}  // namespace gemkit
