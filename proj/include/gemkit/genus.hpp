#pragma once

// Regular genus of a colored graph with respect to a cyclic color order:
//   2 - 2 rho_eps = sum_j g_{eps_j, eps_{j+1}} + (1 - n) p.
// rho is the genus of the embedding surface in the bipartite case and half
// its genus otherwise, so it is stored as twice its value.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/permutations.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

class GenusValue {
 public:
  constexpr GenusValue() = default;
  static constexpr GenusValue from_twice(std::int64_t twice) {
    GenusValue v;
    v.twice_ = twice;
    return v;
  }
  static constexpr GenusValue integer(std::int64_t value) { return from_twice(2 * value); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  // Exact value when integral.
  std::int64_t value() const {
    if (!is_integer())
      throw GemError(ErrorKind::Precondition, "genus value " + to_string() + " is not an integer");
    return twice_ / 2;
  }
  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  friend constexpr GenusValue operator+(GenusValue a, GenusValue b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr GenusValue operator-(GenusValue a, GenusValue b) {
    return from_twice(a.twice_ - b.twice_);
  }
  friend constexpr bool operator==(GenusValue a, GenusValue b) = default;
  friend constexpr auto operator<=>(GenusValue a, GenusValue b) = default;

 private:
  std::int64_t twice_ = 0;
};

namespace detail {

// rho for a connected graph of half order p, given the residue counts.
inline GenusValue genus_from_cycle(const ResidueTable& g, std::span<const Color> order, int p) {
  const int n = static_cast<int>(order.size()) - 1;
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < order.size(); ++j)
    sum += g(ColorSet{order[j], order[(j + 1) % order.size()]});
  return GenusValue::from_twice(2 - sum + static_cast<std::int64_t>(n - 1) * p);
}

inline void require_connected(const ResidueTable& g, int n, const char* what) {
  if (g(ColorSet::all(n)) != 1)
    throw GemError(ErrorKind::Precondition, std::string(what) + " requires a connected graph");
}

}  // namespace detail

inline GenusValue rho_eps(const ColoredGraph& g, const ResidueTable& table,
                          const CyclicPermutation& eps) {
  if (eps.dimension() != g.dimension())
    throw GemError(ErrorKind::Precondition, "permutation " + eps.to_string() +
                                                " does not match the color count");
  detail::require_connected(table, g.dimension(), "rho_eps");
  return detail::genus_from_cycle(table, eps.sequence(), g.half_order());
}

inline GenusValue rho_eps(const ColoredGraph& g, const CyclicPermutation& eps) {
  return rho_eps(g, ResidueTable(g), eps);
}

struct GenusSweep {
  std::vector<CyclicPermutation> classes;
  std::vector<GenusValue> rho;  // parallel to classes

  GenusValue regular_genus() const { return *std::min_element(rho.begin(), rho.end()); }
  GenusValue gurau_degree() const {
    GenusValue sum;
    for (auto r : rho) sum = sum + r;
    return sum;
  }
  // First class (in canonical order) attaining the minimum.
  const CyclicPermutation& minimizer() const {
    return classes[std::min_element(rho.begin(), rho.end()) - rho.begin()];
  }
  GenusValue at(const CyclicPermutation& eps) const {
    auto key = eps.normalized();
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (classes[i] == key) return rho[i];
    throw GemError(ErrorKind::Internal, "permutation class not found: " + eps.to_string());
  }
};

inline GenusSweep genus_sweep(const ColoredGraph& g, const ResidueTable& table) {
  detail::require_connected(table, g.dimension(), "genus sweep");
  GenusSweep sweep;
  sweep.classes = cyclic_permutation_classes(g.dimension());
  sweep.rho.reserve(sweep.classes.size());
  for (const auto& eps : sweep.classes)
    sweep.rho.push_back(detail::genus_from_cycle(table, eps.sequence(), g.half_order()));
  return sweep;
}

inline GenusSweep genus_sweep(const ColoredGraph& g) { return genus_sweep(g, ResidueTable(g)); }

inline GenusValue regular_genus(const ColoredGraph& g) { return genus_sweep(g).regular_genus(); }

inline GenusValue gurau_degree(const ColoredGraph& g) { return genus_sweep(g).gurau_degree(); }

// rho of the (unique) residue avoiding color eps_i, with respect to the cyclic
// order eps_i-hat induced on the remaining colors. n = 4 only.
inline GenusValue residue_regular_genus(const ColoredGraph& g, const ResidueTable& table,
                                        const CyclicPermutation& eps, int i) {
  if (g.dimension() != 4 || eps.dimension() != 4)
    throw GemError(ErrorKind::Precondition, "residue_regular_genus is defined for n = 4");
  const Color skipped = eps[i];
  const ColorSet rest = ColorSet::single(skipped).complement(4);
  if (table(rest) != 1)
    throw GemError(ErrorKind::Precondition,
                   "graph has " + std::to_string(table(rest)) + " residues over " + rest.to_string() +
                       "; the residue genus is only defined for a single residue");
  // The residue spans every vertex, so whole-graph counts over subsets of
  // `rest` are the residue's own counts.
  auto induced = eps.induced(i);
  return detail::genus_from_cycle(table, induced, g.half_order());
}

inline GenusValue residue_regular_genus(const ColoredGraph& g, const CyclicPermutation& eps,
                                        int i) {
  return residue_regular_genus(g, ResidueTable(g), eps, i);
}

}  // namespace gemkit
