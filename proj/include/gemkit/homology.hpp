#pragma once

// Cellular chains of the pseudocomplex K(G) a colored graph encodes.
//
// A k-cell is a residue over a color set C with |C| = n - k; its vertices
// carry the labels Delta_n \ C. The facet dropping label l is the residue over
// C + {l} containing it, with sign (-1)^(position of l among the labels).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/integer_matrix.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

struct Cell {
  ColorSet colors;  // residue color set; labels are its complement
  int block = 0;
};

struct ChainComplex {
  int n = 0;
  std::vector<std::vector<Cell>> cells;  // cells[k] = k-cells
  std::vector<IntMatrix> boundary;       // boundary[k]: C_k -> C_{k-1}, rows = (k-1)-cells; [0] empty

  int cell_count(int k) const { return static_cast<int>(cells[k].size()); }
  std::vector<long> face_vector() const {
    std::vector<long> f;
    for (const auto& c : cells) f.push_back(static_cast<long>(c.size()));
    return f;
  }
  long euler_characteristic() const {
    long chi = 0;
    for (int k = 0; k <= n; ++k) chi += (k % 2 == 0 ? 1 : -1) * cell_count(k);
    return chi;
  }
};

enum class Coefficients { Rational, Z2 };

namespace detail {

inline std::vector<ColorSet> color_sets_of_size(int n, int size) {
  std::vector<ColorSet> out;
  const std::uint32_t full = ColorSet::all(n).mask();
  for (std::uint32_t m = 0; m <= full; ++m)
    if (std::popcount(m) == size) out.emplace_back(m);
  return out;
}

// Every composite boundary must vanish; anything else is a gemkit bug.
inline void verify_boundary_squared(const ChainComplex& cx) {
  for (int k = 2; k <= cx.n; ++k) {
    const auto& outer = cx.boundary[k - 1];
    const auto& inner = cx.boundary[k];
    for (int col = 0; col < cx.cell_count(k); ++col)
      for (int r = 0; r < cx.cell_count(k - 2); ++r) {
        std::int64_t s = 0;
        for (int mid = 0; mid < cx.cell_count(k - 1); ++mid) s += outer[r][mid] * inner[mid][col];
        if (s != 0)
          throw GemError(ErrorKind::Internal,
                         "boundary of boundary is nonzero in dimension " + std::to_string(k));
      }
  }
}

}  // namespace detail

// Builds the cellular chain complex. With `drop_label`, only cells whose label
// set avoids that color are kept: the complement of the open stars of the
// vertices labelled `drop_label`.
inline ChainComplex build_chain_complex(const ColoredGraph& g,
                                        std::optional<Color> drop_label = std::nullopt) {
  require_valid(g);
  const int n = g.dimension();
  ChainComplex cx;
  cx.n = n;
  cx.cells.resize(n + 1);
  cx.boundary.resize(n + 1);

  std::vector<ResiduePartition> parts(ColorSet::all(n).mask() + 1);
  std::vector<std::vector<int>> cell_id(parts.size());
  for (int k = 0; k <= n; ++k) {
    for (ColorSet c : detail::color_sets_of_size(n, n - k)) {
      if (drop_label && !c.contains(*drop_label)) continue;
      parts[c.mask()] = residues(g, c);
      auto& ids = cell_id[c.mask()];
      for (int b = 0; b < parts[c.mask()].count(); ++b) {
        ids.push_back(static_cast<int>(cx.cells[k].size()));
        cx.cells[k].push_back({c, b});
      }
    }
  }
  for (int k = 1; k <= n; ++k) {
    IntMatrix d(cx.cells[k - 1].size(), std::vector<std::int64_t>(cx.cells[k].size(), 0));
    for (std::size_t col = 0; col < cx.cells[k].size(); ++col) {
      const Cell& cell = cx.cells[k][col];
      const Vertex witness = parts[cell.colors.mask()].blocks[cell.block].front();
      const auto labels = cell.colors.complement(n).colors();
      for (std::size_t j = 0; j < labels.size(); ++j) {
        const ColorSet face = cell.colors.with(labels[j]);
        if (drop_label && !face.contains(*drop_label)) continue;
        const int row = cell_id[face.mask()][parts[face.mask()].block_of[witness]];
        d[row][col] += (j % 2 == 0) ? 1 : -1;
      }
    }
    cx.boundary[k] = std::move(d);
  }
  detail::verify_boundary_squared(cx);
  return cx;
}

inline std::vector<long> face_vector(const ColoredGraph& g) {
  return build_chain_complex(g).face_vector();
}

inline std::vector<int> betti_numbers(const ChainComplex& cx, Coefficients coeff) {
  std::vector<int> rank(cx.n + 2, 0);
  for (int k = 1; k <= cx.n; ++k)
    rank[k] = coeff == Coefficients::Rational ? rank_rational(cx.boundary[k])
                                              : rank_mod2(cx.boundary[k]);
  std::vector<int> beta(cx.n + 1);
  for (int k = 0; k <= cx.n; ++k) beta[k] = cx.cell_count(k) - rank[k] - rank[k + 1];
  return beta;
}

inline std::vector<int> betti_numbers(const ColoredGraph& g,
                                      Coefficients coeff = Coefficients::Rational) {
  return betti_numbers(build_chain_complex(g), coeff);
}

// H_k with integer coefficients.
inline AbelianGroup integer_homology(const ChainComplex& cx, int k) {
  if (k < 0 || k > cx.n) throw GemError(ErrorKind::Precondition, "homology degree out of range");
  const int rank_k = k >= 1 ? rank_rational(cx.boundary[k]) : 0;
  AbelianGroup h;
  std::vector<std::int64_t> inv;
  if (k + 1 <= cx.n) inv = smith_invariants(cx.boundary[k + 1]);
  h.free_rank = cx.cell_count(k) - rank_k - static_cast<int>(inv.size());
  for (auto d : inv)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

inline AbelianGroup first_homology(const ColoredGraph& g) {
  return integer_homology(build_chain_complex(g), 1);
}

}  // namespace gemkit
