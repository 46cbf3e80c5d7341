#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

namespace detail {

// Number of connected components of the subgraph keeping only colors in
// `mask`. Works on raw matchings so the enumerator can call it on scratch
// arrays without building a ColoredGraph.
template <class Matchings>
int component_count(const Matchings& m, std::uint32_t mask, int order) {
  constexpr int kStack = 128;
  std::array<std::uint8_t, kStack> seen_small{};
  std::array<int, kStack> stack_small{};
  std::vector<std::uint8_t> seen_big;
  std::vector<int> stack_big;
  std::uint8_t* seen = seen_small.data();
  int* stack = stack_small.data();
  if (order > kStack) {
    seen_big.assign(order, 0);
    stack_big.assign(order, 0);
    seen = seen_big.data();
    stack = stack_big.data();
  }
  int count = 0;
  for (int s = 0; s < order; ++s) {
    if (seen[s]) continue;
    ++count;
    int top = 0;
    stack[top++] = s;
    seen[s] = 1;
    while (top > 0) {
      int v = stack[--top];
      for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
        int w = m[std::countr_zero(bits)][v];
        if (!seen[w]) {
          seen[w] = 1;
          stack[top++] = w;
        }
      }
    }
  }
  return count;
}

inline void check_colors(const ColoredGraph& g, ColorSet colors) {
  if (!colors.subset_of(g.all_colors()))
    throw GemError(ErrorKind::Precondition,
                   "color set " + colors.to_string() + " is not contained in Delta_" +
                       std::to_string(g.dimension()));
}

}  // namespace detail

// Connected components of the subgraph restricted to a color set, ordered by
// least contained vertex id; vertex lists are ascending.
struct ResiduePartition {
  ColorSet colors;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<int> block_of;  // vertex -> block index

  int count() const { return static_cast<int>(blocks.size()); }
};

inline ResiduePartition residues(const ColoredGraph& g, ColorSet colors) {
  detail::check_colors(g, colors);
  ResiduePartition part;
  part.colors = colors;
  part.block_of.assign(g.order(), -1);
  const auto col = colors.colors();
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (part.block_of[s] >= 0) continue;
    const int id = part.count();
    std::vector<Vertex> block;
    part.block_of[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      block.push_back(v);
      for (Color c : col) {
        Vertex w = g.partner(c, v);
        if (part.block_of[w] < 0) {
          part.block_of[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    part.blocks.push_back(std::move(block));
  }
  return part;
}

inline int residue_count(const ColoredGraph& g, ColorSet colors) {
  detail::check_colors(g, colors);
  return detail::component_count(g.matchings(), colors.mask(), g.order());
}

inline bool is_connected(const ColoredGraph& g) { return residue_count(g, g.all_colors()) == 1; }

// Residue counts g_C for every color set C, indexed by mask.
class ResidueTable {
 public:
  explicit ResidueTable(const ColoredGraph& g) : n_(g.dimension()) {
    const std::uint32_t full = ColorSet::all(n_).mask();
    counts_.assign(full + 1, 0);
    for (std::uint32_t mask = 0; mask <= full; ++mask)
      counts_[mask] = detail::component_count(g.matchings(), mask, g.order());
  }
  int dimension() const { return n_; }
  int operator()(ColorSet c) const { return counts_[c.mask()]; }
  int operator()(std::initializer_list<Color> c) const { return counts_[ColorSet(c).mask()]; }

 private:
  int n_;
  std::vector<int> counts_;
};

struct BipartiteResult {
  bool bipartite = true;
  std::vector<int> classes;         // 0/1 per vertex; filled when bipartite
  std::vector<Vertex> odd_walk;     // closed walk of odd length otherwise
};

// Two-classes the vertices (least vertex of each component in class 0), or
// returns an odd closed walk v0 v1 ... vk (= v0) as a witness.
inline BipartiteResult is_bipartite(const ColoredGraph& g) {
  BipartiteResult out;
  const int order = g.order();
  std::vector<int> cls(order, -1), parent(order, -1), depth(order, 0);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < order; ++s) {
    if (cls[s] >= 0) continue;
    cls[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Color c = 0; c <= g.dimension(); ++c) {
        Vertex w = g.partner(c, v);
        if (cls[w] < 0) {
          cls[w] = 1 - cls[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (cls[w] == cls[v]) {
          // Walk v -> root, then root -> w, then the edge w -> v.
          std::vector<Vertex> a, b;
          for (Vertex x = v; x >= 0; x = parent[x]) a.push_back(x);
          for (Vertex x = w; x >= 0; x = parent[x]) b.push_back(x);
          out.bipartite = false;
          out.odd_walk = a;
          for (auto it = b.rbegin() + 1; it != b.rend(); ++it) out.odd_walk.push_back(*it);
          out.odd_walk.push_back(v);
          return out;
        }
      }
    }
  }
  out.classes = std::move(cls);
  return out;
}

// The block-th residue over `colors`, as a standalone |colors|-colored graph.
// Vertices are renumbered in ascending original order and colors by
// ascending original color; the originals are kept in the metadata keys
// "orig_vertices" and "orig_colors".
inline ColoredGraph extract_residue(const ColoredGraph& g, ColorSet colors, int block) {
  if (colors.size() < 2)
    throw GemError(ErrorKind::Precondition, "residue extraction needs at least two colors");
  auto part = residues(g, colors);
  if (block < 0 || block >= part.count())
    throw GemError(ErrorKind::Precondition, "invalid residue block id " + std::to_string(block));
  const auto& verts = part.blocks[block];
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
  const auto cols = colors.colors();
  std::vector<std::vector<Vertex>> m(cols.size(), std::vector<Vertex>(verts.size()));
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (std::size_t i = 0; i < verts.size(); ++i) m[k][i] = index[g.partner(cols[k], verts[i])];
  std::string vs, cs;
  for (std::size_t i = 0; i < verts.size(); ++i) vs += (i ? " " : "") + std::to_string(verts[i]);
  for (std::size_t k = 0; k < cols.size(); ++k) cs += (k ? " " : "") + std::to_string(cols[k]);
  return ColoredGraph(static_cast<int>(cols.size()) - 1, std::move(m),
                      Metadata{{"orig_vertices", vs}, {"orig_colors", cs}});
}

}  // namespace gemkit
