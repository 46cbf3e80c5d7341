#pragma once

// Canonical forms under color-preserving isomorphism.
//
// A connected colored graph is rigid once one vertex is fixed: a breadth-first
// relabeling from a start vertex, visiting colors in ascending order, is
// determined by the start. The canonical key is the least code over all
// starts; disconnected graphs sort their component codes.

#include <algorithm>
#include <numeric>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

struct CanonicalForm {
  std::vector<int> key;               // equal iff isomorphic
  std::vector<Vertex> relabeling;     // vertex v -> relabeling[v]
  std::vector<Color> color_perm;      // color c -> color_perm[c] (identity in strict mode)

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.key == b.key; }
};

namespace detail {

// Code of the component of `start` under BFS relabeling; `label` receives
// the new ids (relative to the component). Returns false early when the code
// already exceeds `best`.
inline bool bfs_code(const ColoredGraph& g, Vertex start, std::vector<int>& label, std::vector<Vertex>& queue,
                     std::vector<int>& code, const std::vector<int>* best) {
  const int colors = g.num_colors();
  code.clear();
  queue.clear();
  queue.push_back(start);
  label[start] = 0;
  bool tie = best != nullptr;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Color c = 0; c < colors; ++c) {
      const Vertex w = g.partner(c, v);
      if (label[w] < 0) {
        label[w] = static_cast<int>(queue.size());
        queue.push_back(w);
      }
      code.push_back(label[w]);
      if (tie) {
        const int b = (*best)[code.size() - 1];
        if (code.back() > b) {
          for (Vertex u : queue) label[u] = -1;
          return false;
        }
        if (code.back() < b) tie = false;
      }
    }
  }
  return true;
}

struct ComponentCode {
  std::vector<int> code;
  std::vector<Vertex> order;  // vertices in new-label order
};

inline ComponentCode component_canonical(const ColoredGraph& g, const std::vector<Vertex>& comp) {
  std::vector<int> label(g.order(), -1);
  std::vector<Vertex> queue;
  std::vector<int> code;
  ComponentCode best;
  bool have = false;
  for (Vertex s : comp) {
    if (!bfs_code(g, s, label, queue, code, have ? &best.code : nullptr)) continue;
    if (!have || code < best.code) {
      best.code = code;
      best.order = queue;
      have = true;
    }
    for (Vertex u : queue) label[u] = -1;
  }
  return best;
}

}  // namespace detail

// Canonical key and relabeling under color-preserving isomorphism.
inline CanonicalForm canonical_form(const ColoredGraph& g) {
  require_valid(g);
  const auto part = residues(g, g.all_colors());
  std::vector<detail::ComponentCode> comps;
  for (const auto& block : part.blocks) comps.push_back(detail::component_canonical(g, block));
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    return a.code.size() != b.code.size() ? a.code.size() < b.code.size() : a.code < b.code;
  });
  CanonicalForm f;
  f.key.push_back(g.num_colors());
  f.relabeling.assign(g.order(), 0);
  int next = 0;
  for (const auto& c : comps) {
    f.key.push_back(-static_cast<int>(c.order.size()));
    f.key.insert(f.key.end(), c.code.begin(), c.code.end());
    for (Vertex v : c.order) f.relabeling[v] = next++;
  }
  f.color_perm.resize(g.num_colors());
  std::iota(f.color_perm.begin(), f.color_perm.end(), 0);
  return f;
}

// Canonical form up to vertex relabeling and a permutation of the colors.
inline CanonicalForm canonical_form_up_to_colors(const ColoredGraph& g) {
  require_valid(g);
  std::vector<Color> perm(g.num_colors());
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best;
  bool have = false;
  do {
    auto f = canonical_form(g.recolored(perm));
    if (!have || f.key < best.key) {
      best = std::move(f);
      best.color_perm = perm;
      have = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline ColoredGraph canonical_graph(const ColoredGraph& g) {
  return g.relabeled(canonical_form(g).relabeling);
}

inline bool isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  return a.dimension() == b.dimension() && a.order() == b.order() &&
         canonical_form(a).key == canonical_form(b).key;
}

}  // namespace gemkit
