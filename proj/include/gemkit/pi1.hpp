#pragma once

// Fundamental-group presentations read off 5-colored graphs.
//
// Collapsing the connected 4-hat residue to a point leaves one loop per
// 4-colored edge and one 2-cell per {4,i}-cycle, so the presentation below
// describes pi_1 of the singular compactification.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/homology.hpp"
#include "gemkit/integer_matrix.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

struct Letter {
  int generator = 0;  // index into Presentation::generators
  int sign = 1;       // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct Relator {
  Word word;
  Color color = 0;     // the cycle's colors are {4, color}
  Vertex anchor = 0;   // least vertex on the cycle
};

struct Presentation {
  std::vector<Vertex> generators;  // edge id (lesser endpoint) per generator
  std::vector<Relator> relators;

  int generator_count() const { return static_cast<int>(generators.size()); }
  int relator_count() const { return static_cast<int>(relators.size()); }

  std::string letter_name(const Letter& l) const {
    return "x" + std::to_string(generators[l.generator]) + (l.sign < 0 ? "^-1" : "");
  }
  std::string word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + letter_name(w[i]);
    return s;
  }
  // <x0, x3, ... |
  //   r0,
  //   r1 >
  std::string to_string() const {
    std::string s = "⟨";
    for (int i = 0; i < generator_count(); ++i) s += (i ? ", x" : "x") + std::to_string(generators[i]);
    s += " |";
    for (int j = 0; j < relator_count(); ++j)
      s += "\n  " + word_to_string(relators[j].word) + (j + 1 < relator_count() ? "," : "");
    return s + " ⟩";
  }
};

inline Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

struct PresentationOptions {
  // Non-bipartite graphs get each 4-colored edge oriented from its lesser to
  // its greater endpoint instead of by bipartition class.
  bool allow_non_bipartite = false;
};

// Generators: 4-colored edges. Relators: {4,i}-cycles for i = 0..3, read from
// the least vertex of the cycle, leaving it along color 4. A letter is +1
// when its edge is crossed from class 0 to class 1.
inline Presentation presentation_from_gem(const ColoredGraph& g, const PresentationOptions& opt = {}) {
  require_valid(g);
  if (g.dimension() != 4) throw GemError(ErrorKind::Precondition, "presentations are built for n = 4");
  if (residue_count(g, {0, 1, 2, 3}) != 1)
    throw GemError(ErrorKind::Precondition, "the residue avoiding color 4 must be connected");
  const auto bip = is_bipartite(g);
  if (!bip.bipartite && !opt.allow_non_bipartite)
    throw GemError(ErrorKind::Precondition, "non-bipartite graph: orientation convention undefined");

  Presentation pres;
  std::vector<int> gen_of(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    const Vertex w = g.partner(4, v);
    if (v < w) {
      gen_of[v] = gen_of[w] = pres.generator_count();
      pres.generators.push_back(v);
    }
  }
  auto forward = [&](Vertex from, Vertex to) {
    return bip.bipartite ? bip.classes[from] == 0 : from < to;
  };
  for (Color i = 0; i < 4; ++i) {
    for (const auto& cycle : residues(g, {4, i}).blocks) {
      Relator r;
      r.color = i;
      r.anchor = cycle.front();
      Vertex v = r.anchor;
      do {
        const Vertex w = g.partner(4, v);
        r.word.push_back({gen_of[v], forward(v, w) ? 1 : -1});
        v = g.partner(i, w);
      } while (v != r.anchor);
      pres.relators.push_back(std::move(r));
    }
  }
  return pres;
}

// ------------------------------------------------------------------ collapse

enum class CollapseOutcome { Trivial, Stuck };

struct CollapseStep {
  int relator = 0;    // relator id in the original presentation
  int generator = 0;  // generator index deleted
};

struct CollapseResult {
  CollapseOutcome outcome = CollapseOutcome::Stuck;
  std::vector<int> survivors;         // generator indices left
  std::vector<int> live_relators;     // relator ids still non-empty
  std::vector<Word> remaining;        // their words, parallel to live_relators
  std::vector<CollapseStep> trace;

  int survivor_count() const { return static_cast<int>(survivors.size()); }
  bool trivial() const { return outcome == CollapseOutcome::Trivial; }
};

struct CollapseOptions {
  // Relator ids in scan order; empty means ascending.
  std::vector<int> relator_order;
};

namespace detail {

inline void erase_generator(std::vector<Word>& words, int gen) {
  for (auto& w : words) {
    Word kept;
    for (const Letter& l : w)
      if (l.generator != gen) kept.push_back(l);
    w = free_reduce(kept);
  }
}

}  // namespace detail

// Repeatedly finds a relator whose reduced form is a single letter, deletes
// that generator everywhere and reduces again. Terminates after at most one
// move per generator.
inline CollapseResult collapse(const Presentation& p, const CollapseOptions& opt = {}) {
  std::vector<Word> words;
  for (const auto& r : p.relators) words.push_back(free_reduce(r.word));
  std::vector<bool> alive(p.generator_count(), true);
  std::vector<int> order = opt.relator_order;
  if (order.empty())
    for (int j = 0; j < p.relator_count(); ++j) order.push_back(j);

  CollapseResult res;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : order) {
      if (words[j].size() != 1) continue;
      const int gen = words[j].front().generator;
      alive[gen] = false;
      detail::erase_generator(words, gen);
      res.trace.push_back({j, gen});
      moved = true;
      break;
    }
  }
  for (int i = 0; i < p.generator_count(); ++i)
    if (alive[i]) res.survivors.push_back(i);
  for (int j = 0; j < p.relator_count(); ++j)
    if (!words[j].empty()) {
      res.live_relators.push_back(j);
      res.remaining.push_back(words[j]);
    }
  res.outcome = res.survivors.empty() ? CollapseOutcome::Trivial : CollapseOutcome::Stuck;
  return res;
}

// Applies the recorded moves to p and checks that each was legal and that the
// outcome matches.
inline bool replay_collapse(const Presentation& p, const CollapseResult& r) {
  std::vector<Word> words;
  for (const auto& rel : p.relators) words.push_back(free_reduce(rel.word));
  std::vector<bool> alive(p.generator_count(), true);
  for (const auto& step : r.trace) {
    if (step.relator < 0 || step.relator >= p.relator_count()) return false;
    const Word& w = words[step.relator];
    if (w.size() != 1 || w.front().generator != step.generator || !alive[step.generator]) return false;
    alive[step.generator] = false;
    detail::erase_generator(words, step.generator);
  }
  int survivors = 0;
  for (bool a : alive) survivors += a;
  return survivors == r.survivor_count() &&
         (r.outcome == CollapseOutcome::Trivial) == (survivors == 0);
}

// ------------------------------------------------------------ abelianization

// Exponent-sum matrix: rows = generators, columns = relators.
inline IntMatrix exponent_sum_matrix(const Presentation& p) {
  IntMatrix m(p.generator_count(), std::vector<std::int64_t>(p.relator_count(), 0));
  for (int j = 0; j < p.relator_count(); ++j)
    for (const Letter& l : p.relators[j].word) m[l.generator][j] += l.sign;
  return m;
}

inline AbelianGroup abelianization(const Presentation& p) {
  return cokernel(p.generator_count(), exponent_sum_matrix(p));
}

inline int abelianized_rank(const Presentation& p) { return abelianization(p).free_rank; }

// --------------------------------------------------------------- rank bounds

struct RankBounds {
  int m_lower = 0;
  int m_upper = 0;
  int mprime_lower = 0;
  int mprime_upper = 0;

  bool tight() const { return m_lower == m_upper && mprime_lower == mprime_upper; }
};

// m <= min g_{j,k,4} - 1 and m' <= min g_{j,k,l} - 1 over colors j,k,l < 4.
inline std::pair<int, int> rank_upper_bounds(const ColoredGraph& g) {
  require_valid(g);
  if (g.dimension() != 4) throw GemError(ErrorKind::Precondition, "rank bounds are defined for n = 4");
  const ResidueTable table(g);
  int m = table({0, 1, 4}), mp = table({0, 1, 2});
  for (ColorSet s : detail::color_sets_of_size(4, 3)) {
    if (s.contains(4))
      m = std::min(m, table(s));
    else
      mp = std::min(mp, table(s));
  }
  return {m - 1, mp - 1};
}

// Lower bounds: minimal generator counts of H_1(M) (cells avoiding label 4)
// and of the abelianized presentation. Upper bounds from residue counts.
// A singular gem must have singular color 4 (see normalize_singular_color).
inline RankBounds rank_bounds(const ColoredGraph& g, const PresentationOptions& opt = {}) {
  RankBounds b;
  std::tie(b.m_upper, b.mprime_upper) = rank_upper_bounds(g);
  b.m_lower = integer_homology(build_chain_complex(g, Color{4}), 1).rank();
  b.mprime_lower = abelianization(presentation_from_gem(g, opt)).rank();
  return b;
}

}  // namespace gemkit
