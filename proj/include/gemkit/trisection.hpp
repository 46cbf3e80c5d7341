#pragma once

// Gem-induced trisection data for 5-colored graphs with a single 4-hat
// residue: for eps in P_4 the colors split as {4}, {eps_1, eps_3} and
// {eps_0, eps_2}, giving a central surface and two handlebodies.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/genus.hpp"
#include "gemkit/homology.hpp"
#include "gemkit/invariants.hpp"
#include "gemkit/permutations.hpp"
#include "gemkit/pi1.hpp"
#include "gemkit/recognition.hpp"

namespace gemkit {

enum class TrisectionStatus { GemInducedTrisection, TripleOnly, Inapplicable };

inline std::string to_string(TrisectionStatus s) {
  switch (s) {
    case TrisectionStatus::GemInducedTrisection: return "GemInducedTrisection";
    case TrisectionStatus::TripleOnly: return "TripleOnly";
    case TrisectionStatus::Inapplicable: return "Inapplicable";
  }
  return "?";
}

struct TrisectionReport {
  CyclicPermutation eps;
  ColorSet blue;   // {4}
  ColorSet green;  // {eps_1, eps_3}
  ColorSet red;    // {eps_0, eps_2}
  std::int64_t central_genus = 0;
  std::int64_t handlebody_green = 0;  // g_{eps_1,eps_3,4} - 1
  std::int64_t handlebody_red = 0;    // g_{eps_0,eps_2,4} - 1
  bool necessary_condition = true;    // false: pi_1 provably non-trivial
  bool sufficient_condition = false;  // the presentation collapses
  TrisectionStatus status = TrisectionStatus::TripleOnly;
};

// The ε-independent part of the analysis.
struct TrisectionContext {
  ColoredGraph graph;
  ResidueTable table;
  Presentation presentation;
  CollapseResult collapse;
  AbelianGroup abelianization;

  explicit TrisectionContext(const ColoredGraph& g, const SphereOptions& opt = {})
      : graph(g), table(g) {
    require_valid(g);
    if (g.dimension() != 4) throw GemError(ErrorKind::Precondition, "trisections need a 5-colored graph");
    if (table({0, 1, 2, 3}) != 1)
      throw GemError(ErrorKind::Precondition, "graph has more than one residue avoiding color 4");
    if (!is_bipartite(g).bipartite)
      throw GemError(ErrorKind::Precondition, "trisections are built for bipartite graphs");
    for (Color i = 0; i < 4; ++i) {
      const ColorSet hat = ColorSet::single(i).complement(4);
      for (int b = 0; b < table(hat); ++b)
        if (!certify_s3(extract_residue(g, hat, b), opt).certified())
          throw GemError(ErrorKind::Precondition,
                         "residue over " + hat.to_string() + " is not certified as S^3");
    }
    presentation = presentation_from_gem(g);
    collapse = gemkit::collapse(presentation);
    abelianization = gemkit::abelianization(presentation);
  }

  TrisectionReport report(const CyclicPermutation& eps) const {
    if (eps.dimension() != 4 || eps[4] != 4)
      throw GemError(ErrorKind::Precondition, "expected an element of P_4, got " + eps.to_string());
    TrisectionReport r;
    r.eps = eps;
    r.blue = ColorSet::single(4);
    r.green = ColorSet{eps[1], eps[3]};
    r.red = ColorSet{eps[0], eps[2]};
    r.central_genus = residue_regular_genus(graph, table, eps, 4).value();
    r.handlebody_green = table(r.green.with(4)) - 1;
    r.handlebody_red = table(r.red.with(4)) - 1;
    r.necessary_condition = abelianization.trivial();
    r.sufficient_condition = collapse.trivial();
    r.status = !r.necessary_condition  ? TrisectionStatus::Inapplicable
               : r.sufficient_condition ? TrisectionStatus::GemInducedTrisection
                                        : TrisectionStatus::TripleOnly;
    return r;
  }
};

inline TrisectionReport trisection_triple(const ColoredGraph& g, const CyclicPermutation& eps) {
  return TrisectionContext(g).report(eps);
}

enum class GTBoundStatus { Certified, NoCertificate, Inapplicable };

struct GTrisectionBound {
  GTBoundStatus status = GTBoundStatus::NoCertificate;
  std::optional<std::int64_t> value;
  std::optional<CyclicPermutation> witness;
};

// Minimum central genus over the certified members of P_4.
inline GTrisectionBound g_trisection_genus_upper(const TrisectionContext& ctx) {
  GTrisectionBound out;
  bool any_applicable = false;
  for (const auto& eps : p4_permutations()) {
    const auto r = ctx.report(eps);
    any_applicable |= r.status != TrisectionStatus::Inapplicable;
    if (r.status != TrisectionStatus::GemInducedTrisection) continue;
    if (!out.value || r.central_genus < *out.value) {
      out.value = r.central_genus;
      out.witness = eps;
    }
  }
  out.status = out.value ? GTBoundStatus::Certified
               : any_applicable ? GTBoundStatus::NoCertificate
                                : GTBoundStatus::Inapplicable;
  return out;
}

inline GTrisectionBound g_trisection_genus_upper(const ColoredGraph& g) {
  return g_trisection_genus_upper(TrisectionContext(g));
}

// Betti numbers b_1, b_2 of the manifold M itself, read from the cells that
// avoid label 4 (M deprived of an open collar of its boundary, or of a point).
inline std::pair<int, int> manifold_betti_12(const ColoredGraph& g) {
  const auto beta = betti_numbers(build_chain_complex(g, Color{4}), Coefficients::Rational);
  return {beta[1], beta[2]};
}

struct MinimalityCheck {
  std::int64_t central_genus = 0;
  GenusValue half_formula;        // (rho_eps + m) / 2, stored doubled as a genus value
  std::int64_t betti_formula = 0;  // b_2 + b_1 + 2(m - b_1)
  bool passed = false;
};

// For a crystallization weak semi-simple with respect to eps (with m' = 0)
// inducing a certified trisection: central genus = (rho_eps + m)/2 =
// b_2 + b_1 + 2(m - b_1).
inline MinimalityCheck check_minimality_formulas(const TrisectionContext& ctx, const CyclicPermutation& eps,
                                                 int m, int beta1, int beta2) {
  const auto weak = weak_semi_simple_permutations(ctx.graph, RankClaim{m, 0});
  if (std::find(weak.begin(), weak.end(), eps) == weak.end())
    throw GemError(ErrorKind::Precondition,
                   "graph is not weak semi-simple with respect to " + eps.to_string());
  const auto r = ctx.report(eps);
  if (r.status != TrisectionStatus::GemInducedTrisection)
    throw GemError(ErrorKind::Precondition, "no certified trisection at " + eps.to_string());
  MinimalityCheck c;
  c.central_genus = r.central_genus;
  const GenusValue sum = rho_eps(ctx.graph, ctx.table, eps) + GenusValue::integer(m);
  c.half_formula = GenusValue::from_twice(sum.twice() / 2);
  c.betti_formula = beta2 + beta1 + 2 * (m - beta1);
  c.passed = sum.twice() % 2 == 0 && c.half_formula == GenusValue::integer(c.central_genus) &&
             c.betti_formula == c.central_genus;
  return c;
}

}  // namespace gemkit
