#pragma once

// Invariants of 5-colored graphs that are conditional on the ranks
// (m, m') of the fundamental groups of M and of its singular compactification:
// t-vectors, (weak) semi-simplicity, lower bounds and the identity suite.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/genus.hpp"
#include "gemkit/homology.hpp"
#include "gemkit/permutations.hpp"
#include "gemkit/recognition.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

struct RankClaim {
  int m = 0;       // rank of pi_1(M)
  int mprime = 0;  // rank of pi_1 of the singular compactification

  void check() const {
    if (mprime < 0 || m < mprime)
      throw GemError(ErrorKind::Precondition, "rank claim needs m >= m' >= 0, got m = " + std::to_string(m) +
                                                  ", m' = " + std::to_string(mprime));
  }
};

namespace detail {

inline void require_five_colors(const ColoredGraph& g, const char* what) {
  if (g.dimension() != 4) throw GemError(ErrorKind::Precondition, std::string(what) + " is defined for n = 4");
}

}  // namespace detail

// chi = 5 - (1/3) sum of triple counts + p/3; must be an integer.
inline std::int64_t euler_characteristic_formula(const ColoredGraph& g, const ResidueTable& table) {
  detail::require_five_colors(g, "euler_characteristic_formula");
  std::int64_t sum = 0;
  for (ColorSet t : detail::color_sets_of_size(4, 3)) sum += table(t);
  const std::int64_t num = 15 - sum + g.half_order();
  if (num % 3 != 0)
    throw GemError(ErrorKind::Inconsistent,
                   "Euler characteristic formula gives " + std::to_string(num) + "/3, not an integer");
  return num / 3;
}

inline std::int64_t euler_characteristic_formula(const ColoredGraph& g) {
  require_valid(g);
  return euler_characteristic_formula(g, ResidueTable(g));
}

struct TVector {
  std::vector<std::pair<ColorSet, int>> entries;  // the ten triples, ascending by mask

  int at(ColorSet t) const {
    for (const auto& [k, v] : entries)
      if (k == t) return v;
    throw GemError(ErrorKind::Precondition, "not a triple of Delta_4: " + t.to_string());
  }
  int sum() const {
    int s = 0;
    for (const auto& e : entries) s += e.second;
    return s;
  }
  bool all_zero() const {
    for (const auto& e : entries)
      if (e.second != 0) return false;
    return true;
  }
};

namespace detail {

// t without the sign check.
inline TVector raw_t_vector(const ResidueTable& table, RankClaim r) {
  TVector t;
  for (ColorSet s : color_sets_of_size(4, 3))
    t.entries.emplace_back(s, table(s) - 1 - (s.contains(4) ? r.m : r.mprime));
  return t;
}

}  // namespace detail

// t_{ijk} = g_{ijk} - 1 - (m if 4 is among i,j,k, else m'). Negative entries
// mean the claim contradicts the graph and raise Inconsistent.
inline TVector t_vector(const ColoredGraph& g, const ResidueTable& table, RankClaim r) {
  detail::require_five_colors(g, "t_vector");
  r.check();
  TVector t = detail::raw_t_vector(table, r);
  std::string bad;
  for (const auto& [s, v] : t.entries)
    if (v < 0) bad += (bad.empty() ? "" : ", ") + s.to_string() + " -> " + std::to_string(v);
  if (!bad.empty())
    throw GemError(ErrorKind::Inconsistent, "negative t for rank claim (" + std::to_string(r.m) + "," +
                                                std::to_string(r.mprime) + "): " + bad);
  return t;
}

inline TVector t_vector(const ColoredGraph& g, RankClaim r) {
  require_valid(g);
  return t_vector(g, ResidueTable(g), r);
}

inline bool is_semi_simple(const ColoredGraph& g, RankClaim r) { return t_vector(g, r).all_zero(); }

namespace detail {

// The five triples {eps_i, eps_{i+2}, eps_{i+4}}, i = 0..4.
inline std::vector<ColorSet> alternate_triples(const CyclicPermutation& eps) {
  std::vector<ColorSet> out;
  for (int i = 0; i < 5; ++i) out.push_back(ColorSet{eps[i], eps[i + 2], eps[i + 4]});
  return out;
}

}  // namespace detail

// Members eps of P_4 with g_{eps_i,eps_{i+2},eps_{i+4}} = 1 + m for i even
// and 1 + m' for i odd. Empty for non-crystallizations.
inline std::vector<CyclicPermutation> weak_semi_simple_permutations(const ColoredGraph& g, RankClaim r) {
  require_valid(g);
  detail::require_five_colors(g, "weak_semi_simple_permutations");
  if (!is_crystallization(g)) return {};
  const ResidueTable table(g);
  t_vector(g, table, r);
  std::vector<CyclicPermutation> out;
  for (const auto& eps : p4_permutations()) {
    const auto tr = detail::alternate_triples(eps);
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i) ok = table(tr[i]) == 1 + (i % 2 == 0 ? r.m : r.mprime);
    if (ok) out.push_back(eps);
  }
  return out;
}

struct TheoremBounds {
  std::int64_t genus = 0;        // lower bound for the regular genus
  std::int64_t gurau_degree = 0;  // lower bound for the Gurau degree
  std::int64_t complexity = 0;    // lower bound for the gem-complexity
};

inline TheoremBounds main_theorem_bounds(std::int64_t chi, RankClaim r) {
  r.check();
  const std::int64_t rank_term = 5 * r.m - 2 * (r.m - r.mprime);
  TheoremBounds b;
  b.genus = 2 * chi + rank_term - 4;
  b.gurau_degree = 12 * b.genus;
  b.complexity = 3 * chi + 10 * r.m - 4 * (r.m - r.mprime) - 6;
  return b;
}

// --------------------------------------------------------------- identities

struct IdentityCheck {
  std::string id;  // "t", "a" .. "g"
  std::string statement;
  bool asserted = true;  // false when the graph is outside the identity's domain
  bool passed = true;
  std::string witness;   // first counterexample, if any
};

struct IdentityReport {
  bool gem_crystallization = false;
  std::vector<IdentityCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.asserted && !c.passed) return false;
    return true;
  }
  const IdentityCheck& get(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return c;
    throw GemError(ErrorKind::Precondition, "unknown identity " + id);
  }
};

struct IdentityOptions {
  // When set, skips recognition and treats the graph as a gem.
  std::optional<bool> assume_gem;
  SphereOptions sphere;
};

namespace detail {

inline void fail(IdentityCheck& c, std::string witness) {
  if (c.passed) c.witness = std::move(witness);
  c.passed = false;
}

}  // namespace detail

// Evaluates every identity exactly; failures are reported, never thrown.
// The associated-pair identity (f) holds for every connected 5-colored graph;
// the rest are asserted for crystallizations that are gems.
inline IdentityReport verify_identities(const ColoredGraph& g, RankClaim r, const IdentityOptions& opt = {}) {
  require_valid(g);
  detail::require_five_colors(g, "verify_identities");
  r.check();
  const ResidueTable table(g);
  detail::require_connected(table, 4, "verify_identities");
  const GenusSweep sweep = genus_sweep(g, table);
  const GenusValue omega = sweep.gurau_degree();

  IdentityReport rep;
  rep.gem_crystallization =
      is_crystallization(g) && (opt.assume_gem ? *opt.assume_gem : gem_class(g, opt.sphere).is_gem());

  IdentityCheck f{"f", "omega_G = 6 (rho_eps + rho_eps')", true, true, {}};
  for (const auto& eps : sweep.classes) {
    const GenusValue lhs = omega;
    const GenusValue pair = sweep.at(eps) + sweep.at(associated_permutation(eps));
    if (lhs.twice() != 6 * pair.twice())
      detail::fail(f, eps.to_string() + ": " + lhs.to_string() + " vs 6*" + pair.to_string());
  }

  IdentityCheck t{"t", "t_ijk >= 0", true, true, {}};
  IdentityCheck a{"a", "rho_eps = 2chi + 5m - 2(m-m') - 4 + sum_i t(eps_i,eps_i+2,eps_i+4)", true, true, {}};
  IdentityCheck b{"b", "omega_G = 6[4chi + 10m - 4(m-m') - 8 + sum t]", true, true, {}};
  IdentityCheck c{"c", "p - 1 = 3chi + 10m - 4(m-m') - 6 + sum t", true, true, {}};
  IdentityCheck d{"d", "g(eps_i,eps_i+2,eps_i+3) = 1 + rho_eps - rho_(i-1)hat - rho_(i+1)hat", true, true, {}};
  IdentityCheck e{"e", "chi = 2 - 2 rho_eps + sum_i rho_ihat", true, true, {}};
  IdentityCheck gg{"g", "2 - 2rho <= chi and 2chi <= 4 + rho - (5m - 2(m-m'))", true, true, {}};

  if (!rep.gem_crystallization) {
    for (auto* x : {&t, &a, &b, &c, &d, &e, &gg}) x->asserted = false;
  } else {
    const std::int64_t chi = euler_characteristic_formula(g, table);
    const TVector tv = detail::raw_t_vector(table, r);
    for (const auto& [s, v] : tv.entries)
      if (v < 0) detail::fail(t, s.to_string() + " -> " + std::to_string(v));
    const std::int64_t rank_term = 5 * r.m - 2 * (r.m - r.mprime);
    const std::int64_t p = g.half_order();

    for (const auto& eps : p4_permutations()) {
      std::int64_t st = 0;
      for (ColorSet s : detail::alternate_triples(eps)) st += tv.at(s);
      const GenusValue rho = sweep.at(eps);
      if (rho != GenusValue::integer(2 * chi + rank_term - 4 + st))
        detail::fail(a, eps.to_string() + ": rho = " + rho.to_string());

      std::vector<GenusValue> sub(5);
      for (int i = 0; i < 5; ++i) sub[i] = residue_regular_genus(g, table, eps, i);
      GenusValue total;
      for (auto v : sub) total = total + v;
      const GenusValue rhs_e = GenusValue::integer(2) - rho - rho + total;
      if (rhs_e != GenusValue::integer(chi))
        detail::fail(e, eps.to_string() + ": 2 - 2rho + sum = " + rhs_e.to_string());
      for (int i = 0; i < 5; ++i) {
        const ColorSet tri{eps[i], eps[i + 2], eps[i + 3]};
        const GenusValue rhs = GenusValue::integer(1) + rho - sub[(i + 4) % 5] - sub[(i + 1) % 5];
        if (rhs != GenusValue::integer(table(tri)))
          detail::fail(d, eps.to_string() + " i=" + std::to_string(i) + ": g" + tri.to_string() + " = " +
                              std::to_string(table(tri)) + " vs " + rhs.to_string());
      }
    }
    const std::int64_t sum_t = tv.sum();
    if (omega != GenusValue::integer(6 * (4 * chi + 10 * r.m - 4 * (r.m - r.mprime) - 8 + sum_t)))
      detail::fail(b, "omega_G = " + omega.to_string());
    if (p - 1 != 3 * chi + 10 * r.m - 4 * (r.m - r.mprime) - 6 + sum_t)
      detail::fail(c, "p - 1 = " + std::to_string(p - 1));
    const GenusValue rho = sweep.regular_genus();
    if (GenusValue::integer(2) - rho - rho > GenusValue::integer(chi))
      detail::fail(gg, "2 - 2rho = " + (GenusValue::integer(2) - rho - rho).to_string() + " > chi");
    if (GenusValue::integer(2 * chi) > GenusValue::integer(4 - rank_term) + rho)
      detail::fail(gg, "2chi = " + std::to_string(2 * chi) + " > 4 + rho - rank term");
  }
  rep.checks = {t, a, b, c, d, e, f, gg};
  return rep;
}

// ------------------------------------------------------------------ reports

struct InvariantReport {
  std::string name;
  int n = 4;
  int order = 0;
  bool bipartite = false;
  bool crystallization = false;
  GenusSweep sweep;
  GenusValue regular_genus;
  GenusValue gurau_degree;
  std::int64_t complexity_witness = 0;   // p - 1
  std::optional<std::int64_t> chi;       // formula value, crystallizations only
  std::vector<std::pair<ColorSet, int>> residue_counts;  // all color sets of size 2..n
  std::optional<RankClaim> ranks;
  std::optional<TVector> t;
  std::optional<bool> semi_simple;
  std::vector<CyclicPermutation> weak_semi_simple;
  std::optional<TheoremBounds> bounds;
  std::string notes;  // e.g. why t could not be computed

  std::string classification() const {
    if (!ranks) return crystallization ? "crystallization" : "gem graph";
    if (semi_simple && *semi_simple) return "semi-simple";
    if (!weak_semi_simple.empty()) return "weak semi-simple";
    return crystallization ? "crystallization" : "gem graph";
  }
};

// Everything computable from the graph alone, plus the rank-conditional
// quantities when a claim is supplied or found in the metadata (m, mprime).
inline InvariantReport invariant_report(const ColoredGraph& g, std::optional<RankClaim> claim = std::nullopt) {
  require_valid(g);
  const ResidueTable table(g);
  detail::require_connected(table, g.dimension(), "invariant_report");
  InvariantReport rep;
  rep.name = g.meta_or("name", "unnamed");
  rep.n = g.dimension();
  rep.order = g.order();
  rep.bipartite = is_bipartite(g).bipartite;
  rep.crystallization = is_crystallization(g);
  rep.sweep = genus_sweep(g, table);
  rep.regular_genus = rep.sweep.regular_genus();
  rep.gurau_degree = rep.sweep.gurau_degree();
  rep.complexity_witness = g.half_order() - 1;
  for (int size = 2; size <= rep.n; ++size)
    for (ColorSet c : detail::color_sets_of_size(rep.n, size)) rep.residue_counts.emplace_back(c, table(c));
  if (rep.n != 4) return rep;
  if (rep.crystallization) {
    try {
      rep.chi = euler_characteristic_formula(g, table);
    } catch (const GemError& e) {
      rep.notes = e.what();
    }
  }
  if (!claim && g.meta().count("m") && g.meta().count("mprime"))
    claim = RankClaim{std::stoi(g.meta_or("m")), std::stoi(g.meta_or("mprime"))};
  if (!claim) return rep;
  rep.ranks = claim;
  try {
    rep.t = t_vector(g, table, *claim);
    rep.semi_simple = rep.t->all_zero() && rep.crystallization;
    rep.weak_semi_simple = weak_semi_simple_permutations(g, *claim);
  } catch (const GemError& e) {
    rep.notes = e.what();
  }
  if (rep.chi) rep.bounds = main_theorem_bounds(*rep.chi, *claim);
  return rep;
}

}  // namespace gemkit
