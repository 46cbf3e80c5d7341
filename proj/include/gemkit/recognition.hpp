#pragma once

// Recognition of gems: surfaces, closed 3-manifolds, a one-sided 3-sphere
// certificate, dipole moves, and the 5-colored gem classification.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/genus.hpp"
#include "gemkit/homology.hpp"
#include "gemkit/permutations.hpp"
#include "gemkit/residues.hpp"

namespace gemkit {

// ---------------------------------------------------------------- surfaces

struct SurfaceType {
  bool orientable = true;
  int genus = 0;  // orientable genus, or number of cross-caps
  int euler_characteristic = 2;

  bool is_sphere() const { return euler_characteristic == 2; }
  std::string to_string() const {
    if (is_sphere()) return "S^2";
    if (orientable) return "orientable genus " + std::to_string(genus);
    return "non-orientable genus " + std::to_string(genus);
  }
};

inline SurfaceType classify_surface(const ColoredGraph& g) {
  require_valid(g);
  if (g.dimension() != 2) throw GemError(ErrorKind::Precondition, "classify_surface needs a 3-colored graph");
  if (!is_connected(g)) throw GemError(ErrorKind::Precondition, "classify_surface needs a connected graph");
  SurfaceType s;
  s.euler_characteristic = residue_count(g, {0, 1}) + residue_count(g, {0, 2}) +
                           residue_count(g, {1, 2}) - g.half_order();
  s.orientable = is_bipartite(g).bipartite;
  s.genus = s.orientable ? (2 - s.euler_characteristic) / 2 : 2 - s.euler_characteristic;
  return s;
}

namespace detail {

// Euler characteristic of the surface each residue over the 3-color set `t`
// represents, in residue block order.
inline std::vector<int> triple_residue_characteristics(const ColoredGraph& g, ColorSet t) {
  const auto part = residues(g, t);
  std::vector<int> chi(part.count(), 0);
  for (const auto& b : part.blocks) chi[part.block_of[b.front()]] -= static_cast<int>(b.size()) / 2;
  const auto c = t.colors();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      for (const auto& cycle : residues(g, {c[i], c[j]}).blocks) ++chi[part.block_of[cycle.front()]];
  return chi;
}

// Descriptions of every 3-residue that is not a 2-sphere.
inline std::vector<std::string> non_spherical_triples(const ColoredGraph& g) {
  std::vector<std::string> out;
  for (ColorSet t : color_sets_of_size(g.dimension(), 3)) {
    const auto chi = triple_residue_characteristics(g, t);
    for (std::size_t b = 0; b < chi.size(); ++b)
      if (chi[b] != 2)
        out.push_back("residue " + std::to_string(b) + " over " + t.to_string() +
                      " has Euler characteristic " + std::to_string(chi[b]));
  }
  return out;
}

}  // namespace detail

// True iff every 3-residue of the 4-colored graph represents S^2.
inline bool check_closed_3manifold(const ColoredGraph& g) {
  require_valid(g);
  if (g.dimension() != 3) throw GemError(ErrorKind::Precondition, "check_closed_3manifold needs a 4-colored graph");
  return detail::non_spherical_triples(g).empty();
}

// ----------------------------------------------------------------- dipoles

struct Dipole {
  Vertex x = 0;
  Vertex y = 0;
  ColorSet colors;  // the colors joining x and y
  bool proper = false;

  int h() const { return colors.size(); }
  std::string to_string() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")" + colors.to_string() +
           (proper ? "" : " improper");
  }
  friend bool operator==(const Dipole& a, const Dipole& b) {
    return a.x == b.x && a.y == b.y && a.colors == b.colors;
  }
};

inline bool is_proper_dipole(const ColoredGraph& g, Vertex x, Vertex y, ColorSet d) {
  if (x == y || d.empty() || g.colors_between(x, y) != d) return false;
  const ColorSet rest = d.complement(g.dimension());
  if (rest.empty()) return false;
  const auto part = residues(g, rest);
  return part.block_of[x] != part.block_of[y];
}

// All dipoles with 1 <= h <= max_h, ordered by (x, y), x < y.
inline std::vector<Dipole> find_dipoles(const ColoredGraph& g, int max_h) {
  require_valid(g);
  const int n = g.dimension();
  max_h = std::min(max_h, n);
  std::vector<Dipole> out;
  std::vector<ResiduePartition> cache(ColorSet::all(n).mask() + 1);
  std::vector<bool> cached(cache.size(), false);
  for (Vertex x = 0; x < g.order(); ++x) {
    ColorSet seen;
    for (Color c = 0; c <= n; ++c) {
      const Vertex y = g.partner(c, x);
      if (y < x || seen.contains(c)) continue;
      const ColorSet d = g.colors_between(x, y);
      for (Color e : d.colors()) seen = seen.with(e);
      if (d.size() > max_h) continue;
      const ColorSet rest = d.complement(n);
      if (!cached[rest.mask()]) {
        cache[rest.mask()] = residues(g, rest);
        cached[rest.mask()] = true;
      }
      const auto& part = cache[rest.mask()];
      out.push_back({x, y, d, part.block_of[x] != part.block_of[y]});
    }
  }
  std::sort(out.begin(), out.end(), [](const Dipole& a, const Dipole& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  return out;
}

inline std::vector<Dipole> find_dipoles(const ColoredGraph& g) { return find_dipoles(g, g.dimension()); }

// Removes x and y and welds, for each color outside the dipole, the two
// hanging edges. Refuses improper dipoles.
inline ColoredGraph eliminate_dipole(const ColoredGraph& g, const Dipole& d) {
  require_valid(g);
  if (!is_proper_dipole(g, d.x, d.y, d.colors))
    throw GemError(ErrorKind::Precondition, "not a proper dipole: " + d.to_string());
  const int n = g.dimension();
  const int order = g.order();
  std::vector<int> index(order, -1);
  for (Vertex v = 0, next = 0; v < order; ++v)
    if (v != d.x && v != d.y) index[v] = next++;
  std::vector<std::vector<Vertex>> m(n + 1, std::vector<Vertex>(order - 2));
  for (Color c = 0; c <= n; ++c) {
    std::vector<Vertex> mate(g.matching(c).begin(), g.matching(c).end());
    if (!d.colors.contains(c)) {
      const Vertex a = mate[d.x], b = mate[d.y];
      mate[a] = b;
      mate[b] = a;
    }
    for (Vertex v = 0; v < order; ++v)
      if (index[v] >= 0) m[c][index[v]] = index[mate[v]];
  }
  return ColoredGraph(n, std::move(m), g.meta());
}

// Inserts a dipole of the colors `d` next to vertex v: new vertices x = order
// and y = order + 1 are joined by d; for c outside d, v-x and y-c(v).
inline ColoredGraph insert_dipole(const ColoredGraph& g, Vertex v, ColorSet d) {
  require_valid(g);
  const int n = g.dimension();
  if (v < 0 || v >= g.order()) throw GemError(ErrorKind::Precondition, "vertex out of range");
  if (d.empty() || !d.subset_of(g.all_colors()) || d == g.all_colors())
    throw GemError(ErrorKind::Precondition, "dipole colors must be a proper nonempty subset");
  const Vertex x = g.order(), y = g.order() + 1;
  std::vector<std::vector<Vertex>> m = g.matchings();
  for (Color c = 0; c <= n; ++c) {
    m[c].resize(g.order() + 2);
    if (d.contains(c)) {
      m[c][x] = y;
      m[c][y] = x;
    } else {
      const Vertex w = m[c][v];
      m[c][v] = x;
      m[c][x] = v;
      m[c][y] = w;
      m[c][w] = y;
    }
  }
  return ColoredGraph(n, std::move(m), g.meta());
}

struct SimplifyOptions {
  int budget = 1000;  // maximum number of eliminations
  int max_h = 2;
  // Dipoles made only of this color are skipped: their complementary
  // residues may be singular.
  std::optional<Color> singular_color;
};

struct SimplifyResult {
  ColoredGraph graph;
  std::vector<Dipole> trace;  // eliminated dipoles, in the coordinates current at each step
  bool budget_exhausted = false;
};

namespace detail {

inline std::optional<Dipole> first_usable_dipole(const ColoredGraph& g, const SimplifyOptions& opt) {
  for (const auto& d : find_dipoles(g, opt.max_h)) {
    if (!d.proper) continue;
    if (opt.singular_color && d.colors == ColorSet::single(*opt.singular_color)) continue;
    return d;
  }
  return std::nullopt;
}

}  // namespace detail

// Greedy proper-dipole elimination, lowest vertex id first.
inline SimplifyResult simplify(const ColoredGraph& g, const SimplifyOptions& opt = {}) {
  SimplifyResult r{g, {}, false};
  while (auto d = detail::first_usable_dipole(r.graph, opt)) {
    if (static_cast<int>(r.trace.size()) >= opt.budget) {
      r.budget_exhausted = true;
      break;
    }
    r.graph = eliminate_dipole(r.graph, *d);
    r.trace.push_back(*d);
  }
  return r;
}

// ---------------------------------------------------- 3-sphere certificates

enum class CertificateOutcome { Certified, Unknown };

enum class SphereEvidence {
  None,
  RegularGenusZero,       // rho_eps = 0 for `permutation`
  GenusOneHomologySphere, // bipartite, rho_eps <= 1 and H_1 = 0
};

struct SphereCertificate {
  CertificateOutcome outcome = CertificateOutcome::Unknown;
  SphereEvidence evidence = SphereEvidence::None;
  std::optional<CyclicPermutation> permutation;
  std::vector<Dipole> trace;  // eliminations applied before the evidence
  int final_order = 0;

  bool certified() const { return outcome == CertificateOutcome::Certified; }
  std::string describe() const {
    if (!certified()) return "unknown after " + std::to_string(trace.size()) + " eliminations";
    std::string s = evidence == SphereEvidence::RegularGenusZero ? "regular genus 0" : "genus 1 and H_1 = 0";
    s += " at " + permutation->to_string();
    if (!trace.empty()) s += " after " + std::to_string(trace.size()) + " eliminations (order " +
                             std::to_string(final_order) + ")";
    return s;
  }
};

struct SphereOptions {
  int budget = 1000;
  int max_h = 2;  // 3 enables 3-dipoles
  bool homology_evidence = true;
};

namespace detail {

inline std::optional<std::pair<SphereEvidence, CyclicPermutation>> sphere_evidence(
    const ColoredGraph& g, bool homology_evidence) {
  const auto sweep = genus_sweep(g);
  if (sweep.regular_genus() == GenusValue::integer(0))
    return std::pair{SphereEvidence::RegularGenusZero, sweep.minimizer()};
  if (homology_evidence && sweep.regular_genus() == GenusValue::integer(1) && is_bipartite(g).bipartite &&
      first_homology(g).trivial())
    return std::pair{SphereEvidence::GenusOneHomologySphere, sweep.minimizer()};
  return std::nullopt;
}

}  // namespace detail

// One-sided: Certified is a proof, Unknown proves nothing.
inline SphereCertificate certify_s3(const ColoredGraph& g, const SphereOptions& opt = {}) {
  require_valid(g);
  if (g.dimension() != 3) throw GemError(ErrorKind::Precondition, "certify_s3 needs a 4-colored graph");
  if (!is_connected(g)) throw GemError(ErrorKind::Precondition, "certify_s3 needs a connected graph");
  if (!check_closed_3manifold(g))
    throw GemError(ErrorKind::Precondition, "graph does not represent a closed 3-manifold");
  SphereCertificate cert;
  ColoredGraph cur = g;
  SimplifyOptions sopt{opt.budget, opt.max_h, std::nullopt};
  while (true) {
    if (auto ev = detail::sphere_evidence(cur, opt.homology_evidence)) {
      cert.outcome = CertificateOutcome::Certified;
      cert.evidence = ev->first;
      cert.permutation = ev->second;
      break;
    }
    if (static_cast<int>(cert.trace.size()) >= opt.budget) break;
    auto d = detail::first_usable_dipole(cur, sopt);
    if (!d) break;
    cur = eliminate_dipole(cur, *d);
    cert.trace.push_back(*d);
  }
  cert.final_order = cur.order();
  return cert;
}

// Re-derives a certificate from scratch; true iff every step is valid.
inline bool replay_certificate(const ColoredGraph& g, const SphereCertificate& cert) {
  if (!cert.certified() || !cert.permutation) return false;
  ColoredGraph cur = g;
  for (const auto& d : cert.trace) {
    if (!is_proper_dipole(cur, d.x, d.y, d.colors)) return false;
    cur = eliminate_dipole(cur, d);
  }
  const GenusValue rho = rho_eps(cur, *cert.permutation);
  switch (cert.evidence) {
    case SphereEvidence::RegularGenusZero:
      return rho == GenusValue::integer(0);
    case SphereEvidence::GenusOneHomologySphere:
      return rho <= GenusValue::integer(1) && is_bipartite(cur).bipartite && first_homology(cur).trivial();
    case SphereEvidence::None:
      return false;
  }
  return false;
}

// ------------------------------------------------------- gem classification

inline bool is_crystallization(const ColoredGraph& g) {
  require_valid(g);
  for (Color c = 0; c <= g.dimension(); ++c)
    if (residue_count(g, ColorSet::single(c).complement(g.dimension())) != 1) return false;
  return true;
}

enum class GemKind { ClosedGem, SingularGem, NotAGem, UnknownGem };

inline std::string to_string(GemKind k) {
  switch (k) {
    case GemKind::ClosedGem: return "ClosedGem";
    case GemKind::SingularGem: return "SingularGem";
    case GemKind::NotAGem: return "NotAGem";
    case GemKind::UnknownGem: return "UnknownGem";
  }
  return "?";
}

struct ResidueVerdict {
  Color color = 0;  // the residue avoids this color
  int block = 0;
  SphereCertificate certificate;
};

struct GemClass {
  GemKind kind = GemKind::UnknownGem;
  std::optional<Color> singular_color;
  std::vector<std::string> reasons;
  std::vector<ResidueVerdict> residues;  // one per c-hat residue, by color then block

  bool is_gem() const { return kind == GemKind::ClosedGem || kind == GemKind::SingularGem; }
};

// Classifies a 5-colored graph. Every 4-colored residue must be a closed
// 3-manifold; those are then tested for S^3 with one-sided certificates.
inline GemClass gem_class(const ColoredGraph& g, const SphereOptions& opt = {}) {
  require_valid(g);
  if (g.dimension() != 4) throw GemError(ErrorKind::Precondition, "gem_class needs a 5-colored graph");
  GemClass out;
  if (!is_connected(g)) {
    out.kind = GemKind::NotAGem;
    out.reasons.push_back("graph is disconnected");
    return out;
  }
  if (auto bad = detail::non_spherical_triples(g); !bad.empty()) {
    out.kind = GemKind::NotAGem;
    out.reasons = std::move(bad);
    return out;
  }
  ColorSet uncertified;
  for (Color c = 0; c <= 4; ++c) {
    const ColorSet hat = ColorSet::single(c).complement(4);
    const int count = residue_count(g, hat);
    for (int b = 0; b < count; ++b) {
      ResidueVerdict v{c, b, certify_s3(extract_residue(g, hat, b), opt)};
      if (!v.certificate.certified()) {
        uncertified = uncertified.with(c);
        out.reasons.push_back("residue " + std::to_string(b) + " over " + hat.to_string() +
                              " is not certified as S^3");
      }
      out.residues.push_back(std::move(v));
    }
  }
  if (uncertified.empty()) {
    out.kind = GemKind::ClosedGem;
  } else if (uncertified.size() == 1) {
    out.kind = GemKind::SingularGem;
    out.singular_color = uncertified.colors().front();
  } else {
    out.kind = GemKind::UnknownGem;
    out.reasons.push_back("more than one color has uncertified residues " + uncertified.to_string() +
                          "; several singular colors are unsupported");
  }
  return out;
}

// Swaps color c with color n so that the singular color becomes n. The
// applied permutation is stored in the metadata key "color_perm".
inline ColoredGraph normalize_singular_color(const ColoredGraph& g, Color c) {
  require_valid(g);
  const int n = g.dimension();
  if (c < 0 || c > n) throw GemError(ErrorKind::Precondition, "color out of range");
  std::vector<Color> perm(n + 1);
  for (Color i = 0; i <= n; ++i) perm[i] = i;
  std::swap(perm[c], perm[n]);
  std::string s;
  for (Color i = 0; i <= n; ++i) s += (i ? " " : "") + std::to_string(perm[i]);
  return g.recolored(perm).with_meta("color_perm", s);
}

}  // namespace gemkit
