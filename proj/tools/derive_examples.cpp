// Derives the bundled example gems by exhaustive search and writes each one
// as data/gems/<file>.gem with a <file>.log derivation record.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gemkit/gemkit.hpp"

using namespace gemkit;

namespace {

struct Fingerprint {
  bool bipartite = false;
  bool crystallization = false;
  GenusValue rho, omega;
  std::optional<std::int64_t> chi;
  std::vector<int> betti;
  GemClass cls;
  std::optional<AbelianGroup> link_h1;  // residue avoiding the singular color
  AbelianGroup h1;
  std::optional<AbelianGroup> pi1_ab;

  std::string to_string() const {
    std::ostringstream s;
    s << "bipartite=" << bipartite << " crystallization=" << crystallization << " rho=" << rho.to_string()
      << " omega_G=" << omega.to_string() << " chi=" << (chi ? std::to_string(*chi) : "n/a") << " betti=";
    for (std::size_t i = 0; i < betti.size(); ++i) s << (i ? "," : "") << betti[i];
    s << " class=" << gemkit::to_string(cls.kind);
    if (cls.singular_color) s << "(" << *cls.singular_color << ")";
    s << " H1=" << h1.to_string();
    if (link_h1) s << " link_H1=" << link_h1->to_string();
    if (pi1_ab) s << " pi1_ab=" << pi1_ab->to_string();
    return s.str();
  }
};

Fingerprint fingerprint(const ColoredGraph& g) {
  Fingerprint f;
  f.bipartite = is_bipartite(g).bipartite;
  f.crystallization = is_crystallization(g);
  const auto sweep = genus_sweep(g);
  f.rho = sweep.regular_genus();
  f.omega = sweep.gurau_degree();
  if (f.crystallization) f.chi = euler_characteristic_formula(g);
  const auto cx = build_chain_complex(g);
  f.betti = betti_numbers(cx, Coefficients::Rational);
  f.h1 = integer_homology(cx, 1);
  f.cls = gem_class(g);
  if (f.cls.singular_color) {
    const ColorSet hat = ColorSet::single(*f.cls.singular_color).complement(4);
    if (residue_count(g, hat) == 1) f.link_h1 = first_homology(extract_residue(g, hat, 0));
  }
  if (residue_count(g, {0, 1, 2, 3}) == 1)
    f.pi1_ab = abelianization(presentation_from_gem(g, PresentationOptions{true}));
  return f;
}

std::vector<std::pair<ColorSet, int>> triple_counts(int with4, int without4) {
  std::vector<std::pair<ColorSet, int>> out;
  for (std::uint32_t m = 0; m < 32; ++m)
    if (std::popcount(m) == 3) out.emplace_back(ColorSet(m), (m & 16) ? with4 : without4);
  return out;
}

std::string describe(const SearchSpec& s) {
  std::ostringstream o;
  o << "order " << s.max_order << ", " << s.n + 1 << " colors";
  if (s.bipartite_only) o << ", bipartite only";
  if (s.crystallization) o << ", crystallizations";
  if (s.spherical_triples) o << ", spherical 3-residues";
  for (const auto& [c, v] : s.residue_counts) o << ", g" << c.to_string() << "=" << v;
  return o.str();
}

bool is_group(const std::optional<AbelianGroup>& g, int free_rank, std::vector<std::int64_t> torsion) {
  return g && g->free_rank == free_rank && g->torsion == torsion;
}

struct Target {
  std::string file;
  Metadata meta;
  SearchSpec spec;
  std::function<bool(const Fingerprint&)> accept;
  std::string criterion;
};

Metadata meta_of(std::string name, std::string manifold, int m, int mp, std::string boundary,
                 std::optional<int> rho, std::optional<int> dg, std::optional<int> k) {
  Metadata md{{"name", name}, {"manifold", manifold}, {"m", std::to_string(m)}, {"mprime", std::to_string(mp)},
              {"boundary", boundary}};
  if (rho) md["expected_rho"] = std::to_string(*rho);
  if (dg) md["expected_dg"] = std::to_string(*dg);
  if (k) md["expected_k"] = std::to_string(*k);
  return md;
}

SearchSpec spec_of(int order, bool bipartite, std::vector<std::pair<ColorSet, int>> counts) {
  SearchSpec s;
  s.min_order = s.max_order = order;
  s.bipartite_only = bipartite;
  s.residue_counts = std::move(counts);
  return s;
}

void write(const std::string& dir, const std::string& file, const ColoredGraph& g, const std::string& log) {
  save_gem(dir + "/" + file + ".gem", g);
  std::ofstream(dir + "/" + file + ".log") << log;
}

std::optional<ColoredGraph> derive(const Target& t, const std::string& dir) {
  std::ostringstream log;
  log << "derivation of " << t.meta.at("name") << "\n";
  log << "search: " << describe(t.spec) << "\n";
  log << "criterion: " << t.criterion << "\n";
  std::optional<ColoredGraph> chosen;
  std::optional<Fingerprint> chosen_fp;
  int matches = 0;
  const auto start = std::chrono::steady_clock::now();
  SearchStats stats;
  const auto all = enumerate(t.spec, &stats);
  for (const auto& g : all) {
    const auto fp = fingerprint(g);
    if (!t.accept(fp)) continue;
    ++matches;
    if (!chosen) {
      chosen = g;
      chosen_fp = fp;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  log << "completed matchings per color:";
  for (auto x : stats.nodes) log << " " << x;
  log << "\nisomorphism classes: " << stats.distinct << "\nmatching the criterion: " << matches << "\n";
  std::cerr << t.meta.at("name") << ": " << stats.distinct << " classes, " << matches << " matches, " << secs
            << " s\n";
  if (!chosen) {
    log << "no representative found\n";
    std::ofstream(dir + "/" + t.file + ".log") << log.str();
    return std::nullopt;
  }
  log << "kept: the first match in canonical order\n";
  log << "fingerprint: " << chosen_fp->to_string() << "\n";
  const auto g = chosen->with_meta(t.meta);
  write(dir, t.file, g, log.str());
  return g;
}

void derive_sum(const std::string& dir, const std::string& file, const ColoredGraph& a, const ColoredGraph& b,
                Metadata extra) {
  auto s = connected_sum(a, b);
  Metadata meta = s.meta();
  for (auto& [k, v] : extra) meta[k] = v;
  s = s.with_meta(meta);
  std::ostringstream log;
  log << "derivation of " << meta.at("name") << "\n";
  log << "graph connected sum of " << a.meta_or("name") << " and " << b.meta_or("name")
      << " welded at vertex 0 of the first summand and the first admissible vertex of the second\n";
  log << "fingerprint: " << fingerprint(s).to_string() << "\n";
  write(dir, file, s, log.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derive the bundled example gems by exhaustive search"};
  std::string out = "data/gems";
  bool with_xi3 = false;
  app.add_option("--out", out, "output directory");
  app.add_flag("--with-xi3", with_xi3, "also search order 12 for a weak simple, non-simple singular gem");
  CLI11_PARSE(app, argc, argv);
  std::filesystem::create_directories(out);

  {
    auto s4 = standard_sphere(4).with_meta(meta_of("S4", "S^4", 0, 0, "empty", 0, 0, 0));
    std::ostringstream log;
    log << "derivation of S4\nthe order-2 graph: every color pairs vertices 0 and 1\n"
        << "fingerprint: " << fingerprint(s4).to_string() << "\n";
    write(out, "s4", s4, log.str());
  }

  const auto simple = triple_counts(1, 1);
  std::vector<Target> targets{
      {"cp2", meta_of("CP2", "CP^2", 0, 0, "empty", 2, 24, 3), spec_of(8, true, simple),
       [](const Fingerprint& f) {
         return f.cls.kind == GemKind::ClosedGem && f.betti == std::vector<int>{1, 0, 1, 0, 1};
       },
       "closed gem with rational Betti numbers (1,0,1,0,1)"},
      {"xi2", meta_of("xi2", "D^2-bundle over S^2 with Euler number 2", 0, 0, "connected", 2, 24, 3),
       spec_of(8, true, simple),
       [](const Fingerprint& f) {
         return f.cls.kind == GemKind::SingularGem && f.cls.singular_color == 4 && is_group(f.link_h1, 0, {2});
       },
       "singular gem, singular color 4, link with H_1 = Z/2"},
      {"s2xd2", meta_of("S2xD2", "S^2 x D^2", 0, 0, "connected", 2, 24, 3), spec_of(8, true, simple),
       [](const Fingerprint& f) {
         return f.cls.kind == GemKind::SingularGem && f.cls.singular_color == 4 && is_group(f.link_h1, 1, {});
       },
       "singular gem, singular color 4, link with H_1 = Z"},
      {"y4_1", meta_of("Y4_1", "genus 1 orientable 4-dimensional handlebody", 1, 0, "connected", 1, 12, 3),
       spec_of(8, true, triple_counts(2, 1)),
       [](const Fingerprint& f) {
         return f.cls.kind == GemKind::SingularGem && f.cls.singular_color == 4 && is_group(f.link_h1, 1, {});
       },
       "singular gem, singular color 4, link with H_1 = Z"},
      {"s1xs3", meta_of("S1xS3", "S^1 x S^3", 1, 1, "empty", 1, 12, 4), spec_of(10, true, triple_counts(2, 2)),
       [](const Fingerprint& f) {
         return f.cls.kind == GemKind::ClosedGem && is_group(f.pi1_ab, 1, {}) &&
                f.betti == std::vector<int>{1, 1, 0, 1, 1};
       },
       "closed orientable gem, abelianized presentation Z, Betti numbers (1,1,0,1,1)"},
      {"s1xts3", meta_of("S1xtS3", "twisted S^3 bundle over S^1", 1, 1, "empty", 1, 12, 4),
       spec_of(10, false, triple_counts(2, 2)),
       [](const Fingerprint& f) {
         return !f.bipartite && f.cls.kind == GemKind::ClosedGem && is_group(f.pi1_ab, 1, {});
       },
       "closed non-bipartite gem, abelianized presentation Z"},
  };
  if (with_xi3) {
    // Weak simple with respect to (0,1,3,2,4) but not simple.
    std::vector<std::pair<ColorSet, int>> weak{
        {ColorSet{0, 1, 2}, 1}, {ColorSet{0, 2, 3}, 1}, {ColorSet{0, 3, 4}, 1},
        {ColorSet{1, 3, 4}, 1}, {ColorSet{1, 2, 4}, 1}};
    targets.push_back(
        {"xi3", meta_of("xi3", "D^2-bundle over S^2 with Euler number 3", 0, 0, "connected", 2, std::nullopt,
                        std::nullopt),
         spec_of(12, true, weak),
         [](const Fingerprint& f) {
           return f.cls.kind == GemKind::SingularGem && f.cls.singular_color == 4 && is_group(f.link_h1, 0, {3});
         },
         "singular gem, singular color 4, link with H_1 = Z/3"});
  }

  std::map<std::string, ColoredGraph> found;
  for (const auto& t : targets)
    if (auto g = derive(t, out)) found.emplace(t.file, *g);

  if (found.count("s1xs3"))
    derive_sum(out, "s1xs3_s1xs3", found.at("s1xs3"), found.at("s1xs3"),
               meta_of("S1xS3#S1xS3", "(S^1 x S^3) # (S^1 x S^3)", 2, 2, "empty", 2, 24, 8));
  if (found.count("cp2"))
    derive_sum(out, "cp2_cp2", found.at("cp2"), found.at("cp2"),
               meta_of("CP2#CP2", "CP^2 # CP^2", 0, 0, "empty", 4, 48, 6));
  if (found.count("y4_1"))
    derive_sum(out, "y4_1_y4_1", found.at("y4_1"), found.at("y4_1"),
               meta_of("Y4_1#Y4_1", "boundary connected sum of two genus 1 handlebodies", 2, 0, "connected", 2,
                       24, 6));
  return 0;
}
