// gemkit: command-line front end.
//
// Exit codes: 0 success, 1 invalid input or usage, 2 an identity or a
// recorded expectation is violated, 3 internal invariant breach.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gemkit/gemkit.hpp"

using namespace gemkit;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kViolated = 2;
constexpr int kInternal = 3;

struct Common {
  bool json = false;
  bool quiet = false;
  int budget = 1000;
  std::optional<int> m;
  std::optional<int> mprime;

  SphereOptions sphere() const {
    SphereOptions o;
    o.budget = budget;
    return o;
  }
  std::optional<RankClaim> claim() const {
    if (!m) return std::nullopt;
    return RankClaim{*m, *mprime};
  }
};

void emit(const Common& c, const std::string& text, const ordered_json& j) {
  if (c.quiet) return;
  if (c.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// Rank claim from the flags, falling back to the graph's metadata.
std::optional<RankClaim> claim_for(const Common& c, const ColoredGraph& g) {
  if (auto r = c.claim()) return r;
  if (g.meta().count("m") && g.meta().count("mprime"))
    return RankClaim{std::stoi(g.meta_or("m")), std::stoi(g.meta_or("mprime"))};
  return std::nullopt;
}

int cmd_validate(const Common& c, const std::string& path) {
  const auto text = read_file(path);
  ColoredGraph g = [&] {
    try {
      return parse_gem(text);
    } catch (const GemError& e) {
      if (e.kind() != ErrorKind::Structure) throw;
      emit(c, std::string("invalid: ") + e.what() + "\n", {{"valid", false}, {"error", e.what()}});
      throw;
    }
  }();
  std::ostringstream s;
  s << "valid: " << g.num_colors() << " colors, order " << g.order() << ", "
    << (is_connected(g) ? "connected" : "disconnected") << ", "
    << (is_bipartite(g).bipartite ? "bipartite" : "non-bipartite") << "\n";
  emit(c, s.str(),
       {{"valid", true}, {"colors", g.num_colors()}, {"order", g.order()}, {"connected", is_connected(g)},
        {"bipartite", is_bipartite(g).bipartite}});
  return kOk;
}

int cmd_convert(const Common& c, const std::string& path, const std::string& to, const std::string& out) {
  const auto g = load_gem(path);
  const std::string body = to == "json" ? gem_to_json(g).dump(2) + "\n" : serialize_gem(g);
  if (out.empty()) {
    if (!c.quiet) std::cout << body;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw GemError(ErrorKind::Syntax, "cannot write " + out);
    f << body;
  }
  return kOk;
}

int cmd_invariants(const Common& c, const std::string& path) {
  const auto g = load_gem(path);
  const auto claim = claim_for(c, g);
  const auto rep = invariant_report(g, claim);
  ordered_json j = to_json(rep);
  std::string text = to_text(rep);
  int code = kOk;
  std::vector<std::string> violations;
  if (auto exp = expected_row(g)) {
    auto check = [&](const char* what, const std::optional<std::int64_t>& want, GenusValue got) {
      if (want && got != GenusValue::integer(*want))
        violations.push_back(std::string(what) + " expected " + std::to_string(*want) + ", computed " +
                             got.to_string());
    };
    check("rho", exp->rho, rep.regular_genus);
    check("omega_G", exp->gurau_degree, rep.gurau_degree);
    check("k", exp->complexity, GenusValue::integer(rep.complexity_witness));
  }
  if (g.dimension() == 4 && claim) {
    const auto ids = verify_identities(g, *claim, IdentityOptions{std::nullopt, c.sphere()});
    auto arr = ordered_json::array();
    std::ostringstream s;
    s << "identities:";
    for (const auto& chk : ids.checks) {
      arr.push_back({{"id", chk.id}, {"statement", chk.statement}, {"asserted", chk.asserted},
                     {"passed", chk.passed}, {"witness", chk.witness}});
      s << " " << chk.id << "=" << (!chk.asserted ? "n/a" : chk.passed ? "ok" : "FAILED");
      if (chk.asserted && !chk.passed) violations.push_back("identity " + chk.id + ": " + chk.witness);
    }
    j["identities"] = arr;
    text += s.str() + "\n";
  }
  if (!violations.empty()) {
    code = kViolated;
    j["violations"] = violations;
    for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
  }
  emit(c, text, j);
  return code;
}

int cmd_recognize(const Common& c, const std::string& path) {
  const auto g = load_gem(path);
  std::ostringstream s;
  ordered_json j;
  if (g.dimension() == 2) {
    const auto t = classify_surface(g);
    s << "surface: " << t.to_string() << " (chi " << t.euler_characteristic << ")\n";
    j = {{"surface", t.to_string()}, {"orientable", t.orientable}, {"genus", t.genus},
         {"euler_characteristic", t.euler_characteristic}};
  } else if (g.dimension() == 3) {
    if (!is_connected(g) || !check_closed_3manifold(g)) {
      s << "not a closed 3-manifold gem\n";
      j = {{"closed_3_manifold", false}};
    } else {
      const auto cert = certify_s3(g, c.sphere());
      s << "S^3 certificate: " << (cert.certified() ? "certified, " : "") << cert.describe() << "\n";
      j = {{"closed_3_manifold", true}, {"certified", cert.certified()}, {"evidence", cert.describe()}};
    }
  } else if (g.dimension() == 4) {
    const auto cls = gem_class(g, c.sphere());
    s << "class: " << to_string(cls.kind);
    if (cls.singular_color) s << ", singular color " << *cls.singular_color;
    s << "\n";
    for (const auto& r : cls.reasons) s << "  reason: " << r << "\n";
    auto res = ordered_json::array();
    for (const auto& v : cls.residues) {
      s << "  residue avoiding " << v.color << " (block " << v.block << "): "
        << (v.certificate.certified() ? "S^3, " : "") << v.certificate.describe() << "\n";
      res.push_back({{"avoids", v.color}, {"block", v.block}, {"certified", v.certificate.certified()},
                     {"evidence", v.certificate.describe()}});
    }
    j = {{"class", to_string(cls.kind)},
         {"singular_color", cls.singular_color ? ordered_json(*cls.singular_color) : ordered_json(nullptr)},
         {"reasons", cls.reasons},
         {"residues", res}};
  } else {
    throw GemError(ErrorKind::Precondition, "recognition handles 3, 4 and 5 colors");
  }
  emit(c, s.str(), j);
  return kOk;
}

int cmd_pi1(const Common& c, const std::string& path, bool do_collapse, bool do_abelianize, bool non_bipartite) {
  const auto g = load_gem(path);
  const auto p = presentation_from_gem(g, PresentationOptions{non_bipartite});
  std::ostringstream s;
  s << p.to_string() << "\n";
  ordered_json j;
  auto rel = ordered_json::array();
  for (const auto& r : p.relators) rel.push_back(p.word_to_string(r.word));
  auto gens = ordered_json::array();
  for (Vertex v : p.generators) gens.push_back("x" + std::to_string(v));
  j["generators"] = gens;
  j["relators"] = rel;
  if (do_collapse) {
    const auto r = collapse(p);
    s << "collapse: " << (r.trivial() ? "trivial" : "stuck") << " after " << r.trace.size() << " steps, "
      << r.survivor_count() << " generators left\n";
    auto left = ordered_json::array();
    for (std::size_t i = 0; i < r.remaining.size(); ++i) {
      s << "  " << p.word_to_string(r.remaining[i]) << "\n";
      left.push_back(p.word_to_string(r.remaining[i]));
    }
    j["collapse"] = {{"outcome", r.trivial() ? "trivial" : "stuck"}, {"steps", r.trace.size()},
                     {"survivors", r.survivor_count()}, {"remaining", left}};
  }
  if (do_abelianize) {
    const auto a = abelianization(p);
    s << "abelianization: " << a.to_string() << " (free rank " << a.free_rank << ")\n";
    j["abelianization"] = {{"group", a.to_string()}, {"free_rank", a.free_rank}, {"torsion", a.torsion}};
  }
  emit(c, s.str(), j);
  return kOk;
}

int cmd_trisect(const Common& c, const std::string& path, bool min_only) {
  const auto g = load_gem(path);
  const TrisectionContext ctx(g, c.sphere());
  std::ostringstream s;
  ordered_json j;
  const auto bound = g_trisection_genus_upper(ctx);
  const std::string name = g.meta_or("name", std::filesystem::path(path).stem().string());
  auto bound_text = [&] {
    switch (bound.status) {
      case GTBoundStatus::Certified:
        return name + "  g_GT <= " + std::to_string(*bound.value) + "  (at " + bound.witness->to_string() + ")";
      case GTBoundStatus::NoCertificate: return name + "  g_GT: no certified trisection";
      case GTBoundStatus::Inapplicable: return name + "  g_GT: inapplicable (abelianized presentation non-trivial)";
    }
    return name;
  };
  if (!min_only) {
    s << "eps            central  green  red  status\n";
    auto rows = ordered_json::array();
    for (const auto& eps : p4_permutations()) {
      const auto r = ctx.report(eps);
      std::string e = eps.to_string();
      e.resize(std::max<std::size_t>(e.size(), 13), ' ');
      s << e << "  " << r.central_genus << "        " << r.handlebody_green << "      " << r.handlebody_red
        << "    " << to_string(r.status) << "\n";
      rows.push_back({{"eps", eps.to_string()}, {"central_genus", r.central_genus},
                      {"handlebody_green", r.handlebody_green}, {"handlebody_red", r.handlebody_red},
                      {"necessary_condition", r.necessary_condition},
                      {"sufficient_condition", r.sufficient_condition}, {"status", to_string(r.status)}});
    }
    j["triples"] = rows;
  }
  s << bound_text() << "\n";
  j["g_gt_upper"] = bound.value ? ordered_json(*bound.value) : ordered_json(nullptr);
  j["witness"] = bound.witness ? ordered_json(bound.witness->to_string()) : ordered_json(nullptr);
  emit(c, s.str(), j);
  return kOk;
}

int cmd_homology(const Common& c, const std::string& path, bool mod2, std::optional<int> drop) {
  const auto g = load_gem(path);
  std::optional<Color> label;
  if (drop) {
    if (*drop < 0 || *drop > g.dimension()) throw GemError(ErrorKind::Precondition, "label out of range");
    label = static_cast<Color>(*drop);
  }
  const auto cx = build_chain_complex(g, label);
  const auto beta = betti_numbers(cx, mod2 ? Coefficients::Z2 : Coefficients::Rational);
  const auto f = cx.face_vector();
  std::ostringstream s;
  auto join = [](const auto& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
  };
  s << "faces: (" << join(f) << ")\n";
  s << "betti" << (mod2 ? " (Z/2)" : " (Q)") << ": (" << join(beta) << ")\n";
  s << "chi: " << cx.euler_characteristic() << "\n";
  ordered_json j{{"faces", f}, {"coefficients", mod2 ? "Z2" : "Q"}, {"betti", beta},
                 {"euler_characteristic", cx.euler_characteristic()}};
  if (!mod2 && cx.n >= 1) {
    const auto h1 = integer_homology(cx, 1);
    s << "H_1: " << h1.to_string() << "\n";
    j["h1"] = h1.to_string();
  }
  emit(c, s.str(), j);
  return kOk;
}

std::pair<ColorSet, int> parse_count_filter(const std::string& text) {
  // "0,1,2=1" or "012=1"
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw GemError(ErrorKind::Syntax, "expected <colors>=<count>, got " + text);
  ColorSet set;
  for (char ch : text.substr(0, eq)) {
    if (ch == ',') continue;
    if (ch < '0' || ch > '9') throw GemError(ErrorKind::Syntax, "bad color in filter " + text);
    set = set.with(ch - '0');
  }
  return {set, std::stoi(text.substr(eq + 1))};
}

int cmd_enum(const Common& c, SearchSpec spec, const std::vector<std::string>& counts, const std::string& out) {
  for (const auto& f : counts) spec.residue_counts.push_back(parse_count_filter(f));
  SearchStats stats;
  const auto all = enumerate(spec, &stats);
  std::ostringstream s;
  ordered_json j;
  auto items = ordered_json::array();
  if (!out.empty()) std::filesystem::create_directories(out);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& g = all[i];
    const auto sweep = genus_sweep(g);
    const std::string id = "g" + std::to_string(g.order()) + "_" + std::to_string(i);
    s << id << "  rho=" << sweep.regular_genus().to_string() << " omega_G=" << sweep.gurau_degree().to_string()
      << (is_bipartite(g).bipartite ? "" : " non-bipartite") << "\n";
    items.push_back({{"id", id}, {"order", g.order()}, {"rho", genus_json(sweep.regular_genus())},
                     {"gurau_degree", genus_json(sweep.gurau_degree())}, {"bipartite", is_bipartite(g).bipartite}});
    if (!out.empty()) save_gem(out + "/" + id + ".gem", g.with_meta({{"name", id}}));
  }
  s << "classes: " << stats.distinct << "\n";
  j["graphs"] = items;
  j["classes"] = stats.distinct;
  emit(c, s.str(), j);
  return kOk;
}

int cmd_sum(const Common& c, const std::string& f1, int v1, const std::string& f2, int v2, const std::string& out,
            bool as_json) {
  const auto s = connected_sum(load_gem(f1), v1, load_gem(f2), v2);
  const std::string body = as_json ? gem_to_json(s).dump(2) + "\n" : serialize_gem(s);
  if (out.empty()) {
    if (!c.quiet) std::cout << body;
  } else {
    save_gem(out, s);
  }
  return kOk;
}

int cmd_report(const Common& c, const std::string& dir) {
  const auto entries = bundled_examples(dir);
  std::vector<TableRow> rows;
  int code = kOk;
  for (const auto& e : entries) {
    rows.push_back(table_row(e, c.sphere()));
    if (rows.back().status == RowStatus::Mismatch) code = kViolated;
  }
  emit(c, render_table(rows), table_json(rows));
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gemkit: invariants of manifolds presented by edge-colored graphs"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "JSON output");
    sub->add_flag("--quiet", common.quiet, "suppress normal output");
    sub->add_option("--budget", common.budget, "dipole-elimination budget for sphere certificates")
        ->check(CLI::NonNegativeNumber);
    auto* m = sub->add_option("--m", common.m, "claimed rank of pi_1(M)")->check(CLI::NonNegativeNumber);
    auto* mp = sub->add_option("--mprime", common.mprime, "claimed rank of pi_1 of the singular manifold")
                   ->check(CLI::NonNegativeNumber);
    m->needs(mp);
    mp->needs(m);
  };

  std::string file, file2, to = "text", out;
  int v1 = 0, v2 = 0;
  bool collapse_flag = false, abelianize_flag = false, non_bipartite = false, min_flag = false, mod2 = false;
  std::optional<int> drop;
  SearchSpec spec;
  int order = 0;
  std::vector<std::string> counts;
  bool no_crystallization = false, any_triples = false;

  auto* validate = app.add_subcommand("validate", "parse and check a graph file");
  validate->add_option("file", file)->required();
  add_common(validate);

  auto* convert = app.add_subcommand("convert", "rewrite a graph in the text or JSON encoding");
  convert->add_option("file", file)->required();
  convert->add_option("--to", to, "text or json")->check(CLI::IsMember({"text", "json"}));
  convert->add_option("--out", out, "output file (default: standard output)");
  add_common(convert);

  auto* invariants = app.add_subcommand("invariants", "genus sweep, Euler characteristic, rank-based data");
  invariants->add_option("file", file)->required();
  add_common(invariants);

  auto* recognize = app.add_subcommand("recognize", "classify a surface, 3-sphere or 5-colored gem");
  recognize->add_option("file", file)->required();
  add_common(recognize);

  auto* pi1 = app.add_subcommand("pi1", "presentation read from the 4-colored edges");
  pi1->add_option("file", file)->required();
  pi1->add_flag("--collapse", collapse_flag, "run the single-generator collapse");
  pi1->add_flag("--abelianize", abelianize_flag, "abelianize the presentation");
  pi1->add_flag("--non-bipartite", non_bipartite, "orient 4-colored edges by vertex id for non-bipartite graphs");
  add_common(pi1);

  auto* trisect = app.add_subcommand("trisect", "trisection data for each permutation ending in 4");
  trisect->add_option("file", file)->required();
  trisect->add_flag("--min", min_flag, "print only the upper bound for the trisection genus");
  add_common(trisect);

  auto* homology = app.add_subcommand("homology", "Betti numbers of the associated cell complex");
  homology->add_option("file", file)->required();
  homology->add_flag("--mod2", mod2, "Z/2 coefficients");
  homology->add_option("--drop-label", drop, "keep only cells avoiding this vertex label");
  add_common(homology);

  auto* enumerate_cmd = app.add_subcommand("enum", "exhaustive search up to isomorphism");
  enumerate_cmd->add_option("--order", order, "largest order")->required();
  enumerate_cmd->add_option("--min-order", spec.min_order, "smallest order (default: --order)");
  enumerate_cmd->add_flag("--bipartite", spec.bipartite_only, "bipartite graphs only");
  enumerate_cmd->add_flag("--dipole-free", spec.dipole_free, "no proper dipoles");
  enumerate_cmd->add_flag("--rigid", spec.rigid, "experimental rigidity filter");
  enumerate_cmd->add_flag("--no-crystallization", no_crystallization, "allow several residues per missing color");
  enumerate_cmd->add_flag("--any-triples", any_triples, "do not require spherical 3-residues");
  enumerate_cmd->add_option("--g", counts, "exact residue count, e.g. --g 012=1 (repeatable)");
  enumerate_cmd->add_option("--ceiling", spec.ceiling, "refuse orders above this");
  enumerate_cmd->add_option("--out", out, "write each graph to this directory");
  add_common(enumerate_cmd);

  auto* sum = app.add_subcommand("sum", "graph connected sum at two vertices");
  sum->add_option("file1", file)->required();
  sum->add_option("v1", v1)->required();
  sum->add_option("file2", file2)->required();
  sum->add_option("v2", v2)->required();
  sum->add_option("--out", out, "output file (default: standard output)");
  add_common(sum);

  auto* report = app.add_subcommand("report", "summary table over a directory of graphs");
  report->add_option("dir", file)->required();
  add_common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (common.m && *common.mprime > *common.m)
      throw GemError(ErrorKind::Precondition, "--mprime must not exceed --m");
    if (*validate) return cmd_validate(common, file);
    if (*convert) return cmd_convert(common, file, to, out);
    if (*invariants) return cmd_invariants(common, file);
    if (*recognize) return cmd_recognize(common, file);
    if (*pi1) return cmd_pi1(common, file, collapse_flag, abelianize_flag, non_bipartite);
    if (*trisect) return cmd_trisect(common, file, min_flag);
    if (*homology) return cmd_homology(common, file, mod2, drop);
    if (*enumerate_cmd) {
      spec.max_order = order;
      if (enumerate_cmd->count("--min-order") == 0) spec.min_order = order;
      spec.crystallization = !no_crystallization;
      spec.spherical_triples = !any_triples;
      return cmd_enum(common, spec, counts, out);
    }
    if (*sum) return cmd_sum(common, file, v1, file2, v2, out, common.json);
    if (*report) return cmd_report(common, file);
  } catch (const GemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Inconsistent: return kViolated;
      case ErrorKind::Internal: return kInternal;
      default: return kInvalid;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
