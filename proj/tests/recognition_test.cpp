#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace gemkit;

TEST(Surfaces, OrderTwoGraphIsTheSphere) {
  const auto s = classify_surface(standard_sphere(2));
  EXPECT_TRUE(s.is_sphere());
  EXPECT_EQ(s.to_string(), "S^2");
}

TEST(Surfaces, AgreeWithFaceTracing) {
  std::mt19937_64 rng(31);
  int nonorientable = 0, higher = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_connected_graph(2, 2 * (1 + trial % 8), rng);
    const auto s = classify_surface(g);
    const auto twice = oracle::twice_rho(oracle::matchings_of(g), {0, 1, 2});
    EXPECT_EQ(s.euler_characteristic, 2 - twice);
    EXPECT_EQ(s.orientable, is_bipartite(g).bipartite);
    if (s.orientable)
      EXPECT_EQ(2 * s.genus, twice);
    else
      EXPECT_EQ(s.genus, twice);
    nonorientable += !s.orientable;
    higher += s.euler_characteristic < 0;
  }
  EXPECT_GT(nonorientable, 0);
  EXPECT_GT(higher, 0);
}

TEST(Surfaces, Preconditions) {
  EXPECT_THROW(classify_surface(standard_sphere(3)), GemError);
  const ColoredGraph two(2, {{1, 0, 3, 2}, {1, 0, 3, 2}, {1, 0, 3, 2}});
  EXPECT_THROW(classify_surface(two), GemError);
}

TEST(Dipoles, InsertThenFindThenEliminate) {
  const auto s = standard_sphere(3);
  for (std::uint32_t mask = 1; mask < 15; ++mask) {
    const ColorSet d(mask);
    const auto g = insert_dipole(s, 0, d);
    EXPECT_EQ(g.order(), 4);
    EXPECT_TRUE(is_proper_dipole(g, 2, 3, d)) << d.to_string();
    const auto back = eliminate_dipole(g, Dipole{2, 3, d, true});
    EXPECT_TRUE(isomorphic(back, s));
  }
  EXPECT_THROW(insert_dipole(s, 0, ColorSet::all(3)), GemError);
}

TEST(Dipoles, ImproperDipoleIsRefused) {
  // In the order-2 graph the two vertices share every color.
  const auto g = standard_sphere(3);
  EXPECT_FALSE(is_proper_dipole(g, 0, 1, ColorSet::all(3)));
  EXPECT_THROW(eliminate_dipole(g, Dipole{0, 1, ColorSet::all(3), false}), GemError);
  // A 4-dipole of the 4-colored theta graph has no complementary colors.
  const auto ds = find_dipoles(g);
  ASSERT_EQ(ds.size(), 0u);
}

TEST(Dipoles, FoundInVertexOrder) {
  std::mt19937_64 rng(37);
  const auto g = oracle::inflated_sphere(3, 6, rng);
  const auto ds = find_dipoles(g, 3);
  for (std::size_t i = 1; i < ds.size(); ++i)
    EXPECT_TRUE(std::pair(ds[i - 1].x, ds[i - 1].y) < std::pair(ds[i].x, ds[i].y));
  for (const auto& d : ds) {
    EXPECT_LT(d.x, d.y);
    EXPECT_EQ(g.colors_between(d.x, d.y), d.colors);
    EXPECT_EQ(d.proper, is_proper_dipole(g, d.x, d.y, d.colors));
  }
}

TEST(Simplify, ReducesInflatedSpheresAndRespectsBudget) {
  std::mt19937_64 rng(41);
  const auto g = oracle::inflated_sphere(4, 12, rng);
  const auto r = simplify(g);
  EXPECT_FALSE(r.budget_exhausted);
  EXPECT_LT(r.graph.order(), g.order());
  const auto capped = simplify(g, SimplifyOptions{1, 2, std::nullopt});
  EXPECT_LE(capped.trace.size(), 1u);
}

TEST(SphereCertificates, InflatedSpheresAreCertifiedAndReplay) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    const auto g = oracle::inflated_sphere(3, 1 + i % 20, rng);
    const auto cert = certify_s3(g);
    ASSERT_TRUE(cert.certified()) << serialize_gem(g);
    EXPECT_TRUE(replay_certificate(g, cert));
  }
}

TEST(SphereCertificates, LensSpaceLinkIsNeverCertified) {
  const auto g = fixtures::bundled("xi2");
  const auto link = extract_residue(g, {0, 1, 2, 3}, 0);
  EXPECT_EQ(first_homology(link).to_string(), "Z/2");
  for (int budget : {0, 10, 1000}) {
    SphereOptions opt;
    opt.budget = budget;
    EXPECT_FALSE(certify_s3(link, opt).certified());
    opt.max_h = 3;
    EXPECT_FALSE(certify_s3(link, opt).certified());
  }
}

TEST(SphereCertificates, HandleLinkIsNotCertified) {
  const auto link = extract_residue(fixtures::bundled("y4_1"), {0, 1, 2, 3}, 0);
  EXPECT_EQ(first_homology(link).to_string(), "Z");
  EXPECT_FALSE(certify_s3(link).certified());
}

TEST(SphereCertificates, ForgedCertificateFailsReplay) {
  const auto link = extract_residue(fixtures::bundled("xi2"), {0, 1, 2, 3}, 0);
  SphereCertificate forged;
  forged.outcome = CertificateOutcome::Certified;
  forged.evidence = SphereEvidence::RegularGenusZero;
  forged.permutation = CyclicPermutation({0, 1, 2, 3});
  EXPECT_FALSE(replay_certificate(link, forged));
}

TEST(SphereCertificates, Preconditions) {
  EXPECT_THROW(certify_s3(standard_sphere(4)), GemError);
  std::mt19937_64 rng(47);
  // Random 4-colored graphs usually have non-spherical 3-residues.
  int rejected = 0;
  for (int i = 0; i < 50; ++i) {
    const auto g = oracle::random_connected_graph(3, 12, rng);
    if (!check_closed_3manifold(g)) {
      EXPECT_THROW(certify_s3(g), GemError);
      ++rejected;
    }
  }
  EXPECT_GT(rejected, 0);
}

TEST(GemClass, BundledGraphs) {
  for (const auto& e : bundled_examples(GEMKIT_DATA_DIR)) {
    if (e.ingest_only()) continue;
    const auto cls = gem_class(*e.graph);
    const bool bounded = e.graph->meta_or("boundary") == "connected";
    EXPECT_EQ(cls.kind, bounded ? GemKind::SingularGem : GemKind::ClosedGem) << e.name;
    if (bounded) {
      EXPECT_EQ(cls.singular_color, Color{4});
    }
    EXPECT_TRUE(is_crystallization(*e.graph));
  }
}

TEST(GemClass, NotAGemAndDisconnected) {
  std::mt19937_64 rng(53);
  bool saw = false;
  for (int i = 0; i < 50 && !saw; ++i) {
    const auto g = oracle::random_connected_graph(4, 10, rng);
    const auto cls = gem_class(g);
    if (cls.kind == GemKind::NotAGem) {
      saw = true;
      ASSERT_FALSE(cls.reasons.empty());
    }
  }
  EXPECT_TRUE(saw);
  const ColoredGraph two(4, std::vector<std::vector<Vertex>>(5, {1, 0, 3, 2}));
  EXPECT_EQ(gem_class(two).kind, GemKind::NotAGem);
}

TEST(GemClass, SingularColorIsNormalized) {
  const auto y = fixtures::bundled("y4_1");
  const auto moved = y.recolored(std::vector<Color>{4, 1, 2, 3, 0});
  const auto cls = gem_class(moved);
  ASSERT_EQ(cls.kind, GemKind::SingularGem);
  ASSERT_EQ(cls.singular_color, Color{0});
  const auto back = normalize_singular_color(moved, 0);
  EXPECT_EQ(gem_class(back).singular_color, Color{4});
  EXPECT_EQ(back.meta_or("color_perm"), "4 1 2 3 0");
  EXPECT_TRUE(isomorphic(back, y));
}

TEST(GemClass, TwoSingularColorsAreUnknown) {
  // Sum of a handlebody with a recolored copy: two colors carry non-sphere links.
  const auto y = fixtures::bundled("y4_1");
  const auto moved = y.recolored(std::vector<Color>{4, 1, 2, 3, 0});
  const auto s = connected_sum(y, moved);
  const auto cls = gem_class(s);
  EXPECT_EQ(cls.kind, GemKind::UnknownGem);
  EXPECT_FALSE(cls.singular_color.has_value());
}
