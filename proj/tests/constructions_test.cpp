#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace gemkit;

namespace {

struct OracleFilter {
  bool bipartite = false;
  bool crystallization = true;
};

bool oracle_bipartite(const oracle::Matchings& m) {
  const int order = static_cast<int>(m[0].size());
  std::vector<int> cls(order, -1);
  cls[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& row : m) {
      const int w = row[v];
      if (cls[w] < 0) {
        cls[w] = 1 - cls[v];
        stack.push_back(w);
      } else if (cls[w] == cls[v]) {
        return false;
      }
    }
  }
  return true;
}

// Classes of connected 5-colored graphs of the given order with spherical
// 3-residues, by brute force over every matching.
std::size_t oracle_class_count(int order, OracleFilter f) {
  const int p = order / 2;
  const auto all = oracle::all_matchings(order);
  std::vector<int> c0(order);
  for (int v = 0; v < order; ++v) c0[v] = v ^ 1;
  std::set<std::vector<int>> classes;
  oracle::Matchings m(5);
  m[0] = c0;
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
        for (const auto& d : all) {
          m[1] = a;
          m[2] = b;
          m[3] = c;
          m[4] = d;
          if (oracle::components_mask(m, 31) != 1) continue;
          if (f.crystallization) {
            bool ok = true;
            for (int x = 0; x < 5 && ok; ++x) ok = oracle::components_mask(m, 31 & ~(1u << x)) == 1;
            if (!ok) continue;
          }
          bool spherical = true;
          for (std::uint32_t t = 0; t < 32 && spherical; ++t) {
            if (std::popcount(t) != 3) continue;
            int pairs = 0;
            for (int x = 0; x < 5; ++x)
              if (t & (1u << x)) pairs += oracle::components_mask(m, t & ~(1u << x));
            spherical = pairs - p == 2 * oracle::components_mask(m, t);
          }
          if (!spherical) continue;
          if (f.bipartite && !oracle_bipartite(m)) continue;
          classes.insert(oracle::brute_canonical(m));
        }
  return classes.size();
}

}  // namespace

TEST(StandardSphere, EveryColorPairsTheTwoVertices) {
  for (int n = 1; n <= 5; ++n) {
    const auto g = standard_sphere(n);
    EXPECT_EQ(g.order(), 2);
    EXPECT_EQ(g.dimension(), n);
    EXPECT_TRUE(validate_structure(g).ok());
  }
  EXPECT_EQ(standard_sphere(4).meta_or("name"), "S4");
}

TEST(ConnectedSum, OrderAndAdditivity) {
  const auto a = fixtures::bundled("cp2");
  const auto b = fixtures::bundled("s1xs3");
  const auto s = connected_sum(a, b);
  EXPECT_EQ(s.order(), a.order() + b.order() - 2);
  EXPECT_TRUE(is_bipartite(s).bipartite);
  EXPECT_TRUE(is_crystallization(s));
  EXPECT_EQ(regular_genus(s), regular_genus(a) + regular_genus(b));
  EXPECT_EQ(gurau_degree(s), gurau_degree(a) + gurau_degree(b));
  EXPECT_EQ(s.half_order() - 1, (a.half_order() - 1) + (b.half_order() - 1));
  EXPECT_EQ(s.meta_or("name"), "CP2#S1xS3");
  EXPECT_EQ(s.meta_or("m"), "1");
  EXPECT_EQ(s.meta_or("sum_kind"), "internal");
  EXPECT_EQ(gem_class(s).kind, GemKind::ClosedGem);
}

TEST(ConnectedSum, WithTheOrderTwoSphereIsTheIdentity) {
  const auto g = fixtures::bundled("cp2");
  for (Vertex v = 0; v < g.order(); ++v) {
    const Vertex w = is_bipartite(g).classes[v] == 0 ? 1 : 0;
    EXPECT_TRUE(isomorphic(connected_sum(g, v, standard_sphere(4), w), g)) << v;
  }
}

TEST(ConnectedSum, Preconditions) {
  const auto g = fixtures::bundled("cp2");
  EXPECT_THROW(connected_sum(g, 0, g, 0), GemError);  // same bipartition class
  EXPECT_THROW(connected_sum(g, 0, standard_sphere(3), 1), GemError);
  EXPECT_THROW(connected_sum(g, 99, g, 1), GemError);
  EXPECT_NO_THROW(connected_sum(g, 0, g, 1));
}

TEST(ConnectedSum, NonBipartiteSummandsAnyVertex) {
  const auto t = fixtures::bundled("s1xts3");
  const auto s = connected_sum(t, 0, t, 0);
  EXPECT_FALSE(is_bipartite(s).bipartite);
  EXPECT_EQ(regular_genus(s), GenusValue::integer(2));
}

TEST(ConnectedSum, BoundarySumKind) {
  const auto y = fixtures::bundled("y4_1");
  const auto s = connected_sum(y, y);
  EXPECT_EQ(s.meta_or("sum_kind"), "boundary");
  EXPECT_EQ(s.meta_or("m"), "2");
  EXPECT_EQ(s.meta_or("mprime"), "0");
}

TEST(Enumeration, MatchesBruteForceAtSmallOrders) {
  for (int order : {2, 4, 6}) {
    for (bool bip : {false, true}) {
      for (bool cryst : {true, false}) {
        SearchSpec spec;
        spec.min_order = spec.max_order = order;
        spec.bipartite_only = bip;
        spec.crystallization = cryst;
        const auto found = enumerate(spec);
        EXPECT_EQ(found.size(), oracle_class_count(order, {bip, cryst}))
            << "order " << order << " bipartite " << bip << " crystallization " << cryst;
      }
    }
  }
}

TEST(Enumeration, OrderEightCountsAreStable) {
  // Frozen from the enumerator; orders up to 6 are checked against brute force above
  // and order-8 canonical forms against the brute-force canonical oracle.
  SearchSpec spec;
  spec.min_order = spec.max_order = 8;
  const auto all = enumerate(spec);
  spec.bipartite_only = true;
  const auto bip = enumerate(spec);
  EXPECT_EQ(bip.size(), 1365u);
  EXPECT_GE(all.size(), bip.size());
  for (const auto& g : bip) EXPECT_TRUE(is_bipartite(g).bipartite);
  for (ColorSet t : detail::color_sets_of_size(4, 3)) spec.residue_counts.emplace_back(t, 1);
  EXPECT_EQ(enumerate(spec).size(), 60u);
}

TEST(Enumeration, ResidueConstraintsEqualFiltering) {
  SearchSpec spec;
  spec.min_order = spec.max_order = 8;
  spec.bipartite_only = true;
  const auto all = enumerate(spec);
  spec.residue_counts = {{ColorSet{0, 1, 4}, 2}};
  const auto constrained = enumerate(spec);
  std::size_t expected = 0;
  for (const auto& g : all) expected += residue_count(g, {0, 1, 4}) == 2;
  EXPECT_EQ(constrained.size(), expected);
}

TEST(Enumeration, DeterministicOutput) {
  SearchSpec spec;
  spec.min_order = 2;
  spec.max_order = 8;
  const auto a = enumerate(spec);
  const auto b = enumerate(spec);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].matchings(), b[i].matchings());
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LE(a[i - 1].order(), a[i].order());
}

TEST(Enumeration, DipoleFreeAndRigidFilters) {
  SearchSpec spec;
  spec.min_order = spec.max_order = 8;
  spec.dipole_free = true;
  const auto free = enumerate(spec);
  for (const auto& g : free)
    for (const auto& d : find_dipoles(g)) EXPECT_FALSE(d.proper);
  spec.rigid = true;
  const auto rigid = enumerate(spec);
  EXPECT_LE(rigid.size(), free.size());
  for (const auto& g : rigid) EXPECT_FALSE(has_rho_n_pair(g));
}

TEST(Enumeration, CeilingIsEnforced) {
  SearchSpec spec;
  spec.min_order = spec.max_order = 16;
  EXPECT_THROW(enumerate(spec), GemError);
  spec.ceiling = 18;
  EXPECT_THROW(enumerate(spec), GemError);
  spec.min_order = spec.max_order = 7;
  spec.ceiling = kDefaultEnumerationCeiling;
  EXPECT_THROW(enumerate(spec), GemError);
}

TEST(Enumeration, EarlyStop) {
  SearchSpec spec;
  spec.min_order = spec.max_order = 8;
  int seen = 0;
  enumerate_each(spec, [&](const ColoredGraph&) { return ++seen < 3; });
  EXPECT_EQ(seen, 3);
}
