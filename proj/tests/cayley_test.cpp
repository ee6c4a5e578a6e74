#include <gtest/gtest.h>

#include <algorithm>

#include "cayleypair/cayley.hpp"
#include "cayleypair/error.hpp"
#include "cayleypair/instance.hpp"
#include "oracles.hpp"

using namespace cayleypair;

namespace {

std::vector<oracle::Perm> raw(const std::vector<Permutation>& s) {
  std::vector<oracle::Perm> out;
  for (const auto& p : s) out.push_back(p.images());
  return out;
}

}  // namespace

TEST(Cayley, SymmetricGroupOnThreePoints) {
  PairInstance p = build_pair_instance(1, 0);
  EXPECT_EQ(p.x1.num_vertices(), 6);
  EXPECT_EQ(p.x2.num_vertices(), 6);
  EXPECT_EQ(diameter(p.x1), 2);
  EXPECT_EQ(diameter(p.x2), 3);
  // S2 contains the identity: one loop per vertex, left unpaired.
  int loops = 0;
  for (const Arc& a : p.x2.graph().arcs())
    if (a.source == a.target) {
      ++loops;
      EXPECT_EQ(a.reverse, -1);
    }
  EXPECT_EQ(loops, 6);
  EXPECT_FALSE(p.x2.graph().is_reverse_paired());
  EXPECT_TRUE(p.x1.graph().is_reverse_paired());
}

TEST(Cayley, LiteralSetsForSymmetricGroup) {
  Permutation s = parse_cycles("(1,3,2)"), t = parse_cycles("(1,3)", 3);
  CayleyGraph x1 = build_cayley({s, s.inverse(), t}, false);
  CayleyGraph x2 = build_cayley({t, t * s, Permutation::identity(3)}, false);
  EXPECT_EQ(diameter(x1), 2);
  EXPECT_EQ(diameter(x2), 3);
}

TEST(Cayley, DiametersMatchOracle) {
  for (auto [a, b] : {std::pair{1, 0}, {2, 0}, {1, 2}}) {
    PairInstance p = build_pair_instance(a, b);
    EXPECT_EQ(diameter(p.x1), oracle::cayley_diameter(raw(p.pair.s1))) << a << "," << b;
    EXPECT_EQ(diameter(p.x2), oracle::cayley_diameter(raw(p.pair.s2))) << a << "," << b;
    EXPECT_EQ(p.x1.num_vertices(), static_cast<int>(oracle::closure(raw(p.pair.s1)).size()));
  }
  PairInstance p12 = build_pair_instance(1, 2);
  EXPECT_EQ(diameter(p12.x1), 10);
  EXPECT_EQ(diameter(p12.x2), 9);
}

TEST(Cayley, AlternatingGroupLiteralSets) {
  std::vector<Permutation> s1{parse_cycles("(1,2,3,4,5)"), parse_cycles("(1,2,3,4,5)").inverse(),
                              parse_cycles("(1,2)(3,4)", 5)};
  std::vector<Permutation> s2{parse_cycles("(1,2)(3,5)"), parse_cycles("(1,2)(4,5)"), parse_cycles("(1,3)(4,5)")};
  CayleyGraph x1 = build_cayley(s1, false), x2 = build_cayley(s2, false);
  EXPECT_EQ(x1.num_vertices(), 60);
  EXPECT_EQ(x2.num_vertices(), 60);
  EXPECT_EQ(diameter(x1), oracle::cayley_diameter(raw(s1)));
  EXPECT_EQ(diameter(x2), oracle::cayley_diameter(raw(s2)));
  EXPECT_EQ(diameter(x1), 9);
  EXPECT_EQ(diameter(x2), 6);
}

TEST(Cayley, IdentityGeneratorGivesLoop) {
  CayleyGraph x = build_cayley({Permutation::identity(3)}, false);
  EXPECT_EQ(x.num_vertices(), 1);
  EXPECT_EQ(x.graph().num_arcs(), 1);
  EXPECT_EQ(x.graph().arc(0).target, 0);
  EXPECT_EQ(diameter(x), 0);
}

TEST(Cayley, ElementCap) {
  PairInstance p = build_pair_instance(1, 2);
  EXPECT_THROW(build_cayley(p.pair.s1, false, 100), ResourceCapExceeded);
  EXPECT_THROW(build_pair_instance(1, 2, 100), ResourceCapExceeded);
  EXPECT_THROW(build_cayley({}, false), InvalidInput);
}

TEST(CayleyProperty, ArcsAreRightMultiplication) {
  for (auto [a, b] : {std::pair{1, 0}, {2, 0}, {1, 2}}) {
    PairInstance p = build_pair_instance(a, b);
    for (const CayleyGraph* x : {&p.x1, &p.x2}) {
      ASSERT_EQ(x->graph().regular_out_degree(), 3);
      for (int v = 0; v < x->num_vertices(); ++v)
        for (int s = 0; s < 3; ++s)
          ASSERT_EQ(x->element(x->target(v, s)), x->element(v) * x->gens()[s]);
    }
  }
}

TEST(CayleyProperty, CoverIsBipartiteByFiber) {
  PairInstance p = build_pair_instance(2, 0);
  CayleyGraph y = build_cayley(p.pair.s1, true);
  EXPECT_EQ(y.num_vertices(), 120);
  for (const Arc& a : y.graph().arcs()) ASSERT_NE(y.fiber(a.source), y.fiber(a.target));
  EXPECT_TRUE(y.graph().is_bipartite());
  EXPECT_EQ(y.group_order(), 60);
}

TEST(DoubleCover, FibersAndUniqueLifting) {
  for (auto [a, b] : {std::pair{1, 0}, {2, 0}}) {
    PairInstance p = build_pair_instance(a, b);
    CayleyGraph y = build_cayley(p.pair.s2, true);
    CoveringMap pi = double_cover(y, p.x2);
    std::vector<int> fiber_size(p.x2.num_vertices(), 0);
    for (int v : pi.vertex_map) ++fiber_size[v];
    for (int s : fiber_size) ASSERT_EQ(s, 2);
    // Every arc word of length <= 4 from the identity lifts uniquely and
    // ends in fiber c + t.
    for (int t = 0; t <= 4; ++t) {
      int words = 1;
      for (int i = 0; i < t; ++i) words *= 3;
      for (int w = 0; w < words; ++w) {
        std::vector<int> path;
        int v = 0, code = w;
        for (int i = 0; i < t; ++i) {
          int e = p.x2.graph().out_arcs(v)[code % 3];
          code /= 3;
          path.push_back(e);
          v = p.x2.graph().arc(e).target;
        }
        for (int c : {0, 1}) {
          int start = y.index_of(Permutation::identity(p.x2.degree()), c);
          std::vector<int> lift = lift_path(pi, y, start, path);
          ASSERT_EQ(lift.size(), path.size());
          int end = start;
          for (std::size_t i = 0; i < lift.size(); ++i) {
            ASSERT_EQ(y.graph().arc(lift[i]).source, end);
            ASSERT_EQ(pi.arc_map[lift[i]], path[i]);
            end = y.graph().arc(lift[i]).target;
          }
          ASSERT_EQ(y.fiber(end), (c + t) % 2);
          ASSERT_EQ(pi.vertex_map[end], v);
        }
      }
    }
  }
}

TEST(PuzzleIso, Theta10BothFlavors) {
  PairInstance p = build_pair_instance(1, 0);
  CoverInstance c = build_cover_instance(p);
  ASSERT_EQ(c.puzzle.positions.size(), 12u);
  EXPECT_TRUE(is_isomorphism(c.puzzle.graph, c.y1.graph(), c.rho_iso));
  EXPECT_TRUE(is_isomorphism(c.puzzle.graph, c.y2.graph(), c.psi_iso));
  EXPECT_EQ(c.steps.phi0[0], 0);
}

TEST(PuzzleIso, Theta20InitialComponent) {
  PairInstance p = build_pair_instance(2, 0);
  CoverInstance c = build_cover_instance(p);
  ASSERT_EQ(c.puzzle.positions.size(), 120u);
  EXPECT_TRUE(is_isomorphism(c.puzzle.graph, c.y1.graph(), c.rho_iso));
  EXPECT_TRUE(is_isomorphism(c.puzzle.graph, c.y2.graph(), c.psi_iso));
}

TEST(PuzzleIso, DetectsBrokenMap) {
  PairInstance p = build_pair_instance(1, 0);
  CoverInstance c = build_cover_instance(p);
  std::vector<int> broken = c.rho_iso;
  std::swap(broken[0], broken[1]);
  EXPECT_FALSE(is_isomorphism(c.puzzle.graph, c.y1.graph(), broken));
}

TEST(StepBijections, NormalizationUndoesTranslationAndDeckSwap) {
  PairInstance p = build_pair_instance(1, 0);
  CoverInstance c = build_cover_instance(p);
  // phi : Y1 -> Y2 built from the two puzzle isomorphisms.
  std::vector<int> phi(c.y1.num_vertices());
  for (std::size_t f = 0; f < c.rho_iso.size(); ++f) phi[c.rho_iso[f]] = c.psi_iso[f];
  bool tr = true, sw = true;
  std::vector<int> base = normalize_at_identity(phi, c.y1, c.y2, &tr, &sw);
  EXPECT_EQ(base, phi);
  EXPECT_FALSE(tr);
  EXPECT_FALSE(sw);

  // Post-compose with a left translation by tau and the deck swap.
  const Permutation h = c.y2.element(c.y2.target(0, 0));
  std::vector<int> moved(phi.size());
  for (std::size_t v = 0; v < phi.size(); ++v) {
    int u = phi[v];
    moved[v] = c.y2.index_of(h * c.y2.element(u), c.y2.fiber(u) ^ 1);
    ASSERT_GE(moved[v], 0);
  }
  ASSERT_TRUE(is_isomorphism(c.y1.graph(), c.y2.graph(), moved));
  std::vector<int> back = normalize_at_identity(moved, c.y1, c.y2, &tr, &sw);
  EXPECT_TRUE(tr);
  EXPECT_TRUE(sw);
  EXPECT_EQ(back, phi);
}
