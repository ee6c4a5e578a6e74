#include <gtest/gtest.h>

#include <algorithm>

#include "cayleypair/error.hpp"
#include "cayleypair/instance.hpp"
#include "cayleypair/zeta.hpp"
#include "oracles.hpp"

using namespace cayleypair;

namespace {

DirectedMultigraph complete_graph(int n) {
  DirectedMultigraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge_pair(u, v);
  return g;
}

DirectedMultigraph cycle(int n) {
  DirectedMultigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge_pair(i, (i + 1) % n);
  return g;
}

std::vector<std::vector<int>> simple_adjacency(const DirectedMultigraph& g) {
  std::vector<std::vector<int>> adj(g.num_vertices());
  for (const Arc& a : g.arcs()) adj[a.source].push_back(a.target);
  return adj;
}

IntPolynomial k4_zeta_inverse() {
  Factorization f;
  f.factors = {{IntPolynomial({1, 0, -1}), 2}, {IntPolynomial({1, -1}), 1}, {IntPolynomial({1, -2}), 1},
               {IntPolynomial({1, 1, 2}), 3}};
  return f.expand();
}

struct ZInstance {
  ThetaGraph theta;
  ContractedPuzzle cp;
  KAction action;
  CoveringDiagram d;
};

ZInstance z_instance(int a, int b) {
  ThetaGraph t = ThetaGraph::build(a, b);
  ContractedPuzzle cp = build_contracted_puzzle(t, natural_scope(a, b));
  KAction act = k_action(cp, t);
  CoveringDiagram d = covering_diagram(cp, act);
  return {t, std::move(cp), std::move(act), std::move(d)};
}

}  // namespace

TEST(Zeta, CompleteGraphK4) {
  DirectedMultigraph k4 = complete_graph(4);
  EXPECT_EQ(ihara_zeta_inverse(k4), k4_zeta_inverse());
  EXPECT_EQ(hashimoto_zeta_inverse(k4), k4_zeta_inverse());
  // (1 - u^2)^{r-1} with r - 1 = N(d-2)/2 = 2.
  EXPECT_EQ(bass_determinant(k4) * IntPolynomial({1, 0, -1}).pow(2), k4_zeta_inverse());
}

TEST(Zeta, K4EulerProductToDegreeTwelve) {
  DirectedMultigraph k4 = complete_graph(4);
  std::vector<PrimeCycle> primes = prime_cycles(k4, 12);
  std::vector<int> ones(primes.size(), 1);
  EXPECT_EQ(euler_product_inverse(primes, ones, 12), k4_zeta_inverse().truncated(12));
  // Triangles: 4 triangles, two orientations each.
  EXPECT_EQ(std::count_if(primes.begin(), primes.end(), [](const PrimeCycle& c) { return c.length() == 3; }), 8);
}

TEST(ZetaProperty, CycleCountsMatchNonBacktrackingTraces) {
  DirectedMultigraph k4 = complete_graph(4);
  auto traces = oracle::nonbacktracking_traces(simple_adjacency(k4), 12);
  auto counts = oracle::cycle_counts_from_zeta_inverse(k4_zeta_inverse().coefficients(), 12);
  for (int m = 1; m <= 12; ++m) EXPECT_EQ(traces[m], counts[m]) << "m=" << m;
}

TEST(ZetaProperty, PrimeCountsMatchTraces) {
  // N_m = sum over primes C with length dividing m of length(C).
  DirectedMultigraph k4 = complete_graph(4);
  auto traces = oracle::nonbacktracking_traces(simple_adjacency(k4), 12);
  std::vector<PrimeCycle> primes = prime_cycles(k4, 12);
  for (int m = 1; m <= 12; ++m) {
    mpz_class n = 0;
    for (const auto& c : primes)
      if (m % c.length() == 0) n += c.length();
    EXPECT_EQ(n, traces[m]) << "m=" << m;
  }
}

TEST(Zeta, TrianglePrimes) {
  std::vector<PrimeCycle> primes = prime_cycles(cycle(3), 12);
  ASSERT_EQ(primes.size(), 2u);
  EXPECT_EQ(primes[0].length(), 3);
  EXPECT_EQ(primes[1].length(), 3);
}

TEST(Zeta, RejectsLoops) {
  PairInstance p = build_pair_instance(1, 0);
  EXPECT_THROW(check_zeta_input(p.x2.graph()), InvalidInput);
  EXPECT_THROW(ihara_zeta_inverse(p.x2.graph()), InvalidInput);
  EXPECT_NO_THROW(check_zeta_input(p.x1.graph()));
}

TEST(Zeta, RoutesAgreeOnZOfTheta20) {
  ZInstance z = z_instance(2, 0);
  const DirectedMultigraph& g = z.d.z.base;
  ASSERT_EQ(g.num_vertices(), 30);
  ASSERT_FALSE(g.has_loops());
  IntPolynomial ihara = ihara_zeta_inverse(g);
  EXPECT_EQ(hashimoto_zeta_inverse(g), ihara);
  EXPECT_EQ(bass_determinant(g) * IntPolynomial({1, 0, -1}).pow(15), ihara);
  std::vector<PrimeCycle> primes = prime_cycles(g, 10);
  std::vector<int> ones(primes.size(), 1);
  EXPECT_EQ(euler_product_inverse(primes, ones, 10), ihara.truncated(10));
  auto traces = oracle::nonbacktracking_traces(simple_adjacency(g), 10);
  auto counts = oracle::cycle_counts_from_zeta_inverse(ihara.coefficients(), 10);
  for (int m = 1; m <= 10; ++m) EXPECT_EQ(traces[m], counts[m]) << "m=" << m;
}

TEST(Frobenius, ParityLemmaAndRotation) {
  ZInstance z = z_instance(2, 0);
  std::vector<PrimeCycle> primes = prime_cycles(z.d.z.base, 10);
  ASSERT_FALSE(primes.empty());
  for (const auto& c : primes) {
    int k = frobenius(c, z.cp.graph, z.action, z.d.z);
    bool even = c.length() % 2 == 0;
    ASSERT_EQ(even, k == 0 || k == kRhoPsi) << "length " << c.length();
    PrimeCycle rotated = c;
    std::rotate(rotated.arcs.begin(), rotated.arcs.begin() + 1, rotated.arcs.end());
    ASSERT_EQ(frobenius(rotated, z.cp.graph, z.action, z.d.z), k);
  }
}

TEST(Frobenius, IndependentOfLiftStart) {
  ZInstance z = z_instance(2, 0);
  std::vector<PrimeCycle> primes = prime_cycles(z.d.z.base, 6);
  for (const auto& c : primes) {
    int base_vertex = z.d.z.base.arc(c.arcs[0]).source;
    int k0 = frobenius(c, z.cp.graph, z.action, z.d.z);
    for (int v = 0; v < z.cp.graph.num_vertices(); ++v)
      if (z.d.z.orbits.vertex_orbit[v] == base_vertex) {
        ASSERT_EQ(frobenius(c, z.cp.graph, z.action, z.d.z, v), k0);
      }
  }
}

TEST(LFactorization, Theta20) {
  ZInstance z = z_instance(2, 0);
  LFactorizationReport r = verify_L_factorization(z.cp, z.action, z.d, 10);
  EXPECT_TRUE(r.trivial_ok);
  EXPECT_TRUE(r.quotient_ok[1] && r.quotient_ok[2] && r.quotient_ok[3]);
  EXPECT_TRUE(r.y_ok);
  EXPECT_TRUE(r.rho_psi_ok);
  EXPECT_TRUE(r.polynomial_ok);
  EXPECT_TRUE(r.frobenius_parity_ok);
  EXPECT_TRUE(r.z_routes_ok);
  EXPECT_EQ(r.trivial_l_inverse, r.zeta_z_inverse.truncated(10));
  for (int i = 0; i <= 10; ++i)
    EXPECT_EQ(r.l_inverse[kRho].coefficient(i), r.l_inverse[kPsi].negate_variable().coefficient(i));
}

TEST(LFactorization, Theta12) {
  ZInstance z = z_instance(1, 2);
  EXPECT_TRUE(verify_L_factorization(z.cp, z.action, z.d, 8).ok());
}

TEST(Linear, BareissAndInterpolation) {
  std::vector<std::vector<BigInt>> m{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}};
  EXPECT_EQ(bareiss_determinant(m), 6);
  std::vector<std::vector<BigInt>> singular{{1, 2}, {2, 4}};
  EXPECT_EQ(bareiss_determinant(singular), 0);
  std::vector<BigInt> xs{0, 1, 2, 3}, ys;
  IntPolynomial p({5, -1, 0, 2});
  for (const auto& x : xs) ys.push_back(p.evaluate(x));
  EXPECT_EQ(interpolate(xs, ys), p);
  EXPECT_THROW(interpolate({0, 2}, {0, 1}), VerificationFailure);
}
