#include "cayleypair/instance.hpp"

#include "cayleypair/error.hpp"

namespace cayleypair {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t predicted_group_order(GroupTag g, int n) {
  return g == GroupTag::kSymmetric ? factorial(n) : factorial(n) / 2;
}

PairInstance build_pair_instance(int a, int b, int element_cap) {
  check_pair_constructible(a, b);
  ThetaGraph t = ThetaGraph::build(a, b);
  GeneratingPair pair = sigma_tau_sets(t);
  if (predicted_group_order(pair.group_tag, pair.n) > element_cap) {
    throw ResourceCapExceeded("|" + group_name(pair.group_tag, pair.n) + "| exceeds the element cap of " +
                              std::to_string(element_cap));
  }
  CayleyGraph x1 = build_cayley(pair.s1, false, element_cap);
  CayleyGraph x2 = build_cayley(pair.s2, false, element_cap);
  const auto order = predicted_group_order(pair.group_tag, pair.n);
  if (x1.num_vertices() != order || x2.num_vertices() != order) {
    throw VerificationFailure("S1 or S2 does not generate " + group_name(pair.group_tag, pair.n));
  }
  return PairInstance{std::move(t), std::move(pair), std::move(x1), std::move(x2)};
}

CoverInstance build_cover_instance(const PairInstance& p, int element_cap) {
  CoverInstance c{build_contracted_puzzle(p.theta, natural_scope(p.pair.a, p.pair.b)),
                  build_cayley(p.pair.s1, true, element_cap),
                  build_cayley(p.pair.s2, true, element_cap),
                  {},
                  {},
                  {}};
  c.rho_iso = puzzle_iso(c.puzzle, p.theta, c.y1, IsoFlavor::kRho);
  c.psi_iso = puzzle_iso(c.puzzle, p.theta, c.y2, IsoFlavor::kPsi);

  // phi = (psi-iso) o (rho-iso)^{-1}
  std::vector<int> phi(c.y1.num_vertices());
  for (std::size_t f = 0; f < c.rho_iso.size(); ++f) phi[c.rho_iso[f]] = c.psi_iso[f];
  bool translated = false, deck = false;
  phi = normalize_at_identity(phi, c.y1, c.y2, &translated, &deck);
  if (!is_isomorphism(c.y1.graph(), c.y2.graph(), phi)) {
    throw VerificationFailure("normalized phi is not an isomorphism Y(G,S1) -> Y(G,S2)");
  }
  c.steps = split_fibers(phi, c.y1, c.y2, p.x1, p.x2);
  c.steps.translated = translated;
  c.steps.deck_swapped = deck;
  return c;
}

}  // namespace cayleypair
