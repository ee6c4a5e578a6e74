#ifndef CAYLEYPAIR_INSTANCE_HPP_
#define CAYLEYPAIR_INSTANCE_HPP_

#include <optional>

#include "cayleypair/cayley.hpp"
#include "cayleypair/puzzle.hpp"
#include "cayleypair/theta.hpp"

namespace cayleypair {

// Everything derived from one constructible (a, b).
struct PairInstance {
  ThetaGraph theta;
  GeneratingPair pair;
  CayleyGraph x1;
  CayleyGraph x2;
};

// Validates (a, b) first; throws InvalidInput or ResourceCapExceeded before
// building anything large.
PairInstance build_pair_instance(int a, int b, int element_cap = kDefaultElementCap);

// Contracted puzzle in the scope the isomorphism theorem uses, both Y
// graphs, both isomorphisms and the normalized step maps.
struct CoverInstance {
  ContractedPuzzle puzzle;
  CayleyGraph y1;
  CayleyGraph y2;
  std::vector<int> rho_iso;  // puzzle vertex -> Y1 vertex
  std::vector<int> psi_iso;  // puzzle vertex -> Y2 vertex
  StepBijections steps;
};

CoverInstance build_cover_instance(const PairInstance& p, int element_cap = kDefaultElementCap);

// n! for small n.
std::int64_t factorial(int n);
// |G| predicted by the group tag.
std::int64_t predicted_group_order(GroupTag g, int n);

}  // namespace cayleypair

#endif  // CAYLEYPAIR_INSTANCE_HPP_
