#ifndef CAYLEYPAIR_WALKS_HPP_
#define CAYLEYPAIR_WALKS_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cayleypair/cayley.hpp"
#include "cayleypair/polynomial.hpp"

namespace cayleypair {

// mu^(t)(g) = counts[g] / d^t, where counts[g] is the number of length-t
// paths from the start vertex to g.
struct PathCountVector {
  std::vector<BigInt> counts;
  int t = 0;
  int d = 0;

  static PathCountVector point_mass(int num_vertices, int vertex, int d);
  BigInt total() const;
  BigRational probability(int v) const;
};

// counts'(g) = sum over k in S of counts(g k^{-1}). Throws InvalidInput on a
// size mismatch and VerificationFailure if mass is not conserved.
PathCountVector step(const PathCountVector& v, const CayleyGraph& x);

// Walk distributions for t = 0..T from `start` (default: the identity).
std::vector<PathCountVector> walk(const CayleyGraph& x, int T, int start = 0);

// (1/2) sum_g |counts(g)/d^t - 1/N| with N = number of vertices.
BigRational tv_distance(const PathCountVector& v);

struct WalkCounterexample {
  int t = 0;
  int element = 0;  // vertex of X(G, S1)
};

struct WalkReport {
  std::vector<BigRational> tv1;
  std::vector<BigRational> tv2;
  bool counts_equal = true;
  bool tv_equal = true;
  std::optional<WalkCounterexample> counterexample;
  bool ok() const { return counts_equal && tv_equal; }
};

// counts1(g) = counts2(phi_[t](g)) and equal TV for t = 0..T.
WalkReport verify_walk_equality(const CayleyGraph& x1, const CayleyGraph& x2, const StepBijections& phi,
                                int T);

struct ProjectionReport {
  bool ok = true;
  int max_t = 0;
  std::string witness;
};

// Walk on Y(G,S) from (id,0) against the walk on X(G,S) from id: equal on
// the live fiber [t], zero on the other.
ProjectionReport verify_projection(const CayleyGraph& y, const CayleyGraph& x, int T);

// Rows t, one column per element of x in vertex order, entries "p/q".
void write_distribution_csv(std::ostream& os, const CayleyGraph& x, const std::vector<PathCountVector>& walk);
void write_tv_csv(std::ostream& os, const WalkReport& r);

std::string rational_string(const BigRational& q);

}  // namespace cayleypair

#endif  // CAYLEYPAIR_WALKS_HPP_
