#ifndef CAYLEYPAIR_THETA_HPP_
#define CAYLEYPAIR_THETA_HPP_

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "cayleypair/multigraph.hpp"
#include "cayleypair/perm.hpp"
#include "json.hpp"

namespace cayleypair {

// Two hubs v0 and v_{a+1} joined by branches of lengths a+1, a+1 and b+1.
// Vertex v_i has index i; n = 2a+b+1 so there are n+1 vertices.
class ThetaGraph {
 public:
  // Throws InvalidInput unless a >= 1 and b >= 0.
  static ThetaGraph build(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }
  int n() const { return 2 * a_ + b_ + 1; }
  int num_vertices() const { return n() + 1; }
  int hub() const { return a_ + 1; }
  const SimpleGraph& graph() const { return graph_; }

  // 180 degree rotation and vertical flip, as permutations of {0..n}.
  Permutation rho() const;
  Permutation psi() const;

  // p1 = (v0, v1, ..., v_{a+1}), p2 = (v0, v_{2a+2}, ..., v_n, v_{a+1}),
  // p3 = (v0, v_{2a+1}, ..., v_{a+1}). For b = 0, p2 = (v0, v_{a+1}).
  std::array<std::vector<int>, 3> paths() const;

  bool is_automorphism(const Permutation& p) const;

 private:
  ThetaGraph(int a, int b, SimpleGraph g) : a_(a), b_(b), graph_(std::move(g)) {}
  int a_;
  int b_;
  SimpleGraph graph_;
};

// Cycle v_{p0} -> v_{p1} -> ... -> v_{pl} -> v_{p0} on {0..degree-1}: the
// blank walking along the path pushes every label one step back.
Permutation path_permutation(const std::vector<int>& path, int degree);

enum class CongruenceCase {
  kOddSum,          // a + b odd
  kEvenA_B0mod4,    // a even, b = 0 mod 4
  kEvenA_B2mod4,    // a even, b = 2 mod 4
  kOddA_B1mod4,     // a odd, b = 1 mod 4
  kOddA_B3mod4,     // a odd, b = 3 mod 4
};
CongruenceCase classify(int a, int b);
std::string to_string(CongruenceCase c);

enum class GroupTag { kSymmetric, kAlternating };
std::string group_name(GroupTag g, int n);

// Group generated by S1 (which = 1) or S2 (which = 2) in the given case.
GroupTag generated_group(CongruenceCase c, int which);
// Parity every element of S1 / S2 must have; kOddSum has no constraint and
// returns false.
bool lemma_parity(CongruenceCase c, int which, Parity* out);

struct GeneratorSets {
  std::vector<Permutation> s1;  // sigma_1, sigma_2, sigma_3
  std::vector<Permutation> s2;  // tau_1, tau_2, tau_3
};

// sigma_k, tau_k from sigma_{p_k} rho and sigma_{p_k} psi restricted to
// v1..vn, for any (a, b). Throws VerificationFailure if v0 is not fixed.
GeneratorSets raw_generators(const ThetaGraph& t);

struct GeneratingPair {
  int a = 0;
  int b = 0;
  int n = 0;
  CongruenceCase case_tag = CongruenceCase::kOddSum;
  GroupTag group_tag = GroupTag::kSymmetric;
  std::vector<Permutation> s1;
  std::vector<Permutation> s2;
};

// Only for a + b odd with (a, b) != (2, 1), or a even with b = 0 mod 4.
// Throws InvalidInput otherwise, and VerificationFailure if an element has
// the wrong parity.
GeneratingPair sigma_tau_sets(const ThetaGraph& t);
// Validates (a, b) without building anything; throws InvalidInput.
void check_pair_constructible(int a, int b);

nlohmann::json to_json(const GeneratingPair& p);
void write_dot(std::ostream& os, const ThetaGraph& t);

}  // namespace cayleypair

#endif  // CAYLEYPAIR_THETA_HPP_
