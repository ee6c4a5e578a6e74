#ifndef CAYLEYPAIR_CAYLEY_HPP_
#define CAYLEYPAIR_CAYLEY_HPP_

#include <string>
#include <unordered_map>
#include <vector>

#include "cayleypair/multigraph.hpp"
#include "cayleypair/perm.hpp"
#include "cayleypair/puzzle.hpp"
#include "cayleypair/theta.hpp"
#include "json.hpp"

namespace cayleypair {

inline constexpr int kDefaultElementCap = 5040;

// X(G, S) or, with the C2 factor, Y(G, S) = Cay(G x C2, S x {1}). The
// vertex set is the closure of the identity; vertex i is
// (element(i), fiber(i)). out_arcs(v)[s] is the arc for generator slot s.
class CayleyGraph {
 public:
  bool with_c2() const { return with_c2_; }
  int degree() const { return degree_; }
  const std::vector<Permutation>& gens() const { return gens_; }
  int num_vertices() const { return static_cast<int>(elements_.size()); }
  const Permutation& element(int v) const { return elements_[v]; }
  int fiber(int v) const { return fiber_[v]; }
  // -1 if absent.
  int index_of(const Permutation& g, int fiber = 0) const;
  const DirectedMultigraph& graph() const { return graph_; }
  int target(int v, int slot) const { return graph_.arc(graph_.out_arcs(v)[slot]).target; }
  // Number of distinct group elements (|G|, also for Y).
  int group_order() const;
  std::string vertex_name(int v) const;

 private:
  friend CayleyGraph build_cayley(const std::vector<Permutation>&, bool, int);
  bool with_c2_ = false;
  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elements_;
  std::vector<int> fiber_;
  std::unordered_map<std::uint64_t, int> index_;
  DirectedMultigraph graph_;
};

// Vertices ordered by BFS layer, lexicographically (one-line form, then
// fiber) within a layer. An arc and its reverse use slots s and s^{-1}; an
// identity slot in X gives an unpaired loop. Throws ResourceCapExceeded if
// more than element_cap group elements are reached.
CayleyGraph build_cayley(const std::vector<Permutation>& gens, bool with_c2,
                         int element_cap = kDefaultElementCap);

// BFS eccentricity of the identity. Left translations are automorphisms,
// so this is the diameter of the (strongly connected) closure.
int diameter(const CayleyGraph& x);

struct CoveringMap {
  std::vector<int> vertex_map;  // Y vertex -> X vertex
  std::vector<int> arc_map;     // Y arc -> X arc
};

// pi(g, c) = g; the arc for slot s maps to the X arc for slot s. Throws
// VerificationFailure unless pi is a two-to-one graph morphism that is
// bijective on out-arcs.
CoveringMap double_cover(const CayleyGraph& y, const CayleyGraph& x);
// Unique lift of an X arc sequence starting at Y vertex `start`.
std::vector<int> lift_path(const CoveringMap& pi, const CayleyGraph& y, int start,
                           const std::vector<int>& x_arcs);

enum class IsoFlavor { kRho, kPsi };

// f -> (sigma_f, c_f) into Y(G, S1) (rho) or Y(G, S2) (psi). The result
// maps contracted-puzzle vertices to Y vertices. Throws VerificationFailure
// unless it is a bijection on vertices and arcs.
std::vector<int> puzzle_iso(const ContractedPuzzle& cp, const ThetaGraph& t, const CayleyGraph& y,
                            IsoFlavor flavor);

// Checks that `map` (source vertex -> target vertex) is a digraph
// isomorphism; arcs are compared as multisets per vertex pair.
bool is_isomorphism(const DirectedMultigraph& source, const DirectedMultigraph& target,
                    const std::vector<int>& map);

// phi0(g) and phi1(g) for phi(g, c) = (phi_c(g), c). Indices refer to the
// vertex orders of X(G, S1) (domain) and X(G, S2) (values).
struct StepBijections {
  std::vector<int> phi0;
  std::vector<int> phi1;
  bool translated = false;  // normalization used a left translation
  bool deck_swapped = false;
};

// Post-composes an isomorphism Y1 -> Y2 with a left translation and, if
// needed, the deck transformation so that (id, 0) maps to (id, 0).
std::vector<int> normalize_at_identity(const std::vector<int>& phi, const CayleyGraph& y1,
                                       const CayleyGraph& y2, bool* translated, bool* deck_swapped);

// Splits a fiber-preserving Y1 -> Y2 isomorphism into (phi0, phi1).
StepBijections split_fibers(const std::vector<int>& phi, const CayleyGraph& y1, const CayleyGraph& y2,
                            const CayleyGraph& x1, const CayleyGraph& x2);

nlohmann::json to_json(const StepBijections& s, const CayleyGraph& x1, const CayleyGraph& x2);

}  // namespace cayleypair

#endif  // CAYLEYPAIR_CAYLEY_HPP_
