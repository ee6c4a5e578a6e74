#ifndef CAYLEYPAIR_PUZZLE_HPP_
#define CAYLEYPAIR_PUZZLE_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayleypair/multigraph.hpp"
#include "cayleypair/perm.hpp"
#include "cayleypair/theta.hpp"

namespace cayleypair {

// f: V -> {0..n}; labels[v] = f(v), label 0 is the blank.
struct PuzzlePosition {
  std::vector<int> labels;
  int blank = 0;

  static PuzzlePosition from_labels(std::vector<int> labels);
  static PuzzlePosition initial(int num_vertices);  // f0(v_i) = i

  // f o p, i.e. (f o p)(v) = f(p(v)).
  PuzzlePosition after(const Permutation& p) const;
  // f o (v, w) for an adjacent pair with the blank at v or w.
  PuzzlePosition moved(int v, int w) const;
  std::uint64_t key() const;
  std::string to_string() const;  // "[0,1,2,3]"

  bool operator==(const PuzzlePosition&) const = default;
};

inline constexpr int kDefaultPuzzleVertexCap = 9;

// The full move graph puz(G). Position i is the permutation of Lehmer rank
// i, so a position never needs to be looked up through a hash table.
class PuzzleGraph {
 public:
  int num_graph_vertices() const { return k_; }
  int num_positions() const { return count_; }
  PuzzlePosition position(int i) const;
  int index_of(const PuzzlePosition& p) const;

  // Each undirected move edge once, smaller index first.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::vector<std::vector<int>> adjacency() const;
  int component(int i) const { return component_[i]; }
  int num_components() const { return num_components_; }

 private:
  friend PuzzleGraph build_puz(const SimpleGraph& g, int vertex_cap);
  int k_ = 0;
  int count_ = 0;
  std::vector<std::uint8_t> labels_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> component_;
  int num_components_ = 0;
};

// Throws ResourceCapExceeded above vertex_cap vertices, InvalidInput if g is
// disconnected.
PuzzleGraph build_puz(const SimpleGraph& g, int vertex_cap = kDefaultPuzzleVertexCap);

std::int64_t lehmer_rank(const std::vector<int>& perm);
std::vector<int> lehmer_unrank(std::int64_t rank, int k);

enum class WilsonPrediction { kConnected, kTwoComponents, kException };
std::string to_string(WilsonPrediction w);
// Exception covers polygons, graphs isomorphic to theta_{2,1}, and graphs
// outside the theorem's hypothesis (fewer than 3 vertices or not
// 2-connected).
WilsonPrediction components_expected(const SimpleGraph& g);
bool is_biconnected(const SimpleGraph& g);
bool isomorphic_brute_force(const SimpleGraph& g, const SimpleGraph& h);

struct Contraction {
  DirectedMultigraph graph;  // arc label = length of the spliced chain
  std::vector<int> original; // contracted vertex -> input vertex
};

// Eliminates every degree-2 vertex by splicing its two edges. Throws
// InvalidInput if some component is a bare cycle.
Contraction path_contraction(const std::vector<std::vector<int>>& adjacency);
Contraction path_contraction(const SimpleGraph& g);
Contraction path_contraction(const PuzzleGraph& pg);

enum class PuzzleScope { kFull, kInitialComponent };

// Contracted puzzle of a theta graph, built directly: vertices are the
// positions with the blank at v0 or v_{a+1}; from blank-at-v0 positions
// the arcs are f -> f sigma_{p_k}, from blank-at-v_{a+1} positions
// f -> f rho sigma_{p_k} rho. Arc label k in {0, 1, 2}.
struct ContractedPuzzle {
  int a = 0;
  int b = 0;
  PuzzleScope scope = PuzzleScope::kFull;
  std::vector<PuzzlePosition> positions;
  DirectedMultigraph graph;

  int index_of(const PuzzlePosition& p) const;  // -1 if absent
  void reindex();

 private:
  std::unordered_map<std::uint64_t, int> index_;
};

ContractedPuzzle build_contracted_puzzle(const ThetaGraph& t, PuzzleScope scope);
PuzzleScope natural_scope(int a, int b);  // full iff a+b odd

// K = {id, rho, psi, rho psi} encoded 0..3 so that composition is XOR.
inline constexpr int kRho = 1;
inline constexpr int kPsi = 2;
inline constexpr int kRhoPsi = 3;
std::string k_element_name(int k);

enum class KSubgroup { kTrivial, kRho, kPsi, kRhoPsi, kFull };
std::vector<int> elements(KSubgroup h);
std::string to_string(KSubgroup h);

// f -> f k on vertices and arcs, for all four k.
struct KAction {
  std::array<std::vector<int>, 4> vertex_image;
  std::array<std::vector<int>, 4> arc_image;
};
// Throws VerificationFailure if an element does not map the vertex set or
// the arc set to itself.
KAction k_action(const ContractedPuzzle& cp, const ThetaGraph& t);

struct Orbits {
  std::vector<int> vertex_orbit;  // vertex -> orbit id, ordered by first member
  std::vector<int> arc_orbit;
  int num_vertex_orbits = 0;
  int num_arc_orbits = 0;
};
// Throws VerificationFailure unless H acts freely on vertices.
Orbits k_action_orbits(const KAction& action, KSubgroup h);

void write_dot(std::ostream& os, const ContractedPuzzle& cp);
// Binary cache; load throws InvalidInput on a malformed or mismatched file.
void save_cache(const ContractedPuzzle& cp, const std::string& path);
ContractedPuzzle load_cache(const std::string& path, int a, int b, PuzzleScope scope);

}  // namespace cayleypair

#endif  // CAYLEYPAIR_PUZZLE_HPP_
