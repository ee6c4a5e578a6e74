#ifndef CAYLEYPAIR_MULTIGRAPH_HPP_
#define CAYLEYPAIR_MULTIGRAPH_HPP_

#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cayleypair/int_matrix.hpp"

namespace cayleypair {

// Finite undirected simple graph on vertices 0..n-1.
class SimpleGraph {
 public:
  explicit SimpleGraph(int num_vertices = 0);

  // Throws InvalidInput on loops, duplicate edges or bad endpoints.
  void add_edge(int u, int v);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(int u, int v) const;

  bool is_connected() const;
  bool is_bipartite() const;
  // Connected and 2-regular.
  bool is_polygon() const;

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::pair<int, int>> edges_;
};

struct Arc {
  int source = 0;
  int target = 0;
  int reverse = -1;  // paired opposite arc, -1 if none
  int label = 0;     // generator slot, branch index, ...
};

// Directed multigraph; loops and parallel arcs allowed. An undirected edge
// is represented as two arcs paired through `reverse`.
class DirectedMultigraph {
 public:
  explicit DirectedMultigraph(int num_vertices = 0);

  int add_vertex();
  int add_arc(int source, int target, int label = 0);
  // Adds source->target and target->source and pairs them.
  std::pair<int, int> add_edge_pair(int source, int target, int label_forward = 0,
                                    int label_backward = 0);
  void pair_arcs(int e, int f);
  // Pairs every arc u->v with an unpaired arc v->u when the choice is unique
  // (simple digraphs); throws VerificationFailure otherwise.
  void pair_reverses_by_endpoints();

  int num_vertices() const { return static_cast<int>(out_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int e) const { return arcs_[e]; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& out_arcs(int v) const { return out_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  std::vector<int> in_degrees() const;

  bool has_loops() const;
  bool is_reverse_paired() const;
  // Regular in the out-degree sense; returns -1 if out-degrees differ.
  int regular_out_degree() const;
  bool is_strongly_connected() const;
  // Two-colourable ignoring arc direction.
  bool is_bipartite() const;

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
};

// A[u][v] = number of arcs u->v; a loop contributes 1 per arc.
IntMatrix adjacency_matrix(const DirectedMultigraph& g);

// Max over sources of the directed BFS eccentricity. Throws InvalidInput if
// the graph is not strongly connected.
int graph_diameter(const DirectedMultigraph& g);
std::vector<int> bfs_distances(const DirectedMultigraph& g, int source);

using VertexNamer = std::function<std::string(int)>;

void write_dot(std::ostream& os, const SimpleGraph& g, const std::string& name,
               const VertexNamer& namer = {});
// Every arc is written, so loops and parallel arcs survive the export.
void write_dot(std::ostream& os, const DirectedMultigraph& g, const std::string& name,
               const VertexNamer& namer = {});
// CSV "src,dst,generator" with a header row.
void write_arc_csv(std::ostream& os, const DirectedMultigraph& g,
                   const VertexNamer& namer = {});

}  // namespace cayleypair

#endif  // CAYLEYPAIR_MULTIGRAPH_HPP_
