#include "cayleypair/multigraph.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "cayleypair/error.hpp"

namespace cayleypair {

SimpleGraph::SimpleGraph(int num_vertices) : adjacency_(num_vertices) {}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    throw InvalidInput("edge endpoint out of range");
  }
  if (u == v) throw InvalidInput("simple graph cannot have loops");
  if (has_edge(u, v)) throw InvalidInput("duplicate edge");
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool SimpleGraph::has_edge(int u, int v) const {
  const auto& n = adjacency_[u];
  return std::find(n.begin(), n.end(), v) != n.end();
}

bool SimpleGraph::is_connected() const {
  if (num_vertices() == 0) return true;
  std::vector<bool> seen(num_vertices(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == num_vertices();
}

bool SimpleGraph::is_bipartite() const {
  std::vector<int> colour(num_vertices(), -1);
  for (int s = 0; s < num_vertices(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adjacency_[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool SimpleGraph::is_polygon() const {
  if (num_vertices() < 3 || !is_connected()) return false;
  for (int v = 0; v < num_vertices(); ++v) {
    if (degree(v) != 2) return false;
  }
  return true;
}

DirectedMultigraph::DirectedMultigraph(int num_vertices) : out_(num_vertices) {}

int DirectedMultigraph::add_vertex() {
  out_.emplace_back();
  return num_vertices() - 1;
}

int DirectedMultigraph::add_arc(int source, int target, int label) {
  if (source < 0 || target < 0 || source >= num_vertices() || target >= num_vertices()) {
    throw InvalidInput("arc endpoint out of range");
  }
  arcs_.push_back(Arc{source, target, -1, label});
  int id = num_arcs() - 1;
  out_[source].push_back(id);
  return id;
}

std::pair<int, int> DirectedMultigraph::add_edge_pair(int source, int target,
                                                      int label_forward,
                                                      int label_backward) {
  int e = add_arc(source, target, label_forward);
  int f = add_arc(target, source, label_backward);
  pair_arcs(e, f);
  return {e, f};
}

void DirectedMultigraph::pair_arcs(int e, int f) {
  if (arcs_[e].source != arcs_[f].target || arcs_[e].target != arcs_[f].source) {
    throw InvalidInput("paired arcs must be opposite");
  }
  arcs_[e].reverse = f;
  arcs_[f].reverse = e;
}

void DirectedMultigraph::pair_reverses_by_endpoints() {
  std::map<std::pair<int, int>, std::vector<int>> by_endpoints;
  for (int e = 0; e < num_arcs(); ++e) {
    if (arcs_[e].reverse == -1) {
      by_endpoints[{arcs_[e].source, arcs_[e].target}].push_back(e);
    }
  }
  for (auto& [key, list] : by_endpoints) {
    if (key.first > key.second) continue;
    auto it = by_endpoints.find({key.second, key.first});
    if (key.first == key.second) {
      throw VerificationFailure("cannot pair loops by endpoints");
    }
    if (it == by_endpoints.end() || it->second.size() != list.size() || list.size() != 1) {
      throw VerificationFailure("arcs cannot be paired uniquely by endpoints");
    }
    pair_arcs(list[0], it->second[0]);
  }
}

std::vector<int> DirectedMultigraph::in_degrees() const {
  std::vector<int> in(num_vertices(), 0);
  for (const Arc& a : arcs_) ++in[a.target];
  return in;
}

bool DirectedMultigraph::has_loops() const {
  return std::any_of(arcs_.begin(), arcs_.end(),
                     [](const Arc& a) { return a.source == a.target; });
}

bool DirectedMultigraph::is_reverse_paired() const {
  return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.reverse >= 0; });
}

int DirectedMultigraph::regular_out_degree() const {
  if (num_vertices() == 0) return 0;
  int d = out_degree(0);
  for (int v = 1; v < num_vertices(); ++v) {
    if (out_degree(v) != d) return -1;
  }
  return d;
}

std::vector<int> bfs_distances(const DirectedMultigraph& g, int source) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : g.out_arcs(v)) {
      int w = g.arc(e).target;
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

bool DirectedMultigraph::is_strongly_connected() const {
  if (num_vertices() == 0) return true;
  auto forward = bfs_distances(*this, 0);
  if (std::find(forward.begin(), forward.end(), -1) != forward.end()) return false;
  DirectedMultigraph reversed(num_vertices());
  for (const Arc& a : arcs_) reversed.add_arc(a.target, a.source);
  auto backward = bfs_distances(reversed, 0);
  return std::find(backward.begin(), backward.end(), -1) == backward.end();
}

bool DirectedMultigraph::is_bipartite() const {
  std::vector<std::vector<int>> und(num_vertices());
  for (const Arc& a : arcs_) {
    if (a.source == a.target) return false;
    und[a.source].push_back(a.target);
    und[a.target].push_back(a.source);
  }
  std::vector<int> colour(num_vertices(), -1);
  for (int s = 0; s < num_vertices(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : und[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

IntMatrix adjacency_matrix(const DirectedMultigraph& g) {
  IntMatrix a = IntMatrix::square(g.num_vertices());
  for (const Arc& arc : g.arcs()) a(arc.source, arc.target) += 1;
  return a;
}

int graph_diameter(const DirectedMultigraph& g) {
  int diam = 0;
  for (int s = 0; s < g.num_vertices(); ++s) {
    auto dist = bfs_distances(g, s);
    for (int d : dist) {
      if (d < 0) throw InvalidInput("diameter: graph is not strongly connected");
      diam = std::max(diam, d);
    }
  }
  return diam;
}

namespace {

std::string name_of(const VertexNamer& namer, int v) {
  return namer ? namer(v) : std::to_string(v);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

void write_dot(std::ostream& os, const SimpleGraph& g, const std::string& name,
               const VertexNamer& namer) {
  os << "graph " << quoted(name) << " {\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    os << "  " << v << " [label=" << quoted(name_of(namer, v)) << "];\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

void write_dot(std::ostream& os, const DirectedMultigraph& g, const std::string& name,
               const VertexNamer& namer) {
  os << "digraph " << quoted(name) << " {\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    os << "  " << v << " [label=" << quoted(name_of(namer, v)) << "];\n";
  }
  for (const Arc& a : g.arcs()) {
    os << "  " << a.source << " -> " << a.target << " [label=" << a.label << "];\n";
  }
  os << "}\n";
}

void write_arc_csv(std::ostream& os, const DirectedMultigraph& g, const VertexNamer& namer) {
  os << "src,dst,generator\n";
  for (const Arc& a : g.arcs()) {
    os << quoted(name_of(namer, a.source)) << ',' << quoted(name_of(namer, a.target)) << ','
       << a.label << '\n';
  }
}

}  // namespace cayleypair
