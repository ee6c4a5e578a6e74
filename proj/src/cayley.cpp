#include "cayleypair/cayley.hpp"

#include <algorithm>
#include <map>

#include "cayleypair/error.hpp"

namespace cayleypair {

namespace {

std::uint64_t vertex_key(const Permutation& g, int fiber) { return (g.key() << 1) | std::uint64_t(fiber); }

}  // namespace

int CayleyGraph::index_of(const Permutation& g, int fiber) const {
  if (g.degree() != degree_) return -1;
  auto it = index_.find(vertex_key(g, fiber));
  return it == index_.end() ? -1 : it->second;
}

int CayleyGraph::group_order() const {
  if (!with_c2_) return num_vertices();
  int count = 0;
  for (int v = 0; v < num_vertices(); ++v) {
    if (fiber_[v] == 0 || index_of(elements_[v], 0) < 0) ++count;
  }
  return count;
}

std::string CayleyGraph::vertex_name(int v) const {
  std::string s = format_cycles(elements_[v]);
  if (with_c2_) s = "(" + s + "," + std::to_string(fiber_[v]) + ")";
  return s;
}

CayleyGraph build_cayley(const std::vector<Permutation>& gens, bool with_c2, int element_cap) {
  if (gens.empty()) throw InvalidInput("Cayley graph needs at least one generator");
  const int degree = gens[0].degree();
  for (const auto& s : gens) {
    if (s.degree() != degree) throw InvalidInput("generators have different degrees");
  }
  if (degree > 15) throw InvalidInput("Cayley graphs are limited to degree 15");

  CayleyGraph x;
  x.with_c2_ = with_c2;
  x.degree_ = degree;
  x.gens_ = gens;
  const int c_step = with_c2 ? 1 : 0;
  const std::size_t vertex_cap = std::size_t(element_cap) * (with_c2 ? 2 : 1);

  auto add = [&](const Permutation& g, int c) {
    x.index_.emplace(vertex_key(g, c), x.num_vertices());
    x.elements_.push_back(g);
    x.fiber_.push_back(c);
  };
  add(Permutation::identity(degree), 0);
  std::size_t layer_begin = 0;
  while (layer_begin < x.elements_.size()) {
    const std::size_t layer_end = x.elements_.size();
    std::vector<std::pair<Permutation, int>> next;
    for (std::size_t v = layer_begin; v < layer_end; ++v) {
      for (const auto& s : gens) {
        Permutation h = x.elements_[v] * s;
        int c = (x.fiber_[v] + c_step) & 1;
        if (!x.index_.count(vertex_key(h, c))) next.emplace_back(std::move(h), c);
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& p, const auto& q) {
      if (p.first.images() != q.first.images()) return p.first.images() < q.first.images();
      return p.second < q.second;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (x.elements_.size() + next.size() > vertex_cap) {
      throw ResourceCapExceeded("Cayley graph closure exceeds the cap of " + std::to_string(element_cap) +
                                " group elements");
    }
    for (auto& [h, c] : next) add(h, c);
    layer_begin = layer_end;
  }

  const int nv = x.num_vertices();
  const int d = static_cast<int>(gens.size());
  x.graph_ = DirectedMultigraph(nv);
  for (int v = 0; v < nv; ++v) {
    for (int s = 0; s < d; ++s) {
      int w = x.index_of(x.elements_[v] * gens[s], (x.fiber_[v] + c_step) & 1);
      x.graph_.add_arc(v, w, s);
    }
  }

  // Slot s is reversed by a slot holding s^{-1}; matched greedily so the
  // pairing is an involution on slots.
  std::vector<int> partner(d, -1);
  for (int s = 0; s < d; ++s) {
    if (partner[s] >= 0) continue;
    const Permutation inv = gens[s].inverse();
    for (int r = s; r < d; ++r) {
      if (partner[r] < 0 && gens[r] == inv) {
        partner[s] = r;
        partner[r] = s;
        break;
      }
    }
  }
  for (int v = 0; v < nv; ++v) {
    for (int s = 0; s < d; ++s) {
      if (partner[s] < 0 || (!with_c2 && gens[s].is_identity())) continue;
      int e = x.graph_.out_arcs(v)[s];
      int w = x.graph_.arc(e).target;
      int f = x.graph_.out_arcs(w)[partner[s]];
      if (e < f) x.graph_.pair_arcs(e, f);
    }
  }
  return x;
}

int diameter(const CayleyGraph& x) {
  auto dist = bfs_distances(x.graph(), 0);
  int best = 0;
  for (int d : dist) {
    if (d < 0) throw InvalidInput("Cayley graph is not strongly connected");
    best = std::max(best, d);
  }
  return best;
}

CoveringMap double_cover(const CayleyGraph& y, const CayleyGraph& x) {
  if (!y.with_c2() || x.with_c2()) throw InvalidInput("double_cover needs Y(G,S) over X(G,S)");
  if (y.gens() != x.gens()) throw InvalidInput("double_cover needs the same generating set");
  CoveringMap pi;
  pi.vertex_map.resize(y.num_vertices());
  std::vector<int> fiber_size(x.num_vertices(), 0);
  for (int v = 0; v < y.num_vertices(); ++v) {
    int xv = x.index_of(y.element(v));
    if (xv < 0) throw VerificationFailure("Y vertex projects outside X");
    pi.vertex_map[v] = xv;
    ++fiber_size[xv];
  }
  for (int s : fiber_size) {
    if (s != 2) throw VerificationFailure("projection Y -> X is not two-to-one on vertices");
  }
  const auto& yg = y.graph();
  const auto& xg = x.graph();
  pi.arc_map.resize(yg.num_arcs());
  std::vector<int> arc_fiber(xg.num_arcs(), 0);
  for (int e = 0; e < yg.num_arcs(); ++e) {
    const Arc& a = yg.arc(e);
    int f = xg.out_arcs(pi.vertex_map[a.source])[a.label];
    const Arc& b = xg.arc(f);
    if (b.source != pi.vertex_map[a.source] || b.target != pi.vertex_map[a.target]) {
      throw VerificationFailure("projection Y -> X is not a graph morphism");
    }
    pi.arc_map[e] = f;
    ++arc_fiber[f];
  }
  for (int c : arc_fiber) {
    if (c != 2) throw VerificationFailure("projection Y -> X is not two-to-one on arcs");
  }
  for (int v = 0; v < y.num_vertices(); ++v) {
    std::vector<int> images;
    for (int e : yg.out_arcs(v)) images.push_back(pi.arc_map[e]);
    std::vector<int> expected = xg.out_arcs(pi.vertex_map[v]);
    std::sort(images.begin(), images.end());
    std::sort(expected.begin(), expected.end());
    if (images != expected) throw VerificationFailure("projection is not bijective on out-arcs");
  }
  return pi;
}

std::vector<int> lift_path(const CoveringMap& pi, const CayleyGraph& y, int start,
                           const std::vector<int>& x_arcs) {
  std::vector<int> lifted;
  lifted.reserve(x_arcs.size());
  int cur = start;
  for (int a : x_arcs) {
    int found = -1;
    for (int e : y.graph().out_arcs(cur)) {
      if (pi.arc_map[e] == a) {
        if (found >= 0) throw VerificationFailure("path lift is not unique");
        found = e;
      }
    }
    if (found < 0) throw VerificationFailure("path does not lift");
    lifted.push_back(found);
    cur = y.graph().arc(found).target;
  }
  return lifted;
}

bool is_isomorphism(const DirectedMultigraph& source, const DirectedMultigraph& target,
                    const std::vector<int>& map) {
  const int n = source.num_vertices();
  if (n != target.num_vertices() || source.num_arcs() != target.num_arcs()) return false;
  if (static_cast<int>(map.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : map) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (int u = 0; u < n; ++u) {
    std::vector<int> mapped, expected;
    for (int e : source.out_arcs(u)) mapped.push_back(map[source.arc(e).target]);
    for (int e : target.out_arcs(map[u])) expected.push_back(target.arc(e).target);
    std::sort(mapped.begin(), mapped.end());
    std::sort(expected.begin(), expected.end());
    if (mapped != expected) return false;
  }
  return true;
}

std::vector<int> puzzle_iso(const ContractedPuzzle& cp, const ThetaGraph& t, const CayleyGraph& y,
                            IsoFlavor flavor) {
  if (!y.with_c2()) throw InvalidInput("puzzle_iso targets Y(G,S)");
  const Permutation k = flavor == IsoFlavor::kRho ? t.rho() : t.psi();
  const int n = t.n();
  std::vector<int> map(cp.positions.size());
  for (std::size_t i = 0; i < cp.positions.size(); ++i) {
    const PuzzlePosition& f = cp.positions[i];
    int c;
    PuzzlePosition g;
    if (f.blank == 0) {
      c = 0;
      g = f;
    } else if (f.blank == t.hub()) {
      c = 1;
      g = f.after(k);
    } else {
      throw VerificationFailure("contracted puzzle vertex with the blank off the hubs");
    }
    std::vector<int> img(n);
    for (int v = 1; v <= n; ++v) img[v - 1] = g.labels[v] - 1;
    map[i] = y.index_of(Permutation(std::move(img)), c);
    if (map[i] < 0) throw VerificationFailure("puzzle position " + f.to_string() + " has no image in Y");
  }
  if (!is_isomorphism(cp.graph, y.graph(), map)) {
    throw VerificationFailure("f -> (sigma_f, c_f) does not preserve arcs");
  }
  return map;
}

std::vector<int> normalize_at_identity(const std::vector<int>& phi, const CayleyGraph& y1,
                                       const CayleyGraph& y2, bool* translated, bool* deck_swapped) {
  const int id1 = y1.index_of(Permutation::identity(y1.degree()), 0);
  const int w = phi.at(id1);
  const Permutation h_inv = y2.element(w).inverse();
  const int flip = y2.fiber(w);
  *translated = !y2.element(w).is_identity();
  *deck_swapped = flip != 0;
  std::vector<int> out(phi.size());
  for (std::size_t v = 0; v < phi.size(); ++v) {
    int u = phi[v];
    out[v] = y2.index_of(h_inv * y2.element(u), y2.fiber(u) ^ flip);
    if (out[v] < 0) throw VerificationFailure("normalization leaves the vertex set of Y(G,S2)");
  }
  return out;
}

StepBijections split_fibers(const std::vector<int>& phi, const CayleyGraph& y1, const CayleyGraph& y2,
                            const CayleyGraph& x1, const CayleyGraph& x2) {
  StepBijections s;
  s.phi0.assign(x1.num_vertices(), -1);
  s.phi1.assign(x1.num_vertices(), -1);
  for (int v = 0; v < y1.num_vertices(); ++v) {
    int w = phi[v];
    if (y1.fiber(v) != y2.fiber(w)) throw VerificationFailure("isomorphism does not preserve fibers");
    int g = x1.index_of(y1.element(v));
    int h = x2.index_of(y2.element(w));
    if (g < 0 || h < 0) throw VerificationFailure("fiber element outside X(G,S)");
    (y1.fiber(v) == 0 ? s.phi0 : s.phi1)[g] = h;
  }
  for (const auto* m : {&s.phi0, &s.phi1}) {
    std::vector<bool> hit(x2.num_vertices(), false);
    for (int h : *m) {
      if (h < 0 || hit[h]) throw VerificationFailure("step map is not a bijection of G");
      hit[h] = true;
    }
  }
  return s;
}

nlohmann::json to_json(const StepBijections& s, const CayleyGraph& x1, const CayleyGraph& x2) {
  nlohmann::json j;
  nlohmann::json dom = nlohmann::json::array(), p0 = nlohmann::json::array(), p1 = nlohmann::json::array();
  for (int g = 0; g < x1.num_vertices(); ++g) {
    dom.push_back(format_cycles(x1.element(g)));
    p0.push_back(format_cycles(x2.element(s.phi0[g])));
    p1.push_back(format_cycles(x2.element(s.phi1[g])));
  }
  j["elements"] = dom;
  j["phi0"] = p0;
  j["phi1"] = p1;
  j["normalized_by_translation"] = s.translated;
  j["normalized_by_deck"] = s.deck_swapped;
  return j;
}

}  // namespace cayleypair
