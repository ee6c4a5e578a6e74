#include "cayleypair/puzzle.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <fstream>
#include <numeric>

#include "cayleypair/error.hpp"

namespace cayleypair {

PuzzlePosition PuzzlePosition::from_labels(std::vector<int> labels) {
  PuzzlePosition p;
  const int k = static_cast<int>(labels.size());
  std::vector<bool> seen(k, false);
  for (int v = 0; v < k; ++v) {
    int l = labels[v];
    if (l < 0 || l >= k || seen[l]) throw InvalidInput("puzzle position is not a bijection");
    seen[l] = true;
    if (l == 0) p.blank = v;
  }
  p.labels = std::move(labels);
  return p;
}

PuzzlePosition PuzzlePosition::initial(int num_vertices) {
  std::vector<int> l(num_vertices);
  std::iota(l.begin(), l.end(), 0);
  return from_labels(std::move(l));
}

PuzzlePosition PuzzlePosition::after(const Permutation& p) const {
  PuzzlePosition g;
  const int k = static_cast<int>(labels.size());
  g.labels.resize(k);
  for (int v = 0; v < k; ++v) {
    g.labels[v] = labels[p(v)];
    if (g.labels[v] == 0) g.blank = v;
  }
  return g;
}

PuzzlePosition PuzzlePosition::moved(int v, int w) const {
  if (blank != v && blank != w) throw InvalidInput("move must involve the blank");
  PuzzlePosition g = *this;
  std::swap(g.labels[v], g.labels[w]);
  g.blank = blank == v ? w : v;
  return g;
}

std::uint64_t PuzzlePosition::key() const {
  std::uint64_t k = 0;
  for (int l : labels) k = (k << 4) | static_cast<std::uint64_t>(l);
  return k;
}

std::string PuzzlePosition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(labels[i]);
  }
  return s + "]";
}

std::int64_t lehmer_rank(const std::vector<int>& perm) {
  const int k = static_cast<int>(perm.size());
  std::int64_t rank = 0;
  for (int i = 0; i < k; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < k; ++j) smaller += perm[j] < perm[i];
    rank = rank * (k - i) + smaller;
  }
  return rank;
}

std::vector<int> lehmer_unrank(std::int64_t rank, int k) {
  std::vector<int> digits(k);
  for (int i = k - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(rank % (k - i));
    rank /= (k - i);
  }
  std::vector<int> pool(k);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out(k);
  for (int i = 0; i < k; ++i) {
    out[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return out;
}

PuzzlePosition PuzzleGraph::position(int i) const {
  std::vector<int> l(labels_.begin() + std::size_t(i) * k_, labels_.begin() + std::size_t(i + 1) * k_);
  return PuzzlePosition::from_labels(std::move(l));
}

int PuzzleGraph::index_of(const PuzzlePosition& p) const {
  return static_cast<int>(lehmer_rank(p.labels));
}

std::vector<std::vector<int>> PuzzleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(count_);
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<int> parent;
};

}  // namespace

PuzzleGraph build_puz(const SimpleGraph& g, int vertex_cap) {
  const int k = g.num_vertices();
  if (k > vertex_cap) {
    throw ResourceCapExceeded("puzzle graph on " + std::to_string(k) + " vertices exceeds the cap of " +
                              std::to_string(vertex_cap));
  }
  if (!g.is_connected()) throw InvalidInput("puzzle graph needs a connected graph");
  PuzzleGraph pg;
  pg.k_ = k;
  std::int64_t count = 1;
  for (int i = 2; i <= k; ++i) count *= i;
  pg.count_ = static_cast<int>(count);
  pg.labels_.resize(std::size_t(count) * k);

  std::vector<int> l(k);
  std::iota(l.begin(), l.end(), 0);
  int idx = 0;
  do {
    std::copy(l.begin(), l.end(), pg.labels_.begin() + std::size_t(idx) * k);
    ++idx;
  } while (std::next_permutation(l.begin(), l.end()));

  UnionFind uf(pg.count_);
  for (int i = 0; i < pg.count_; ++i) {
    PuzzlePosition f = pg.position(i);
    for (int w : g.neighbors(f.blank)) {
      int j = pg.index_of(f.moved(f.blank, w));
      if (i < j) pg.edges_.emplace_back(i, j);
      uf.unite(i, j);
    }
  }
  std::sort(pg.edges_.begin(), pg.edges_.end());
  pg.component_.assign(pg.count_, -1);
  std::vector<int> root_id(pg.count_, -1);
  for (int i = 0; i < pg.count_; ++i) {
    int r = uf.find(i);
    if (root_id[r] == -1) root_id[r] = pg.num_components_++;
    pg.component_[i] = root_id[r];
  }
  return pg;
}

std::string to_string(WilsonPrediction w) {
  switch (w) {
    case WilsonPrediction::kConnected: return "connected";
    case WilsonPrediction::kTwoComponents: return "two_components";
    case WilsonPrediction::kException: return "exception";
  }
  return "?";
}

bool is_biconnected(const SimpleGraph& g) {
  const int n = g.num_vertices();
  if (n < 3 || !g.is_connected()) return false;
  for (int cut = 0; cut < n; ++cut) {
    std::vector<bool> seen(n, false);
    seen[cut] = true;
    int start = cut == 0 ? 1 : 0;
    std::vector<int> stack{start};
    seen[start] = true;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != n - 1) return false;
  }
  return true;
}

bool isomorphic_brute_force(const SimpleGraph& g, const SimpleGraph& h) {
  const int n = g.num_vertices();
  if (n != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
  if (n > 10) throw ResourceCapExceeded("brute-force isomorphism is limited to 10 vertices");
  std::vector<int> dg(n), dh(n);
  for (int v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  std::vector<int> sg = dg, sh = dh;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return false;
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = dg[v] == dh[m[v]];
    for (auto [u, v] : g.edges()) {
      if (!ok) break;
      ok = h.has_edge(m[u], m[v]);
    }
    if (ok) return true;
  } while (std::next_permutation(m.begin(), m.end()));
  return false;
}

WilsonPrediction components_expected(const SimpleGraph& g) {
  if (!is_biconnected(g) || g.is_polygon()) return WilsonPrediction::kException;
  if (isomorphic_brute_force(g, ThetaGraph::build(2, 1).graph())) return WilsonPrediction::kException;
  return g.is_bipartite() ? WilsonPrediction::kTwoComponents : WilsonPrediction::kConnected;
}

Contraction path_contraction(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  Contraction out;
  std::vector<int> new_id(n, -1);
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() != 2) {
      new_id[v] = out.graph.add_vertex();
      out.original.push_back(v);
    }
  }
  std::vector<bool> covered(n, false);
  for (int h = 0; h < n; ++h) {
    if (new_id[h] < 0) continue;
    for (int w : adj[h]) {
      int prev = h, cur = w, length = 1;
      while (new_id[cur] < 0) {
        covered[cur] = true;
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++length;
      }
      // The chain is met once from each end; keep the lexicographically
      // smaller end and add both directions there.
      if (std::make_pair(h, w) < std::make_pair(cur, prev)) {
        out.graph.add_edge_pair(new_id[h], new_id[cur], length, length);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (new_id[v] < 0 && !covered[v]) {
      throw InvalidInput("path contraction of a bare cycle collapses to a single loop");
    }
  }
  return out;
}

Contraction path_contraction(const SimpleGraph& g) {
  std::vector<std::vector<int>> adj(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) adj[v] = g.neighbors(v);
  return path_contraction(adj);
}

Contraction path_contraction(const PuzzleGraph& pg) { return path_contraction(pg.adjacency()); }

int ContractedPuzzle::index_of(const PuzzlePosition& p) const {
  auto it = index_.find(p.key());
  return it == index_.end() ? -1 : it->second;
}

void ContractedPuzzle::reindex() {
  index_.clear();
  index_.reserve(positions.size() * 2);
  for (std::size_t i = 0; i < positions.size(); ++i) index_.emplace(positions[i].key(), static_cast<int>(i));
}

PuzzleScope natural_scope(int a, int b) {
  return (a + b) % 2 == 1 ? PuzzleScope::kFull : PuzzleScope::kInitialComponent;
}

ContractedPuzzle build_contracted_puzzle(const ThetaGraph& t, PuzzleScope scope) {
  const int k = t.num_vertices();
  if (k > 16) throw ResourceCapExceeded("contracted puzzle keys need at most 16 vertices");
  const Permutation rho = t.rho();
  std::array<Permutation, 3> from_v0, from_hub;
  const auto paths = t.paths();
  for (int i = 0; i < 3; ++i) {
    from_v0[i] = path_permutation(paths[i], k);
    from_hub[i] = rho * from_v0[i] * rho;
  }

  ContractedPuzzle cp;
  cp.a = t.a();
  cp.b = t.b();
  cp.scope = scope;
  std::unordered_map<std::uint64_t, int> index;
  std::deque<int> queue;
  auto visit = [&](const PuzzlePosition& p) {
    auto [it, inserted] = index.emplace(p.key(), static_cast<int>(cp.positions.size()));
    if (inserted) {
      cp.positions.push_back(p);
      cp.graph.add_vertex();
      queue.push_back(it->second);
    }
    return it->second;
  };
  auto explore = [&] {
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      const PuzzlePosition f = cp.positions[i];
      const auto& moves = f.blank == 0 ? from_v0 : from_hub;
      for (int m = 0; m < 3; ++m) {
        int j = visit(f.after(moves[m]));
        cp.graph.add_arc(i, j, m);
      }
    }
  };
  visit(PuzzlePosition::initial(k));
  explore();

  if (scope == PuzzleScope::kFull) {
    for (int blank : {0, t.hub()}) {
      std::vector<int> rest(k - 1);
      std::iota(rest.begin(), rest.end(), 1);
      do {
        std::vector<int> labels;
        labels.reserve(k);
        int r = 0;
        for (int v = 0; v < k; ++v) labels.push_back(v == blank ? 0 : rest[r++]);
        PuzzlePosition p = PuzzlePosition::from_labels(std::move(labels));
        if (!index.count(p.key())) {
          visit(p);
          explore();
        }
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
  }
  cp.graph.pair_reverses_by_endpoints();
  cp.reindex();
  return cp;
}

std::string k_element_name(int k) {
  static const char* names[] = {"id", "rho", "psi", "rho*psi"};
  return names[k & 3];
}

std::vector<int> elements(KSubgroup h) {
  switch (h) {
    case KSubgroup::kTrivial: return {0};
    case KSubgroup::kRho: return {0, kRho};
    case KSubgroup::kPsi: return {0, kPsi};
    case KSubgroup::kRhoPsi: return {0, kRhoPsi};
    case KSubgroup::kFull: return {0, kRho, kPsi, kRhoPsi};
  }
  return {0};
}

std::string to_string(KSubgroup h) {
  switch (h) {
    case KSubgroup::kTrivial: return "{id}";
    case KSubgroup::kRho: return "<rho>";
    case KSubgroup::kPsi: return "<psi>";
    case KSubgroup::kRhoPsi: return "<rho*psi>";
    case KSubgroup::kFull: return "K";
  }
  return "?";
}

KAction k_action(const ContractedPuzzle& cp, const ThetaGraph& t) {
  const int nv = static_cast<int>(cp.positions.size());
  const std::array<Permutation, 4> elems = {Permutation::identity(t.num_vertices()), t.rho(), t.psi(),
                                            t.rho() * t.psi()};
  KAction act;
  for (int k = 0; k < 4; ++k) {
    if (!t.is_automorphism(elems[k])) throw VerificationFailure(k_element_name(k) + " is not a theta automorphism");
    auto& vi = act.vertex_image[k];
    vi.resize(nv);
    for (int v = 0; v < nv; ++v) {
      vi[v] = cp.index_of(cp.positions[v].after(elems[k]));
      if (vi[v] < 0) {
        throw VerificationFailure(k_element_name(k) + " does not preserve the contracted puzzle's vertex set");
      }
    }
    auto& ai = act.arc_image[k];
    ai.assign(cp.graph.num_arcs(), -1);
    for (int e = 0; e < cp.graph.num_arcs(); ++e) {
      const Arc& arc = cp.graph.arc(e);
      int s = vi[arc.source], d = vi[arc.target];
      for (int f : cp.graph.out_arcs(s)) {
        if (cp.graph.arc(f).target == d) {
          ai[e] = f;
          break;
        }
      }
      if (ai[e] < 0) throw VerificationFailure(k_element_name(k) + " does not preserve the move arcs");
    }
  }
  return act;
}

Orbits k_action_orbits(const KAction& action, KSubgroup h) {
  const auto elems = elements(h);
  Orbits o;
  auto run = [&](const std::array<std::vector<int>, 4>& images, std::vector<int>& orbit, int& count,
                 bool require_free) {
    const int m = static_cast<int>(images[0].size());
    orbit.assign(m, -1);
    for (int x = 0; x < m; ++x) {
      if (orbit[x] >= 0) continue;
      std::vector<int> members;
      for (int k : elems) members.push_back(images[k][x]);
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      if (require_free && members.size() != elems.size()) {
        throw VerificationFailure("subgroup " + to_string(h) + " does not act freely");
      }
      for (int y : members) orbit[y] = count;
      ++count;
    }
  };
  run(action.vertex_image, o.vertex_orbit, o.num_vertex_orbits, true);
  run(action.arc_image, o.arc_orbit, o.num_arc_orbits, false);
  return o;
}

void write_dot(std::ostream& os, const ContractedPuzzle& cp) {
  write_dot(os, cp.graph, "puz_" + std::to_string(cp.a) + "_" + std::to_string(cp.b),
            [&](int v) { return cp.positions[v].to_string(); });
}

namespace {

constexpr char kCacheMagic[4] = {'C', 'P', 'Z', '1'};

void put(std::ostream& os, std::int32_t v) { os.write(reinterpret_cast<const char*>(&v), sizeof v); }
std::int32_t get(std::istream& is) {
  std::int32_t v = 0;
  if (!is.read(reinterpret_cast<char*>(&v), sizeof v)) throw InvalidInput("truncated puzzle cache");
  return v;
}

}  // namespace

void save_cache(const ContractedPuzzle& cp, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InvalidInput("cannot write " + path);
  os.write(kCacheMagic, 4);
  const int k = cp.positions.empty() ? 0 : static_cast<int>(cp.positions[0].labels.size());
  put(os, cp.a);
  put(os, cp.b);
  put(os, static_cast<int>(cp.scope));
  put(os, k);
  put(os, static_cast<int>(cp.positions.size()));
  for (const auto& p : cp.positions) {
    for (int l : p.labels) os.put(static_cast<char>(l));
  }
  put(os, cp.graph.num_arcs());
  for (const auto& arc : cp.graph.arcs()) {
    put(os, arc.source);
    put(os, arc.target);
    put(os, arc.label);
    put(os, arc.reverse);
  }
}

ContractedPuzzle load_cache(const std::string& path, int a, int b, PuzzleScope scope) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InvalidInput("cannot read " + path);
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, kCacheMagic, 4) != 0) throw InvalidInput("not a puzzle cache");
  ContractedPuzzle cp;
  cp.a = get(is);
  cp.b = get(is);
  cp.scope = static_cast<PuzzleScope>(get(is));
  if (cp.a != a || cp.b != b || cp.scope != scope) throw InvalidInput("puzzle cache is for a different instance");
  const int k = get(is);
  const int nv = get(is);
  cp.positions.reserve(nv);
  std::vector<char> buf(k);
  for (int i = 0; i < nv; ++i) {
    if (!is.read(buf.data(), k)) throw InvalidInput("truncated puzzle cache");
    std::vector<int> labels(buf.begin(), buf.end());
    cp.positions.push_back(PuzzlePosition::from_labels(std::move(labels)));
    cp.graph.add_vertex();
  }
  const int na = get(is);
  std::vector<int> reverse(na);
  for (int e = 0; e < na; ++e) {
    int s = get(is), d = get(is), label = get(is);
    reverse[e] = get(is);
    if (s < 0 || s >= nv || d < 0 || d >= nv) throw InvalidInput("puzzle cache arc out of range");
    cp.graph.add_arc(s, d, label);
  }
  for (int e = 0; e < na; ++e) {
    if (reverse[e] > e) cp.graph.pair_arcs(e, reverse[e]);
  }
  cp.reindex();
  return cp;
}

}  // namespace cayleypair
