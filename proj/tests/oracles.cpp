#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

Perm identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm mul(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Perm cycles(const std::string& text, int n) {
  Perm p = identity(n);
  std::vector<int> cur;
  int num = 0;
  bool in_num = false;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      num = num * 10 + (ch - '0');
      in_num = true;
      continue;
    }
    if (in_num) {
      cur.push_back(num - 1);
      num = 0;
      in_num = false;
    }
    if (ch == ')') {
      for (std::size_t i = 0; i < cur.size(); ++i) p[cur[i]] = cur[(i + 1) % cur.size()];
      cur.clear();
    }
  }
  return p;
}

std::map<Perm, std::int64_t> word_counts(const std::vector<Perm>& gens, int t) {
  const int n = static_cast<int>(gens.front().size());
  std::map<Perm, std::int64_t> out;
  std::vector<int> word(t, 0);
  const int d = static_cast<int>(gens.size());
  while (true) {
    Perm g = identity(n);
    for (int k : word) g = mul(g, gens[k]);
    ++out[g];
    int i = t - 1;
    while (i >= 0 && word[i] == d - 1) word[i--] = 0;
    if (i < 0) break;
    ++word[i];
  }
  return out;
}

std::vector<Perm> closure(const std::vector<Perm>& gens) {
  const int n = static_cast<int>(gens.front().size());
  std::set<Perm> seen{identity(n)};
  std::deque<Perm> queue{identity(n)};
  while (!queue.empty()) {
    Perm g = queue.front();
    queue.pop_front();
    for (const Perm& k : gens) {
      Perm h = mul(g, k);
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  return {seen.begin(), seen.end()};
}

int cayley_diameter(const std::vector<Perm>& gens) {
  const int n = static_cast<int>(gens.front().size());
  std::map<Perm, int> dist{{identity(n), 0}};
  std::deque<Perm> queue{identity(n)};
  int far = 0;
  while (!queue.empty()) {
    Perm g = queue.front();
    queue.pop_front();
    int dg = dist[g];
    far = std::max(far, dg);
    for (const Perm& k : gens) {
      Perm h = mul(g, k);
      if (dist.emplace(h, dg + 1).second) queue.push_back(h);
    }
  }
  return far;
}

mpq_class total_variation(const std::map<Perm, std::int64_t>& counts, int group_order, int d, int t) {
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), d, t);
  const mpq_class uniform(1, group_order);
  mpq_class sum = 0;
  int seen = 0;
  for (const auto& [g, c] : counts) {
    mpq_class mu(mpz_class(static_cast<long>(c)), total);
    mu.canonicalize();
    sum += abs(mu - uniform);
    ++seen;
  }
  sum += uniform * (group_order - seen);
  return sum / 2;
}

std::vector<mpz_class> faddeev_charpoly(const std::vector<std::vector<long>>& a) {
  const int n = static_cast<int>(a.size());
  using Mat = std::vector<std::vector<mpq_class>>;
  Mat A(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = a[i][j];
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<mpq_class> c(n + 1);
  c[n] = 1;
  Mat M(n, std::vector<mpq_class>(n, 0));
  for (int k = 1; k <= n; ++k) {
    Mat next(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        mpq_class s = 0;
        for (int l = 0; l < n; ++l)
          if (A[i][l] != 0) s += A[i][l] * M[l][j];
        next[i][j] = s;
      }
    for (int i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    M = std::move(next);
    mpq_class tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (A[i][l] != 0) tr += A[i][l] * M[l][i];
    c[n - k] = -tr / k;
  }
  std::vector<mpz_class> out(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (c[i].get_den() != 1) throw std::logic_error("non-integral charpoly coefficient");
    out[i] = c[i].get_num();
  }
  return out;
}

std::vector<mpz_class> nonbacktracking_traces(const std::vector<std::vector<int>>& adjacency, int max_len) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < static_cast<int>(adjacency.size()); ++u)
    for (int v : adjacency[u]) arcs.emplace_back(u, v);
  const int m = static_cast<int>(arcs.size());
  std::vector<std::vector<int>> succ(m);
  for (int e = 0; e < m; ++e)
    for (int f = 0; f < m; ++f)
      if (arcs[f].first == arcs[e].second && arcs[f].second != arcs[e].first) succ[e].push_back(f);
  std::vector<mpz_class> out(max_len + 1, 0);
  for (int e0 = 0; e0 < m; ++e0) {
    // row e0 of W^k
    std::vector<mpz_class> row(m, 0);
    row[e0] = 1;
    for (int k = 1; k <= max_len; ++k) {
      std::vector<mpz_class> next(m, 0);
      for (int e = 0; e < m; ++e)
        if (row[e] != 0)
          for (int f : succ[e]) next[f] += row[e];
      row = std::move(next);
      out[k] += row[e0];
    }
  }
  return out;
}

std::vector<mpz_class> cycle_counts_from_zeta_inverse(const std::vector<mpz_class>& p, int max_len) {
  if (p.empty() || p[0] != 1) throw std::logic_error("expected p(0) = 1");
  auto coef = [&](int i) { return i < static_cast<int>(p.size()) ? p[i] : mpz_class(0); };
  // q = u p'(u) / p(u) as a power series; q_m = m p_m - sum_{j<m} q_j p_{m-j}.
  std::vector<mpz_class> q(max_len + 1, 0);
  for (int m = 1; m <= max_len; ++m) {
    mpz_class s = m * coef(m);
    for (int j = 1; j < m; ++j) s -= q[j] * coef(m - j);
    q[m] = s;
  }
  for (auto& x : q) x = -x;
  return q;
}

int puzzle_components(const std::vector<std::vector<int>>& adjacency, std::int64_t* positions) {
  const int k = static_cast<int>(adjacency.size());
  std::vector<int> labels = identity(k);
  std::set<std::vector<int>> seen;
  int components = 0;
  do {
    if (seen.count(labels)) continue;
    ++components;
    std::deque<std::vector<int>> queue{labels};
    seen.insert(labels);
    while (!queue.empty()) {
      std::vector<int> f = queue.front();
      queue.pop_front();
      int blank = static_cast<int>(std::find(f.begin(), f.end(), 0) - f.begin());
      for (int w : adjacency[blank]) {
        std::vector<int> g = f;
        std::swap(g[blank], g[w]);
        if (seen.insert(g).second) queue.push_back(g);
      }
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  *positions = static_cast<std::int64_t>(seen.size());
  return components;
}

}  // namespace oracle
