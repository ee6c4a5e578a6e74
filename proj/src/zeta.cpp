#include "cayleypair/zeta.hpp"

#include <algorithm>

#include "cayleypair/charpoly.hpp"
#include "cayleypair/error.hpp"

namespace cayleypair {

void check_zeta_input(const DirectedMultigraph& g) {
  if (g.has_loops()) {
    throw InvalidInput("zeta functions need a loop-free graph; loops have no reverse arc");
  }
  if (!g.is_reverse_paired()) throw InvalidInput("zeta functions need every arc paired with a reverse");
  if (g.regular_out_degree() < 2) throw InvalidInput("zeta functions here need a regular graph of degree >= 2");
}

IntPolynomial ihara_from_charpoly(const IntPolynomial& p, int num_vertices, int degree) {
  const int n = num_vertices;
  if (p.degree() != n) throw InvalidInput("characteristic polynomial degree does not match the vertex count");
  if ((n * (degree - 2)) % 2 != 0) throw InvalidInput("N(d-2) must be even");
  const IntPolynomial s = IntPolynomial::constant(1) + IntPolynomial::monomial(degree - 1, 2);
  IntPolynomial sum;
  IntPolynomial s_pow = IntPolynomial::constant(1);
  for (int k = 0; k <= n; ++k) {
    const BigInt c = p.coefficient(k);
    if (c != 0) sum += (s_pow * IntPolynomial::monomial(1, n - k)).scaled(c);
    s_pow *= s;
  }
  const IntPolynomial one_minus_u2 = IntPolynomial{1, 0, -1};
  return one_minus_u2.pow(n * (degree - 2) / 2) * sum;
}

IntPolynomial ihara_zeta_inverse(const DirectedMultigraph& g) {
  check_zeta_input(g);
  return ihara_from_charpoly(charpoly(adjacency_matrix(g)), g.num_vertices(), g.regular_out_degree());
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntPolynomial interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys) {
  const int n = static_cast<int>(xs.size());
  std::vector<BigRational> a(ys.begin(), ys.end());
  for (int j = 1; j < n; ++j) {
    for (int i = n - 1; i >= j; --i) {
      a[i] = (a[i] - a[i - 1]) / BigRational(xs[i] - xs[i - j]);
    }
  }
  std::vector<BigRational> c{a[n - 1]};
  for (int i = n - 2; i >= 0; --i) {
    // c <- c * (x - xs[i]) + a[i]
    std::vector<BigRational> next(c.size() + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= c[k] * BigRational(xs[i]);
    }
    next[0] += a[i];
    c = std::move(next);
  }
  std::vector<BigInt> out;
  for (auto& q : c) {
    q.canonicalize();
    if (q.get_den() != 1) throw VerificationFailure("interpolated polynomial is not integral");
    out.push_back(q.get_num());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial bass_determinant(const DirectedMultigraph& g) {
  check_zeta_input(g);
  const int n = g.num_vertices();
  const IntMatrix a = adjacency_matrix(g);
  std::vector<BigInt> xs, ys;
  for (int u = 0; u <= 2 * n; ++u) {
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = BigInt(-u) * BigInt(static_cast<long>(a(i, j)));
      m[i][i] += 1 + BigInt(u) * u * (g.out_degree(i) - 1);
    }
    xs.emplace_back(u);
    ys.push_back(bareiss_determinant(std::move(m)));
  }
  return interpolate(xs, ys);
}

IntMatrix hashimoto_matrix(const DirectedMultigraph& g) {
  const int m = g.num_arcs();
  IntMatrix w = IntMatrix::square(m);
  for (int e = 0; e < m; ++e) {
    const Arc& a = g.arc(e);
    for (int f : g.out_arcs(a.target)) {
      if (f != a.reverse) w(e, f) += 1;
    }
  }
  return w;
}

IntPolynomial hashimoto_zeta_inverse(const DirectedMultigraph& g) {
  check_zeta_input(g);
  const IntPolynomial p = charpoly(hashimoto_matrix(g));
  const int m = g.num_arcs();
  std::vector<BigInt> rev(m + 1);
  for (int k = 0; k <= m; ++k) rev[m - k] = p.coefficient(k);
  return IntPolynomial(std::move(rev));
}

std::vector<PrimeCycle> prime_cycles(const DirectedMultigraph& g, int max_len, int class_cap) {
  if (max_len > 14) throw InvalidInput("prime cycle enumeration is limited to length 14");
  std::vector<PrimeCycle> out;
  std::vector<int> path;
  // Primes are recorded in their least rotation, whose first arc is the
  // smallest id in the cycle; so from e0 only arcs >= e0 are explored.
  auto accept = [&]() {
    const int l = static_cast<int>(path.size());
    for (int r = 1; r < l; ++r) {
      if (path[r] != path[0]) continue;
      int cmp = 0;
      for (int i = 0; i < l && cmp == 0; ++i) {
        int x = path[(r + i) % l], y = path[i];
        cmp = x < y ? -1 : (x > y ? 1 : 0);
      }
      if (cmp <= 0) return false;  // smaller rotation, or a proper power
    }
    return true;
  };
  auto dfs = [&](auto&& self, int e0) -> void {
    const Arc& last = g.arc(path.back());
    if (last.target == g.arc(e0).source && (last.reverse < 0 || e0 != last.reverse)) {
      if (accept()) {
        out.push_back(PrimeCycle{path});
        if (static_cast<int>(out.size()) > class_cap) {
          throw ResourceCapExceeded("prime cycle class count exceeds the cap");
        }
      }
    }
    if (static_cast<int>(path.size()) == max_len) return;
    for (int f : g.out_arcs(last.target)) {
      if (f < e0 || (last.reverse >= 0 && f == last.reverse)) continue;
      path.push_back(f);
      self(self, e0);
      path.pop_back();
    }
  };
  for (int e0 = 0; e0 < g.num_arcs(); ++e0) {
    path.assign(1, e0);
    dfs(dfs, e0);
  }
  std::sort(out.begin(), out.end(), [](const PrimeCycle& x, const PrimeCycle& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    return x.arcs < y.arcs;
  });
  return out;
}

IntPolynomial euler_product_inverse(const std::vector<PrimeCycle>& primes, const std::vector<int>& weights,
                                    int trunc) {
  IntPolynomial prod = IntPolynomial::constant(1);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (primes[i].length() > trunc) continue;
    prod = (prod * (IntPolynomial::constant(1) - IntPolynomial::monomial(weights[i], primes[i].length())))
               .truncated(trunc);
  }
  return prod;
}

int frobenius(const PrimeCycle& c, const DirectedMultigraph& y, const KAction& action, const QuotientGraph& z,
              int start) {
  const int z_start = z.base.arc(c.arcs[0]).source;
  if (start < 0) {
    for (int v = 0; v < y.num_vertices(); ++v) {
      if (z.orbits.vertex_orbit[v] == z_start) {
        start = v;
        break;
      }
    }
  }
  if (start < 0 || z.orbits.vertex_orbit[start] != z_start) throw VerificationFailure("lift start not over C");
  int cur = start;
  for (int a : c.arcs) {
    int next = -1;
    for (int f : y.out_arcs(cur)) {
      if (z.orbits.arc_orbit[f] == a) {
        next = y.arc(f).target;
        break;
      }
    }
    if (next < 0) throw VerificationFailure("prime cycle does not lift");
    cur = next;
  }
  for (int k = 0; k < 4; ++k) {
    if (action.vertex_image[k][start] == cur) return k;
  }
  throw VerificationFailure("lift of a prime ends outside the starting fiber");
}

LFactorizationReport verify_L_factorization(const ContractedPuzzle& cp, const KAction& action,
                                            const CoveringDiagram& d, int trunc) {
  LFactorizationReport r;
  r.trunc = trunc;
  const auto& zg = d.z.base;
  check_zeta_input(zg);
  check_zeta_input(cp.graph);
  r.zeta_z_inverse = ihara_zeta_inverse(zg);
  {
    const int nz = zg.num_vertices();
    const IntPolynomial bass = IntPolynomial{1, 0, -1}.pow(nz / 2) * bass_determinant(zg);
    r.z_routes_ok = bass == r.zeta_z_inverse && hashimoto_zeta_inverse(zg) == r.zeta_z_inverse;
  }

  const auto primes = prime_cycles(zg, trunc);
  r.num_primes = static_cast<int>(primes.size());
  std::vector<int> frob(primes.size());
  r.frobenius_parity_ok = true;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    frob[i] = frobenius(primes[i], cp.graph, action, d.z);
    const bool even = primes[i].length() % 2 == 0;
    const bool in_even_part = frob[i] == 0 || frob[i] == kRhoPsi;
    if (even != in_even_part) r.frobenius_parity_ok = false;
  }
  for (int chi = 0; chi < 4; ++chi) {
    std::vector<int> w(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) w[i] = character(chi, frob[i]);
    r.l_inverse[chi] = euler_product_inverse(primes, w, trunc);
  }
  r.trivial_l_inverse = r.l_inverse[0];
  r.trivial_ok = r.trivial_l_inverse == r.zeta_z_inverse.truncated(trunc);

  const IntPolynomial zy = ihara_from_charpoly(d.p_y, cp.graph.num_vertices(), 3);
  const IntPolynomial zr = ihara_from_charpoly(d.p_rho, d.x_rho.base.num_vertices(), 3);
  const IntPolynomial zp = ihara_from_charpoly(d.p_psi, d.x_psi.base.num_vertices(), 3);
  const IntPolynomial zrp = ihara_from_charpoly(d.p_rhopsi, d.x_rhopsi.base.num_vertices(), 3);
  const std::array<const IntPolynomial*, 4> zh = {&r.zeta_z_inverse, &zr, &zp, &zrp};
  for (int chi = 1; chi < 4; ++chi) {
    r.quotient_ok[chi] = (r.zeta_z_inverse * r.l_inverse[chi]).truncated(trunc) == zh[chi]->truncated(trunc);
  }
  r.y_ok = (r.zeta_z_inverse * r.l_inverse[1] * r.l_inverse[2] * r.l_inverse[3]).truncated(trunc) ==
           zy.truncated(trunc);
  r.rho_psi_ok = r.l_inverse[1] == r.l_inverse[2].negate_variable();
  r.polynomial_ok = zy * r.zeta_z_inverse * r.zeta_z_inverse == zr * zp * zrp;
  return r;
}

}  // namespace cayleypair
