#include "cayleypair/charpoly.hpp"

#include <cmath>
#include <future>
#include <mutex>

#include "cayleypair/error.hpp"

namespace cayleypair {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

u64 reduce(std::int64_t v, u64 p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? static_cast<u64>(r + static_cast<std::int64_t>(p)) : static_cast<u64>(r);
}

void check_square(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("charpoly needs a square matrix");
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all 64-bit n.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> crt_primes(int count) {
  std::vector<u64> primes;
  u64 candidate = (1ull << 62) - 1;
  while (static_cast<int>(primes.size()) < count) {
    if (is_prime_u64(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes;
}

int charpoly_coefficient_bits(const IntMatrix& a) {
  // sum_k |c_k| <= prod_i (1 + ||row_i||_2), by expanding det(xI - A) into
  // principal minors and bounding each with Hadamard's inequality.
  double bits = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    double norm2 = 0.0;
    for (int j = 0; j < a.cols(); ++j) {
      double v = static_cast<double>(a(i, j));
      norm2 += v * v;
    }
    bits += std::log2(1.0 + std::sqrt(norm2));
  }
  return static_cast<int>(std::ceil(bits)) + 2;
}

IntPolynomial charpoly(const IntMatrix& a) {
  check_square(a);
  if (a.rows() > kModularCharpolyThreshold) return charpoly_modular(a);
  return charpoly_berkowitz(a);
}

IntPolynomial charpoly_berkowitz(const IntMatrix& a) {
  check_square(a);
  const int n = a.rows();
  // Nonzero pattern of each row, restricted later to the trailing block.
  std::vector<std::vector<std::pair<int, std::int64_t>>> rows(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a(i, j) != 0) rows[i].emplace_back(j, a(i, j));
    }
  }

  // q holds det(xI - M) for the trailing block M = A[r+1.., r+1..], in
  // descending order (q[0] = 1).
  std::vector<BigInt> q{1};
  std::vector<BigInt> v(n), w(n);
  std::vector<BigInt> s;
  for (int r = n - 1; r >= 0; --r) {
    const int m = n - 1 - r;
    // s_j = R M^j C for j = 0..m-1, R = A[r, r+1..], C = A[r+1.., r].
    s.assign(m, 0);
    for (int i = r + 1; i < n; ++i) v[i] = a(i, r);
    for (int j = 0; j < m; ++j) {
      BigInt acc = 0;
      for (auto [col, val] : rows[r]) {
        if (col > r && v[col] != 0) acc += v[col] * val;
      }
      s[j] = acc;
      if (j + 1 == m) break;
      for (int i = r + 1; i < n; ++i) {
        BigInt t = 0;
        for (auto [col, val] : rows[i]) {
          if (col > r && v[col] != 0) t += v[col] * val;
        }
        w[i] = std::move(t);
      }
      for (int i = r + 1; i < n; ++i) std::swap(v[i], w[i]);
    }

    // det(xI - A_r) = (x - a) det(xI - M) - R adj(xI - M) C with
    // adj(xI - M) = sum_k x^{m-1-k} sum_{j<=k} q_{k-j} M^j.
    const std::int64_t diag = a(r, r);
    std::vector<BigInt> next(m + 2, 0);
    for (int i = 0; i <= m + 1; ++i) {
      BigInt c = i <= m ? q[i] : BigInt(0);
      if (i >= 1 && diag != 0) c -= q[i - 1] * diag;
      for (int j = 0; j <= i - 2; ++j) {
        if (s[j] != 0) mpz_submul(c.get_mpz_t(), q[i - 2 - j].get_mpz_t(), s[j].get_mpz_t());
      }
      next[i] = std::move(c);
    }
    q = std::move(next);
  }
  std::vector<BigInt> ascending(q.rbegin(), q.rend());
  return IntPolynomial(std::move(ascending));
}

std::vector<u64> charpoly_mod_prime(const IntMatrix& a, u64 p) {
  check_square(a);
  const int n = a.rows();
  std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) h[i][j] = reduce(a(i, j), p);
  }
  // Similarity transform to upper Hessenberg form.
  for (int col = 0; col + 2 < n; ++col) {
    int pivot = -1;
    for (int i = col + 1; i < n; ++i) {
      if (h[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == -1) continue;
    if (pivot != col + 1) {
      std::swap(h[pivot], h[col + 1]);
      for (int i = 0; i < n; ++i) std::swap(h[i][pivot], h[i][col + 1]);
    }
    u64 inv = pow_mod(h[col + 1][col], p - 2, p);
    for (int i = col + 2; i < n; ++i) {
      if (h[i][col] == 0) continue;
      u64 factor = mul_mod(h[i][col], inv, p);
      // row_i -= factor * row_{col+1}
      for (int j = 0; j < n; ++j) {
        h[i][j] = (h[i][j] + p - mul_mod(factor, h[col + 1][j], p)) % p;
      }
      // col_{col+1} += factor * col_i
      for (int j = 0; j < n; ++j) {
        h[j][col + 1] = (h[j][col + 1] + mul_mod(factor, h[j][i], p)) % p;
      }
    }
  }
  // Characteristic polynomials of the leading k x k blocks (ascending).
  std::vector<std::vector<u64>> poly(n + 1);
  poly[0] = {1};
  for (int k = 1; k <= n; ++k) {
    const int kk = k - 1;
    std::vector<u64> cur(k + 1, 0);
    // (x - h_kk) p_{k-1}
    for (int i = 0; i < k; ++i) {
      cur[i + 1] = (cur[i + 1] + poly[k - 1][i]) % p;
      cur[i] = (cur[i] + p - mul_mod(h[kk][kk], poly[k - 1][i], p)) % p;
    }
    u64 prod = 1;
    for (int i = kk - 1; i >= 0; --i) {
      prod = mul_mod(prod, h[i + 1][i], p);
      if (prod == 0) break;
      u64 coef = mul_mod(h[i][kk], prod, p);
      if (coef == 0) continue;
      for (std::size_t t = 0; t < poly[i].size(); ++t) {
        cur[t] = (cur[t] + p - mul_mod(coef, poly[i][t], p)) % p;
      }
    }
    poly[k] = std::move(cur);
  }
  return poly[n];
}

IntPolynomial charpoly_modular(const IntMatrix& a) {
  check_square(a);
  const int n = a.rows();
  const int bits = charpoly_coefficient_bits(a) + 1;  // sign
  const int count = (bits + 60) / 61;
  const auto primes = crt_primes(count);

  std::vector<std::future<std::vector<u64>>> jobs;
  jobs.reserve(primes.size());
  for (u64 p : primes) {
    jobs.push_back(std::async(std::launch::async, [&a, p] { return charpoly_mod_prime(a, p); }));
  }
  std::vector<std::vector<u64>> residues;
  residues.reserve(jobs.size());
  for (auto& j : jobs) residues.push_back(j.get());

  // Garner-free incremental CRT on each coefficient.
  std::vector<BigInt> coeffs(n + 1, 0);
  BigInt modulus = 1;
  for (std::size_t k = 0; k < primes.size(); ++k) {
    BigInt p(std::to_string(primes[k]));
    BigInt inv;
    BigInt mod_p = modulus % p;
    mpz_invert(inv.get_mpz_t(), mod_p.get_mpz_t(), p.get_mpz_t());
    for (int i = 0; i <= n; ++i) {
      BigInt r(std::to_string(residues[k][i]));
      BigInt diff = (r - coeffs[i] % p) % p;
      if (diff < 0) diff += p;
      BigInt t = (diff * inv) % p;
      coeffs[i] += modulus * t;
    }
    modulus *= p;
  }
  BigInt half = modulus / 2;
  for (auto& c : coeffs) {
    if (c > half) c -= modulus;
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace cayleypair
