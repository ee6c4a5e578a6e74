#ifndef CAYLEYPAIR_ZETA_HPP_
#define CAYLEYPAIR_ZETA_HPP_

#include <array>
#include <vector>

#include "cayleypair/multigraph.hpp"
#include "cayleypair/polynomial.hpp"
#include "cayleypair/puzzle.hpp"
#include "cayleypair/spectra.hpp"

namespace cayleypair {

// Throws InvalidInput unless g is regular of degree >= 2, loop-free and
// every arc has a reverse.
void check_zeta_input(const DirectedMultigraph& g);

// 1/zeta(u) = (1-u^2)^{r-1} det(I - uA + u^2 Q), Q = (d-1)I, r-1 = N(d-2)/2,
// obtained from P(x) = det(xI - A) by
// u^N P((1 + (d-1)u^2)/u) = sum_k c_k (1 + (d-1)u^2)^k u^{N-k}.
IntPolynomial ihara_zeta_inverse(const DirectedMultigraph& g);
IntPolynomial ihara_from_charpoly(const IntPolynomial& p, int num_vertices, int degree);

// det(I - uA + u^2 Q) by exact determinants at u = 0..2N and interpolation.
IntPolynomial bass_determinant(const DirectedMultigraph& g);
// 1/zeta(u) = det(I - uW) with W the non-backtracking arc matrix.
IntPolynomial hashimoto_zeta_inverse(const DirectedMultigraph& g);
IntMatrix hashimoto_matrix(const DirectedMultigraph& g);

// Exact determinant by fraction-free elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);
// The unique polynomial of degree < xs.size() through the points; throws
// VerificationFailure if it does not have integer coefficients.
IntPolynomial interpolate(const std::vector<BigInt>& xs, const std::vector<BigInt>& ys);

// A prime as its lexicographically least rotation of arc ids.
struct PrimeCycle {
  std::vector<int> arcs;
  int length() const { return static_cast<int>(arcs.size()); }
};

inline constexpr int kDefaultPrimeClassCap = 2000000;

// All primes of length <= max_len (max_len <= 14). Unpaired arcs have no
// forbidden successor. Throws ResourceCapExceeded past class_cap classes.
std::vector<PrimeCycle> prime_cycles(const DirectedMultigraph& g, int max_len,
                                     int class_cap = kDefaultPrimeClassCap);

// prod (1 - w(C) u^nu(C)) mod u^{trunc+1}.
IntPolynomial euler_product_inverse(const std::vector<PrimeCycle>& primes, const std::vector<int>& weights,
                                    int trunc);

// Frobenius element of a prime of Z = Y/K: lift from the first member of
// the starting vertex's fiber (or from `start` if given) and return the
// k with start k = end. Throws VerificationFailure if the lift fails or
// ends outside the fiber.
int frobenius(const PrimeCycle& c, const DirectedMultigraph& y, const KAction& action, const QuotientGraph& z,
              int start = -1);

struct LFactorizationReport {
  int trunc = 0;
  IntPolynomial zeta_z_inverse;           // exact, from Ihara
  IntPolynomial trivial_l_inverse;        // truncated Euler product, chi = 1
  std::array<IntPolynomial, 4> l_inverse; // index = character
  bool trivial_ok = false;                // L(u,1) = zeta_Z
  std::array<bool, 4> quotient_ok{};      // zeta_{X_H}^{-1} = zeta_Z^{-1} L^{-1}(u, chi_H), H = 1..3
  bool y_ok = false;                      // zeta_Y^{-1} = zeta_Z^{-1} prod_chi L^{-1}
  bool rho_psi_ok = false;                // L(u, chi_rho) = L(-u, chi_psi)
  bool polynomial_ok = false;             // zeta_Y^{-1} zeta_Z^{-2} = prod_H zeta_{X_H}^{-1}
  bool frobenius_parity_ok = false;
  bool z_routes_ok = false;               // Ihara = Bass = Hashimoto on Z
  int num_primes = 0;
  bool ok() const {
    return trivial_ok && quotient_ok[1] && quotient_ok[2] && quotient_ok[3] && y_ok && rho_psi_ok &&
           polynomial_ok && frobenius_parity_ok && z_routes_ok;
  }
};

// The covering diagram must be loop-free (not theta_{1,0}).
LFactorizationReport verify_L_factorization(const ContractedPuzzle& cp, const KAction& action,
                                            const CoveringDiagram& d, int trunc);

}  // namespace cayleypair

#endif  // CAYLEYPAIR_ZETA_HPP_
