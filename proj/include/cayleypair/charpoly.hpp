#ifndef CAYLEYPAIR_CHARPOLY_HPP_
#define CAYLEYPAIR_CHARPOLY_HPP_

#include <cstdint>
#include <vector>

#include "cayleypair/int_matrix.hpp"
#include "cayleypair/polynomial.hpp"

namespace cayleypair {

// Dimension above which charpoly() switches to the modular route.
inline constexpr int kModularCharpolyThreshold = 300;

// det(xI - A) for a square integer matrix, exact. Dispatches between the
// two routes below by dimension.
IntPolynomial charpoly(const IntMatrix& a);

// Division-free Berkowitz recursion over Z. Products with the trailing
// blocks only touch nonzero entries, so sparse adjacency matrices cost
// O(n * nnz) big-integer operations instead of O(n^4).
IntPolynomial charpoly_berkowitz(const IntMatrix& a);

// Hessenberg reduction modulo 62-bit primes, recombined by CRT. The prime
// count comes from a Hadamard-type bound on the coefficients, so the result
// is exact. Residues are computed concurrently.
IntPolynomial charpoly_modular(const IntMatrix& a);

// Characteristic polynomial mod p (coefficients in [0, p), constant first).
std::vector<std::uint64_t> charpoly_mod_prime(const IntMatrix& a, std::uint64_t p);

// Deterministic list of the `count` largest primes below 2^62.
std::vector<std::uint64_t> crt_primes(int count);

bool is_prime_u64(std::uint64_t n);

// Bits needed to hold every coefficient of det(xI - A) in absolute value.
int charpoly_coefficient_bits(const IntMatrix& a);

}  // namespace cayleypair

#endif  // CAYLEYPAIR_CHARPOLY_HPP_
