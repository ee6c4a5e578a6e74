#ifndef CAYLEYPAIR_POLYNOMIAL_HPP_
#define CAYLEYPAIR_POLYNOMIAL_HPP_

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cayleypair {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Dense univariate polynomial over Z, constant term first. Always kept in
// canonical form: no trailing zero coefficients, so the zero polynomial
// has no coefficients at all.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, int exponent);
  static IntPolynomial x() { return monomial(1, 1); }
  // x - root
  static IntPolynomial linear(long root);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int i) const;
  BigInt leading() const;

  BigInt evaluate(const BigInt& x) const;
  // p(-x)
  IntPolynomial negate_variable() const;
  // p(q(x))
  IntPolynomial compose(const IntPolynomial& q) const;
  // Drops every term of degree > max_degree.
  IntPolynomial truncated(int max_degree) const;
  IntPolynomial pow(int e) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  IntPolynomial operator-() const;
  IntPolynomial scaled(const BigInt& c) const;

  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

  // "x^3 - 2*x + 1"
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

// Quotient and remainder with a = q*b + r, deg r < deg b. Only exact
// integer steps are allowed: throws VerificationFailure if some step would
// need a fraction. Throws InvalidInput if b is zero.
std::pair<IntPolynomial, IntPolynomial> divide(const IntPolynomial& a, const IntPolynomial& b);
// a / b; throws VerificationFailure unless the remainder is zero.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

// A displayed product of (factor)^exponent terms.
struct Factorization {
  BigInt unit = 1;
  std::vector<std::pair<IntPolynomial, int>> factors;

  IntPolynomial expand() const;
  // "(x - 3)(x - 1)^9(x^2 - x - 3)^5"
  std::string to_string(const std::string& var = "x") const;
};

// Coefficients as decimal strings, constant term first.
nlohmann::json to_json_coefficients(const IntPolynomial& p);
IntPolynomial from_json_coefficients(const nlohmann::json& j);

}  // namespace cayleypair

#endif  // CAYLEYPAIR_POLYNOMIAL_HPP_
