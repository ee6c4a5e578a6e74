#include "cayleypair/polynomial.hpp"

#include <sstream>

#include "cayleypair/error.hpp"

namespace cayleypair {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int exponent) {
  std::vector<BigInt> v(exponent + 1, 0);
  v[exponent] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(long root) { return IntPolynomial{-root, 1}; }

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[i];
}

BigInt IntPolynomial::leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::negate_variable() const {
  IntPolynomial out = *this;
  for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
  return out;
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& q) const {
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += constant(*it);
  }
  return acc;
}

IntPolynomial IntPolynomial::truncated(int max_degree) const {
  if (degree() <= max_degree) return *this;
  return IntPolynomial(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + max_degree + 1));
}

IntPolynomial IntPolynomial::pow(int e) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), o.coeffs_[j].get_mpz_t());
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial IntPolynomial::scaled(const BigInt& c) const {
  IntPolynomial out = *this;
  for (auto& v : out.coeffs_) v *= c;
  out.normalize();
  return out;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::pair<IntPolynomial, IntPolynomial> divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<BigInt> rem = a.coefficients();
  int db = b.degree();
  if (a.degree() < db) return {IntPolynomial(), a};
  std::vector<BigInt> quot(a.degree() - db + 1, 0);
  const BigInt& lead = b.coefficients().back();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t())) {
      throw VerificationFailure("polynomial division is not exact over the integers");
    }
    BigInt q = rem[i] / lead;
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[i - db + j].get_mpz_t(), q.get_mpz_t(), b.coefficients()[j].get_mpz_t());
    }
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) {
    throw VerificationFailure("polynomial division leaves remainder " + r.to_string());
  }
  return q;
}

IntPolynomial Factorization::expand() const {
  IntPolynomial p = IntPolynomial::constant(unit);
  for (const auto& [f, e] : factors) p *= f.pow(e);
  return p;
}

std::string Factorization::to_string(const std::string& var) const {
  std::ostringstream os;
  if (unit == -1) {
    os << '-';
  } else if (unit != 1) {
    os << unit.get_str();
  }
  for (const auto& [f, e] : factors) {
    if (f.degree() == 1 && f.leading() == 1 && f.coefficient(0) == 0) {
      os << var;
    } else {
      os << '(' << f.to_string(var) << ')';
    }
    if (e != 1) os << '^' << e;
  }
  if (factors.empty() && (unit == 1 || unit == -1)) os << '1';
  return os.str();
}

nlohmann::json to_json_coefficients(const IntPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
  return arr;
}

IntPolynomial from_json_coefficients(const nlohmann::json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j) {
    if (c.is_string()) {
      coeffs.emplace_back(c.get<std::string>());
    } else {
      coeffs.emplace_back(c.get<long>());
    }
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace cayleypair
