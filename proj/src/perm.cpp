#include "cayleypair/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cayleypair/error.hpp"

namespace cayleypair {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v]) {
      throw InvalidInput("images do not form a permutation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(const std::vector<int>& one_based) {
  std::vector<int> images;
  images.reserve(one_based.size());
  for (int v : one_based) images.push_back(v - 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int degree, int i, int j) {
  Permutation p = identity(degree);
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out;
  out.reserve(images_.size());
  for (int v : images_) out.push_back(v + 1);
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

Parity Permutation::parity() const {
  // n - (number of cycles) transpositions.
  std::vector<bool> seen(images_.size(), false);
  int transpositions = 0;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? Parity::kEven : Parity::kOdd;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<int> cycle;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::uint64_t Permutation::key() const {
  if (degree() > 16) throw InvalidInput("key() needs degree <= 16");
  std::uint64_t k = 0;
  for (int i = degree() - 1; i >= 0; --i) {
    k = (k << 4) | static_cast<std::uint64_t>(images_[i]);
  }
  return k;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InvalidInput("compose: degree mismatch (" + std::to_string(p.degree()) +
                       " vs " + std::to_string(q.degree()) + ")");
  }
  std::vector<int> images(p.degree());
  for (int i = 0; i < p.degree(); ++i) {
    if constexpr (kCompositionOrder == CompositionOrder::kRightToLeft) {
      images[i] = p(q(i));
    } else {
      images[i] = q(p(i));
    }
  }
  return Permutation(std::move(images));
}

Permutation parse_cycles(std::string_view text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto fail = [&](const std::string& what) {
    throw InvalidInput("malformed cycle notation at offset " +
                       std::to_string(pos) + ": " + what + " in \"" +
                       std::string(text) + "\"");
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    skip_space();
    std::vector<int> cycle;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;  // "()" contributes nothing
      skip_space();
      continue;
    }
    while (true) {
      skip_space();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        fail("expected a point");
      }
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) fail("point out of range");
        ++pos;
      }
      if (value < 1) fail("points are 1-based");
      cycle.push_back(static_cast<int>(value));
      skip_space();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    cycles.push_back(std::move(cycle));
    skip_space();
  }

  int max_point = 0;
  for (const auto& c : cycles) {
    for (int v : c) max_point = std::max(max_point, v);
  }
  if (degree == 0) degree = max_point;
  if (max_point > degree) {
    throw InvalidInput("point " + std::to_string(max_point) +
                       " exceeds degree " + std::to_string(degree));
  }
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i] - 1;
      if (used[from]) {
        throw InvalidInput("repeated point " + std::to_string(c[i]) + " in \"" +
                           std::string(text) + "\"");
      }
      used[from] = true;
      images[from] = c[(i + 1) % c.size()] - 1;
    }
  }
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cycles) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ',';
      os << c[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

void to_json(nlohmann::json& j, const Permutation& p) { j = p.one_line(); }

void from_json(const nlohmann::json& j, Permutation& p) {
  p = Permutation::from_one_line(j.get<std::vector<int>>());
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cayleypair
