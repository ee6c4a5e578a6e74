#ifndef CAYLEYPAIR_PERM_HPP_
#define CAYLEYPAIR_PERM_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace cayleypair {

enum class Parity { kEven, kOdd };

inline Parity operator^(Parity p, Parity q) {
  return p == q ? Parity::kEven : Parity::kOdd;
}

// Which factor of a product acts first. The products the puzzle
// construction produces (sigma_g = sigma_f sigma_k) only come out right
// with kRightToLeft; the walk regression tests pin this down.
enum class CompositionOrder { kRightToLeft, kLeftToRight };
inline constexpr CompositionOrder kCompositionOrder =
    CompositionOrder::kRightToLeft;

// A bijection of {0, ..., degree-1}. The textual forms (cycle notation,
// JSON one-line arrays) are 1-based, so point i prints as i+1.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidInput unless `images` is a bijection of {0..size-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  // 1-based one-line form [img(1), ..., img(n)].
  static Permutation from_one_line(const std::vector<int>& one_based);
  static Permutation transposition(int degree, int i, int j);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }
  std::vector<int> one_line() const;

  bool is_identity() const;
  Permutation inverse() const;
  Parity parity() const;
  // Non-trivial cycles, each starting at its smallest point, ordered by
  // that point.
  std::vector<std::vector<int>> cycles() const;

  // Injective 64-bit key; requires degree <= 16.
  std::uint64_t key() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// `pq` in the left-action sense: apply q, then p.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

// Parses disjoint-cycle notation such as "(1,3,2)(4,5)". "" and "()" are the
// identity. With degree 0 the degree is the largest point mentioned.
Permutation parse_cycles(std::string_view text, int degree = 0);
// Fixed points are omitted; the identity prints as "()".
std::string format_cycles(const Permutation& p);

void to_json(nlohmann::json& j, const Permutation& p);
void from_json(const nlohmann::json& j, Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace cayleypair

#endif  // CAYLEYPAIR_PERM_HPP_
