#ifndef CAYLEYPAIR_INT_MATRIX_HPP_
#define CAYLEYPAIR_INT_MATRIX_HPP_

#include <cstdint>
#include <vector>

namespace cayleypair {

// Dense row-major matrix of machine integers. Entries are small
// (adjacency multiplicities); anything that grows goes through big integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}
  static IntMatrix square(int n) { return IntMatrix(n, n); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  std::int64_t operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

}  // namespace cayleypair

#endif  // CAYLEYPAIR_INT_MATRIX_HPP_
