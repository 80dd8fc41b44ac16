#pragma once

#include <cstdint>
#include <vector>

namespace borel {

/// Coefficient field: characteristic 0 means the rationals, otherwise GF(p).
struct FieldSpec {
  static constexpr std::int64_t kDefaultPrime = 32003;

  std::int64_t characteristic = kDefaultPrime;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(std::int64_t p) { return FieldSpec{p}; }

  /// Throws ArgumentError unless the characteristic is 0 or a prime below 2^31.
  void validate() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;
};

bool is_prime(std::int64_t p);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

 private:
  int rows_;
  int cols_;
  std::vector<std::int64_t> data_;
};

/// Exact rank over the field: Gaussian elimination mod p, or fraction-free
/// (Bareiss) elimination with big integers over the rationals.
int rank(const IntMatrix& matrix, FieldSpec field);

}  // namespace borel
