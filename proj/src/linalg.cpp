#include "borel/linalg.hpp"

#include <string>
#include <utility>

#include "borel/bigint.hpp"
#include "borel/errors.hpp"

namespace borel {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void FieldSpec::validate() const {
  if (characteristic == 0) return;
  if (characteristic >= (std::int64_t{1} << 31) || !is_prime(characteristic)) {
    throw ArgumentError("field characteristic " + std::to_string(characteristic) +
                        " is neither 0 nor a prime below 2^31");
  }
}

namespace {

int rank_mod_p(const IntMatrix& matrix, std::int64_t p) {
  const int rows = matrix.rows();
  const int cols = matrix.cols();
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = ((matrix(r, c) % p) + p) % p;

  auto inverse = [p](std::int64_t x) {
    std::int64_t result = 1;
    std::int64_t e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return result;
  };

  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::int64_t inv = inverse(a[rank][c]);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const std::int64_t factor = a[r][c] * inv % p;
      for (int k = c; k < cols; ++k) a[r][k] = ((a[r][k] - factor * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

int rank_rational(const IntMatrix& matrix) {
  const int rows = matrix.rows();
  const int cols = matrix.cols();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = matrix(r, c);

  // Bareiss: every division below is exact.
  BigInt previous = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / previous;
      }
      a[r][c] = 0;
    }
    previous = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

int rank(const IntMatrix& matrix, FieldSpec field) {
  field.validate();
  if (matrix.rows() == 0 || matrix.cols() == 0) return 0;
  return field.characteristic == 0 ? rank_rational(matrix) : rank_mod_p(matrix, field.characteristic);
}

}  // namespace borel
