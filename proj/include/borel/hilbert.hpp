#pragma once

#include <span>
#include <vector>

#include "borel/bigint.hpp"
#include "borel/monomial.hpp"

namespace borel {

/// Polynomial in t with exact integer coefficients, lowest degree first.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  static IntPolynomial monomial(int degree, BigInt coefficient = 1);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of t^k, zero beyond the degree.
  BigInt operator[](int k) const;
  BigInt evaluate_at_one() const;

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  /// Multiply by t^k.
  IntPolynomial shifted(int k) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of S/I.
IntPolynomial hilbert_numerator(const MonomialIdeal& ideal);

/// Same, pivoting on the generators in the given order (last one first).
IntPolynomial hilbert_numerator(std::span<const Monomial> gens, int n);

struct DimMultiplicity {
  int dim = 0;
  BigInt multiplicity;
};

/// Writes N(t) = (1-t)^p Q(t) with Q(1) != 0 and returns (n - p, Q(1)).
DimMultiplicity dim_and_multiplicity(const IntPolynomial& numerator, int n);

/// Number of degree-d monomials outside the ideal, by enumeration.
BigInt hilbert_function(const MonomialIdeal& ideal, int d);

/// Coefficients of t^0..t^max_degree in N(t)/(1-t)^n.
std::vector<BigInt> series_coefficients(const IntPolynomial& numerator, int n, int max_degree);

}  // namespace borel
