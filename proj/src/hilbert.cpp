#include "borel/hilbert.hpp"

#include <algorithm>
#include <utility>

namespace borel {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coefficient) {
  std::vector<BigInt> c(degree + 1, 0);
  c[degree] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

BigInt IntPolynomial::evaluate_at_one() const {
  BigInt sum = 0;
  for (const BigInt& c : coeffs_) sum += c;
  return sum;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] -= other.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<BigInt> c(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<BigInt> c(k, 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(c));
}

namespace {

bool pairwise_coprime(std::span<const Monomial> gens) {
  std::uint32_t seen = 0;
  for (const Monomial& g : gens) {
    const std::uint32_t s = g.support().bits();
    if (s & seen) return false;
    seen |= s;
  }
  return true;
}

// N(G + (m)) = N(G) - t^deg(m) N(G : m), splitting on the last generator.
IntPolynomial numerator_rec(std::span<const Monomial> gens, int n) {
  if (pairwise_coprime(gens)) {
    IntPolynomial product({1});
    for (const Monomial& g : gens) product = product * (IntPolynomial({1}) - IntPolynomial::monomial(g.degree()));
    return product;
  }
  const Monomial& pivot = gens.back();
  const auto rest = gens.first(gens.size() - 1);
  std::vector<Monomial> quotients;
  quotients.reserve(rest.size());
  for (const Monomial& g : rest) quotients.push_back(g.colon(pivot));
  const MonomialIdeal colon = minimalize(quotients, n);
  return numerator_rec(rest, n) - numerator_rec(colon.gens(), n).shifted(pivot.degree());
}

}  // namespace

IntPolynomial hilbert_numerator(std::span<const Monomial> gens, int n) {
  for (const Monomial& g : gens)
    if (g.num_vars() != n) throw StructuralError("variable count mismatch");
  return numerator_rec(gens, n);
}

IntPolynomial hilbert_numerator(const MonomialIdeal& ideal) {
  return hilbert_numerator(ideal.gens(), ideal.num_vars());
}

DimMultiplicity dim_and_multiplicity(const IntPolynomial& numerator, int n) {
  if (numerator.is_zero()) throw ArgumentError("zero Hilbert numerator (unit ideal)");
  std::vector<BigInt> q = numerator.coefficients();
  int p = 0;
  while (true) {
    BigInt at_one = 0;
    for (const BigInt& c : q) at_one += c;
    if (at_one != 0) return {n - p, at_one};
    // q = (1 - t) q' with q'_k = q_0 + ... + q_k.
    for (std::size_t k = 1; k < q.size(); ++k) q[k] += q[k - 1];
    q.pop_back();
    ++p;
  }
}

BigInt hilbert_function(const MonomialIdeal& ideal, int d) {
  if (d < 0) throw ArgumentError("negative degree");
  BigInt count = 0;
  for_each_monomial_of_degree(ideal.num_vars(), d, [&](const Monomial& m) {
    if (!contains(ideal, m)) ++count;
  });
  return count;
}

std::vector<BigInt> series_coefficients(const IntPolynomial& numerator, int n, int max_degree) {
  std::vector<BigInt> out(max_degree + 1, 0);
  for (int d = 0; d <= max_degree; ++d) {
    for (int k = 0; k <= std::min(d, numerator.degree()); ++k) {
      out[d] += numerator[k] * binomial(d - k + n - 1, n - 1);
    }
  }
  return out;
}

}  // namespace borel
