#include <doctest.h>

#include <algorithm>
#include <random>

#include "borel/corpus.hpp"
#include "borel/hilbert.hpp"
#include "borel/standard_pairs.hpp"
#include "oracles.hpp"

using namespace borel;
using oracle::ideal;

namespace {

IntPolynomial poly(std::initializer_list<int> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPolynomial(v);
}

std::vector<MonomialIdeal> mixed(int n, std::uint64_t seed, int count) {
  std::vector<MonomialIdeal> out;
  for (Family f : {Family::strongly_stable, Family::borel_type, Family::general, Family::squarefree})
    for (auto& i : gen_corpus(CorpusSpec{n, count, seed, f, 4, 3})) out.push_back(std::move(i));
  return out;
}

// Independent count: degree-d monomials outside I, by brute divisibility.
BigInt count_outside(const MonomialIdeal& I, int d) {
  BigInt total = 0;
  for_each_monomial_of_degree(I.num_vars(), d, [&](const Monomial& m) {
    if (!oracle::in_ideal(I.gens(), m)) ++total;
  });
  return total;
}

}  // namespace

TEST_CASE("IntPolynomial arithmetic") {
  CHECK(poly({1, 2, 0, 0}).coefficients().size() == 2);
  CHECK(poly({0, 0}).is_zero());
  CHECK(poly({}).degree() == -1);
  CHECK(poly({1, -1}) * poly({1, 1}) == poly({1, 0, -1}));
  CHECK(poly({1, 2}) + poly({-1, -2}) == poly({}));
  CHECK(poly({3}) - poly({0, 1}) == poly({3, -1}));
  CHECK(poly({1, 1}).shifted(2) == poly({0, 0, 1, 1}));
  CHECK(IntPolynomial::monomial(3, 5) == poly({0, 0, 0, 5}));
  CHECK(poly({1, -2, 0, 1}).evaluate_at_one() == 0);
  CHECK(poly({1, 2})[5] == 0);
}

TEST_CASE("hilbert_numerator examples") {
  CHECK(hilbert_numerator(ideal("x1^2, x1*x2", 2)) == poly({1, 0, -2, 1}));
  CHECK(hilbert_numerator(MonomialIdeal::zero(3)) == poly({1}));
  CHECK(hilbert_numerator(ideal("x1", 2)) == poly({1, -1}));
  CHECK(hilbert_numerator(MonomialIdeal::unit(2)) == poly({}));
  CHECK(hilbert_numerator(ideal("x1*x2", 2)) == poly({1, 0, -1}));
}

TEST_CASE("dim_and_multiplicity examples") {
  const auto a = dim_and_multiplicity(poly({1, 0, -2, 1}), 2);
  CHECK(a.dim == 1);
  CHECK(a.multiplicity == 1);
  const auto b = dim_and_multiplicity(poly({1}), 4);
  CHECK(b.dim == 4);
  CHECK(b.multiplicity == 1);
  for (int k = 1; k <= 6; ++k) {
    const auto c = dim_and_multiplicity(poly({1}) - IntPolynomial::monomial(k), 1);
    CHECK(c.dim == 0);
    CHECK(c.multiplicity == k);
  }
  CHECK_THROWS_AS(dim_and_multiplicity(poly({}), 2), ArgumentError);
}

TEST_CASE("hilbert_function examples") {
  CHECK(hilbert_function(ideal("x1^2, x1*x2", 2), 1) == 2);
  CHECK(hilbert_function(ideal("x1^2, x1*x2", 2), 5) == 1);
  for (int d = 0; d <= 6; ++d) CHECK(hilbert_function(MonomialIdeal::zero(2), d) == d + 1);
}

TEST_CASE("series coefficients equal the direct count") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& I : mixed(n, 53, 8)) {
      const auto series = series_coefficients(hilbert_numerator(I), n, 10);
      for (int d = 0; d <= 10; ++d) {
        REQUIRE(series[d] == count_outside(I, d));
        REQUIRE(series[d] == hilbert_function(I, d));
      }
    }
  }
}

TEST_CASE("numerator does not depend on generator order") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& I : mixed(n, 59, 6)) {
      const auto expected = hilbert_numerator(I);
      std::vector<Monomial> gens = I.gens();
      for (int shuffle = 0; shuffle < 4; ++shuffle) {
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(hilbert_numerator(gens, n) == expected);
      }
      // Redundant generators change nothing either.
      std::vector<Monomial> padded = gens;
      for (const auto& g : gens) padded.push_back(g * Monomial::variable(n, 0));
      std::shuffle(padded.begin(), padded.end(), rng);
      CHECK(hilbert_numerator(padded, n) == expected);
    }
  }
}

TEST_CASE("dimension and multiplicity agree with the standard pairs") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& I : mixed(n, 61, 10)) {
      const auto dm = dim_and_multiplicity(hilbert_numerator(I), n);
      const auto r = degrees(I);
      CHECK(dm.dim == r.dim);
      CHECK(dm.multiplicity == r.multiplicity);
    }
  }
}

TEST_CASE("numerator of a complete intersection of pure powers") {
  // (x1^a1, ..., xn^an) has numerator prod (1 - t^ai).
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<Monomial> gens;
    IntPolynomial expected = poly({1});
    for (int i = 0; i < n; ++i) {
      const int a = 1 + static_cast<int>(rng() % 4);
      gens.push_back(Monomial::variable(n, i, a));
      expected = expected * (poly({1}) - IntPolynomial::monomial(a));
    }
    CHECK(hilbert_numerator(minimalize(gens, n)) == expected);
  }
}
