#include <doctest.h>

#include "borel/corpus.hpp"
#include "borel/io.hpp"
#include "borel/standard_pairs.hpp"
#include "oracles.hpp"

using namespace borel;
using oracle::ideal;

namespace {

Monomial M(const char* text, int n) { return parse_monomial(text, n); }

StandardPair P(const char* u, std::initializer_list<int> z, int n) {
  return {M(u, n), VarSet::from_one_based(z)};
}

std::vector<MonomialIdeal> corpus(Family f, int n, std::uint64_t seed, int count, int max_deg = 3) {
  return gen_corpus(CorpusSpec{n, count, seed, f, max_deg, 3});
}

std::vector<MonomialIdeal> mixed(int n, std::uint64_t seed, int count) {
  std::vector<MonomialIdeal> out;
  for (Family f : {Family::strongly_stable, Family::borel_type, Family::general, Family::squarefree})
    for (auto& i : corpus(f, n, seed, count)) out.push_back(std::move(i));
  return out;
}

bool in_cell(const StandardPair& p, const Monomial& m) {
  for (int i = 0; i < m.num_vars(); ++i) {
    if (p.free_vars.contains(i) ? m[i] < p.u[i] : m[i] != p.u[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("is_admissible") {
  const auto I = ideal("x1^2, x1*x2", 2);
  CHECK(is_admissible(I, Monomial(2), VarSet{1}));
  CHECK_FALSE(is_admissible(I, M("x1", 2), VarSet{1}));
  CHECK(is_admissible(I, Monomial(2), VarSet{}));
  CHECK_FALSE(is_admissible(MonomialIdeal::unit(2), Monomial(2), VarSet{}));
  CHECK(is_admissible(MonomialIdeal::zero(2), Monomial(2), VarSet::all(2)));
  CHECK_THROWS_AS(is_admissible(I, M("x2", 2), VarSet{1}), ArgumentError);
}

TEST_CASE("is_admissible agrees with the cell oracle") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& I : mixed(n, 41, 8)) {
      const int box = gen_degree(I);
      std::vector<int> e(n, 0);
      while (true) {
        const Monomial u(std::span<const int>(e.data(), e.size()));
        const std::uint32_t rest = u.support().complement(n).bits();
        for (std::uint32_t z = rest;; z = (z - 1) & rest) {
          REQUIRE(is_admissible(I, u, VarSet(z)) == oracle::cell_misses(I.gens(), u, VarSet(z)));
          if (z == 0) break;
        }
        int i = 0;
        while (i < n && e[i] == box) e[i++] = 0;
        if (i == n) break;
        ++e[i];
      }
    }
  }
}

TEST_CASE("standard pairs of small examples") {
  CHECK(standard_pairs(ideal("x1^2, x1*x2", 2)) ==
        std::vector<StandardPair>{P("1", {2}, 2), P("x1", {}, 2)});
  CHECK(standard_pairs(oracle::principal_borel(M("x2*x3", 3))) ==
        std::vector<StandardPair>{P("1", {3}, 3), P("x1", {}, 3), P("x2", {}, 3)});
  CHECK(standard_pairs(MonomialIdeal::zero(3)) == std::vector<StandardPair>{P("1", {1, 2, 3}, 3)});
  CHECK(standard_pairs(MonomialIdeal::unit(3)).empty());
  CHECK(standard_pairs(ideal("x1*x2", 2)) ==
        std::vector<StandardPair>{P("1", {1}, 2), P("1", {2}, 2)});
}

TEST_CASE("standard pairs match the brute-force maximal filter") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& I : mixed(n, 7, 15)) {
      const auto md = md_profile(I);
      const int box = *std::max_element(md.begin(), md.end());
      REQUIRE(standard_pairs(I) == oracle::standard_pairs_brute(I, box));
    }
  }
  for (const auto& I : corpus(Family::general, 4, 8, 12, 2)) {
    REQUIRE(standard_pairs(I) == oracle::standard_pairs_brute(I, 2));
  }
}

TEST_CASE("cells cover exactly the standard monomials") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& I : mixed(n, 13, 10)) {
      const auto pairs = standard_pairs(I);
      const int top = 2 * n * gen_degree(I);
      CHECK(cover_holds(I, pairs, top));
      for (int d = 0; d <= std::min(top, 8); ++d) {
        for_each_monomial_of_degree(n, d, [&](const Monomial& m) {
          bool covered = false;
          for (const auto& p : pairs) covered = covered || in_cell(p, m);
          REQUIRE(covered == !oracle::in_ideal(I.gens(), m));
        });
      }
    }
  }
  const auto I = ideal("x1^2, x1*x2", 2);
  CHECK_FALSE(cover_holds(I, {P("1", {2}, 2)}, 3));
  CHECK_NOTHROW(certified_standard_pairs(I, 4));
}

TEST_CASE("standard pairs form an antichain of admissible pairs") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& I : mixed(n, 19, 10)) {
      const auto pairs = standard_pairs(I);
      for (const auto& p : pairs) {
        CHECK(p.u.support().disjoint(p.free_vars));
        CHECK(oracle::cell_misses(I.gens(), p.u, p.free_vars));
        for (const auto& q : pairs) {
          if (p == q) continue;
          CHECK_FALSE(oracle::cell_inside(p, q));
          CHECK(p.cell_subset_of(q) == oracle::cell_inside(p, q));
        }
      }
    }
  }
}

TEST_CASE("Borel-type pairs sit in the Md box with suffix free sets") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<MonomialIdeal> ideals = corpus(Family::borel_type, n, 29, 25);
    for (auto& i : corpus(Family::strongly_stable, n, 29, 25)) ideals.push_back(std::move(i));
    for (const auto& I : ideals) {
      REQUIRE(is_borel_type(I));
      const auto md = md_profile(I);
      const auto counts = std_counts(I);
      for (const auto& p : standard_pairs(I)) {
        const int r = p.free_vars.size();
        VarSet suffix;
        for (int i = n - r; i < n; ++i) suffix.insert(i);
        CHECK(p.free_vars == suffix);
        for (int i = 0; i < n - r; ++i) CHECK(p.u[i] <= md[i] - 1);
      }
      for (int r = 0; r <= n; ++r) {
        std::int64_t product = 1;
        for (int i = 0; i < n - r; ++i) product *= md[i];
        CHECK(counts[r] <= product);
      }
    }
  }
}

TEST_CASE("std_counts") {
  CHECK(std_counts(ideal("x1^2, x1*x2", 2)) == std::vector<std::int64_t>{1, 1, 0});
  CHECK(std_counts(oracle::principal_borel(M("x2*x3", 3))) == std::vector<std::int64_t>{2, 1, 0, 0});
  CHECK(std_counts(MonomialIdeal::zero(2)) == std::vector<std::int64_t>{0, 0, 1});
}

TEST_CASE("associated and minimal primes") {
  using V = std::vector<VarSet>;
  CHECK(associated_primes(ideal("x1^2, x1*x2", 2)) == V{VarSet::from_one_based({1}), VarSet::from_one_based({1, 2})});
  CHECK(associated_primes(ideal("x1*x2", 2)) == V{VarSet::from_one_based({1}), VarSet::from_one_based({2})});
  CHECK(associated_primes(ideal("x1", 3)) == V{VarSet::from_one_based({1})});
  CHECK(minimal_primes(ideal("x1^2, x1*x2", 2)) == V{VarSet::from_one_based({1})});
  CHECK(minimal_primes(ideal("x1*x2", 2)) == V{VarSet::from_one_based({1}), VarSet::from_one_based({2})});

  for (int n = 1; n <= 5; ++n) {
    for (const auto& I : mixed(n, 37, 10)) {
      const auto ass = associated_primes(I);
      const auto min = minimal_primes(I);
      CHECK(min == minimal_primes(radical(I)));
      // Minimal primes are the inclusion-minimal associated primes.
      for (VarSet p : ass) {
        bool minimal = true;
        for (VarSet q : ass) minimal = minimal && !(q != p && q.subset_of(p));
        CHECK(minimal == (std::find(min.begin(), min.end(), p) != min.end()));
      }
      // A square-free ideal is the intersection of its minimal primes.
      if (I.is_squarefree()) CHECK(ass == min);
    }
  }
}

TEST_CASE("degrees") {
  const auto a = degrees(ideal("x1^2, x1*x2", 2));
  CHECK(a.dim == 1);
  CHECK(a.arith == std::vector<std::int64_t>{1, 1, 0});
  CHECK(a.geom == std::vector<std::int64_t>{0, 1, 0});
  CHECK(a.multiplicity == 1);
  CHECK(a.arith_total == 2);
  CHECK(a.geom_total == 1);

  const auto b = degrees(oracle::principal_borel(M("x2*x3", 3)));
  CHECK(b.dim == 1);
  CHECK(b.arith == std::vector<std::int64_t>{2, 1, 0, 0});
  CHECK(b.geom == std::vector<std::int64_t>{0, 1, 0, 0});
  CHECK(b.multiplicity == 1);

  const auto c = degrees(ideal("x1*x2", 2));
  CHECK(c.arith == std::vector<std::int64_t>{0, 2, 0});
  CHECK(c.geom == std::vector<std::int64_t>{0, 2, 0});
  CHECK(c.multiplicity == 2);

  const auto z = degrees(MonomialIdeal::zero(3));
  CHECK(z.dim == 3);
  CHECK(z.multiplicity == 1);
  CHECK_THROWS_AS(degrees(MonomialIdeal::unit(2)), ArgumentError);

  for (int n = 1; n <= 5; ++n) {
    for (const auto& I : mixed(n, 43, 10)) {
      const auto r = degrees(I);
      std::int64_t at = 0;
      std::int64_t gt = 0;
      for (int k = 0; k <= n; ++k) {
        CHECK(r.geom[k] <= r.arith[k]);
        at += r.arith[k];
        gt += r.geom[k];
      }
      CHECK(r.arith_total == at);
      CHECK(r.geom_total == gt);
      CHECK(r.multiplicity == r.geom[r.dim]);
      const auto rad = degrees(radical(I));
      CHECK(rad.arith == rad.geom);
      for (int k = 0; k <= n; ++k) {
        CHECK(rad.geom[k] <= r.geom[k]);
        CHECK((rad.geom[k] > 0) == (r.geom[k] > 0));
      }
    }
  }
}
