#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "borel/bigint.hpp"
#include "borel/linalg.hpp"
#include "borel/monomial.hpp"
#include "borel/standard_pairs.hpp"

namespace borel {

// Closed-form upper bounds. `d` is a bound on generator degrees, `r` a
// dimension of S/I (or the index of an arithmetic degree).

/// Total geometric degree of a positive-dimensional I: d^{n-1}.
BigInt bound_geom_total(int n, int d);

struct RegRadicalBound {
  /// d^{n-1} for r = 1, else (d^{n-r}(d^{n-r}-1)/2 + d^{n-1})^{2^{r-2}}.
  BigInt sharp;
  /// d^{(n-1) 2^{r-1}}.
  BigInt cap;
};

/// reg(sqrt(I)) for dim S/I = r with 1 <= r <= n-1.
RegRadicalBound bound_reg_radical(int n, int d, int r);

/// reg(sqrt(I)) from multiplicity e and geometric degree g, for r >= 2:
/// (e(e-1)/2 + g)^{2^{r-2}}.
BigInt bound_intermediate_reg_radical(const BigInt& e, const BigInt& g, int r);

/// std_r(I) <= Md_1(I)...Md_{n-r}(I). Empty unless I is of Borel type.
std::optional<BigInt> bound_std_md(const MonomialIdeal& ideal, int r);

/// arith-deg_r(I) <= prod_{i <= n-r} D(I_[i]). Empty unless I is of Borel type
/// with every truncation non-zero.
std::optional<BigInt> bound_trunc_product(const MonomialIdeal& ideal, int r);

/// binomial(L + n-r-1, n-r) with L the largest sum of the first n-r exponents
/// over the Borel generators.
BigInt bound_borel_gen(std::span<const Monomial> borel_gens, int n, int r);

/// 2 d^{2^{n-r-1}}.
BigInt bound_arith_universal(int n, int d, int r);

/// The unique minimal U with borel_closure(U) = I, for strongly stable I.
std::vector<Monomial> borel_generators(const MonomialIdeal& ideal);

struct BoundCheck {
  std::string name;
  bool applicable = false;
  /// Both present exactly when applicable.
  std::optional<BigInt> lhs;
  std::optional<BigInt> rhs;
  bool holds = true;

  friend bool operator==(const BoundCheck&, const BoundCheck&) = default;
};

struct Provenance {
  std::string family;
  std::uint64_t seed = 0;
  int index = 0;
  std::string rng;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct BoundReport {
  std::string ideal_id;
  MonomialIdeal ideal;
  bool strongly_stable = false;
  bool borel_type = false;
  bool squarefree = false;
  DegreeReport degrees;
  int gen_degree = 0;
  int reg = 0;
  int reg_radical = 0;
  FieldSpec field;
  std::vector<BoundCheck> checks;
  std::optional<Provenance> provenance;

  bool all_hold() const;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// 16 hex digits of the 64-bit FNV-1a hash of the canonical ideal text.
std::string ideal_id(const MonomialIdeal& ideal);

/// Computes every invariant of a proper non-zero ideal and evaluates each bound.
BoundReport verify_instance(const MonomialIdeal& ideal, FieldSpec field = {});

/// Verifies all ideals (in parallel when allowed) and returns the reports sorted by ideal_id.
std::vector<BoundReport> verify_corpus(const std::vector<MonomialIdeal>& ideals, FieldSpec field = {},
                                       const std::optional<Provenance>& provenance = std::nullopt);

struct CheckSummary {
  std::string name;
  int instances = 0;
  int applicable = 0;
  int held = 0;
  /// Smallest rhs - lhs over applicable instances.
  std::optional<BigInt> min_slack;
};

std::vector<CheckSummary> summarize(const std::vector<BoundReport>& reports);

}  // namespace borel
