#pragma once

#include <cstdint>
#include <vector>

#include "borel/monomial.hpp"

namespace borel {

/// The cell u*K[Z]: all monomials u*m with m supported on Z.
struct StandardPair {
  Monomial u;
  VarSet free_vars;

  bool contains(const Monomial& m) const;
  /// u*K[Z] is a subset of other.u*K[other.Z].
  bool cell_subset_of(const StandardPair& other) const;

  friend bool operator==(const StandardPair&, const StandardPair&) = default;
};

/// Orders by |Z| descending, then Z, then u canonically.
bool pair_less(const StandardPair& a, const StandardPair& b);

struct DegreeReport {
  int n = 0;
  int dim = 0;
  std::vector<std::int64_t> std_counts;
  std::vector<std::int64_t> arith;
  std::vector<std::int64_t> geom;
  std::int64_t arith_total = 0;
  std::int64_t geom_total = 0;
  std::int64_t multiplicity = 0;

  friend bool operator==(const DegreeReport&, const DegreeReport&) = default;
};

/// u*K[Z] meets I only in 0. Throws if supp(u) meets Z.
bool is_admissible(const MonomialIdeal& ideal, const Monomial& u, VarSet free_vars);

/// The standard pairs of a proper ideal, sorted by pair_less. Empty for the unit ideal.
std::vector<StandardPair> standard_pairs(const MonomialIdeal& ideal);

/// Recomputes the pairs and checks that, up to total degree `max_degree`, the
/// cells cover exactly the standard monomials. Throws InternalConsistencyError otherwise.
std::vector<StandardPair> certified_standard_pairs(const MonomialIdeal& ideal, int max_degree);

/// Finds the first monomial of degree <= max_degree where "not in I" and
/// "in some cell" disagree. Returns true if there is none.
bool cover_holds(const MonomialIdeal& ideal, const std::vector<StandardPair>& pairs,
                 int max_degree);

/// Entry r counts the pairs with |Z| = r, r = 0..n.
std::vector<std::int64_t> std_counts(const MonomialIdeal& ideal);

/// Ass(S/I) as sets of generating variables of the coordinate primes.
std::vector<VarSet> associated_primes(const MonomialIdeal& ideal);
std::vector<VarSet> minimal_primes(const MonomialIdeal& ideal);

DegreeReport degrees(const MonomialIdeal& ideal);

}  // namespace borel
