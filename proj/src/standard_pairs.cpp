#include "borel/standard_pairs.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

namespace borel {

bool StandardPair::contains(const Monomial& m) const {
  for (int i = 0; i < m.num_vars(); ++i) {
    if (free_vars.contains(i) ? m[i] < u[i] : m[i] != u[i]) return false;
  }
  return true;
}

bool StandardPair::cell_subset_of(const StandardPair& other) const {
  if (!other.u.divides(u)) return false;
  const VarSet moved = u.colon(other.u).support();
  return (moved | free_vars).subset_of(other.free_vars);
}

bool pair_less(const StandardPair& a, const StandardPair& b) {
  if (a.free_vars.size() != b.free_vars.size()) return a.free_vars.size() > b.free_vars.size();
  if (a.free_vars != b.free_vars) return a.free_vars < b.free_vars;
  return canonical_less(a.u, b.u);
}

namespace {

bool admissible_unchecked(const MonomialIdeal& ideal, const Monomial& u, VarSet free_vars) {
  // g | u*m with m in K[Z] iff the part of g off Z divides u.
  return std::none_of(ideal.gens().begin(), ideal.gens().end(),
                      [&](const Monomial& g) { return g.drop(free_vars).divides(u); });
}

// An admissible (u, Z) is maximal iff no single step up is admissible: either
// freeing a variable k outside supp(u) and Z, or freeing k in supp(u) after
// removing x_k from u. If (u, Z) sits inside an admissible (u', Z') with
// Z' != Z, pick k in Z' \ Z; the corresponding step lands inside (u', Z')
// and admissibility passes to subcells. If Z' = Z then u' = u.
bool is_maximal(const MonomialIdeal& ideal, const Monomial& u, VarSet free_vars) {
  for (int k = 0; k < ideal.num_vars(); ++k) {
    if (free_vars.contains(k)) continue;
    VarSet wider = free_vars;
    wider.insert(k);
    Monomial lowered = u;
    lowered.set(k, 0);
    if (admissible_unchecked(ideal, lowered, wider)) return false;
  }
  return true;
}

// Enumerates u with u_i in [0, bound_i) off `free_vars`, u_i = 0 on it.
template <typename Fn>
void for_each_in_box(int n, const std::vector<int>& bound, VarSet free_vars, Fn&& fn) {
  for (int i = 0; i < n; ++i)
    if (!free_vars.contains(i) && bound[i] <= 0) return;
  Monomial u(n);
  while (true) {
    fn(static_cast<const Monomial&>(u));
    int i = 0;
    for (; i < n; ++i) {
      if (free_vars.contains(i)) continue;
      if (u[i] + 1 < bound[i]) {
        u.set(i, u[i] + 1);
        break;
      }
      u.set(i, 0);
    }
    if (i == n) return;
  }
}

}  // namespace

bool is_admissible(const MonomialIdeal& ideal, const Monomial& u, VarSet free_vars) {
  if (u.num_vars() != ideal.num_vars()) throw StructuralError("variable count mismatch");
  if (!u.support().disjoint(free_vars)) {
    throw ArgumentError("support of u meets the free variables");
  }
  return admissible_unchecked(ideal, u, free_vars);
}

// Every standard pair (u, Z) has u_i <= Md_i(I) - 1 for i outside Z, for any
// monomial ideal: if u_i >= Md_i then every generator whose part off Z+x_i
// divides u/x_i^{u_i} also has its part off Z dividing u, so
// (u/x_i^{u_i}, Z+x_i) is admissible and strictly larger. The box is
// therefore complete; cover_holds certifies it on computed instances.
std::vector<StandardPair> standard_pairs(const MonomialIdeal& ideal) {
  const int n = ideal.num_vars();
  if (ideal.is_unit()) return {};
  if (ideal.is_zero()) return {StandardPair{Monomial(n), VarSet::all(n)}};

  const std::vector<int> md = md_profile(ideal);
  std::vector<StandardPair> pairs;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    const VarSet free_vars(bits);
    for_each_in_box(n, md, free_vars, [&](const Monomial& u) {
      if (admissible_unchecked(ideal, u, free_vars) && is_maximal(ideal, u, free_vars)) {
        pairs.push_back(StandardPair{u, free_vars});
      }
    });
  }
  std::sort(pairs.begin(), pairs.end(), pair_less);
  return pairs;
}

bool cover_holds(const MonomialIdeal& ideal, const std::vector<StandardPair>& pairs,
                 int max_degree) {
  // With supp(u) off Z, m lies in u*K[Z] iff m with its Z-exponents zeroed is u,
  // so such pairs are looked up by Z. Any other pair is tested directly.
  struct Hash {
    std::size_t operator()(const Monomial& m) const {
      const auto e = m.exponents();
      return boost::hash_range(e.begin(), e.end());
    }
  };
  std::map<VarSet, std::unordered_set<Monomial, Hash>> by_free_set;
  std::vector<StandardPair> irregular;
  for (const StandardPair& p : pairs) {
    if (p.u.support().disjoint(p.free_vars)) {
      by_free_set[p.free_vars].insert(p.u);
    } else {
      irregular.push_back(p);
    }
  }
  auto covered = [&](const Monomial& m) {
    for (const auto& [z, us] : by_free_set)
      if (us.count(m.drop(z))) return true;
    return std::any_of(irregular.begin(), irregular.end(), [&](const StandardPair& p) { return p.contains(m); });
  };

  const int n = ideal.num_vars();
  bool ok = true;
  for (int d = 0; d <= max_degree && ok; ++d) {
    for_each_monomial_of_degree(n, d, [&](const Monomial& m) {
      if (ok && contains(ideal, m) == covered(m)) ok = false;
    });
  }
  return ok;
}

std::vector<StandardPair> certified_standard_pairs(const MonomialIdeal& ideal, int max_degree) {
  auto pairs = standard_pairs(ideal);
  if (!cover_holds(ideal, pairs, max_degree)) {
    throw InternalConsistencyError("standard pair cells do not cover the standard monomials");
  }
  return pairs;
}

std::vector<std::int64_t> std_counts(const MonomialIdeal& ideal) {
  std::vector<std::int64_t> counts(ideal.num_vars() + 1, 0);
  for (const StandardPair& p : standard_pairs(ideal)) ++counts[p.free_vars.size()];
  return counts;
}

namespace {

std::vector<VarSet> distinct_free_sets(const std::vector<StandardPair>& pairs) {
  std::vector<VarSet> sets;
  for (const StandardPair& p : pairs) sets.push_back(p.free_vars);
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

// P_Z is minimal among associated primes iff no other Z' strictly contains Z.
std::vector<VarSet> maximal_free_sets(const std::vector<VarSet>& sets) {
  std::vector<VarSet> out;
  for (VarSet z : sets) {
    const bool dominated = std::any_of(sets.begin(), sets.end(), [&](VarSet other) {
      return other != z && z.subset_of(other);
    });
    if (!dominated) out.push_back(z);
  }
  return out;
}

std::vector<VarSet> to_primes(const std::vector<VarSet>& free_sets, int n) {
  std::vector<VarSet> primes;
  for (VarSet z : free_sets) primes.push_back(z.complement(n));
  std::sort(primes.begin(), primes.end());
  return primes;
}

}  // namespace

std::vector<VarSet> associated_primes(const MonomialIdeal& ideal) {
  return to_primes(distinct_free_sets(standard_pairs(ideal)), ideal.num_vars());
}

std::vector<VarSet> minimal_primes(const MonomialIdeal& ideal) {
  return to_primes(maximal_free_sets(distinct_free_sets(standard_pairs(ideal))), ideal.num_vars());
}

DegreeReport degrees(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw ArgumentError("degrees of the unit ideal");
  const int n = ideal.num_vars();
  const auto pairs = standard_pairs(ideal);
  const auto minimal = maximal_free_sets(distinct_free_sets(pairs));

  DegreeReport report;
  report.n = n;
  report.std_counts.assign(n + 1, 0);
  report.geom.assign(n + 1, 0);
  for (const StandardPair& p : pairs) {
    const int r = p.free_vars.size();
    ++report.std_counts[r];
    if (std::find(minimal.begin(), minimal.end(), p.free_vars) != minimal.end()) ++report.geom[r];
    report.dim = std::max(report.dim, r);
  }
  report.arith = report.std_counts;
  for (int r = 0; r <= n; ++r) {
    report.arith_total += report.arith[r];
    report.geom_total += report.geom[r];
  }
  report.multiplicity = report.geom[report.dim];
  return report;
}

}  // namespace borel
