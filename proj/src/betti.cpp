#include "borel/betti.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace borel {

std::int64_t BettiTable::at(int i, int j) const {
  const auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::quotient_regularity() const {
  int reg = std::numeric_limits<int>::min();
  for (const auto& [key, rank] : entries)
    if (rank != 0) reg = std::max(reg, key.second - key.first);
  return reg;
}

namespace {

// Position of `k` among the members of `face` (all zero-based, increasing).
int position_in(VarSet face, int k) { return std::popcount(face.bits() & ((1u << k) - 1)); }

// Betti numbers of S/I in multidegree alpha: homology of the strand of the
// Koszul complex K(x_1..x_n) tensor S/I. In homological degree i its basis is
// e_F tensor x^(alpha - e_F) for |F| = i, F within supp(alpha), with the
// monomial outside I.
std::vector<std::int64_t> strand_betti(const MonomialIdeal& ideal, const Monomial& alpha,
                                       FieldSpec field) {
  const VarSet support = alpha.support();
  const int top = support.size();
  std::vector<std::vector<VarSet>> basis(top + 2);
  // Enumerate subsets of the support.
  const std::uint32_t s = support.bits();
  for (std::uint32_t f = s;; f = (f - 1) & s) {
    const VarSet face(f);
    Monomial m = alpha;
    for (int k : face.members()) m.set(k, m[k] - 1);
    if (!contains(ideal, m)) basis[face.size()].push_back(face);
    if (f == 0) break;
  }
  for (auto& b : basis) std::sort(b.begin(), b.end());

  // rank of d_i : K_i -> K_{i-1}, for i = 1..top.
  std::vector<int> boundary_rank(top + 2, 0);
  for (int i = 1; i <= top; ++i) {
    const auto& cols = basis[i];
    const auto& rows = basis[i - 1];
    if (cols.empty() || rows.empty()) continue;
    IntMatrix d(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
      const VarSet face = cols[c];
      for (int k : face.members()) {
        VarSet smaller = face;
        smaller.erase(k);
        const auto it = std::lower_bound(rows.begin(), rows.end(), smaller);
        // Missing rows are faces whose monomial x_k * m fell into I.
        if (it == rows.end() || *it != smaller) continue;
        d(static_cast<int>(it - rows.begin()), c) = (position_in(face, k) % 2 == 0) ? 1 : -1;
      }
    }
    boundary_rank[i] = rank(d, field);
  }

  std::vector<std::int64_t> betti(top + 1, 0);
  for (int i = 0; i <= top; ++i) {
    betti[i] = static_cast<std::int64_t>(basis[i].size()) - boundary_rank[i] - boundary_rank[i + 1];
  }
  return betti;
}

// Visits every exponent vector with alpha <= box (if given) and |alpha| <= max_degree.
template <typename Fn>
void for_each_multidegree(int n, int max_degree, const Monomial* box, Fn&& fn) {
  Monomial alpha(n);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      fn(static_cast<const Monomial&>(alpha));
      return;
    }
    const int limit = box ? std::min(left, (*box)[i]) : left;
    for (int e = 0; e <= limit; ++e) {
      alpha.set(i, e);
      self(self, i + 1, left - e);
    }
    alpha.set(i, 0);
  };
  rec(rec, 0, max_degree);
}

}  // namespace

BettiTable koszul_betti(const MonomialIdeal& ideal, FieldSpec field, KoszulOptions options) {
  field.validate();
  if (ideal.is_unit()) throw ArgumentError("Betti numbers of the unit ideal");
  const Monomial lcm = ideal_lcm(ideal);

  BettiTable table;
  table.field = field;
  table.cutoff = options.cutoff.value_or(lcm.degree() + 1);
  for_each_multidegree(ideal.num_vars(), table.cutoff, options.lcm_box ? &lcm : nullptr,
                       [&](const Monomial& alpha) {
                         const auto betti = strand_betti(ideal, alpha, field);
                         const int j = alpha.degree();
                         for (int i = 0; i < static_cast<int>(betti.size()); ++i)
                           if (betti[i] != 0) table.entries[{i, j}] += betti[i];
                       });
  return table;
}

int regularity(const MonomialIdeal& ideal, FieldSpec field) {
  if (ideal.is_zero()) throw ArgumentError("regularity of the zero ideal");
  return koszul_betti(ideal, field).quotient_regularity() + 1;
}

bool SimplicialComplex::has_face(VarSet face) const {
  return std::any_of(facets.begin(), facets.end(), [&](VarSet f) { return face.subset_of(f); });
}

SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw ArgumentError("Stanley-Reisner complex of a non-square-free ideal");
  if (ideal.is_unit()) throw ArgumentError("Stanley-Reisner complex of the unit ideal");
  const int n = ideal.num_vars();
  auto is_face = [&](VarSet s) { return !contains(ideal, Monomial::squarefree(n, s)); };

  SimplicialComplex complex;
  complex.num_vertices = n;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    const VarSet face(bits);
    if (!is_face(face)) continue;
    bool maximal = true;
    for (int k = 0; k < n && maximal; ++k) {
      if (face.contains(k)) continue;
      VarSet bigger = face;
      bigger.insert(k);
      maximal = !is_face(bigger);
    }
    if (maximal) complex.facets.push_back(face);
  }
  return complex;
}

std::vector<int> induced_homology_ranks(const SimplicialComplex& complex, VarSet subset,
                                        FieldSpec field) {
  field.validate();
  const int w = subset.size();
  // faces[k + 1] holds the k-dimensional faces inside `subset`, sorted.
  std::vector<std::vector<VarSet>> faces(w + 1);
  const std::uint32_t s = subset.bits();
  for (std::uint32_t f = s;; f = (f - 1) & s) {
    if (complex.has_face(VarSet(f))) faces[std::popcount(f)].push_back(VarSet(f));
    if (f == 0) break;
  }
  for (auto& level : faces) std::sort(level.begin(), level.end());

  // boundary_rank[k + 1] = rank of the map from k-faces to (k-1)-faces.
  std::vector<int> boundary_rank(w + 2, 0);
  for (int size = 1; size <= w; ++size) {
    const auto& cols = faces[size];
    const auto& rows = faces[size - 1];
    if (cols.empty() || rows.empty()) continue;
    IntMatrix d(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
      for (int k : cols[c].members()) {
        VarSet smaller = cols[c];
        smaller.erase(k);
        const auto it = std::lower_bound(rows.begin(), rows.end(), smaller);
        d(static_cast<int>(it - rows.begin()), c) = (position_in(cols[c], k) % 2 == 0) ? 1 : -1;
      }
    }
    boundary_rank[size] = rank(d, field);
  }

  std::vector<int> ranks(w + 1, 0);
  for (int size = 0; size <= w; ++size) {
    ranks[size] = static_cast<int>(faces[size].size()) - boundary_rank[size] - boundary_rank[size + 1];
  }
  return ranks;
}

int hochster_regularity(const MonomialIdeal& ideal, FieldSpec field) {
  if (ideal.is_zero()) throw ArgumentError("regularity of the zero ideal");
  const SimplicialComplex complex = stanley_reisner(ideal);
  const int n = ideal.num_vars();
  int reg = std::numeric_limits<int>::min();
  for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
    const auto ranks = induced_homology_ranks(complex, VarSet(bits), field);
    for (int idx = 0; idx < static_cast<int>(ranks.size()); ++idx)
      if (ranks[idx] != 0) reg = std::max(reg, (idx - 1) + 2);
  }
  return reg;
}

}  // namespace borel
