#include "borel/monomial.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace borel {

VarSet::VarSet(std::initializer_list<int> zero_based) {
  for (int i : zero_based) insert(i);
}

VarSet VarSet::from_one_based(std::initializer_list<int> members) {
  VarSet s;
  for (int i : members) s.insert(i - 1);
  return s;
}

std::vector<int> VarSet::members() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Monomial::Monomial(int n) : n_(n) {
  if (n < 1 || n > kMaxVars) {
    throw StructuralError("variable count " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxVars) + "]");
  }
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) : Monomial(static_cast<int>(exponents.size())) {
  for (int i = 0; i < n_; ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(int n, int i, int power) {
  Monomial m(n);
  m.set(i, power);
  return m;
}

Monomial Monomial::squarefree(int n, VarSet vars) {
  Monomial m(n);
  for (int i : vars.members()) m.set(i, 1);
  return m;
}

void Monomial::set(int i, int exponent) {
  if (i < 0 || i >= n_) throw StructuralError("variable index out of range");
  if (exponent < 0) throw StructuralError("negative exponent");
  e_[i] = exponent;
}

int Monomial::degree() const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d += e_[i];
  return d;
}

VarSet Monomial::support() const {
  VarSet s;
  for (int i = 0; i < n_; ++i)
    if (e_[i] > 0) s.insert(i);
  return s;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.begin() + n_, [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(e_.begin(), e_.begin() + n_, [](int e) { return e <= 1; });
}

void Monomial::check_compatible(const Monomial& other) const {
  if (n_ != other.n_) throw StructuralError("monomials in different variable counts");
}

bool Monomial::divides(const Monomial& other) const {
  check_compatible(other);
  for (int i = 0; i < n_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_compatible(other);
  Monomial out(*this);
  for (int i = 0; i < n_; ++i) out.e_[i] += other.e_[i];
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_compatible(other);
  Monomial out(*this);
  for (int i = 0; i < n_; ++i) out.e_[i] = std::max(e_[i], other.e_[i]);
  return out;
}

Monomial Monomial::colon(const Monomial& other) const {
  check_compatible(other);
  Monomial out(*this);
  for (int i = 0; i < n_; ++i) out.e_[i] = std::max(e_[i] - other.e_[i], 0);
  return out;
}

Monomial Monomial::squarefree_part() const {
  Monomial out(*this);
  for (int i = 0; i < n_; ++i) out.e_[i] = std::min(e_[i], 1);
  return out;
}

Monomial Monomial::drop(VarSet vars) const {
  Monomial out(*this);
  for (int i = 0; i < n_; ++i)
    if (vars.contains(i)) out.e_[i] = 0;
  return out;
}

bool operator==(const Monomial& a, const Monomial& b) {
  return a.n_ == b.n_ && std::equal(a.e_.begin(), a.e_.begin() + a.n_, b.e_.begin());
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  for (int i = a.num_vars() - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

MonomialIdeal::MonomialIdeal(int n) : n_(n) {
  if (n < 1 || n > kMaxVars) throw StructuralError("variable count out of range");
}

MonomialIdeal MonomialIdeal::unit(int n) {
  MonomialIdeal ideal(n);
  ideal.gens_.push_back(Monomial(n));
  return ideal;
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

MonomialIdeal minimalize(std::span<const Monomial> gens, int n) {
  MonomialIdeal ideal(n);
  for (const Monomial& g : gens) {
    if (g.num_vars() != n) {
      throw StructuralError("monomial has " + std::to_string(g.num_vars()) +
                            " exponents, expected " + std::to_string(n));
    }
  }
  std::vector<Monomial> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // A divisor never has larger degree, so one pass in degree order suffices.
  for (const Monomial& g : sorted) {
    const bool redundant = std::any_of(ideal.gens_.begin(), ideal.gens_.end(),
                                       [&](const Monomial& kept) { return kept.divides(g); });
    if (!redundant) ideal.gens_.push_back(g);
  }
  return ideal;
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.num_vars() != ideal.num_vars()) throw StructuralError("variable count mismatch");
  return std::any_of(ideal.gens().begin(), ideal.gens().end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> parts;
  parts.reserve(ideal.size());
  for (const Monomial& g : ideal.gens()) parts.push_back(g.squarefree_part());
  return minimalize(parts, ideal.num_vars());
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw StructuralError("variable count mismatch");
  std::vector<Monomial> all(a.gens());
  all.insert(all.end(), b.gens().begin(), b.gens().end());
  return minimalize(all, a.num_vars());
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) throw StructuralError("variable count mismatch");
  std::vector<Monomial> lcms;
  lcms.reserve(a.size() * b.size());
  for (const Monomial& g : a.gens())
    for (const Monomial& h : b.gens()) lcms.push_back(g.lcm(h));
  return minimalize(lcms, a.num_vars());
}

MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> quotients;
  quotients.reserve(ideal.size());
  for (const Monomial& g : ideal.gens()) quotients.push_back(g.colon(m));
  return minimalize(quotients, ideal.num_vars());
}

Monomial ideal_lcm(const MonomialIdeal& ideal) {
  Monomial out(ideal.num_vars());
  for (const Monomial& g : ideal.gens()) out = out.lcm(g);
  return out;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
  for (const Monomial& u : ideal.gens()) {
    for (int i = 0; i < ideal.num_vars(); ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < i; ++j) {
        Monomial moved = u;
        moved.set(i, u[i] - 1);
        moved.set(j, u[j] + 1);
        if (!contains(ideal, moved)) return false;
      }
    }
  }
  return true;
}

namespace {

// Is x_j^t * v in the ideal for some t >= 0?
bool saturates_into(const MonomialIdeal& ideal, const Monomial& v, int j) {
  return std::any_of(ideal.gens().begin(), ideal.gens().end(), [&](const Monomial& g) {
    for (int k = 0; k < v.num_vars(); ++k)
      if (k != j && g[k] > v[k]) return false;
    return true;
  });
}

}  // namespace

bool is_borel_type(const MonomialIdeal& ideal) {
  for (const Monomial& u : ideal.gens()) {
    for (int i = 0; i < ideal.num_vars(); ++i) {
      if (u[i] == 0) continue;
      Monomial stripped = u;
      stripped.set(i, 0);
      for (int j = 0; j < i; ++j)
        if (!saturates_into(ideal, stripped, j)) return false;
    }
  }
  return true;
}

MonomialIdeal borel_closure(std::span<const Monomial> seeds, int n) {
  if (seeds.empty()) throw ArgumentError("Borel closure of an empty set");
  std::set<Monomial, decltype(&canonical_less)> seen(canonical_less);
  std::deque<Monomial> frontier;
  for (const Monomial& u : seeds) {
    if (u.num_vars() != n) throw StructuralError("variable count mismatch");
    if (seen.insert(u).second) frontier.push_back(u);
  }
  while (!frontier.empty()) {
    const Monomial u = frontier.front();
    frontier.pop_front();
    for (int i = 1; i < n; ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < i; ++j) {
        Monomial moved = u;
        moved.set(i, u[i] - 1);
        moved.set(j, u[j] + 1);
        if (seen.insert(moved).second) frontier.push_back(moved);
      }
    }
  }
  std::vector<Monomial> all(seen.begin(), seen.end());
  return minimalize(all, n);
}

std::vector<int> md_profile(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ArgumentError("Md-profile of the zero ideal");
  std::vector<int> md(ideal.num_vars(), 0);
  for (const Monomial& g : ideal.gens())
    for (int i = 0; i < ideal.num_vars(); ++i) md[i] = std::max(md[i], g[i]);
  return md;
}

MonomialIdeal truncate(const MonomialIdeal& ideal, int i) {
  const int n = ideal.num_vars();
  if (i < 1 || i > n) {
    throw ArgumentError("truncation index " + std::to_string(i) + " outside [1, " +
                        std::to_string(n) + "]");
  }
  std::vector<Monomial> kept;
  for (const Monomial& g : ideal.gens()) {
    const auto e = g.exponents();
    if (std::any_of(e.begin() + i, e.end(), [](int x) { return x > 0; })) continue;
    kept.emplace_back(e.first(i));
  }
  return minimalize(kept, i);
}

int gen_degree(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ArgumentError("generating degree of the zero ideal");
  int d = 0;
  for (const Monomial& g : ideal.gens()) d = std::max(d, g.degree());
  return d;
}

}  // namespace borel
