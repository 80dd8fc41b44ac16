#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "borel/errors.hpp"

namespace borel {

inline constexpr int kMaxVars = 16;

/// Subset of the variables {x_1, ..., x_n}, stored as a bitmask (bit i is x_{i+1}).
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint32_t bits) : bits_(bits) {}
  VarSet(std::initializer_list<int> zero_based);

  static constexpr VarSet all(int n) { return VarSet(n >= 32 ? ~0u : ((1u << n) - 1)); }
  static VarSet from_one_based(std::initializer_list<int> members);

  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr void insert(int i) { bits_ |= (1u << i); }
  constexpr void erase(int i) { bits_ &= ~(1u << i); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }

  constexpr bool subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(VarSet other) const { return (bits_ & other.bits_) == 0; }
  constexpr VarSet complement(int n) const { return VarSet(all(n).bits_ & ~bits_); }
  constexpr VarSet operator|(VarSet o) const { return VarSet(bits_ | o.bits_); }
  constexpr VarSet operator&(VarSet o) const { return VarSet(bits_ & o.bits_); }

  /// Zero-based member indices in increasing order.
  std::vector<int> members() const;

  friend constexpr bool operator==(VarSet, VarSet) = default;
  friend constexpr auto operator<=>(VarSet a, VarSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

/// Exponent vector of a monomial in n variables. Index 0 holds the exponent of x_1.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in n variables.
  explicit Monomial(int n);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(int n, int i, int power = 1);
  static Monomial squarefree(int n, VarSet vars);

  int num_vars() const { return n_; }
  int operator[](int i) const { return e_[i]; }
  void set(int i, int exponent);
  std::span<const int> exponents() const { return {e_.data(), static_cast<std::size_t>(n_)}; }

  int degree() const;
  VarSet support() const;
  bool is_one() const;
  bool is_squarefree() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// Componentwise max(a - b, 0): the generator of (a) : b.
  Monomial colon(const Monomial& other) const;
  /// Exponents clamped to at most 1.
  Monomial squarefree_part() const;
  /// Exponents of the listed variables set to zero.
  Monomial drop(VarSet vars) const;

  friend bool operator==(const Monomial& a, const Monomial& b);

 private:
  void check_compatible(const Monomial& other) const;

  std::array<int, kMaxVars> e_{};
  int n_ = 0;
};

/// Degree first, then larger in degree-reverse-lexicographic order first.
bool canonical_less(const Monomial& a, const Monomial& b);

/// A monomial ideal held by its minimal generating set in canonical order.
/// The unit ideal has the single generator 1; the zero ideal has none.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int n = 1);

  static MonomialIdeal zero(int n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(int n);

  int num_vars() const { return n_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimalize(std::span<const Monomial> gens, int n);
  int n_;
  std::vector<Monomial> gens_;
};

/// Unique minimal generating set of the ideal generated by `gens`.
MonomialIdeal minimalize(std::span<const Monomial> gens, int n);

bool contains(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal radical(const MonomialIdeal& ideal);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const Monomial& m);
Monomial ideal_lcm(const MonomialIdeal& ideal);

// Both stability tests only inspect minimal generators. For strong stability
// this is standard. For Borel type: if w = g*m with g a generator and
// x_i^l || w, then either x_i does not divide g (so g | w/x_i^l) or
// x_j^t g/x_i^{g_i} in I times m/x_i^{m_i} gives x_j^t w/x_i^l in I.
bool is_strongly_stable(const MonomialIdeal& ideal);
bool is_borel_type(const MonomialIdeal& ideal);

/// Smallest strongly stable ideal containing every monomial of `seeds`.
MonomialIdeal borel_closure(std::span<const Monomial> seeds, int n);

/// (Md_1(I), ..., Md_n(I)): the largest exponent of each variable over G(I).
std::vector<int> md_profile(const MonomialIdeal& ideal);

/// Image of the ideal in K[x_1..x_i] after setting x_{i+1}, ..., x_n to zero.
MonomialIdeal truncate(const MonomialIdeal& ideal, int i);

/// Largest degree of a minimal generator.
int gen_degree(const MonomialIdeal& ideal);

/// Calls fn(m) for every monomial in n variables of total degree exactly d.
template <typename Fn>
void for_each_monomial_of_degree(int n, int d, Fn&& fn) {
  Monomial m(n);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      m.set(i, left);
      fn(static_cast<const Monomial&>(m));
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.set(i, e);
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, d);
}

}  // namespace borel
