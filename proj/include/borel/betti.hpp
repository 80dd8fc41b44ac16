#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "borel/linalg.hpp"
#include "borel/monomial.hpp"

namespace borel {

/// Graded Betti numbers beta_{i,j}(S/I); absent entries are zero.
struct BettiTable {
  std::map<std::pair<int, int>, std::int64_t> entries;
  FieldSpec field;
  int cutoff = 0;

  std::int64_t at(int i, int j) const;
  /// max{ j - i : beta_{i,j} != 0 }, the regularity of S/I.
  int quotient_regularity() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

struct KoszulOptions {
  /// Largest internal degree computed; defaults to deg(lcm(G(I))) + 1.
  std::optional<int> cutoff;
  /// Only visit multidegrees dividing lcm(G(I)). Entries elsewhere vanish
  /// because every twist of the Taylor resolution divides the lcm.
  bool lcm_box = true;
};

/// Betti numbers of S/I as ranks of Koszul homology H_i(x; S/I), computed one
/// multidegree strand at a time and summed into internal degrees.
BettiTable koszul_betti(const MonomialIdeal& ideal, FieldSpec field = {}, KoszulOptions options = {});

/// reg(I) = reg(S/I) + 1.
int regularity(const MonomialIdeal& ideal, FieldSpec field = {});

/// Simplicial complex on vertices 0..n-1 given by its facets.
struct SimplicialComplex {
  int num_vertices = 0;
  std::vector<VarSet> facets;

  bool has_face(VarSet face) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

/// Faces are the supports of square-free monomials outside I.
SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);

/// Ranks of reduced homology of the restriction to W, indexed k + 1 for k = -1..|W|-1.
std::vector<int> induced_homology_ranks(const SimplicialComplex& complex, VarSet subset,
                                        FieldSpec field = {});

/// reg(I) for square-free I from Hochster's formula:
/// max{ k + 2 : reduced H_k of the restriction to some non-empty W is non-zero }.
int hochster_regularity(const MonomialIdeal& ideal, FieldSpec field = {});

}  // namespace borel
