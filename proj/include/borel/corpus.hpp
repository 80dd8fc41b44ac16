#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "borel/monomial.hpp"

namespace borel {

enum class Family { strongly_stable, borel_type, general, squarefree };

std::string_view family_name(Family family);
/// Throws ArgumentError for unknown names.
Family parse_family(std::string_view name);

struct CorpusSpec {
  int n = 3;
  int count = 10;
  std::uint64_t seed = 0;
  Family family = Family::strongly_stable;
  int max_gen_degree = 3;
  /// Cap on Borel generators (strongly stable) or on drawn generators (other families).
  int max_borel_gens = 3;
};

/// Reproducible random source: std::mt19937_64 output, whose sequence is fixed
/// by the C++ standard, with bounded draws by rejection sampling so the
/// stream does not depend on a library's distribution implementation.
class CorpusRng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  /// Monomial of exact total degree `degree` with uniformly drawn variables.
  Monomial monomial(int n, int degree);

 private:
  std::mt19937_64 engine_;
};

/// Deterministic in the spec. Unit and zero ideals never appear.
std::vector<MonomialIdeal> gen_corpus(const CorpusSpec& spec);

}  // namespace borel
