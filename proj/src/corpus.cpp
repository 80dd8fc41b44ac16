#include "borel/corpus.hpp"

#include <algorithm>
#include <limits>

namespace borel {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::strongly_stable: return "strongly_stable";
    case Family::borel_type: return "borel_type";
    case Family::general: return "general";
    case Family::squarefree: return "squarefree";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::strongly_stable, Family::borel_type, Family::general, Family::squarefree}) {
    if (family_name(f) == name) return f;
  }
  throw ArgumentError("unknown family '" + std::string(name) + "'");
}

int CorpusRng::uniform(int lo, int hi) {
  if (hi < lo) throw ArgumentError("empty sampling range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % range);
}

Monomial CorpusRng::monomial(int n, int degree) {
  Monomial m(n);
  for (int k = 0; k < degree; ++k) {
    const int i = uniform(0, n - 1);
    m.set(i, m[i] + 1);
  }
  return m;
}

namespace {

MonomialIdeal random_strongly_stable(CorpusRng& rng, const CorpusSpec& spec) {
  std::vector<Monomial> seeds(rng.uniform(1, spec.max_borel_gens));
  for (Monomial& u : seeds) u = rng.monomial(spec.n, rng.uniform(1, spec.max_gen_degree));
  return borel_closure(seeds, spec.n);
}

// (x_1^{a_1}, ..., x_i^{a_i}): primary to (x_1, ..., x_i).
MonomialIdeal random_initial_powers(CorpusRng& rng, const CorpusSpec& spec) {
  const int i = rng.uniform(1, spec.n);
  std::vector<Monomial> gens;
  for (int k = 0; k < i; ++k) gens.push_back(Monomial::variable(spec.n, k, rng.uniform(1, spec.max_gen_degree)));
  return minimalize(gens, spec.n);
}

MonomialIdeal random_borel_component(CorpusRng& rng, const CorpusSpec& spec) {
  return rng.uniform(0, 1) == 0 ? random_strongly_stable(rng, spec) : random_initial_powers(rng, spec);
}

// Sums and intersections of Borel-type ideals stay Borel type. Draws whose
// generating degree exceeds the cap are redrawn a bounded number of times.
MonomialIdeal random_borel_type(CorpusRng& rng, const CorpusSpec& spec) {
  constexpr int kAttempts = 32;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    MonomialIdeal ideal = random_borel_component(rng, spec);
    const int extra = rng.uniform(1, 2);
    for (int k = 0; k < extra; ++k) {
      const MonomialIdeal other = random_borel_component(rng, spec);
      ideal = rng.uniform(0, 1) == 0 ? ideal_sum(ideal, other) : ideal_intersection(ideal, other);
    }
    if (gen_degree(ideal) <= spec.max_gen_degree) return ideal;
  }
  return random_borel_component(rng, spec);
}

MonomialIdeal random_general(CorpusRng& rng, const CorpusSpec& spec) {
  std::vector<Monomial> gens(rng.uniform(1, spec.max_borel_gens));
  for (Monomial& g : gens) g = rng.monomial(spec.n, rng.uniform(1, spec.max_gen_degree));
  return minimalize(gens, spec.n);
}

MonomialIdeal random_squarefree(CorpusRng& rng, const CorpusSpec& spec) {
  const int max_size = std::min(spec.max_gen_degree, spec.n);
  std::vector<Monomial> gens(rng.uniform(1, spec.max_borel_gens));
  for (Monomial& g : gens) {
    // Partial Fisher-Yates: the first `size` slots become a uniform subset.
    std::vector<int> vars(spec.n);
    for (int i = 0; i < spec.n; ++i) vars[i] = i;
    const int size = rng.uniform(1, max_size);
    VarSet chosen;
    for (int k = 0; k < size; ++k) {
      std::swap(vars[k], vars[rng.uniform(k, spec.n - 1)]);
      chosen.insert(vars[k]);
    }
    g = Monomial::squarefree(spec.n, chosen);
  }
  return minimalize(gens, spec.n);
}

}  // namespace

std::vector<MonomialIdeal> gen_corpus(const CorpusSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxVars) throw ArgumentError("corpus variable count out of range");
  if (spec.count < 0) throw ArgumentError("negative corpus size");
  if (spec.max_gen_degree < 1) throw ArgumentError("corpus generator degree must be at least 1");
  if (spec.max_borel_gens < 1) throw ArgumentError("corpus generator count must be at least 1");

  CorpusRng rng(spec.seed);
  std::vector<MonomialIdeal> corpus;
  corpus.reserve(spec.count);
  for (int k = 0; k < spec.count; ++k) {
    switch (spec.family) {
      case Family::strongly_stable: corpus.push_back(random_strongly_stable(rng, spec)); break;
      case Family::borel_type: corpus.push_back(random_borel_type(rng, spec)); break;
      case Family::general: corpus.push_back(random_general(rng, spec)); break;
      case Family::squarefree: corpus.push_back(random_squarefree(rng, spec)); break;
    }
  }
  return corpus;
}

}  // namespace borel
