#include "borel/bounds.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>

#include "borel/betti.hpp"
#include "borel/io.hpp"
#include "borel/parallel.hpp"

namespace borel {

namespace {

void require(bool condition, const char* what) {
  if (!condition) throw ArgumentError(what);
}

BigInt big_pow(int base, unsigned long long exponent) { return ipow(BigInt(base), exponent); }

unsigned long long two_to(int k) { return 1ull << k; }

}  // namespace

BigInt bound_geom_total(int n, int d) {
  require(n >= 1 && d >= 1, "geometric degree bound needs n >= 1 and d >= 1");
  return big_pow(d, n - 1);
}

RegRadicalBound bound_reg_radical(int n, int d, int r) {
  require(d >= 1, "radical regularity bound needs d >= 1");
  require(r >= 1 && r <= n - 1, "radical regularity bound needs 1 <= r <= n-1");
  RegRadicalBound bound;
  if (r == 1) {
    bound.sharp = big_pow(d, n - 1);
  } else {
    const BigInt top = big_pow(d, n - r);
    bound.sharp = ipow(top * (top - 1) / 2 + big_pow(d, n - 1), two_to(r - 2));
  }
  bound.cap = big_pow(d, static_cast<unsigned long long>(n - 1) * two_to(r - 1));
  if (bound.sharp > bound.cap) {
    throw InternalConsistencyError("radical regularity bound exceeds its cap");
  }
  return bound;
}

BigInt bound_intermediate_reg_radical(const BigInt& e, const BigInt& g, int r) {
  require(r >= 2, "multiplicity form of the radical regularity bound needs r >= 2");
  require(e >= 1 && g >= e, "multiplicity form of the radical regularity bound needs 1 <= e <= g");
  return ipow(e * (e - 1) / 2 + g, two_to(r - 2));
}

std::optional<BigInt> bound_std_md(const MonomialIdeal& ideal, int r) {
  const int n = ideal.num_vars();
  require(r >= 0 && r <= n - 1, "index r outside [0, n-1]");
  if (!is_borel_type(ideal)) return std::nullopt;
  const auto md = md_profile(ideal);
  BigInt product = 1;
  for (int i = 0; i < n - r; ++i) product *= md[i];
  return product;
}

std::optional<BigInt> bound_trunc_product(const MonomialIdeal& ideal, int r) {
  const int n = ideal.num_vars();
  require(r >= 0 && r <= n - 1, "index r outside [0, n-1]");
  if (!is_borel_type(ideal)) return std::nullopt;
  BigInt product = 1;
  for (int i = 1; i <= n - r; ++i) {
    const MonomialIdeal image = truncate(ideal, i);
    if (image.is_zero()) return std::nullopt;
    product *= gen_degree(image);
  }
  return product;
}

BigInt bound_borel_gen(std::span<const Monomial> borel_gens, int n, int r) {
  require(r >= 0 && r <= n - 1, "index r outside [0, n-1]");
  require(!borel_gens.empty(), "Borel generator bound needs at least one generator");
  long long prefix_max = 0;
  for (const Monomial& u : borel_gens) {
    const auto e = u.exponents();
    prefix_max = std::max<long long>(prefix_max, std::accumulate(e.begin(), e.begin() + (n - r), 0LL));
  }
  return binomial(prefix_max + n - r - 1, n - r);
}

BigInt bound_arith_universal(int n, int d, int r) {
  require(d >= 1, "universal arithmetic degree bound needs d >= 1");
  require(r >= 0 && r <= n - 1, "index r outside [0, n-1]");
  return 2 * big_pow(d, two_to(n - r - 1));
}

// Borel moves keep the degree and raise a monomial in reverse-lexicographic
// order, so any Borel ancestor of a minimal generator is a generator of the
// same degree that is smaller in that order. Visiting generators from the
// smallest up, a generator is new exactly when the closure so far misses it.
std::vector<Monomial> borel_generators(const MonomialIdeal& ideal) {
  if (!is_strongly_stable(ideal)) throw ArgumentError("Borel generators of a non-strongly-stable ideal");
  if (ideal.is_zero()) return {};
  const int n = ideal.num_vars();
  std::vector<Monomial> order(ideal.gens().rbegin(), ideal.gens().rend());
  std::vector<Monomial> seeds;
  MonomialIdeal closure = MonomialIdeal::zero(n);
  for (const Monomial& g : order) {
    if (contains(closure, g)) continue;
    seeds.push_back(g);
    closure = borel_closure(seeds, n);
  }
  if (!(closure == ideal)) throw InternalConsistencyError("Borel generators do not regenerate the ideal");
  std::sort(seeds.begin(), seeds.end(), canonical_less);
  return seeds;
}

bool BoundReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

std::string ideal_id(const MonomialIdeal& ideal) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : format_ideal(ideal)) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

namespace {

BoundCheck make_check(std::string name, std::optional<BigInt> lhs, std::optional<BigInt> rhs) {
  BoundCheck check;
  check.name = std::move(name);
  check.applicable = lhs.has_value() && rhs.has_value();
  if (check.applicable) {
    check.holds = *lhs <= *rhs;
    check.lhs = std::move(lhs);
    check.rhs = std::move(rhs);
  }
  return check;
}

std::string indexed(const char* base, int r) { return std::string(base) + "_r" + std::to_string(r); }

}  // namespace

BoundReport verify_instance(const MonomialIdeal& ideal, FieldSpec field) {
  if (ideal.is_zero() || ideal.is_unit()) throw ArgumentError("bounds need a proper non-zero ideal");
  field.validate();
  const int n = ideal.num_vars();

  BoundReport report;
  report.ideal_id = ideal_id(ideal);
  report.ideal = ideal;
  report.strongly_stable = is_strongly_stable(ideal);
  report.borel_type = is_borel_type(ideal);
  report.squarefree = ideal.is_squarefree();
  report.degrees = degrees(ideal);
  report.gen_degree = gen_degree(ideal);
  report.reg = regularity(ideal, field);
  report.reg_radical = hochster_regularity(radical(ideal), field);
  report.field = field;

  const int d = report.gen_degree;
  const int dim = report.degrees.dim;
  const BigInt reg_rad = report.reg_radical;
  const bool positive_dim = dim >= 1;

  report.checks.push_back(make_check("geom_degree_total",
                                     positive_dim ? std::optional<BigInt>(report.degrees.geom_total) : std::nullopt,
                                     positive_dim ? std::optional<BigInt>(bound_geom_total(n, d)) : std::nullopt));

  std::optional<BigInt> hoa;
  if (dim >= 2) {
    hoa = bound_intermediate_reg_radical(report.degrees.multiplicity, report.degrees.geom_total, dim);
  }
  report.checks.push_back(make_check("reg_radical_multiplicity", hoa ? std::optional<BigInt>(reg_rad) : std::nullopt, hoa));

  std::optional<RegRadicalBound> by_degree;
  if (positive_dim) by_degree = bound_reg_radical(n, d, dim);
  report.checks.push_back(make_check("reg_radical_degree", by_degree ? std::optional<BigInt>(reg_rad) : std::nullopt,
                                     by_degree ? std::optional<BigInt>(by_degree->sharp) : std::nullopt));
  report.checks.push_back(make_check("reg_radical_degree_cap",
                                     by_degree ? std::optional<BigInt>(reg_rad) : std::nullopt,
                                     by_degree ? std::optional<BigInt>(by_degree->cap) : std::nullopt));

  std::vector<Monomial> borel_gens;
  if (report.strongly_stable) borel_gens = borel_generators(ideal);

  for (int r = 0; r <= n - 1; ++r) {
    const BigInt std_r = report.degrees.std_counts[r];
    const BigInt arith_r = report.degrees.arith[r];

    const auto md = bound_std_md(ideal, r);
    report.checks.push_back(make_check(indexed("std_md_product", r), md ? std::optional<BigInt>(std_r) : std::nullopt, md));

    const auto trunc = bound_trunc_product(ideal, r);
    report.checks.push_back(
        make_check(indexed("arith_trunc_product", r), trunc ? std::optional<BigInt>(arith_r) : std::nullopt, trunc));

    std::optional<BigInt> binom;
    if (report.strongly_stable) binom = bound_borel_gen(borel_gens, n, r);
    report.checks.push_back(
        make_check(indexed("arith_borel_binomial", r), binom ? std::optional<BigInt>(arith_r) : std::nullopt, binom));

    report.checks.push_back(make_check(indexed("arith_universal", r), arith_r, bound_arith_universal(n, d, r)));
  }
  return report;
}

std::vector<BoundReport> verify_corpus(const std::vector<MonomialIdeal>& ideals, FieldSpec field,
                                       const std::optional<Provenance>& provenance) {
  std::vector<BoundReport> reports(ideals.size());
  parallel_for(ideals.size(), [&](std::size_t i) {
    reports[i] = verify_instance(ideals[i], field);
    if (provenance) {
      reports[i].provenance = *provenance;
      reports[i].provenance->index = static_cast<int>(i);
    }
  });
  std::stable_sort(reports.begin(), reports.end(),
                   [](const BoundReport& a, const BoundReport& b) { return a.ideal_id < b.ideal_id; });
  return reports;
}

std::vector<CheckSummary> summarize(const std::vector<BoundReport>& reports) {
  std::map<std::string, CheckSummary> by_name;
  for (const BoundReport& report : reports) {
    for (const BoundCheck& check : report.checks) {
      CheckSummary& s = by_name[check.name];
      s.name = check.name;
      ++s.instances;
      if (!check.applicable) continue;
      ++s.applicable;
      if (check.holds) ++s.held;
      const BigInt slack = *check.rhs - *check.lhs;
      if (!s.min_slack || slack < *s.min_slack) s.min_slack = slack;
    }
  }
  std::vector<CheckSummary> out;
  for (auto& [name, s] : by_name) out.push_back(std::move(s));
  return out;
}

}  // namespace borel
