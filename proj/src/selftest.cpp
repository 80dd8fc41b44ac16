#include "borel/selftest.hpp"

#include <exception>
#include <functional>

#include "borel/betti.hpp"
#include "borel/bounds.hpp"
#include "borel/hilbert.hpp"
#include "borel/io.hpp"
#include "borel/standard_pairs.hpp"

namespace borel {

namespace {

MonomialIdeal I(const char* gens, int n) { return parse_inline_ideal(gens, n); }
Monomial M(const char* text, int n) { return parse_monomial(text, n); }

MonomialIdeal closure(const char* seeds, int n) { return borel_closure(parse_monomial_list(seeds, n), n); }

std::vector<StandardPair> pairs(std::initializer_list<std::pair<const char*, VarSet>> list, int n) {
  std::vector<StandardPair> out;
  for (const auto& [u, z] : list) out.push_back({M(u, n), z});
  std::sort(out.begin(), out.end(), pair_less);
  return out;
}

IntPolynomial poly(std::initializer_list<int> coeffs) {
  return IntPolynomial(std::vector<BigInt>(coeffs.begin(), coeffs.end()));
}

template <typename T>
bool throws(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const T&) {
    return true;
  }
  return false;
}

const BoundCheck* find_check(const BoundReport& report, const std::string& name) {
  for (const BoundCheck& c : report.checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool check_is(const BoundReport& report, const std::string& name, int lhs, int rhs) {
  const BoundCheck* c = find_check(report, name);
  return c && c->applicable && c->holds && *c->lhs == lhs && *c->rhs == rhs;
}

}  // namespace

std::vector<SelftestResult> run_selftest() {
  std::vector<SelftestResult> results;
  auto run = [&](std::string name, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception&) {
      ok = false;
    }
    results.push_back({std::move(name), ok});
  };
  const VarSet none;
  auto V = [](std::initializer_list<int> one_based) { return VarSet::from_one_based(one_based); };

  // Monomials and ideals.
  run("minimalize drops multiples", [&] {
    return I("x1^2, x1^2*x2, x2^3", 2).gens() == std::vector<Monomial>{M("x1^2", 2), M("x2^3", 2)};
  });
  run("minimalize of nothing is the zero ideal", [&] { return minimalize({}, 2).is_zero(); });
  run("minimalize keeps a minimal set", [&] { return I("x1*x2, x1^2, x2^2, x1*x3, x2*x3", 3).size() == 5; });
  run("contains", [&] {
    const auto ideal = I("x1^2, x1*x2", 2);
    return contains(ideal, M("x1*x2^5", 2)) && !contains(ideal, M("x2^5", 2)) &&
           !contains(MonomialIdeal::zero(2), M("x1", 2));
  });
  run("radical", [&] { return radical(I("x1^2, x1*x2", 2)) == I("x1", 2); });
  run("strongly stable", [&] {
    return is_strongly_stable(I("x1^2, x1*x2", 2)) && !is_strongly_stable(I("x2", 2)) &&
           is_strongly_stable(I("x1", 2));
  });
  run("Borel type", [&] { return is_borel_type(I("x1^2, x2^3", 2)) && !is_borel_type(I("x2", 2)); });
  run("Borel closure", [&] {
    return closure("x1*x2", 2) == I("x1^2, x1*x2", 2) &&
           closure("x2*x3", 3) == I("x1^2, x1*x2, x1*x3, x2^2, x2*x3", 3) && closure("x1^4", 3) == I("x1^4", 3);
  });
  run("Md profile", [&] {
    return md_profile(I("x1^2, x1*x2", 2)) == std::vector<int>{2, 1} &&
           md_profile(closure("x2*x3", 3)) == std::vector<int>{2, 2, 1};
  });
  run("truncation", [&] {
    const auto ideal = closure("x2*x3", 3);
    return truncate(ideal, 2) == I("x1^2, x1*x2, x2^2", 2) && truncate(ideal, 1) == I("x1^2", 1) &&
           truncate(ideal, 3) == ideal;
  });
  run("generating degree", [&] {
    return gen_degree(I("x1^2, x1*x2", 2)) == 2 && gen_degree(I("x1", 2)) == 1 &&
           gen_degree(closure("x1^2*x2^3", 2)) == 5;
  });

  // Standard pairs and degrees.
  run("admissibility", [&] {
    const auto ideal = I("x1^2, x1*x2", 2);
    return is_admissible(ideal, M("1", 2), V({2})) && !is_admissible(ideal, M("x1", 2), V({2})) &&
           is_admissible(ideal, M("1", 2), none);
  });
  run("standard pairs of (x1^2, x1*x2)", [&] {
    return standard_pairs(I("x1^2, x1*x2", 2)) == pairs({{"1", V({2})}, {"x1", none}}, 2);
  });
  run("standard pairs of a principal Borel ideal", [&] {
    return standard_pairs(closure("x2*x3", 3)) == pairs({{"1", V({3})}, {"x1", none}, {"x2", none}}, 3);
  });
  run("standard pairs of the zero ideal", [&] {
    return standard_pairs(MonomialIdeal::zero(3)) == pairs({{"1", V({1, 2, 3})}}, 3);
  });
  run("std counts", [&] {
    using C = std::vector<std::int64_t>;
    return std_counts(I("x1^2, x1*x2", 2)) == C{1, 1, 0} && std_counts(closure("x2*x3", 3)) == C{2, 1, 0, 0} &&
           std_counts(MonomialIdeal::zero(2)) == C{0, 0, 1};
  });
  run("associated primes", [&] {
    return associated_primes(I("x1^2, x1*x2", 2)) == std::vector<VarSet>{V({1}), V({1, 2})} &&
           associated_primes(I("x1*x2", 2)) == std::vector<VarSet>{V({1}), V({2})} &&
           associated_primes(I("x1", 3)) == std::vector<VarSet>{V({1})};
  });
  run("minimal primes", [&] {
    return minimal_primes(I("x1^2, x1*x2", 2)) == std::vector<VarSet>{V({1})} &&
           minimal_primes(I("x1*x2", 2)) == std::vector<VarSet>{V({1}), V({2})};
  });
  run("degree reports", [&] {
    using C = std::vector<std::int64_t>;
    const auto a = degrees(I("x1^2, x1*x2", 2));
    const auto b = degrees(closure("x2*x3", 3));
    const auto c = degrees(I("x1*x2", 2));
    return a.dim == 1 && a.arith == C{1, 1, 0} && a.geom == C{0, 1, 0} && a.multiplicity == 1 && b.dim == 1 &&
           b.arith == C{2, 1, 0, 0} && b.geom == C{0, 1, 0, 0} && b.multiplicity == 1 && c.dim == 1 &&
           c.arith == C{0, 2, 0} && c.geom == C{0, 2, 0} && c.multiplicity == 2;
  });

  // Hilbert series.
  run("Hilbert numerators", [&] {
    return hilbert_numerator(I("x1^2, x1*x2", 2)) == poly({1, 0, -2, 1}) &&
           hilbert_numerator(MonomialIdeal::zero(2)) == poly({1}) && hilbert_numerator(I("x1", 2)) == poly({1, -1});
  });
  run("dimension and multiplicity", [&] {
    const auto a = dim_and_multiplicity(poly({1, 0, -2, 1}), 2);
    const auto b = dim_and_multiplicity(poly({1}), 4);
    const auto c = dim_and_multiplicity(poly({1, 0, 0, -1}), 1);
    return a.dim == 1 && a.multiplicity == 1 && b.dim == 4 && b.multiplicity == 1 && c.dim == 0 &&
           c.multiplicity == 3;
  });
  run("Hilbert function", [&] {
    const auto ideal = I("x1^2, x1*x2", 2);
    return hilbert_function(ideal, 1) == 2 && hilbert_function(ideal, 5) == 1 &&
           hilbert_function(MonomialIdeal::zero(2), 7) == 8;
  });

  // Betti numbers and regularity.
  for (FieldSpec field : {FieldSpec{}, FieldSpec::rationals()}) {
    const std::string tag = " (char " + std::to_string(field.characteristic) + ")";
    run("Koszul Betti numbers" + tag, [&] {
      const auto a = koszul_betti(I("x1^2, x1*x2", 2), field);
      const auto b = koszul_betti(I("x1", 1), field);
      const auto c = koszul_betti(I("x1*x2, x2*x3", 3), field);
      return a.entries == decltype(a.entries){{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}} &&
             b.entries == decltype(b.entries){{{0, 0}, 1}, {{1, 1}, 1}} &&
             c.entries == decltype(c.entries){{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}};
    });
    run("regularity" + tag, [&] {
      return regularity(I("x1^2, x1*x2", 2), field) == 2 && regularity(I("x1^3", 2), field) == 3 &&
             regularity(closure("x1*x2^2", 3), field) == 3;
    });
    run("Stanley-Reisner complexes" + tag, [&] {
      return stanley_reisner(I("x1*x2", 2)).facets == std::vector<VarSet>{V({1}), V({2})} &&
             stanley_reisner(I("x1*x2, x2*x3", 3)).facets == std::vector<VarSet>{V({2}), V({1, 3})} &&
             stanley_reisner(MonomialIdeal::zero(3)).facets == std::vector<VarSet>{V({1, 2, 3})};
    });
    run("induced homology" + tag, [&] {
      const SimplicialComplex points{2, {V({1}), V({2})}};
      const SimplicialComplex simplex{3, {V({1, 2, 3})}};
      const auto circle = stanley_reisner(I("x1*x2*x3", 3));
      return induced_homology_ranks(points, V({1, 2}), field) == std::vector<int>{0, 1, 0} &&
             induced_homology_ranks(simplex, V({1, 2, 3}), field) == std::vector<int>{0, 0, 0, 0} &&
             induced_homology_ranks(circle, V({1, 2, 3}), field) == std::vector<int>{0, 0, 1, 0};
    });
    run("Hochster regularity" + tag, [&] {
      return hochster_regularity(I("x1*x2", 2), field) == 2 && hochster_regularity(I("x1", 2), field) == 1 &&
             hochster_regularity(I("x1*x2, x2*x3", 3), field) == 2;
    });
  }

  // Bounds.
  run("geometric degree bound", [&] {
    return bound_geom_total(2, 2) == 2 && bound_geom_total(5, 1) == 1 && bound_geom_total(4, 3) == 27;
  });
  run("radical regularity bound", [&] {
    const auto a = bound_reg_radical(2, 5, 1);
    const auto b = bound_reg_radical(4, 2, 2);
    const auto c = bound_reg_radical(5, 1, 3);
    return a.sharp == 5 && b.sharp == 14 && b.cap == 64 && c.sharp == 1 &&
           throws<ArgumentError>([] { bound_reg_radical(3, 2, 0); }) &&
           throws<ArgumentError>([] { bound_reg_radical(3, 2, 3); });
  });
  run("multiplicity form of the radical regularity bound", [&] {
    return bound_intermediate_reg_radical(1, 1, 2) == 1 && bound_intermediate_reg_radical(2, 3, 2) == 4 &&
           bound_intermediate_reg_radical(2, 3, 3) == 16;
  });
  run("Md product bound", [&] {
    const auto a = I("x1^2, x1*x2", 2);
    return bound_std_md(a, 1) == BigInt(2) && bound_std_md(a, 0) == BigInt(2) &&
           bound_std_md(closure("x2*x3", 3), 0) == BigInt(4) && !bound_std_md(I("x2", 2), 0);
  });
  run("truncation product bound", [&] {
    const auto ideal = closure("x2*x3", 3);
    return bound_trunc_product(ideal, 1) == BigInt(4) && bound_trunc_product(ideal, 0) == BigInt(8) &&
           bound_trunc_product(I("x1", 3), 2) == BigInt(1);
  });
  run("Borel generator binomial bound", [&] {
    const auto a = parse_monomial_list("x1*x2", 2);
    const auto b = parse_monomial_list("x2*x3", 3);
    return bound_borel_gen(a, 2, 1) == 1 && bound_borel_gen(a, 2, 0) == 3 && bound_borel_gen(b, 3, 1) == 1;
  });
  run("universal arithmetic degree bound", [&] {
    return bound_arith_universal(2, 2, 0) == 8 && bound_arith_universal(2, 2, 1) == 4 &&
           bound_arith_universal(6, 1, 2) == 2;
  });
  run("verify (x1^2, x1*x2)", [&] {
    const auto r = verify_instance(I("x1^2, x1*x2", 2));
    return r.all_hold() && check_is(r, "geom_degree_total", 1, 2) && check_is(r, "reg_radical_degree", 1, 2) &&
           check_is(r, "arith_universal_r1", 1, 4) && check_is(r, "arith_universal_r0", 1, 8);
  });
  run("verify principal Borel ideal of x2*x3", [&] {
    const auto r = verify_instance(closure("x2*x3", 3));
    return r.all_hold() && check_is(r, "arith_trunc_product_r0", 2, 8) &&
           check_is(r, "arith_trunc_product_r1", 1, 4) && check_is(r, "std_md_product_r0", 2, 4) &&
           check_is(r, "std_md_product_r1", 1, 4);
  });
  run("verify (x1) in two variables", [&] {
    const auto r = verify_instance(I("x1", 2));
    return r.all_hold() && r.degrees.dim == 1 && r.gen_degree == 1;
  });
  run("verify equality of the binomial bound at the top index", [&] {
    const auto r = verify_instance(closure("x1*x2", 2));
    return check_is(r, "arith_borel_binomial_r1", 1, 1) && check_is(r, "arith_borel_binomial_r0", 1, 3);
  });
  return results;
}

}  // namespace borel
