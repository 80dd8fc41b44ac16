#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "borel/bounds.hpp"
#include "borel/corpus.hpp"
#include "borel/io.hpp"
#include "borel/serialize.hpp"
#include "oracles.hpp"

using namespace borel;
using oracle::ideal;

namespace {

Monomial M(const char* text, int n) { return parse_monomial(text, n); }

BigInt power(long long base, long long exponent) {
  BigInt out = 1;
  for (long long k = 0; k < exponent; ++k) out *= base;
  return out;
}

BigInt pascal(int top, int bottom) {
  std::vector<std::vector<BigInt>> row(top + 1);
  for (int a = 0; a <= top; ++a) {
    row[a].assign(a + 1, 1);
    for (int b = 1; b < a; ++b) row[a][b] = row[a - 1][b - 1] + row[a - 1][b];
  }
  return bottom < 0 || bottom > top ? BigInt(0) : row[top][bottom];
}

const BoundCheck& find(const BoundReport& report, const std::string& name) {
  for (const auto& c : report.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  return report.checks.front();
}

void check_pair(const BoundReport& report, const std::string& name, int lhs, int rhs) {
  const auto& c = find(report, name);
  CHECK(c.applicable);
  REQUIRE(c.lhs);
  REQUIRE(c.rhs);
  CHECK(*c.lhs == lhs);
  CHECK(*c.rhs == rhs);
  CHECK(c.holds);
}

// Greedy under an arbitrary order, then drop every seed the others already generate.
std::vector<Monomial> pruned_seeds(const MonomialIdeal& I, std::mt19937_64& rng) {
  std::vector<Monomial> order = I.gens();
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Monomial> seeds;
  for (const auto& g : order) {
    if (!seeds.empty() && contains(borel_closure(seeds, I.num_vars()), g)) continue;
    seeds.push_back(g);
  }
  for (std::size_t i = 0; i < seeds.size();) {
    std::vector<Monomial> rest = seeds;
    rest.erase(rest.begin() + static_cast<long>(i));
    if (!rest.empty() && borel_closure(rest, I.num_vars()) == I) {
      seeds = rest;
    } else {
      ++i;
    }
  }
  std::sort(seeds.begin(), seeds.end(), canonical_less);
  return seeds;
}

}  // namespace

TEST_CASE("closed-form bounds") {
  CHECK(bound_geom_total(2, 2) == 2);
  CHECK(bound_geom_total(5, 1) == 1);
  CHECK(bound_geom_total(4, 3) == 27);

  for (int d = 1; d <= 5; ++d) CHECK(bound_reg_radical(2, d, 1).sharp == d);
  const auto b = bound_reg_radical(4, 2, 2);
  CHECK(b.sharp == 14);
  CHECK(b.cap == 64);
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r < n; ++r) CHECK(bound_reg_radical(n, 1, r).sharp == 1);
  CHECK_THROWS_AS(bound_reg_radical(3, 2, 0), ArgumentError);
  CHECK_THROWS_AS(bound_reg_radical(3, 2, 3), ArgumentError);

  CHECK(bound_intermediate_reg_radical(1, 1, 2) == 1);
  CHECK(bound_intermediate_reg_radical(2, 3, 2) == 4);
  CHECK(bound_intermediate_reg_radical(2, 3, 3) == 16);
  CHECK_THROWS_AS(bound_intermediate_reg_radical(2, 3, 1), ArgumentError);

  const auto I = ideal("x1^2, x1*x2", 2);
  CHECK(bound_std_md(I, 1) == BigInt(2));
  CHECK(bound_std_md(I, 0) == BigInt(2));
  const auto B = oracle::principal_borel(M("x2*x3", 3));
  CHECK(bound_std_md(B, 0) == BigInt(4));
  CHECK_FALSE(bound_std_md(ideal("x2", 2), 0));

  CHECK(bound_trunc_product(B, 1) == BigInt(4));
  CHECK(bound_trunc_product(B, 0) == BigInt(8));
  CHECK(bound_trunc_product(ideal("x1", 3), 2) == BigInt(1));
  CHECK_FALSE(bound_trunc_product(ideal("x1*x2", 2), 0));

  const std::vector<Monomial> g12{M("x1*x2", 2)};
  CHECK(bound_borel_gen(g12, 2, 1) == 1);
  CHECK(bound_borel_gen(g12, 2, 0) == 3);
  const std::vector<Monomial> g23{M("x2*x3", 3)};
  CHECK(bound_borel_gen(g23, 3, 1) == 1);

  CHECK(bound_arith_universal(2, 2, 0) == 8);
  CHECK(bound_arith_universal(2, 2, 1) == 4);
  CHECK(bound_arith_universal(7, 1, 3) == 2);
}

TEST_CASE("bounds agree with naive arithmetic") {
  for (int n = 2; n <= 6; ++n) {
    for (int d = 1; d <= 5; ++d) {
      CHECK(bound_geom_total(n, d) == power(d, n - 1));
      for (int r = 0; r < n; ++r) {
        CHECK(bound_arith_universal(n, d, r) == 2 * power(d, 1LL << (n - r - 1)));
        if (r == 0) continue;
        const auto b = bound_reg_radical(n, d, r);
        CHECK(b.cap == power(d, (n - 1) * (1LL << (r - 1))));
        if (r == 1) {
          CHECK(b.sharp == power(d, n - 1));
        } else {
          const BigInt top = power(d, n - r);
          const BigInt base = top * (top - 1) / 2 + power(d, n - 1);
          BigInt expected = 1;
          for (long long k = 0; k < (1LL << (r - 2)); ++k) expected *= base;
          CHECK(b.sharp == expected);
        }
        CHECK(b.sharp <= b.cap);
      }
    }
  }
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<Monomial> gens(1 + rng() % 3);
    CorpusRng draw(rng());
    for (auto& g : gens) g = draw.monomial(n, 1 + static_cast<int>(rng() % 5));
    for (int r = 0; r < n; ++r) {
      int prefix = 0;
      for (const auto& g : gens) {
        int s = 0;
        for (int i = 0; i < n - r; ++i) s += g[i];
        prefix = std::max(prefix, s);
      }
      CHECK(bound_borel_gen(gens, n, r) == pascal(prefix + n - r - 1, n - r));
    }
  }
}

TEST_CASE("Borel generators are unique") {
  CHECK(borel_generators(oracle::principal_borel(M("x2*x3", 3))) == std::vector<Monomial>{M("x2*x3", 3)});
  CHECK_THROWS_AS(borel_generators(ideal("x2", 2)), ArgumentError);
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& I : gen_corpus(CorpusSpec{n, 30, 17, Family::strongly_stable, 4, 4})) {
      const auto gens = borel_generators(I);
      CHECK(borel_closure(gens, n) == I);
      for (int t = 0; t < 3; ++t) CHECK(pruned_seeds(I, rng) == gens);
    }
  }
}

TEST_CASE("verify_instance examples") {
  const auto a = verify_instance(ideal("x1^2, x1*x2", 2));
  check_pair(a, "geom_degree_total", 1, 2);
  check_pair(a, "reg_radical_degree", 1, 2);
  check_pair(a, "arith_universal_r1", 1, 4);
  check_pair(a, "arith_universal_r0", 1, 8);
  CHECK_FALSE(find(a, "reg_radical_multiplicity").applicable);
  CHECK(a.all_hold());
  CHECK(a.reg == 2);
  CHECK(a.reg_radical == 1);

  const auto b = verify_instance(oracle::principal_borel(M("x2*x3", 3)));
  check_pair(b, "arith_trunc_product_r0", 2, 8);
  check_pair(b, "arith_trunc_product_r1", 1, 4);
  check_pair(b, "std_md_product_r0", 2, 4);
  check_pair(b, "std_md_product_r1", 1, 4);
  check_pair(b, "arith_borel_binomial_r1", 1, 1);
  CHECK(b.all_hold());

  const auto c = verify_instance(ideal("x1", 2));
  CHECK(c.all_hold());
  check_pair(c, "geom_degree_total", 1, 1);

  const auto w = verify_instance(oracle::principal_borel(M("x1*x2", 2)));
  check_pair(w, "arith_borel_binomial_r1", 1, 1);

  const auto g = verify_instance(ideal("x2^2, x1*x3", 3));
  CHECK_FALSE(find(g, "std_md_product_r0").applicable);
  CHECK_FALSE(find(g, "std_md_product_r0").lhs);
  CHECK(find(g, "arith_universal_r0").applicable);

  CHECK_THROWS_AS(verify_instance(MonomialIdeal::zero(2)), ArgumentError);
  CHECK_THROWS_AS(verify_instance(MonomialIdeal::unit(2)), ArgumentError);
}

TEST_CASE("ideal ids") {
  const auto I = ideal("x1^2, x1*x2", 2);
  CHECK(ideal_id(I).size() == 16);
  CHECK(ideal_id(I) == ideal_id(ideal("x1*x2, x1^2, x1^3", 2)));
  CHECK(ideal_id(I) != ideal_id(ideal("x1^2, x1*x2", 3)));
  // FNV-1a over the canonical text.
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : std::string("n=1\nx1\n")) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex;
  hex.width(16);
  hex.fill('0');
  hex << h;
  CHECK(ideal_id(ideal("x1", 1)) == hex.str());
}

TEST_CASE("corpus generation") {
  for (Family f : {Family::strongly_stable, Family::borel_type, Family::general, Family::squarefree}) {
    CHECK(parse_family(family_name(f)) == f);
    for (int n = 1; n <= 6; ++n) {
      const CorpusSpec spec{n, 25, 1234, f, 3, 3};
      const auto corpus = gen_corpus(spec);
      CHECK(corpus.size() == 25);
      CHECK(format_corpus(corpus) == format_corpus(gen_corpus(spec)));
      for (const auto& I : corpus) {
        CHECK(I.num_vars() == n);
        CHECK_FALSE(I.is_zero());
        CHECK_FALSE(I.is_unit());
        if (f == Family::strongly_stable) CHECK(is_strongly_stable(I));
        if (f == Family::borel_type) CHECK(is_borel_type(I));
        if (f == Family::squarefree) CHECK(I.is_squarefree());
        if (f != Family::borel_type) CHECK(gen_degree(I) <= 3);
      }
    }
  }
  const CorpusSpec other{3, 25, 1235, Family::general, 3, 3};
  CHECK(format_corpus(gen_corpus(other)) != format_corpus(gen_corpus(CorpusSpec{3, 25, 1234, Family::general, 3, 3})));
  CHECK_THROWS_AS(parse_family("weird"), ArgumentError);
  CHECK_THROWS_AS(gen_corpus(CorpusSpec{3, 5, 0, Family::general, 0, 3}), ArgumentError);
  CHECK(gen_corpus(CorpusSpec{3, 0, 0, Family::general, 2, 3}).empty());
}

TEST_CASE("rng draws are reproducible and in range") {
  CorpusRng a(42);
  CorpusRng b(42);
  std::vector<int> seen(7, 0);
  for (int k = 0; k < 2000; ++k) {
    const int x = a.uniform(3, 9);
    CHECK(x == b.uniform(3, 9));
    REQUIRE(x >= 3);
    REQUIRE(x <= 9);
    ++seen[x - 3];
  }
  for (int count : seen) CHECK(count > 200);
  CHECK(a.monomial(4, 5).degree() == 5);
  // The engine itself is pinned by the C++ standard: the 10000th output for the default seed.
  std::mt19937_64 engine;
  engine.discard(9999);
  CHECK(engine() == 9981545732273789042ull);
}

TEST_CASE("report serialization") {
  const auto corpus = gen_corpus(CorpusSpec{3, 20, 5, Family::strongly_stable, 3, 3});
  const Provenance prov{"strongly_stable", 5, 0, "mt19937_64"};
  const auto reports = verify_corpus(corpus, FieldSpec{}, prov);
  CHECK(std::is_sorted(reports.begin(), reports.end(),
                       [](const auto& x, const auto& y) { return x.ideal_id < y.ideal_id; }));
  for (const auto& r : reports) {
    CHECK(r.all_hold());
    CHECK(bound_report_from_json(to_json(r)) == r);
    REQUIRE(r.provenance);
    CHECK(r.provenance->rng == "mt19937_64");
  }
  const auto lines = to_json_lines(reports);
  CHECK(std::count(lines.begin(), lines.end(), '\n') == static_cast<long>(reports.size()));
  CHECK(lines == to_json_lines(verify_corpus(corpus, FieldSpec{}, prov)));

  const auto j = to_json(reports.front());
  for (const char* key : {"ideal_id", "n", "generators", "flags", "invariants", "checks"}) CHECK(j.contains(key));
  const auto& deg = j["invariants"]["degrees"];
  for (const char* key : {"n", "dim", "std_counts", "arith", "geom", "arith_total", "geom_total", "multiplicity"})
    CHECK(deg.contains(key));
  for (const auto& c : j["checks"]) {
    if (c["applicable"].get<bool>()) {
      CHECK(c["lhs"].is_string());
    } else {
      CHECK(c["lhs"].is_null());
    }
  }

  const auto table = koszul_betti(ideal("x1^2, x1*x2", 2));
  const auto tj = to_json(table);
  CHECK(tj["entries"] == Json::parse("[[0,0,1],[1,2,2],[2,3,1]]"));
  CHECK(tj["field_char"] == 32003);
  CHECK(betti_table_from_json(tj) == table);

  const auto poly = hilbert_numerator(ideal("x1^2, x1*x2", 2));
  CHECK(to_json(poly) == Json::parse(R"(["1","0","-2","1"])"));
  CHECK(int_polynomial_from_json(to_json(poly)) == poly);

  const auto dr = degrees(ideal("x1*x2", 2));
  CHECK(degree_report_from_json(to_json(dr)) == dr);
}

TEST_CASE("summary table") {
  const auto reports = verify_corpus(gen_corpus(CorpusSpec{2, 10, 3, Family::strongly_stable, 2, 2}));
  const auto summary = summarize(reports);
  const std::string csv = summary_csv(summary);
  CHECK(csv.rfind("check_name,instances,applicable,held,min_slack\n", 0) == 0);
  for (const auto& s : summary) {
    CHECK(s.instances == 10);
    CHECK(s.held == s.applicable);
    CHECK(s.min_slack.has_value() == (s.applicable > 0));
    if (s.min_slack) CHECK(*s.min_slack >= 0);
  }
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(summary.size() + 1));
}
