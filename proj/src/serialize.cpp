#include "borel/serialize.hpp"

#include "borel/io.hpp"

namespace borel {

namespace {

Json optional_big(const std::optional<BigInt>& v) { return v ? Json(v->str()) : Json(nullptr); }

std::optional<BigInt> optional_big_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return BigInt(j.get<std::string>());
}

}  // namespace

Json to_json(const DegreeReport& report) {
  return Json{{"n", report.n},
              {"dim", report.dim},
              {"std_counts", report.std_counts},
              {"arith", report.arith},
              {"geom", report.geom},
              {"arith_total", report.arith_total},
              {"geom_total", report.geom_total},
              {"multiplicity", report.multiplicity}};
}

DegreeReport degree_report_from_json(const Json& j) {
  DegreeReport report;
  report.n = j.at("n").get<int>();
  report.dim = j.at("dim").get<int>();
  report.std_counts = j.at("std_counts").get<std::vector<std::int64_t>>();
  report.arith = j.at("arith").get<std::vector<std::int64_t>>();
  report.geom = j.at("geom").get<std::vector<std::int64_t>>();
  report.arith_total = j.at("arith_total").get<std::int64_t>();
  report.geom_total = j.at("geom_total").get<std::int64_t>();
  report.multiplicity = j.at("multiplicity").get<std::int64_t>();
  return report;
}

Json to_json(const IntPolynomial& poly) {
  Json out = Json::array();
  for (const BigInt& c : poly.coefficients()) out.push_back(c.str());
  return out;
}

IntPolynomial int_polynomial_from_json(const Json& j) {
  std::vector<BigInt> coeffs;
  for (const Json& c : j) coeffs.emplace_back(c.get<std::string>());
  return IntPolynomial(std::move(coeffs));
}

Json to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, rank] : table.entries) entries.push_back(Json::array({key.first, key.second, rank}));
  return Json{{"field_char", table.field.characteristic}, {"cutoff", table.cutoff}, {"entries", entries}};
}

BettiTable betti_table_from_json(const Json& j) {
  BettiTable table;
  table.field = FieldSpec{j.at("field_char").get<std::int64_t>()};
  table.cutoff = j.at("cutoff").get<int>();
  for (const Json& e : j.at("entries")) table.entries[{e.at(0).get<int>(), e.at(1).get<int>()}] = e.at(2).get<std::int64_t>();
  return table;
}

Json to_json(const std::vector<StandardPair>& pairs) {
  Json out = Json::array();
  for (const StandardPair& p : pairs) {
    Json vars = Json::array();
    for (int i : p.free_vars.members()) vars.push_back(i + 1);
    out.push_back(Json{{"u", format_monomial(p.u)}, {"Z", vars}});
  }
  return out;
}

Json to_json(const BoundReport& report) {
  Json gens = Json::array();
  for (const Monomial& g : report.ideal.gens()) gens.push_back(format_monomial(g));
  Json checks = Json::array();
  for (const BoundCheck& c : report.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"applicable", c.applicable},
                          {"lhs", optional_big(c.lhs)},
                          {"rhs", optional_big(c.rhs)},
                          {"holds", c.holds}});
  }
  Json out{{"ideal_id", report.ideal_id},
           {"n", report.ideal.num_vars()},
           {"generators", gens},
           {"flags",
            {{"strongly_stable", report.strongly_stable},
             {"borel_type", report.borel_type},
             {"squarefree", report.squarefree}}},
           {"invariants",
            {{"degrees", to_json(report.degrees)},
             {"gen_degree", report.gen_degree},
             {"reg", report.reg},
             {"reg_radical", report.reg_radical},
             {"field_char", report.field.characteristic}}},
           {"checks", checks}};
  if (report.provenance) {
    out["provenance"] = Json{{"family", report.provenance->family},
                             {"seed", report.provenance->seed},
                             {"index", report.provenance->index},
                             {"rng", report.provenance->rng}};
  }
  return out;
}

BoundReport bound_report_from_json(const Json& j) {
  BoundReport report;
  report.ideal_id = j.at("ideal_id").get<std::string>();
  const int n = j.at("n").get<int>();
  std::vector<Monomial> gens;
  for (const Json& g : j.at("generators")) gens.push_back(parse_monomial(g.get<std::string>(), n));
  report.ideal = minimalize(gens, n);
  const Json& flags = j.at("flags");
  report.strongly_stable = flags.at("strongly_stable").get<bool>();
  report.borel_type = flags.at("borel_type").get<bool>();
  report.squarefree = flags.at("squarefree").get<bool>();
  const Json& inv = j.at("invariants");
  report.degrees = degree_report_from_json(inv.at("degrees"));
  report.gen_degree = inv.at("gen_degree").get<int>();
  report.reg = inv.at("reg").get<int>();
  report.reg_radical = inv.at("reg_radical").get<int>();
  report.field = FieldSpec{inv.at("field_char").get<std::int64_t>()};
  for (const Json& c : j.at("checks")) {
    BoundCheck check;
    check.name = c.at("name").get<std::string>();
    check.applicable = c.at("applicable").get<bool>();
    check.lhs = optional_big_from(c.at("lhs"));
    check.rhs = optional_big_from(c.at("rhs"));
    check.holds = c.at("holds").get<bool>();
    report.checks.push_back(std::move(check));
  }
  if (j.contains("provenance")) {
    const Json& p = j.at("provenance");
    report.provenance = Provenance{p.at("family").get<std::string>(), p.at("seed").get<std::uint64_t>(),
                                   p.at("index").get<int>(), p.at("rng").get<std::string>()};
  }
  return report;
}

std::string to_json_lines(const std::vector<BoundReport>& reports) {
  std::string out;
  for (const BoundReport& r : reports) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

std::string summary_csv(const std::vector<CheckSummary>& summaries) {
  std::string out = "check_name,instances,applicable,held,min_slack\n";
  for (const CheckSummary& s : summaries) {
    out += s.name + "," + std::to_string(s.instances) + "," + std::to_string(s.applicable) + "," +
           std::to_string(s.held) + "," + (s.min_slack ? s.min_slack->str() : std::string()) + "\n";
  }
  return out;
}

}  // namespace borel
