#include "borel/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "borel/betti.hpp"
#include "borel/bounds.hpp"
#include "borel/corpus.hpp"
#include "borel/hilbert.hpp"
#include "borel/io.hpp"
#include "borel/selftest.hpp"
#include "borel/serialize.hpp"
#include "borel/standard_pairs.hpp"

namespace borel {

namespace {

struct CliConfig {
  std::string command;
  std::string inline_ideal;
  std::string input_path;
  std::string output_path;
  std::string summary_path;
  std::string failures_path = "counterexamples.jsonl";
  std::string format = "text";
  int n = 0;
  std::int64_t field_char = FieldSpec::kDefaultPrime;
  std::uint64_t seed = 0;
  int count = 10;
  std::string family;
  int max_deg = 3;
  int max_gens = 3;
  int dtest = 0;
  int truncate_index = 0;
  bool verbose = false;
};

Json config_json(const CliConfig& c) {
  return Json{{"command", c.command},     {"ideal", c.inline_ideal},   {"input", c.input_path},
              {"output", c.output_path},  {"summary", c.summary_path}, {"failures", c.failures_path},
              {"format", c.format},       {"n", c.n},                  {"field_char", c.field_char},
              {"seed", c.seed},           {"count", c.count},          {"family", c.family},
              {"max_deg", c.max_deg},     {"max_gens", c.max_gens},    {"dtest", c.dtest},
              {"truncate_index", c.truncate_index}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write '" + path + "'");
  out << content;
}

// Files override inline generator lists.
std::vector<MonomialIdeal> load_ideals(const CliConfig& c) {
  if (!c.input_path.empty()) return parse_corpus(read_file(c.input_path));
  if (!c.inline_ideal.empty() && std::filesystem::is_regular_file(c.inline_ideal)) {
    return parse_corpus(read_file(c.inline_ideal));
  }
  if (c.inline_ideal.empty()) throw ArgumentError("no ideal given (inline list or --input)");
  if (c.n < 1) throw ArgumentError("inline ideals need --n");
  return {parse_inline_ideal(c.inline_ideal, c.n)};
}

MonomialIdeal load_ideal(const CliConfig& c) {
  auto ideals = load_ideals(c);
  if (ideals.size() != 1) throw ArgumentError("expected exactly one ideal, got " + std::to_string(ideals.size()));
  return ideals.front();
}

Json ideal_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const Monomial& g : ideal.gens()) gens.push_back(format_monomial(g));
  return Json{{"n", ideal.num_vars()}, {"generators", gens}};
}

std::string vars_text(VarSet s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    out += (first ? "x" : ",x") + std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += " ";
    if constexpr (std::is_same_v<T, BigInt>) {
      out += values[i].str();
    } else {
      out += std::to_string(values[i]);
    }
  }
  return out;
}

void emit(const CliConfig& c, std::ostream& out, const std::string& text) {
  if (c.output_path.empty()) {
    out << text;
  } else {
    write_file(c.output_path, text);
  }
}

int cmd_info(const CliConfig& c, std::ostream& out) {
  const MonomialIdeal ideal = load_ideal(c);
  const DegreeReport report = degrees(ideal);
  const bool nonzero = !ideal.is_zero();
  if (c.format == "json") {
    Json j = to_json(report);
    j["generators"] = ideal_json(ideal)["generators"];
    j["flags"] = Json{{"strongly_stable", is_strongly_stable(ideal)},
                      {"borel_type", is_borel_type(ideal)},
                      {"squarefree", ideal.is_squarefree()}};
    j["md_profile"] = nonzero ? Json(md_profile(ideal)) : Json(nullptr);
    emit(c, out, j.dump() + "\n");
    return kExitOk;
  }
  std::ostringstream s;
  s << format_ideal(ideal);
  s << "strongly_stable: " << (is_strongly_stable(ideal) ? "yes" : "no") << "\n";
  s << "borel_type: " << (is_borel_type(ideal) ? "yes" : "no") << "\n";
  s << "squarefree: " << (ideal.is_squarefree() ? "yes" : "no") << "\n";
  if (nonzero) s << "md_profile: " << join(md_profile(ideal)) << "\n";
  s << "dim: " << report.dim << "\n";
  s << "std_counts: " << join(report.std_counts) << "\n";
  s << "arith: " << join(report.arith) << "\n";
  s << "geom: " << join(report.geom) << "\n";
  s << "arith_total: " << report.arith_total << "\n";
  s << "geom_total: " << report.geom_total << "\n";
  s << "multiplicity: " << report.multiplicity << "\n";
  emit(c, out, s.str());
  return kExitOk;
}

int cmd_std_pairs(const CliConfig& c, std::ostream& out) {
  const MonomialIdeal ideal = load_ideal(c);
  const int dtest = c.dtest > 0 ? c.dtest : 2 * ideal.num_vars() * (ideal.is_zero() ? 1 : std::max(1, gen_degree(ideal)));
  const auto pairs = certified_standard_pairs(ideal, dtest);
  if (c.format == "json") {
    emit(c, out, to_json(pairs).dump() + "\n");
    return kExitOk;
  }
  std::string text;
  for (const StandardPair& p : pairs) text += "(" + format_monomial(p.u) + ", " + vars_text(p.free_vars) + ")\n";
  emit(c, out, text);
  return kExitOk;
}

int cmd_hilbert(const CliConfig& c, std::ostream& out) {
  const MonomialIdeal ideal = load_ideal(c);
  const IntPolynomial numerator = hilbert_numerator(ideal);
  std::optional<DimMultiplicity> dm;
  if (!numerator.is_zero()) dm = dim_and_multiplicity(numerator, ideal.num_vars());
  if (c.format == "json") {
    Json j{{"numerator", to_json(numerator)}};
    j["dim"] = dm ? Json(dm->dim) : Json(nullptr);
    j["multiplicity"] = dm ? Json(dm->multiplicity.str()) : Json(nullptr);
    emit(c, out, j.dump() + "\n");
    return kExitOk;
  }
  std::ostringstream s;
  s << "numerator: " << join(numerator.coefficients()) << "\n";
  if (dm) s << "dim: " << dm->dim << "\nmultiplicity: " << dm->multiplicity << "\n";
  emit(c, out, s.str());
  return kExitOk;
}

int cmd_reg(const CliConfig& c, std::ostream& out) {
  const MonomialIdeal ideal = load_ideal(c);
  const FieldSpec field{c.field_char};
  const BettiTable table = koszul_betti(ideal, field);
  if (ideal.is_zero()) throw ArgumentError("regularity of the zero ideal");
  const int reg = table.quotient_regularity() + 1;
  if (c.format == "json") {
    emit(c, out, Json{{"betti", to_json(table)}, {"reg", reg}}.dump() + "\n");
    return kExitOk;
  }
  std::ostringstream s;
  s << "field_char: " << field.characteristic << "\n";
  for (const auto& [key, rank] : table.entries) s << "beta_" << key.first << "," << key.second << " = " << rank << "\n";
  s << "reg: " << reg << "\n";
  emit(c, out, s.str());
  return kExitOk;
}

int cmd_reg_sqfree(const CliConfig& c, std::ostream& out) {
  const MonomialIdeal ideal = load_ideal(c);
  const int reg = hochster_regularity(ideal, FieldSpec{c.field_char});
  if (c.format == "json") {
    emit(c, out, Json{{"reg", reg}, {"field_char", c.field_char}}.dump() + "\n");
  } else {
    emit(c, out, "reg: " + std::to_string(reg) + "\n");
  }
  return kExitOk;
}

int emit_ideal(const CliConfig& c, std::ostream& out, const MonomialIdeal& ideal) {
  emit(c, out, c.format == "json" ? ideal_json(ideal).dump() + "\n" : format_ideal(ideal));
  return kExitOk;
}

int cmd_closure(const CliConfig& c, std::ostream& out) {
  if (!c.input_path.empty()) {
    const MonomialIdeal seeds = load_ideal(c);
    return emit_ideal(c, out, borel_closure(seeds.gens(), seeds.num_vars()));
  }
  if (c.n < 1) throw ArgumentError("closure needs --n");
  return emit_ideal(c, out, borel_closure(parse_monomial_list(c.inline_ideal, c.n), c.n));
}

CorpusSpec corpus_spec(const CliConfig& c) {
  CorpusSpec spec;
  spec.n = c.n;
  spec.count = c.count;
  spec.seed = c.seed;
  spec.family = parse_family(c.family);
  spec.max_gen_degree = c.max_deg;
  spec.max_borel_gens = c.max_gens;
  return spec;
}

int cmd_gen_corpus(const CliConfig& c, std::ostream& out) {
  if (c.family.empty()) throw ArgumentError("gen-corpus needs --family");
  emit(c, out, format_corpus(gen_corpus(corpus_spec(c))));
  return kExitOk;
}

int cmd_verify(const CliConfig& c, std::ostream& out, std::ostream& err) {
  const FieldSpec field{c.field_char};
  std::vector<MonomialIdeal> ideals;
  std::optional<Provenance> provenance;
  if (!c.family.empty() && c.input_path.empty() && c.inline_ideal.empty()) {
    const CorpusSpec spec = corpus_spec(c);
    ideals = gen_corpus(spec);
    provenance = Provenance{c.family, c.seed, 0, std::string(CorpusRng::kAlgorithm)};
  } else {
    ideals = load_ideals(c);
  }
  const auto reports = verify_corpus(ideals, field, provenance);
  emit(c, out, to_json_lines(reports));
  if (!c.summary_path.empty()) write_file(c.summary_path, summary_csv(summarize(reports)));

  std::vector<BoundReport> failures;
  std::copy_if(reports.begin(), reports.end(), std::back_inserter(failures),
               [](const BoundReport& r) { return !r.all_hold(); });
  if (failures.empty()) return kExitOk;
  write_file(c.failures_path, to_json_lines(failures));
  err << failures.size() << " instance(s) violate a bound; written to " << c.failures_path << "\n";
  return kExitViolation;
}

int cmd_selftest(std::ostream& out) {
  const auto results = run_selftest();
  int failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << "\n";
    if (!r.passed) ++failed;
  }
  out << results.size() - failed << "/" << results.size() << " examples passed\n";
  return failed == 0 ? kExitOk : kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig c;
  CLI::App app{"Exact degrees, Hilbert series and regularity of monomial ideals", "borel-degrees"};
  app.require_subcommand(1);

  auto add_ideal_input = [&](CLI::App* sub) {
    sub->add_option("ideal", c.inline_ideal, "Comma-separated generators, or a path to an ideal file");
    sub->add_option("--input", c.input_path, "Ideal or corpus file (overrides the inline list)");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "Number of variables for inline ideals");
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", c.output_path, "Write output to a file instead of stdout");
    sub->add_option("--field-char", c.field_char, "0 for the rationals, or a prime");
    sub->add_option("--dtest", c.dtest, "Degree cap for cover certification (default 2*n*d)");
    sub->add_flag("--verbose", c.verbose, "Print the resolved configuration to stderr");
  };
  auto add_corpus = [&](CLI::App* sub) {
    sub->add_option("--family", c.family, "strongly_stable, borel_type, general or squarefree");
    sub->add_option("--count", c.count, "Number of instances");
    sub->add_option("--seed", c.seed, "Corpus seed");
    sub->add_option("--max-deg", c.max_deg, "Largest generator degree");
    sub->add_option("--max-gens", c.max_gens, "Largest number of drawn (Borel) generators");
  };

  const std::pair<const char*, const char*> simple[] = {
      {"info", "Generators, stability flags, Md-profile and degrees"},
      {"std-pairs", "Standard pairs, certified up to --dtest"},
      {"hilbert", "Hilbert series numerator, dimension and multiplicity"},
      {"reg", "Graded Betti numbers and regularity via Koszul homology"},
      {"reg-sqfree", "Regularity of a square-free ideal via Hochster's formula"},
      {"radical", "Radical of the ideal"}};
  for (const auto& [name, description] : simple) {
    auto* sub = app.add_subcommand(name, description);
    add_ideal_input(sub);
    add_common(sub);
  }
  auto* closure = app.add_subcommand("closure", "Borel closure of the listed monomials");
  add_ideal_input(closure);
  add_common(closure);
  auto* trunc = app.add_subcommand("truncate", "Image in the first i variables");
  trunc->add_option("i", c.truncate_index, "Number of variables kept")->required();
  add_ideal_input(trunc);
  add_common(trunc);
  auto* gen = app.add_subcommand("gen-corpus", "Write a seeded corpus of ideals");
  add_common(gen);
  add_corpus(gen);
  auto* verify = app.add_subcommand("verify", "Check every bound on a corpus or ideal");
  add_ideal_input(verify);
  add_common(verify);
  add_corpus(verify);
  verify->add_option("--summary", c.summary_path, "Write the per-check summary CSV here");
  verify->add_option("--failures", c.failures_path, "Where violating reports are persisted");
  app.add_subcommand("selftest", "Run the built-in worked examples");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  c.command = app.get_subcommands().front()->get_name();
  if (c.verbose) err << config_json(c).dump(2) << "\n";

  try {
    if (c.command == "info") return cmd_info(c, out);
    if (c.command == "std-pairs") return cmd_std_pairs(c, out);
    if (c.command == "hilbert") return cmd_hilbert(c, out);
    if (c.command == "reg") return cmd_reg(c, out);
    if (c.command == "reg-sqfree") return cmd_reg_sqfree(c, out);
    if (c.command == "radical") return emit_ideal(c, out, radical(load_ideal(c)));
    if (c.command == "closure") return cmd_closure(c, out);
    if (c.command == "truncate") return emit_ideal(c, out, truncate(load_ideal(c), c.truncate_index));
    if (c.command == "gen-corpus") return cmd_gen_corpus(c, out);
    if (c.command == "verify") return cmd_verify(c, out, err);
    if (c.command == "selftest") return cmd_selftest(out);
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace borel
