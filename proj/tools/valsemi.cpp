// Command-line front end: decides whether a finitely presented subsemigroup
// of Q_+ can be the value semigroup of a valuation dominating an
// equicharacteristic noetherian local domain, and produces the counterexample
// certificates for the block-profile family.

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "valsemi/obstruction.hpp"
#include "valsemi/rational.hpp"
#include "valsemi/report_io.hpp"
#include "valsemi/semigroup.hpp"
#include "valsemi/valuation.hpp"

namespace {

using valsemi::BigInt;
using valsemi::GeneratorSpec;
using valsemi::Rational;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_rational_list(const std::string& csv, const char* flag) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const valsemi::ParseError& e) {
      throw UsageError(std::string(flag) + ": " + e.what());
    }
  }
  if (out.empty()) throw UsageError(std::string(flag) + ": empty list");
  return out;
}

std::vector<Rational> read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--file: cannot open " + path);
  std::vector<Rational> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string token;
    std::stringstream(line) >> token;
    if (token.empty()) continue;
    try {
      out.push_back(Rational::parse(token));
    } catch (const valsemi::ParseError&) {
      throw UsageError("--file: malformed rational at " + path + ":" + std::to_string(lineno));
    }
  }
  if (out.empty()) throw UsageError("--file: no generators in " + path);
  return out;
}

// Input source shared by gen / count / check.
struct InputOptions {
  std::string gens;
  std::string file;
  bool example1 = false;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--gens", gens, "inline comma-separated generators, e.g. 2,3 or 1/2,1/3");
    cmd.add_option("--file", file, "generator file: one rational per line, # comments");
    cmd.add_flag("--example1", example1, "use the block-profile counterexample generators");
  }

  // horizon: number of profile blocks to make available when --example1.
  GeneratorSpec spec(unsigned horizon) const {
    int sources = (!gens.empty()) + (!file.empty()) + example1;
    if (sources != 1)
      throw UsageError("exactly one input source required: --gens, --file or --example1");
    if (example1) return valsemi::example1_generators(horizon);
    std::vector<Rational> list = gens.empty() ? read_generator_file(file)
                                              : parse_rational_list(gens, "--gens");
    for (const auto& g : list)
      if (!g.is_positive()) throw UsageError("generators must be positive, got " + g.str());
    return GeneratorSpec::explicit_list(std::move(list));
  }
};

Rational parse_positive(const std::string& text, const char* flag) {
  Rational q;
  try {
    q = Rational::parse(text);
  } catch (const valsemi::ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
  if (!q.is_positive()) throw UsageError(std::string(flag) + " must be positive");
  return q;
}

unsigned profile_horizon_for(const Rational& bound) {
  BigInt blocks = bound.floor();
  if (blocks < 1) blocks = 1;
  return static_cast<unsigned>(blocks);
}

void maybe_timestamp(nlohmann::json& doc, bool timestamps) {
  if (!timestamps) return;
  char buf[32];
  std::time_t now = std::time(nullptr);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  doc["generated_at"] = buf;
}

void emit(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"value-semigroup obstruction toolkit"};
  app.require_subcommand(1);
  // global flags may appear after the subcommand name
  app.fallthrough();

  std::string format = "text";
  std::size_t budget = 10'000'000;
  bool timestamps = false;
  app.add_option("--format", format, "output format: text, json or csv (check only)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--budget", budget, "enumeration element budget")
      ->envname("VALSEMI_BUDGET");
  app.add_flag("--timestamps", timestamps, "include a timestamp in reports");

  InputOptions gen_input, count_input, check_input;
  std::string bound_text, at_text;
  unsigned check_n = 0, check_dmax = 0;
  bool fail_on_violation = false, early_exit = false;
  unsigned ex1_n = 0;
  std::string ex1_range;
  std::string weights_text, poly_text;
  unsigned mono_d = 0;

  CLI::App* cmd_gen = app.add_subcommand("gen", "enumerate semigroup elements up to a bound");
  gen_input.add_to(*cmd_gen);
  cmd_gen->add_option("--bound", bound_text, "upper bound (inclusive)")->required();

  CLI::App* cmd_count = app.add_subcommand("count", "count elements in the half-open [0, x)");
  count_input.add_to(*cmd_count);
  cmd_count->add_option("--at", at_text, "interval endpoint x")->required();

  CLI::App* cmd_check =
      app.add_subcommand("check", "test the obstruction inequality for d = 1..dmax");
  check_input.add_to(*cmd_check);
  cmd_check->add_option("--n", check_n, "candidate embedding dimension")->required();
  cmd_check->add_option("--dmax", check_dmax, "largest d to test")->required();
  cmd_check->add_flag("--fail-on-violation", fail_on_violation,
                      "exit with status 3 when the verdict is ViolatedAt");
  cmd_check->add_flag("--early-exit", early_exit,
                      "stop enumerating once the verdict is determined");

  CLI::App* cmd_ex1 =
      app.add_subcommand("example1", "certificate that the counterexample family is obstructed");
  cmd_ex1->add_option("--n", ex1_n, "embedding dimension to refute");
  cmd_ex1->add_option("--n-range", ex1_range, "range a..b of dimensions");

  CLI::App* cmd_mono =
      app.add_subcommand("monomial", "verify the degree and interval bounds for a monomial valuation");
  cmd_mono->add_option("--weights", weights_text, "comma-separated positive weights")->required();
  cmd_mono->add_option("--d", mono_d, "degree bound d");
  cmd_mono->add_option("--poly", poly_text, "polynomial to value, e.g. 'x^2 + 3/2 y'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*cmd_gen) {
      Rational bound = parse_positive(bound_text, "--bound");
      GeneratorSpec spec = gen_input.spec(profile_horizon_for(bound));
      valsemi::EnumerateOptions options;
      options.budget = budget;
      valsemi::BoundedSemigroup s = valsemi::enumerate_up_to(spec, bound, options);
      if (format == "json") {
        nlohmann::json doc = {{"schema", valsemi::kReportSchema},
                              {"command", "gen"},
                              {"bound", bound.str()},
                              {"s0", s.s0.str()},
                              {"elements", nlohmann::json::array()}};
        for (const auto& q : s.elements) doc["elements"].push_back(q.str());
        maybe_timestamp(doc, timestamps);
        emit(doc);
      } else {
        for (const auto& q : s.elements) std::cout << q << "\n";
      }
      return 0;
    }

    if (*cmd_count) {
      Rational at = parse_positive(at_text, "--at");
      GeneratorSpec spec = count_input.spec(profile_horizon_for(at));
      valsemi::EnumerateOptions options;
      options.budget = budget;
      valsemi::BoundedSemigroup s = valsemi::enumerate_up_to(spec, at, options);
      valsemi::BigNat count = valsemi::count_below(s, at);
      if (format == "json") {
        nlohmann::json doc = {{"schema", valsemi::kReportSchema},
                              {"command", "count"},
                              {"at", at.str()},
                              {"count", count.str()}};
        maybe_timestamp(doc, timestamps);
        emit(doc);
      } else {
        std::cout << count.str() << "\n";
      }
      return 0;
    }

    if (*cmd_check) {
      if (check_n == 0 || check_dmax == 0) throw UsageError("--n and --dmax must be >= 1");
      GeneratorSpec spec = check_input.spec(check_dmax);
      valsemi::CheckOptions options;
      options.budget = budget;
      options.early_exit = early_exit;
      valsemi::ObstructionReport report = valsemi::check(spec, check_n, check_dmax, options);
      if (format == "json") {
        nlohmann::json doc = valsemi::to_json(report);
        doc["command"] = "check";
        maybe_timestamp(doc, timestamps);
        emit(doc);
      } else if (format == "csv") {
        std::cout << valsemi::to_csv(report);
      } else {
        std::cout << valsemi::to_text(report);
      }
      return (fail_on_violation && report.violated_at) ? 3 : 0;
    }

    if (*cmd_ex1) {
      unsigned lo = ex1_n, hi = ex1_n;
      if (!ex1_range.empty()) {
        if (ex1_n != 0) throw UsageError("give either --n or --n-range, not both");
        auto dots = ex1_range.find("..");
        if (dots == std::string::npos)
          throw UsageError("--n-range: expected a..b, got " + ex1_range);
        try {
          lo = static_cast<unsigned>(std::stoul(ex1_range.substr(0, dots)));
          hi = static_cast<unsigned>(std::stoul(ex1_range.substr(dots + 2)));
        } catch (const std::exception&) {
          throw UsageError("--n-range: expected a..b, got " + ex1_range);
        }
      }
      if (lo == 0 || hi < lo) throw UsageError("example1 needs --n >= 1 or --n-range a..b");
      std::vector<valsemi::Certificate> certs;
      for (unsigned n = lo; n <= hi; ++n)
        certs.push_back(valsemi::example1_certificate(n, budget));
      if (format == "json") {
        nlohmann::json doc = {{"schema", valsemi::kReportSchema},
                              {"command", "example1"},
                              {"certificates", nlohmann::json::array()}};
        for (const auto& cert : certs) doc["certificates"].push_back(valsemi::to_json(cert));
        maybe_timestamp(doc, timestamps);
        emit(doc);
      } else {
        for (const auto& cert : certs) std::cout << valsemi::to_text(cert);
      }
      return 0;
    }

    if (*cmd_mono) {
      std::vector<Rational> weights = parse_rational_list(weights_text, "--weights");
      for (const auto& wt : weights)
        if (!wt.is_positive()) throw UsageError("--weights must all be positive");
      valsemi::MonomialValuation v(static_cast<unsigned>(weights.size()), weights);
      if (mono_d == 0 && poly_text.empty())
        throw UsageError("monomial needs --d and/or --poly");
      nlohmann::json doc = {{"schema", valsemi::kReportSchema},
                            {"command", "monomial"},
                            {"n", v.n}};
      doc["weights"] = nlohmann::json::array();
      for (const auto& wt : weights) doc["weights"].push_back(wt.str());
      std::ostringstream text;
      if (mono_d > 0) {
        valsemi::Lemma1Report l1 = valsemi::verify_lemma1(v, mono_d);
        valsemi::Lemma2Report l2 = valsemi::verify_lemma2(v, mono_d);
        doc["lemma1"] = valsemi::to_json(l1);
        doc["lemma2"] = valsemi::to_json(l2);
        text << valsemi::to_text(l1) << valsemi::to_text(l2);
      }
      if (!poly_text.empty()) {
        valsemi::SparsePolynomial f = valsemi::SparsePolynomial::parse(poly_text);
        auto value = valsemi::value_of(v, f);
        doc["value_of"] = {{"poly", poly_text},
                           {"value", value ? nlohmann::json(value->str()) : nlohmann::json()}};
        text << "value(" << poly_text << ") = " << (value ? value->str() : "infinity") << "\n";
      }
      if (format == "json") {
        maybe_timestamp(doc, timestamps);
        emit(doc);
      } else {
        std::cout << text.str();
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const valsemi::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const valsemi::EnumerationError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
