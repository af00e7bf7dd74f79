// Command-line front end: basis enumeration, characters and verification suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qva/characters.hpp"
#include "qva/quasi_particle.hpp"
#include "qva/rational.hpp"
#include "qva/suites.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

struct Options {
  int degree = 0;
  std::optional<int> max_charge;
  std::optional<int> level;
  std::string t = "0";
  std::optional<std::size_t> h_order;
  std::string suite = "all";
  int pmax = 3;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

qva::Rat parse_t(const std::string &text) {
  try {
    return qva::parse_rat(text);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("--t: ") + e.what());
  }
}

void emit(const Options &o, const std::string &text) {
  if (o.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f)
    throw UsageError("cannot open output file '" + o.out + "'");
  f << text << "\n";
}

std::string render(const Options &o, const json &j, const std::string &plain) {
  return o.format == "json" ? j.dump(2) : plain;
}

int cmd_enumerate(const Options &o) {
  const auto basis = qva::enumerate_qp_basis(o.degree, o.max_charge);
  json monomials = json::array();
  std::ostringstream plain;
  for (const auto &q : basis) {
    json pairs = json::array();
    for (const auto &[m, n] : q.written())
      pairs.push_back({m, n});
    monomials.push_back(pairs);
    plain << q << "\n";
  }
  plain << basis.size() << " monomials of degree " << o.degree;
  emit(o, render(o, {{"degree", o.degree}, {"monomials", monomials}}, plain.str()));
  return kOk;
}

int cmd_character(const Options &o) {
  qva::QSeries s;
  if (o.level)
    s = qva::character_quotient(*o.level, o.degree);
  else if (o.max_charge)
    s = qva::character_qp_basis(o.degree, parse_t(o.t), o.max_charge);
  else
    s = qva::character_principal(o.degree);
  std::ostringstream plain;
  plain << s.tag << ":";
  for (auto c : s.coeffs)
    plain << " " << c;
  emit(o, render(o, {{"coeffs", s.coeffs}}, plain.str()));
  return kOk;
}

int cmd_verify(const Options &o) {
  qva::SuiteConfig cfg;
  cfg.h_order = o.h_order;
  cfg.degree = o.degree;
  cfg.level = o.level.value_or(1);
  cfg.t = parse_t(o.t);
  cfg.pmax = o.pmax;
  cfg.seed = o.seed;
  const auto results = qva::run_suite(o.suite, cfg);

  bool all = true;
  json checks = json::array();
  std::ostringstream plain;
  for (const auto &r : results) {
    all = all && r.passed;
    json params = json::object();
    for (const auto &[k, v] : r.params)
      params[k] = v;
    checks.push_back({{"name", r.name},
                      {"params", params},
                      {"passed", r.passed},
                      {"first_failure", r.passed ? json(nullptr) : json(r.witness)}});
    plain << (r.passed ? "PASS " : "FAIL ") << r.name;
    for (const auto &[k, v] : r.params)
      plain << " " << k << "=" << v;
    if (!r.passed)
      plain << " : " << r.witness;
    plain << "\n";
  }
  plain << (all ? "all checks passed" : "verification failed");
  emit(o, render(o, {{"suite", o.suite}, {"passed", all}, {"checks", checks}}, plain.str()));
  return all ? kOk : kVerificationFailed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Principal subspace computations: basis enumeration, characters, verification"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "plain"}))
        ->capture_default_str();
    sub->add_option("--out", o.out, "Write output to FILE instead of stdout");
    sub->add_option("--t", o.t, "Quasi-particle shift parameter, \"p/q\"")->capture_default_str();
  };

  auto *enumerate = app.add_subcommand("enumerate", "List basis quasi-particle monomials of a degree");
  enumerate->add_option("--degree", o.degree, "Degree")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--max-charge", o.max_charge, "Largest allowed charge")
      ->check(CLI::PositiveNumber);
  add_common(enumerate);

  auto *character = app.add_subcommand("character", "Graded dimensions up to a degree");
  character->add_option("--degree", o.degree, "Largest degree")->required()->check(CLI::NonNegativeNumber);
  auto *level_opt = character->add_option("--level", o.level, "Level of the quotient")
                        ->check(CLI::PositiveNumber);
  character->add_option("--max-charge", o.max_charge, "Count basis monomials with charges <= k")
      ->check(CLI::PositiveNumber)
      ->excludes(level_opt);
  add_common(character);

  auto *verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", o.suite, "Suite to run")
      ->check(CLI::IsMember({"g", "rmatrix", "basis", "ideal", "relations", "slocality", "all"}))
      ->capture_default_str();
  verify->add_option("--h-order", o.h_order, "Truncation order in h")->check(CLI::PositiveNumber);
  verify->add_option("--degree", o.degree, "Degree cap")->check(CLI::NonNegativeNumber);
  verify->add_option("--level", o.level, "Level")->check(CLI::PositiveNumber);
  verify->add_option("--pmax", o.pmax, "Largest charge in the relations suite")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", o.seed, "Seed for randomized checks")->capture_default_str();
  add_common(verify);
  o.degree = 8;
  o.t = "0";

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (verify->parsed() && o.t == "0" && verify->count("--t") == 0)
      o.t = "1";
    if (enumerate->parsed())
      return cmd_enumerate(o);
    if (character->parsed())
      return cmd_character(o);
    return cmd_verify(o);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
