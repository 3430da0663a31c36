#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "purespin/clifford.hpp"
#include "purespin/connection.hpp"
#include "purespin/json_io.hpp"
#include "purespin/pure.hpp"
#include "purespin/suites.hpp"
#include "purespin/text.hpp"

namespace {

using purespin::CheckResult;
using purespin::Report;
using purespin::Status;

struct Options {
  int n = 3;
  std::uint64_t seed = 0;
  int trials = 100;
  std::string format = "text";
  std::string input;
  std::string jet;
  std::string gens;
  std::string spinor;
};

void add_common(CLI::App* cmd, Options& opt, bool with_trials = true) {
  cmd->add_option("--n", opt.n, "base dimension (1..12)")
      ->check(CLI::Range(1, 12));
  cmd->add_option("--seed", opt.seed, "random seed");
  if (with_trials)
    cmd->add_option("--trials", opt.trials, "number of trials")
        ->check(CLI::PositiveNumber);
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

int emit(const Report& rep, const std::string& format) {
  if (format == "json")
    std::cout << purespin::report_to_json(rep) << "\n";
  else
    std::cout << purespin::report_to_text(rep);
  return rep.all_ok() ? 0 : 1;
}

// Info rows carry their payload in the witness so the JSON report keeps it;
// the text renderer prints pass lines bare, so callers print payloads too.
void add_info(Report& rep, const std::string& name, const std::string& text) {
  rep.checks.push_back(CheckResult{name, Status::pass, text});
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

int run_pure(const Options& opt) {
  std::vector<purespin::PhaseVector> gens;
  for (const std::string& piece : split_list(opt.gens, ';'))
    if (!blank(piece))
      gens.push_back(purespin::parse_phase_vector(opt.n, piece));
  const purespin::IsotropicSubspace I =
      purespin::IsotropicSubspace::from_vectors(opt.n, gens);
  const purespin::SpinorSubspace L = purespin::pure_subspace(I);

  Report rep = purespin::necessary_purity_filter(L);
  rep.n = opt.n;
  add_info(rep, "generator_dimension", std::to_string(I.dim()));
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < L.dim(); ++i)
    basis.push_back(purespin::print_spinor(L.basis_spinor(i)));
  std::string joined;
  for (const std::string& b : basis)
    joined += (joined.empty() ? "" : "; ") + b;
  add_info(rep, "basis", joined);

  const int status = emit(rep, opt.format);
  if (opt.format == "text") {
    std::cout << "annihilated subspace basis (dim " << L.dim() << "):\n";
    for (const std::string& b : basis) std::cout << "  " << b << "\n";
  }
  return status;
}

int run_annihilator(const Options& opt) {
  const purespin::Spinor s = purespin::parse_spinor(opt.n, opt.spinor);
  if (s.is_zero())
    throw std::runtime_error("annihilator: the zero spinor is not accepted");
  const purespin::IsotropicSubspace I = purespin::annihilator(s);

  Report rep;
  rep.suite = "annihilator";
  rep.n = opt.n;
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < I.dim(); ++i)
    basis.push_back(purespin::print_phase_vector(I.basis_vector(i)));
  std::string joined;
  for (const std::string& b : basis)
    joined += (joined.empty() ? "" : "; ") + b;
  add_info(rep, "dimension", std::to_string(I.dim()));
  add_info(rep, "basis", joined);
  add_info(rep, "pure", purespin::is_pure(s) ? "yes" : "no");
  rep.add("annihilated_by_own_basis", [&] {
    for (std::size_t i = 0; i < I.dim(); ++i)
      if (!purespin::clifford_action(I.basis_vector(i), s).is_zero())
        return false;
    return true;
  }());

  const int status = emit(rep, opt.format);
  if (opt.format == "text") {
    std::cout << "annihilator basis (dim " << I.dim() << "):\n";
    for (const std::string& b : basis) std::cout << "  " << b << "\n";
    std::cout << "pure: " << (purespin::is_pure(s) ? "yes" : "no") << "\n";
  }
  return status;
}

int run_twistor(const Options& opt, bool have_input) {
  if (!have_input)
    return emit(purespin::suites::twistor_oracle(opt.n, opt.seed, opt.trials),
                opt.format);

  const purespin::FrameConnection c = purespin::load_connection(opt.input);
  const int n = c.n();
  const purespin::TwistorGauge g = purespin::twistor_gauge(c);

  Report rep = g.constraints;
  std::string gauge_text;
  for (int a = 1; a <= 2 * n; ++a)
    gauge_text += (gauge_text.empty() ? "" : "; ") +
                  ("A_" + std::to_string(a) + " = " +
                   purespin::print_scalar(g.A[std::size_t(a - 1)]));
  add_info(rep, "gauge_potential", gauge_text);

  purespin::FrameConnection ca = c;
  for (int a = 1; a <= 2 * n; ++a) ca.set_A(a, g.A[std::size_t(a - 1)]);
  const purespin::SpinorJet uj =
      purespin::SpinorJet::constant(purespin::Spinor::unit(n));
  if (g.satisfiable) {
    bool vanish = true;
    for (int a = 1; a <= 2 * n && vanish; ++a)
      vanish = purespin::twistor_component(ca, uj, a).is_zero();
    rep.add("gauge_soundness", vanish);
  } else {
    rep.add_skip("gauge_soundness", "no admissible gauge");
  }

  const int status = emit(rep, opt.format);
  if (opt.format == "text") {
    std::cout << "computed gauge potential:\n";
    for (int a = 1; a <= 2 * n; ++a)
      std::cout << "  A_" << a << " = "
                << purespin::print_scalar(g.A[std::size_t(a - 1)]) << "\n";
    std::cout << "unit-spinor twistor components with this gauge:\n";
    for (int a = 1; a <= 2 * n; ++a)
      std::cout << "  direction " << a << ": "
                << purespin::print_spinor(
                       purespin::twistor_component(ca, uj, a))
                << "\n";
    if (!opt.jet.empty()) {
      const purespin::SpinorJet j = purespin::load_jet(opt.jet);
      if (j.n() != n)
        throw std::runtime_error("jet dimension does not match connection");
      std::cout << "twistor components of the input jet (input gauge):\n";
      for (int a = 1; a <= 2 * n; ++a)
        std::cout << "  direction " << a << ": "
                  << purespin::print_spinor(purespin::twistor_component(c, j, a))
                  << "\n";
    }
  }
  return status;
}

int run_equivalence(const Options& opt, bool geodesic_flavor,
                    bool have_input) {
  if (!have_input) {
    const Report rep =
        geodesic_flavor
            ? purespin::suites::geodesic(opt.n, opt.seed, opt.trials)
            : purespin::suites::integrability(opt.n, opt.seed, opt.trials);
    return emit(rep, opt.format);
  }
  const purespin::FrameConnection c = purespin::load_connection(opt.input);
  Report rep;
  rep.suite = geodesic_flavor ? "geodesic" : "integrability";
  rep.n = c.n();
  std::vector<std::string> lines;
  for (int k = 1; k <= c.n(); ++k) {
    const purespin::EquivalencePair p =
        geodesic_flavor ? purespin::totally_geodesic_check(c, k)
                        : purespin::integrability_check(c, k);
    const std::string verdict = p.geometric ? "yes" : "no";
    rep.add("span_" + std::to_string(k) + "_agreement",
            p.geometric == p.spinorial,
            "geometric=" + std::string(p.geometric ? "1" : "0") +
                " spinorial=" + (p.spinorial ? "1" : "0"));
    add_info(rep, "span_" + std::to_string(k) + "_verdict", verdict);
    lines.push_back("span{e_1..e_" + std::to_string(k) +
                    "}: " + (geodesic_flavor ? "totally geodesic " : "integrable ") +
                    verdict);
  }
  const int status = emit(rep, opt.format);
  if (opt.format == "text")
    for (const std::string& line : lines) std::cout << line << "\n";
  return status;
}

int run_sweep(const Options& opt) {
  const std::vector<purespin::suites::CriterionResult> results =
      purespin::suites::run_acceptance(opt.seed);
  bool ok = true;
  if (opt.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json item;
      item["index"] = r.index;
      item["label"] = r.label;
      item["status"] = r.pass ? "pass" : "fail";
      item["seconds"] = r.seconds;
      if (r.budget > 0) item["budget"] = r.budget;
      if (!r.detail.empty()) item["detail"] = r.detail;
      arr.push_back(item);
      ok = ok && r.pass;
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << purespin::suites::criterion_line(r) << "\n";
      ok = ok && r.pass;
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Clifford/spinor verification harness"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* theorem1 = app.add_subcommand(
      "theorem1", "duality laws on random isotropic pairs");
  add_common(theorem1, opt);

  CLI::App* pure = app.add_subcommand(
      "pure", "annihilated spinor subspace of the given generators");
  add_common(pure, opt, false);
  pure->add_option("--gens", opt.gens,
                   "semicolon-separated phase vectors, e.g. \"e1; t2\"")
      ->required();

  CLI::App* annihilator = app.add_subcommand(
      "annihilator", "annihilating vectors of the given spinor");
  add_common(annihilator, opt, false);
  annihilator->add_option("--spinor", opt.spinor, "spinor, e.g. \"1 + t{12}\"")
      ->required();

  CLI::App* twistor = app.add_subcommand(
      "twistor", "gauge evaluation of a connection, or a seeded oracle sweep");
  add_common(twistor, opt);
  twistor->add_option("--input", opt.input, "connection JSON file");
  twistor->add_option("--jet", opt.jet, "jet JSON file (with --input)");

  CLI::App* integrability = app.add_subcommand(
      "integrability", "bracket closure vs the spinor condition");
  add_common(integrability, opt);
  integrability->add_option("--input", opt.input, "connection JSON file");

  CLI::App* geodesic = app.add_subcommand(
      "geodesic", "totally geodesic condition vs the spinor condition");
  add_common(geodesic, opt);
  geodesic->add_option("--input", opt.input, "connection JSON file");

  CLI::App* sweep =
      app.add_subcommand("sweep", "full acceptance suite at n = 2..5");
  sweep->add_option("--seed", opt.seed, "random seed");
  sweep->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (theorem1->parsed())
      return emit(purespin::suites::theorem1(opt.n, opt.seed, opt.trials),
                  opt.format);
    if (pure->parsed()) return run_pure(opt);
    if (annihilator->parsed()) return run_annihilator(opt);
    if (twistor->parsed()) return run_twistor(opt, !opt.input.empty());
    if (integrability->parsed())
      return run_equivalence(opt, false, !opt.input.empty());
    if (geodesic->parsed())
      return run_equivalence(opt, true, !opt.input.empty());
    if (sweep->parsed()) return run_sweep(opt);
  } catch (const purespin::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
