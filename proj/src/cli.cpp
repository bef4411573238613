#include "updown/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "updown/chains.hpp"
#include "updown/gamma.hpp"
#include "updown/limit.hpp"
#include "updown/measures.hpp"
#include "updown/partition.hpp"
#include "updown/rational.hpp"
#include "updown/report.hpp"
#include "updown/verify.hpp"

namespace updown {

namespace {

using Json = nlohmann::ordered_json;

// Quotes a CSV field when it contains a delimiter, quote, or newline.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    else q += c;
  }
  q += "\"";
  return q;
}

// Parses a partition in the bracketed form "[6,5,1]" (or "[]").
StrictPartition parse_partition(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("partition must look like [6,5,1]: " + text);
  s = s.substr(1, s.size() - 2);
  std::vector<std::int64_t> parts;
  if (!s.empty()) {
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t comma = s.find(',', pos);
      std::string tok = s.substr(pos, comma == std::string::npos
                                          ? std::string::npos
                                          : comma - pos);
      if (tok.empty())
        throw std::invalid_argument("empty entry in partition: " + text);
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size())
        throw std::invalid_argument("bad partition entry '" + tok + "'");
      parts.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return StrictPartition(parts);
}

int default_threads() {
  if (const char* env = std::getenv("UPDOWN_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

void emit_report(const Report& rep, const std::string& format,
                 std::ostream& out) {
  if (format == "csv") {
    out << "input,expected,got,pass\n";
    for (const auto& c : rep.checks)
      out << csv_field(c.input) << ',' << csv_field(c.expected) << ','
          << csv_field(c.got) << ',' << (c.pass ? "true" : "false") << '\n';
    return;
  }
  Json j;
  j["theorem"] = rep.name;
  Json params = Json::object();
  for (const auto& [k, v] : rep.parameters) params[k] = v;
  j["parameters"] = params;
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json jc;
    jc["input"] = c.input;
    jc["expected"] = c.expected;
    jc["got"] = c.got;
    jc["pass"] = c.pass;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  j["pass"] = rep.pass;
  out << j.dump(2) << '\n';
}

Rat require_finite(const Alpha& alpha, const std::string& where) {
  if (alpha.is_infinite())
    throw std::invalid_argument(where +
                                " needs a finite rational alpha parameter");
  return alpha.value();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Exact up/down Markov chains on strict partitions: enumeration, "
      "coherent measures, transition matrices, spectra, symbolic identity "
      "suites, and seeded simulation."};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  int threads = default_threads();
  app.add_option("--threads", threads,
                 "Worker threads for parallel kernels (default from "
                 "UPDOWN_THREADS, else 1)")
      ->check(CLI::PositiveNumber);

  // enumerate --n
  auto* cmd_enum = app.add_subcommand(
      "enumerate", "List the strict partitions of a given weight");
  std::int64_t enum_n = 0;
  cmd_enum->add_option("--n", enum_n, "Weight to enumerate")
      ->required()
      ->check(CLI::NonNegativeNumber);

  // measure --n --alpha [--plancherel]
  auto* cmd_measure = app.add_subcommand(
      "measure", "Probability weights of the level-n measure");
  std::int64_t measure_n = 0;
  std::string measure_alpha = "2";
  bool plancherel = false;
  cmd_measure->add_option("--n", measure_n, "Level")->required()->check(
      CLI::NonNegativeNumber);
  cmd_measure->add_option("--alpha", measure_alpha,
                          "Family parameter (rational or 'inf')")
      ->capture_default_str();
  cmd_measure->add_flag("--plancherel", plancherel,
                        "Use the weighted-dimension measure (alpha -> inf)");

  // matrix --n --alpha
  auto* cmd_matrix = app.add_subcommand(
      "matrix", "Exact one-step up-down transition matrix on level n");
  std::int64_t matrix_n = 0;
  std::string matrix_alpha = "2";
  cmd_matrix->add_option("--n", matrix_n, "Level")->required()->check(
      CLI::PositiveNumber);
  cmd_matrix->add_option("--alpha", matrix_alpha,
                         "Family parameter (rational or 'inf')")
      ->capture_default_str();

  // spectrum --n --alpha
  auto* cmd_spectrum = app.add_subcommand(
      "spectrum", "Eigenvalues of the one-step chain with multiplicities");
  std::int64_t spectrum_n = 0;
  std::string spectrum_alpha = "2";
  cmd_spectrum->add_option("--n", spectrum_n, "Level")->required()->check(
      CLI::PositiveNumber);
  cmd_spectrum->add_option("--alpha", spectrum_alpha,
                           "Family parameter (rational or 'inf')")
      ->capture_default_str();

  // verify --suite ... --max-weight --alpha
  auto* cmd_verify =
      app.add_subcommand("verify", "Run an exact verification suite");
  std::string suite;
  std::int64_t max_weight = 8;
  std::string verify_alpha = "2";
  cmd_verify
      ->add_option("--suite", suite,
                   "One of: coherence, kerov, ivanov, thm27, thm42, thm51, "
                   "prop68, sl2, spectrum")
      ->required()
      ->check(CLI::IsMember({"coherence", "kerov", "ivanov", "thm27", "thm42",
                             "thm51", "prop68", "sl2", "spectrum"}));
  cmd_verify
      ->add_option("--max-weight", max_weight,
                   "Size bound driving the suite (per-suite caps documented "
                   "in the README)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_verify
      ->add_option("--alpha", verify_alpha,
                   "Family parameter (rational; 'inf' where supported)")
      ->capture_default_str();

  // simulate --n --alpha --steps --seed [--moments K] [--start]
  auto* cmd_simulate = app.add_subcommand(
      "simulate", "Run a seeded up-down trajectory (JSON lines or CSV)");
  std::int64_t sim_n = 0, sim_steps = 1000;
  std::uint64_t sim_seed = 1;
  std::string sim_alpha = "2";
  int sim_moments = 0;
  std::string sim_start;
  cmd_simulate->add_option("--n", sim_n, "Level")->required()->check(
      CLI::PositiveNumber);
  cmd_simulate->add_option("--alpha", sim_alpha,
                           "Family parameter (rational or 'inf')")
      ->capture_default_str();
  cmd_simulate->add_option("--steps", sim_steps, "Number of chain steps")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd_simulate->add_option("--seed", sim_seed, "RNG seed")
      ->capture_default_str();
  cmd_simulate->add_option(
      "--moments", sim_moments,
      "Emit scaled moment coordinates q2..q_{2K} along the path (CSV "
      "defaults to 1)");
  cmd_simulate->add_option("--start", sim_start,
                           "Start state, e.g. [3,1] (default: drawn from the "
                           "level measure)");

  // moments --n --alpha [--exact] [--k] [--steps] [--burn-in] [--seed]
  auto* cmd_moments = app.add_subcommand(
      "moments",
      "Stationary mean of the moment coordinate q_{2k} on level n: exact "
      "summation or Monte Carlo with batch-means error");
  std::int64_t mom_n = 0, mom_steps = 200000, mom_burn = -1;
  std::uint64_t mom_seed = 1;
  std::string mom_alpha = "2";
  int mom_k = 1;
  bool mom_exact = false;
  cmd_moments->add_option("--n", mom_n, "Level")->required()->check(
      CLI::PositiveNumber);
  cmd_moments->add_option("--alpha", mom_alpha, "Family parameter (rational)")
      ->capture_default_str();
  cmd_moments->add_flag("--exact", mom_exact,
                        "Exact expectation instead of Monte Carlo");
  cmd_moments->add_option("--k", mom_k, "Moment index (estimates q_{2k})")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_moments->add_option("--steps", mom_steps, "Post-burn-in steps")
      ->capture_default_str();
  cmd_moments->add_option("--burn-in", mom_burn,
                          "Burn-in steps (default 10*n*n)");
  cmd_moments->add_option("--seed", mom_seed, "RNG seed")
      ->capture_default_str();

  // The global options may also be given after a subcommand name.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_enum)) {
      auto states = level_states(enum_n);
      if (format == "csv") {
        for (const auto& la : states) out << csv_field(la.to_string()) << '\n';
      } else {
        Json arr = Json::array();
        for (const auto& la : states) {
          Json row = Json::array();
          for (std::size_t i = 0; i < la.length(); ++i)
            row.push_back(la.part(i));
          arr.push_back(row);
        }
        out << arr.dump() << '\n';
      }
      return 0;
    }

    if (app.got_subcommand(cmd_measure)) {
      MeasureOnLevel m = plancherel
                             ? plancherel_measure(measure_n)
                             : measure_on_level(measure_n,
                                                Alpha::parse(measure_alpha));
      if (format == "csv") {
        out << "partition,probability\n";
        for (std::size_t i = 0; i < m.support.size(); ++i)
          out << csv_field(m.support[i].to_string()) << ','
              << rat_to_string(m.weights[i]) << '\n';
      } else {
        Json obj = Json::object();
        for (std::size_t i = 0; i < m.support.size(); ++i)
          obj[m.support[i].to_string()] = rat_to_string(m.weights[i]);
        out << obj.dump() << '\n';
      }
      return 0;
    }

    if (app.got_subcommand(cmd_matrix)) {
      TransitionMatrix tm =
          transition_matrix(matrix_n, Alpha::parse(matrix_alpha), threads);
      const std::size_t N = tm.order.size();
      if (format == "csv") {
        for (std::size_t i = 0; i < N; ++i) {
          for (std::size_t j = 0; j < N; ++j)
            out << (j ? "," : "") << rat_to_string(tm.T(i, j));
          out << '\n';
        }
      } else {
        Json j;
        j["n"] = tm.n;
        j["alpha"] = Alpha::parse(matrix_alpha).to_string();
        Json order = Json::array();
        for (const auto& la : tm.order) order.push_back(la.to_string());
        j["order"] = order;
        Json rows = Json::array();
        for (std::size_t i = 0; i < N; ++i) {
          Json row = Json::array();
          for (std::size_t jj = 0; jj < N; ++jj)
            row.push_back(rat_to_string(tm.T(i, jj)));
          rows.push_back(row);
        }
        j["rows"] = rows;
        out << j.dump() << '\n';
      }
      return 0;
    }

    if (app.got_subcommand(cmd_spectrum)) {
      SpectrumResult sr = spectrum(spectrum_n, Alpha::parse(spectrum_alpha));
      if (format == "csv") {
        out << "eigenvalue,multiplicity\n";
        for (std::size_t i = 0; i < sr.values.size(); ++i)
          out << rat_to_string(sr.values[i]) << ',' << sr.multiplicities[i]
              << '\n';
      } else {
        Json j;
        Json vals = Json::array();
        for (const auto& v : sr.values) vals.push_back(rat_to_string(v));
        j["eigenvalues"] = vals;
        j["multiplicities"] = sr.multiplicities;
        j["char_poly_checked"] = sr.char_poly_checked;
        j["char_poly_match"] = sr.char_poly_match;
        j["numeric"] = sr.numeric;
        j["max_numeric_error"] = sr.max_numeric_error;
        out << j.dump() << '\n';
      }
      return 0;
    }

    if (app.got_subcommand(cmd_verify)) {
      const Alpha alpha = Alpha::parse(verify_alpha);
      Report rep;
      if (suite == "coherence") {
        rep = coherence_suite(max_weight, alpha);
      } else if (suite == "kerov") {
        rep = kerov_suite(max_weight);
      } else if (suite == "ivanov") {
        rep = ivanov_suite(max_weight);
      } else if (suite == "thm27") {
        rep = qstar_transition_suite(std::min<std::int64_t>(max_weight, 5),
                                     max_weight, require_finite(alpha, suite));
      } else if (suite == "thm42") {
        rep = gbasis_suite(require_finite(alpha, suite),
                           std::min<std::int64_t>(max_weight, 5));
      } else if (suite == "thm51") {
        rep = compensation_suite(require_finite(alpha, suite), max_weight);
      } else if (suite == "prop68") {
        rep = limit_generator_suite(require_finite(alpha, suite),
                                    std::min<std::int64_t>(max_weight, 6),
                                    max_weight);
      } else if (suite == "sl2") {
        rep = sl2_suite(require_finite(alpha, suite), max_weight);
      } else {  // spectrum
        rep = spectrum_suite(max_weight, alpha);
      }
      emit_report(rep, format, out);
      return rep.pass ? 0 : 1;
    }

    if (app.got_subcommand(cmd_simulate)) {
      const Alpha alpha = Alpha::parse(sim_alpha);
      StrictPartition start;
      if (!sim_start.empty()) {
        start = parse_partition(sim_start);
      } else {
        CounterRng rng(sim_seed, ~std::uint64_t{0});
        start = sample_start(sim_n, alpha, rng);
      }
      Trajectory tr = updown::run(sim_n, alpha, sim_steps, sim_seed, start);
      int K = sim_moments;
      if (format == "csv" && K <= 0) K = 1;
      if (format == "csv") {
        out << "step,scaled_time";
        for (int k = 1; k <= K; ++k) out << ",q" << 2 * k;
        out << '\n';
        const double n2 = static_cast<double>(sim_n) *
                          static_cast<double>(sim_n);
        for (std::size_t i = 0; i < tr.states.size(); ++i) {
          out << i << ',' << (static_cast<double>(i) / n2);
          for (const auto& q : moments(embed(tr.states[i], sim_n), K))
            out << ',' << q.get_d();
          out << '\n';
        }
      } else {
        for (std::size_t i = 0; i < tr.states.size(); ++i) {
          Json j;
          j["step"] = i;
          j["state"] = tr.states[i].to_string();
          if (K > 0) {
            Json qs = Json::array();
            for (const auto& q : moments(embed(tr.states[i], sim_n), K))
              qs.push_back(q.get_d());
            j["moments"] = qs;
          }
          out << j.dump() << '\n';
        }
      }
      return 0;
    }

    if (app.got_subcommand(cmd_moments)) {
      const Rat alpha = require_finite(Alpha::parse(mom_alpha), "moments");
      if (mom_exact) {
        GammaPoly f = SparsePoly::generator(VarKind::OddP, mom_k);
        Rat value = exact_moment(mom_n, alpha, f) /
                    rat_pow(Rat(mom_n), static_cast<unsigned long>(2 * mom_k + 1));
        if (format == "csv") {
          out << "n,alpha,k,exact,value\n"
              << mom_n << ',' << csv_field(rat_to_string(alpha)) << ','
              << mom_k << ',' << csv_field(rat_to_string(value)) << ','
              << value.get_d() << '\n';
        } else {
          Json j;
          j["n"] = mom_n;
          j["alpha"] = rat_to_string(alpha);
          j["k"] = mom_k;
          j["exact"] = rat_to_string(value);
          j["value"] = value.get_d();
          out << j.dump() << '\n';
        }
        return 0;
      }
      std::int64_t burn = mom_burn >= 0 ? mom_burn : 10 * mom_n * mom_n;
      McEstimate est =
          stationary_moment_mc(mom_n, alpha, mom_k, mom_steps, burn, mom_seed);
      if (format == "csv") {
        out << "mean,stderr,n,alpha,steps\n"
            << est.mean << ',' << est.std_err << ',' << est.n << ','
            << csv_field(est.alpha) << ',' << est.steps << '\n';
      } else {
        Json j;
        j["mean"] = est.mean;
        j["stderr"] = est.std_err;
        j["n"] = est.n;
        j["alpha"] = est.alpha;
        j["steps"] = est.steps;
        j["burn_in"] = est.burn_in;
        j["seed"] = est.seed;
        j["k"] = mom_k;
        out << j.dump() << '\n';
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace updown
