#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpair/bench.hpp"
#include "cpair/exponents.hpp"
#include "cpair/instance.hpp"
#include "cpair/probability.hpp"
#include "cpair/solver.hpp"
#include "cpair/text.hpp"
#include "cpair/tuning.hpp"

namespace cpair {

namespace {

struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Optional solver knobs shared by `solve` and `bench`.
struct TuningFlags {
  std::size_t depth = 1;
  std::uint64_t branching = 1;
  std::size_t perms = 4;
  double delta = 0.5;
  std::string strategy = "exact";
  std::size_t threshold = 32;
  bool tune = false;
  CLI::Option* depth_opt = nullptr;
  CLI::Option* branching_opt = nullptr;
  CLI::Option* perms_opt = nullptr;
  CLI::Option* delta_opt = nullptr;
  CLI::Option* threshold_opt = nullptr;

  void attach(CLI::App& app) {
    depth_opt = app.add_option("--depth", depth, "tree depth r")->check(CLI::PositiveNumber);
    branching_opt =
        app.add_option("--branching", branching, "buckets drawn per node")->check(CLI::PositiveNumber);
    perms_opt = app.add_option("--perms", perms, "permutation rounds")->check(CLI::PositiveNumber);
    delta_opt = app.add_option("--delta", delta, "bucket weight fraction")->check(CLI::Range(0.0, 0.5));
    app.add_option("--strategy", strategy, "exact, dev:<eps> or atmost");
    threshold_opt = app.add_option("--threshold", threshold, "naive-search list size floor");
    app.add_flag("--tune", tune, "pick depth and delta by the finite-d cost model");
  }

  [[nodiscard]] PracticalSettings settings() const {
    PracticalSettings s;
    s.strategy = Strategy::parse(strategy);
    s.tune = tune;
    if (*depth_opt) s.depth = depth;
    if (*branching_opt) s.branching = branching;
    if (*perms_opt) s.permutations = perms;
    if (*delta_opt) s.delta = delta;
    if (*threshold_opt) s.naive_threshold = threshold;
    return s;
  }
};

void print_matches(std::ostream& out, const std::vector<MatchPair>& matches) {
  for (const auto& m : matches) out << m.i << ' ' << m.j << ' ' << m.dist << '\n';
}

const char* planted_status(const Instance& inst, const std::vector<MatchPair>& matches) {
  if (!inst.planted) return "none";
  for (const auto& m : matches) {
    if (m.i == inst.planted->i && m.j == inst.planted->j) return "found";
  }
  return "missed";
}

int run_verify(std::size_t kmax, std::ostream& out, std::ostream& err) {
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  for (std::size_t k = 2; k <= kmax; ++k) {
    const double kd = static_cast<double>(k);
    for (std::size_t g = 0; g <= k; g += 2) {
      for (std::size_t m = 0; m <= k; ++m) {
        ++cases;
        const auto oracle = analysis::enumerate_pq_oracle(k, g, m);
        const auto count_p = analysis::bucket_count_p(k, m);
        const auto count_q = analysis::pair_survival_count_q(k, g, m);
        const double log_p = analysis::bucket_prob_p(k, static_cast<double>(m) / kd).log2();
        const auto log_q =
            analysis::pair_survival_prob_q(k, static_cast<double>(g) / kd, static_cast<double>(m) / kd);
        const auto from_log = [kd](double lp) {
          return static_cast<std::uint64_t>(std::llround(std::exp2(lp + kd)));
        };
        const bool ok = count_p == oracle.count_p && count_q == oracle.count_q &&
                        from_log(log_p) == oracle.count_p &&
                        (log_q.is_impossible() ? oracle.count_q == 0
                                               : from_log(log_q.log2()) == oracle.count_q);
        if (!ok) {
          ++mismatches;
          err << "mismatch k=" << k << " gamma=" << g << " delta=" << m << ": oracle ("
              << oracle.count_p << ", " << oracle.count_q << ") closed form (" << count_p << ", "
              << count_q << ")\n";
        }
      }
    }
  }
  out << "verified " << cases << " cases for k in [2, " << kmax << "], " << mismatches
      << " mismatches\n";
  if (mismatches != 0) throw VerifyFailure("closed forms disagree with enumeration");
  return 0;
}

void print_exponent(std::ostream& out, const DistributionModel& model, double lambda, double gamma) {
  const auto result = model.kind == DistributionModel::Kind::Uniform
                          ? analysis::theta_uniform(lambda, gamma)
                          : analysis::theta_distribution(lambda, gamma, model);
  out.precision(12);
  out << "model=" << model.label() << '\n'
      << "theta=" << result.theta << '\n'
      << "delta=" << result.delta << '\n'
      << "regime=" << analysis::regime_name(result.regime) << '\n'
      << "delta_star=" << result.delta_star << '\n'
      << "gamma_star=" << result.gamma_star << '\n'
      << "lower_bound=" << analysis::lower_bound_exponent(lambda, gamma) << '\n'
      << "expected_pairs=" << analysis::expected_pairs_exponent(lambda, gamma) << '\n';
  if (result.approximate) out << "approximate=1\n";
}

void print_sweep(std::ostream& out, const DistributionModel& model, double lambda,
                 std::size_t points) {
  const bool uniform = model.kind == DistributionModel::Kind::Uniform;
  const analysis::DistributionExponents exponents(model);
  out.precision(12);
  out << "model,lambda,gamma,theta,theta_over_lambda,delta,regime,lower_bound,expected_pairs,"
         "approximate\n";
  for (std::size_t t = 0; t < points; ++t) {
    const double gamma =
        points == 1 ? 0.0 : 0.5 * static_cast<double>(t) / static_cast<double>(points - 1);
    const auto r = uniform ? analysis::theta_uniform(lambda, gamma) : exponents.theta(lambda, gamma);
    out << model.label() << ',' << lambda << ',' << gamma << ',' << r.theta << ','
        << (lambda > 0.0 ? r.theta / lambda : 0.0) << ',' << r.delta << ','
        << analysis::regime_name(r.regime) << ',' << analysis::lower_bound_exponent(lambda, gamma)
        << ',' << analysis::expected_pairs_exponent(lambda, gamma) << ','
        << (r.approximate ? 1 : 0) << '\n';
  }
}

std::vector<std::size_t> parse_sweep(const std::string& spec, std::size_t d) {
  if (spec.empty()) return default_gamma_sweep(d);
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string piece;
  while (std::getline(ss, piece, ':')) {
    const auto v = text::parse_double(piece);
    if (!v) throw std::invalid_argument("gamma sweep must be a:b:step");
    parts.push_back(*v);
  }
  if (parts.size() != 3) throw std::invalid_argument("gamma sweep must be a:b:step");
  return gamma_sweep(d, parts[0], parts[1], parts[2]);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamming closest-pair toolkit", "cpair"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a planted instance");
  std::size_t gen_d = 0, gen_n = 0, gen_gamma = 0;
  std::string gen_model = "uniform", gen_out;
  std::uint64_t gen_seed = 1;
  gen->add_option("--d", gen_d, "dimension")->required();
  gen->add_option("--n", gen_n, "list length")->required();
  gen->add_option("--gamma", gen_gamma, "planted distance in coordinates")->required();
  gen->add_option("--model", gen_model, "uniform, fixed:<eta>, bernoulli:<mu>, poisson:<f>");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output file")->required();

  auto* solve_cmd = app.add_subcommand("solve", "run the bucketing search");
  std::string solve_in;
  std::uint64_t solve_seed = 1;
  bool solve_all = false;
  TuningFlags solve_flags;
  solve_cmd->add_option("--in", solve_in, "instance file")->required();
  solve_cmd->add_option("--seed", solve_seed, "solver seed");
  solve_cmd->add_flag("--all", solve_all, "collect every pair instead of stopping at the first");
  solve_flags.attach(*solve_cmd);

  auto* naive = app.add_subcommand("naive", "quadratic baseline search");
  std::string naive_in;
  naive->add_option("--in", naive_in, "instance file")->required();

  auto* bench = app.add_subcommand("bench", "time the search against the baseline");
  BenchConfig config;
  std::string bench_model = "uniform", bench_sweep, bench_csv;
  TuningFlags bench_flags;
  bench->add_option("--d", config.d, "dimension")->required();
  bench->add_option("--n", config.n, "list length")->required();
  bench->add_option("--gamma-sweep", bench_sweep, "gamma fractions a:b:step (default 16 points on [0, 1/2])");
  bench->add_option("--model", bench_model, "input distribution");
  bench->add_option("--trials", config.trials, "trials per gamma")->check(CLI::PositiveNumber);
  bench->add_option("--seed", config.seed, "base seed");
  bench->add_option("--threads", config.threads, "worker threads (default CP_THREADS or all cores)");
  bench->add_option("--csv", bench_csv, "CSV output file (default standard output)");
  bench_flags.attach(*bench);

  auto* exponent = app.add_subcommand("exponent", "asymptotic runtime exponents");
  double exp_lambda = 0.0, exp_gamma = 0.0;
  std::string exp_model = "uniform";
  bool exp_sweep = false;
  std::size_t exp_points = 101;
  exponent->add_option("--lambda", exp_lambda, "list size exponent")->required()->check(CLI::Range(0.0, 1.0));
  auto* gamma_opt = exponent->add_option("--gamma", exp_gamma, "relative distance")->check(CLI::Range(0.0, 0.5));
  exponent->add_option("--model", exp_model, "input distribution");
  exponent->add_flag("--sweep", exp_sweep, "CSV over gamma in [0, 1/2]");
  exponent->add_option("--points", exp_points, "sweep points")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check closed forms against enumeration");
  std::size_t kmax = 14;
  verify->add_option("--kmax", kmax, "largest block width")->check(CLI::Range(2, 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      const Instance inst = gen_instance(gen_d, gen_n, gen_gamma, DistributionModel::parse(gen_model), gen_seed);
      save_instance(inst, gen_out);
      return 0;
    }
    if (*solve_cmd) {
      const Instance inst = load_instance(solve_in);
      PracticalSettings settings = solve_flags.settings();
      settings.stop_on_first = !solve_all;
      const SolverParams params = choose_params(inst.d, inst.lambda(), inst.gamma(), settings);
      RandomSource rng(solve_seed);
      const SolveReport report = solve(inst, params, rng);
      print_matches(out, report.matches);
      out << "# matches=" << report.matches.size() << " nodes=" << report.nodes_visited
          << " comparisons=" << report.naive_comparisons << " time_ns=" << report.wall_time.count()
          << " planted=" << planted_status(inst, report.matches) << " depth=" << params.depth
          << " branching=" << params.branching << " perms=" << params.permutations
          << " delta=" << text::format_double(params.delta) << " strategy=" << params.strategy.label()
          << '\n';
      return 0;
    }
    if (*naive) {
      const Instance inst = load_instance(naive_in);
      const auto start = std::chrono::steady_clock::now();
      const auto matches = naive_search(inst, inst.gamma_count);
      const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now() - start);
      print_matches(out, matches);
      out << "# matches=" << matches.size() << " comparisons=" << inst.n * inst.n
          << " time_ns=" << elapsed.count() << " planted=" << planted_status(inst, matches) << '\n';
      return 0;
    }
    if (*bench) {
      config.model = DistributionModel::parse(bench_model);
      config.gamma_counts = parse_sweep(bench_sweep, config.d);
      config.settings = bench_flags.settings();
      const auto records = run_bench(config);
      const std::string csv = emit_csv(records);
      std::ostream* summary = &out;
      if (bench_csv.empty()) {
        out << csv;
        summary = &err;
      } else {
        std::ofstream file(bench_csv);
        if (!(file << csv)) throw std::runtime_error("cannot write " + bench_csv);
      }
      for (const auto& s : summarize(records)) {
        *summary << "# gamma=" << s.gamma_count << " trials=" << s.trials
                 << " median_solver_ns=" << s.median_solver_ns << " mean_solver_ns=" << s.mean_solver_ns
                 << " median_naive_ns=" << s.median_naive_ns << " mean_naive_ns=" << s.mean_naive_ns
                 << " found_rate=" << s.found_rate << '\n';
      }
      return 0;
    }
    if (*exponent) {
      const DistributionModel model = DistributionModel::parse(exp_model);
      if (exp_sweep) {
        print_sweep(out, model, exp_lambda, exp_points);
      } else {
        if (!*gamma_opt) throw std::invalid_argument("--gamma is required without --sweep");
        print_exponent(out, model, exp_lambda, exp_gamma);
      }
      return 0;
    }
    if (*verify) return run_verify(kmax, out, err);
  } catch (const VerifyFailure& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace cpair
