#include "cpair/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cpair/instance.hpp"
#include "cpair/solver.hpp"
#include "cpair/text.hpp"

namespace cpair {

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

BenchRecord run_trial(const BenchConfig& config, std::size_t gamma_count, std::size_t trial) {
  const RandomSource stream = RandomSource(config.seed).split(gamma_count).split(trial);
  const Instance inst = gen_instance(config.d, config.n, gamma_count, config.model, stream.seed());
  const SolverParams params =
      choose_params(config.d, inst.lambda(), inst.gamma(), config.settings);

  BenchRecord rec;
  rec.d = config.d;
  rec.n = config.n;
  rec.gamma_count = gamma_count;
  rec.strategy = params.strategy.label();
  rec.depth = params.depth;
  rec.branching = params.branching;
  rec.trial = trial;
  rec.seed = stream.seed();

  RandomSource rng = stream.split(1);
  const SolveReport report = solve(inst, params, rng);
  rec.solver_ns = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(report.wall_time.count()));
  rec.found = report.planted_found.value_or(!report.matches.empty());
  rec.pairs = report.matches.size();

  if (config.run_naive) {
    const auto start = std::chrono::steady_clock::now();
    [[maybe_unused]] const auto baseline = naive_search(inst, gamma_count);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    rec.naive_ns = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(
               std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count()));
  }
  return rec;
}

}  // namespace

std::string emit_csv(const std::vector<BenchRecord>& records) {
  if (records.empty()) throw std::invalid_argument("no records to emit");
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.d << ',' << r.n << ',' << r.gamma_count << ',' << r.strategy << ',' << r.depth << ','
        << r.branching << ',' << r.trial << ',' << r.seed << ',' << r.solver_ns << ','
        << r.naive_ns << ',' << (r.found ? 1 : 0) << ',' << r.pairs << '\n';
  }
  return out.str();
}

std::vector<BenchRecord> parse_csv(std::string_view csv) {
  std::vector<BenchRecord> out;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!csv.empty()) {
    const auto nl = csv.find('\n');
    std::string_view line = csv.substr(0, nl);
    csv = nl == std::string_view::npos ? std::string_view{} : csv.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kCsvHeader) throw std::invalid_argument("line 1: unexpected CSV header");
      header_seen = true;
      continue;
    }
    const auto f = split_commas(line);
    auto bad = [&](const char* what) {
      return std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
    };
    if (f.size() != 12) throw bad("expected 12 fields");
    auto num = [&](std::size_t index) {
      const auto v = text::parse_u64(f[index]);
      if (!v) throw bad("non-numeric field");
      return *v;
    };
    BenchRecord r;
    r.d = num(0);
    r.n = num(1);
    r.gamma_count = num(2);
    r.strategy = std::string(f[3]);
    r.depth = num(4);
    r.branching = num(5);
    r.trial = num(6);
    r.seed = num(7);
    r.solver_ns = num(8);
    r.naive_ns = num(9);
    const auto found = num(10);
    if (found > 1) throw bad("found must be 0 or 1");
    r.found = found == 1;
    r.pairs = num(11);
    out.push_back(std::move(r));
  }
  if (!header_seen) throw std::invalid_argument("missing CSV header");
  return out;
}

std::vector<std::size_t> gamma_sweep(std::size_t d, double from, double to, double step) {
  if (!(step > 0.0) || !(from >= 0.0) || !(to >= from) || !(to <= 0.5)) {
    throw std::invalid_argument("gamma sweep needs 0 <= from <= to <= 1/2 and step > 0");
  }
  std::vector<std::size_t> out;
  const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
  for (std::size_t t = 0; t < count; ++t) {
    const double gamma = from + static_cast<double>(t) * step;
    out.push_back(static_cast<std::size_t>(std::llround(gamma * static_cast<double>(d))));
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> default_gamma_sweep(std::size_t d) {
  return gamma_sweep(d, 0.0, 0.5, 0.5 / 15.0);
}

std::size_t bench_threads() {
  if (const char* env = std::getenv("CP_THREADS")) {
    if (const auto v = text::parse_u64(env); v && *v > 0) return static_cast<std::size_t>(*v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (config.gamma_counts.empty()) throw std::invalid_argument("empty gamma sweep");
  std::vector<std::size_t> gammas = config.gamma_counts;
  std::sort(gammas.begin(), gammas.end());
  gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());

  const std::size_t total = gammas.size() * config.trials;
  std::vector<BenchRecord> records(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t task = next++; task < total; task = next++) {
      try {
        records[task] = run_trial(config, gammas[task / config.trials], task % config.trials);
      } catch (...) {
        errors[task] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min(total, config.threads == 0 ? bench_threads() : config.threads);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records) {
  std::map<std::size_t, std::vector<const BenchRecord*>> groups;
  for (const auto& r : records) groups[r.gamma_count].push_back(&r);
  std::vector<BenchSummary> out;
  for (const auto& [gamma, group] : groups) {
    std::vector<double> solver;
    std::vector<double> naive;
    std::size_t found = 0;
    for (const auto* r : group) {
      solver.push_back(static_cast<double>(r->solver_ns));
      naive.push_back(static_cast<double>(r->naive_ns));
      found += r->found ? 1 : 0;
    }
    const auto mean = [](const std::vector<double>& v) {
      return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    };
    BenchSummary s;
    s.gamma_count = gamma;
    s.trials = group.size();
    s.median_solver_ns = median(solver);
    s.mean_solver_ns = mean(solver);
    s.median_naive_ns = median(naive);
    s.mean_naive_ns = mean(naive);
    s.found_rate = static_cast<double>(found) / static_cast<double>(group.size());
    out.push_back(s);
  }
  return out;
}

}  // namespace cpair
