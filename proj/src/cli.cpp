#include "causal_lab/cli.hpp"

#include "causal_lab/certificates.hpp"
#include "causal_lab/combinatorics.hpp"
#include "causal_lab/discrimination.hpp"
#include "causal_lab/rates.hpp"
#include "causal_lab/states_channels.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <type_traits>

namespace causal_lab::cli {

namespace {

struct Check {
  OutputRecord record;
  bool pass = true;
};

using CheckTask = std::function<Check()>;

OutputRecord rec(std::string scenario, std::optional<int> d, std::optional<int> N, std::optional<std::int64_t> k,
                 std::optional<double> p, double value, std::string provenance) {
  return OutputRecord{std::move(scenario), d, N, k, p, value, std::move(provenance)};
}

Check check(std::string name, std::optional<int> d, std::optional<int> N, double value, bool pass,
            std::string provenance = "brute-force") {
  return Check{rec(std::move(name), d, N, std::nullopt, std::nullopt, value, std::move(provenance)), pass};
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

double pow_d(int d, int n) { return std::pow(double(d), n); }

std::vector<double> p_grid(const RunConfig& c) {
  require(c.grid >= 2, "--grid must be at least 2");
  require(c.pMin >= 0.0 && c.pMax <= 1.0 && c.pMin <= c.pMax, "p range must satisfy 0 <= p-min <= p-max <= 1");
  std::vector<double> ps;
  for (int i = 0; i < c.grid; ++i) ps.push_back(c.pMin + (c.pMax - c.pMin) * i / (c.grid - 1));
  return ps;
}

// ---- verification suites ----

std::vector<CheckTask> helstrom_suite(int d, int n) {
  std::vector<CheckTask> tasks;
  const double expected = 1.0 / (2.0 * pow_d(d, n));
  if (n % d == 0 && d >= 2 && d <= 6 && pow_d(d, 2 * n) <= 4096) {
    tasks.push_back([=] {
      const ProbeState probe = singlet_product_probe(d, n);
      const auto I = UnitaryMatrix::identity(d);
      const auto r = helstrom(apply_intermediary_channel(CausalChannel(d, 0, I), probe, 2),
                              apply_intermediary_channel(CausalChannel(d, 1, I), probe, 2));
      return check("helstrom:singlet", d, n, r.pErr, std::abs(r.pErr - expected) <= 1e-9);
    });
  }
  if (pow_d(d, 2 * n) <= 4096) {
    tasks.push_back([=] {
      std::vector<int> cycle(d);
      for (int i = 0; i < d; ++i) cycle[i] = (i + 1) % d;
      const ProbeState probe = uniform_probe(d, n);
      const auto P = UnitaryMatrix::permutation(cycle);
      const auto r = helstrom(apply_intermediary_channel(CausalChannel(d, 0, P), probe, 2),
                              apply_intermediary_channel(CausalChannel(d, 1, P), probe, 2));
      return check("helstrom:uniform-permutation", d, n, r.pErr, std::abs(r.pErr - expected) <= 1e-10);
    });
  }
  require(!tasks.empty(), "helstrom suite needs d^(2n) <= 4096");
  return tasks;
}

std::vector<CheckTask> rank_suite(int d, int n) {
  require(d >= 2 && n >= d && n % d == 0, "rank suite needs d >= 2 dividing n");
  return {[=] {
    const int r = rank_of_configurations(n, d);
    const BigInt m = schur_weyl_record(balanced_diagram(n, d), d).multiplicity;
    return check("rank:configurations", d, n, r, BigInt(r) == m);
  }};
}

std::vector<CheckTask> ykl_suite(int d, int n) {
  require(d >= 2 && n >= 1 && pow_d(d, 3 * n) <= 4096, "ykl suite needs d >= 2, n >= 1 and d^(3n) <= 4096");
  std::vector<CheckTask> tasks;
  for (int x = 0; x < 2; ++x) {
    tasks.push_back([=] {
      const auto cert = dual_certificate(d, n);
      const auto rep = ykl_check(cert.lambda, certificate_choi(cert), {{intermediary_choi(d, n, x), 0.5}});
      return check("ykl:min-eig:x" + std::to_string(x + 1), d, n, rep.perHypothesisMinEig[0], rep.feasible);
    });
  }
  tasks.push_back([=] {
    const auto cert = dual_certificate(d, n);
    const double diff = std::abs(cert.lambda - certificate_lambda(d, n));
    return check("ykl:lambda", d, n, cert.lambda, diff <= 1e-12, "formula");
  });
  tasks.push_back([=] {
    const auto cert = dual_certificate(d, n);
    const double f = std::pow(double(d), -2.0 * n);
    const double bound = 0.5 * f / (1.0 + std::sqrt(1.0 - f));
    return check("ykl:implied-bound", d, n, 1.0 - cert.lambda, std::abs((1.0 - cert.lambda) - bound) <= 1e-12,
                 "formula");
  });
  tasks.push_back([=] {
    const auto cert = dual_certificate(d, n);
    const auto C = certificate_choi(cert);
    const auto rep = ykl_check(cert.lambda / 2.0, C, {{intermediary_choi(d, n, 0), 0.5}, {intermediary_choi(d, n, 1), 0.5}});
    const double worst = *std::min_element(rep.perHypothesisMinEig.begin(), rep.perHypothesisMinEig.end());
    return check("ykl:halved-infeasible", d, n, worst, !rep.feasible && worst < -1e-6);
  });
  return tasks;
}

std::vector<CheckTask> divergence_suite(int d, std::int64_t samples, std::uint64_t seed) {
  require(d >= 2 && d * d <= 64, "divergence suite needs 2 <= d <= 8");
  require(samples >= 1, "--trials must be positive");
  const double target = 1.0 / (double(d) * d);
  return {[=] {
            const auto est = fidelity_divergence_sample(d, d, static_cast<int>(samples), seed);
            return check("divergence:sampled-min", d, 1, est.minRatio, est.minRatio >= target - 1e-9, "monte-carlo");
          },
          [=] {
            const double r = identical_input_ratio(d, d, seed);
            return check("divergence:identical-input", d, 1, r, std::abs(r - target) <= 1e-12);
          }};
}

std::vector<CheckTask> nosignal_suite(int d, int n, std::int64_t trials, std::uint64_t seed) {
  require(d >= 2 && n >= 1 && pow_d(d, 3 * n) <= 4096, "nosignal suite needs d^(3n) <= 4096");
  require(trials >= 1, "--trials must be positive");
  std::vector<CheckTask> tasks;
  for (auto sign : {Symmetry::Plus, Symmetry::Minus})
    for (int i = 0; i < n; ++i)
      tasks.push_back([=] {
        const bool ok = nosignalling_check(symmetric_choi(sign, d, n), paired_outputs(n), {i},
                                           static_cast<int>(trials), seed, 1e-10);
        const std::string name = std::string("nosignal:") + (sign == Symmetry::Plus ? "plus" : "minus") +
                                 ":input" + std::to_string(i + 1);
        return check(name, d, n, ok ? 1.0 : 0.0, ok);
      });
  tasks.push_back([=] {
    std::vector<int> perm(d * d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) perm[a * d + b] = b * d + a;
    const auto swap = choi_of_unitary(UnitaryMatrix::permutation(perm), Dims{d, d}, Dims{d, d});
    const bool ok = nosignalling_check(swap, {{0}, {1}}, {0}, static_cast<int>(trials), seed, 1e-10);
    return check("nosignal:swap-counterexample", d, 1, ok ? 1.0 : 0.0, !ok);
  });
  return tasks;
}

std::vector<CheckTask> chernoff_suite(int d, double p) {
  require(d >= 2 && d <= 8, "chernoff suite needs 2 <= d <= 8");
  require(p >= 0.0 && p <= 1.0, "--p must lie in [0,1]");
  return {[=] {
    const auto [s1, s2] = noisy_intermediary_states(d, p);
    const double numeric = chernoff_numeric(s1, s2, 101);
    const double closed = noisy_chernoff_rate(d, p);
    Check c = check("chernoff:numeric-vs-bracket", d, 1, numeric, std::abs(numeric - closed) <= 1e-9);
    c.record.p = p;
    return c;
  }};
}

std::vector<CheckTask> classical_oracle_suite(int d, int n, std::int64_t k, std::int64_t trials, std::uint64_t seed) {
  require(d >= 2 && n >= 1 && pow_d(d, n) <= 4096, "classical-oracle suite needs d^n <= 4096");
  require(k >= 2 && k <= 64, "classical-oracle suite needs 2 <= k <= 64");
  require(trials >= 1, "--trials must be positive");
  return {[=] {
            // every assignment: oracle agrees with the closed form and v = 1 is optimal
            const int total = static_cast<int>(pow_d(d, n));
            bool ok = true;
            Rational best = 1;
            int bestV = 0;
            std::vector<int> a(n, 0);
            for (int idx = 0; idx < total; ++idx) {
              int rem = idx;
              for (int i = n - 1; i >= 0; --i) {
                a[i] = rem % d;
                rem /= d;
              }
              const ClassicalAssignment asg(a, d);
              const Rational e = classical_consistency_oracle(d, n, asg);
              const Rational closed(injective_count(d, asg.v), 2 * boost::multiprecision::pow(BigInt(d), n));
              ok = ok && e == closed;
              if (e < best || (e == best && asg.v < bestV)) {
                best = e;
                bestV = asg.v;
              }
            }
            return check("classical-oracle:exhaustive", d, n, to_double(best), ok && bestV == 1);
          },
          [=] {
            const double exact = to_double(classical_error_exact(d, n, static_cast<int>(k), 1));
            const double mc = classical_monte_carlo(d, n, static_cast<int>(k), trials, seed);
            const double sigma = std::sqrt(exact * (1.0 - exact) / double(trials));
            Check c = check("classical-oracle:monte-carlo", d, n, mc, std::abs(mc - exact) <= 4.0 * sigma, "monte-carlo");
            c.record.k = k;
            return c;
          }};
}

std::vector<CheckTask> combinatorics_suite(int d, int n) {
  require(d >= 1 && d <= 8 && n >= 0 && n <= 16, "combinatorics suite needs 1 <= d <= 8 and 0 <= n <= 16");
  std::vector<CheckTask> tasks;
  for (int N = 0; N <= n; ++N) {
    tasks.push_back([=] {
      BigInt total = 0;
      for (const auto& l : enumerate_diagrams(N, d)) {
        const auto r = schur_weyl_record(l, d);
        total += r.repDim * r.multiplicity;
      }
      const BigInt want = boost::multiprecision::pow(BigInt(d), N);
      return check("combinatorics:dimension-sum", d, N, total.convert_to<double>(), total == want, "formula");
    });
    tasks.push_back([=] {
      const auto all = enumerate_diagrams(N, d);
      int violations = 0;
      for (const auto& a : all)
        for (const auto& b : all)
          if (majorizes(a, b) && dimension_ratio(a, d) < dimension_ratio(b, d)) ++violations;
      return check("combinatorics:majorization", d, N, violations, violations == 0, "formula");
    });
    if (N % d == 0 && N > 0 && grouping_count(N, d) <= 100000) {
      tasks.push_back([=] {
        const auto cat = groupings(N, d);
        const bool ok = BigInt(cat.configurations.size()) == cat.count;
        return check("combinatorics:groupings", d, N, double(cat.configurations.size()), ok, "formula");
      });
    }
  }
  return tasks;
}

std::vector<CheckTask> suite_tasks(const RunConfig& c) {
  const int d = c.d;
  const int n = c.n;
  if (c.suite == "helstrom") return helstrom_suite(d, n);
  if (c.suite == "rank") return rank_suite(d, n);
  if (c.suite == "ykl") return ykl_suite(d, n);
  if (c.suite == "divergence") return divergence_suite(d, c.trials, c.seed);
  if (c.suite == "nosignal") return nosignal_suite(d, n, c.trials, c.seed);
  if (c.suite == "chernoff") return chernoff_suite(d, c.p);
  if (c.suite == "classical-oracle") return classical_oracle_suite(d, n, c.k, c.trials, c.seed);
  if (c.suite == "combinatorics") return combinatorics_suite(d, n);
  throw UsageError("unknown suite '" + c.suite + "'");
}

// ---- subcommands ----

RunResult do_rates(const RunConfig& c) {
  require(c.d >= 2, "--d must be at least 2");
  const auto ps = p_grid(c);
  RunResult out;
  const auto r = rates_summary(c.d);
  out.records.push_back(rec("rate-classical", c.d, std::nullopt, std::nullopt, std::nullopt, r.rClassical, "formula"));
  out.records.push_back(rec("rate-quantum", c.d, std::nullopt, std::nullopt, std::nullopt, r.rQuantum, "formula"));
  std::vector<std::function<std::vector<OutputRecord>()>> tasks;
  for (double p : ps)
    tasks.push_back([d = c.d, p] {
      return std::vector<OutputRecord>{
          rec("noisy-chernoff-rate", d, std::nullopt, std::nullopt, p, noisy_chernoff_rate(d, p), "formula"),
          rec("noisy-heralded-rate", d, std::nullopt, std::nullopt, p, heralded_rate(d, p), "formula")};
    });
  for (auto& rows : parallel_map(tasks)) out.records.insert(out.records.end(), rows.begin(), rows.end());
  out.records.push_back(rec("heralded-threshold", c.d, std::nullopt, std::nullopt, std::nullopt, 1.0 / (c.d + 1.0),
                            "formula"));
  out.records.push_back(rec("advantage-boundary", c.d, std::nullopt, std::nullopt, std::nullopt,
                            advantage_boundary(c.d), "formula"));
  return out;
}

RunResult do_table(const RunConfig& c) {
  require(c.d >= 2, "--d must be at least 2");
  require(c.nMax >= 1 && c.nMax <= 2000, "--n-max must lie in [1, 2000]");
  const std::string& s = c.scenario;
  RunResult out;
  for (int N = 1; N <= c.nMax; ++N) {
    std::optional<double> v;
    std::optional<std::int64_t> k = c.k;
    if (s == "classical") {
      v = to_double(classical_error_exact(c.d, N, 2, 1));
      k = 2;
    } else if (s == "coherent") {
      v = scenario_error(Scenario::Coherent, c.d, N, 2);
      k = 2;
    } else if (s == "superposed") {
      v = scenario_error(Scenario::Superposed, c.d, N, 2);
      k = 2;
    } else if (s == "k-classical") {
      require(c.k >= 2, "--k must be at least 2");
      v = to_double(classical_error_exact(c.d, N, static_cast<int>(c.k), 1));
    } else if (s == "k-quantum") {
      require(c.k >= 1, "--k must be at least 1");
      v = to_double(Rational(1) - quantum_k_no_ref_success(c.d, N, static_cast<int>(c.k), balanced_diagram(N, c.d)));
    } else if (s == "cause-id") {
      require(c.k >= 1, "--k must be at least 1");
      v = cause_id_error(c.k, N, c.d);
    } else {
      throw UsageError("unknown table scenario '" + s + "'");
    }
    if (v) out.records.push_back(rec(s, c.d, N, k, std::nullopt, *v, "formula"));
  }
  return out;
}

RunResult do_plan(const RunConfig& c) {
  require(c.d >= 2, "--d must be at least 2");
  RunResult out;
  const std::string& s = c.scenario;
  if (s == "cause-exact" || s == "cause-approx") {
    require(c.k >= 1, "--k must be at least 1");
    const CausePlan plan = s == "cause-exact" ? cause_exact_plan(c.k, c.d) : cause_approx_plan(c.k, c.d, c.slack);
    out.records.push_back(rec(s, c.d, plan.N, plan.k, std::nullopt, plan.errorBound, "formula"));
    return out;
  }
  require(c.eps > 0.0 && c.eps < 1.0, "--eps must lie in (0,1)");
  const Scenario sc = parse_scenario(s);
  const PlanResult plan = min_queries(sc, c.d, c.eps, sc == Scenario::CauseId ? static_cast<int>(c.k) : 2);
  out.records.push_back(rec(s, c.d, plan.N, plan.k, std::nullopt, plan.achievedErr, "formula"));
  return out;
}

RunResult do_verify(const RunConfig& c) {
  const auto tasks = suite_tasks(c);
  const auto checks = parallel_map(tasks);
  RunResult out;
  bool all = true;
  for (const auto& ch : checks) {
    out.records.push_back(ch.record);
    all = all && ch.pass;
  }
  out.records.push_back(rec("verify:" + c.suite + ":pass", c.d, c.n, std::nullopt, std::nullopt, all ? 1.0 : 0.0,
                            "brute-force"));
  out.exitCode = all ? 0 : 1;
  return out;
}

RunResult do_sweep(const RunConfig& c) {
  require(c.d >= 2 && c.d <= 8, "--d must lie in [2, 8]");
  require(c.n >= 0 && c.n <= 10000, "--n must lie in [0, 10000]");
  const auto ps = p_grid(c);
  std::vector<std::function<std::vector<OutputRecord>()>> tasks;
  for (double p : ps)
    tasks.push_back([d = c.d, n = c.n, p] {
      const auto [s1, s2] = noisy_intermediary_states(d, p);
      return std::vector<OutputRecord>{
          rec("sweep-chernoff-rate", d, std::nullopt, std::nullopt, p, noisy_chernoff_rate(d, p), "formula"),
          rec("sweep-chernoff-rate", d, std::nullopt, std::nullopt, p, chernoff_numeric(s1, s2, 101), "brute-force"),
          rec("sweep-heralded-rate", d, std::nullopt, std::nullopt, p, heralded_rate(d, p), "formula"),
          rec("sweep-heralded-error", d, n, std::nullopt, p, heralded_error(d, p, n), "formula")};
    });
  RunResult out;
  for (auto& rows : parallel_map(tasks)) out.records.insert(out.records.end(), rows.begin(), rows.end());
  return out;
}

template <typename T>
std::string opt_field(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>)
    return format_double(*v);
  else
    return std::to_string(*v);
}

}  // namespace

unsigned worker_count() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CAUSAL_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min<long>(v, hw));
  }
  return hw;
}

std::string tool_version() { return CAUSAL_LAB_VERSION; }

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const std::vector<OutputRecord>& records) {
  std::ostringstream os;
  os << "# causal_lab " << tool_version() << "\n";
  os << "scenario,d,N,k,p,value,provenance\n";
  for (const auto& r : records)
    os << r.scenario << ',' << opt_field(r.d) << ',' << opt_field(r.N) << ',' << opt_field(r.k) << ','
       << opt_field(r.p) << ',' << format_double(r.value) << ',' << r.provenance << '\n';
  return os.str();
}

std::string to_json(const std::vector<OutputRecord>& records) {
  // Built by hand so numbers keep the same 17-digit form as the CSV.
  auto str = [](const std::string& s) { return nlohmann::json(s).dump(); };
  auto num = [](double v) { return std::isfinite(v) ? format_double(v) : "\"" + format_double(v) + "\""; };
  auto opt = [&](const auto& v) -> std::string {
    if (!v) return "null";
    if constexpr (std::is_floating_point_v<std::decay_t<decltype(*v)>>)
      return num(*v);
    else
      return std::to_string(*v);
  };
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    os << (i ? ",\n" : "\n") << "  {\"scenario\": " << str(r.scenario) << ", \"d\": " << opt(r.d)
       << ", \"N\": " << opt(r.N) << ", \"k\": " << opt(r.k) << ", \"p\": " << opt(r.p)
       << ", \"value\": " << num(r.value) << ", \"provenance\": " << str(r.provenance)
       << ", \"tool_version\": " << str(tool_version()) << "}";
  }
  os << (records.empty() ? "]\n" : "\n]\n");
  return os.str();
}

RunResult execute(const RunConfig& config) {
  switch (config.subcommand) {
    case Subcommand::Rates: return do_rates(config);
    case Subcommand::Table: return do_table(config);
    case Subcommand::Plan: return do_plan(config);
    case Subcommand::Verify: return do_verify(config);
    case Subcommand::Sweep: return do_sweep(config);
  }
  throw UsageError("unknown subcommand");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  RunResult result;
  try {
    result = execute(config);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const std::string text = config.format == Format::Json ? to_json(result.records) : to_csv(result.records);
  if (config.outputPath) {
    std::ofstream f(*config.outputPath, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << *config.outputPath << " for writing\n";
      return 2;
    }
    f << text;
  } else {
    out << text;
  }
  return result.exitCode;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Error rates, query plans and brute-force checks for causal structure identification",
               "causal_lab"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  RunConfig c;
  std::string format = "csv";
  std::string outPath;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", outPath, "Write output to this path instead of stdout");
    sub->add_option("--d", c.d, "Local dimension")->check(CLI::PositiveNumber);
  };

  auto* rates = app.add_subcommand("rates", "Noiseless rates and a noisy-rate sweep");
  common(rates);
  rates->add_option("--grid", c.grid, "Number of p grid points");
  rates->add_option("--p-min", c.pMin, "Lowest depolarizing probability");
  rates->add_option("--p-max", c.pMax, "Highest depolarizing probability");

  auto* table = app.add_subcommand("table", "Error probability against the number of queries");
  common(table);
  table
      ->add_option("--scenario", c.scenario, "classical, coherent, superposed, k-classical, k-quantum or cause-id")
      ->required()
      ->check(CLI::IsMember({"classical", "coherent", "superposed", "k-classical", "k-quantum", "cause-id"}));
  table->add_option("--n-max", c.nMax, "Largest number of queries");
  table->add_option("--k", c.k, "Number of hypotheses");

  auto* plan = app.add_subcommand("plan", "Smallest number of queries meeting a target error");
  common(plan);
  plan->add_option("--scenario", c.scenario, "classical, coherent, superposed, cause-id, cause-exact or cause-approx")
      ->required()
      ->check(CLI::IsMember({"classical", "coherent", "superposed", "cause-id", "cause-exact", "cause-approx"}));
  plan->add_option("--eps", c.eps, "Target error probability");
  plan->add_option("--k", c.k, "Number of hypotheses");
  plan->add_option("--slack", c.slack, "Slack for the approximate cause plan");

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  common(verify);
  verify->add_option("--suite", c.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(
          {"helstrom", "rank", "ykl", "divergence", "nosignal", "chernoff", "classical-oracle", "combinatorics"}));
  verify->add_option("--n", c.n, "Number of queries");
  verify->add_option("--k", c.k, "Number of hypotheses");
  verify->add_option("--p", c.p, "Depolarizing probability");
  verify->add_option("--trials", c.trials, "Samples or trials");
  verify->add_option("--seed", c.seed, "Master seed");

  auto* sweep = app.add_subcommand("sweep", "Noise sweep of Chernoff and heralded rates");
  common(sweep);
  sweep->add_option("--grid", c.grid, "Number of p grid points");
  sweep->add_option("--p-min", c.pMin, "Lowest depolarizing probability");
  sweep->add_option("--p-max", c.pMax, "Highest depolarizing probability");
  sweep->add_option("--n", c.n, "Queries for the heralded error column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (*rates) c.subcommand = Subcommand::Rates;
  if (*table) c.subcommand = Subcommand::Table;
  if (*plan) c.subcommand = Subcommand::Plan;
  if (*verify) c.subcommand = Subcommand::Verify;
  if (*sweep) c.subcommand = Subcommand::Sweep;
  c.format = format == "json" ? Format::Json : Format::Csv;
  if (!outPath.empty()) c.outputPath = outPath;
  return run(c, out, err);
}

}  // namespace causal_lab::cli
