// dbn: quadratic function-field L-functions and their de Bruijn-Newman constants.
//
// Exit codes: 0 success, 2 invalid input, 3 numerical failure, 130 interrupted.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <csignal>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dbn/dbn.hpp"
#include "dbn/report.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitInterrupted = 130;

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted = true; }

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InvalidInput("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void csv_preamble(std::ostream& os, const std::string& config, const std::string& columns) {
  os << "# dbn " << dbn::kVersion << '\n';
  os << "# config: " << config << '\n';
  os << columns << '\n';
}

dbn::residue_t checked_prime(std::int64_t q) {
  if (q < 3 || q >= (1LL << 31) || !dbn::is_prime(static_cast<std::uint64_t>(q))) {
    throw InvalidInput("q must be an odd prime");
  }
  return static_cast<dbn::residue_t>(q);
}

dbn::Polynomial good_discriminant(dbn::residue_t q, const std::string& coeffs) {
  dbn::Polynomial d(q, dbn::parse_coefficients(coeffs));
  if (auto check = dbn::good_pair_check(d); !check) throw InvalidInput(check.reason);
  return d;
}

std::string lambda_cell(const dbn::NewmanEstimate& e) {
  if (!e.has_value()) return "none";
  return dbn::format_double(e.value);
}

// ---------------------------------------------------------------------------

struct LfunArgs {
  std::int64_t q = 0;
  std::string d;
  double tol = 1e-9;
  std::string out;
};

int run_lfun(const LfunArgs& a, unsigned workers) {
  const auto q = checked_prime(a.q);
  const auto d = good_discriminant(q, a.d);
  const auto L = dbn::LFunction::compute(d, dbn::CoefficientMode::half, workers);
  const auto zeros = dbn::zeros_at_t(L, 0.0, a.tol);

  nlohmann::json j = dbn::to_json(L);
  j["config"] = {{"subcommand", "lfun"}, {"q", a.q}, {"d", a.d}, {"tol", dbn::json_double(a.tol)}};
  j["gammas"] = dbn::to_json(zeros)["gammas"];
  j["zeros"] = dbn::to_json(zeros);
  Output out(a.out);
  out.stream() << j.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct NewmanArgs {
  std::int64_t q = 0;
  std::string d;
  std::string method = "all";
  double tol = 1e-10;
  double floor = -50.0;
  std::string point = "zero";
  std::string out;
};

int run_newman(const NewmanArgs& a, unsigned workers) {
  const auto q = checked_prime(a.q);
  const auto d = good_discriminant(q, a.d);
  const auto L = dbn::LFunction::compute(d, dbn::CoefficientMode::half, workers);
  const bool all = a.method == "all";
  if (a.method == "exact" && L.genus() != 1) throw InvalidInput("the exact method needs genus 1");

  dbn::DoubleZeroPoint point = dbn::DoubleZeroPoint::zero;
  if (a.point == "pi") point = dbn::DoubleZeroPoint::pi;
  if (a.point == "best") point = dbn::DoubleZeroPoint::best;

  nlohmann::json est = nlohmann::json::object();
  if ((all && L.genus() == 1) || a.method == "exact") est["exact"] = dbn::to_json(dbn::lambda_exact_genus1(L));
  if (all || a.method == "bisect") est["bisect"] = dbn::to_json(dbn::lambda_bisect(L, a.tol, a.floor));
  if (all || a.method == "double-zero") {
    auto j = dbn::to_json(dbn::double_zero_lower_bound(L, point));
    j["point"] = a.point;
    est["double_zero"] = j;
  }
  if (all || a.method == "stopple") {
    nlohmann::json j;
    try {
      const auto s = dbn::stopple_data(L);
      j = dbn::to_json(s);
      j["estimate"] = s.bound ? dbn::to_json(dbn::stopple_lower_bound(s.gamma[0], s.G))
                              : dbn::to_json(dbn::NewmanEstimate{});
      j["crude_conditions"] = s.gamma.size() >= 2 ? dbn::crude_condition_check(s.gamma, L.genus()) : false;
    } catch (const std::domain_error& e) {
      j["error"] = e.what();
    }
    est["stopple"] = j;
  }

  nlohmann::json j = dbn::to_json(L);
  j["config"] = {{"subcommand", "newman"}, {"q", a.q},          {"d", a.d},        {"method", a.method},
                 {"tol", dbn::json_double(a.tol)}, {"floor", dbn::json_double(a.floor)}, {"point", a.point}};
  j["estimates"] = est;
  Output out(a.out);
  out.stream() << j.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

int run_table(const std::string& out_path, unsigned workers) {
  Output out(out_path);
  auto& os = out.stream();
  csv_preamble(os, "subcommand=table q=3 method=double-zero point=zero", "g,d_coeffs,c_coeffs,lambda_bound");
  for (const auto& row : dbn::reference_f3_rows()) {
    const dbn::Polynomial d(3, row.d);
    const auto L = dbn::LFunction::compute(d, dbn::CoefficientMode::half, workers);
    const std::vector<std::int64_t> half(L.c().begin(), L.c().begin() + row.genus + 1);
    const auto bound = dbn::double_zero_lower_bound(L);
    os << row.genus << ',' << dbn::csv_field(d.to_string()) << ',' << dbn::csv_field(dbn::format_coefficients(half))
       << ',' << lambda_cell(bound) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
  std::int64_t q = 0;
  int max_genus = 0;
  std::string method = "double-zero";
  std::string out;
  int resume_genus = 1;
  std::uint64_t resume_index = 0;
};

int run_sweep(const SweepArgs& a, unsigned workers) {
  const auto q = checked_prime(a.q);
  if (a.max_genus < 1) throw InvalidInput("--max-genus must be at least 1");
  if (a.resume_genus < 1 || a.resume_genus > a.max_genus) throw InvalidInput("--resume-genus out of range");
  const auto method = a.method == "bisect" ? dbn::SweepMethod::bisect : dbn::SweepMethod::double_zero;

  std::ostringstream config;
  config << "subcommand=sweep q=" << q << " max_genus=" << a.max_genus << " method=" << a.method
         << " resume_genus=" << a.resume_genus << " resume_index=" << a.resume_index;
  Output out(a.out);
  auto& os = out.stream();
  csv_preamble(os, config.str(), "genus,d_coeffs,c_coeffs,method,lambda_bound");

  dbn::FixedQReport report;
  report.q = q;
  report.max_genus = a.max_genus;
  report.method = method;
  constexpr std::uint64_t kChunk = 4096;
  const std::string method_name(dbn::to_string(method));

  for (int g = a.resume_genus; g <= a.max_genus; ++g) {
    const dbn::MonicEnumerator monics(q, 2 * g + 1);
    report.per_genus[g].genus = g;
    report.per_genus[g].enumerated = monics.size();
    for (std::uint64_t begin = g == a.resume_genus ? a.resume_index : 0; begin < monics.size(); begin += kChunk) {
      if (g_interrupted) {
        os << "# interrupted; resume with --resume-genus " << g << " --resume-index " << begin << '\n';
        os.flush();
        return kExitInterrupted;
      }
      for (auto& item : dbn::sweep_fixed_q_range(q, g, begin, begin + kChunk, method, workers)) {
        os << item.genus << ',' << dbn::csv_field(item.d.to_string()) << ','
           << dbn::csv_field(dbn::format_coefficients(item.c_half)) << ',' << method_name << ','
           << (item.error.empty() ? lambda_cell(item.estimate) : "error") << '\n';
        report.add(std::move(item), /*keep_item=*/false);
      }
      os.flush();
    }
  }

  for (const auto& [g, s] : report.per_genus) {
    if (!s.best) continue;
    os << g << ',' << dbn::csv_field(s.best->d.to_string()) << ','
       << dbn::csv_field(dbn::format_coefficients(s.best->c_half)) << ",best:" << method_name << ','
       << lambda_cell(s.best->estimate) << '\n';
  }
  if (report.overall_best) {
    const auto& b = *report.overall_best;
    os << "all," << dbn::csv_field(b.d.to_string()) << ',' << dbn::csv_field(dbn::format_coefficients(b.c_half))
       << ",best:" << method_name << ',' << lambda_cell(b.estimate) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct SatoTateArgs {
  std::string dz;
  std::uint64_t pmax = 0;
  std::string out;
};

int run_sato_tate(const SatoTateArgs& a, unsigned workers) {
  const auto dz = dbn::parse_coefficients(a.dz);
  try {
    dbn::require_squarefree_cubic(dz);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
  const auto report = dbn::sato_tate_sweep(dz, a.pmax, workers);

  Output out(a.out);
  auto& os = out.stream();
  csv_preamble(os, "subcommand=sato-tate dz=" + a.dz + " pmax=" + std::to_string(a.pmax),
               "p,a_p,theta_p,lambda_p,skipped_reason");
  for (const auto& r : report.records) {
    os << r.p << ',';
    if (r.skipped) {
      os << ",,," << dbn::csv_field(*r.skipped) << '\n';
    } else {
      os << r.a_p << ',' << dbn::format_double(r.theta_p) << ',' << dbn::format_double(r.lambda_p) << ",\n";
    }
  }
  os << "# summary: sup_lambda=" << dbn::format_double(report.sup_lambda)
     << " argmax_p=" << (report.argmax_p ? std::to_string(*report.argmax_p) : "none")
     << " ks_distance_semicircle=" << dbn::format_double(report.ks_distance) << " processed=" << report.processed
     << " skipped=" << report.skipped << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct ClassicalArgs {
  double t = 0.0;
  double x_min = 0.0;
  double x_max = 0.0;
  double step = 1.0;
  double u_max = 6.0;
  int n_max = 32;
  int quad_points = 2000;
  std::string out;
};

int run_classical(const ClassicalArgs& a) {
  if (!(std::abs(a.t) <= dbn::classical::kMaxAbsT)) throw InvalidInput("|t| must be at most 2");
  if (!(a.step > 0.0)) throw InvalidInput("--step must be positive");
  if (a.x_max < a.x_min) throw InvalidInput("--x-max must be at least --x-min");
  const auto rows = static_cast<long>(std::floor((a.x_max - a.x_min) / a.step + 1e-9)) + 1;

  std::ostringstream config;
  config << "subcommand=classical t=" << dbn::format_double(a.t) << " x_min=" << dbn::format_double(a.x_min)
         << " x_max=" << dbn::format_double(a.x_max) << " step=" << dbn::format_double(a.step)
         << " u_max=" << dbn::format_double(a.u_max) << " n_max=" << a.n_max << " quad_points=" << a.quad_points;
  Output out(a.out);
  auto& os = out.stream();
  csv_preamble(os, config.str(), "x,xi_t");
  for (long i = 0; i < rows; ++i) {
    const double x = a.x_min + static_cast<double>(i) * a.step;
    os << dbn::format_double(x) << ','
       << dbn::format_double(dbn::classical::xi_t_classical(a.t, x, a.u_max, a.n_max, a.quad_points)) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic L-functions over F_q(T) and their de Bruijn-Newman constants"};
  app.require_subcommand(1);
  unsigned workers = dbn::default_workers();
  app.add_option("--workers", workers, "worker threads for sweeps and coefficient sums")->check(CLI::PositiveNumber);

  LfunArgs lfun;
  auto* lfun_cmd = app.add_subcommand("lfun", "coefficients, Fourier data and zeros at t = 0");
  lfun_cmd->add_option("--q", lfun.q, "odd prime")->required();
  lfun_cmd->add_option("--d", lfun.d, "D as ascending comma-separated coefficients")->required();
  lfun_cmd->add_option("--tol", lfun.tol, "real/non-real classification tolerance")->capture_default_str();
  lfun_cmd->add_option("--out", lfun.out, "output file (default stdout)");

  NewmanArgs newman;
  auto* newman_cmd = app.add_subcommand("newman", "estimate or bound Lambda_D");
  newman_cmd->add_option("--q", newman.q, "odd prime")->required();
  newman_cmd->add_option("--d", newman.d, "D as ascending comma-separated coefficients")->required();
  newman_cmd->add_option("--method", newman.method, "exact|bisect|double-zero|stopple|all")->capture_default_str()
      ->check(CLI::IsMember({"exact", "bisect", "double-zero", "stopple", "all"}));
  newman_cmd->add_option("--tol", newman.tol, "bisection width in t")->capture_default_str();
  newman_cmd->add_option("--floor", newman.floor, "lowest t searched by bisection")->capture_default_str();
  newman_cmd->add_option("--point", newman.point, "double-zero point: zero|pi|best")->capture_default_str()
      ->check(CLI::IsMember({"zero", "pi", "best"}));
  newman_cmd->add_option("--out", newman.out, "output file (default stdout)");

  std::string table_out;
  auto* table_cmd = app.add_subcommand("table", "double-zero bounds for the reference F_3 discriminants");
  table_cmd->add_option("--out", table_out, "output file (default stdout)");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "all good D over F_q up to a genus");
  sweep_cmd->add_option("--q", sweep.q, "odd prime")->required();
  sweep_cmd->add_option("--max-genus", sweep.max_genus, "largest genus")->required();
  sweep_cmd->add_option("--method", sweep.method, "double-zero|bisect")->capture_default_str()
      ->check(CLI::IsMember({"double-zero", "bisect"}));
  sweep_cmd->add_option("--out", sweep.out, "output file (default stdout)");
  sweep_cmd->add_option("--resume-genus", sweep.resume_genus, "genus to resume from")->capture_default_str();
  sweep_cmd->add_option("--resume-index", sweep.resume_index, "enumeration index to resume from")->capture_default_str();

  SatoTateArgs st;
  auto* st_cmd = app.add_subcommand("sato-tate", "a_p, theta_p and Lambda over primes for an integer cubic");
  st_cmd->add_option("--dz", st.dz, "integer cubic, ascending coefficients")->required();
  st_cmd->add_option("--pmax", st.pmax, "largest prime")->required();
  st_cmd->add_option("--out", st.out, "output file (default stdout)");

  ClassicalArgs cl;
  auto* cl_cmd = app.add_subcommand("classical", "Polya-deformed Riemann Xi_t(x) on a grid");
  cl_cmd->add_option("--t", cl.t, "deformation time, |t| <= 2")->required();
  cl_cmd->add_option("--x-min", cl.x_min, "first x")->required();
  cl_cmd->add_option("--x-max", cl.x_max, "last x")->required();
  cl_cmd->add_option("--step", cl.step, "x step")->required();
  cl_cmd->add_option("--u-max", cl.u_max, "quadrature cutoff")->capture_default_str();
  cl_cmd->add_option("--n-max", cl.n_max, "Phi series terms")->capture_default_str();
  cl_cmd->add_option("--quad-points", cl.quad_points, "quadrature nodes")->capture_default_str();
  cl_cmd->add_option("--out", cl.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  std::signal(SIGINT, on_sigint);
  try {
    if (*lfun_cmd) return run_lfun(lfun, workers);
    if (*newman_cmd) return run_newman(newman, workers);
    if (*table_cmd) return run_table(table_out, workers);
    if (*sweep_cmd) return run_sweep(sweep, workers);
    if (*st_cmd) return run_sato_tate(st, workers);
    if (*cl_cmd) return run_classical(cl);
  } catch (const dbn::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
