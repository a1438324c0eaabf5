#include "eulersym/cli.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eulersym/altsum.hpp"
#include "eulersym/egf.hpp"
#include "eulersym/euler.hpp"
#include "eulersym/sweep.hpp"

namespace eulersym {

namespace {

constexpr int kUsageError = 2;

std::vector<Rational> parse_rationals(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(Rational::parse(t));
  return out;
}

struct VerifyOptions {
  std::vector<std::string> families;
  std::vector<unsigned> w_set{1, 3, 5, 7};
  unsigned n_max = 10;
  std::vector<std::string> ys;
  bool include_even_w = false;
  std::string format = "json";
  std::string output;
  unsigned order = kDefaultOrder;
  unsigned jobs = 1;
  bool series_oracle = false;
};

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  SweepConfig config;
  config.families = opt.families;
  config.w_set = opt.w_set;
  config.n_max = opt.n_max;
  config.y_samples = opt.ys.empty() ? default_y_samples() : parse_rationals(opt.ys);
  config.include_even_w = opt.include_even_w;
  config.format = opt.format == "csv" ? ReportFormat::kCsv : ReportFormat::kJson;
  if (!opt.output.empty()) config.output_path = opt.output;
  config.order = opt.order;
  config.jobs = opt.jobs;
  config.series_oracle = opt.series_oracle;

  const SweepResult result = run_sweep(config);
  const std::string report = emit_report(result.records, config.format);

  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    file << report;
    if (config.format == ReportFormat::kJson) file << '\n';
    if (!file) {
      err << "error: cannot write " << *config.output_path << '\n';
      return kUsageError;
    }
  } else {
    out << report;
    if (config.format == ReportFormat::kJson) out << '\n';
  }

  const auto& s = result.summary;
  err << "families: " << s.families_run << ", cases: " << s.cases_run
      << ", failures: " << s.failures << '\n';
  for (const auto& note : s.notes) err << "note: " << note << '\n';
  return exit_code(s);
}

int run_euler(unsigned n, const std::string& x, std::ostream& out) {
  if (x.empty()) {
    const auto polys = euler_polynomials_up_to(n);
    for (const auto& c : polys.back().coeffs) out << c << '\n';
  } else {
    out << euler_eval(n, Rational::parse(x)) << '\n';
  }
  return 0;
}

int run_series(const std::string& tag, int i, const std::vector<unsigned>& w,
               const std::vector<std::string>& ys, unsigned order, std::ostream& out) {
  const LambdaFamily fam = parse_lambda_family(tag);
  if (w.size() != 3) throw std::invalid_argument("--w needs exactly three values");
  unsigned index = 0;
  if (i >= 0) {
    index = static_cast<unsigned>(i);
  } else if (fam == LambdaFamily::k12_1) {
    index = 1;
  }
  const std::vector<Rational> y = parse_rationals(ys);
  const TruncatedEgf series = lambda_series(fam, index, {w[0], w[1], w[2]}, y, order);
  for (const auto& c : series.coeffs()) out << c << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of symmetry identities for Euler polynomials and alternating power sums",
               "eulersym"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Sweep identity families and report every case");
  verify->add_option("--family", vopt.families, "Family ids (T1..T17, C3..C18, INTRO) or all")
      ->delimiter(',');
  verify->add_option("--wset", vopt.w_set, "w components to draw from")
      ->delimiter(',')
      ->capture_default_str();
  verify->add_option("--nmax", vopt.n_max, "Largest n")->capture_default_str();
  verify->add_option("--ys", vopt.ys, "y samples, e.g. --ys=0,1/2,-1/3")->delimiter(',');
  verify->add_flag("--include-even-w", vopt.include_even_w, "Admit even w for T1 and T16");
  verify->add_option("--format", vopt.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  verify->add_option("--output", vopt.output, "Write the report here instead of stdout");
  verify->add_option("--order", vopt.order, "Series truncation order")->capture_default_str();
  verify->add_option("--jobs", vopt.jobs, "Worker threads")->capture_default_str();
  verify->add_flag("--series-oracle", vopt.series_oracle,
                   "Also compare theorem cases to series coefficients");

  unsigned euler_n = 0;
  std::string euler_x;
  auto* euler = app.add_subcommand("euler", "Coefficients of E_n(x), or its value at --x");
  euler->add_option("--n", euler_n, "Degree")->required();
  euler->add_option("--x", euler_x, "Evaluation point, e.g. --x=-1/2");

  unsigned alt_k = 0;
  unsigned alt_n = 0;
  auto* alt = app.add_subcommand("altsum", "Alternating power sum T_k(n)");
  alt->add_option("--k", alt_k, "Power")->required();
  alt->add_option("--n", alt_n, "Upper limit")->required();

  std::string series_family;
  int series_i = -1;
  std::vector<unsigned> series_w;
  std::vector<std::string> series_y;
  unsigned series_order = kDefaultOrder;
  auto* series = app.add_subcommand("series", "Coefficients c_0..c_N of a quotient series");
  series->add_option("--family", series_family, "L23, L13, L12_0 or L12_1")->required();
  series->add_option("--i", series_i, "Numerator power 0..3")->check(CLI::Range(0, 3));
  series->add_option("--w", series_w, "w1,w2,w3")->delimiter(',')->required();
  series->add_option("--y", series_y, "y values, e.g. --y=1/2,-1")->delimiter(',');
  series->add_option("--order", series_order, "Truncation order")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*verify) return run_verify(vopt, out, err);
    if (*euler) return run_euler(euler_n, euler_x, out);
    if (*alt) {
      out << alt_power_sum(alt_k, alt_n) << '\n';
      return 0;
    }
    if (*series) return run_series(series_family, series_i, series_w, series_y, series_order, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace eulersym
