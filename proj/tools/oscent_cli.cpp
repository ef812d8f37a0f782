// oscent: ground-state spatial entanglement of two coupled harmonic
// oscillators. Subcommands:
//   point   one parameter point, every requested entropy route
//   sweep   parameter sweep with CSV/JSON export and monotonicity verdicts
//   claims  special-frequency and asymptotic claims, each with a verdict
//
// Exit codes: 0 success, 2 invalid arguments, 3 every requested route failed
// at one or more points.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "oscent/sweep.hpp"

namespace {

constexpr int kExitBadArgs = 2;
constexpr int kExitNumerical = 3;

struct CommonOptions {
  oscent::SystemParams params;
  bool beta_given = false;
  std::string routes_csv;
  std::string output;
  std::string format = "csv";
};

void add_param_flags(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--m", opts.params.m, "light-particle mass")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--M", opts.params.M, "heavy-particle mass")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--omega", opts.params.omega, "confining frequency omega")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--Omega", opts.params.Omega, "heavy-particle frequency")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--kappa", opts.params.kappa, "coupling strength")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--beta", opts.params.beta,
                  "inverse temperature (default: 50/min(z-, Omega_eff, 1))")
      ->check(CLI::PositiveNumber)
      ->trigger_on_parse()
      ->each([&opts](const std::string&) { opts.beta_given = true; });
  cmd->add_option("--output", opts.output, "output path (default: stdout)");
  cmd->add_option("--format", opts.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

oscent::RouteSet parse_routes(const std::string& csv) {
  if (csv.empty()) return oscent::default_sweep_routes();
  oscent::RouteSet routes;
  std::stringstream ss(csv);
  std::string name;
  while (std::getline(ss, name, ','))
    routes.insert(oscent::route_from_name(name));
  if (routes.empty())
    throw oscent::Error(oscent::ErrorCode::InvalidSpec, "empty route list");
  return routes;
}

int emit(const CommonOptions& opts, const std::function<void(std::ostream&)>& writer) {
  if (opts.output.empty()) {
    writer(std::cout);
    return 0;
  }
  std::ofstream out(opts.output);
  if (!out) {
    std::cerr << "error: cannot open output file '" << opts.output << "'\n";
    return kExitBadArgs;
  }
  writer(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ground-state spatial entanglement of two coupled oscillators"};
  app.require_subcommand(1);

  CommonOptions point_opts;
  CLI::App* point = app.add_subcommand("point", "evaluate one parameter point");
  add_param_flags(point, point_opts);
  point->add_option("--routes", point_opts.routes_csv,
                    "comma list: paper_literal,paper_algebraic,kernel,"
                    "quadrature,oracle (default: all)");

  CommonOptions sweep_opts;
  std::string swept = "omega";
  std::string scale = "lin";
  double start = 0.0, stop = 0.0;
  int count = 0;
  CLI::App* sweep = app.add_subcommand("sweep", "sweep one parameter");
  add_param_flags(sweep, sweep_opts);
  sweep->add_option("--sweep", swept, "parameter to sweep")
      ->check(CLI::IsMember({"omega", "kappa", "Omega"}));
  sweep->add_option("--start", start, "first swept value")->required();
  sweep->add_option("--stop", stop, "last swept value")->required();
  sweep->add_option("--count", count, "number of grid points (>= 2)")
      ->required();
  sweep->add_option("--scale", scale, "lin or log")
      ->check(CLI::IsMember({"lin", "log"}));
  sweep->add_option("--routes", sweep_opts.routes_csv,
                    "comma list (default: paper_algebraic,oracle)");

  CommonOptions claims_opts;
  claims_opts.format = "json";
  CLI::App* claims =
      app.add_subcommand("claims", "verdicts for the special-frequency claims");
  add_param_flags(claims, claims_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadArgs;
  }

  try {
    if (point->parsed()) {
      if (!point_opts.beta_given)
        point_opts.params.beta = oscent::default_beta(point_opts.params);
      const oscent::RouteSet routes = point_opts.routes_csv.empty()
                                          ? oscent::all_routes()
                                          : parse_routes(point_opts.routes_csv);
      const oscent::EntropyReport report =
          oscent::run_point(point_opts.params, routes);
      const int rc = emit(point_opts, [&](std::ostream& out) {
        if (point_opts.format == "json")
          oscent::write_point_json(point_opts.params, report, out);
        else
          oscent::write_point_csv(report, out);
      });
      if (rc != 0) return rc;

      size_t defined = 0;
      for (const auto& v :
           {report.s_l_paper_literal, report.s_l_paper_algebraic,
            report.s_l_kernel, report.s_l_quadrature, report.s_l_oracle})
        if (v) ++defined;
      return defined == 0 ? kExitNumerical : 0;
    }

    if (sweep->parsed()) {
      oscent::SweepSpec spec;
      spec.swept = swept == "omega"   ? oscent::SweepParameter::Omega_
                   : swept == "kappa" ? oscent::SweepParameter::Kappa
                                      : oscent::SweepParameter::OmegaBig;
      spec.start = start;
      spec.stop = stop;
      spec.count = count;
      spec.scale = scale == "log" ? oscent::SweepScale::Logarithmic
                                  : oscent::SweepScale::Linear;
      spec.fixed = sweep_opts.params;
      spec.beta_is_auto = !sweep_opts.beta_given;
      spec.routes = parse_routes(sweep_opts.routes_csv);

      const oscent::SweepResult result = oscent::run_sweep(spec);
      const int rc = emit(sweep_opts, [&](std::ostream& out) {
        if (sweep_opts.format == "json")
          oscent::write_json(result, out);
        else
          oscent::write_csv(result, out);
      });
      if (rc != 0) return rc;
      return result.any_row_all_failed ? kExitNumerical : 0;
    }

    if (claims->parsed()) {
      if (!claims_opts.beta_given)
        claims_opts.params.beta = oscent::default_beta(claims_opts.params);
      const oscent::ClaimsReport report =
          oscent::claims_report(claims_opts.params);
      return emit(claims_opts, [&](std::ostream& out) {
        if (claims_opts.format == "json")
          oscent::write_claims_json(report, out);
        else
          oscent::write_claims_csv(report, out);
      });
    }
  } catch (const oscent::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case oscent::ErrorCode::InvalidParams:
      case oscent::ErrorCode::InvalidSpec:
        return kExitBadArgs;
      default:
        return kExitNumerical;
    }
  }
  return 0;
}
