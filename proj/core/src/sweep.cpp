#include "oscent/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oscent/oracle.hpp"

namespace oscent {

using ordered_json = nlohmann::ordered_json;

const char* kCsvHeader =
    "swept_param,value,s_l_paper_literal,s_l_paper_algebraic,s_l_kernel,"
    "s_l_quadrature,s_l_oracle,deviation,flags";

static const char* kToolVersion = "0.1.0";

RouteSet all_routes() {
  return {Route::PaperLiteral, Route::PaperAlgebraic, Route::Kernel,
          Route::Quadrature, Route::Oracle};
}

RouteSet default_sweep_routes() {
  return {Route::PaperAlgebraic, Route::Oracle};
}

const char* route_name(Route route) {
  switch (route) {
    case Route::PaperLiteral: return "paper_literal";
    case Route::PaperAlgebraic: return "paper_algebraic";
    case Route::Kernel: return "kernel";
    case Route::Quadrature: return "quadrature";
    case Route::Oracle: return "oracle";
  }
  return "unknown";
}

Route route_from_name(const std::string& name) {
  for (Route r : all_routes())
    if (name == route_name(r)) return r;
  throw Error(ErrorCode::InvalidSpec, "unknown route '" + name + "'");
}

static const char* sweep_parameter_name(SweepParameter p) {
  switch (p) {
    case SweepParameter::Omega_: return "omega";
    case SweepParameter::Kappa: return "kappa";
    case SweepParameter::OmegaBig: return "Omega";
  }
  return "unknown";
}

void SweepSpec::validate() const {
  if (count < 2) throw Error(ErrorCode::InvalidSpec, "count must be >= 2");
  if (!(start < stop))
    throw Error(ErrorCode::InvalidSpec, "start must be < stop");
  if (scale == SweepScale::Logarithmic && !(start > 0.0))
    throw Error(ErrorCode::InvalidSpec, "logarithmic scale needs start > 0");
  if (routes.empty())
    throw Error(ErrorCode::InvalidSpec, "at least one route required");
  if (start < 0.0)
    throw Error(ErrorCode::InvalidSpec, "swept values must be >= 0");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void set_flag(EntropyReport& report, Route route, const Error& e) {
  report.flags.emplace_back(route_name(route), error_code_name(e.code()));
}

void finish_report(EntropyReport& report) {
  std::vector<double> values;
  for (const auto& v :
       {report.s_l_paper_literal, report.s_l_paper_algebraic,
        report.s_l_kernel, report.s_l_quadrature, report.s_l_oracle}) {
    if (v) {
      values.push_back(*v);
      if (*v < 0.0 || *v > 1.0) report.out_of_range = true;
    }
  }
  double deviation = 0.0;
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = i + 1; j < values.size(); ++j)
      deviation = std::max(deviation, std::fabs(values[i] - values[j]));
  report.deviation = deviation;
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

EntropyReport run_point(const SystemParams& params, const RouteSet& routes) {
  params.validate();
  EntropyReport report;

  const bool wants_paper = routes.count(Route::PaperLiteral) ||
                           routes.count(Route::PaperAlgebraic);
  if (wants_paper) {
    report.a_value = oscent::a_value(params);
    report.b_value = oscent::b_value(params);
  }
  if (routes.count(Route::PaperLiteral)) {
    try {
      report.s_l_paper_literal =
          linear_entropy_paper(params, PaperMode::Literal);
    } catch (const Error& e) {
      set_flag(report, Route::PaperLiteral, e);
    }
  }
  if (routes.count(Route::PaperAlgebraic)) {
    try {
      report.s_l_paper_algebraic =
          linear_entropy_paper(params, PaperMode::Algebraic);
    } catch (const Error& e) {
      set_flag(report, Route::PaperAlgebraic, e);
    }
  }
  if (routes.count(Route::Kernel) || routes.count(Route::Quadrature)) {
    std::optional<KernelCoefficients> coeffs;
    try {
      coeffs = kernel_coefficients(params);
    } catch (const Error& e) {
      if (routes.count(Route::Kernel)) set_flag(report, Route::Kernel, e);
      if (routes.count(Route::Quadrature))
        set_flag(report, Route::Quadrature, e);
    }
    if (coeffs && routes.count(Route::Kernel)) {
      try {
        report.s_l_kernel = 1.0 - purity_gaussian_closed(*coeffs);
      } catch (const Error& e) {
        set_flag(report, Route::Kernel, e);
      }
    }
    if (coeffs && routes.count(Route::Quadrature)) {
      try {
        report.s_l_quadrature = 1.0 - purity_quadrature(*coeffs);
      } catch (const Error& e) {
        set_flag(report, Route::Quadrature, e);
      }
    }
  }
  if (routes.count(Route::Oracle)) {
    try {
      report.s_l_oracle = linear_entropy_oracle(params);
    } catch (const Error& e) {
      set_flag(report, Route::Oracle, e);
    }
  }
  finish_report(report);
  return report;
}

namespace {

std::vector<double> sweep_grid(const SweepSpec& spec) {
  std::vector<double> values(spec.count);
  if (spec.scale == SweepScale::Linear) {
    const double step = (spec.stop - spec.start) / (spec.count - 1);
    for (int i = 0; i < spec.count; ++i) values[i] = spec.start + i * step;
  } else {
    const double ratio = std::log(spec.stop / spec.start) / (spec.count - 1);
    for (int i = 0; i < spec.count; ++i)
      values[i] = spec.start * std::exp(i * ratio);
  }
  values.back() = spec.stop;
  return values;
}

std::optional<double> route_value(const EntropyReport& r, Route route) {
  switch (route) {
    case Route::PaperLiteral: return r.s_l_paper_literal;
    case Route::PaperAlgebraic: return r.s_l_paper_algebraic;
    case Route::Kernel: return r.s_l_kernel;
    case Route::Quadrature: return r.s_l_quadrature;
    case Route::Oracle: return r.s_l_oracle;
  }
  return std::nullopt;
}

MonotonicityVerdict judge_monotonicity(const SweepResult& result, Route route) {
  MonotonicityVerdict verdict;
  verdict.route = route;
  std::vector<std::pair<int, double>> defined;
  for (size_t i = 0; i < result.rows.size(); ++i)
    if (auto v = route_value(result.rows[i].report, route))
      defined.emplace_back(static_cast<int>(i), *v);
  if (defined.size() < 2) return verdict;

  const bool increasing = defined[1].second > defined[0].second;
  for (size_t i = 1; i < defined.size(); ++i) {
    const bool step_up = defined[i].second > defined[i - 1].second;
    const bool strict = defined[i].second != defined[i - 1].second;
    if (!strict || step_up != increasing) {
      verdict.direction = Monotonicity::NonMonotone;
      verdict.first_violation = defined[i].first;
      return verdict;
    }
  }
  verdict.direction =
      increasing ? Monotonicity::Increasing : Monotonicity::Decreasing;
  return verdict;
}

const char* monotonicity_name(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing: return "increasing";
    case Monotonicity::Decreasing: return "decreasing";
    case Monotonicity::NonMonotone: return "non-monotone";
    case Monotonicity::Undetermined: return "undetermined";
  }
  return "undetermined";
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  spec.fixed.validate();

  SweepResult result;
  result.spec = spec;
  result.tool_version = kToolVersion;
  result.timestamp = iso_timestamp();

  for (double value : sweep_grid(spec)) {
    SystemParams point = spec.fixed;
    switch (spec.swept) {
      case SweepParameter::Omega_: point.omega = value; break;
      case SweepParameter::Kappa: point.kappa = value; break;
      case SweepParameter::OmegaBig: point.Omega = value; break;
    }
    if (spec.beta_is_auto) point.beta = default_beta(point);

    SweepRow row;
    row.value = value;
    row.report = run_point(point, spec.routes);

    size_t failed = 0;
    for (Route r : spec.routes)
      if (!route_value(row.report, r)) ++failed;
    if (failed == spec.routes.size()) result.any_row_all_failed = true;

    result.rows.push_back(std::move(row));
  }
  for (Route r : spec.routes)
    result.monotonicity.push_back(judge_monotonicity(result, r));
  return result;
}

ClaimsReport claims_report(const SystemParams& params) {
  ClaimsReport report;
  report.params = params;
  report.claims = condition_report(params).claims;

  // z_pm of the influence kernel versus the true normal modes. The sum rule
  // differs by omega^2 and the product rule by kappa^2/(mM); both deviations
  // are measured, reported and expected to be DISCREPANT away from kappa = 0.
  auto add = [&](const std::string& name, double measured, double expected) {
    Claim c;
    c.name = name;
    c.measured = measured;
    c.expected = expected;
    const double scale = std::max(std::fabs(expected), 1e-300);
    c.deviation = std::fabs(measured - expected) / scale;
    c.verdict = c.deviation <= 1e-3 ? Verdict::Pass : Verdict::Discrepant;
    report.claims.push_back(c);
  };
  try {
    const DerivedFrequencies d = derive(params);
    const NormalModes modes = normal_modes(params);
    const double z_sum = d.z_plus * d.z_plus + d.z_minus * d.z_minus;
    const double nu_sum = modes.nu_plus * modes.nu_plus +
                          modes.nu_minus * modes.nu_minus;
    const double z_prod_sq = std::pow(d.z_plus * d.z_minus, 2);
    const double nu_prod_sq = std::pow(modes.nu_plus * modes.nu_minus, 2);
    add("z_sum_rule_vs_normal_modes", z_sum, nu_sum);
    add("z_product_rule_vs_normal_modes", z_prod_sq, nu_prod_sq);
  } catch (const Error& e) {
    Claim c;
    c.name = "z_vs_normal_modes";
    c.verdict = Verdict::Error;
    c.note = e.what();
    report.claims.push_back(c);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string flags_cell(const EntropyReport& report) {
  std::string cell;
  for (const auto& [route, code] : report.flags) {
    if (!cell.empty()) cell += ';';
    cell += route + ":" + code;
  }
  if (report.out_of_range) {
    if (!cell.empty()) cell += ';';
    cell += "out_of_range";
  }
  return cell;
}

std::string optional_cell(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

void write_row(std::ostream& out, const std::string& swept_param,
               const std::string& value, const EntropyReport& r) {
  out << swept_param << ',' << value << ','
      << optional_cell(r.s_l_paper_literal) << ','
      << optional_cell(r.s_l_paper_algebraic) << ','
      << optional_cell(r.s_l_kernel) << ','
      << optional_cell(r.s_l_quadrature) << ','
      << optional_cell(r.s_l_oracle) << ','
      << format_double(r.deviation) << ','
      << flags_cell(r) << '\n';
}

ordered_json params_json(const SystemParams& p) {
  return ordered_json{{"m", p.m},         {"M", p.M},
                      {"omega", p.omega}, {"Omega", p.Omega},
                      {"kappa", p.kappa}, {"beta", p.beta}};
}

ordered_json report_json(const EntropyReport& r) {
  auto opt = [](const std::optional<double>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  ordered_json flags = ordered_json::array();
  for (const auto& [route, code] : r.flags)
    flags.push_back(route + ":" + code);
  if (r.out_of_range) flags.push_back("out_of_range");
  return ordered_json{{"s_l_paper_literal", opt(r.s_l_paper_literal)},
                      {"s_l_paper_algebraic", opt(r.s_l_paper_algebraic)},
                      {"s_l_kernel", opt(r.s_l_kernel)},
                      {"s_l_quadrature", opt(r.s_l_quadrature)},
                      {"s_l_oracle", opt(r.s_l_oracle)},
                      {"deviation", r.deviation},
                      {"flags", flags}};
}

ordered_json metadata_json(const SweepResult& result) {
  ordered_json mono = ordered_json::array();
  for (const auto& v : result.monotonicity) {
    mono.push_back(ordered_json{{"route", route_name(v.route)},
                                {"direction", monotonicity_name(v.direction)},
                                {"first_violation", v.first_violation}});
  }
  return ordered_json{{"tool_version", result.tool_version},
                      {"timestamp", result.timestamp},
                      {"monotonicity", mono}};
}

ordered_json claim_json(const Claim& c) {
  return ordered_json{{"name", c.name},
                      {"verdict", verdict_name(c.verdict)},
                      {"measured", c.measured},
                      {"expected", c.expected},
                      {"deviation", c.deviation},
                      {"note", c.note}};
}

}  // namespace

void write_csv(const SweepResult& result, std::ostream& out) {
  out << kCsvHeader << '\n';
  const std::string name = sweep_parameter_name(result.spec.swept);
  for (const auto& row : result.rows)
    write_row(out, name, format_double(row.value), row.report);
}

void write_json(const SweepResult& result, std::ostream& out) {
  ordered_json routes = ordered_json::array();
  for (Route r : result.spec.routes) routes.push_back(route_name(r));
  ordered_json spec{
      {"swept", sweep_parameter_name(result.spec.swept)},
      {"start", result.spec.start},
      {"stop", result.spec.stop},
      {"count", result.spec.count},
      {"scale",
       result.spec.scale == SweepScale::Linear ? "linear" : "logarithmic"},
      {"fixed", params_json(result.spec.fixed)},
      {"routes", routes}};
  ordered_json rows = ordered_json::array();
  const std::string name = sweep_parameter_name(result.spec.swept);
  for (const auto& row : result.rows) {
    ordered_json r{{"swept_param", name}, {"value", row.value}};
    r.update(report_json(row.report));
    rows.push_back(r);
  }
  ordered_json doc{
      {"spec", spec}, {"rows", rows}, {"metadata", metadata_json(result)}};
  out << doc.dump(2) << '\n';
}

void write_point_csv(const EntropyReport& report, std::ostream& out) {
  out << kCsvHeader << '\n';
  write_row(out, "", "", report);
}

void write_point_json(const SystemParams& params, const EntropyReport& report,
                      std::ostream& out) {
  ordered_json doc{{"params", params_json(params)},
                   {"report", report_json(report)},
                   {"metadata",
                    ordered_json{{"tool_version", kToolVersion},
                                 {"timestamp", iso_timestamp()}}}};
  out << doc.dump(2) << '\n';
}

void write_claims_csv(const ClaimsReport& report, std::ostream& out) {
  out << "claim,verdict,measured,expected,deviation,note\n";
  for (const Claim& c : report.claims) {
    std::string note = c.note;
    std::replace(note.begin(), note.end(), ',', ';');
    out << c.name << ',' << verdict_name(c.verdict) << ','
        << format_double(c.measured) << ',' << format_double(c.expected)
        << ',' << format_double(c.deviation) << ',' << note << '\n';
  }
}

void write_claims_json(const ClaimsReport& report, std::ostream& out) {
  ordered_json claims = ordered_json::array();
  for (const Claim& c : report.claims) claims.push_back(claim_json(c));
  ordered_json doc{{"params", params_json(report.params)},
                   {"claims", claims},
                   {"metadata",
                    ordered_json{{"tool_version", kToolVersion},
                                 {"timestamp", iso_timestamp()}}}};
  out << doc.dump(2) << '\n';
}

std::vector<ParsedCsvRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw Error(ErrorCode::InvalidSpec, "missing or malformed CSV header");
  std::vector<ParsedCsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ParsedCsvRow row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.cells.push_back(cell);
    if (!line.empty() && line.back() == ',') row.cells.push_back("");
    if (row.cells.size() != 9)
      throw Error(ErrorCode::InvalidSpec, "CSV row does not have 9 cells");
    row.swept_param = row.cells[0];
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace oscent
