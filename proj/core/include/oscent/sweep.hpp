#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "oscent/entropy.hpp"
#include "oscent/params.hpp"

namespace oscent {

enum class Route { PaperLiteral, PaperAlgebraic, Kernel, Quadrature, Oracle };

using RouteSet = std::set<Route>;

RouteSet all_routes();
RouteSet default_sweep_routes();  // oracle + paper_algebraic
const char* route_name(Route route);
// Throws Error(InvalidSpec) on an unknown name.
Route route_from_name(const std::string& name);

enum class SweepParameter { Omega_, Kappa, OmegaBig };
enum class SweepScale { Linear, Logarithmic };

struct SweepSpec {
  SweepParameter swept = SweepParameter::Omega_;
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
  SweepScale scale = SweepScale::Linear;
  SystemParams fixed;       // swept field's value here is ignored
  bool beta_is_auto = true; // recompute default_beta at every grid point
  RouteSet routes = default_sweep_routes();

  void validate() const;  // throws Error(InvalidSpec)
};

enum class Monotonicity { Increasing, Decreasing, NonMonotone, Undetermined };

struct MonotonicityVerdict {
  Route route;
  Monotonicity direction = Monotonicity::Undetermined;
  int first_violation = -1;  // row index of the first order violation
};

struct SweepRow {
  double value = 0.0;  // swept-parameter value
  EntropyReport report;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;
  std::vector<MonotonicityVerdict> monotonicity;
  std::string tool_version;
  std::string timestamp;
  // True when at least one row failed on every requested route.
  bool any_row_all_failed = false;
};

// Evaluates every requested route at one point. Per-route errors become
// flags; only invalid SystemParams throw.
EntropyReport run_point(const SystemParams& params, const RouteSet& routes);

SweepResult run_sweep(const SweepSpec& spec);

// Claims report: condition_report plus the z_pm vs normal-mode discrepancy.
struct ClaimsReport {
  SystemParams params;
  std::vector<Claim> claims;
};

ClaimsReport claims_report(const SystemParams& params);

// Serialization. CSV column order is fixed:
//   swept_param,value,s_l_paper_literal,s_l_paper_algebraic,s_l_kernel,
//   s_l_quadrature,s_l_oracle,deviation,flags
// Decimals carry 17 significant digits; unavailable routes are empty cells.
extern const char* kCsvHeader;

std::string format_double(double v);  // %.17g

void write_csv(const SweepResult& result, std::ostream& out);
void write_json(const SweepResult& result, std::ostream& out);

void write_point_csv(const EntropyReport& report, std::ostream& out);
void write_point_json(const SystemParams& params, const EntropyReport& report,
                      std::ostream& out);

void write_claims_csv(const ClaimsReport& report, std::ostream& out);
void write_claims_json(const ClaimsReport& report, std::ostream& out);

// Parses a CSV produced by write_csv back into rows (decimal strings are
// reproduced exactly by format_double). Throws Error(InvalidSpec) on a
// malformed document.
struct ParsedCsvRow {
  std::string swept_param;
  std::vector<std::string> cells;  // the 9 raw cells
};
std::vector<ParsedCsvRow> parse_csv(std::istream& in);

}  // namespace oscent
