#pragma once

#include <string>
#include <vector>

namespace norlund {

// A named parameter attached to a verification report.  Values are integers,
// reals, or free text (used for aggregated grids like "3, 5").
struct Param {
  enum class Kind { integer, real, text };
  std::string name;
  Kind kind = Kind::integer;
  long long i = 0;
  double x = 0.0;
  std::string s;
};

Param param(std::string name, int value);
Param param(std::string name, double value);
Param param(std::string name, std::string value);

// Either a numeric value or a symbolic/text one (used by exact checks).
struct ReportValue {
  bool is_text = false;
  double number = 0.0;
  std::string text;

  static ReportValue num(double v) { return {false, v, {}}; }
  static ReportValue sym(std::string t) { return {true, 0.0, std::move(t)}; }
};

struct VerificationReport {
  std::string identity_id;
  std::vector<Param> parameters;
  ReportValue lhs;
  ReportValue rhs;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string notes;
  std::vector<double> quadrature_errors;
};

// Numeric check: residual = |lhs - rhs|; passes when the residual is within
// tolerance AND every quadrature error estimate is within tolerance / 2, so a
// sloppy integral can never silently absorb the identity's error budget.
VerificationReport make_numeric_report(std::string id, std::vector<Param> params,
                                       double lhs, double rhs, double tolerance,
                                       std::vector<double> quadrature_errors = {},
                                       std::string notes = {});

// Exact symbolic check: equal operands give residual 0 at tolerance 0.
VerificationReport make_exact_report(std::string id, std::vector<Param> params,
                                     std::string lhs, std::string rhs, bool equal,
                                     std::string notes = {});

// Shortest fixed formatting that round-trips doubles (17 significant digits),
// independent of the global locale.
std::string format_double(double v);

// Backslash-escapes a string for embedding inside a JSON string literal.
std::string json_escape(const std::string& s);

// RFC-4180 CSV field: quoted (with doubled inner quotes) only when needed.
std::string csv_field(const std::string& s);

enum class ReportFormat { text, json, csv };

// Parses "text" | "json" | "csv"; throws std::invalid_argument otherwise.
ReportFormat parse_report_format(const std::string& name);

// Stable sort by identity_id; emission order breaks ties.
void sort_reports(std::vector<VerificationReport>& reports);

std::string render_reports(const std::vector<VerificationReport>& reports,
                           ReportFormat format);

}  // namespace norlund
