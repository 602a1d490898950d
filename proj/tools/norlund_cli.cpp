#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "norlund/density.hpp"
#include "norlund/exact.hpp"
#include "norlund/report.hpp"
#include "norlund/verify.hpp"

namespace {

using namespace norlund;

// --------------------------------------------------------------------------
// generic value table (compute / density / table output)
// --------------------------------------------------------------------------

struct Cell {
  enum class Kind { integer, real, text };
  Kind kind = Kind::text;
  long long i = 0;
  double x = 0.0;
  std::string s;
};

Cell cell(long long v) { return {Cell::Kind::integer, v, 0.0, {}}; }
Cell cell(int v) { return cell(static_cast<long long>(v)); }
Cell cell(double v) { return {Cell::Kind::real, 0, v, {}}; }
Cell cell(std::string v) { return {Cell::Kind::text, 0, 0.0, std::move(v)}; }

struct ValueTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_plain(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::integer: return std::to_string(c.i);
    case Cell::Kind::real: return format_double(c.x);
    case Cell::Kind::text: return c.s;
  }
  return {};
}

std::string render_table_text(const ValueTable& t) {
  std::vector<size_t> width(t.columns.size());
  for (size_t j = 0; j < t.columns.size(); ++j) width[j] = t.columns[j].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : t.rows) {
    std::vector<std::string> r;
    for (size_t j = 0; j < row.size(); ++j) {
      r.push_back(cell_plain(row[j]));
      width[j] = std::max(width[j], r.back().size());
    }
    cells.push_back(std::move(r));
  }
  std::string out;
  auto line = [&](const std::vector<std::string>& r) {
    for (size_t j = 0; j < r.size(); ++j) {
      out += r[j];
      if (j + 1 < r.size()) out += std::string(width[j] - r[j].size() + 2, ' ');
    }
    out += '\n';
  };
  line(t.columns);
  for (const auto& r : cells) line(r);
  return out;
}

std::string render_table_json(const ValueTable& t) {
  std::string out = "[\n";
  for (size_t k = 0; k < t.rows.size(); ++k) {
    out += "  {";
    for (size_t j = 0; j < t.rows[k].size(); ++j) {
      if (j) out += ", ";
      out += "\"" + json_escape(t.columns[j]) + "\": ";
      const Cell& c = t.rows[k][j];
      switch (c.kind) {
        case Cell::Kind::integer: out += std::to_string(c.i); break;
        case Cell::Kind::real: out += format_double(c.x); break;
        case Cell::Kind::text: out += "\"" + json_escape(c.s) + "\""; break;
      }
    }
    out += k + 1 < t.rows.size() ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

std::string render_table_csv(const ValueTable& t) {
  std::string out;
  for (size_t j = 0; j < t.columns.size(); ++j) {
    if (j) out += ',';
    out += csv_field(t.columns[j]);
  }
  out += "\r\n";
  for (const auto& row : t.rows) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += csv_field(cell_plain(row[j]));
    }
    out += "\r\n";
  }
  return out;
}

std::string render_table(const ValueTable& t, ReportFormat f) {
  switch (f) {
    case ReportFormat::text: return render_table_text(t);
    case ReportFormat::json: return render_table_json(t);
    case ReportFormat::csv: return render_table_csv(t);
  }
  return {};
}

// --------------------------------------------------------------------------
// plumbing
// --------------------------------------------------------------------------

int emit(const std::string& rendered, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << rendered;
    return 0;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << output_path << "\n";
    return 2;
  }
  f << rendered;
  return f.good() ? 0 : 2;
}

// Strict positive-double parse: the whole string must be consumed.
std::optional<double> parse_strict_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  if (!std::isfinite(v) || v <= 0.0) return std::nullopt;
  return v;
}

struct CliUsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --------------------------------------------------------------------------
// subcommand handlers
// --------------------------------------------------------------------------

int run_compute(const std::string& kind, int n_max, const std::string& alpha_text,
                std::optional<int> ell, ReportFormat format,
                const std::string& output_path) {
  bool has_order = !alpha_text.empty() || ell.has_value();
  if (!alpha_text.empty() && ell.has_value())
    throw CliUsageError("give at most one of --alpha and --ell");
  Rational alpha;
  if (!alpha_text.empty()) alpha = rational_from_string(alpha_text);
  if (ell) alpha = Rational(*ell);

  ValueTable t;
  if (kind == "bernoulli") {
    if (has_order)
      throw CliUsageError("compute bernoulli takes no order parameter");
    t.columns = {"n", "value"};
    for (int n = 0; n <= n_max; ++n)
      t.rows.push_back({cell(n), cell(to_string(bernoulli_number(n)))});
  } else if (kind == "norlund") {
    if (has_order) {
      t.columns = {"n", "value"};
      for (int n = 0; n <= n_max; ++n)
        t.rows.push_back({cell(n), cell(to_string(norlund_value(n, alpha)))});
    } else {
      t.columns = {"n", "polynomial"};
      for (int n = 0; n <= n_max; ++n)
        t.rows.push_back({cell(n), cell(poly_to_string(norlund_poly(n), "alpha"))});
    }
  } else {  // modified
    if (!has_order)
      throw CliUsageError("compute modified needs --ell or --alpha");
    if (n_max < 1)
      throw CliUsageError("compute modified starts at n = 1; give --n >= 1");
    t.columns = {"n", "value"};
    for (int n = 1; n <= n_max; ++n)
      t.rows.push_back({cell(n), cell(to_string(modified_norlund(n, alpha)))});
  }
  return emit(render_table(t, format), output_path);
}

DensityMethod parse_method(const std::string& name) {
  if (name == "closed_form") return DensityMethod::closed_form;
  if (name == "recurrence") return DensityMethod::recurrence;
  if (name == "fourier") return DensityMethod::fourier;
  if (name == "barnes_zeta") return DensityMethod::barnes_zeta;
  if (name == "convolution_oracle") return DensityMethod::convolution_oracle;
  throw CliUsageError("unknown density method: " + name);
}

bool method_is_quadrature(DensityMethod m) {
  return m == DensityMethod::fourier || m == DensityMethod::convolution_oracle;
}

int run_density(const std::vector<int>& ells, const std::vector<double>& xs,
                const std::string& method_name, ReportFormat format,
                const std::string& output_path) {
  DensityMethod method = parse_method(method_name);
  bool with_error = method_is_quadrature(method);
  ValueTable t;
  t.columns = with_error
                  ? std::vector<std::string>{"ell", "x", "value", "error_estimate"}
                  : std::vector<std::string>{"ell", "x", "value"};
  for (int ell : ells) {
    for (double x : xs) {
      QuadResult r = density_result(ell, x, method);
      std::vector<Cell> row = {cell(ell), cell(x), cell(r.value)};
      if (with_error) row.push_back(cell(r.error_estimate));
      t.rows.push_back(std::move(row));
    }
  }
  return emit(render_table(t, format), output_path);
}

int run_table(const std::vector<int>& ells, double x_min, double x_max, int steps,
              const std::string& method_name, ReportFormat format,
              const std::string& output_path) {
  DensityMethod method = parse_method(method_name);
  if (x_max < x_min) throw CliUsageError("--x-max must be >= --x-min");
  if (steps < 2 && x_max != x_min)
    throw CliUsageError("--steps must be >= 2 for a nontrivial range");
  ValueTable t;
  t.columns = {"x"};
  for (int ell : ells) t.columns.push_back("rho_" + std::to_string(ell));
  for (int i = 0; i < steps; ++i) {
    double x = steps == 1 ? x_min
                          : x_min + (x_max - x_min) * i / double(steps - 1);
    std::vector<Cell> row = {cell(x)};
    for (int ell : ells) row.push_back(cell(density(ell, x, method)));
    t.rows.push_back(std::move(row));
  }
  return emit(render_table(t, format), output_path);
}

int run_verify(bool list, const std::vector<std::string>& ids,
               const std::vector<std::string>& tol_specs, std::optional<int> ell,
               const std::vector<double>& xs, ReportFormat format,
               const std::string& output_path) {
  if (list) {
    ValueTable t;
    t.columns = {"id", "description"};
    for (const auto& id : verifier_ids())
      t.rows.push_back({cell(id), cell(verifier_description(id))});
    return emit(render_table(t, format), output_path);
  }

  VerifyOptions opts;
  opts.ell = ell;
  opts.xs = xs;

  if (const char* env = std::getenv("NORLUND_TOLERANCE_SCALE")) {
    auto v = parse_strict_double(env);
    if (!v)
      throw CliUsageError(
          std::string("NORLUND_TOLERANCE_SCALE must be a positive number, got \"") +
          env + "\"");
    opts.tolerance_scale = *v;
  }

  for (const auto& entry : tol_specs) {
    auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= entry.size())
      throw CliUsageError("--tol expects id=value, got \"" + entry + "\"");
    std::string id = entry.substr(0, eq);
    verifier_description(id);  // throws on unknown id
    auto v = parse_strict_double(entry.substr(eq + 1));
    if (!v)
      throw CliUsageError("--tol " + id + ": value must be a positive number");
    opts.tolerance_overrides[id] = *v;
  }

  auto reports = run_suite(ids, opts);
  int rc = emit(render_reports(reports, format), output_path);
  if (rc != 0) return rc;
  for (const auto& r : reports)
    if (!r.passed) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact Bernoulli-type tables, hyperbolic-secant convolution densities, "
      "and numeric verification of their identities"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format_name = "text";
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  std::string output_path;
  app.add_option("--output", output_path, "write output to this file");

  auto* compute = app.add_subcommand(
      "compute", "exact tables: Bernoulli numbers, order polynomials, "
                 "modified binomial transforms");
  std::string kind;
  compute->add_option("kind", kind, "bernoulli | norlund | modified")
      ->required()
      ->check(CLI::IsMember({"bernoulli", "norlund", "modified"}));
  int n_max = 0;
  compute->add_option("--n", n_max, "largest order to tabulate")
      ->required()
      ->check(CLI::Range(0, 200));
  std::string alpha_text;
  compute->add_option("--alpha", alpha_text,
                      "rational order parameter, e.g. 1/2 (exact)");
  std::optional<int> compute_ell;
  compute->add_option("--ell", compute_ell, "integer order parameter");

  auto* density_cmd =
      app.add_subcommand("density", "evaluate the convolution densities rho_ell");
  std::vector<int> density_ells;
  density_cmd->add_option("--ell", density_ells, "convolution order (repeatable)")
      ->required()
      ->check(CLI::PositiveNumber);
  std::vector<double> density_xs;
  density_cmd->add_option("--x", density_xs, "evaluation point (repeatable)")
      ->required();
  std::string density_method = "closed_form";
  density_cmd
      ->add_option("--method", density_method,
                   "closed_form | recurrence | fourier | barnes_zeta | "
                   "convolution_oracle")
      ->capture_default_str();

  auto* table =
      app.add_subcommand("table", "density values on a uniform grid, one "
                                  "column per order (plot-ready)");
  std::vector<int> table_ells;
  table->add_option("--ell", table_ells, "convolution order (repeatable)")
      ->required()
      ->check(CLI::PositiveNumber);
  double x_min = 0.0, x_max = 0.0;
  table->add_option("--x-min", x_min, "grid start")->required();
  table->add_option("--x-max", x_max, "grid end")->required();
  int steps = 2;
  table->add_option("--steps", steps, "number of grid points")
      ->required()
      ->check(CLI::Range(1, 100000));
  std::string table_method = "closed_form";
  table->add_option("--method", table_method, "evaluation route")
      ->capture_default_str();

  auto* verify = app.add_subcommand(
      "verify", "run identity checks and report pass/fail with residuals");
  bool list = false;
  verify->add_flag("--list", list, "list the registered identity ids and exit");
  std::string suite;
  auto* suite_opt = verify->add_option("--suite", suite, "'all' runs every check")
                        ->check(CLI::IsMember({"all"}));
  std::vector<std::string> verify_ids_opt;
  auto* id_opt =
      verify->add_option("--id", verify_ids_opt, "identity id (repeatable)");
  suite_opt->excludes(id_opt);
  std::optional<int> verify_ell;
  verify->add_option("--ell", verify_ell,
                     "restrict checks to this order where applicable");
  std::vector<double> verify_xs;
  verify->add_option("--x", verify_xs,
                     "override evaluation points where applicable (repeatable)");
  std::vector<std::string> tol_specs;
  verify->add_option("--tol", tol_specs,
                     "per-identity tolerance override, id=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    ReportFormat format = parse_report_format(format_name);
    if (compute->parsed())
      return run_compute(kind, n_max, alpha_text, compute_ell, format, output_path);
    if (density_cmd->parsed())
      return run_density(density_ells, density_xs, density_method, format,
                         output_path);
    if (table->parsed())
      return run_table(table_ells, x_min, x_max, steps, table_method, format,
                       output_path);
    // verify
    return run_verify(list, verify_ids_opt, tol_specs, verify_ell, verify_xs,
                      format, output_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
