#include "norlund/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace norlund {

Param param(std::string name, int value) {
  Param p;
  p.name = std::move(name);
  p.kind = Param::Kind::integer;
  p.i = value;
  return p;
}

Param param(std::string name, double value) {
  Param p;
  p.name = std::move(name);
  p.kind = Param::Kind::real;
  p.x = value;
  return p;
}

Param param(std::string name, std::string value) {
  Param p;
  p.name = std::move(name);
  p.kind = Param::Kind::text;
  p.s = std::move(value);
  return p;
}

VerificationReport make_numeric_report(std::string id, std::vector<Param> params,
                                       double lhs, double rhs, double tolerance,
                                       std::vector<double> quadrature_errors,
                                       std::string notes) {
  VerificationReport r;
  r.identity_id = std::move(id);
  r.parameters = std::move(params);
  r.lhs = ReportValue::num(lhs);
  r.rhs = ReportValue::num(rhs);
  r.residual = std::abs(lhs - rhs);
  r.tolerance = tolerance;
  r.quadrature_errors = std::move(quadrature_errors);
  r.notes = std::move(notes);
  bool quad_ok = true;
  for (double e : r.quadrature_errors)
    if (!(e <= tolerance / 2.0)) quad_ok = false;
  r.passed = (r.residual <= tolerance) && quad_ok && std::isfinite(r.residual);
  return r;
}

VerificationReport make_exact_report(std::string id, std::vector<Param> params,
                                     std::string lhs, std::string rhs, bool equal,
                                     std::string notes) {
  VerificationReport r;
  r.identity_id = std::move(id);
  r.parameters = std::move(params);
  r.lhs = ReportValue::sym(std::move(lhs));
  r.rhs = ReportValue::sym(std::move(rhs));
  r.residual = equal ? 0.0 : 1.0;
  r.tolerance = 0.0;
  r.passed = equal;
  r.notes = std::move(notes);
  return r;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // guard against a non-C numeric locale leaking into the output
  for (char* p = buf; *p; ++p)
    if (*p == ',') *p = '.';
  return buf;
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown report format: " + name);
}

void sort_reports(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const VerificationReport& a, const VerificationReport& b) {
                     return a.identity_id < b.identity_id;
                   });
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

namespace {

std::string param_value_string(const Param& p) {
  switch (p.kind) {
    case Param::Kind::integer:
      return std::to_string(p.i);
    case Param::Kind::real:
      return format_double(p.x);
    case Param::Kind::text:
      return p.s;
  }
  return {};
}

// JSON has no literal for non-finite numbers; fall back to a string.
std::string json_number(double v) {
  if (!std::isfinite(v)) return "\"" + format_double(v) + "\"";
  return format_double(v);
}

std::string json_value(const ReportValue& v) {
  if (v.is_text) return "\"" + json_escape(v.text) + "\"";
  return json_number(v.number);
}

std::string render_json(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "[\n";
  for (size_t k = 0; k < reports.size(); ++k) {
    const VerificationReport& r = reports[k];
    os << "  {\n";
    os << "    \"identity_id\": \"" << json_escape(r.identity_id) << "\",\n";
    os << "    \"parameters\": {";
    for (size_t j = 0; j < r.parameters.size(); ++j) {
      const Param& p = r.parameters[j];
      if (j) os << ", ";
      os << "\"" << json_escape(p.name) << "\": ";
      if (p.kind == Param::Kind::text)
        os << "\"" << json_escape(p.s) << "\"";
      else if (p.kind == Param::Kind::integer)
        os << p.i;
      else
        os << json_number(p.x);
    }
    os << "},\n";
    os << "    \"lhs\": " << json_value(r.lhs) << ",\n";
    os << "    \"rhs\": " << json_value(r.rhs) << ",\n";
    os << "    \"residual\": " << json_number(r.residual) << ",\n";
    os << "    \"tolerance\": " << json_number(r.tolerance) << ",\n";
    os << "    \"passed\": " << (r.passed ? "true" : "false") << ",\n";
    os << "    \"notes\": \"" << json_escape(r.notes) << "\",\n";
    os << "    \"quadrature_errors\": [";
    for (size_t j = 0; j < r.quadrature_errors.size(); ++j) {
      if (j) os << ", ";
      os << json_number(r.quadrature_errors[j]);
    }
    os << "]\n";
    os << "  }" << (k + 1 < reports.size() ? "," : "") << "\n";
  }
  os << "]\n";
  return os.str();
}

std::string value_plain(const ReportValue& v) {
  return v.is_text ? v.text : format_double(v.number);
}

std::string render_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "identity_id,parameters,lhs,rhs,residual,tolerance,passed,notes,"
        "quadrature_errors\r\n";
  for (const VerificationReport& r : reports) {
    std::string params;
    for (size_t j = 0; j < r.parameters.size(); ++j) {
      if (j) params += "; ";
      params += r.parameters[j].name + "=" + param_value_string(r.parameters[j]);
    }
    std::string quad;
    for (size_t j = 0; j < r.quadrature_errors.size(); ++j) {
      if (j) quad += "; ";
      quad += format_double(r.quadrature_errors[j]);
    }
    os << csv_field(r.identity_id) << "," << csv_field(params) << ","
       << csv_field(value_plain(r.lhs)) << "," << csv_field(value_plain(r.rhs)) << ","
       << format_double(r.residual) << "," << format_double(r.tolerance) << ","
       << (r.passed ? "true" : "false") << "," << csv_field(r.notes) << ","
       << csv_field(quad) << "\r\n";
  }
  return os.str();
}

std::string render_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  size_t passed = 0;
  for (const VerificationReport& r : reports) {
    os << (r.passed ? "PASS " : "FAIL ") << r.identity_id;
    if (!r.parameters.empty()) {
      os << "  (";
      for (size_t j = 0; j < r.parameters.size(); ++j) {
        if (j) os << ", ";
        os << r.parameters[j].name << "=" << param_value_string(r.parameters[j]);
      }
      os << ")";
    }
    os << "\n";
    os << "  lhs = " << value_plain(r.lhs) << "\n";
    os << "  rhs = " << value_plain(r.rhs) << "\n";
    os << "  residual = " << format_double(r.residual)
       << "  tolerance = " << format_double(r.tolerance) << "\n";
    if (!r.quadrature_errors.empty()) {
      os << "  quadrature error estimates:";
      for (double e : r.quadrature_errors) os << " " << format_double(e);
      os << "\n";
    }
    if (!r.notes.empty()) os << "  notes: " << r.notes << "\n";
    if (r.passed) ++passed;
  }
  os << passed << "/" << reports.size() << " checks passed\n";
  return os.str();
}

}  // namespace

std::string render_reports(const std::vector<VerificationReport>& reports,
                           ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return render_text(reports);
    case ReportFormat::json: return render_json(reports);
    case ReportFormat::csv: return render_csv(reports);
  }
  throw std::logic_error("unhandled report format");
}

}  // namespace norlund
