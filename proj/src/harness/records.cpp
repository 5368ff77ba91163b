#include "curvcheck/harness/records.hpp"

#include <cstdio>

namespace curvcheck::harness {

std::string verdict_label(sosc::Status status, sosc::ErrorReason reason) {
  if (status != sosc::Status::Error) return std::string(sosc::to_string(status));
  return "Error:" + std::string(sosc::to_string(reason));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_csv_row(std::ostream& out, const TrialRecord& r) {
  out << r.seed << ',' << r.N << ',' << r.M << ',' << r.P << ',' << problems::to_string(r.conditioning) << ','
      << sosc::to_string(r.method) << ',' << verdict_label(r.status, r.reason) << ',';
  if (r.truth) out << (*r.truth ? "true" : "false");
  out << ',';
  if (r.truth) out << (r.agree() ? "true" : "false");
  out << ',' << format_double(r.wall_time_s) << ',' << r.operator_products << ',' << r.continuations << ',';
  if (r.fail_step) out << *r.fail_step;
  out << "\r\n";
}

void write_csv_row(std::ostream& out, const ThomsonRecord& r) {
  out << r.K << ',' << r.N << ',' << r.M << ',' << sosc::to_string(r.method) << ','
      << verdict_label(r.status, r.reason) << ',' << format_double(r.energy) << ',' << format_double(r.fonc_residual)
      << ',' << format_double(r.wall_time_s) << ',' << r.operator_products << ',' << r.continuations << ',';
  if (r.fail_step) out << *r.fail_step;
  out << ',' << csv_field(r.solver_error) << "\r\n";
}

}  // namespace curvcheck::harness
