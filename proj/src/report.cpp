#include "infogeo/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "infogeo/errors.hpp"

namespace infogeo {

using nlohmann::ordered_json;

namespace {

std::string join_coords(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += format_double(v[i]);
  }
  return s;
}

// Quotes a CSV cell when it contains a separator or a quote.
std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json header(const VerificationReport& r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.config.seed;
  j["config"] = config_to_json(r.config);
  return j;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string render_summary(const VerificationReport& r, OutputFormat f) {
  if (f == OutputFormat::csv) {
    std::ostringstream os;
    os << "suite,check_id,points,failures,max_deviation,tolerance,pass\n";
    for (const auto& s : r.summaries)
      os << csv_cell(r.suite) << ',' << csv_cell(s.check_id) << ',' << s.points << ',' << s.failures << ','
         << format_double(s.max_deviation) << ',' << format_double(s.tolerance) << ','
         << (s.passed() ? "true" : "false") << '\n';
    return os.str();
  }
  ordered_json j = header(r);
  ordered_json checks = ordered_json::array();
  for (const auto& s : r.summaries) {
    ordered_json c;
    c["check_id"] = s.check_id;
    c["description"] = s.description;
    c["points"] = s.points;
    c["failures"] = s.failures;
    c["max_deviation"] = s.max_deviation;
    c["tolerance"] = s.tolerance;
    c["pass"] = s.passed();
    checks.push_back(c);
  }
  j["checks"] = checks;
  j["passed"] = r.passed();
  return j.dump(2) + "\n";
}

std::string render_rows(const VerificationReport& r, OutputFormat f) {
  if (f == OutputFormat::csv) {
    std::ostringstream os;
    os << "suite,check_id,point_index,coordinates,deviation,tolerance,pass\n";
    for (const auto& row : r.rows)
      os << csv_cell(r.suite) << ',' << csv_cell(row.check_id) << ',' << row.point_index << ','
         << join_coords(row.coordinates) << ',' << format_double(row.deviation) << ',' << format_double(row.tolerance)
         << ',' << (row.pass ? "true" : "false") << '\n';
    return os.str();
  }
  ordered_json j = header(r);
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json c;
    c["check_id"] = row.check_id;
    c["point_index"] = row.point_index;
    c["coordinates"] = row.coordinates;
    c["deviation"] = row.deviation;
    c["tolerance"] = row.tolerance;
    c["pass"] = row.pass;
    rows.push_back(c);
  }
  j["rows"] = rows;
  j["passed"] = r.passed();
  return j.dump(2) + "\n";
}

std::string render_tensor(const ordered_json& dump, OutputFormat f) {
  if (f == OutputFormat::json) return dump.dump(2) + "\n";
  std::ostringstream os;
  os << "tensor,row,col,row_label,col_label,value\n";
  for (const auto& [name, t] : dump.at("tensors").items()) {
    const auto& labels = t.at("labels");
    const auto& comps = t.at("components");
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t k = 0; k < comps[i].size(); ++k)
        os << name << ',' << i << ',' << k << ',' << csv_cell(labels[i].get<std::string>()) << ','
           << csv_cell(labels[k].get<std::string>()) << ',' << format_double(comps[i][k].get<double>()) << '\n';
  }
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.close();
  if (!out) throw IoError("failed to write '" + path + "'");
}

}  // namespace infogeo
