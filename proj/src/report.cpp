#include "qparity/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace qparity {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    else q += c;
  }
  q += "\"";
  return q;
}

void write_csv_rows(std::ostream& os, const ReportTable& t) {
  for (size_t i = 0; i < t.header.size(); ++i)
    os << (i ? "," : "") << csv_escape(t.header[i]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << csv_escape(row[i]);
    os << "\n";
  }
}

}  // namespace

std::string float_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_table_csv(std::ostream& os, const ReportTable& t) {
  write_csv_rows(os, t);
}

void write_report_csv(std::ostream& os, const RunReport& r) {
  os << "# command: " << r.command << "\n";
  for (const auto& [k, v] : r.params) os << "# param " << k << ": " << v << "\n";
  if (!r.results.empty()) {
    os << "key,value\n";
    for (const auto& [k, v] : r.results)
      os << csv_escape(k) << "," << csv_escape(v) << "\n";
  }
  for (const auto& t : r.tables) {
    os << "# table: " << t.name << "\n";
    write_csv_rows(os, t);
  }
  os << "# verdict: " << r.verdict << "\n";
}

void write_report_json(std::ostream& os, const RunReport& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.results) results[k] = v;
  j["results"] = results;
  j["tables"] = nlohmann::ordered_json::array();
  for (const auto& t : r.tables) {
    nlohmann::ordered_json jt;
    jt["name"] = t.name;
    jt["header"] = t.header;
    jt["rows"] = t.rows;
    j["tables"].push_back(jt);
  }
  j["verdict"] = r.verdict;
  os << j.dump(2) << "\n";
}

}  // namespace qparity
