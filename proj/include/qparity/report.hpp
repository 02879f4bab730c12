#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qparity/rational.hpp"

namespace qparity {

struct ReportTable {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// One command's structured output. Data sections carry no timestamps, so a
/// repeated invocation is byte-identical; exact values are rendered "p/q".
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, std::string>> results;
  std::vector<ReportTable> tables;
  std::string verdict;  // "pass", "fail" or "non-converged"
};

void write_report_csv(std::ostream& os, const RunReport& r);
void write_report_json(std::ostream& os, const RunReport& r);

/// Bare CSV table (header plus rows), no preamble; used by figure1 output.
void write_table_csv(std::ostream& os, const ReportTable& t);

std::string float_str(double v);

}  // namespace qparity
