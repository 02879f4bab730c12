#include "qparity/series_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qparity {

namespace {
std::string strip(const std::string& line) {
  std::string s = line;
  const size_t hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  const size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}
}  // namespace

TruncatedSeries read_sparse_series(std::istream& in) {
  std::string line;
  int order = -1;
  long lineno = 0;
  // Header: first significant line must be "order: N".
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = strip(line);
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string key;
    ls >> key;
    if (key != "order:")
      throw std::runtime_error("sparse series: expected 'order: N' header");
    if (!(ls >> order) || order < 0)
      throw std::runtime_error("sparse series: bad order value");
    break;
  }
  if (order < 0) throw std::runtime_error("sparse series: missing header");

  TruncatedSeries s(3, order);
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = strip(line);
    if (t.empty()) continue;
    std::istringstream ls(t);
    int a, b, c;
    std::string frac;
    if (!(ls >> a >> b >> c >> frac))
      throw std::runtime_error("sparse series: malformed line " +
                               std::to_string(lineno));
    std::string extra;
    if (ls >> extra)
      throw std::runtime_error("sparse series: trailing tokens on line " +
                               std::to_string(lineno));
    if (a < 0 || b < 0 || c < 0 || a > order || b > order || c > order)
      throw std::runtime_error("sparse series: exponent outside box on line " +
                               std::to_string(lineno));
    s.set_coeff({a, b, c}, BigRational::from_string(frac));
  }
  return s;
}

TruncatedSeries read_sparse_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open series file: " + path);
  return read_sparse_series(in);
}

void write_sparse_series(std::ostream& out, const TruncatedSeries& s) {
  if (s.arity() != 3)
    throw std::invalid_argument("write_sparse_series: expected 3 variables");
  out << "order: " << s.order() << "\n";
  for (int a = 0; a <= s.order(); ++a)
    for (int b = 0; b <= s.order(); ++b)
      for (int c = 0; c <= s.order(); ++c) {
        const BigRational& v = s.coeff(a, b, c);
        if (v.is_zero()) continue;
        out << a << " " << b << " " << c << " " << v.str() << "\n";
      }
}

}  // namespace qparity
