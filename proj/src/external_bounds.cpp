#include "twodist/bounds.hpp"
#include "twodist/code_io.hpp"

#include <fstream>
#include <istream>
#include <regex>

namespace twodist {

ExternalBounds ExternalBounds::parse(std::istream& in) {
  static const std::regex row(R"(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*)");
  ExternalBounds t;
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    if (!header) {
      if (line != "q,n,d,bound") throw ParseError(line_no, "expected header 'q,n,d,bound'");
      header = true;
      continue;
    }
    std::smatch m;
    if (!std::regex_match(line, m, row)) throw ParseError(line_no, "malformed row '" + line + "'");
    const int q = std::stoi(m[1]);
    const int n = std::stoi(m[2]);
    const int d = std::stoi(m[3]);
    if (q < 2 || n < 1 || d < 1 || d > n) throw ParseError(line_no, "parameters out of range");
    t.set(q, n, d, Int(m[4].str()));
  }
  if (!header) throw ParseError(line_no, "missing header 'q,n,d,bound'");
  return t;
}

ExternalBounds ExternalBounds::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse(in);
}

std::optional<Int> ExternalBounds::lookup(int q, int n, int d) const {
  const auto it = table_.find({q, n, d});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

}  // namespace twodist
