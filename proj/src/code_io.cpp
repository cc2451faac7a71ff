#include "twodist/code_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <regex>

namespace twodist {

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Code read_code(std::istream& in) {
  static const std::regex header(R"(q=(\d+)\s+n=(\d+))");
  std::string raw;
  int line_no = 0;
  int q = 0;
  int n = 0;
  bool have_header = false;
  std::vector<Word> words;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      std::smatch m;
      if (!std::regex_match(line, m, header)) throw ParseError(line_no, "expected header 'q=<int> n=<int>'");
      q = std::stoi(m[1]);
      n = std::stoi(m[2]);
      if (q < 2 || q > 9) throw ParseError(line_no, "q must be in [2, 9] for digit-string codewords");
      if (n < 1) throw ParseError(line_no, "n must be >= 1");
      have_header = true;
      continue;
    }
    if (static_cast<int>(line.size()) != n)
      throw ParseError(line_no, "codeword has length " + std::to_string(line.size()) + ", expected " +
                                    std::to_string(n));
    Word w(line.size());
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (c < '0' || c - '0' >= q) throw ParseError(line_no, std::string("invalid symbol '") + c + "'");
      w[i] = static_cast<Symbol>(c - '0');
    }
    words.push_back(std::move(w));
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (words.empty()) throw ParseError(line_no, "code has no words");
  try {
    return Code(q, n, std::move(words));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

Code read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_code(in);
}

void write_code(std::ostream& out, const Code& code) {
  if (code.q() > 9) throw std::invalid_argument("write_code: q > 9 cannot be written as digit strings");
  out << "q=" << code.q() << " n=" << code.n() << "\n";
  for (const auto& w : code.words()) {
    for (Symbol s : w) out << static_cast<char>('0' + s);
    out << "\n";
  }
}

void write_code_file(const std::string& path, const Code& code) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_code(out, code);
}

}  // namespace twodist
