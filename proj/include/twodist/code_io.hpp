#pragma once

#include "twodist/core.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace twodist {

/// Raised for malformed code files; the message carries the line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Code file format:
//   q=<int> n=<int>
//   <one codeword per line, base-q digits, length n>
// Lines starting with '#' are comments; blank lines are skipped. q <= 9.
Code read_code(std::istream& in);
Code read_code_file(const std::string& path);
void write_code(std::ostream& out, const Code& code);
void write_code_file(const std::string& path, const Code& code);

}  // namespace twodist
