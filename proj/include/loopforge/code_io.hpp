#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "loopforge/code.hpp"
#include "loopforge/error.hpp"

namespace loopforge {

// Code file layout:
//   m=<int> n=<int>
//   <generator 1>
//   ...
//   <generator n>
// A generator is a comma-separated list of 1-based positions ("1,2,3,4";
// runs "1-8" are also read) or a bitstring "b:0110..." of length m.
// Blank lines and lines starting with '#' are skipped.

inline BinaryCodeBasis parse_code(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      auto t = detail::trim(line);
      if (t.empty() || t.front() == '#') continue;
      lines.emplace_back(t);
    }
  }
  if (lines.empty()) throw Error(ErrorKind::Parse, "empty code file");

  int m = -1;
  int n = -1;
  {
    std::istringstream header(lines.front());
    std::string field;
    while (header >> field) {
      auto eq = field.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::Parse, "bad header field '" + field + "'");
      auto key = field.substr(0, eq);
      int value = detail::parse_int(std::string_view(field).substr(eq + 1));
      if (key == "m") {
        m = value;
      } else if (key == "n") {
        n = value;
      } else {
        throw Error(ErrorKind::Parse, "unknown header key '" + key + "'");
      }
    }
  }
  if (m < 1 || n < 1) throw Error(ErrorKind::Parse, "header must be 'm=<int> n=<int>'");
  if (static_cast<int>(lines.size()) - 1 != n)
    throw Error(ErrorKind::Parse, "expected " + std::to_string(n) + " generators, found " +
                                      std::to_string(lines.size() - 1));

  std::vector<PositionSet> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (line.starts_with("b:")) {
      auto bits = line.substr(2);
      if (static_cast<int>(bits.size()) != m)
        throw Error(ErrorKind::Parse, "bitstring length " + std::to_string(bits.size()) + " != m");
      PositionSet g;
      for (std::size_t p = 0; p < bits.size(); ++p) {
        if (bits[p] == '1') {
          g.insert(static_cast<int>(p) + 1);
        } else if (bits[p] != '0') {
          throw Error(ErrorKind::Parse, "bitstring may contain only 0 and 1");
        }
      }
      gens.push_back(g);
    } else {
      gens.push_back(parse_positions(line));
    }
  }
  return BinaryCodeBasis(m, std::move(gens));
}

inline BinaryCodeBasis read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_code(buf.str());
}

inline std::string format_code(const BinaryCodeBasis& basis) {
  std::string out = "m=" + std::to_string(basis.length()) + " n=" + std::to_string(basis.rank()) + "\n";
  for (const auto& g : basis.generators()) out += format_positions(g) + "\n";
  return out;
}

/// One line per generator, "{1,2,3}", used as the canonical serialization.
inline std::string serialize_generators(const BinaryCodeBasis& basis) {
  std::string out;
  for (const auto& g : basis.generators()) out += "{" + format_positions(g) + "}\n";
  return out;
}

}  // namespace loopforge
