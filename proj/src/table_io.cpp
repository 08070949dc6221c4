#include "sgh/table_io.hpp"

#include <fstream>
#include <sstream>

#include "sgh/error.hpp"

namespace sgh {

SemigroupTable parse_table(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<long long> tokens;
  while (std::getline(in, line)) {
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    std::istringstream ls(line.substr(first));
    std::string tok;
    while (ls >> tok) {
      try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) {
          throw ParseError("bad token '" + tok + "'");
        }
        tokens.push_back(v);
      } catch (const ParseError&) {
        throw;
      } catch (...) {
        throw ParseError("bad token '" + tok + "'");
      }
    }
  }
  if (tokens.empty()) {
    throw ParseError("empty input");
  }
  long long n = tokens[0];
  if (n < 1 || n > 100000) {
    throw ParseError("bad order " + std::to_string(n));
  }
  if (static_cast<long long>(tokens.size()) != 1 + n * n) {
    throw ParseError("expected " + std::to_string(n * n)
                     + " entries, got " + std::to_string(tokens.size() - 1));
  }
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (size_t i = 1; i < tokens.size(); ++i) {
    if (tokens[i] < 0 || tokens[i] >= n) {
      throw EntryOutOfRange("entry " + std::to_string(tokens[i])
                            + " outside [0, " + std::to_string(n) + ")");
    }
    flat.push_back(static_cast<int>(tokens[i]));
  }
  return validate_table_flat(static_cast<int>(n), flat);
}

std::string format_table(const SemigroupTable& s) {
  std::ostringstream out;
  const int n = s.order();
  out << n << "\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      out << (b ? " " : "") << s.at(a, b);
    }
    out << "\n";
  }
  return out.str();
}

SemigroupTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str());
}

}  // namespace sgh
