#include "fgpair/pairio.hpp"

#include <fstream>
#include <sstream>

#include "fgpair/expr.hpp"

namespace fg {

std::string serialize_pair(const FGPair& p) {
  std::ostringstream os;
  os << "pair " << p.name << "\n";
  os << "spectral " << sym_name(p.spectral) << "\n";
  os << "size " << p.size() << "\n";
  if (p.alpha_formula) os << "alpha " << print_ratfunc(*p.alpha_formula) << "\n";
  for (auto& [s, v] : p.table.constraints())
    os << "constraint " << sym_name(s) << " -> " << print_ratfunc(v) << "\n";
  auto mat = [&](const char* tag, const MatrixRat& m) {
    os << tag << "\n";
    for (int i = 0; i < m.size(); ++i) {
      for (int j = 0; j < m.size(); ++j) {
        if (j) os << " | ";
        os << print_ratfunc(m.at(i, j));
      }
      os << "\n";
    }
  };
  mat("L", p.L);
  mat("R", p.R);
  mat("T1", p.T1);
  mat("T0", p.T0);
  os << "table\n";
  for (auto& [s, r] : p.table.rules())
    os << sym_name(s) << " -> " << print_ratfunc(r) << "\n";
  os << "end\n";
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

struct LineReader {
  std::istringstream in;
  explicit LineReader(std::string_view text) : in(std::string(text)) {}
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (!line.empty()) {
        out = line;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

FGPair parse_pair(std::string_view text) {
  LineReader rd(text);
  FGPair p;
  std::string line;
  int n = 0;
  auto expect_prefix = [&](const std::string& l, const std::string& pfx) {
    if (l.rfind(pfx, 0) != 0) throw Error(Err::ParseError, "pair file: expected '" + pfx + "', got '" + l + "'");
    return trim(l.substr(pfx.size()));
  };
  if (!rd.next(line)) throw Error(Err::ParseError, "pair file: empty");
  p.name = expect_prefix(line, "pair ");
  if (!rd.next(line)) throw Error(Err::ParseError, "pair file: truncated");
  p.spectral = sym(expect_prefix(line, "spectral "));
  if (!rd.next(line)) throw Error(Err::ParseError, "pair file: truncated");
  n = std::stoi(expect_prefix(line, "size "));

  auto read_matrix = [&](MatrixRat& m) {
    m = MatrixRat(n);
    for (int i = 0; i < n; ++i) {
      if (!rd.next(line)) throw Error(Err::ParseError, "pair file: matrix truncated");
      std::vector<std::string> cells;
      size_t start = 0;
      for (;;) {
        size_t bar = line.find('|', start);
        cells.push_back(trim(bar == std::string::npos ? line.substr(start) : line.substr(start, bar - start)));
        if (bar == std::string::npos) break;
        start = bar + 1;
      }
      if (int(cells.size()) != n) throw Error(Err::ParseError, "pair file: wrong row width");
      for (int j = 0; j < n; ++j) m.at(i, j) = parse_ratfunc(cells[j]);
    }
  };

  if (!rd.next(line)) throw Error(Err::ParseError, "pair file: truncated");
  while (line.rfind("alpha", 0) == 0 || line.rfind("constraint", 0) == 0) {
    if (line.rfind("alpha", 0) == 0) {
      p.alpha_formula = parse_ratfunc(expect_prefix(line, "alpha "));
    } else {
      std::string body = expect_prefix(line, "constraint ");
      auto arrow = body.find("->");
      if (arrow == std::string::npos) throw Error(Err::ParseError, "pair file: malformed constraint");
      p.table.constrain(sym(trim(body.substr(0, arrow))), parse_ratfunc(body.substr(arrow + 2)));
    }
    if (!rd.next(line)) throw Error(Err::ParseError, "pair file: truncated");
  }
  if (line != "L") throw Error(Err::ParseError, "pair file: expected L");
  read_matrix(p.L);
  if (!rd.next(line) || line != "R") throw Error(Err::ParseError, "pair file: expected R");
  read_matrix(p.R);
  if (!rd.next(line) || line != "T1") throw Error(Err::ParseError, "pair file: expected T1");
  read_matrix(p.T1);
  if (!rd.next(line) || line != "T0") throw Error(Err::ParseError, "pair file: expected T0");
  read_matrix(p.T0);
  if (!rd.next(line) || line != "table") throw Error(Err::ParseError, "pair file: expected table");
  while (rd.next(line) && line != "end") {
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw Error(Err::ParseError, "pair file: malformed rule");
    p.table.set(sym(trim(line.substr(0, arrow))), parse_ratfunc(line.substr(arrow + 2)));
  }
  return p;
}

FGPair load_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_pair(ss.str());
}

void save_pair_file(const FGPair& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Err::ParseError, "cannot write " + path);
  out << serialize_pair(p);
}

}  // namespace fg
