#include "fgpair/num/report.hpp"

#include <sstream>

namespace fg::num {

bool Report::all_pass() const {
  for (auto& r : records)
    if (!r.pass) return false;
  return true;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string unquote(const std::string& s, size_t& pos) {
  if (pos >= s.size() || s[pos] != '"') throw Error(Err::ParseError, "report: expected quote");
  ++pos;
  std::string out;
  while (pos < s.size() && s[pos] != '"') {
    if (s[pos] == '\\') ++pos;
    out.push_back(s[pos++]);
  }
  if (pos >= s.size()) throw Error(Err::ParseError, "report: unterminated string");
  ++pos;
  return out;
}

}  // namespace

std::string Report::serialize(bool with_timing) const {
  std::ostringstream os;
  os << "fgpair-report v" << kSchemaVersion << "\n";
  os << "command: " << command << "\n";
  for (auto& r : records) {
    os << "check: name=" << quote(r.name) << " kind=" << r.kind
       << " status=" << (r.pass ? "PASS" : "FAIL") << " residual=" << r.residual;
    if (!r.note.empty()) os << " note=" << quote(r.note);
    if (with_timing) os << " time=" << r.seconds;
    os << "\n";
  }
  os << "result: " << (all_pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

Report Report::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Report rep;
  if (!std::getline(in, line) || line.rfind("fgpair-report v", 0) != 0)
    throw Error(Err::ParseError, "report: bad header");
  while (std::getline(in, line)) {
    if (line.rfind("command: ", 0) == 0) {
      rep.command = line.substr(9);
    } else if (line.rfind("check: ", 0) == 0) {
      CheckRecord r;
      size_t pos = 7;
      auto field = [&](const std::string& key) -> std::string {
        auto at = line.find(key + "=", pos);
        if (at == std::string::npos) return "";
        size_t p = at + key.size() + 1;
        if (line[p] == '"') return unquote(line, p);
        auto end = line.find(' ', p);
        return line.substr(p, end == std::string::npos ? std::string::npos : end - p);
      };
      r.name = field("name");
      r.kind = field("kind");
      r.pass = field("status") == "PASS";
      r.residual = field("residual");
      r.note = field("note");
      std::string t = field("time");
      if (!t.empty()) r.seconds = std::stod(t);
      rep.records.push_back(std::move(r));
    }
  }
  return rep;
}

}  // namespace fg::num
