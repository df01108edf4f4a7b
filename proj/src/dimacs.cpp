#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "samplecheck/error.hpp"
#include "samplecheck/formula.hpp"

namespace samplecheck {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line_no) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError(line_no, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool have_header = false;
  long long declared_clauses = 0;
  std::vector<Var> ind;
  bool have_ind = false;
  std::vector<std::pair<long long, std::size_t>> ind_lits;  // (var, line)

  std::vector<Literal> pending;
  std::size_t pending_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto toks = split_ws(line);
    if (toks.empty()) continue;

    if (toks[0] == "c") {
      if (toks.size() >= 2 && toks[1] == "ind") {
        have_ind = true;
        if (toks.back() != "0") throw ParseError(line_no, "'c ind' line must end with 0");
        for (std::size_t i = 2; i + 1 < toks.size(); ++i) {
          long long v = to_int(toks[i], line_no);
          if (v < 1) throw ParseError(line_no, "sampling-set variable must be positive");
          ind_lits.emplace_back(v, line_no);
        }
      }
      continue;
    }
    if (toks[0][0] == 'c') continue;  // "c..." without a space is still a comment
    if (toks[0] == "%") break;          // SATLIB trailer

    if (toks[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      if (toks.size() != 4 || toks[1] != "cnf")
        throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      long long nv = to_int(toks[2], line_no);
      declared_clauses = to_int(toks[3], line_no);
      if (nv < 0 || nv > 0x3fffffff || declared_clauses < 0)
        throw ParseError(line_no, "malformed header counts");
      f.num_vars = static_cast<int>(nv);
      have_header = true;
      continue;
    }

    if (!have_header) throw ParseError(line_no, "clause before 'p cnf' header");
    for (auto tok : toks) {
      long long v = to_int(tok, line_no);
      if (v == 0) {
        if (pending.empty()) throw ParseError(line_no, "empty clause");
        f.clauses.emplace_back(std::move(pending));
        pending.clear();
        continue;
      }
      long long var = v < 0 ? -v : v;
      if (var > f.num_vars)
        throw ParseError(line_no, "literal " + std::to_string(var) + " exceeds num_vars=" +
                                      std::to_string(f.num_vars));
      if (pending.empty()) pending_line = line_no;
      pending.push_back(Literal::from_dimacs(static_cast<int>(v)));
    }
  }

  if (!have_header) throw ParseError(line_no, "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(pending_line, "clause missing terminating 0");
  if (static_cast<long long>(f.clauses.size()) != declared_clauses)
    throw ParseError(line_no, "header declares " + std::to_string(declared_clauses) +
                                  " clauses, found " + std::to_string(f.clauses.size()));

  for (auto [v, ln] : ind_lits) {
    if (v > f.num_vars)
      throw ParseError(ln, "sampling-set variable " + std::to_string(v) + " exceeds num_vars=" +
                               std::to_string(f.num_vars));
    ind.push_back(static_cast<Var>(v));
  }
  f.sampling_set = have_ind ? make_var_set(std::move(ind)) : var_range(1, f.num_vars);
  f.validate();
  return f;
}

CnfFormula read_dimacs_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_dimacs(ss.str());
}

std::string emit_dimacs(const CnfFormula& f) {
  std::ostringstream os;
  os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  if (!f.samples_all_vars()) {
    os << "c ind";
    for (Var v : f.sampling_set) os << ' ' << v;
    os << " 0\n";
  }
  for (const auto& c : f.clauses) {
    for (const auto& l : c.literals()) os << l.to_dimacs() << ' ';
    os << "0\n";
  }
  return os.str();
}

void write_dimacs_file(const std::string& path, const CnfFormula& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << emit_dimacs(f);
  if (!out) throw Error("write failed for " + path);
}

}  // namespace samplecheck
