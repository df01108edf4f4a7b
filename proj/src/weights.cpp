#include "samplecheck/weights.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "samplecheck/error.hpp"

namespace samplecheck {

namespace {

void check_weight(double w) {
  if (!(w > 0.0 && w < 1.0))
    throw InvalidArgument("weight must lie strictly between 0 and 1, got " + std::to_string(w));
}

}  // namespace

WeightMap::WeightMap(std::map<Var, double> entries, std::optional<double> default_weight)
    : entries_(std::move(entries)), default_(default_weight) {
  for (auto [v, w] : entries_) {
    if (v < 1) throw InvalidArgument("weight for variable index < 1");
    check_weight(w);
  }
  if (default_) check_weight(*default_);
}

void WeightMap::set(Var v, double w) {
  if (v < 1) throw InvalidArgument("weight for variable index < 1");
  check_weight(w);
  entries_[v] = w;
}

double WeightMap::weight(Var v) const {
  if (auto it = entries_.find(v); it != entries_.end()) return it->second;
  if (default_) return *default_;
  throw InvalidArgument("no weight for variable " + std::to_string(v));
}

bool WeightMap::covers(Var v) const noexcept { return default_ || entries_.contains(v); }

WeightMap parse_weights(std::string_view text) {
  WeightMap w({}, 0.5);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c' || line[first] == '#') continue;
    std::istringstream rec(line);
    long long var = 0;
    double weight = 0.0;
    std::string extra;
    if (!(rec >> var >> weight)) throw ParseError(line_no, "expected '<var> <weight>'");
    if (rec >> extra) throw ParseError(line_no, "trailing data after weight");
    if (var < 1 || var > 0x3fffffff) throw ParseError(line_no, "variable index out of range");
    if (!(weight > 0.0 && weight < 1.0))
      throw ParseError(line_no, "weight must lie strictly between 0 and 1");
    if (w.entries().contains(static_cast<Var>(var)))
      throw ParseError(line_no, "duplicate weight for variable " + std::to_string(var));
    w.set(static_cast<Var>(var), weight);
  }
  return w;
}

WeightMap read_weights_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_weights(ss.str());
}

std::string emit_weights(const WeightMap& w) {
  std::ostringstream os;
  os.precision(17);
  for (auto [v, x] : w.entries()) os << v << ' ' << x << '\n';
  return os.str();
}

LogWeight weight_of(const WeightMap& w, const Assignment& sigma) {
  double acc = 0.0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    double p = w.weight(sigma.domain()[i]);
    acc += sigma.values()[i] ? std::log(p) : std::log1p(-p);
  }
  return LogWeight{acc};
}

double log_alpha(const WeightMap& w, const Assignment& sigma1, const Assignment& sigma2) {
  if (sigma1.domain() != sigma2.domain())
    throw InvalidArgument("alpha needs assignments over the same domain");
  // Only disagreeing variables contribute.
  double acc = 0.0;
  for (std::size_t i = 0; i < sigma1.size(); ++i) {
    bool a = sigma1.values()[i];
    if (a == sigma2.values()[i]) {
      w.weight(sigma1.domain()[i]);  // still require coverage
      continue;
    }
    double p = w.weight(sigma1.domain()[i]);
    double lp = std::log(p), lq = std::log1p(-p);
    acc += a ? lp - lq : lq - lp;
  }
  return acc;
}

double alpha(const WeightMap& w, const Assignment& sigma1, const Assignment& sigma2) {
  return std::exp(log_alpha(w, sigma1, sigma2));
}

double tilt_exact(const CnfFormula& f, const WeightMap& w, const EnumerationOptions& opts) {
  auto models = enumerate_models(f, f.sampling_set, opts);
  if (models.empty()) throw Unsatisfiable("tilt is undefined for an unsatisfiable formula");
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& m : models) {
    double lw = weight_of(w, m).value;
    lo = std::min(lo, lw);
    hi = std::max(hi, lw);
  }
  return std::exp(hi - lo);
}

double tilt_upper_bound(std::span<const Var> vars, const WeightMap& w) {
  double acc = 0.0;
  for (Var v : make_var_set({vars.begin(), vars.end()})) {
    double p = w.weight(v);
    acc += std::abs(std::log(p) - std::log1p(-p));
  }
  return std::exp(acc);
}

}  // namespace samplecheck
