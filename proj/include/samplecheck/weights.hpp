#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "samplecheck/formula.hpp"

namespace samplecheck {

/// Natural-log weight of an assignment.
struct LogWeight {
  double value = 0.0;

  friend auto operator<=>(const LogWeight&, const LogWeight&) = default;
};

/// Per-variable weights W(x) in (0,1) of a literal-weighted function:
/// wt(σ) = Π W(x) over true x times Π (1 - W(x)) over false x.
class WeightMap {
 public:
  WeightMap() = default;
  explicit WeightMap(std::map<Var, double> entries,
                     std::optional<double> default_weight = std::nullopt);

  /// Every variable weighs 1/2.
  static WeightMap uniform() { return WeightMap({}, 0.5); }

  void set(Var v, double w);
  /// Weight of `v`, falling back to the default; throws InvalidArgument if
  /// neither exists.
  double weight(Var v) const;
  bool covers(Var v) const noexcept;

  const std::map<Var, double>& entries() const noexcept { return entries_; }
  std::optional<double> default_weight() const noexcept { return default_; }

 private:
  std::map<Var, double> entries_;
  std::optional<double> default_;
};

/// Reads `<var> <weight>` records; absent variables default to 0.5.
WeightMap parse_weights(std::string_view text);
WeightMap read_weights_file(const std::string& path);
/// Records for every explicit entry, in variable order.
std::string emit_weights(const WeightMap& w);

LogWeight weight_of(const WeightMap& w, const Assignment& sigma);

/// wt(σ1)/wt(σ2), from the log weights.
double alpha(const WeightMap& w, const Assignment& sigma1, const Assignment& sigma2);
/// ln wt(σ1) - ln wt(σ2).
double log_alpha(const WeightMap& w, const Assignment& sigma1, const Assignment& sigma2);

/// Maximum weight ratio over the projected models of f on its sampling set.
double tilt_exact(const CnfFormula& f, const WeightMap& w,
                  const EnumerationOptions& opts = {});

/// Π max(W, 1-W) / min(W, 1-W) over `vars`; never below tilt_exact.
double tilt_upper_bound(std::span<const Var> vars, const WeightMap& w);

}  // namespace samplecheck
