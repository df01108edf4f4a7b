#include <algorithm>
#include <unordered_map>

#include "samplecheck/error.hpp"
#include "samplecheck/formula.hpp"

namespace samplecheck {

namespace {

// Depth-first sweep over a fixed variable order. Each clause is checked at the
// depth of its last-ordered variable, so a falsified clause prunes the whole
// subtree below that depth. Variables may be pinned to a single value.
class Sweep {
 public:
  Sweep(const CnfFormula& f, std::vector<Var> order, std::vector<signed char> pinned)
      : order_(std::move(order)), pinned_(std::move(pinned)), watch_(order_.size()) {
    std::unordered_map<Var, std::size_t> depth;
    for (std::size_t d = 0; d < order_.size(); ++d) depth.emplace(order_[d], d);
    value_.assign(static_cast<std::size_t>(std::max(f.num_vars, max_var())) + 1, 0);
    for (const auto& c : f.clauses) {
      std::size_t last = 0;
      for (const auto& l : c.literals()) last = std::max(last, depth.at(l.var));
      watch_[last].push_back(&c);
    }
  }

  std::size_t depth() const noexcept { return order_.size(); }

  /// Visits every satisfying leaf of the prefix [0, stop) that extends to a full
  /// model; `visit` returns false to end the sweep early.
  template <class Visit>
  void run(std::size_t stop, Visit&& visit) {
    stop_ = stop;
    halted_ = false;
    descend(0, visit);
  }

  /// Whether the suffix [from, depth()) has a model under the current prefix.
  bool extendable(std::size_t from) {
    bool found = false;
    auto saved_stop = stop_;
    stop_ = depth();
    auto visit = [&] {
      found = true;
      return false;
    };
    bool saved_halt = halted_;
    halted_ = false;
    descend(from, visit);
    halted_ = saved_halt;
    stop_ = saved_stop;
    return found;
  }

  bool value(Var v) const noexcept { return value_[static_cast<std::size_t>(v)] > 0; }

 private:
  Var max_var() const noexcept {
    Var m = 0;
    for (Var v : order_) m = std::max(m, v);
    return m;
  }

  bool clauses_ok(std::size_t d) const {
    for (const Clause* c : watch_[d]) {
      bool sat = false;
      for (const auto& l : c->literals()) {
        if ((value_[static_cast<std::size_t>(l.var)] > 0) == l.positive) {
          sat = true;
          break;
        }
      }
      if (!sat) return false;
    }
    return true;
  }

  template <class Visit>
  void descend(std::size_t d, Visit& visit) {
    if (halted_) return;
    if (d == stop_) {
      if (stop_ < depth() && !extendable(stop_)) return;
      if (!visit()) halted_ = true;
      return;
    }
    const Var v = order_[d];
    for (signed char val : {-1, 1}) {
      if (pinned_[d] != 0 && pinned_[d] != val) continue;
      value_[static_cast<std::size_t>(v)] = val;
      if (clauses_ok(d)) descend(d + 1, visit);
      if (halted_) break;
    }
    value_[static_cast<std::size_t>(v)] = 0;
  }

  std::vector<Var> order_;
  std::vector<signed char> pinned_;
  std::vector<std::vector<const Clause*>> watch_;
  std::vector<signed char> value_;
  std::size_t stop_ = 0;
  bool halted_ = false;
};

std::vector<Var> set_union(std::span<const Var> a, std::span<const Var> b) {
  std::vector<Var> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Var> set_difference(std::span<const Var> a, std::span<const Var> b) {
  std::vector<Var> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void check_cap(std::size_t branching, std::size_t cap) {
  if (branching > cap)
    throw EnumerationLimit("enumeration over " + std::to_string(branching) +
                           " variables exceeds the cap of " + std::to_string(cap));
}

}  // namespace

bool is_enumerable(const CnfFormula& f, std::span<const Var> extra, std::size_t cap) {
  auto sup = f.support();
  auto ex = make_var_set({extra.begin(), extra.end()});
  return set_union(sup, ex).size() <= cap;
}

std::vector<Assignment> enumerate_models(const CnfFormula& f, std::span<const Var> over,
                                         const EnumerationOptions& opts) {
  auto proj = make_var_set({over.begin(), over.end()});
  if (!proj.empty() && proj.back() > f.num_vars)
    throw InvalidArgument("projection variable " + std::to_string(proj.back()) +
                          " exceeds num_vars=" + std::to_string(f.num_vars));
  auto sup = f.support();
  auto rest = set_difference(sup, proj);
  check_cap(proj.size() + rest.size(), opts.support_cap);

  std::vector<Var> order = proj;
  order.insert(order.end(), rest.begin(), rest.end());
  Sweep sweep(f, order, std::vector<signed char>(order.size(), 0));

  // Projection variables come first in increasing order and are tried false
  // before true, so results arrive sorted and distinct.
  std::vector<Assignment> out;
  sweep.run(proj.size(), [&] {
    if (out.size() >= opts.limit)
      throw EnumerationLimit("more than " + std::to_string(opts.limit) + " projected models");
    std::vector<bool> vals;
    vals.reserve(proj.size());
    for (Var v : proj) vals.push_back(sweep.value(v));
    out.emplace_back(proj, std::move(vals));
    return true;
  });
  return out;
}

std::uint64_t count_models(const CnfFormula& f, const EnumerationOptions& opts) {
  auto sup = f.support();
  check_cap(sup.size(), opts.support_cap);
  Sweep sweep(f, sup, std::vector<signed char>(sup.size(), 0));
  std::uint64_t n = 0;
  sweep.run(sup.size(), [&] {
    ++n;
    return true;
  });
  return n;
}

bool has_extension(const CnfFormula& f, const Assignment& partial,
                   const EnumerationOptions& opts) {
  auto sup = f.support();
  std::vector<Var> fixed;
  std::vector<Var> free;
  for (Var v : sup) (partial.contains(v) ? fixed : free).push_back(v);
  check_cap(free.size(), opts.support_cap);

  std::vector<Var> order = fixed;
  order.insert(order.end(), free.begin(), free.end());
  std::vector<signed char> pinned(order.size(), 0);
  for (std::size_t i = 0; i < fixed.size(); ++i) pinned[i] = partial.value(fixed[i]) ? 1 : -1;

  Sweep sweep(f, order, std::move(pinned));
  bool found = false;
  sweep.run(order.size(), [&] {
    found = true;
    return false;
  });
  return found;
}

}  // namespace samplecheck
