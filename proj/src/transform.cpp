#include "samplecheck/transform.hpp"

#include <cmath>

#include "samplecheck/chain.hpp"
#include "samplecheck/error.hpp"

namespace samplecheck {

DyadicWeight approximate_dyadic(double w, int m_max) {
  if (!(w > 0.0 && w < 1.0)) throw InvalidArgument("dyadic weight must lie in (0,1)");
  if (m_max < 1 || m_max > kMaxChainWidth)
    throw InvalidArgument("m_max must be in 1.." + std::to_string(kMaxChainWidth));
  DyadicWeight best{1, 1};
  double best_err = std::abs(w - 0.5);
  for (int m = 2; m <= m_max; ++m) {
    const auto denom = static_cast<double>(std::uint64_t{1} << m);
    const auto top = (std::uint64_t{1} << m) - 1;
    const double x = w * denom;
    // The odd integers bracketing x.
    auto base = static_cast<std::uint64_t>(std::floor(x / 2.0)) * 2;
    for (std::uint64_t k : {base > 0 ? base - 1 : 1, base + 1}) {
      if (k < 1 || k > top) continue;
      double err = std::abs(w - static_cast<double>(k) / denom);
      if (err < best_err) {
        best_err = err;
        best = DyadicWeight{k, m};
      }
    }
  }
  return best;
}

TransformResult weighted_to_uniform(const CnfFormula& phi, const WeightMap& w,
                                    const TransformOptions& opts) {
  phi.validate();
  if (is_enumerable(phi) && !has_extension(phi, Assignment{}))
    throw Unsatisfiable("cannot transform an unsatisfiable formula");

  TransformResult r;
  r.formula = phi;
  std::uint64_t fresh_total = 0;
  for (Var x : phi.sampling_set) {
    DyadicChoice c;
    c.var = x;
    c.weight = w.weight(x);
    c.dyadic = approximate_dyadic(c.weight, opts.m_max);
    c.error = std::abs(c.weight - c.dyadic.value());
    fresh_total += static_cast<std::uint64_t>(c.dyadic.m);
    if (fresh_total > opts.max_fresh_vars)
      throw InvalidArgument("transform needs more than " + std::to_string(opts.max_fresh_vars) +
                            " fresh variables");
    c.chain_vars = r.formula.new_vars(c.dyadic.m);

    const auto chain = build_chain(c.dyadic.k, c.dyadic.m, c.chain_vars);
    const Literal pos{x, true};
    for (const auto& cl : chain_to_cnf(chain)) {
      std::vector<Literal> lits(cl.literals().begin(), cl.literals().end());
      lits.push_back(~pos);
      r.formula.clauses.emplace_back(std::move(lits));
    }
    for (const auto& cl : negated_chain_to_cnf(chain)) {
      std::vector<Literal> lits(cl.literals().begin(), cl.literals().end());
      lits.push_back(pos);
      r.formula.clauses.emplace_back(std::move(lits));
    }
    r.max_error = std::max(r.max_error, c.error);
    r.choices.push_back(std::move(c));
  }
  r.formula.validate();
  return r;
}

}  // namespace samplecheck
