#include "samplecheck/kernel.hpp"

#include "samplecheck/error.hpp"

namespace samplecheck {

std::vector<Clause> encode_pair(const CnfFormula& phi, const Assignment& sigma1,
                                const Assignment& sigma2) {
  if (sigma1.domain() != sigma2.domain())
    throw InvalidArgument("kernel assignments must share a domain");
  if (sigma1 == sigma2) throw InvalidArgument("kernel needs two distinct assignments");
  if (!sigma1.empty() && sigma1.domain().back() > phi.num_vars)
    throw InvalidArgument("assignment variable exceeds num_vars");
  if (is_enumerable(phi, sigma1.domain())) {
    for (const auto* s : {&sigma1, &sigma2})
      if (!has_extension(phi, *s))
        throw InvalidArgument("assignment " + s->to_string() + " is not a projected model");
  }

  std::vector<Clause> out;
  const auto& dom = sigma1.domain();
  const auto& v1 = sigma1.values();
  const auto& v2 = sigma2.values();
  std::optional<Literal> pivot;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    Literal l1{dom[i], v1[i]};
    if (v1[i] == v2[i]) {
      out.emplace_back(std::vector<Literal>{l1});
    } else if (!pivot) {
      pivot = l1;
    } else {
      out.emplace_back(std::vector<Literal>{~*pivot, l1});
      out.emplace_back(std::vector<Literal>{*pivot, ~l1});
    }
  }
  return out;
}

KernelOutput barbarik2_kernel(const CnfFormula& phi, const Assignment& sigma1,
                              const Assignment& sigma2, Rng& rng, const KernelConfig& cfg) {
  auto pair = encode_pair(phi, sigma1, sigma2);

  auto lits = diff_literals(sigma1, sigma2);
  auto lits2 = diff_literals(sigma2, sigma1);
  lits.insert(lits.end(), lits2.begin(), lits2.end());
  const Literal l = lits[rng.below(lits.size())];

  KernelOutput out;
  out.phi_hat = phi;
  out.phi_hat.sampling_set = sigma1.domain();
  out.fresh_vars = out.phi_hat.new_vars(cfg.m);
  out.k = cfg.k;
  out.m = cfg.m;
  out.chosen_literal = l;

  auto chain = build_chain(cfg.k, cfg.m, out.fresh_vars);
  auto& clauses = out.phi_hat.clauses;
  clauses.insert(clauses.end(), pair.begin(), pair.end());
  for (const auto& c : chain_to_cnf(chain)) {
    std::vector<Literal> guarded(c.literals().begin(), c.literals().end());
    guarded.push_back(l);  // ¬l → C
    clauses.emplace_back(guarded);
    guarded.back() = ~l;  // l → C
    clauses.emplace_back(std::move(guarded));
  }
  out.phi_hat.validate();
  return out;
}

}  // namespace samplecheck
