#include "psigmat/residuals.hpp"

#include <algorithm>

#include "psigmat/errors.hpp"
#include "psigmat/lattice.hpp"
#include "psigmat/numeric.hpp"

namespace psigmat {

SubgroupHandle sigma_nilpotent_residual(const FiniteGroup& g, const SigmaPartition& sigma) {
  const std::string key = sigma.canonical_spec();
  {
    std::lock_guard lock(g.memo().mu);
    auto it = g.memo().residuals.find(key);
    if (it != g.memo().residuals.end()) return SubgroupHandle{&g, it->second};
  }

  SubgroupHandle result = full_subgroup(g);
  for (const SubgroupHandle& n : normal_subgroups(g)) {
    QuotientResult q = quotient(g, n);
    if (is_sigma_nilpotent(*q.group, sigma)) result = intersect(result, n);
  }
  // Formation closure realized concretely: the quotient by the
  // intersection must itself be sigma-nilpotent.
  if (!is_sigma_nilpotent(*quotient(g, result).group, sigma))
    throw DomainError("sigma-nilpotent residual post-check failed");

  std::lock_guard lock(g.memo().mu);
  auto [it, inserted] = g.memo().residuals.emplace(key, result.members);
  return SubgroupHandle{&g, it->second};
}

SubgroupHandle nilpotent_residual(const FiniteGroup& g) {
  return sigma_nilpotent_residual(g, SigmaPartition::sigma_zero_for(g.order()));
}

SubgroupHandle o_upper(const SubgroupHandle& ambient, const SigmaPartition& sigma, int block) {
  SubgroupHandle result = ambient;
  for (const SubgroupHandle& n : normal_subgroups_within(ambient)) {
    if (sigma.is_pi_number(ambient.order() / n.order(), {block})) result = intersect(result, n);
  }
  if (!sigma.is_pi_number(ambient.order() / result.order(), {block}))
    throw DomainError("o_upper post-check failed: quotient is not a block-number");
  return result;
}

SubgroupHandle o_upper(const FiniteGroup& g, const SigmaPartition& sigma, int block) {
  return o_upper(full_subgroup(g), sigma, block);
}

SubgroupHandle o_lower(const SubgroupHandle& ambient, const SigmaPartition& sigma, int block) {
  SubgroupHandle result = trivial_subgroup(*ambient.parent);
  for (const SubgroupHandle& n : normal_subgroups_within(ambient)) {
    if (sigma.is_pi_number(n.order(), {block})) result = join(result, n);
  }
  if (!sigma.is_pi_number(result.order(), {block}) || !is_normal(result, ambient))
    throw DomainError("o_lower post-check failed");
  return result;
}

SubgroupHandle o_lower(const FiniteGroup& g, const SigmaPartition& sigma, int block) {
  return o_lower(full_subgroup(g), sigma, block);
}

bool is_hall_subgroup(const SubgroupHandle& a, const SubgroupHandle& ambient) {
  return coprime(a.order(), ambient.order() / a.order());
}

bool is_hall_subgroup(const SubgroupHandle& a, const FiniteGroup& g) {
  return coprime(a.order(), g.order() / a.order());
}

bool induces_power_automorphisms(const FiniteGroup& g, const SubgroupHandle& d) {
  if (!is_normal(d, full_subgroup(g)))
    throw DomainError("power automorphism check requires a normal subgroup");
  for (Elem x : d.members) {
    // <x>
    std::vector<char> in_cyclic(g.order(), 0);
    Elem p = 0;
    do {
      in_cyclic[p] = 1;
      p = g.mult(p, x);
    } while (p != 0);
    for (Elem y = 0; y < g.order(); ++y)
      if (!in_cyclic[g.conjugate(x, y)]) return false;
  }
  return true;
}

bool induces_power_automorphisms_subgroupwise(const FiniteGroup& g, const SubgroupHandle& d) {
  if (!is_normal(d, full_subgroup(g)))
    throw DomainError("power automorphism check requires a normal subgroup");
  SubgroupHandle full = full_subgroup(g);
  for (const SubgroupHandle& s : subgroups_within(d))
    if (!is_normal(s, full)) return false;
  return true;
}

}  // namespace psigmat
