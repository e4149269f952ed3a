#ifndef PSIGMAT_LATTICE_HPP_
#define PSIGMAT_LATTICE_HPP_

#include <vector>

#include "psigmat/group.hpp"

namespace psigmat {

// Complete subgroup list of G, sorted by (size, member list).  Computed
// once per group and cached; the returned reference stays valid for the
// lifetime of the group.
const std::vector<SubgroupHandle>& all_subgroups(const FiniteGroup& g);

// Subgroups of G contained in H — exactly the subgroups of H, expressed
// in the parent's element indices.
std::vector<SubgroupHandle> subgroups_within(const SubgroupHandle& h);

const std::vector<SubgroupHandle>& normal_subgroups(const FiniteGroup& g);

// Subgroups of H that are normal in H (H acting by conjugation).
std::vector<SubgroupHandle> normal_subgroups_within(const SubgroupHandle& h);

std::vector<SubgroupHandle> minimal_normal_subgroups(const FiniteGroup& g);
std::vector<SubgroupHandle> maximal_subgroups(const FiniteGroup& g);

// Intersection of all maximal subgroups (G itself if there are none).
SubgroupHandle frattini(const FiniteGroup& g);

struct ChiefFactor {
  long long order = 0;
  bool cyclic = false;  // chief factors are cyclic exactly when of prime order
};

// Ascending chain 1 = K_0 < K_1 < ... < K_m = G, every K_i normal in G,
// with no normal subgroup strictly between consecutive members.
struct ChiefSeries {
  std::vector<SubgroupHandle> chain;
  std::vector<ChiefFactor> factors;
};

// Deterministic chief series: at each step the least (by size, then
// member list) normal subgroup covering the current one is chosen.
ChiefSeries chief_series(const FiniteGroup& g);

// Chief factor orders of the group H (a subgroup viewed as a group),
// computed from the poset of H-normal subgroups inside the parent.
std::vector<long long> chief_factor_orders_within(const SubgroupHandle& h);

// Every chief series of H as a list of factor-order sequences; used by
// tests to confirm classifier verdicts do not depend on series choice.
std::vector<std::vector<long long>> all_chief_factor_sequences(const FiniteGroup& g);

}  // namespace psigmat

#endif
