#ifndef PSIGMAT_RESIDUALS_HPP_
#define PSIGMAT_RESIDUALS_HPP_

#include "psigmat/group.hpp"
#include "psigmat/sigma.hpp"

namespace psigmat {

// Sigma-nilpotent residual: the intersection of all normal subgroups N
// with sigma-nilpotent quotient G/N.  Post-verified: G/result is
// sigma-nilpotent.  Cached per (group, partition).
SubgroupHandle sigma_nilpotent_residual(const FiniteGroup& g, const SigmaPartition& sigma);

// Classical nilpotent residual: the sigma-nilpotent residual with the
// partition separating every prime of |G|.
SubgroupHandle nilpotent_residual(const FiniteGroup& g);

// O^{sigma_i}: the smallest subgroup normal in the ambient group whose
// quotient order is a {block}-number; computed by intersecting all such
// normal subgroups.
SubgroupHandle o_upper(const SubgroupHandle& ambient, const SigmaPartition& sigma, int block);
SubgroupHandle o_upper(const FiniteGroup& g, const SigmaPartition& sigma, int block);

// O_{sigma_i}: the largest normal {block}-subgroup of the ambient group
// (the join of all of them).
SubgroupHandle o_lower(const SubgroupHandle& ambient, const SigmaPartition& sigma, int block);
SubgroupHandle o_lower(const FiniteGroup& g, const SigmaPartition& sigma, int block);

// Classical Hall subgroup: |A| and |ambient : A| coprime.
bool is_hall_subgroup(const SubgroupHandle& a, const SubgroupHandle& ambient);
bool is_hall_subgroup(const SubgroupHandle& a, const FiniteGroup& g);

// True iff conjugation by every element of G maps each x in D into <x>.
// Requires D normal in G.  This is the elementwise form; the
// subgroupwise form below ("every subgroup of D is normal in G") is the
// equivalent cross-check route.
bool induces_power_automorphisms(const FiniteGroup& g, const SubgroupHandle& d);
bool induces_power_automorphisms_subgroupwise(const FiniteGroup& g, const SubgroupHandle& d);

}  // namespace psigmat

#endif
