#ifndef PSIGMAT_PSIGMAT_HPP_
#define PSIGMAT_PSIGMAT_HPP_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "psigmat/group.hpp"
#include "psigmat/sigma.hpp"

namespace psigmat {

// ---- sigma-quasinormality ----------------------------------------------

struct QuasinormalResult {
  bool value = false;
  // Witnessing complete Hall sigma-set when true.
  std::optional<HallSigmaSet> witness;
  // When false: the block for which no Hall subgroup works, and (when the
  // block has candidates at all) the first candidate with the conjugate
  // it fails against.
  std::optional<int> failing_block;
  std::optional<SubgroupHandle> failing_member;
  std::optional<SubgroupHandle> failing_conjugate;
};

// Decides whether some complete Hall sigma-set of the ambient group
// permutes (all members, all conjugates) with A.  The member choice is
// independent per block, so candidates are scanned blockwise; the
// assembled witness is the lexicographically first qualifying set.
class QuasinormalTester {
 public:
  QuasinormalTester(const SubgroupHandle& ambient, const SigmaPartition& sigma);
  QuasinormalResult test(const SubgroupHandle& a) const;

 private:
  SubgroupHandle ambient_;
  struct BlockCandidates {
    int block;
    std::vector<SubgroupHandle> halls;                    // canonical order
    std::vector<std::vector<SubgroupHandle>> conjugates;  // distinct, per hall
  };
  std::vector<BlockCandidates> blocks_;
};

QuasinormalResult is_sigma_quasinormal(const SubgroupHandle& a, const SubgroupHandle& ambient,
                                       const SigmaPartition& sigma);
QuasinormalResult is_sigma_quasinormal(const SubgroupHandle& a, const FiniteGroup& g,
                                       const SigmaPartition& sigma);

// ---- sigma-subnormality ------------------------------------------------

struct SubnormalResult {
  bool value = false;
  // Witness chain A = c_0 <= ... <= c_t = ambient when true; each step is
  // either normal or has sigma-primary quotient modulo the core.
  std::vector<SubgroupHandle> chain;
};

// Memoized reachability over the ambient subgroup lattice.
class SubnormalTester {
 public:
  SubnormalTester(const SubgroupHandle& ambient, const SigmaPartition& sigma);
  SubnormalResult test(const SubgroupHandle& a);

  // One admissible chain step: M normal in B, or B/(M)_B sigma-primary.
  static bool step_ok(const SubgroupHandle& m, const SubgroupHandle& b,
                      const SigmaPartition& sigma);

 private:
  SubgroupHandle ambient_;
  SigmaPartition sigma_;
  std::vector<SubgroupHandle> subgroups_;
  bool search(const std::vector<Elem>& a, const SubgroupHandle& b,
              std::map<std::vector<Elem>, bool>& memo,
              std::map<std::vector<Elem>, std::vector<Elem>>& parent);
};

SubnormalResult is_sigma_subnormal(const SubgroupHandle& a, const SubgroupHandle& ambient,
                                   const SigmaPartition& sigma);
SubnormalResult is_sigma_subnormal(const SubgroupHandle& a, const FiniteGroup& g,
                                   const SigmaPartition& sigma);

// ---- transitivity deciders ----------------------------------------------

enum class PsigmaTRoute { kTransitivity, kSubnormalCriterion };

struct PsigmaTVerdict {
  bool value = false;
  PsigmaTRoute route = PsigmaTRoute::kTransitivity;
  // Transitivity route, false: first canonical pair (K, H) with K
  // quasinormal in H, H quasinormal in G, K not quasinormal in G.
  std::optional<std::pair<SubgroupHandle, SubgroupHandle>> pair_witness;
  // Criterion route, false: first sigma-subnormal subgroup that is not
  // quasinormal, with its subnormality chain.
  std::optional<SubgroupHandle> subgroup_witness;
  std::vector<SubgroupHandle> witness_chain;
};

// Route 1: exhaustive transitivity test over all pairs K <= H <= G.
PsigmaTVerdict is_psigmat_bruteforce(const FiniteGroup& g, const SigmaPartition& sigma);

// Route 2: every sigma-subnormal subgroup is sigma-quasinormal.
PsigmaTVerdict is_psigmat_subnormal_criterion(const FiniteGroup& g, const SigmaPartition& sigma);

// ---- special transitivity structure --------------------------------------

struct SpecialPsigmaTResult {
  bool value = false;
  SubgroupHandle residual;  // D, the sigma-nilpotent residual
  bool residual_is_hall = false;
  bool power_automorphisms = false;
  // Certificate when found: D <= E (a Hall sigma_i-subgroup for `block`)
  // and S, a normal complement of D in E.
  std::optional<int> block;
  std::optional<SubgroupHandle> hall_member;
  std::optional<SubgroupHandle> complement;
};

// D is a Hall subgroup, G induces power automorphisms in D, and D sits in
// a Hall sigma_i-subgroup E with a normal complement there.
SpecialPsigmaTResult is_special_psigmat(const FiniteGroup& g, const SigmaPartition& sigma);

// ---- premise evaluators for the verified criteria -----------------------

// Criterion A premises for an explicit normal subgroup D: D is a normal
// sigma-Hall subgroup, G/D passes the transitivity test, every
// sigma-subnormal subgroup of D is normal in G, and G is sigma-full of
// Sylow type.  Premises true must imply the transitivity verdict.
struct TheoremAResult {
  bool d_normal = false;
  bool d_sigma_hall = false;
  bool quotient_psigmat = false;
  bool subnormal_all_normal = false;
  bool full_sylow_type = false;
  bool premises = false;
};
TheoremAResult theorem_a_premises(const FiniteGroup& g, const SigmaPartition& sigma,
                                  const SubgroupHandle& d);

// Criterion B premises: D a sigma-nilpotent normal Hall subgroup with
// sigma-nilpotent quotient, and G/O^{sigma_i}(D) special for every block
// of sigma(D).
struct TheoremBResult {
  bool d_normal = false;
  bool d_hall = false;
  bool d_sigma_nilpotent = false;
  bool quotient_sigma_nilpotent = false;
  std::vector<std::pair<int, bool>> block_special;  // (block, quotient special?)
  bool premises = false;
};
TheoremBResult theorem_b_premises(const FiniteGroup& g, const SigmaPartition& sigma,
                                  const SubgroupHandle& d);

// Criterion C: under sigma-solubility plus a generalized Wielandt set,
// the transitivity property is equivalent to (i) D abelian odd-order Hall
// with power automorphisms induced by G, and (ii) G/O^{sigma_i}(D)
// special for each block of sigma(D).  Inapplicable premises are
// reported, never folded into the verdict.
struct TheoremCResult {
  bool sigma_soluble = false;
  bool wielandt_found = false;
  bool applicable = false;
  SubgroupHandle residual;
  bool d_hall = false;
  bool d_odd = false;
  bool d_abelian = false;
  bool d_power_autos = false;
  std::vector<std::pair<int, bool>> block_special;
  bool verdict = false;
};
TheoremCResult theorem_c_criterion(const FiniteGroup& g, const SigmaPartition& sigma,
                                   PiSupersolubleRule rule = PiSupersolubleRule::kChiefFactors);

// Normal sigma-Hall subgroups of G (candidates for the criterion sweeps).
std::vector<SubgroupHandle> normal_sigma_hall_subgroups(const FiniteGroup& g,
                                                        const SigmaPartition& sigma);
// Normal (classical) Hall subgroups of G.
std::vector<SubgroupHandle> normal_hall_subgroups(const FiniteGroup& g);

}  // namespace psigmat

#endif
