#ifndef PSIGMAT_SIGMA_HPP_
#define PSIGMAT_SIGMA_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psigmat/group.hpp"

namespace psigmat {

// A partition of the primes: finitely many explicit blocks plus an
// optional co-finite "rest" block holding every prime not listed.
// Blocks are canonicalized (primes ascending inside a block, blocks
// ordered by least prime); explicit blocks are indexed 0..k-1 and the
// rest block, when present, gets index k.
class SigmaPartition {
 public:
  static SigmaPartition make(std::vector<std::vector<int>> blocks, bool with_rest);
  static SigmaPartition rest_only();  // the one-block partition of all primes

  // Singleton blocks for every prime dividing n, plus a rest block; on n
  // and all its divisors this behaves exactly like the partition of the
  // primes into singletons.
  static SigmaPartition sigma_zero_for(long long n);

  int explicit_block_count() const { return static_cast<int>(blocks_.size()); }
  bool has_rest_block() const { return has_rest_; }
  int rest_index() const { return explicit_block_count(); }
  const std::vector<int>& block_primes(int i) const { return blocks_[i]; }
  std::string block_name(int i) const;  // "3,5" for explicit blocks, "*" for rest

  // Index of the block containing p; DomainError when p is not covered
  // (only possible without a rest block).
  int block_of_prime(int p) const;

  // sigma(n): indices of blocks meeting the prime divisors of n, sorted.
  std::vector<int> sigma_of(long long n) const;

  // n is a Pi-number iff sigma(n) is contained in Pi (Pi = block indices).
  bool is_pi_number(long long n, const std::vector<int>& pi) const;

  // True when the partition separates all prime divisors of n into
  // distinct blocks (i.e. restricted to these primes it is the
  // singleton partition).
  bool separates_primes_of(long long n) const;

  std::string canonical_spec() const;  // "3,5|*" style rendering

  friend bool operator==(const SigmaPartition&, const SigmaPartition&) = default;

 private:
  SigmaPartition() = default;
  std::vector<std::vector<int>> blocks_;
  bool has_rest_ = false;
};

// One Hall sigma_i-subgroup per block in sigma(G), keyed by block index.
struct HallSigmaSet {
  std::map<int, SubgroupHandle> members;
};

// ---- classifiers --------------------------------------------------------
// Every classifier taking a SubgroupHandle treats the handle as the
// ambient group (its subgroups are the parent subgroups it contains, its
// conjugations use only its own elements).  The FiniteGroup overloads
// apply the classifier to the whole group.

bool is_sigma_primary_order(long long order, const SigmaPartition& sigma);
bool is_sigma_primary(const FiniteGroup& g, const SigmaPartition& sigma);

// sigma-nilpotent: for every block in sigma(H) the elements of
// block-number order form a subgroup and the block part sizes multiply
// to |H| (equivalently H is the internal direct product of its block
// torsion parts).
bool is_sigma_nilpotent(const SubgroupHandle& h, const SigmaPartition& sigma);
bool is_sigma_nilpotent(const FiniteGroup& g, const SigmaPartition& sigma);

// sigma-soluble: every chief factor is sigma-primary.
bool is_sigma_soluble(const SubgroupHandle& h, const SigmaPartition& sigma);
bool is_sigma_soluble(const FiniteGroup& g, const SigmaPartition& sigma);

// All Hall Pi-subgroups of the ambient group: subgroups whose order is a
// Pi-number and whose index is a Pi'-number.  Possibly empty.
std::vector<SubgroupHandle> hall_subgroups(const SubgroupHandle& ambient,
                                           const std::vector<int>& pi,
                                           const SigmaPartition& sigma);
std::vector<SubgroupHandle> hall_subgroups(const FiniteGroup& g, const std::vector<int>& pi,
                                           const SigmaPartition& sigma);

// Hall subgroups for the single block {i}.
std::vector<SubgroupHandle> hall_block_subgroups(const SubgroupHandle& ambient, int block,
                                                 const SigmaPartition& sigma);

// All complete Hall sigma-sets: the Cartesian product, over blocks in
// sigma(|ambient|), of the block's Hall subgroups.  Empty when some block
// admits none; a single empty set when sigma(|ambient|) is empty.
std::vector<HallSigmaSet> complete_hall_sigma_sets(const SubgroupHandle& ambient,
                                                   const SigmaPartition& sigma);
std::vector<HallSigmaSet> complete_hall_sigma_sets(const FiniteGroup& g,
                                                   const SigmaPartition& sigma);
long long complete_hall_sigma_set_count(const SubgroupHandle& ambient,
                                        const SigmaPartition& sigma);

// sigma-full of Sylow type: every subgroup E is a D_{sigma_i}-group for
// every block i in sigma(E), i.e. E has a Hall sigma_i-subgroup whose
// E-conjugates cover every sigma_i-subgroup of E.
bool is_sigma_full_sylow_type(const FiniteGroup& g, const SigmaPartition& sigma);

// Which reading of "pi-supersoluble" to apply.  ChiefFactors is the
// adopted definition (every chief factor with order divisible by a prime
// of pi is cyclic of prime order); GlobalSupersoluble is the stricter
// alternative (supersoluble, and all primes of the group lie in pi),
// exposed so campaign results can be audited under either reading.
enum class PiSupersolubleRule { kChiefFactors, kGlobalSupersoluble };

bool is_pi_supersoluble(const SubgroupHandle& h, const std::vector<int>& primes,
                        PiSupersolubleRule rule = PiSupersolubleRule::kChiefFactors);
bool is_pi_supersoluble(const FiniteGroup& g, const std::vector<int>& primes,
                        PiSupersolubleRule rule = PiSupersolubleRule::kChiefFactors);

// First complete Hall sigma-set (blockwise canonical order) all of whose
// members are pi(D)-supersoluble, where D is the sigma-nilpotent residual.
std::optional<HallSigmaSet> find_generalized_wielandt_set(
    const FiniteGroup& g, const SigmaPartition& sigma,
    PiSupersolubleRule rule = PiSupersolubleRule::kChiefFactors);

}  // namespace psigmat

#endif
