#ifndef PSIGMAT_GROUP_HPP_
#define PSIGMAT_GROUP_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psigmat/perm.hpp"

namespace psigmat {

class FiniteGroup;
struct SubgroupHandle;

using Elem = int;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr long long kDefaultOrderCap = 200;

struct GroupOptions {
  long long order_cap = kDefaultOrderCap;
};

// Result of quotient(): the factor group plus the projection map
// (parent element index -> quotient element index).
struct QuotientResult {
  GroupPtr group;
  std::vector<Elem> projection;
};

// Immutable finite group backed by a full multiplication table.
// Element 0 is always the identity.  Instances are created through the
// factory functions below and shared via GroupPtr; they never move, so
// raw `const FiniteGroup*` back-references in SubgroupHandle stay valid
// for as long as the owning GroupPtr lives.
class FiniteGroup {
 public:
  FiniteGroup(long long order, std::vector<Elem> mult_flat,
              std::vector<std::string> labels, std::vector<Elem> generators);

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  long long order() const { return order_; }
  Elem identity() const { return 0; }
  Elem mult(Elem a, Elem b) const { return mult_[static_cast<size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem conjugate(Elem x, Elem g) const { return mult(mult(inv(g), x), g); }  // x^g
  int element_order(Elem x) const;

  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Elem>& generators() const { return generators_; }

  // Multiset of element orders, ascending.  Fixture assertions only;
  // this is not an isomorphism test.
  std::vector<int> order_signature() const;

  // Lazily filled analysis caches; logically const and internal to the
  // library.  Fills happen outside the lock and the first store wins, so
  // concurrent computation of the same entry is benign.
  struct Memo {
    std::mutex mu;
    std::shared_ptr<const std::vector<SubgroupHandle>> all_subgroups;
    std::shared_ptr<const std::vector<SubgroupHandle>> normal_subgroups;
    std::map<std::vector<Elem>, QuotientResult> quotients;
    std::map<std::string, std::vector<Elem>> residuals;  // keyed by canonical sigma spec
  };
  Memo& memo() const { return memo_; }

 private:
  long long order_;
  std::vector<Elem> mult_;  // order x order, row-major
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
  std::vector<Elem> generators_;

  void validate() const;

  mutable Memo memo_;
};

// A subgroup of `parent`, stored as the sorted list of its element indices.
// Handles are plain values; they must not outlive the parent group.
struct SubgroupHandle {
  const FiniteGroup* parent = nullptr;
  std::vector<Elem> members;  // sorted ascending, members[0] == 0

  long long order() const { return static_cast<long long>(members.size()); }
  long long index_in_parent() const { return parent->order() / order(); }
  bool contains(Elem x) const;
  bool is_full() const { return order() == parent->order(); }
  bool is_trivial() const { return members.size() == 1; }

  friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) {
    return a.parent == b.parent && a.members == b.members;
  }
};

// Canonical subgroup order: by size, then member list lexicographically.
bool subgroup_less(const SubgroupHandle& a, const SubgroupHandle& b);

// ---- construction -----------------------------------------------------

// Closure of `gens` under composition, breadth-first from the identity
// applying generators in input order; element numbering is the discovery
// order, which makes tables and reports reproducible.
GroupPtr group_from_generators(int degree, const std::vector<Perm>& gens,
                               const GroupOptions& opts = {});

// Builds a group directly from a multiplication table.  `labels` may be
// empty (element indices are used); `generators` may be empty (all
// non-identity elements are recorded as generators).
GroupPtr group_from_table(std::vector<std::vector<Elem>> table,
                          std::vector<std::string> labels = {},
                          std::vector<Elem> generators = {});

// Componentwise product; element (a, b) gets index a*|H| + b.
GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h,
                        const GroupOptions& opts = {});

// Semidirect product N x| H.  `action` maps every H-element index to an
// automorphism of N given as an image table on N's element indices; it
// must be a homomorphism from H into Aut(N) (verified, DomainError if not).
// Multiplication: (n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2).
GroupPtr semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                            const std::vector<std::vector<Elem>>& action,
                            const GroupOptions& opts = {});

// Factor group G/N for N normal in G (DomainError if not normal).
// Cosets are numbered by their least element; results are cached per (G, N).
QuotientResult quotient(const FiniteGroup& g, const SubgroupHandle& n);

// Re-indexes a subgroup as a standalone group (members in sorted order).
// `to_sub` maps parent element indices to new indices (-1 for non-members).
struct ReifiedSubgroup {
  GroupPtr group;
  std::vector<Elem> to_sub;
};
ReifiedSubgroup reify(const SubgroupHandle& h);

// ---- elementary subgroup operations ------------------------------------

SubgroupHandle full_subgroup(const FiniteGroup& g);
SubgroupHandle trivial_subgroup(const FiniteGroup& g);

// Subgroup generated by `seeds` (identity is implied).
SubgroupHandle generated_subgroup(const FiniteGroup& g, std::span<const Elem> seeds);

SubgroupHandle conjugate_subgroup(const SubgroupHandle& a, Elem g);

// True iff A^b = A for all b in B.  Requires A <= B (DomainError otherwise).
bool is_normal(const SubgroupHandle& a, const SubgroupHandle& b);

// Core (A)_B: the largest subgroup of A normal in B, i.e. the
// intersection of all B-conjugates of A.  Requires A <= B.
SubgroupHandle core_in(const SubgroupHandle& a, const SubgroupHandle& b);

// Element set {ab : a in A, b in B}, sorted.  Not necessarily a subgroup.
std::vector<Elem> product_set(const SubgroupHandle& a, const SubgroupHandle& b);

// True iff AB = BA as sets (equivalently AB is a subgroup).
bool permutes(const SubgroupHandle& a, const SubgroupHandle& b);

SubgroupHandle intersect(const SubgroupHandle& a, const SubgroupHandle& b);
SubgroupHandle join(const SubgroupHandle& a, const SubgroupHandle& b);
bool is_subset(const SubgroupHandle& a, const SubgroupHandle& b);
bool is_abelian(const SubgroupHandle& h);
bool is_cyclic(const SubgroupHandle& h);

// Checks the SubgroupHandle invariants (identity present, closed under
// product and inverse, Lagrange).  Throws DomainError on violation.
void validate_subgroup(const SubgroupHandle& h);

}  // namespace psigmat

#endif
