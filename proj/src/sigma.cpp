#include "psigmat/sigma.hpp"

#include <algorithm>

#include "psigmat/errors.hpp"
#include "psigmat/lattice.hpp"
#include "psigmat/numeric.hpp"
#include "psigmat/residuals.hpp"

namespace psigmat {

SigmaPartition SigmaPartition::make(std::vector<std::vector<int>> blocks, bool with_rest) {
  SigmaPartition p;
  for (auto& b : blocks) {
    if (b.empty()) throw ParseError("sigma partition block must be non-empty");
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    for (int q : b)
      if (!is_prime(q)) throw ParseError(std::to_string(q) + " is not prime");
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  std::vector<int> seen;
  for (const auto& b : blocks)
    for (int q : b) {
      if (std::find(seen.begin(), seen.end(), q) != seen.end())
        throw ParseError("prime " + std::to_string(q) + " appears in two blocks");
      seen.push_back(q);
    }
  if (blocks.empty() && !with_rest) throw ParseError("sigma partition has no blocks");
  p.blocks_ = std::move(blocks);
  p.has_rest_ = with_rest;
  return p;
}

SigmaPartition SigmaPartition::rest_only() { return make({}, true); }

SigmaPartition SigmaPartition::sigma_zero_for(long long n) {
  std::vector<std::vector<int>> blocks;
  for (int p : prime_divisors(n)) blocks.push_back({p});
  return make(std::move(blocks), true);
}

std::string SigmaPartition::block_name(int i) const {
  if (i == rest_index() && has_rest_) return "*";
  std::string out;
  for (size_t k = 0; k < blocks_[i].size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(blocks_[i][k]);
  }
  return out;
}

int SigmaPartition::block_of_prime(int p) const {
  for (int i = 0; i < explicit_block_count(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), p)) return i;
  if (has_rest_) return rest_index();
  throw DomainError("prime " + std::to_string(p) + " is not covered by the sigma partition");
}

std::vector<int> SigmaPartition::sigma_of(long long n) const {
  std::vector<int> out;
  for (int p : prime_divisors(n)) {
    int b = block_of_prime(p);
    if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SigmaPartition::is_pi_number(long long n, const std::vector<int>& pi) const {
  for (int b : sigma_of(n))
    if (std::find(pi.begin(), pi.end(), b) == pi.end()) return false;
  return true;
}

bool SigmaPartition::separates_primes_of(long long n) const {
  auto primes = prime_divisors(n);
  std::vector<int> used;
  for (int p : primes) {
    int b = block_of_prime(p);
    if (std::find(used.begin(), used.end(), b) != used.end()) return false;
    used.push_back(b);
  }
  return true;
}

std::string SigmaPartition::canonical_spec() const {
  std::string out;
  for (int i = 0; i < explicit_block_count(); ++i) {
    if (i > 0) out += '|';
    out += block_name(i);
  }
  if (has_rest_) {
    if (!out.empty()) out += '|';
    out += '*';
  }
  return out;
}

// ---- classifiers --------------------------------------------------------

bool is_sigma_primary_order(long long order, const SigmaPartition& sigma) {
  return sigma.sigma_of(order).size() <= 1;
}

bool is_sigma_primary(const FiniteGroup& g, const SigmaPartition& sigma) {
  return is_sigma_primary_order(g.order(), sigma);
}

namespace {

// Elements of h whose order is a {block}-number.
std::vector<Elem> block_torsion(const SubgroupHandle& h, int block,
                                const SigmaPartition& sigma) {
  std::vector<Elem> out;
  for (Elem x : h.members)
    if (sigma.is_pi_number(h.parent->element_order(x), {block})) out.push_back(x);
  return out;
}

bool closed_under_product(const FiniteGroup& g, const std::vector<Elem>& set) {
  std::vector<char> mask(g.order(), 0);
  for (Elem x : set) mask[x] = 1;
  for (Elem x : set)
    for (Elem y : set)
      if (!mask[g.mult(x, y)]) return false;
  return true;
}

}  // namespace

bool is_sigma_nilpotent(const SubgroupHandle& h, const SigmaPartition& sigma) {
  long long product = 1;
  for (int block : sigma.sigma_of(h.order())) {
    std::vector<Elem> part = block_torsion(h, block, sigma);
    if (!closed_under_product(*h.parent, part)) return false;
    product *= static_cast<long long>(part.size());
  }
  return product == h.order();
}

bool is_sigma_nilpotent(const FiniteGroup& g, const SigmaPartition& sigma) {
  return is_sigma_nilpotent(full_subgroup(g), sigma);
}

bool is_sigma_soluble(const SubgroupHandle& h, const SigmaPartition& sigma) {
  for (long long f : chief_factor_orders_within(h))
    if (!is_sigma_primary_order(f, sigma)) return false;
  return true;
}

bool is_sigma_soluble(const FiniteGroup& g, const SigmaPartition& sigma) {
  for (const ChiefFactor& f : chief_series(g).factors)
    if (!is_sigma_primary_order(f.order, sigma)) return false;
  return true;
}

std::vector<SubgroupHandle> hall_subgroups(const SubgroupHandle& ambient,
                                           const std::vector<int>& pi,
                                           const SigmaPartition& sigma) {
  std::vector<SubgroupHandle> out;
  for (const SubgroupHandle& s : subgroups_within(ambient)) {
    long long index = ambient.order() / s.order();
    if (!sigma.is_pi_number(s.order(), pi)) continue;
    // Index must be a Pi'-number: no block of sigma(index) may lie in Pi.
    bool index_ok = true;
    for (int b : sigma.sigma_of(index))
      if (std::find(pi.begin(), pi.end(), b) != pi.end()) {
        index_ok = false;
        break;
      }
    if (index_ok) out.push_back(s);
  }
  return out;
}

std::vector<SubgroupHandle> hall_subgroups(const FiniteGroup& g, const std::vector<int>& pi,
                                           const SigmaPartition& sigma) {
  return hall_subgroups(full_subgroup(g), pi, sigma);
}

std::vector<SubgroupHandle> hall_block_subgroups(const SubgroupHandle& ambient, int block,
                                                 const SigmaPartition& sigma) {
  return hall_subgroups(ambient, {block}, sigma);
}

std::vector<HallSigmaSet> complete_hall_sigma_sets(const SubgroupHandle& ambient,
                                                   const SigmaPartition& sigma) {
  std::vector<int> blocks = sigma.sigma_of(ambient.order());
  std::vector<HallSigmaSet> sets{HallSigmaSet{}};
  for (int block : blocks) {
    auto candidates = hall_block_subgroups(ambient, block, sigma);
    if (candidates.empty()) return {};
    std::vector<HallSigmaSet> next;
    next.reserve(sets.size() * candidates.size());
    for (const HallSigmaSet& partial : sets)
      for (const SubgroupHandle& c : candidates) {
        HallSigmaSet extended = partial;
        extended.members.emplace(block, c);
        next.push_back(std::move(extended));
      }
    sets = std::move(next);
  }
  return sets;
}

std::vector<HallSigmaSet> complete_hall_sigma_sets(const FiniteGroup& g,
                                                   const SigmaPartition& sigma) {
  return complete_hall_sigma_sets(full_subgroup(g), sigma);
}

long long complete_hall_sigma_set_count(const SubgroupHandle& ambient,
                                        const SigmaPartition& sigma) {
  long long count = 1;
  for (int block : sigma.sigma_of(ambient.order())) {
    count *= static_cast<long long>(hall_block_subgroups(ambient, block, sigma).size());
    if (count == 0) return 0;
  }
  return count;
}

bool is_sigma_full_sylow_type(const FiniteGroup& g, const SigmaPartition& sigma) {
  for (const SubgroupHandle& e : all_subgroups(g)) {
    for (int block : sigma.sigma_of(e.order())) {
      auto halls = hall_block_subgroups(e, block, sigma);
      if (halls.empty()) return false;
      // sigma_i-subgroups of E.
      std::vector<SubgroupHandle> primaries;
      for (const SubgroupHandle& p : subgroups_within(e))
        if (sigma.is_pi_number(p.order(), {block})) primaries.push_back(p);
      bool covered_by_some_hall = false;
      for (const SubgroupHandle& h : halls) {
        std::vector<SubgroupHandle> conjugates;
        for (Elem x : e.members) {
          SubgroupHandle c = conjugate_subgroup(h, x);
          if (std::find(conjugates.begin(), conjugates.end(), c) == conjugates.end())
            conjugates.push_back(std::move(c));
        }
        bool all_covered = true;
        for (const SubgroupHandle& p : primaries) {
          bool found = false;
          for (const SubgroupHandle& c : conjugates)
            if (is_subset(p, c)) {
              found = true;
              break;
            }
          if (!found) {
            all_covered = false;
            break;
          }
        }
        if (all_covered) {
          covered_by_some_hall = true;
          break;
        }
      }
      if (!covered_by_some_hall) return false;
    }
  }
  return true;
}

bool is_pi_supersoluble(const SubgroupHandle& h, const std::vector<int>& primes,
                        PiSupersolubleRule rule) {
  if (rule == PiSupersolubleRule::kGlobalSupersoluble) {
    for (int p : prime_divisors(h.order()))
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) return false;
    for (long long f : chief_factor_orders_within(h))
      if (!is_prime(f)) return false;
    return true;
  }
  for (long long f : chief_factor_orders_within(h)) {
    bool touches_pi = false;
    for (int p : prime_divisors(f))
      if (std::find(primes.begin(), primes.end(), p) != primes.end()) {
        touches_pi = true;
        break;
      }
    if (touches_pi && !is_prime(f)) return false;
  }
  return true;
}

bool is_pi_supersoluble(const FiniteGroup& g, const std::vector<int>& primes,
                        PiSupersolubleRule rule) {
  return is_pi_supersoluble(full_subgroup(g), primes, rule);
}

std::optional<HallSigmaSet> find_generalized_wielandt_set(const FiniteGroup& g,
                                                          const SigmaPartition& sigma,
                                                          PiSupersolubleRule rule) {
  SubgroupHandle residual = sigma_nilpotent_residual(g, sigma);
  std::vector<int> pi = prime_divisors(residual.order());
  // The all-members condition is independent per block, so the first
  // passing candidate per block assembles the lexicographically first
  // qualifying complete Hall sigma-set.
  HallSigmaSet found;
  SubgroupHandle full = full_subgroup(g);
  for (int block : sigma.sigma_of(g.order())) {
    bool ok = false;
    for (const SubgroupHandle& h : hall_block_subgroups(full, block, sigma)) {
      if (is_pi_supersoluble(h, pi, rule)) {
        found.members.emplace(block, h);
        ok = true;
        break;
      }
    }
    if (!ok) return std::nullopt;
  }
  return found;
}

}  // namespace psigmat
