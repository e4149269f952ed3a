#include "psigmat/lattice.hpp"

#include <algorithm>
#include <set>

#include "psigmat/errors.hpp"
#include "psigmat/numeric.hpp"

namespace psigmat {

namespace {

// Subgroup enumeration: seed with every cyclic subgroup, then close under
// joins with cyclic subgroups until nothing new appears.  Every subgroup
// is an iterated join of cyclic ones, so the fixpoint is complete.
std::vector<SubgroupHandle> enumerate_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Elem>> known;
  std::vector<std::vector<Elem>> cyclic;
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<Elem> powers{0};
    Elem p = x;
    while (p != 0) {
      powers.push_back(p);
      p = g.mult(p, x);
    }
    std::sort(powers.begin(), powers.end());
    if (known.insert(powers).second) cyclic.push_back(powers);
  }

  std::vector<std::vector<Elem>> worklist(known.begin(), known.end());
  while (!worklist.empty()) {
    std::vector<std::vector<Elem>> fresh;
    for (const auto& base : worklist) {
      for (const auto& cyc : cyclic) {
        if (std::includes(base.begin(), base.end(), cyc.begin(), cyc.end())) continue;
        std::vector<Elem> seeds(base);
        seeds.insert(seeds.end(), cyc.begin(), cyc.end());
        SubgroupHandle j = generated_subgroup(g, seeds);
        if (known.insert(j.members).second) fresh.push_back(std::move(j.members));
      }
    }
    worklist = std::move(fresh);
  }

  std::vector<SubgroupHandle> out;
  out.reserve(known.size());
  for (auto& m : known) out.push_back(SubgroupHandle{&g, m});
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

}  // namespace

const std::vector<SubgroupHandle>& all_subgroups(const FiniteGroup& g) {
  // Fast path under lock; compute outside the lock, first store wins.
  auto& memo = g.memo();
  {
    std::lock_guard lock(memo.mu);
    if (memo.all_subgroups) return *memo.all_subgroups;
  }
  auto computed = std::make_shared<const std::vector<SubgroupHandle>>(enumerate_subgroups(g));
  std::lock_guard lock(memo.mu);
  if (!memo.all_subgroups) memo.all_subgroups = std::move(computed);
  return *memo.all_subgroups;
}

std::vector<SubgroupHandle> subgroups_within(const SubgroupHandle& h) {
  std::vector<SubgroupHandle> out;
  for (const SubgroupHandle& s : all_subgroups(*h.parent))
    if (s.order() <= h.order() && is_subset(s, h)) out.push_back(s);
  return out;
}

const std::vector<SubgroupHandle>& normal_subgroups(const FiniteGroup& g) {
  auto& memo = g.memo();
  {
    std::lock_guard lock(memo.mu);
    if (memo.normal_subgroups) return *memo.normal_subgroups;
  }
  std::vector<SubgroupHandle> list;
  const SubgroupHandle full = full_subgroup(g);
  for (const SubgroupHandle& s : all_subgroups(g))
    if (is_normal(s, full)) list.push_back(s);
  auto computed = std::make_shared<const std::vector<SubgroupHandle>>(std::move(list));
  std::lock_guard lock(memo.mu);
  if (!memo.normal_subgroups) memo.normal_subgroups = std::move(computed);
  return *memo.normal_subgroups;
}

std::vector<SubgroupHandle> normal_subgroups_within(const SubgroupHandle& h) {
  std::vector<SubgroupHandle> out;
  for (const SubgroupHandle& s : subgroups_within(h))
    if (is_normal(s, h)) out.push_back(s);
  return out;
}

std::vector<SubgroupHandle> minimal_normal_subgroups(const FiniteGroup& g) {
  const auto& normals = normal_subgroups(g);
  std::vector<SubgroupHandle> out;
  for (const SubgroupHandle& n : normals) {
    if (n.is_trivial()) continue;
    bool minimal = true;
    for (const SubgroupHandle& m : normals) {
      if (m.is_trivial() || m.order() >= n.order()) continue;
      if (is_subset(m, n)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  return out;
}

std::vector<SubgroupHandle> maximal_subgroups(const FiniteGroup& g) {
  const auto& subs = all_subgroups(g);
  std::vector<SubgroupHandle> out;
  for (const SubgroupHandle& s : subs) {
    if (s.is_full()) continue;
    bool maximal = true;
    for (const SubgroupHandle& t : subs) {
      if (t.is_full() || t.order() <= s.order()) continue;
      if (is_subset(s, t)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

SubgroupHandle frattini(const FiniteGroup& g) {
  auto maximals = maximal_subgroups(g);
  if (maximals.empty()) return full_subgroup(g);
  SubgroupHandle phi = maximals.front();
  for (size_t i = 1; i < maximals.size(); ++i) phi = intersect(phi, maximals[i]);
  return phi;
}

namespace {

// Least normal subgroup of G strictly above `k` with nothing normal in
// between; S/K is then a chief factor of G.
std::vector<SubgroupHandle> normal_covers(const SubgroupHandle& k,
                                          const std::vector<SubgroupHandle>& normals) {
  std::vector<SubgroupHandle> covers;
  for (const SubgroupHandle& s : normals) {
    if (s.order() <= k.order() || !is_subset(k, s)) continue;
    bool direct = true;
    for (const SubgroupHandle& t : normals) {
      if (t.order() <= k.order() || t.order() >= s.order()) continue;
      if (is_subset(k, t) && is_subset(t, s)) {
        direct = false;
        break;
      }
    }
    if (direct) covers.push_back(s);
  }
  return covers;  // already in canonical order
}

}  // namespace

ChiefSeries chief_series(const FiniteGroup& g) {
  const auto& normals = normal_subgroups(g);
  ChiefSeries series;
  series.chain.push_back(trivial_subgroup(g));
  while (!series.chain.back().is_full()) {
    auto covers = normal_covers(series.chain.back(), normals);
    if (covers.empty()) throw DomainError("chief series construction stalled");
    const SubgroupHandle& next = covers.front();
    long long factor = next.order() / series.chain.back().order();
    series.factors.push_back(ChiefFactor{factor, is_prime(factor)});
    series.chain.push_back(next);
  }
  return series;
}

std::vector<long long> chief_factor_orders_within(const SubgroupHandle& h) {
  if (h.is_trivial()) return {};
  auto normals = normal_subgroups_within(h);
  std::vector<long long> orders;
  SubgroupHandle current = trivial_subgroup(*h.parent);
  while (current.order() < h.order()) {
    const SubgroupHandle* next = nullptr;
    for (const SubgroupHandle& s : normals) {
      if (s.order() <= current.order() || !is_subset(current, s)) continue;
      bool direct = true;
      for (const SubgroupHandle& t : normals) {
        if (t.order() <= current.order() || t.order() >= s.order()) continue;
        if (is_subset(current, t) && is_subset(t, s)) {
          direct = false;
          break;
        }
      }
      if (direct) {
        next = &s;
        break;
      }
    }
    if (next == nullptr) throw DomainError("chief factor computation stalled");
    orders.push_back(next->order() / current.order());
    current = *next;
  }
  return orders;
}

namespace {

void collect_sequences(const std::vector<SubgroupHandle>& normals,
                       const SubgroupHandle& k, std::vector<long long>& prefix,
                       std::vector<std::vector<long long>>& out) {
  if (k.is_full()) {
    out.push_back(prefix);
    return;
  }
  for (const SubgroupHandle& s : normal_covers(k, normals)) {
    prefix.push_back(s.order() / k.order());
    collect_sequences(normals, s, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long long>> all_chief_factor_sequences(const FiniteGroup& g) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> prefix;
  collect_sequences(normal_subgroups(g), trivial_subgroup(g), prefix, out);
  return out;
}

}  // namespace psigmat
