#include "psigmat/group.hpp"

#include <algorithm>
#include <random>

#include "psigmat/errors.hpp"

namespace psigmat {

namespace {

// Full associativity is O(n^3); beyond order 64 a fixed-seed sample of
// 10^4 triples is used instead.
constexpr long long kFullAssocLimit = 64;
constexpr int kSampledTriples = 10000;

std::vector<std::string> default_labels(long long order) {
  std::vector<std::string> labels(order);
  for (long long i = 0; i < order; ++i) labels[i] = "e" + std::to_string(i);
  return labels;
}

}  // namespace

FiniteGroup::FiniteGroup(long long order, std::vector<Elem> mult_flat,
                         std::vector<std::string> labels, std::vector<Elem> generators)
    : order_(order), mult_(std::move(mult_flat)), labels_(std::move(labels)),
      generators_(std::move(generators)) {
  if (order_ <= 0 || static_cast<long long>(mult_.size()) != order_ * order_)
    throw DomainError("multiplication table size does not match order");
  if (labels_.empty()) labels_ = default_labels(order_);
  if (static_cast<long long>(labels_.size()) != order_)
    throw DomainError("label list size does not match order");
  if (generators_.empty() && order_ > 1) {
    for (Elem x = 1; x < order_; ++x) generators_.push_back(x);
  }

  inv_.assign(order_, -1);
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = 0; b < order_; ++b) {
      if (mult(a, b) == 0) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0) throw DomainError("element without inverse in table");
  }
  validate();
}

void FiniteGroup::validate() const {
  const long long n = order_;
  for (Elem a = 0; a < n; ++a) {
    if (mult(0, a) != a || mult(a, 0) != a)
      throw DomainError("element 0 is not an identity");
    if (mult(a, inv_[a]) != 0 || mult(inv_[a], a) != 0)
      throw DomainError("inverse table inconsistent with multiplication");
  }
  // Rows and columns must be permutations (cancellation).
  std::vector<char> seen(n);
  for (Elem a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      Elem v = mult(a, b);
      if (v < 0 || v >= n || seen[v]) throw DomainError("table row is not a permutation");
      seen[v] = 1;
    }
  }
  auto assoc = [&](Elem a, Elem b, Elem c) {
    return mult(mult(a, b), c) == mult(a, mult(b, c));
  };
  if (n <= kFullAssocLimit) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw DomainError("multiplication is not associative");
  } else {
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (int i = 0; i < kSampledTriples; ++i)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw DomainError("multiplication is not associative (sampled)");
  }
  // Generators must reach every element.
  std::vector<char> mask(n, 0);
  mask[0] = 1;
  std::vector<Elem> frontier{0};
  while (!frontier.empty()) {
    Elem x = frontier.back();
    frontier.pop_back();
    for (Elem g : generators_) {
      Elem y = mult(x, g);
      if (!mask[y]) {
        mask[y] = 1;
        frontier.push_back(y);
      }
    }
  }
  for (Elem x = 0; x < n; ++x)
    if (!mask[x]) throw DomainError("generators do not generate the whole group");
}

int FiniteGroup::element_order(Elem x) const {
  int k = 1;
  Elem p = x;
  while (p != 0) {
    p = mult(p, x);
    ++k;
  }
  return k;
}

std::vector<int> FiniteGroup::order_signature() const {
  std::vector<int> sig(order_);
  for (Elem x = 0; x < order_; ++x) sig[x] = element_order(x);
  std::sort(sig.begin(), sig.end());
  return sig;
}

bool SubgroupHandle::contains(Elem x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

bool subgroup_less(const SubgroupHandle& a, const SubgroupHandle& b) {
  if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
  return a.members < b.members;
}

// ---- construction -----------------------------------------------------

GroupPtr group_from_generators(int degree, const std::vector<Perm>& gens,
                               const GroupOptions& opts) {
  if (degree < 1) throw ParseError("degree must be positive");
  for (const Perm& g : gens)
    if (g.degree() != degree) throw ParseError("generator degree mismatch");

  std::vector<Perm> elems{Perm(degree)};
  std::map<std::vector<int>, Elem> index{{elems[0].images(), 0}};
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const Perm& g : gens) {
      Perm w = elems[i].compose(g);
      if (index.emplace(w.images(), static_cast<Elem>(elems.size())).second) {
        elems.push_back(std::move(w));
        if (static_cast<long long>(elems.size()) > opts.order_cap)
          throw CapExceeded("group order exceeds cap " + std::to_string(opts.order_cap));
      }
    }
  }

  const long long n = static_cast<long long>(elems.size());
  std::vector<Elem> table(n * n);
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b)
      table[a * n + b] = index.at(elems[a].compose(elems[b]).images());

  std::vector<std::string> labels(n);
  for (long long i = 0; i < n; ++i) labels[i] = cycle_string(elems[i]);

  std::vector<Elem> gen_ids;
  for (const Perm& g : gens) {
    Elem id = index.at(g.images());
    if (id != 0) gen_ids.push_back(id);
  }

  return std::make_shared<const FiniteGroup>(n, std::move(table), std::move(labels),
                                             std::move(gen_ids));
}

GroupPtr group_from_table(std::vector<std::vector<Elem>> table,
                          std::vector<std::string> labels, std::vector<Elem> generators) {
  const long long n = static_cast<long long>(table.size());
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (static_cast<long long>(row.size()) != n)
      throw DomainError("multiplication table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return std::make_shared<const FiniteGroup>(n, std::move(flat), std::move(labels),
                                             std::move(generators));
}

GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h, const GroupOptions& opts) {
  const long long n = g.order() * h.order();
  if (n > opts.order_cap)
    throw CapExceeded("direct product order " + std::to_string(n) + " exceeds cap");
  auto id = [&](Elem a, Elem b) { return static_cast<Elem>(a * h.order() + b); };
  std::vector<Elem> table(n * n);
  for (Elem a1 = 0; a1 < g.order(); ++a1)
    for (Elem b1 = 0; b1 < h.order(); ++b1)
      for (Elem a2 = 0; a2 < g.order(); ++a2)
        for (Elem b2 = 0; b2 < h.order(); ++b2)
          table[static_cast<size_t>(id(a1, b1)) * n + id(a2, b2)] =
              id(g.mult(a1, a2), h.mult(b1, b2));
  std::vector<std::string> labels(n);
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < h.order(); ++b)
      labels[id(a, b)] = "(" + g.label(a) + "," + h.label(b) + ")";
  std::vector<Elem> gens;
  for (Elem x : g.generators()) gens.push_back(id(x, 0));
  for (Elem x : h.generators()) gens.push_back(id(0, x));
  return std::make_shared<const FiniteGroup>(n, std::move(table), std::move(labels),
                                             std::move(gens));
}

GroupPtr semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                            const std::vector<std::vector<Elem>>& action,
                            const GroupOptions& opts) {
  if (static_cast<long long>(action.size()) != h.order())
    throw DomainError("semidirect action must provide one map per H-element");
  for (const auto& alpha : action) {
    if (static_cast<long long>(alpha.size()) != n.order())
      throw DomainError("semidirect action map has wrong size");
    std::vector<char> seen(n.order(), 0);
    for (Elem v : alpha) {
      if (v < 0 || v >= n.order() || seen[v])
        throw DomainError("semidirect action image is not a bijection");
      seen[v] = 1;
    }
    for (Elem a = 0; a < n.order(); ++a)
      for (Elem b = 0; b < n.order(); ++b)
        if (alpha[n.mult(a, b)] != n.mult(alpha[a], alpha[b]))
          throw DomainError("semidirect action image is not an automorphism");
  }
  for (Elem x = 0; x < n.order(); ++x)
    if (action[0][x] != x) throw DomainError("semidirect action at identity is not trivial");
  // Homomorphism: action[h1 h2] == action[h1] o action[h2].
  for (Elem h1 = 0; h1 < h.order(); ++h1)
    for (Elem h2 = 0; h2 < h.order(); ++h2)
      for (Elem x = 0; x < n.order(); ++x)
        if (action[h.mult(h1, h2)][x] != action[h1][action[h2][x]])
          throw DomainError("semidirect action is not a homomorphism into Aut(N)");

  const long long total = n.order() * h.order();
  if (total > opts.order_cap)
    throw CapExceeded("semidirect product order " + std::to_string(total) + " exceeds cap");
  auto id = [&](Elem a, Elem b) { return static_cast<Elem>(a * h.order() + b); };
  std::vector<Elem> table(total * total);
  for (Elem n1 = 0; n1 < n.order(); ++n1)
    for (Elem h1 = 0; h1 < h.order(); ++h1)
      for (Elem n2 = 0; n2 < n.order(); ++n2)
        for (Elem h2 = 0; h2 < h.order(); ++h2)
          table[static_cast<size_t>(id(n1, h1)) * total + id(n2, h2)] =
              id(n.mult(n1, action[h1][n2]), h.mult(h1, h2));
  std::vector<std::string> labels(total);
  for (Elem a = 0; a < n.order(); ++a)
    for (Elem b = 0; b < h.order(); ++b)
      labels[id(a, b)] = "(" + n.label(a) + "," + h.label(b) + ")";
  std::vector<Elem> gens;
  for (Elem x : n.generators()) gens.push_back(id(x, 0));
  for (Elem x : h.generators()) gens.push_back(id(0, x));
  return std::make_shared<const FiniteGroup>(total, std::move(table), std::move(labels),
                                             std::move(gens));
}

QuotientResult quotient(const FiniteGroup& g, const SubgroupHandle& n) {
  if (n.parent != &g) throw DomainError("quotient: subgroup belongs to a different group");
  if (!is_normal(n, full_subgroup(g))) throw DomainError("quotient: subgroup is not normal");

  {
    std::lock_guard lock(g.memo().mu);
    auto it = g.memo().quotients.find(n.members);
    if (it != g.memo().quotients.end()) return it->second;
  }

  const long long order = g.order();
  std::vector<Elem> coset(order, -1);
  std::vector<Elem> rep;
  for (Elem x = 0; x < order; ++x) {
    if (coset[x] >= 0) continue;
    Elem c = static_cast<Elem>(rep.size());
    rep.push_back(x);  // x is the least element of its coset
    for (Elem m : n.members) coset[g.mult(x, m)] = c;
  }
  const long long q = static_cast<long long>(rep.size());
  std::vector<Elem> table(q * q);
  for (long long a = 0; a < q; ++a)
    for (long long b = 0; b < q; ++b)
      table[a * q + b] = coset[g.mult(rep[a], rep[b])];
  std::vector<std::string> labels(q);
  for (long long c = 0; c < q; ++c) labels[c] = g.label(rep[c]) + "N";
  std::vector<Elem> gens;
  for (Elem x : g.generators())
    if (coset[x] != 0) gens.push_back(coset[x]);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  QuotientResult result;
  result.group = std::make_shared<const FiniteGroup>(q, std::move(table), std::move(labels),
                                                     std::move(gens));
  result.projection = std::move(coset);

  // Kernel must equal N.
  std::vector<Elem> kernel;
  for (Elem x = 0; x < order; ++x)
    if (result.projection[x] == 0) kernel.push_back(x);
  if (kernel != n.members) throw DomainError("quotient kernel mismatch");

  std::lock_guard lock(g.memo().mu);
  auto [it, inserted] = g.memo().quotients.emplace(n.members, result);
  return it->second;
}

ReifiedSubgroup reify(const SubgroupHandle& h) {
  const FiniteGroup& g = *h.parent;
  const long long n = h.order();
  std::vector<Elem> to_sub(g.order(), -1);
  for (long long i = 0; i < n; ++i) to_sub[h.members[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(n * n);
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b) {
      Elem prod = g.mult(h.members[a], h.members[b]);
      if (to_sub[prod] < 0) throw DomainError("reify: member set is not closed");
      table[a * n + b] = to_sub[prod];
    }
  std::vector<std::string> labels(n);
  for (long long i = 0; i < n; ++i) labels[i] = g.label(h.members[i]);
  // Greedy small generating set.
  std::vector<Elem> gens;
  std::vector<char> mask(n, 0);
  mask[0] = 1;
  long long covered = 1;
  for (long long i = 1; i < n && covered < n; ++i) {
    if (mask[i]) continue;
    gens.push_back(static_cast<Elem>(i));
    std::vector<Elem> frontier;
    for (long long x = 0; x < n; ++x)
      if (mask[x]) frontier.push_back(static_cast<Elem>(x));
    while (!frontier.empty()) {
      Elem x = frontier.back();
      frontier.pop_back();
      for (Elem s : gens) {
        Elem y = table[static_cast<size_t>(x) * n + s];
        if (!mask[y]) {
          mask[y] = 1;
          ++covered;
          frontier.push_back(y);
        }
      }
    }
  }
  ReifiedSubgroup out;
  out.group = std::make_shared<const FiniteGroup>(n, std::move(table), std::move(labels),
                                                  std::move(gens));
  out.to_sub = std::move(to_sub);
  return out;
}

// ---- elementary subgroup operations ------------------------------------

SubgroupHandle full_subgroup(const FiniteGroup& g) {
  SubgroupHandle h{&g, {}};
  h.members.resize(g.order());
  for (Elem x = 0; x < g.order(); ++x) h.members[x] = x;
  return h;
}

SubgroupHandle trivial_subgroup(const FiniteGroup& g) { return SubgroupHandle{&g, {0}}; }

SubgroupHandle generated_subgroup(const FiniteGroup& g, std::span<const Elem> seeds) {
  std::vector<char> mask(g.order(), 0);
  mask[0] = 1;
  std::vector<Elem> frontier{0};
  while (!frontier.empty()) {
    Elem x = frontier.back();
    frontier.pop_back();
    for (Elem s : seeds) {
      Elem y = g.mult(x, s);
      if (!mask[y]) {
        mask[y] = 1;
        frontier.push_back(y);
      }
    }
  }
  SubgroupHandle h{&g, {}};
  for (Elem x = 0; x < g.order(); ++x)
    if (mask[x]) h.members.push_back(x);
  return h;
}

SubgroupHandle conjugate_subgroup(const SubgroupHandle& a, Elem g) {
  const FiniteGroup& grp = *a.parent;
  if (g < 0 || g >= grp.order()) throw DomainError("conjugating element out of range");
  SubgroupHandle h{&grp, {}};
  h.members.reserve(a.members.size());
  for (Elem x : a.members) h.members.push_back(grp.conjugate(x, g));
  std::sort(h.members.begin(), h.members.end());
  return h;
}

bool is_normal(const SubgroupHandle& a, const SubgroupHandle& b) {
  if (a.parent != b.parent) throw DomainError("is_normal: different parent groups");
  if (!is_subset(a, b)) throw DomainError("is_normal: A is not contained in B");
  const FiniteGroup& g = *a.parent;
  for (Elem y : b.members)
    for (Elem x : a.members)
      if (!a.contains(g.conjugate(x, y))) return false;
  return true;
}

SubgroupHandle core_in(const SubgroupHandle& a, const SubgroupHandle& b) {
  if (a.parent != b.parent) throw DomainError("core_in: different parent groups");
  if (!is_subset(a, b)) throw DomainError("core_in: A is not contained in B");
  const FiniteGroup& g = *a.parent;
  std::vector<char> mask(g.order(), 0);
  for (Elem x : a.members) mask[x] = 1;
  for (Elem y : b.members) {
    // Intersect with A^y.
    std::vector<char> conj(g.order(), 0);
    for (Elem x : a.members) conj[g.conjugate(x, y)] = 1;
    for (Elem x = 0; x < g.order(); ++x) mask[x] = static_cast<char>(mask[x] & conj[x]);
  }
  SubgroupHandle h{&g, {}};
  for (Elem x = 0; x < g.order(); ++x)
    if (mask[x]) h.members.push_back(x);
  return h;
}

std::vector<Elem> product_set(const SubgroupHandle& a, const SubgroupHandle& b) {
  if (a.parent != b.parent) throw DomainError("product_set: different parent groups");
  const FiniteGroup& g = *a.parent;
  std::vector<char> mask(g.order(), 0);
  for (Elem x : a.members)
    for (Elem y : b.members) mask[g.mult(x, y)] = 1;
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x)
    if (mask[x]) out.push_back(x);
  return out;
}

bool permutes(const SubgroupHandle& a, const SubgroupHandle& b) {
  return product_set(a, b) == product_set(b, a);
}

SubgroupHandle intersect(const SubgroupHandle& a, const SubgroupHandle& b) {
  if (a.parent != b.parent) throw DomainError("intersect: different parent groups");
  SubgroupHandle h{a.parent, {}};
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(h.members));
  return h;
}

SubgroupHandle join(const SubgroupHandle& a, const SubgroupHandle& b) {
  if (a.parent != b.parent) throw DomainError("join: different parent groups");
  std::vector<Elem> seeds(a.members);
  seeds.insert(seeds.end(), b.members.begin(), b.members.end());
  return generated_subgroup(*a.parent, seeds);
}

bool is_subset(const SubgroupHandle& a, const SubgroupHandle& b) {
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end());
}

bool is_abelian(const SubgroupHandle& h) {
  const FiniteGroup& g = *h.parent;
  for (size_t i = 0; i < h.members.size(); ++i)
    for (size_t j = i + 1; j < h.members.size(); ++j)
      if (g.mult(h.members[i], h.members[j]) != g.mult(h.members[j], h.members[i])) return false;
  return true;
}

bool is_cyclic(const SubgroupHandle& h) {
  const FiniteGroup& g = *h.parent;
  for (Elem x : h.members)
    if (g.element_order(x) == h.order()) return true;
  return false;
}

void validate_subgroup(const SubgroupHandle& h) {
  const FiniteGroup& g = *h.parent;
  if (h.members.empty() || h.members[0] != 0)
    throw DomainError("subgroup must contain the identity");
  if (!std::is_sorted(h.members.begin(), h.members.end()))
    throw DomainError("subgroup member list must be sorted");
  if (g.order() % h.order() != 0)
    throw DomainError("subgroup size does not divide group order");
  for (Elem x : h.members) {
    if (!h.contains(g.inv(x))) throw DomainError("subgroup not closed under inverse");
    for (Elem y : h.members)
      if (!h.contains(g.mult(x, y))) throw DomainError("subgroup not closed under product");
  }
}

}  // namespace psigmat
