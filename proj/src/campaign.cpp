#include "psigmat/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "psigmat/errors.hpp"
#include "psigmat/lattice.hpp"
#include "psigmat/numeric.hpp"
#include "psigmat/psigmat.hpp"
#include "psigmat/residuals.hpp"

namespace psigmat {

namespace {

constexpr long long kClassicalCrossCheckLimit = 48;

std::string subgroup_brief(const SubgroupHandle& h, size_t limit = 8) {
  std::string out = "order " + std::to_string(h.order()) + " {";
  for (size_t i = 0; i < h.members.size() && i < limit; ++i) {
    if (i > 0) out += ", ";
    out += h.parent->label(h.members[i]);
  }
  if (h.members.size() > limit) out += ", ...";
  out += "}";
  return out;
}

// Maps a subgroup of E (given in parent indices) into reified coordinates.
SubgroupHandle map_into(const ReifiedSubgroup& re, const SubgroupHandle& s) {
  SubgroupHandle out{re.group.get(), {}};
  out.members.reserve(s.members.size());
  for (Elem x : s.members) out.members.push_back(re.to_sub[x]);
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace

bool is_s_permutable(const SubgroupHandle& a, const FiniteGroup& g) {
  for (int p : prime_divisors(g.order())) {
    long long p_part = 1;
    long long n = g.order();
    while (n % p == 0) {
      p_part *= p;
      n /= p;
    }
    for (const SubgroupHandle& s : all_subgroups(g)) {
      if (s.order() != p_part) continue;
      if (!permutes(a, s)) return false;
    }
  }
  return true;
}

namespace {

// ---- per-group checks (sigma independent) --------------------------------

void check_hall_intersection_identity(const FiniteGroup& g, std::vector<CheckResult>& out) {
  CheckResult r{"hall_intersection_identity", true, ""};
  const auto& subs = all_subgroups(g);
  const size_t n = subs.size();
  // Pairwise permutability matrix.
  std::vector<char> perm_matrix(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      char v = permutes(subs[i], subs[j]) ? 1 : 0;
      perm_matrix[i * n + j] = v;
      perm_matrix[j * n + i] = v;
    }
  for (size_t hi = 0; hi < n && r.pass; ++hi) {
    if (!is_hall_subgroup(subs[hi], g)) continue;
    for (size_t ki = 0; ki < n && r.pass; ++ki) {
      if (!perm_matrix[hi * n + ki]) continue;
      std::vector<Elem> hk = product_set(subs[hi], subs[ki]);
      for (size_t ni = 0; ni < n; ++ni) {
        if (!perm_matrix[hi * n + ni] || !perm_matrix[ki * n + ni]) continue;
        const SubgroupHandle& nn = subs[ni];
        std::vector<Elem> lhs;
        for (Elem x : nn.members)
          if (std::binary_search(hk.begin(), hk.end(), x)) lhs.push_back(x);
        std::vector<Elem> rhs =
            product_set(intersect(nn, subs[hi]), intersect(nn, subs[ki]));
        if (lhs != rhs) {
          r.pass = false;
          r.detail = "H=" + subgroup_brief(subs[hi]) + " K=" + subgroup_brief(subs[ki]) +
                     " N=" + subgroup_brief(nn);
          break;
        }
      }
    }
  }
  out.push_back(std::move(r));
}

// Classical specializations at the singleton partition of the group's primes.
void check_classical_corollaries(const FiniteGroup& g, std::vector<CheckResult>& out) {
  SigmaPartition sigma0 = SigmaPartition::sigma_zero_for(g.order());
  bool psigmat0 = is_psigmat_bruteforce(g, sigma0).value;

  // Normal Hall D, G/D transitive, subnormal subgroups of D normal in G
  // => G transitive.
  CheckResult hall_transfer{"classical_hall_transfer", true, ""};
  for (const SubgroupHandle& d : normal_hall_subgroups(g)) {
    if (!is_psigmat_bruteforce(*quotient(g, d).group, sigma0).value) continue;
    bool all_normal = true;
    SubgroupHandle full = full_subgroup(g);
    SubnormalTester tester(d, sigma0);
    for (const SubgroupHandle& s : subgroups_within(d)) {
      if (!tester.test(s).value) continue;
      if (!is_normal(s, full)) {
        all_normal = false;
        break;
      }
    }
    if (all_normal && !psigmat0) {
      hall_transfer.pass = false;
      hall_transfer.detail = "D=" + subgroup_brief(d);
      break;
    }
  }
  out.push_back(std::move(hall_transfer));

  // Soluble transitive groups: the nilpotent residual must be an abelian
  // odd-order Hall subgroup with power automorphisms induced by G.
  CheckResult necessity{"classical_residual_necessity", true, ""};
  if (is_sigma_soluble(g, sigma0) && psigmat0) {
    SubgroupHandle d = nilpotent_residual(g);
    bool ok = is_hall_subgroup(d, g) && d.order() % 2 == 1 && is_abelian(d) &&
              induces_power_automorphisms(g, d);
    if (!ok) {
      necessity.pass = false;
      necessity.detail = "residual " + subgroup_brief(d);
    }
  }
  out.push_back(std::move(necessity));
}

// ---- per-cell checks -------------------------------------------------------

struct CellContext {
  const FiniteGroup& g;
  const SigmaPartition& sigma;
  PsigmaTVerdict brute;
  PsigmaTVerdict criterion;
};

void check_route_agreement(CellContext& ctx, CellOutcome& out) {
  CheckResult agree{"route_agreement", ctx.brute.value == ctx.criterion.value, ""};
  if (!agree.pass)
    agree.detail = "transitivity=" + std::to_string(ctx.brute.value) +
                   " criterion=" + std::to_string(ctx.criterion.value);
  out.checks.push_back(std::move(agree));

  // Every false verdict's witness must replay against the primitives.
  CheckResult replay{"witness_replay", true, ""};
  if (!ctx.brute.value) {
    if (!ctx.brute.pair_witness) {
      replay.pass = false;
      replay.detail = "missing pair witness";
    } else {
      const auto& [k, h] = *ctx.brute.pair_witness;
      bool ok = is_sigma_quasinormal(k, h, ctx.sigma).value &&
                is_sigma_quasinormal(h, ctx.g, ctx.sigma).value &&
                !is_sigma_quasinormal(k, ctx.g, ctx.sigma).value;
      if (!ok) {
        replay.pass = false;
        replay.detail = "pair witness failed replay: K=" + subgroup_brief(k) +
                        " H=" + subgroup_brief(h);
      }
    }
  }
  if (!ctx.criterion.value) {
    if (!ctx.criterion.subgroup_witness || ctx.criterion.witness_chain.empty()) {
      replay.pass = false;
      replay.detail += " missing criterion witness";
    } else {
      const SubgroupHandle& a = *ctx.criterion.subgroup_witness;
      const auto& chain = ctx.criterion.witness_chain;
      bool ok = chain.front().members == a.members && chain.back().is_full() &&
                !is_sigma_quasinormal(a, ctx.g, ctx.sigma).value;
      for (size_t i = 0; ok && i + 1 < chain.size(); ++i)
        ok = is_subset(chain[i], chain[i + 1]) &&
             SubnormalTester::step_ok(chain[i], chain[i + 1], ctx.sigma);
      if (!ok) {
        replay.pass = false;
        replay.detail += " chain witness failed replay for " + subgroup_brief(a);
      }
    }
  }
  out.checks.push_back(std::move(replay));
}

void check_lemma_closures(CellContext& ctx, CellOutcome& out) {
  const FiniteGroup& g = ctx.g;
  const SigmaPartition& sigma = ctx.sigma;

  out.checks.push_back(CheckResult{
      "soluble_implies_full_sylow_type",
      !is_sigma_soluble(g, sigma) || is_sigma_full_sylow_type(g, sigma), ""});

  CheckResult closure{"sigma_nilpotent_closure", true, ""};
  const auto& normals = normal_subgroups(g);
  if (is_sigma_nilpotent(g, sigma)) {
    for (const SubgroupHandle& s : all_subgroups(g))
      if (!is_sigma_nilpotent(s, sigma)) {
        closure.pass = false;
        closure.detail = "subgroup " + subgroup_brief(s);
        break;
      }
    if (closure.pass)
      for (const SubgroupHandle& n : normals)
        if (!is_sigma_nilpotent(*quotient(g, n).group, sigma)) {
          closure.pass = false;
          closure.detail = "quotient by " + subgroup_brief(n);
          break;
        }
  }
  if (closure.pass) {
    // Products of normal sigma-nilpotent subgroups stay sigma-nilpotent.
    for (size_t i = 0; i < normals.size() && closure.pass; ++i) {
      if (!is_sigma_nilpotent(normals[i], sigma)) continue;
      for (size_t j = i + 1; j < normals.size(); ++j) {
        if (!is_sigma_nilpotent(normals[j], sigma)) continue;
        if (!is_sigma_nilpotent(join(normals[i], normals[j]), sigma)) {
          closure.pass = false;
          closure.detail = "product of " + subgroup_brief(normals[i]) + " and " +
                           subgroup_brief(normals[j]);
          break;
        }
      }
    }
  }
  out.checks.push_back(std::move(closure));

  // Frattini condition: E normal, E/(E n Phi(G)) sigma-nilpotent => E is.
  CheckResult frattini_check{"frattini_condition", true, ""};
  SubgroupHandle phi = frattini(g);
  for (const SubgroupHandle& e : normals) {
    if (e.is_trivial()) continue;
    ReifiedSubgroup re = reify(e);
    SubgroupHandle inter = map_into(re, intersect(e, phi));
    bool quotient_nilp = is_sigma_nilpotent(*quotient(*re.group, inter).group, sigma);
    if (quotient_nilp && !is_sigma_nilpotent(e, sigma)) {
      frattini_check.pass = false;
      frattini_check.detail = "E=" + subgroup_brief(e);
      break;
    }
  }
  out.checks.push_back(std::move(frattini_check));

  // Residual of the quotient equals the projected residual.
  CheckResult residual_id{"residual_quotient_identity", true, ""};
  SubgroupHandle d = sigma_nilpotent_residual(g, sigma);
  for (const SubgroupHandle& n : normals) {
    QuotientResult q = quotient(g, n);
    std::vector<Elem> image;
    for (Elem x : product_set(d, n)) image.push_back(q.projection[x]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (sigma_nilpotent_residual(*q.group, sigma).members != image) {
      residual_id.pass = false;
      residual_id.detail = "N=" + subgroup_brief(n);
      break;
    }
  }
  out.checks.push_back(std::move(residual_id));
}

void check_psigmat_properties(CellContext& ctx, CellOutcome& out) {
  const FiniteGroup& g = ctx.g;
  const SigmaPartition& sigma = ctx.sigma;

  // Quasinormal implies subnormal, subgroup by subgroup.
  CheckResult qn_sn{"quasinormal_implies_subnormal", true, ""};
  QuasinormalTester in_g(full_subgroup(g), sigma);
  SubnormalTester subnormal(full_subgroup(g), sigma);
  for (const SubgroupHandle& a : all_subgroups(g)) {
    if (in_g.test(a).value && !subnormal.test(a).value) {
      qn_sn.pass = false;
      qn_sn.detail = subgroup_brief(a);
      break;
    }
  }
  out.checks.push_back(std::move(qn_sn));

  SpecialPsigmaTResult special = is_special_psigmat(g, sigma);
  out.checks.push_back(CheckResult{"special_implies_psigmat",
                                   !special.value || ctx.brute.value, ""});

  // Quotient closure of both properties.
  CheckResult quot_psigmat{"psigmat_quotient_closure", true, ""};
  CheckResult quot_special{"special_quotient_closure", true, ""};
  if (ctx.brute.value || special.value) {
    for (const SubgroupHandle& n : normal_subgroups(g)) {
      QuotientResult q = quotient(g, n);
      if (ctx.brute.value && !is_psigmat_bruteforce(*q.group, sigma).value) {
        quot_psigmat.pass = false;
        quot_psigmat.detail = "N=" + subgroup_brief(n);
      }
      if (special.value && !is_special_psigmat(*q.group, sigma).value) {
        quot_special.pass = false;
        quot_special.detail = "N=" + subgroup_brief(n);
      }
      if (!quot_psigmat.pass && !quot_special.pass) break;
    }
  }
  out.checks.push_back(std::move(quot_psigmat));
  out.checks.push_back(std::move(quot_special));
}

void check_theorems(CellContext& ctx, CellOutcome& out) {
  const FiniteGroup& g = ctx.g;
  const SigmaPartition& sigma = ctx.sigma;

  CheckResult thm_a{"theorem_a_implication", true, ""};
  CheckResult cor_a{"theorem_a_nilpotent_variant", true, ""};
  for (const SubgroupHandle& d : normal_sigma_hall_subgroups(g, sigma)) {
    TheoremAResult a = theorem_a_premises(g, sigma, d);
    if (a.premises) {
      if (d.order() > 1 && d.order() < g.order()) ++out.nontrivial_a;
      if (out.key == "C5xS3" && out.spec == "3,5|*" && d.order() == 15)
        out.c5xs3_hall15_instance = true;
      if (!ctx.brute.value) {
        thm_a.pass = false;
        thm_a.detail = "premises hold for D=" + subgroup_brief(d) + " but verdict is false";
      }
    }
    // Variant with sigma-nilpotent quotient and every subgroup of D normal.
    if (is_sigma_nilpotent(*quotient(g, d).group, sigma)) {
      bool dedekind_in_g = true;
      SubgroupHandle full = full_subgroup(g);
      for (const SubgroupHandle& s : subgroups_within(d))
        if (!is_normal(s, full)) {
          dedekind_in_g = false;
          break;
        }
      if (dedekind_in_g && !ctx.brute.value) {
        cor_a.pass = false;
        cor_a.detail = "D=" + subgroup_brief(d);
      }
    }
  }
  out.checks.push_back(std::move(thm_a));
  out.checks.push_back(std::move(cor_a));

  CheckResult thm_b{"theorem_b_implication", true, ""};
  for (const SubgroupHandle& d : normal_hall_subgroups(g)) {
    TheoremBResult b = theorem_b_premises(g, sigma, d);
    if (b.premises) {
      if (d.order() > 1 && d.order() < g.order()) ++out.nontrivial_b;
      if (!ctx.brute.value) {
        thm_b.pass = false;
        thm_b.detail = "premises hold for D=" + subgroup_brief(d) + " but verdict is false";
      }
    }
  }
  out.checks.push_back(std::move(thm_b));

  TheoremCResult c = theorem_c_criterion(g, sigma);
  out.thmc_applicable = c.applicable;
  out.thmc_verdict = c.verdict;
  CheckResult thm_c{"theorem_c_equivalence", true, ""};
  if (c.applicable && c.verdict != ctx.brute.value) {
    thm_c.pass = false;
    thm_c.detail = "criterion verdict " + std::to_string(c.verdict) + " vs transitivity " +
                   std::to_string(ctx.brute.value);
  }
  out.checks.push_back(std::move(thm_c));
}

void check_classical_specialization(CellContext& ctx, CellOutcome& out) {
  const FiniteGroup& g = ctx.g;
  if (!ctx.sigma.separates_primes_of(g.order()) || g.order() > kClassicalCrossCheckLimit)
    return;
  CheckResult r{"classical_specialization", true, ""};
  QuasinormalTester in_g(full_subgroup(g), ctx.sigma);
  for (const SubgroupHandle& a : all_subgroups(g)) {
    if (in_g.test(a).value != is_s_permutable(a, g)) {
      r.pass = false;
      r.detail = subgroup_brief(a);
      break;
    }
  }
  out.checks.push_back(std::move(r));
}

CellOutcome run_cell(const CatalogEntry& entry, const std::string& spec) {
  CellOutcome out;
  out.key = entry.key;
  out.spec = spec;
  try {
    SigmaPartition sigma = parse_sigma_spec(spec);
    CellContext ctx{*entry.group, sigma, is_psigmat_bruteforce(*entry.group, sigma),
                    is_psigmat_subnormal_criterion(*entry.group, sigma)};
    out.psigmat_value = ctx.brute.value;
    check_route_agreement(ctx, out);
    check_lemma_closures(ctx, out);
    check_psigmat_properties(ctx, out);
    check_theorems(ctx, out);
    check_classical_specialization(ctx, out);
  } catch (const std::exception& e) {
    out.checks.push_back(CheckResult{"exception", false, e.what()});
  }
  for (const CheckResult& c : out.checks)
    if (!c.pass) out.falsified = true;
  return out;
}

GroupOutcome run_group_checks(const CatalogEntry& entry) {
  GroupOutcome out;
  out.key = entry.key;
  try {
    check_hall_intersection_identity(*entry.group, out.checks);
    check_classical_corollaries(*entry.group, out.checks);
  } catch (const std::exception& e) {
    out.checks.push_back(CheckResult{"exception", false, e.what()});
  }
  for (const CheckResult& c : out.checks)
    if (!c.pass) out.falsified = true;
  return out;
}

}  // namespace

CampaignSummary run_campaign(const std::vector<CatalogEntry>& catalog,
                             const CampaignOptions& opts) {
  std::vector<const CatalogEntry*> selected;
  if (!opts.only.has_value()) {
    for (const CatalogEntry& e : catalog) selected.push_back(&e);
  } else {
    for (const std::string& key : *opts.only) selected.push_back(&catalog_entry(catalog, key));
  }
  std::sort(selected.begin(), selected.end(),
            [](const CatalogEntry* a, const CatalogEntry* b) { return a->key < b->key; });

  std::vector<std::string> specs =
      opts.sigma_specs.empty() ? standard_sigma_specs() : opts.sigma_specs;
  for (const std::string& s : specs) parse_sigma_spec(s);  // validate up front

  CampaignSummary summary;
  summary.groups.resize(selected.size());
  summary.cells.resize(selected.size() * specs.size());

  unsigned jobs = opts.jobs > 0 ? static_cast<unsigned>(opts.jobs)
                                : std::max(1u, std::thread::hardware_concurrency());
  const size_t total_tasks = selected.size() + summary.cells.size();
  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      size_t task = next.fetch_add(1);
      if (task >= total_tasks) break;
      if (task < selected.size()) {
        summary.groups[task] = run_group_checks(*selected[task]);
      } else {
        size_t cell = task - selected.size();
        summary.cells[cell] =
            run_cell(*selected[cell / specs.size()], specs[cell % specs.size()]);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (const GroupOutcome& g : summary.groups)
    if (g.falsified) ++summary.falsifications;
  for (const CellOutcome& c : summary.cells) {
    if (c.falsified) ++summary.falsifications;
    if (c.thmc_applicable) {
      ++summary.thmc_applicable;
      if (c.thmc_verdict)
        ++summary.thmc_applicable_true;
      else
        ++summary.thmc_applicable_false;
      if (c.thmc_verdict == c.psigmat_value) ++summary.thmc_agreements;
    }
    summary.nontrivial_ab_instances += c.nontrivial_a + c.nontrivial_b;
    if (c.c5xs3_hall15_instance) summary.c5xs3_hall15_instance = true;
  }
  return summary;
}

nlohmann::ordered_json campaign_to_json(const CampaignSummary& s) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = 1;
  ordered_json groups = ordered_json::array();
  for (const GroupOutcome& g : s.groups) {
    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : g.checks) {
      ordered_json cj{{"name", c.name}, {"pass", c.pass}};
      if (!c.pass) cj["detail"] = c.detail;
      checks.push_back(cj);
    }
    groups.push_back(ordered_json{{"key", g.key},
                                  {"status", g.falsified ? "FALSIFICATION" : "ok"},
                                  {"checks", checks}});
  }
  j["groups"] = groups;
  ordered_json cells = ordered_json::array();
  for (const CellOutcome& c : s.cells) {
    ordered_json checks = ordered_json::array();
    for (const CheckResult& r : c.checks) {
      ordered_json cj{{"name", r.name}, {"pass", r.pass}};
      if (!r.pass) cj["detail"] = r.detail;
      checks.push_back(cj);
    }
    cells.push_back(ordered_json{{"key", c.key},
                                 {"sigma", c.spec},
                                 {"status", c.falsified ? "FALSIFICATION" : "ok"},
                                 {"psigmat", c.psigmat_value},
                                 {"theorem_c_applicable", c.thmc_applicable},
                                 {"theorem_c_verdict", c.thmc_verdict},
                                 {"checks", checks}});
  }
  j["cells"] = cells;
  j["summary"] = ordered_json{{"groups", s.groups.size()},
                              {"cells", s.cells.size()},
                              {"falsifications", s.falsifications},
                              {"theorem_c_applicable", s.thmc_applicable},
                              {"theorem_c_applicable_true", s.thmc_applicable_true},
                              {"theorem_c_applicable_false", s.thmc_applicable_false},
                              {"theorem_c_agreements", s.thmc_agreements},
                              {"nontrivial_ab_instances", s.nontrivial_ab_instances},
                              {"c5xs3_hall15_instance", s.c5xs3_hall15_instance}};
  return j;
}

std::string campaign_to_text(const CampaignSummary& s) {
  std::ostringstream out;
  for (const GroupOutcome& g : s.groups) {
    if (!g.falsified) continue;
    out << "FALSIFICATION group " << g.key << "\n";
    for (const CheckResult& c : g.checks)
      if (!c.pass) out << "  " << c.name << ": " << c.detail << "\n";
  }
  for (const CellOutcome& c : s.cells) {
    out << (c.falsified ? "FAIL " : "ok   ") << c.key << " sigma=" << c.spec
        << " psigmat=" << (c.psigmat_value ? "yes" : "no");
    if (c.thmc_applicable)
      out << " thmC=" << (c.thmc_verdict ? "true" : "false");
    else
      out << " thmC=n/a";
    out << "\n";
    if (c.falsified)
      for (const CheckResult& r : c.checks)
        if (!r.pass) out << "    " << r.name << ": " << r.detail << "\n";
  }
  out << "cells: " << s.cells.size() << "  falsifications: " << s.falsifications
      << "  theoremC applicable: " << s.thmc_applicable << " (true " << s.thmc_applicable_true
      << ", false " << s.thmc_applicable_false << ", agreements " << s.thmc_agreements << ")"
      << "  nontrivial A/B instances: " << s.nontrivial_ab_instances << "\n";
  return out.str();
}

}  // namespace psigmat
