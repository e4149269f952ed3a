#include "psigmat/report.hpp"

#include <sstream>

#include "psigmat/lattice.hpp"
#include "psigmat/residuals.hpp"

namespace psigmat {

using nlohmann::ordered_json;

SubgroupDesc describe(const SubgroupHandle& h) {
  SubgroupDesc d;
  d.order = h.order();
  d.members = h.members;
  d.labels.reserve(h.members.size());
  for (Elem x : h.members) d.labels.push_back(h.parent->label(x));
  return d;
}

namespace {

RouteDesc describe_route(const PsigmaTVerdict& v) {
  RouteDesc d;
  d.value = v.value;
  d.route = v.route == PsigmaTRoute::kTransitivity ? "transitivity" : "subnormal_criterion";
  if (v.pair_witness) {
    d.witness_inner = describe(v.pair_witness->first);
    d.witness_middle = describe(v.pair_witness->second);
  }
  if (v.subgroup_witness) d.witness_subgroup = describe(*v.subgroup_witness);
  for (const SubgroupHandle& link : v.witness_chain) d.witness_chain.push_back(describe(link));
  return d;
}

}  // namespace

AnalysisReport build_analysis_report(const std::string& key, const std::string& source,
                                     const FiniteGroup& g, const SigmaPartition& sigma,
                                     PiSupersolubleRule rule) {
  AnalysisReport r;
  r.group_key = key;
  r.group_source = source;
  r.group_order = g.order();
  r.sigma_spec = sigma.canonical_spec();
  for (int b : sigma.sigma_of(g.order())) r.sigma_of_group.push_back(sigma.block_name(b));

  r.sigma_primary = is_sigma_primary(g, sigma);
  r.sigma_nilpotent = is_sigma_nilpotent(g, sigma);
  r.sigma_soluble = is_sigma_soluble(g, sigma);
  r.sigma_full_sylow_type = is_sigma_full_sylow_type(g, sigma);

  r.residual = describe(sigma_nilpotent_residual(g, sigma));
  r.hall_set_count = complete_hall_sigma_set_count(full_subgroup(g), sigma);

  PsigmaTVerdict brute = is_psigmat_bruteforce(g, sigma);
  PsigmaTVerdict criterion = is_psigmat_subnormal_criterion(g, sigma);
  r.transitivity = describe_route(brute);
  r.subnormal_criterion = describe_route(criterion);
  r.routes_agree = brute.value == criterion.value;
  r.falsification = !r.routes_agree;

  SpecialPsigmaTResult special = is_special_psigmat(g, sigma);
  r.special.value = special.value;
  r.special.residual_is_hall = special.residual_is_hall;
  r.special.power_automorphisms = special.power_automorphisms;
  if (special.block) r.special.block = sigma.block_name(*special.block);
  if (special.hall_member) r.special.hall_member = describe(*special.hall_member);
  if (special.complement) r.special.complement = describe(*special.complement);

  for (const SubgroupHandle& d : normal_sigma_hall_subgroups(g, sigma)) {
    TheoremAResult a = theorem_a_premises(g, sigma, d);
    TheoremADesc desc;
    desc.d = describe(d);
    desc.d_sigma_hall = a.d_sigma_hall;
    desc.quotient_psigmat = a.quotient_psigmat;
    desc.subnormal_all_normal = a.subnormal_all_normal;
    desc.full_sylow_type = a.full_sylow_type;
    desc.premises = a.premises;
    r.theorem_a.push_back(std::move(desc));
  }
  for (const SubgroupHandle& d : normal_hall_subgroups(g)) {
    TheoremBResult b = theorem_b_premises(g, sigma, d);
    TheoremBDesc desc;
    desc.d = describe(d);
    desc.d_hall = b.d_hall;
    desc.d_sigma_nilpotent = b.d_sigma_nilpotent;
    desc.quotient_sigma_nilpotent = b.quotient_sigma_nilpotent;
    for (auto& [block, ok] : b.block_special)
      desc.block_special.emplace_back(sigma.block_name(block), ok);
    desc.premises = b.premises;
    r.theorem_b.push_back(std::move(desc));
  }

  TheoremCResult c = theorem_c_criterion(g, sigma, rule);
  r.theorem_c.sigma_soluble = c.sigma_soluble;
  r.theorem_c.wielandt_found = c.wielandt_found;
  r.theorem_c.applicable = c.applicable;
  r.theorem_c.d_hall = c.d_hall;
  r.theorem_c.d_odd = c.d_odd;
  r.theorem_c.d_abelian = c.d_abelian;
  r.theorem_c.d_power_autos = c.d_power_autos;
  for (auto& [block, ok] : c.block_special)
    r.theorem_c.block_special.emplace_back(sigma.block_name(block), ok);
  r.theorem_c.verdict = c.verdict;
  r.theorem_c.agrees_with_transitivity = !c.applicable || c.verdict == brute.value;
  return r;
}

namespace {

ordered_json subgroup_json(const SubgroupDesc& d) {
  return ordered_json{{"order", d.order}, {"members", d.members}, {"labels", d.labels}};
}

ordered_json route_json(const RouteDesc& d) {
  ordered_json j{{"value", d.value}, {"route", d.route}};
  if (d.witness_inner) {
    j["witness"] = ordered_json{{"inner", subgroup_json(*d.witness_inner)},
                                {"middle", subgroup_json(*d.witness_middle)}};
  } else if (d.witness_subgroup) {
    ordered_json chain = ordered_json::array();
    for (const SubgroupDesc& link : d.witness_chain) chain.push_back(subgroup_json(link));
    j["witness"] = ordered_json{{"subgroup", subgroup_json(*d.witness_subgroup)},
                                {"chain", chain}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

ordered_json blocks_json(const std::vector<std::pair<std::string, bool>>& blocks) {
  ordered_json arr = ordered_json::array();
  for (const auto& [name, ok] : blocks)
    arr.push_back(ordered_json{{"block", name}, {"special", ok}});
  return arr;
}

}  // namespace

ordered_json report_to_json(const AnalysisReport& r) {
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["group"] = ordered_json{
      {"key", r.group_key}, {"source", r.group_source}, {"order", r.group_order}};
  j["sigma"] = ordered_json{{"spec", r.sigma_spec}, {"sigma_of_group", r.sigma_of_group}};
  j["classifiers"] = ordered_json{{"sigma_primary", r.sigma_primary},
                                  {"sigma_nilpotent", r.sigma_nilpotent},
                                  {"sigma_soluble", r.sigma_soluble},
                                  {"sigma_full_sylow_type", r.sigma_full_sylow_type}};
  j["residual"] = subgroup_json(r.residual);
  j["hall_set_count"] = r.hall_set_count;
  j["psigmat"] = ordered_json{{"transitivity", route_json(r.transitivity)},
                              {"subnormal_criterion", route_json(r.subnormal_criterion)},
                              {"routes_agree", r.routes_agree},
                              {"falsification", r.falsification}};
  ordered_json special{{"value", r.special.value},
                       {"residual_is_hall", r.special.residual_is_hall},
                       {"power_automorphisms", r.special.power_automorphisms}};
  if (r.special.block) special["block"] = *r.special.block;
  if (r.special.hall_member) special["hall_member"] = subgroup_json(*r.special.hall_member);
  if (r.special.complement) special["complement"] = subgroup_json(*r.special.complement);
  j["special_psigmat"] = special;

  ordered_json thm_a = ordered_json::array();
  for (const TheoremADesc& a : r.theorem_a)
    thm_a.push_back(ordered_json{{"d", subgroup_json(a.d)},
                                 {"d_sigma_hall", a.d_sigma_hall},
                                 {"quotient_psigmat", a.quotient_psigmat},
                                 {"subnormal_all_normal", a.subnormal_all_normal},
                                 {"full_sylow_type", a.full_sylow_type},
                                 {"premises", a.premises}});
  j["theorem_a"] = thm_a;
  ordered_json thm_b = ordered_json::array();
  for (const TheoremBDesc& b : r.theorem_b)
    thm_b.push_back(ordered_json{{"d", subgroup_json(b.d)},
                                 {"d_hall", b.d_hall},
                                 {"d_sigma_nilpotent", b.d_sigma_nilpotent},
                                 {"quotient_sigma_nilpotent", b.quotient_sigma_nilpotent},
                                 {"block_special", blocks_json(b.block_special)},
                                 {"premises", b.premises}});
  j["theorem_b"] = thm_b;
  j["theorem_c"] = ordered_json{{"sigma_soluble", r.theorem_c.sigma_soluble},
                                {"wielandt_found", r.theorem_c.wielandt_found},
                                {"applicable", r.theorem_c.applicable},
                                {"d_hall", r.theorem_c.d_hall},
                                {"d_odd", r.theorem_c.d_odd},
                                {"d_abelian", r.theorem_c.d_abelian},
                                {"d_power_autos", r.theorem_c.d_power_autos},
                                {"block_special", blocks_json(r.theorem_c.block_special)},
                                {"verdict", r.theorem_c.verdict},
                                {"agrees_with_transitivity",
                                 r.theorem_c.agrees_with_transitivity}};
  return j;
}

namespace {

std::string label_list(const SubgroupDesc& d, size_t limit = 12) {
  std::string out = "{";
  for (size_t i = 0; i < d.labels.size() && i < limit; ++i) {
    if (i > 0) out += ", ";
    out += d.labels[i];
  }
  if (d.labels.size() > limit) out += ", ...";
  out += "}";
  return out;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "group: " << r.group_key << " (order " << r.group_order << ", " << r.group_source
      << ")\n";
  out << "sigma: " << r.sigma_spec << "   sigma(G): [";
  for (size_t i = 0; i < r.sigma_of_group.size(); ++i)
    out << (i ? ", " : "") << r.sigma_of_group[i];
  out << "]\n";
  out << "classifiers: primary=" << yn(r.sigma_primary) << " nilpotent=" << yn(r.sigma_nilpotent)
      << " soluble=" << yn(r.sigma_soluble) << " full-sylow-type=" << yn(r.sigma_full_sylow_type)
      << "\n";
  out << "residual: order " << r.residual.order << " " << label_list(r.residual) << "\n";
  out << "complete hall sigma-sets: " << r.hall_set_count << "\n";
  out << "psigmat (transitivity route):       " << yn(r.transitivity.value) << "\n";
  if (r.transitivity.witness_inner)
    out << "  witness: K=" << label_list(*r.transitivity.witness_inner)
        << " inside H=" << label_list(*r.transitivity.witness_middle) << "\n";
  out << "psigmat (subnormal criterion route): " << yn(r.subnormal_criterion.value) << "\n";
  if (r.subnormal_criterion.witness_subgroup)
    out << "  witness subgroup: " << label_list(*r.subnormal_criterion.witness_subgroup) << "\n";
  out << "routes agree: " << yn(r.routes_agree)
      << (r.falsification ? "   *** FALSIFICATION ***" : "") << "\n";
  out << "special psigmat: " << yn(r.special.value);
  if (r.special.value && r.special.hall_member) {
    out << "  (D order " << r.residual.order << ", E order " << r.special.hall_member->order
        << ", S order " << r.special.complement->order << ")";
  }
  out << "\n";
  int a_true = 0;
  for (const auto& a : r.theorem_a) a_true += a.premises ? 1 : 0;
  int b_true = 0;
  for (const auto& b : r.theorem_b) b_true += b.premises ? 1 : 0;
  out << "theorem A premises: " << a_true << "/" << r.theorem_a.size()
      << " candidate D accepted\n";
  out << "theorem B premises: " << b_true << "/" << r.theorem_b.size()
      << " candidate D accepted\n";
  out << "theorem C: applicable=" << yn(r.theorem_c.applicable)
      << " verdict=" << yn(r.theorem_c.verdict)
      << " agrees=" << yn(r.theorem_c.agrees_with_transitivity) << "\n";
  return out.str();
}

}  // namespace psigmat
