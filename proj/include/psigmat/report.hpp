#ifndef PSIGMAT_REPORT_HPP_
#define PSIGMAT_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "psigmat/group.hpp"
#include "psigmat/psigmat.hpp"
#include "psigmat/sigma.hpp"

namespace psigmat {

inline constexpr int kReportSchemaVersion = 1;

// Rendered subgroup: orders, member indices and labels; plain data with
// no live references, safe to keep after the group is gone.
struct SubgroupDesc {
  long long order = 0;
  std::vector<Elem> members;
  std::vector<std::string> labels;
};
SubgroupDesc describe(const SubgroupHandle& h);

struct RouteDesc {
  bool value = false;
  std::string route;
  std::optional<SubgroupDesc> witness_inner;   // K (transitivity route)
  std::optional<SubgroupDesc> witness_middle;  // H (transitivity route)
  std::optional<SubgroupDesc> witness_subgroup;  // criterion route
  std::vector<SubgroupDesc> witness_chain;
};

struct SpecialDesc {
  bool value = false;
  bool residual_is_hall = false;
  bool power_automorphisms = false;
  std::optional<std::string> block;
  std::optional<SubgroupDesc> hall_member;
  std::optional<SubgroupDesc> complement;
};

struct TheoremADesc {
  SubgroupDesc d;
  bool d_sigma_hall = false, quotient_psigmat = false, subnormal_all_normal = false,
       full_sylow_type = false, premises = false;
};
struct TheoremBDesc {
  SubgroupDesc d;
  bool d_hall = false, d_sigma_nilpotent = false, quotient_sigma_nilpotent = false,
       premises = false;
  std::vector<std::pair<std::string, bool>> block_special;
};
struct TheoremCDesc {
  bool sigma_soluble = false, wielandt_found = false, applicable = false;
  bool d_hall = false, d_odd = false, d_abelian = false, d_power_autos = false;
  std::vector<std::pair<std::string, bool>> block_special;
  bool verdict = false;
  bool agrees_with_transitivity = false;  // meaningful only when applicable
};

// Full per-(group, sigma) analysis record.  Canonically ordered
// everywhere so that identical inputs serialize byte-identically.
struct AnalysisReport {
  int schema_version = kReportSchemaVersion;
  std::string group_key;
  std::string group_source;
  long long group_order = 0;
  std::string sigma_spec;               // canonical rendering
  std::vector<std::string> sigma_of_group;  // block names

  bool sigma_primary = false;
  bool sigma_nilpotent = false;
  bool sigma_soluble = false;
  bool sigma_full_sylow_type = false;

  SubgroupDesc residual;
  long long hall_set_count = 0;

  RouteDesc transitivity;
  RouteDesc subnormal_criterion;
  bool routes_agree = false;
  bool falsification = false;  // routes disagree

  SpecialDesc special;
  std::vector<TheoremADesc> theorem_a;  // one entry per normal sigma-Hall D
  std::vector<TheoremBDesc> theorem_b;  // one entry per normal Hall D
  TheoremCDesc theorem_c;
};

AnalysisReport build_analysis_report(const std::string& key, const std::string& source,
                                     const FiniteGroup& g, const SigmaPartition& sigma,
                                     PiSupersolubleRule rule = PiSupersolubleRule::kChiefFactors);

nlohmann::ordered_json report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

}  // namespace psigmat

#endif
