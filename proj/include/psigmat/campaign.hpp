#ifndef PSIGMAT_CAMPAIGN_HPP_
#define PSIGMAT_CAMPAIGN_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "psigmat/catalog.hpp"
#include "psigmat/sigma.hpp"

namespace psigmat {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // witness dump on failure
};

// One (group, sigma) cell of the verification matrix.
struct CellOutcome {
  std::string key;
  std::string spec;
  bool falsified = false;
  std::vector<CheckResult> checks;

  bool psigmat_value = false;
  bool thmc_applicable = false;
  bool thmc_verdict = false;
  long long nontrivial_a = 0;  // premise-true criterion-A instances with 1 < |D| < |G|
  long long nontrivial_b = 0;
  bool c5xs3_hall15_instance = false;  // C5xS3 / "3,5|*" with D of order 15 accepted
};

// Sigma-independent checks, one row per catalog group.
struct GroupOutcome {
  std::string key;
  bool falsified = false;
  std::vector<CheckResult> checks;
};

struct CampaignSummary {
  std::vector<GroupOutcome> groups;
  std::vector<CellOutcome> cells;
  long long falsifications = 0;
  long long thmc_applicable = 0;
  long long thmc_applicable_true = 0;
  long long thmc_applicable_false = 0;
  long long thmc_agreements = 0;
  long long nontrivial_ab_instances = 0;
  bool c5xs3_hall15_instance = false;
};

struct CampaignOptions {
  std::optional<std::vector<std::string>> only;  // nullopt = all; empty list = none
  std::vector<std::string> sigma_specs;          // empty = standard_sigma_specs()
  int jobs = 0;                                  // 0 = hardware concurrency
};

CampaignSummary run_campaign(const std::vector<CatalogEntry>& catalog,
                             const CampaignOptions& opts);

nlohmann::ordered_json campaign_to_json(const CampaignSummary& s);
std::string campaign_to_text(const CampaignSummary& s);

// Independent classical route used by the specialization check: A is
// S-permutable iff it permutes with every Sylow subgroup of G.
bool is_s_permutable(const SubgroupHandle& a, const FiniteGroup& g);

}  // namespace psigmat

#endif
