// psigmat CLI: analyze a single (group, sigma) pair or run the full
// verification campaign over the bundled catalog.
//
// Exit codes: 0 success, 1 falsification, 2 usage/parse error,
// 3 order cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "psigmat/campaign.hpp"
#include "psigmat/catalog.hpp"
#include "psigmat/errors.hpp"
#include "psigmat/report.hpp"

namespace {

constexpr const char* kCapEnvVar = "PSIGMAT_ORDER_CAP";

long long default_cap() {
  if (const char* env = std::getenv(kCapEnvVar)) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw psigmat::ParseError(std::string(kCapEnvVar) + " must be a positive integer");
  }
  return psigmat::kDefaultOrderCap;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw psigmat::ParseError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GroupSource {
  std::string key;
  std::string provenance;
  psigmat::GroupPtr group;
};

GroupSource resolve_group(const std::string& spec, const psigmat::GroupOptions& opts) {
  constexpr const char* kBuilderPrefix = "builder:";
  if (spec.rfind(kBuilderPrefix, 0) == 0) {
    std::string key = spec.substr(std::string(kBuilderPrefix).size());
    auto catalog = psigmat::standard_catalog(opts);
    const psigmat::CatalogEntry& e = psigmat::catalog_entry(catalog, key);
    return GroupSource{e.key, e.provenance, e.group};
  }
  return GroupSource{spec, "file:" + spec, psigmat::parse_group_file(read_file(spec), opts)};
}

int run_analyze(const std::string& group_spec, const std::string& sigma_spec, bool as_json,
                const std::string& pi_rule, long long cap) {
  psigmat::GroupOptions opts{cap};
  GroupSource src = resolve_group(group_spec, opts);
  psigmat::SigmaPartition sigma = psigmat::parse_sigma_spec(sigma_spec);
  psigmat::PiSupersolubleRule rule = pi_rule == "subset"
                                         ? psigmat::PiSupersolubleRule::kGlobalSupersoluble
                                         : psigmat::PiSupersolubleRule::kChiefFactors;
  psigmat::AnalysisReport report =
      psigmat::build_analysis_report(src.key, src.provenance, *src.group, sigma, rule);
  if (as_json)
    std::cout << psigmat::report_to_json(report).dump(2) << "\n";
  else
    std::cout << psigmat::report_to_text(report);
  return report.falsification ? 1 : 0;
}

int run_verify(bool only_given, const std::vector<std::string>& only,
               const std::string& sigma_list_path, int jobs, bool as_json, long long cap) {
  psigmat::GroupOptions opts{cap};
  psigmat::CampaignOptions campaign_opts;
  if (only_given) {
    std::vector<std::string> keys;
    for (const std::string& k : only)
      if (!k.empty()) keys.push_back(k);
    campaign_opts.only = std::move(keys);
  }
  campaign_opts.jobs = jobs;
  if (!sigma_list_path.empty()) {
    std::istringstream in(read_file(sigma_list_path));
    std::string line;
    while (std::getline(in, line)) {
      size_t hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      size_t b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      size_t e = line.find_last_not_of(" \t\r");
      campaign_opts.sigma_specs.push_back(line.substr(b, e - b + 1));
    }
    if (campaign_opts.sigma_specs.empty())
      throw psigmat::ParseError("sigma list file contains no specs");
  }
  auto catalog = psigmat::standard_catalog(opts);
  psigmat::CampaignSummary summary = psigmat::run_campaign(catalog, campaign_opts);
  if (as_json)
    std::cout << psigmat::campaign_to_json(summary).dump(2) << "\n";
  else
    std::cout << psigmat::campaign_to_text(summary);
  return summary.falsifications == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group sigma-permutability analysis"};
  app.require_subcommand(1);

  std::string group_spec;
  std::string sigma_spec;
  std::string pi_rule = "chief-factors";
  bool analyze_json = false;
  long long cap = 0;

  CLI::App* analyze = app.add_subcommand("analyze", "analyze one (group, sigma) pair");
  analyze->add_option("--group", group_spec, "group file path or builder:KEY")->required();
  analyze->add_option("--sigma", sigma_spec, "sigma spec, e.g. \"3,5|*\"")->required();
  analyze->add_flag("--json", analyze_json, "emit the JSON report");
  analyze->add_option("--pi-supersoluble", pi_rule,
                      "pi-supersolubility reading: chief-factors (default) or subset")
      ->check(CLI::IsMember({"chief-factors", "subset"}));
  analyze->add_option("--cap", cap, "group order cap (default 200 or " +
                                        std::string(kCapEnvVar) + ")");

  std::vector<std::string> only;
  std::string sigma_list_path;
  int jobs = 0;
  bool verify_json = false;
  long long verify_cap = 0;

  CLI::App* verify = app.add_subcommand("verify", "run the verification campaign");
  verify->add_option("--only", only, "restrict to these catalog keys")->delimiter(',');
  verify->add_option("--sigma-list", sigma_list_path, "file with one sigma spec per line");
  verify->add_option("--jobs", jobs, "worker threads (default: hardware concurrency)");
  verify->add_flag("--json", verify_json, "emit the JSON summary");
  verify->add_option("--cap", verify_cap, "group order cap");

  try {
    app.parse(argc, argv);
    if (analyze->parsed())
      return run_analyze(group_spec, sigma_spec, analyze_json, pi_rule,
                         cap > 0 ? cap : default_cap());
    return run_verify(verify->count("--only") > 0, only, sigma_list_path, jobs, verify_json,
                      verify_cap > 0 ? verify_cap : default_cap());
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const psigmat::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const psigmat::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
