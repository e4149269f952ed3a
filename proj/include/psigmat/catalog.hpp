#ifndef PSIGMAT_CATALOG_HPP_
#define PSIGMAT_CATALOG_HPP_

#include <string>
#include <vector>

#include "psigmat/group.hpp"
#include "psigmat/sigma.hpp"

namespace psigmat {

// ---- builders ------------------------------------------------------------

GroupPtr cyclic(int n, const GroupOptions& opts = {});
// Dihedral group of the given (even, >= 6) order, as C_{order/2} x| C_2
// with the inversion action.
GroupPtr dihedral(int order, const GroupOptions& opts = {});
GroupPtr symmetric(int n, const GroupOptions& opts = {});   // n <= 5
GroupPtr alternating(int n, const GroupOptions& opts = {}); // n <= 5
GroupPtr quaternion8(const GroupOptions& opts = {});
// C5 x (C3 x| C2), order 30.
GroupPtr c5xs3(const GroupOptions& opts = {});
// C5 x| C4 with a faithful action (x -> x^2), order 20.
GroupPtr c5_semidirect_c4(const GroupOptions& opts = {});
// Q8 x| C3 with the automorphism cycling i -> j -> k, order 24.
GroupPtr q8_semidirect_c3(const GroupOptions& opts = {});

// ---- text formats ----------------------------------------------------------

// Group file: a `degree: <n>` header followed by one `gen: <cycles>` line
// per generator; cycle notation is 1-based with fixed points omitted;
// `#` starts a comment.  ParseError (with line number) on bad input.
GroupPtr parse_group_file(const std::string& text, const GroupOptions& opts = {});

// Sigma spec: blocks separated by '|', primes comma-separated inside a
// block, '*' (at most once) for the rest block.  "3,5|*" means
// {{3,5}, all other primes}.
SigmaPartition parse_sigma_spec(const std::string& text);

// Canonical rendering; parse(render(parse(s))) == parse(s).
std::string render_sigma_spec(const SigmaPartition& sigma);

// ---- bundled corpus --------------------------------------------------------

struct CatalogEntry {
  std::string key;
  GroupPtr group;
  std::string provenance;  // builder expression
};

// Verification corpus: cyclic groups through order 24, dihedral groups
// of orders 6..24, S3, S4, A4, A5, Q8, and the composite fixtures
// C5xS3, D8xC3, C5:C4, A4xC5, Q8:C3.
std::vector<CatalogEntry> standard_catalog(const GroupOptions& opts = {});

// Bundled sigma specs used by the verification campaign.
std::vector<std::string> standard_sigma_specs();

// Entry lookup by key in a catalog (ParseError when missing).
const CatalogEntry& catalog_entry(const std::vector<CatalogEntry>& catalog,
                                  const std::string& key);

}  // namespace psigmat

#endif
