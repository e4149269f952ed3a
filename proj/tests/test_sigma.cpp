#include <doctest.h>

#include <set>

#include "psigmat/catalog.hpp"
#include "psigmat/errors.hpp"
#include "psigmat/lattice.hpp"
#include "psigmat/numeric.hpp"
#include "psigmat/residuals.hpp"
#include "psigmat/sigma.hpp"
#include "test_util.hpp"

using namespace psigmat;
using psigmat::testing::subgroup_from_cycles;

namespace {

// Test-only oracle for sigma-nilpotency: search for an internal direct
// decomposition with one normal Hall piece per block of sigma(G).
bool sigma_nilpotent_by_decomposition(const FiniteGroup& g, const SigmaPartition& sigma) {
  for (int block : sigma.sigma_of(g.order())) {
    long long part = 1;
    for (int p : prime_divisors(g.order())) {
      if (sigma.block_of_prime(p) != block) continue;
      long long n = g.order();
      while (n % p == 0) {
        part *= p;
        n /= p;
      }
    }
    bool found = false;
    for (const SubgroupHandle& n : normal_subgroups(g))
      if (n.order() == part && sigma.is_pi_number(n.order(), {block})) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("sigma spec parsing and block arithmetic") {
  SigmaPartition fused35 = parse_sigma_spec("3,5|*");
  CHECK(fused35.explicit_block_count() == 1);
  CHECK(fused35.has_rest_block());

  // sigma(30) hits both the {3,5} block and the rest block.
  CHECK(fused35.sigma_of(30) == std::vector<int>{0, 1});
  CHECK(fused35.sigma_of(1).empty());

  SigmaPartition sz = parse_sigma_spec("2|3|*");
  CHECK(sz.sigma_of(12) == std::vector<int>{0, 1});

  CHECK(fused35.is_pi_number(15, {0}));
  CHECK(fused35.is_pi_number(1, {}));
  SigmaPartition s0 = parse_sigma_spec("2|3|*");
  CHECK_FALSE(s0.is_pi_number(6, {0}));

  // Partition sanity: every prime below the cap lands in exactly one block.
  for (const std::string& spec : standard_sigma_specs()) {
    SigmaPartition sigma = parse_sigma_spec(spec);
    for (int p = 2; p <= 200; ++p) {
      if (!is_prime(p)) continue;
      int b = sigma.block_of_prime(p);
      CHECK(b >= 0);
      CHECK(b <= sigma.explicit_block_count());
    }
  }

  // Partitions without a rest block do not cover foreign primes.
  SigmaPartition partial = parse_sigma_spec("2|3");
  CHECK_FALSE(partial.has_rest_block());
  CHECK_THROWS_AS(partial.block_of_prime(5), DomainError);
}

TEST_CASE("sigma primary") {
  SigmaPartition fused = parse_sigma_spec("2,3|*");
  CHECK(is_sigma_primary(*symmetric(3), fused));
  CHECK(is_sigma_primary(*cyclic(1), fused));
  CHECK_FALSE(is_sigma_primary(*symmetric(3), SigmaPartition::sigma_zero_for(6)));
}

TEST_CASE("sigma nilpotent") {
  SigmaPartition fused35 = parse_sigma_spec("3,5|*");
  for (int n : {4, 6, 12, 15, 24}) CHECK(is_sigma_nilpotent(*cyclic(n), fused35));
  CHECK_FALSE(is_sigma_nilpotent(*c5xs3(), fused35));
  CHECK_FALSE(is_sigma_nilpotent(*symmetric(3), SigmaPartition::sigma_zero_for(6)));
}

TEST_CASE("sigma nilpotency agrees with the decomposition oracle up to order 48") {
  for (const CatalogEntry& e : standard_catalog()) {
    if (e.group->order() > 48) continue;
    for (const std::string& spec : standard_sigma_specs()) {
      SigmaPartition sigma = parse_sigma_spec(spec);
      CHECK(is_sigma_nilpotent(*e.group, sigma) ==
            sigma_nilpotent_by_decomposition(*e.group, sigma));
    }
  }
}

TEST_CASE("sigma zero specializes to classical nilpotency") {
  for (const CatalogEntry& e : standard_catalog()) {
    const FiniteGroup& g = *e.group;
    SigmaPartition s0 = SigmaPartition::sigma_zero_for(g.order());
    // Classical nilpotency: every Sylow subgroup is normal.
    bool classical = true;
    for (int p : prime_divisors(g.order())) {
      long long part = 1;
      long long n = g.order();
      while (n % p == 0) {
        part *= p;
        n /= p;
      }
      for (const SubgroupHandle& s : all_subgroups(g))
        if (s.order() == part && !is_normal(s, full_subgroup(g))) classical = false;
    }
    CHECK(is_sigma_nilpotent(g, s0) == classical);
  }
}

TEST_CASE("sigma soluble") {
  for (const std::string& spec : standard_sigma_specs())
    CHECK(is_sigma_soluble(*symmetric(4), parse_sigma_spec(spec)));
  CHECK(is_sigma_soluble(*alternating(5), parse_sigma_spec("2,3,5|*")));
  CHECK_FALSE(is_sigma_soluble(*alternating(5), SigmaPartition::sigma_zero_for(60)));
}

TEST_CASE("hall subgroups") {
  GroupPtr g = c5xs3();
  SigmaPartition fused35 = parse_sigma_spec("3,5|*");
  auto halls = hall_subgroups(*g, {0}, fused35);
  REQUIRE(halls.size() == 1);
  CHECK(halls[0].order() == 15);

  // Pi covering sigma(G) yields the whole group.
  auto full = hall_subgroups(*g, {0, 1}, fused35);
  REQUIRE(!full.empty());
  CHECK(full.back().order() == 30);

  // A5 has no subgroup of order 20, so no Hall {2,5}-subgroup; the same
  // scan with the singleton partition and Pi = {block(2), block(5)}.
  GroupPtr a5 = alternating(5);
  SigmaPartition s25 = parse_sigma_spec("2,5|3|*");
  CHECK(hall_subgroups(*a5, {0}, s25).empty());
  SigmaPartition a5s0 = SigmaPartition::sigma_zero_for(60);
  CHECK(hall_subgroups(*a5, {a5s0.block_of_prime(2), a5s0.block_of_prime(5)}, a5s0).empty());

  // Hall consistency: |A| times |G:A| is |G| and the block supports split.
  for (const char* key : {"S4", "C5xS3", "D12"}) {
    GroupPtr h = catalog_entry(standard_catalog(), key).group;
    for (const std::string& spec : standard_sigma_specs()) {
      SigmaPartition sigma = parse_sigma_spec(spec);
      for (int b : sigma.sigma_of(h->order()))
        for (const SubgroupHandle& a : hall_block_subgroups(full_subgroup(*h), b, sigma)) {
          CHECK(a.order() * (h->order() / a.order()) == h->order());
          CHECK(sigma.is_pi_number(a.order(), {b}));
          for (int ib : sigma.sigma_of(h->order() / a.order())) CHECK(ib != b);
        }
    }
  }
}

TEST_CASE("complete hall sigma sets") {
  GroupPtr g = c5xs3();
  SigmaPartition fused35 = parse_sigma_spec("3,5|*");
  auto sets = complete_hall_sigma_sets(*g, fused35);
  CHECK(sets.size() == 3);  // unique C15 crossed with three Sylow 2-subgroups
  for (const HallSigmaSet& hs : sets) {
    REQUIRE(hs.members.size() == 2);
    CHECK(hs.members.at(0).order() == 15);
    CHECK(hs.members.at(1).order() == 2);
  }

  // Sigma-primary group: one set consisting of the group itself.
  SigmaPartition rest = SigmaPartition::rest_only();
  auto primary_sets = complete_hall_sigma_sets(*symmetric(4), rest);
  REQUIRE(primary_sets.size() == 1);
  CHECK(primary_sets[0].members.at(0).order() == 24);

  // Trivial group: a single empty set.
  auto trivial_sets = complete_hall_sigma_sets(*cyclic(1), rest);
  REQUIRE(trivial_sets.size() == 1);
  CHECK(trivial_sets[0].members.empty());

  GroupPtr a5 = alternating(5);
  CHECK(complete_hall_sigma_sets(*a5, parse_sigma_spec("2,5|3|*")).empty());
  CHECK(complete_hall_sigma_set_count(full_subgroup(*a5), parse_sigma_spec("2,5|3|*")) == 0);

  // Sigma-zero: complete sets are Sylow systems, one Sylow subgroup per prime.
  GroupPtr s4 = symmetric(4);
  SigmaPartition s0 = SigmaPartition::sigma_zero_for(24);
  auto sylow_systems = complete_hall_sigma_sets(*s4, s0);
  CHECK(sylow_systems.size() == 12);  // 3 Sylow 2-subgroups x 4 Sylow 3-subgroups
  for (const HallSigmaSet& hs : sylow_systems) {
    CHECK(hs.members.at(s0.block_of_prime(2)).order() == 8);
    CHECK(hs.members.at(s0.block_of_prime(3)).order() == 3);
  }
}

TEST_CASE("sigma full of sylow type") {
  SigmaPartition fused35 = parse_sigma_spec("3,5|*");
  CHECK(is_sigma_full_sylow_type(*c5xs3(), fused35));
  CHECK(is_sigma_full_sylow_type(*cyclic(1), fused35));
  GroupPtr a5 = alternating(5);
  CHECK_FALSE(is_sigma_full_sylow_type(*a5, parse_sigma_spec("2,5|3|*")));
  // Soluble groups are sigma-full of Sylow type for any sigma.
  for (const char* key : {"S4", "D12", "C5:C4", "Q8:C3"}) {
    GroupPtr g = catalog_entry(standard_catalog(), key).group;
    for (const std::string& spec : standard_sigma_specs())
      CHECK(is_sigma_full_sylow_type(*g, parse_sigma_spec(spec)));
  }
}

TEST_CASE("pi supersoluble") {
  CHECK(is_pi_supersoluble(*cyclic(24), std::vector<int>{2, 3}));
  GroupPtr a4 = alternating(4);
  CHECK_FALSE(is_pi_supersoluble(*a4, std::vector<int>{2}));
  CHECK(is_pi_supersoluble(*a4, std::vector<int>{5}));
  // pi = all primes of the group reduces to classical supersolubility.
  CHECK(is_pi_supersoluble(*symmetric(3), std::vector<int>{2, 3}));
  CHECK_FALSE(is_pi_supersoluble(*symmetric(4), std::vector<int>{2, 3}));
  // The strict alternative reading also requires full prime coverage.
  CHECK_FALSE(is_pi_supersoluble(*symmetric(3), std::vector<int>{2},
                                 PiSupersolubleRule::kGlobalSupersoluble));
  CHECK(is_pi_supersoluble(*symmetric(3), std::vector<int>{2, 3},
                           PiSupersolubleRule::kGlobalSupersoluble));
}

TEST_CASE("generalized wielandt sets") {
  GroupPtr s4 = symmetric(4);
  SigmaPartition s0 = SigmaPartition::sigma_zero_for(24);
  auto found = find_generalized_wielandt_set(*s4, s0);
  REQUIRE(found.has_value());
  CHECK(found->members.at(s0.block_of_prime(2)).order() == 8);
  CHECK(found->members.at(s0.block_of_prime(3)).order() == 3);

  // Sigma-nilpotent group: trivial residual, any complete Hall set works.
  GroupPtr c12 = cyclic(12);
  CHECK(find_generalized_wielandt_set(*c12, parse_sigma_spec("2|*")).has_value());

  // A5 with {2,3} fused: the Hall {2,3}-subgroups are all A4-conjugates
  // and none is 2-supersoluble.
  GroupPtr a5 = alternating(5);
  CHECK_FALSE(find_generalized_wielandt_set(*a5, parse_sigma_spec("2,3|5|*")).has_value());
}
