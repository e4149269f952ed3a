#include <doctest.h>

#include "psigmat/campaign.hpp"
#include "psigmat/catalog.hpp"
#include "psigmat/lattice.hpp"
#include "psigmat/psigmat.hpp"
#include "psigmat/residuals.hpp"
#include "psigmat/sigma.hpp"
#include "test_util.hpp"

using namespace psigmat;
using psigmat::testing::subgroup_from_cycles;

namespace {

// Independent classical subnormality: iterate normal closures downwards.
bool classically_subnormal(const SubgroupHandle& a, const FiniteGroup& g) {
  SubgroupHandle current = full_subgroup(g);
  while (true) {
    if (current.members == a.members) return true;
    // Normal closure of A in current.
    SubgroupHandle closure = a;
    for (Elem x : current.members) closure = join(closure, conjugate_subgroup(a, x));
    if (closure.members == current.members) return false;
    current = closure;
  }
}

SubgroupHandle involution_in_s3_factor(const FiniteGroup& g) {
  // In C5 x (C3 : C2) the involutions are the elements of order 2.
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 2) return generated_subgroup(g, std::vector<Elem>{x});
  REQUIRE(false);
  return trivial_subgroup(g);
}

}  // namespace

TEST_CASE("sigma quasinormal basics") {
  GroupPtr g = c5xs3();
  SigmaPartition fused35 = parse_sigma_spec("3,5|*");

  // Normal subgroups are always quasinormal.
  for (const SubgroupHandle& n : normal_subgroups(*g)) {
    QuasinormalResult qr = is_sigma_quasinormal(n, *g, fused35);
    CHECK(qr.value);
    REQUIRE(qr.witness.has_value());
    for (const auto& [block, member] : qr.witness->members) {
      (void)block;
      CHECK(g->order() % member.order() == 0);
    }
  }

  // In a sigma-primary group everything is quasinormal.
  SigmaPartition rest = SigmaPartition::rest_only();
  GroupPtr s4 = symmetric(4);
  for (const SubgroupHandle& s : all_subgroups(*s4))
    CHECK(is_sigma_quasinormal(s, *s4, rest).value);

  // An involution of the S3 factor fails against conjugate Sylow
  // 2-subgroups in every complete Hall sigma-set.
  SubgroupHandle a = involution_in_s3_factor(*g);
  QuasinormalResult qr = is_sigma_quasinormal(a, *g, fused35);
  CHECK_FALSE(qr.value);
  REQUIRE(qr.failing_block.has_value());
  CHECK(*qr.failing_block == 1);  // the rest block holding 2
  REQUIRE(qr.failing_member.has_value());
  CHECK_FALSE(permutes(a, *qr.failing_conjugate));
}

TEST_CASE("quasinormal witnesses replay") {
  GroupPtr g = c5xs3();
  SigmaPartition fused35 = parse_sigma_spec("3,5|*");
  for (const SubgroupHandle& s : all_subgroups(*g)) {
    QuasinormalResult qr = is_sigma_quasinormal(s, *g, fused35);
    if (!qr.value) continue;
    REQUIRE(qr.witness.has_value());
    for (const auto& [block, member] : qr.witness->members) {
      (void)block;
      for (Elem x : full_subgroup(*g).members)
        CHECK(permutes(s, conjugate_subgroup(member, x)));
    }
  }
}

TEST_CASE("sigma subnormal basics") {
  GroupPtr g = c5xs3();
  SigmaPartition fused35 = parse_sigma_spec("3,5|*");

  // The whole group is subnormal in itself via the empty chain.
  SubnormalResult whole = is_sigma_subnormal(full_subgroup(*g), *g, fused35);
  CHECK(whole.value);
  CHECK(whole.chain.size() == 1);

  // Sigma-primary ambient: every subgroup is sigma-subnormal in one step.
  SigmaPartition rest = SigmaPartition::rest_only();
  GroupPtr s4 = symmetric(4);
  for (const SubgroupHandle& s : all_subgroups(*s4))
    CHECK(is_sigma_subnormal(s, *s4, rest).value);

  // Classical chain in S4: <(1 2)(3 4)> is subnormal via V4 and A4.
  SigmaPartition s0 = SigmaPartition::sigma_zero_for(24);
  SubgroupHandle k = subgroup_from_cycles(*s4, {"(1 2)(3 4)"}, 4);
  SubnormalResult sr = is_sigma_subnormal(k, *s4, s0);
  CHECK(sr.value);
  REQUIRE(sr.chain.size() >= 2);
  CHECK(sr.chain.front().members == k.members);
  CHECK(sr.chain.back().is_full());
  for (size_t i = 0; i + 1 < sr.chain.size(); ++i) {
    CHECK(is_subset(sr.chain[i], sr.chain[i + 1]));
    CHECK(SubnormalTester::step_ok(sr.chain[i], sr.chain[i + 1], s0));
  }

  // The S3-factor involution is not sigma-subnormal under the fused {3,5} partition.
  CHECK_FALSE(is_sigma_subnormal(involution_in_s3_factor(*g), *g, fused35).value);
}

TEST_CASE("sigma-zero subnormality is classical subnormality") {
  for (const char* key : {"S3", "S4", "A4", "D12", "Q8", "Q8:C3", "C5:C4"}) {
    GroupPtr g = catalog_entry(standard_catalog(), key).group;
    SigmaPartition s0 = SigmaPartition::sigma_zero_for(g->order());
    SubnormalTester tester(full_subgroup(*g), s0);
    for (const SubgroupHandle& s : all_subgroups(*g))
      CHECK(tester.test(s).value == classically_subnormal(s, *g));
  }
}

TEST_CASE("transitivity verdicts on fixtures") {
  SigmaPartition fused35 = parse_sigma_spec("3,5|*");

  // Sigma-nilpotent groups pass.
  CHECK(is_psigmat_bruteforce(*cyclic(24), fused35).value);

  // The worked order-30 example passes.
  GroupPtr g = c5xs3();
  CHECK(is_psigmat_bruteforce(*g, fused35).value);

  // S4 at the separating partition fails with the classical witness.
  GroupPtr s4 = symmetric(4);
  SigmaPartition s0 = SigmaPartition::sigma_zero_for(24);
  PsigmaTVerdict v = is_psigmat_bruteforce(*s4, s0);
  CHECK_FALSE(v.value);
  REQUIRE(v.pair_witness.has_value());
  const auto& [k, h] = *v.pair_witness;
  CHECK(k.order() == 2);
  CHECK(h.order() == 4);
  SubgroupHandle v4 = subgroup_from_cycles(*s4, {"(1 2)(3 4)", "(1 3)(2 4)"}, 4);
  CHECK(h.members == v4.members);  // the normal Klein four-group
  CHECK(is_subset(k, v4));
  // Witness replays against the primitives.
  CHECK(is_sigma_quasinormal(k, h, s0).value);
  CHECK(is_sigma_quasinormal(h, *s4, s0).value);
  CHECK_FALSE(is_sigma_quasinormal(k, *s4, s0).value);
}

TEST_CASE("the two transitivity routes agree") {
  auto catalog = standard_catalog();
  for (const char* key : {"S3", "S4", "A4", "A5", "Q8", "C5xS3", "Q8:C3", "D12"}) {
    GroupPtr g = catalog_entry(catalog, key).group;
    for (const std::string& spec : standard_sigma_specs()) {
      SigmaPartition sigma = parse_sigma_spec(spec);
      PsigmaTVerdict brute = is_psigmat_bruteforce(*g, sigma);
      PsigmaTVerdict criterion = is_psigmat_subnormal_criterion(*g, sigma);
      CHECK(brute.value == criterion.value);
    }
  }
  // A4 with an explicit two-block partition, both routes.
  GroupPtr a4 = alternating(4);
  SigmaPartition two_blocks = parse_sigma_spec("2|3");
  CHECK(is_psigmat_bruteforce(*a4, two_blocks).value ==
        is_psigmat_subnormal_criterion(*a4, two_blocks).value);
}

TEST_CASE("special transitivity structure") {
  GroupPtr g = c5xs3();
  SigmaPartition fused35 = parse_sigma_spec("3,5|*");
  SpecialPsigmaTResult special = is_special_psigmat(*g, fused35);
  CHECK(special.value);
  CHECK(special.residual.order() == 3);
  CHECK(special.residual_is_hall);
  CHECK(special.power_automorphisms);
  REQUIRE(special.hall_member.has_value());
  CHECK(special.hall_member->order() == 15);
  REQUIRE(special.complement.has_value());
  CHECK(special.complement->order() == 5);
  CHECK(is_normal(*special.complement, *special.hall_member));
  CHECK(intersect(*special.complement, special.residual).is_trivial());

  // Sigma-nilpotent: trivially special.
  CHECK(is_special_psigmat(*cyclic(24), fused35).value);

  // S4 at the separating partition: the residual A4 is not a Hall subgroup.
  GroupPtr s4 = symmetric(4);
  SpecialPsigmaTResult s4r = is_special_psigmat(*s4, SigmaPartition::sigma_zero_for(24));
  CHECK_FALSE(s4r.value);
  CHECK_FALSE(s4r.residual_is_hall);
}

TEST_CASE("criterion A premises") {
  GroupPtr g = c5xs3();
  SigmaPartition fused35 = parse_sigma_spec("3,5|*");
  SubgroupHandle c15{g.get(), {}};
  for (const SubgroupHandle& s : all_subgroups(*g))
    if (s.order() == 15) c15 = s;
  REQUIRE(c15.order() == 15);
  TheoremAResult a = theorem_a_premises(*g, fused35, c15);
  CHECK(a.premises);

  // D = 1 reduces the premises to the transitivity of G itself.
  TheoremAResult triv = theorem_a_premises(*g, fused35, trivial_subgroup(*g));
  CHECK(triv.premises == is_psigmat_bruteforce(*g, fused35).value);

  // S4 with D = S4: a subnormal double transposition is not normal in G.
  GroupPtr s4 = symmetric(4);
  SigmaPartition s0 = SigmaPartition::sigma_zero_for(24);
  TheoremAResult bad = theorem_a_premises(*s4, s0, full_subgroup(*s4));
  CHECK_FALSE(bad.premises);
  CHECK_FALSE(bad.subnormal_all_normal);
}

TEST_CASE("criterion B premises") {
  GroupPtr g = c5xs3();
  SigmaPartition fused35 = parse_sigma_spec("3,5|*");
  SubgroupHandle c15{g.get(), {}};
  for (const SubgroupHandle& s : all_subgroups(*g))
    if (s.order() == 15) c15 = s;
  TheoremBResult b = theorem_b_premises(*g, fused35, c15);
  CHECK(b.premises);
  REQUIRE(b.block_special.size() == 1);
  CHECK(b.block_special[0].second);

  // D trivial reduces to sigma-nilpotency of G.
  CHECK(theorem_b_premises(*g, fused35, trivial_subgroup(*g)).premises ==
        is_sigma_nilpotent(*g, fused35));

  // A4 is not a Hall subgroup of S4.
  GroupPtr s4 = symmetric(4);
  SubgroupHandle a4 = subgroup_from_cycles(*s4, {"(1 2 3)", "(1 2)(3 4)"}, 4);
  TheoremBResult bad = theorem_b_premises(*s4, SigmaPartition::sigma_zero_for(24), a4);
  CHECK_FALSE(bad.premises);
  CHECK_FALSE(bad.d_hall);
}

TEST_CASE("criterion C") {
  GroupPtr g = c5xs3();
  SigmaPartition fused35 = parse_sigma_spec("3,5|*");
  TheoremCResult c = theorem_c_criterion(*g, fused35);
  CHECK(c.applicable);
  CHECK(c.verdict);
  CHECK(c.residual.order() == 3);

  // Abelian groups: applicable and true with a trivial residual.
  TheoremCResult ab = theorem_c_criterion(*cyclic(30), fused35);
  CHECK(ab.applicable);
  CHECK(ab.verdict);
  CHECK(ab.residual.is_trivial());

  // S4, separating partition: applicable and false, matching the
  // transitivity verdict.
  GroupPtr s4 = symmetric(4);
  SigmaPartition s0 = SigmaPartition::sigma_zero_for(24);
  TheoremCResult cs4 = theorem_c_criterion(*s4, s0);
  CHECK(cs4.applicable);
  CHECK_FALSE(cs4.verdict);
  CHECK_FALSE(is_psigmat_bruteforce(*s4, s0).value);

  // A5: no generalized Wielandt set under the fused partition.
  GroupPtr a5 = alternating(5);
  TheoremCResult ca5 = theorem_c_criterion(*a5, parse_sigma_spec("2,3|5|*"));
  CHECK_FALSE(ca5.applicable);
  CHECK_FALSE(ca5.wielandt_found);
}

TEST_CASE("quasinormal implies subnormal across fixtures") {
  auto catalog = standard_catalog();
  for (const char* key : {"S3", "S4", "A4", "Q8", "C5xS3", "D12"}) {
    GroupPtr g = catalog_entry(catalog, key).group;
    for (const std::string& spec : standard_sigma_specs()) {
      SigmaPartition sigma = parse_sigma_spec(spec);
      QuasinormalTester qn(full_subgroup(*g), sigma);
      SubnormalTester sn(full_subgroup(*g), sigma);
      for (const SubgroupHandle& s : all_subgroups(*g))
        if (qn.test(s).value) CHECK(sn.test(s).value);
    }
  }
}

TEST_CASE("sigma-zero quasinormality equals S-permutability") {
  for (const char* key : {"S3", "S4", "A4", "Q8", "D12", "C5:C4", "Q8:C3"}) {
    GroupPtr g = catalog_entry(standard_catalog(), key).group;
    REQUIRE(g->order() <= 48);
    SigmaPartition s0 = SigmaPartition::sigma_zero_for(g->order());
    QuasinormalTester qn(full_subgroup(*g), s0);
    for (const SubgroupHandle& s : all_subgroups(*g))
      CHECK(qn.test(s).value == is_s_permutable(s, *g));
  }
}
