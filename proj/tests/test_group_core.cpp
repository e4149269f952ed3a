#include <doctest.h>

#include <random>

#include "psigmat/catalog.hpp"
#include "psigmat/errors.hpp"
#include "psigmat/group.hpp"
#include "psigmat/lattice.hpp"
#include "test_util.hpp"

using namespace psigmat;
using psigmat::testing::subgroup_from_cycles;

TEST_CASE("cycle notation round trip") {
  Perm p = parse_cycles("(1 2 3)(4 5)", 6);
  CHECK(cycle_string(p) == "(1 2 3)(4 5)");
  CHECK(p.image(0) == 1);
  CHECK(p.image(5) == 5);
  CHECK(cycle_string(parse_cycles("()", 4)) == "()");
  CHECK(cycle_string(p.compose(p.inverse())) == "()");
  CHECK_THROWS_AS(parse_cycles("(1 2", 4), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 4), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 7)", 4), ParseError);
}

TEST_CASE("composition applies left factor first") {
  // (1 2) then (1 2 3): point 1 -> 2 -> 3, so the product maps 1 to 3.
  Perm t = parse_cycles("(1 2)", 3);
  Perm c = parse_cycles("(1 2 3)", 3);
  CHECK(t.compose(c).image(0) == 2);
}

TEST_CASE("group generation from permutations") {
  GroupPtr s3 = group_from_generators(3, {parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)});
  CHECK(s3->order() == 6);
  CHECK(s3->identity() == 0);
  CHECK(s3->label(0) == "()");

  GroupPtr trivial = group_from_generators(1, {});
  CHECK(trivial->order() == 1);

  GroupPtr a5 =
      group_from_generators(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)});
  CHECK(a5->order() == 60);
}

TEST_CASE("generation respects the order cap") {
  GroupOptions opts{12};
  CHECK_THROWS_AS(
      group_from_generators(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)},
                            opts),
      CapExceeded);
}

TEST_CASE("deterministic numbering is stable across rebuilds") {
  auto build = [] {
    return group_from_generators(4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)});
  };
  GroupPtr a = build();
  GroupPtr b = build();
  REQUIRE(a->order() == b->order());
  for (Elem x = 0; x < a->order(); ++x) CHECK(a->label(x) == b->label(x));
}

TEST_CASE("direct products") {
  GroupPtr c5 = cyclic(5);
  GroupPtr s3 = symmetric(3);
  GroupPtr g = direct_product(*c5, *s3);
  CHECK(g->order() == 30);

  // Embedded factors are normal and intersect trivially.
  std::vector<Elem> left, right;
  for (Elem a = 1; a < 5; ++a) left.push_back(static_cast<Elem>(a * 6));
  for (Elem b = 1; b < 6; ++b) right.push_back(b);
  SubgroupHandle lh = generated_subgroup(*g, left);
  SubgroupHandle rh = generated_subgroup(*g, right);
  CHECK(lh.order() == 5);
  CHECK(rh.order() == 6);
  CHECK(is_normal(lh, full_subgroup(*g)));
  CHECK(is_normal(rh, full_subgroup(*g)));
  CHECK(intersect(lh, rh).order() == 1);

  GroupPtr with_trivial = direct_product(*s3, *cyclic(1));
  CHECK(with_trivial->order() == 6);
  CHECK(with_trivial->order_signature() == s3->order_signature());

  GroupPtr v4 = direct_product(*cyclic(2), *cyclic(2));
  CHECK(v4->order() == 4);
  for (Elem x = 0; x < 4; ++x) CHECK(v4->mult(x, x) == 0);  // exponent 2
}

TEST_CASE("semidirect products") {
  GroupPtr c3 = cyclic(3);
  GroupPtr c2 = cyclic(2);
  std::vector<std::vector<Elem>> inversion{{0, 1, 2}, {0, 2, 1}};
  GroupPtr s3ish = semidirect_product(*c3, *c2, inversion);
  CHECK(s3ish->order() == 6);
  // The complement C2 is not normal.
  SubgroupHandle flip = generated_subgroup(*s3ish, std::vector<Elem>{1});
  REQUIRE(flip.order() == 2);
  CHECK_FALSE(is_normal(flip, full_subgroup(*s3ish)));
  // The kernel C3 is normal.
  SubgroupHandle rot = generated_subgroup(*s3ish, std::vector<Elem>{2});
  REQUIRE(rot.order() == 3);
  CHECK(is_normal(rot, full_subgroup(*s3ish)));

  // Trivial action coincides with the direct product.
  std::vector<std::vector<Elem>> trivial_action{{0, 1, 2}, {0, 1, 2}};
  GroupPtr direct = semidirect_product(*c3, *c2, trivial_action);
  GroupPtr direct_ref = direct_product(*c3, *c2);
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) CHECK(direct->mult(a, b) == direct_ref->mult(a, b));

  // Faithful C5 : C4 has trivial center.
  GroupPtr f20 = c5_semidirect_c4();
  CHECK(f20->order() == 20);
  int central = 0;
  for (Elem x = 0; x < f20->order(); ++x) {
    bool commutes_all = true;
    for (Elem y = 0; y < f20->order(); ++y)
      if (f20->mult(x, y) != f20->mult(y, x)) {
        commutes_all = false;
        break;
      }
    if (commutes_all) ++central;
  }
  CHECK(central == 1);

  // A non-homomorphic action is rejected.
  GroupPtr c4 = cyclic(4);
  std::vector<std::vector<Elem>> bad4(4, std::vector<Elem>{0, 1, 2});
  bad4[1] = {0, 2, 1};  // order-2 automorphism assigned to an order-4 generator is fine,
  bad4[2] = {0, 1, 2};  // but then g^2 must act trivially and g^3 as inversion
  bad4[3] = {0, 1, 2};
  CHECK_THROWS_AS(semidirect_product(*c3, *c4, bad4), DomainError);
}

TEST_CASE("quotients") {
  GroupPtr s4 = symmetric(4);
  SubgroupHandle v4 = subgroup_from_cycles(*s4, {"(1 2)(3 4)", "(1 3)(2 4)"}, 4);
  REQUIRE(v4.order() == 4);
  QuotientResult q = quotient(*s4, v4);
  CHECK(q.group->order() == 6);
  // Order signature of S4/V4 matches S3, not C6.
  CHECK(q.group->order_signature() == std::vector<int>{1, 2, 2, 2, 3, 3});

  // Projection is a homomorphism with kernel V4.
  for (Elem x = 0; x < s4->order(); ++x)
    for (Elem y = 0; y < s4->order(); ++y)
      CHECK(q.projection[s4->mult(x, y)] == q.group->mult(q.projection[x], q.projection[y]));
  for (Elem x : v4.members) CHECK(q.projection[x] == 0);

  CHECK(quotient(*s4, trivial_subgroup(*s4)).group->order() == 24);
  CHECK(quotient(*s4, full_subgroup(*s4)).group->order() == 1);

  SubgroupHandle c2 = subgroup_from_cycles(*s4, {"(1 2)"}, 4);
  CHECK_THROWS_AS(quotient(*s4, c2), DomainError);
}

TEST_CASE("conjugation, normality, cores") {
  GroupPtr s3 = symmetric(3);
  SubgroupHandle t12 = subgroup_from_cycles(*s3, {"(1 2)"}, 3);
  SubgroupHandle c3 = subgroup_from_cycles(*s3, {"(1 2 3)"}, 3);

  // Conjugating <(1 2)> by (1 2 3) relabels it to <(2 3)>.
  Elem rot = -1;
  for (Elem x = 0; x < 6; ++x)
    if (s3->label(x) == "(1 2 3)") rot = x;
  REQUIRE(rot >= 0);
  SubgroupHandle conj = conjugate_subgroup(t12, rot);
  SubgroupHandle t23 = subgroup_from_cycles(*s3, {"(2 3)"}, 3);
  CHECK(conj.members == t23.members);
  CHECK(conjugate_subgroup(t12, 0).members == t12.members);
  CHECK(conj.order() == t12.order());

  CHECK(is_normal(c3, full_subgroup(*s3)));
  CHECK_FALSE(is_normal(t12, full_subgroup(*s3)));
  CHECK(is_normal(t12, t12));
  CHECK_THROWS_AS(is_normal(full_subgroup(*s3), t12), DomainError);

  for (Elem x = 0; x < s3->order(); ++x)
    CHECK(conjugate_subgroup(c3, x).members == c3.members);  // normal: fixed by conjugation

  CHECK(core_in(t12, full_subgroup(*s3)).order() == 1);
  CHECK(core_in(c3, full_subgroup(*s3)).members == c3.members);

  GroupPtr s4 = symmetric(4);
  SubgroupHandle v4 = subgroup_from_cycles(*s4, {"(1 2)(3 4)", "(1 3)(2 4)"}, 4);
  CHECK(core_in(v4, full_subgroup(*s4)).members == v4.members);
}

TEST_CASE("product sets and permutability") {
  GroupPtr s3 = symmetric(3);
  SubgroupHandle t12 = subgroup_from_cycles(*s3, {"(1 2)"}, 3);
  SubgroupHandle t13 = subgroup_from_cycles(*s3, {"(1 3)"}, 3);
  SubgroupHandle c3 = subgroup_from_cycles(*s3, {"(1 2 3)"}, 3);

  CHECK(product_set(t12, c3).size() == 6);
  CHECK(permutes(t12, c3));
  CHECK(product_set(t12, t13).size() == 4);
  CHECK_FALSE(permutes(t12, t13));
  CHECK(permutes(t12, full_subgroup(*s3)));
}

TEST_CASE("permutability matches the index formula plus closure") {
  // permutes(A,B) iff |AB| = |A||B|/|A n B| and AB is product-closed.
  std::mt19937 rng(20240811);
  for (const char* key : {"S4", "D12", "A4", "Q8"}) {
    GroupPtr g = catalog_entry(standard_catalog(), key).group;
    const auto& subs = all_subgroups(*g);
    std::uniform_int_distribution<size_t> pick(0, subs.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const SubgroupHandle& a = subs[pick(rng)];
      const SubgroupHandle& b = subs[pick(rng)];
      std::vector<Elem> ab = product_set(a, b);
      bool size_ok =
          static_cast<long long>(ab.size()) == a.order() * b.order() / intersect(a, b).order();
      bool closed = true;
      for (Elem x : ab) {
        for (Elem y : ab)
          if (!std::binary_search(ab.begin(), ab.end(), g->mult(x, y))) {
            closed = false;
            break;
          }
        if (!closed) break;
      }
      CHECK(permutes(a, b) == (size_ok && closed));
    }
  }
}

TEST_CASE("element orders") {
  GroupPtr s3 = symmetric(3);
  CHECK(s3->element_order(0) == 1);
  for (Elem x = 0; x < 6; ++x)
    if (s3->label(x) == "(1 2 3)") CHECK(s3->element_order(x) == 3);

  GroupPtr s5 = symmetric(5);
  for (Elem x = 0; x < s5->order(); ++x)
    if (s5->label(x) == "(1 2)(3 4 5)") CHECK(s5->element_order(x) == 6);
  for (Elem x = 0; x < s5->order(); ++x)
    CHECK(s5->order() % s5->element_order(x) == 0);
}

TEST_CASE("lagrange and conjugate size invariants over the catalog") {
  for (const char* key : {"S3", "S4", "Q8", "C5xS3"}) {
    GroupPtr g = catalog_entry(standard_catalog(), key).group;
    for (const SubgroupHandle& s : all_subgroups(*g)) {
      validate_subgroup(s);
      CHECK(g->order() % s.order() == 0);
      for (Elem x = 0; x < g->order(); x += 3)
        CHECK(conjugate_subgroup(s, x).order() == s.order());
    }
  }
}
