#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "qh/bounds.hpp"
#include "qh/element_space.hpp"
#include "qh/errors.hpp"
#include "qh/groups.hpp"
#include "qh/perm_group.hpp"

using qh::Permutation;
using qh::PermGroup;
using qh::SubgroupRef;
namespace G = qh::groups;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<qh::Point>> c) {
  return Permutation::from_cycles(n, c);
}

} // namespace

TEST_CASE("group_from_generators") {
  auto s3 = qh::group_from_generators(3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})});
  CHECK(s3.order() == 6);

  auto trivial = qh::group_from_generators(4, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.contains(Permutation::identity(4)));

  auto a5 = qh::group_from_generators(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})});
  // exhaustive closure oracle
  CHECK(oracle::elements(a5).size() == 60);
  CHECK(a5.order() == 60);

  CHECK_THROWS_AS(qh::group_from_generators(4, {cyc(3, {{0, 1}})}), qh::InputError);
}

TEST_CASE("contains agrees with exhaustive enumeration") {
  auto a5 = G::alternating(5);
  auto all = oracle::elements(a5);
  CHECK(qh::contains(a5, cyc(5, {{0, 1}, {2, 3}})));
  CHECK(all.count(cyc(5, {{0, 1}, {2, 3}})) == 1);
  CHECK_FALSE(qh::contains(a5, cyc(5, {{0, 1}})));
  CHECK(all.count(cyc(5, {{0, 1}})) == 0);
  CHECK(qh::contains(a5, Permutation::identity(5)));
  CHECK_THROWS_AS(a5.contains(Permutation::identity(4)), qh::InputError);

  auto s5 = oracle::elements(G::symmetric(5));
  for (const auto& p : s5)
    CHECK(a5.contains(p) == (all.count(p) == 1));
}

TEST_CASE("chain order matches enumeration on the standard families") {
  std::vector<PermGroup> gs{G::cyclic(8),          G::symmetric(4),  G::quaternion(),
                            G::dihedral(24),       G::alternating(5), G::special_linear_2(3),
                            G::special_linear_2(5), G::elementary_abelian(3, 3),
                            qh::direct_product(G::alternating(5), G::symmetric(3))};
  std::vector<std::uint64_t> expected{8, 24, 8, 24, 60, 24, 120, 27, 360};
  for (std::size_t i = 0; i < gs.size(); ++i) {
    CHECK(gs[i].order() == expected[i]);
    CHECK(oracle::elements(gs[i]).size() == expected[i]);
  }
}

TEST_CASE("random subgroups of S7: order, closure and membership invariants") {
  std::mt19937 rng(12345);
  auto random_perm = [&] {
    std::vector<qh::Point> v{0, 1, 2, 3, 4, 5, 6};
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(v);
  };
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Permutation> gens;
    int k = 1 + trial % 3;
    for (int i = 0; i < k; ++i) {
      auto p = random_perm();
      // keep the groups small enough to enumerate exhaustively
      if (trial % 2 == 0)
        p = p * p * p;
      gens.push_back(p);
    }
    PermGroup g(7, gens);
    auto all = oracle::elements(g);
    if (all.size() > 5000)
      continue;
    CHECK(g.order() == all.size());
    for (const auto& x : gens)
      CHECK(g.contains(x));
    auto x = *all.begin(), y = *all.rbegin();
    CHECK(g.contains(x * y));
    CHECK(g.contains(y.inverse()));
    const auto& space = g.elements();
    REQUIRE(space.size() == all.size());
    for (qh::ElementIndex a = 0; a < space.size(); a += 7)
      for (qh::ElementIndex b = 0; b < space.size(); b += 11)
        CHECK(space.element(space.mul(a, b)) == space.element(a) * space.element(b));
  }
}

TEST_CASE("element table ordering and inverse") {
  auto s4 = G::symmetric(4);
  const auto& space = s4.elements();
  CHECK(space.element(0).is_identity());
  for (qh::ElementIndex i = 1; i < space.size(); ++i)
    CHECK(space.element(i - 1) < space.element(i));
  for (qh::ElementIndex i = 0; i < space.size(); ++i)
    CHECK(space.mul(i, space.inv(i)) == space.identity());
  CHECK(space.conjugacy_classes().size() == 5);
}

TEST_CASE("enumeration bound") {
  qh::ScopedBounds guard({100, 100, 100});
  CHECK_THROWS_AS(G::symmetric(5).elements(), qh::ResourceError);
  CHECK_NOTHROW(G::symmetric(4).elements());
}

TEST_CASE("centralizer and center") {
  auto s3 = G::symmetric(3);
  auto c3 = SubgroupRef::generated(s3, {cyc(3, {{0, 1, 2}})});
  auto c = qh::centralizer(s3, c3);
  CHECK(c.order() == 3);
  CHECK(oracle::elements(c) == oracle::centralizer(oracle::elements(s3), oracle::elements(c3)));
  CHECK(c == c3);

  CHECK(qh::centralizer(s3, SubgroupRef::trivial(s3)).order() == 6);

  auto q8 = G::quaternion();
  auto zq = qh::centralizer(q8, SubgroupRef::whole(q8));
  CHECK(zq.order() == 2);
  CHECK(oracle::elements(zq) ==
        oracle::centralizer(oracle::elements(q8), oracle::elements(q8)));

  CHECK(qh::center(s3).order() == 1);
  auto c6 = G::cyclic(6);
  CHECK(qh::center(c6).order() == 6);

  // every centralizer element commutes with every element of S
  auto s4 = G::symmetric(4);
  auto v4 = SubgroupRef::generated(s4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  auto cv = oracle::elements(qh::centralizer(s4, v4));
  for (const auto& x : cv)
    for (const auto& y : oracle::elements(v4))
      CHECK(x * y == y * x);
}

TEST_CASE("normal closure") {
  auto s3 = G::symmetric(3);
  auto t = SubgroupRef::generated(s3, {cyc(3, {{0, 1}})});
  CHECK(qh::normal_closure(s3, t).order() == 6);

  auto a3 = SubgroupRef::generated(s3, {cyc(3, {{0, 1, 2}})});
  CHECK(qh::normal_closure(s3, a3) == a3);

  auto s4 = G::symmetric(4);
  auto d = SubgroupRef::generated(s4, {cyc(4, {{0, 1}, {2, 3}})});
  auto n = qh::normal_closure(s4, d);
  CHECK(n.order() == 4);
  CHECK(oracle::elements(n) ==
        oracle::normal_closure(4, oracle::elements(s4), oracle::elements(d)));
}

TEST_CASE("commutator subgroups") {
  auto s3 = G::symmetric(3);
  auto w3 = SubgroupRef::whole(s3);
  auto d3 = qh::commutator_subgroup(s3, w3, w3);
  CHECK(d3.order() == 3);
  CHECK(oracle::elements(d3) == oracle::commutator(3, oracle::elements(s3), oracle::elements(s3)));

  CHECK(qh::commutator_subgroup(s3, w3, SubgroupRef::trivial(s3)).order() == 1);

  auto s4 = G::symmetric(4);
  auto w4 = SubgroupRef::whole(s4);
  auto d4 = qh::commutator_subgroup(s4, w4, w4);
  CHECK(d4.order() == 12);
  CHECK(d4 == SubgroupRef::generated(s4, G::alternating(4).generators()));
}

TEST_CASE("quotient groups") {
  auto s4 = G::symmetric(4);
  auto v4 = SubgroupRef::generated(s4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  auto q = qh::quotient_group(s4, v4);
  CHECK(q.group().order() == 6);
  CHECK(q.group().order() * v4.order() == s4.order());
  CHECK(oracle::is_abelian(oracle::elements(q.group())) == false);

  // projection is a homomorphism with kernel V4
  auto all = oracle::elements(s4);
  for (const auto& x : all) {
    CHECK(q.project(x).is_identity() == v4.contains(x));
    for (const auto& y : s4.generators())
      CHECK(q.project(x * y) == q.project(x) * q.project(y));
  }

  auto id = qh::quotient_group(s4, SubgroupRef::trivial(s4));
  CHECK(id.group().order() == 24);

  auto a4 = SubgroupRef::generated(s4, G::alternating(4).generators());
  CHECK(qh::quotient_group(s4, a4).group().order() == 2);

  auto t = SubgroupRef::generated(s4, {cyc(4, {{0, 1}})});
  CHECK_THROWS_AS(qh::quotient_group(s4, t), qh::PreconditionError);
}

TEST_CASE("direct products") {
  auto a5 = G::alternating(5);
  CHECK(qh::direct_product(a5, PermGroup(1, {})).order() == 60);
  auto v = qh::direct_product(G::cyclic(2), G::cyclic(2));
  CHECK(v.order() == 4);
  for (const auto& x : oracle::elements(v))
    CHECK((x * x).is_identity());
  CHECK(qh::direct_product(a5, a5).order() == 3600);
}

namespace {

// Automorphism of N's element set induced by conjugation with `by` (an element of
// some group normalizing N on the same points).
Permutation conjugation_action(const PermGroup& n, const Permutation& by) {
  const auto& space = n.elements();
  std::vector<qh::Point> images(space.size());
  for (qh::ElementIndex x = 0; x < space.size(); ++x)
    images[x] = space.require_index(qh::conjugate(space.element(x), by));
  return Permutation(images);
}

} // namespace

TEST_CASE("semidirect products") {
  // C3 by C2 acting by inversion
  auto c3 = G::cyclic(3);
  auto c2 = G::cyclic(2);
  auto inversion = conjugation_action(c3, cyc(3, {{1, 2}}));
  auto s3 = qh::semidirect_product(c3, c2, std::vector<Permutation>{inversion});
  CHECK(s3.order() == 6);
  CHECK_FALSE(oracle::is_abelian(oracle::elements(s3)));

  // trivial action: same order and element-order multiset as the direct product
  auto c4 = G::cyclic(4);
  auto triv = Permutation::identity(4);
  auto sd = qh::semidirect_product(c4, c2, std::vector<Permutation>{triv});
  auto dp = qh::direct_product(c4, c2);
  CHECK(sd.order() == dp.order());
  CHECK(oracle::element_orders(oracle::elements(sd)) ==
        oracle::element_orders(oracle::elements(dp)));

  // V4 by S3 acting faithfully: S4
  auto s4 = G::symmetric(4);
  auto v4 = PermGroup(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  auto h = G::symmetric(3);
  std::vector<Permutation> act{conjugation_action(v4, cyc(4, {{0, 1, 2}})),
                               conjugation_action(v4, cyc(4, {{0, 1}}))};
  auto hol = qh::semidirect_product(v4, h, act);
  CHECK(hol.order() == 24);
  CHECK(oracle::element_orders(oracle::elements(hol)) ==
        oracle::element_orders(oracle::elements(s4)));
  CHECK(oracle::hypercenter(4, oracle::elements(hol)).size() == 1);

  // not an automorphism
  auto bad = Permutation::from_cycles(3, {{0, 1}});
  CHECK_THROWS_AS(qh::semidirect_product(c3, c2, std::vector<Permutation>{bad}),
                  qh::PreconditionError);
  CHECK_THROWS_AS(qh::semidirect_product(c3, c2, std::vector<Permutation>{}),
                  qh::PreconditionError);
}

TEST_CASE("subgroup equality is by membership") {
  auto s4 = G::symmetric(4);
  auto a = SubgroupRef::generated(s4, {cyc(4, {{0, 1, 2, 3}})});
  auto b = SubgroupRef::generated(s4, {cyc(4, {{0, 3, 2, 1}}), cyc(4, {{0, 2}, {1, 3}})});
  CHECK(a == b);
  CHECK(a.is_subgroup_of(SubgroupRef::whole(s4)));
  CHECK_THROWS_AS(SubgroupRef::generated(G::alternating(4), {cyc(4, {{0, 1}})}),
                  qh::PreconditionError);
}
