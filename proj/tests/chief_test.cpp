#include "doctest.h"

#include <algorithm>
#include <map>

#include "oracle.hpp"
#include "qh/bounds.hpp"
#include "qh/chief.hpp"
#include "qh/errors.hpp"
#include "qh/groups.hpp"

using qh::Permutation;
using qh::PermGroup;
using qh::SubgroupRef;
namespace G = qh::groups;

namespace {

oracle::ElemSet as_oracle(const qh::ElementSpace& space, const qh::ElementSet& s) {
  oracle::ElemSet out;
  s.for_each([&](qh::ElementIndex i) { out.insert(space.element(i)); });
  return out;
}

std::vector<PermGroup> small_groups() {
  return {G::cyclic(1),  G::cyclic(6),         G::symmetric(3),  G::symmetric(4),
          G::quaternion(), G::dihedral(8),     G::dihedral(12),  G::alternating(4),
          G::special_linear_2(3), G::elementary_abelian(2, 3), G::dihedral(18),
          qh::direct_product(G::symmetric(3), G::cyclic(3))};
}

// (order, central?) multiset of a chief series
std::multiset<std::pair<std::uint64_t, bool>> factor_profile(const qh::ChiefSeries& s) {
  std::multiset<std::pair<std::uint64_t, bool>> out;
  for (const auto& cf : s.factors)
    out.insert({cf.order(), cf.is_central()});
  return out;
}

} // namespace

TEST_CASE("minimal normal subgroups against brute force") {
  for (const auto& g : small_groups()) {
    auto expect = oracle::minimal_normal_subgroups(g.degree(), oracle::elements(g));
    auto got = qh::minimal_normal_subgroups(g);
    REQUIRE(got.size() == expect.size());
    for (const auto& m : got)
      CHECK(std::find(expect.begin(), expect.end(), oracle::elements(m)) != expect.end());
  }
}

TEST_CASE("normal subgroups against brute force") {
  for (const auto& g : small_groups()) {
    auto expect = oracle::normal_subgroups(g.degree(), oracle::elements(g));
    auto got = qh::normal_subgroups(g.elements());
    REQUIRE(got.size() == expect.size());
    for (const auto& n : got)
      CHECK(std::find(expect.begin(), expect.end(), as_oracle(g.elements(), n)) != expect.end());
  }
}

TEST_CASE("S4 chief structure") {
  auto s4 = G::symmetric(4);
  auto mins = qh::minimal_normal_subgroups(s4);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].order() == 4);

  auto series = qh::chief_series(s4);
  REQUIRE(series.factors.size() == 3);
  CHECK(series.factors[0].order() == 4);
  CHECK(series.factors[1].order() == 3);
  CHECK(series.factors[2].order() == 2);
  CHECK(series.factors[2].is_central());
  CHECK_FALSE(series.factors[0].is_central());
  CHECK(series.terms.size() == 4);
  CHECK(series.terms.back().order() == 24);
}

TEST_CASE("A5 in S5 has trivial centralizer") {
  auto s5 = G::symmetric(5);
  auto series = qh::chief_series(s5);
  REQUIRE(series.factors.size() == 2);
  CHECK(series.factors[0].order() == 60);
  CHECK(series.factors[0].centralizer().order() == 1);
  CHECK_FALSE(series.factors[0].is_abelian());
  CHECK(series.factors[1].is_central());
}

TEST_CASE("A5 x A5 and the wreath product") {
  auto a5sq = qh::direct_product(G::alternating(5), G::alternating(5));
  auto series = qh::chief_series(a5sq);
  REQUIRE(series.factors.size() == 2);
  CHECK(series.factors[0].order() == 60);
  CHECK(series.factors[1].order() == 60);
  CHECK(qh::minimal_normal_subgroups(a5sq).size() == 2);
  CHECK(qh::semisimple_decomposition(a5sq, SubgroupRef::whole(a5sq)).size() == 2);

  auto w = G::a5_wreath_c2();
  CHECK(w.order() == 7200);
  auto mins = qh::minimal_normal_subgroups(w);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].order() == 3600);
  auto parts = qh::semisimple_decomposition(w, mins[0]);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == mins[0]);

  auto ws = qh::chief_series(w);
  REQUIRE(ws.factors.size() == 2);
  CHECK(ws.factors[0].order() == 3600);
  CHECK(ws.factors[1].order() == 2);
}

TEST_CASE("semisimple_decomposition rejects non-semisimple input") {
  auto s4 = G::symmetric(4);
  CHECK_THROWS_AS(qh::semisimple_decomposition(s4, qh::minimal_normal_subgroups(s4)[0]),
                  qh::PreconditionError);
  CHECK_THROWS_AS(qh::semisimple_decomposition(s4, SubgroupRef::whole(s4)), qh::PreconditionError);
  auto s5 = G::symmetric(5);
  auto a5 = qh::minimal_normal_subgroups(s5)[0];
  CHECK(qh::semisimple_decomposition(s5, a5).size() == 1);
}

TEST_CASE("every chief series step is a chief factor") {
  for (const auto& g : small_groups()) {
    auto gs = oracle::elements(g);
    auto normals = oracle::normal_subgroups(g.degree(), gs);
    for (auto tie : {qh::TieBreak::least, qh::TieBreak::greatest}) {
      auto series = qh::chief_series(g, tie);
      std::uint64_t product = 1;
      for (const auto& cf : series.factors) {
        auto k = oracle::elements(cf.lower());
        auto h = oracle::elements(cf.upper());
        CHECK(oracle::is_normal(gs, k));
        CHECK(oracle::is_normal(gs, h));
        CHECK(k.size() < h.size());
        for (const auto& n : normals)
          CHECK_FALSE((oracle::subset(k, n) && oracle::subset(n, h) && n != k && n != h));
        CHECK(cf.order() * k.size() == h.size());
        product *= cf.order();
      }
      CHECK(product == g.order());
    }
  }
}

TEST_CASE("chief factors are independent of tie-break and labeling") {
  std::vector<PermGroup> gs = small_groups();
  gs.push_back(qh::direct_product(G::alternating(5), G::symmetric(3)));
  gs.push_back(G::special_linear_2(5));
  unsigned seed = 1;
  for (const auto& g : gs) {
    auto base = factor_profile(qh::chief_series(g));
    CHECK(factor_profile(qh::chief_series(g, qh::TieBreak::greatest)) == base);
    CHECK(factor_profile(qh::chief_series(oracle::relabel(g, seed++))) == base);
  }
}

TEST_CASE("centralizer and inner automorphisms against brute force") {
  for (const auto& g : small_groups()) {
    const auto& space = g.elements();
    auto gs = oracle::elements(g);
    for (const auto& cf : qh::chief_series(g).factors) {
      auto k = oracle::elements(cf.lower());
      auto h = oracle::elements(cf.upper());
      oracle::ElemSet cent, inner;
      for (const auto& x : gs) {
        bool central = true;
        for (const auto& y : h)
          central = central && k.count(qh::commutator(y, x)) == 1;
        if (central)
          cent.insert(x);
        if (oracle::induces_inner(k, h, x))
          inner.insert(x);
      }
      CHECK(oracle::elements(cf.centralizer()) == cent);
      CHECK(oracle::elements(qh::inner_induction_subgroup(cf)) == inner);
      for (const auto& x : gs) {
        auto w = qh::induces_inner_automorphism(cf, x);
        REQUIRE(w.has_value() == (inner.count(x) == 1));
        if (w) {
          CHECK(h.count(*w) == 1);
          CHECK(cf.action_of(space.require_index(x)) == cf.action_of(space.require_index(*w)));
        }
      }
    }
  }
}

TEST_CASE("checked chief_factor") {
  auto s4 = G::symmetric(4);
  auto series = qh::chief_series(s4);
  auto cf = qh::chief_factor(s4, series.terms[1], series.terms[2]);
  CHECK(cf.order() == 3);
  CHECK_THROWS_AS(qh::chief_factor(s4, series.terms[0], series.terms[2]), qh::PreconditionError);
  CHECK_THROWS_AS(qh::chief_factor(s4, series.terms[2], series.terms[1]), qh::PreconditionError);
  auto s3sub = SubgroupRef::generated(
      s4, {Permutation::from_cycles(4, {{0, 1, 2}}), Permutation::from_cycles(4, {{0, 1}})});
  CHECK_THROWS_AS(qh::chief_factor(s4, series.terms[0], s3sub), qh::PreconditionError);
}

TEST_CASE("factor semidirect products") {
  auto s4 = G::symmetric(4);
  auto series = qh::chief_series(s4);
  // V4 with S4/V4 = S3 acting: order 24, the holomorph-like S4
  auto p0 = qh::factor_semidirect(series.factors[0]);
  CHECK(p0.order() == 24);
  CHECK(oracle::element_orders(oracle::elements(p0)) == oracle::element_orders(oracle::elements(s4)));
  // A4/V4 with S4/A4 acting by inversion: S3
  CHECK(qh::factor_semidirect(series.factors[1]).order() == 6);
  // central factor: just the factor
  CHECK(qh::factor_semidirect(series.factors[2]).order() == 2);

  auto s5 = G::symmetric(5);
  auto a5 = qh::chief_series(s5).factors[0];
  CHECK(qh::factor_semidirect(a5).order() == 60 * 120);
  {
    qh::ScopedBounds tight({10000, 2000, 1000});
    CHECK_THROWS_AS(qh::factor_semidirect(a5), qh::ResourceError);
  }

  for (const auto& g : small_groups())
    for (const auto& cf : qh::chief_series(g).factors) {
      auto sd = qh::factor_semidirect(cf);
      CHECK(sd.order() == cf.order() * (g.order() / cf.centralizer().order()));
    }
}

TEST_CASE("inner automorphism spot checks") {
  auto s5 = G::symmetric(5);
  auto a5 = qh::chief_series(s5).factors[0];
  CHECK_FALSE(qh::induces_inner_automorphism(a5, Permutation::from_cycles(5, {{0, 1}})));
  auto g3 = Permutation::from_cycles(5, {{0, 1, 2}});
  auto w = qh::induces_inner_automorphism(a5, g3);
  REQUIRE(w);
  CHECK(*w == g3);
  CHECK(qh::inner_induction_subgroup(a5).order() == 60);

  auto s4 = qh::chief_series(G::symmetric(4));
  auto v4 = s4.factors[0];
  CHECK(v4.centralizer().order() == 4);
  CHECK(qh::quotient_group(G::symmetric(4), v4.centralizer()).group().order() == 6);
  CHECK_FALSE(qh::induces_inner_automorphism(v4, Permutation::from_cycles(4, {{0, 1, 2}})));
  CHECK(qh::inner_induction_subgroup(s4.factors[2]).order() == 24);
}

TEST_CASE("simple factor with inner action gives a direct square") {
  auto a5 = G::alternating(5);
  auto cf = qh::chief_series(a5).factors[0];
  auto sd = qh::factor_semidirect(cf);
  CHECK(sd.order() == 3600);
  auto sq = qh::direct_product(a5, a5);
  CHECK(oracle::element_orders(oracle::elements(sd)) == oracle::element_orders(oracle::elements(sq)));
  CHECK(qh::minimal_normal_subgroups(sd).size() == 2);
}

TEST_CASE("chief factors are characteristically simple") {
  std::vector<PermGroup> gs = small_groups();
  gs.push_back(qh::direct_product(G::alternating(5), G::alternating(5)));
  gs.push_back(G::a5_wreath_c2());
  for (const auto& g : gs)
    for (const auto& cf : qh::chief_series(g).factors) {
      // all minimal normal subgroups of the factor group have one common order and generate it
      auto mins = qh::minimal_normal_subgroups(cf.factor());
      REQUIRE_FALSE(mins.empty());
      std::vector<Permutation> gens;
      for (const auto& m : mins) {
        CHECK(m.order() == mins.front().order());
        gens.insert(gens.end(), m.generators().begin(), m.generators().end());
      }
      CHECK(qh::group_from_generators(cf.factor().degree(), gens).order() == cf.order());
    }
}
