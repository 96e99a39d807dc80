#include "doctest.h"

#include "oracle.hpp"
#include "qh/bounds.hpp"
#include "qh/errors.hpp"
#include "qh/formations.hpp"
#include "qh/groups.hpp"
#include "qh/lattice.hpp"

using qh::PermGroup;
using qh::SubgroupRef;
namespace G = qh::groups;
namespace C = qh::classes;

namespace {

std::vector<PermGroup> sample() {
  return {G::cyclic(1),
          G::cyclic(6),
          G::symmetric(3),
          G::symmetric(4),
          G::quaternion(),
          G::dihedral(8),
          G::dihedral(12),
          G::alternating(4),
          G::alternating(5),
          G::symmetric(5),
          G::special_linear_2(3),
          G::special_linear_2(5),
          G::elementary_abelian(3, 2),
          qh::direct_product(G::quaternion(), G::cyclic(3)),
          qh::direct_product(G::alternating(5), G::symmetric(3)),
          qh::direct_product(G::cyclic(2), G::alternating(5))};
}

std::vector<qh::ClassOfGroups> builtins() {
  return {C::nilpotent(), C::p_groups(2), C::p_groups(3), C::quasinilpotent(),
          C::nca(),       C::abelian(),   C::all()};
}

// Inner induction quantified over every element, centrality by brute-force centralizer.
bool oracle_quasinilpotent(const PermGroup& g) {
  auto gs = oracle::elements(g);
  for (const auto& cf : qh::chief_series(g).factors) {
    auto k = oracle::elements(cf.lower());
    auto h = oracle::elements(cf.upper());
    bool central = true;
    for (const auto& x : gs)
      for (const auto& y : h)
        central = central && k.count(qh::commutator(y, x)) == 1;
    if (central)
      continue;
    for (const auto& x : gs)
      if (!oracle::induces_inner(k, h, x))
        return false;
  }
  return true;
}

} // namespace

TEST_CASE("nilpotency") {
  CHECK(qh::is_nilpotent(G::dihedral(16)));
  CHECK(qh::is_nilpotent(G::elementary_abelian(3, 3)));
  CHECK_FALSE(qh::is_nilpotent(G::symmetric(3)));
  CHECK(qh::is_nilpotent(qh::direct_product(G::quaternion(), G::cyclic(3))));
  for (const auto& g : sample())
    CHECK(qh::is_nilpotent(g) == oracle::is_nilpotent(g.degree(), oracle::elements(g)));
}

TEST_CASE("p-groups") {
  for (std::uint64_t p : {2, 3, 5, 7})
    CHECK(qh::is_p_group(G::cyclic(1), p));
  CHECK(qh::is_p_group(G::dihedral(8), 2));
  CHECK_FALSE(qh::is_p_group(G::symmetric(3), 3));
  CHECK_THROWS_AS(qh::is_p_group(G::symmetric(3), 6), qh::InputError);
  CHECK_THROWS_AS(C::p_groups(1), qh::InputError);
}

TEST_CASE("class selectors") {
  CHECK(C::parse("N").name == "N");
  CHECK(C::parse("N*").name == "N*");
  CHECK(C::parse("Nca").name == "Nca");
  CHECK(C::parse("abelian").name == "abelian");
  CHECK(C::parse("all").name == "all");
  CHECK(C::parse("Np:5").name == "Np:5");
  CHECK_THROWS_AS(C::parse("Np:4"), qh::InputError);
  CHECK_THROWS_AS(C::parse("Np:x"), qh::InputError);
  CHECK_THROWS_AS(C::parse("soluble"), qh::InputError);
  CHECK(C::parse("N").has_local_definition());
  CHECK_FALSE(C::parse("N*").has_local_definition());
  CHECK_FALSE(C::nilpotent().user_asserted);
  auto u = C::user_defined("U", [](const PermGroup&) { return true; },
                           [](std::uint64_t) { return C::all(); }, true, true);
  CHECK(u.user_asserted);
  CHECK(C::quasi(u).user_asserted);
}

TEST_CASE("built-in classes contain the trivial group and ignore labels") {
  auto one = G::cyclic(1);
  unsigned seed = 7;
  for (const auto& x : builtins()) {
    CHECK(x(one));
    for (const auto& g : sample()) {
      bool v = x(g);
      CHECK(x(oracle::relabel(g, seed++)) == v);
      if (x.contains_nilpotent && qh::is_nilpotent(g))
        CHECK(v);
    }
  }
}

TEST_CASE("class centrality of chief factors") {
  auto s4 = qh::chief_series(G::symmetric(4));
  CHECK_FALSE(qh::is_class_central(s4.factors[0], C::nilpotent()));
  CHECK(qh::is_class_central(s4.factors[2], C::nilpotent()));

  auto a5s3 = qh::direct_product(G::alternating(5), G::symmetric(3));
  for (const auto& cf : qh::chief_series(a5s3).factors)
    if (cf.order() == 60) {
      CHECK(qh::is_class_central(cf, C::quasinilpotent()));
      CHECK_FALSE(qh::is_class_central(cf, C::nilpotent()));
      CHECK(qh::inner_induction_subgroup(cf).order() == 360);
    }

  auto s5 = qh::chief_series(G::symmetric(5));
  CHECK_FALSE(qh::is_class_central(s5.factors[0], C::quasinilpotent()));
}

TEST_CASE("N-centrality is centrality, by both paths") {
  auto n = C::nilpotent();
  for (const auto& g : sample())
    for (auto tie : {qh::TieBreak::least, qh::TieBreak::greatest})
      for (const auto& cf : qh::chief_series(g, tie).factors) {
        bool def = qh::central_by_definition(cf, n);
        CHECK(def == cf.is_central());
        CHECK(qh::central_by_local_definition(cf, n) == def);
        CHECK(qh::is_class_central(cf, n) == def);
      }
  CHECK_THROWS_AS(qh::central_by_local_definition(qh::chief_series(G::symmetric(3)).factors[0],
                                                  C::quasinilpotent()),
                  qh::PreconditionError);
}

TEST_CASE("fallback to the local definition past the semidirect bound") {
  auto s5 = qh::chief_series(G::symmetric(5));
  qh::ScopedBounds tight({10000, 2000, 100});
  CHECK_THROWS_AS(qh::central_by_definition(s5.factors[0], C::nilpotent()), qh::ResourceError);
  CHECK_FALSE(qh::is_class_central(s5.factors[0], C::nilpotent()));
  CHECK_THROWS_AS(qh::is_class_central(s5.factors[0], C::quasinilpotent()), qh::ResourceError);
}

TEST_CASE("quasinilpotency") {
  CHECK(qh::is_quasi_F(G::dihedral(8), C::nilpotent()));
  CHECK(qh::is_quasi_F(G::alternating(5), C::nilpotent()));
  CHECK_FALSE(qh::is_quasi_F(G::symmetric(5), C::nilpotent()));
  CHECK(qh::is_quasinilpotent(G::special_linear_2(5)));
  CHECK_FALSE(qh::is_quasinilpotent(G::symmetric(4)));
  CHECK(qh::is_quasinilpotent(G::alternating(5)));
  for (const auto& g : sample())
    CHECK(qh::is_quasinilpotent(g) == oracle_quasinilpotent(g));
}

TEST_CASE("quasi-F verdict is independent of the chief series") {
  for (const auto& f : {C::nilpotent(), C::abelian(), C::nca()})
    for (const auto& g : sample()) {
      bool other = true;
      for (const auto& cf : qh::chief_series(g, qh::TieBreak::greatest).factors)
        other = other && (qh::acts_by_inner_automorphisms(cf) || qh::is_class_central(cf, f));
      CHECK(qh::is_quasi_F(g, f) == other);
    }
}

TEST_CASE("Nca membership") {
  CHECK(qh::is_nca_member(G::quaternion()));
  CHECK(qh::is_nca_member(G::symmetric(5)));
  CHECK_FALSE(qh::is_nca_member(G::symmetric(4)));
  CHECK_FALSE(qh::is_nca_member(qh::direct_product(G::alternating(5), G::symmetric(3))));
  CHECK(qh::is_nca_member(qh::direct_product(G::alternating(5), G::alternating(5))));
  CHECK_FALSE(qh::is_nca_member(G::a5_wreath_c2()));
}

TEST_CASE("class hierarchy N within N* within Nca") {
  for (const auto& g : sample()) {
    if (qh::is_nilpotent(g))
      CHECK(qh::is_quasinilpotent(g));
    if (qh::is_quasinilpotent(g))
      CHECK(qh::is_nca_member(g));
  }
}

TEST_CASE("s-critical groups") {
  std::vector<PermGroup> small{G::cyclic(4), G::symmetric(3), G::symmetric(4), G::quaternion(),
                               G::dihedral(8), G::alternating(4), G::dihedral(10),
                               G::dihedral(12), G::special_linear_2(3)};
  auto crit = qh::s_critical_groups(small, C::nilpotent());
  auto has = [&](const std::vector<PermGroup>& v, const PermGroup& g) {
    for (const auto& h : v)
      if (h == g)
        return true;
    return false;
  };
  CHECK(has(crit, G::symmetric(3)));
  for (const auto& g : small) {
    auto gs = oracle::elements(g);
    auto maxes = oracle::maximal_subgroups(oracle::all_subgroups(g.degree(), gs), gs);
    bool expect = !oracle::is_nilpotent(g.degree(), gs);
    for (const auto& m : maxes)
      expect = expect && oracle::is_nilpotent(g.degree(), m);
    CHECK(has(crit, g) == expect);
  }

  std::vector<PermGroup> nil{G::cyclic(4), G::quaternion(), G::dihedral(8)};
  CHECK(qh::s_critical_groups(nil, C::nilpotent()).empty());

  std::vector<PermGroup> with_s3{G::symmetric(3)};
  CHECK(qh::s_critical_groups(with_s3, C::p_groups(2)).empty());
}
