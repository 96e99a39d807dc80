#include "qh/formations.hpp"

#include <charconv>

#include "qh/errors.hpp"
#include "qh/groups.hpp"
#include "qh/lattice.hpp"

namespace qh {

bool is_nilpotent(const PermGroup& g) {
  SubgroupRef whole = SubgroupRef::whole(g);
  SubgroupRef gamma = whole;
  while (gamma.order() > 1) {
    SubgroupRef next = commutator_subgroup(g, whole, gamma);
    if (next.order() == gamma.order())
      return false;
    gamma = next;
  }
  return true;
}

bool is_p_group(const PermGroup& g, std::uint64_t p) {
  if (!groups::is_prime(p))
    throw InputError("is_p_group: " + std::to_string(p) + " is not prime");
  std::uint64_t n = g.order();
  while (n % p == 0)
    n /= p;
  return n == 1;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

bool central_by_definition(const ChiefFactor& cf, const ClassOfGroups& x) {
  return x.member(factor_semidirect(cf));
}

bool central_by_local_definition(const ChiefFactor& cf, const ClassOfGroups& x) {
  if (!x.has_local_definition())
    throw PreconditionError("class " + x.name + " has no local definition");
  const PermGroup q = quotient_group(cf.ambient(), cf.centralizer()).group();
  std::uint64_t n = cf.order();
  for (std::uint64_t p = 2; n > 1; ++p) {
    if (n % p != 0)
      continue;
    while (n % p == 0)
      n /= p;
    if (!x.local_definition(p).member(q))
      return false;
  }
  return true;
}

bool is_class_central(const ChiefFactor& cf, const ClassOfGroups& x) {
  try {
    return central_by_definition(cf, x);
  } catch (const ResourceError&) {
    if (x.has_local_definition() && x.hereditary)
      return central_by_local_definition(cf, x);
    throw;
  }
}

bool acts_by_inner_automorphisms(const ChiefFactor& cf) {
  if (cf.is_central())
    return true;
  const ElementSet inner = inner_induction_set(cf);
  for (ElementIndex s : cf.ambient().elements().generator_indices())
    if (!inner.test(s))
      return false;
  return true;
}

bool is_quasi_F(const PermGroup& g, const ClassOfGroups& f) {
  // every chief factor of a nilpotent group is central
  if (is_nilpotent(g))
    return true;
  for (const auto& cf : chief_series(g).factors)
    if (!acts_by_inner_automorphisms(cf) && !is_class_central(cf, f))
      return false;
  return true;
}

bool is_quasinilpotent(const PermGroup& g) { return is_quasi_F(g, classes::nilpotent()); }

bool is_nca_member(const PermGroup& g) {
  for (const auto& cf : chief_series(g).factors) {
    if (cf.is_abelian()) {
      if (!cf.is_central())
        return false;
    } else if (minimal_normal_subgroups(cf.factor()).size() != 1) {
      // a characteristically simple group is simple iff it has one minimal normal subgroup
      return false;
    }
  }
  return true;
}

bool is_s_critical(const PermGroup& g, const ClassOfGroups& x) {
  if (x.member(g))
    return false;
  auto l = all_subgroups(g);
  std::vector<int> verdict(l.conjugation_orbits().size(), -1);
  for (std::size_t m : maximal_subgroup_nodes(l)) {
    int& v = verdict[l.orbit_of(m)];
    if (v < 0)
      v = x.member(l.node(m).group()) ? 1 : 0;
    if (v == 0)
      return false;
  }
  return true;
}

std::vector<PermGroup> s_critical_groups(std::span<const PermGroup> corpus, const ClassOfGroups& x) {
  std::vector<PermGroup> out;
  for (const auto& g : corpus)
    if (is_s_critical(g, x))
      out.push_back(g);
  return out;
}

namespace classes {

ClassOfGroups p_groups(std::uint64_t p) {
  if (!groups::is_prime(p))
    throw InputError("Np: " + std::to_string(p) + " is not prime");
  ClassOfGroups c;
  c.name = "Np:" + std::to_string(p);
  c.member = [p](const PermGroup& g) { return is_p_group(g, p); };
  c.hereditary = true;
  return c;
}

ClassOfGroups nilpotent() {
  ClassOfGroups c;
  c.name = "N";
  c.member = [](const PermGroup& g) { return is_nilpotent(g); };
  c.local_definition = [](std::uint64_t p) { return p_groups(p); };
  c.hereditary = true;
  c.contains_nilpotent = true;
  return c;
}

ClassOfGroups abelian() {
  ClassOfGroups c;
  c.name = "abelian";
  c.member = [](const PermGroup& g) { return is_abelian(g); };
  c.hereditary = true;
  return c;
}

ClassOfGroups all() {
  ClassOfGroups c;
  c.name = "all";
  c.member = [](const PermGroup&) { return true; };
  c.local_definition = [](std::uint64_t) { return all(); };
  c.hereditary = true;
  c.contains_nilpotent = true;
  return c;
}

ClassOfGroups nca() {
  ClassOfGroups c;
  c.name = "Nca";
  c.member = [](const PermGroup& g) { return is_nca_member(g); };
  c.contains_nilpotent = true;
  return c;
}

ClassOfGroups quasi(const ClassOfGroups& f) {
  ClassOfGroups c;
  c.name = f.name + "*";
  c.member = [f](const PermGroup& g) { return is_quasi_F(g, f); };
  c.contains_nilpotent = f.contains_nilpotent;
  c.user_asserted = f.user_asserted;
  return c;
}

ClassOfGroups quasinilpotent() { return quasi(nilpotent()); }

ClassOfGroups user_defined(std::string name, std::function<bool(const PermGroup&)> member,
                           std::function<ClassOfGroups(std::uint64_t)> local_definition,
                           bool hereditary, bool contains_nilpotent) {
  ClassOfGroups c;
  c.name = std::move(name);
  c.member = std::move(member);
  c.local_definition = std::move(local_definition);
  c.hereditary = hereditary;
  c.contains_nilpotent = contains_nilpotent;
  c.user_asserted = true;
  return c;
}

ClassOfGroups parse(std::string_view selector) {
  if (selector == "N")
    return nilpotent();
  if (selector == "N*")
    return quasinilpotent();
  if (selector == "Nca")
    return nca();
  if (selector == "abelian")
    return abelian();
  if (selector == "all")
    return all();
  if (selector.starts_with("Np:")) {
    auto digits = selector.substr(3);
    std::uint64_t p = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || end != digits.data() + digits.size())
      throw InputError("bad prime in class selector '" + std::string(selector) + "'");
    return p_groups(p);
  }
  throw InputError("unknown class selector '" + std::string(selector) +
                   "' (expected N, Np:<prime>, N*, Nca, abelian or all)");
}

} // namespace classes

} // namespace qh
