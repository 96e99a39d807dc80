#include "qh/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "qh/bounds.hpp"
#include "qh/errors.hpp"
#include "qh/groups.hpp"

namespace qh {

struct SubgroupLattice::Data {
  PermGroup ambient;
  std::vector<ElementSet> sets;
  std::vector<SubgroupRef> nodes;
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> orbit_of;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
};

const PermGroup& SubgroupLattice::ambient() const { return data_->ambient; }
std::size_t SubgroupLattice::size() const { return data_->sets.size(); }
const SubgroupRef& SubgroupLattice::node(std::size_t i) const { return data_->nodes[i]; }
const ElementSet& SubgroupLattice::node_set(std::size_t i) const { return data_->sets[i]; }

bool SubgroupLattice::includes(std::size_t i, std::size_t j) const {
  return data_->sets[i].is_subset_of(data_->sets[j]);
}

const std::vector<std::vector<std::size_t>>& SubgroupLattice::conjugation_orbits() const {
  return data_->orbits;
}

std::size_t SubgroupLattice::orbit_of(std::size_t i) const { return data_->orbit_of[i]; }

std::optional<std::size_t> SubgroupLattice::find(const ElementSet& s) const {
  auto it = data_->index.find(s);
  if (it == data_->index.end())
    return std::nullopt;
  return it->second;
}

SubgroupLattice all_subgroups(const PermGroup& g) {
  if (g.order() > bounds().lattice)
    throw ResourceError("subgroup lattice of a group of order " + std::to_string(g.order()) +
                        " exceeds the lattice bound " + std::to_string(bounds().lattice));
  const ElementSpace& space = g.elements();

  std::vector<ElementSet> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> reps;

  auto add_class = [&](const ElementSet& s) {
    if (index.contains(s))
      return;
    std::vector<std::size_t> orbit{found.size()};
    index.emplace(s, found.size());
    found.push_back(s);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (ElementIndex t : space.generator_indices()) {
        ElementSet c = space.conjugate_set(found[orbit[i]], t);
        if (!index.contains(c)) {
          orbit.push_back(found.size());
          index.emplace(c, found.size());
          found.push_back(std::move(c));
        }
      }
    reps.push_back(orbit.front());
    orbits.push_back(std::move(orbit));
  };

  // Every subgroup is reached from a smaller one by adjoining one element, and
  // it is enough to extend one member per conjugacy class.
  add_class(space.trivial_set());
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const ElementSet h = found[reps[r]];
    const std::uint64_t h_order = h.count();
    std::vector<ElementIndex> gens = space.generating_set(h);
    gens.push_back(0);
    ElementSet done = h;
    for (ElementIndex x = 0; x < space.size(); ++x) {
      if (done.test(x))
        continue;
      gens.back() = x;
      ElementSet j = space.closure(gens);
      add_class(j);
      if (groups::is_prime(j.count() / h_order)) {
        done |= j;
        continue;
      }
      // <H, h x^k> = <H, x> for k prime to the order of x
      const std::uint64_t ord = space.element_order(x);
      ElementIndex xk = x;
      for (std::uint64_t k = 1; k < ord; ++k, xk = space.mul(xk, x))
        if (std::gcd(k, ord) == 1)
          h.for_each([&](ElementIndex y) { done.set(space.mul(y, xk)); });
    }
  }

  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> counts(found.size());
  for (std::size_t i = 0; i < found.size(); ++i)
    counts[i] = found[i].count();
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return counts[a] != counts[b] ? counts[a] < counts[b] : lex_less(found[a], found[b]);
  });
  std::vector<std::size_t> position(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    position[perm[i]] = i;

  auto data = std::make_shared<SubgroupLattice::Data>();
  data->ambient = g;
  data->sets.reserve(found.size());
  data->nodes.reserve(found.size());
  for (std::size_t i : perm) {
    data->nodes.push_back(subgroup_from_set(g, found[i]));
    data->sets.push_back(std::move(found[i]));
  }
  for (std::size_t i = 0; i < data->sets.size(); ++i)
    data->index.emplace(data->sets[i], i);
  for (auto& orbit : orbits) {
    for (auto& i : orbit)
      i = position[i];
    std::sort(orbit.begin(), orbit.end());
  }
  std::sort(orbits.begin(), orbits.end());
  data->orbit_of.resize(data->sets.size());
  for (std::size_t o = 0; o < orbits.size(); ++o)
    for (std::size_t i : orbits[o])
      data->orbit_of[i] = o;
  data->orbits = std::move(orbits);

  SubgroupLattice l;
  l.data_ = std::move(data);
  return l;
}

namespace {

// inclusion-maximal nodes among those flagged, scanning from the largest order down
std::vector<std::size_t> maximal_flagged(const SubgroupLattice& l, const std::vector<bool>& flag) {
  std::vector<std::size_t> out;
  for (std::size_t i = l.size(); i-- > 0;) {
    if (!flag[i])
      continue;
    bool covered = false;
    for (std::size_t m : out)
      if (l.includes(i, m)) {
        covered = true;
        break;
      }
    if (!covered)
      out.push_back(i);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

} // namespace

std::vector<std::size_t> maximal_nodes(const SubgroupLattice& l,
                                       const std::function<bool(const PermGroup&)>& member) {
  std::vector<bool> flag(l.size());
  for (const auto& orbit : l.conjugation_orbits()) {
    bool in = member(l.node(orbit.front()).group());
    for (std::size_t i : orbit)
      flag[i] = in;
  }
  return maximal_flagged(l, flag);
}

std::vector<std::size_t> maximal_subgroup_nodes(const SubgroupLattice& l) {
  std::vector<bool> flag(l.size(), true);
  flag[l.whole_index()] = false;
  return maximal_flagged(l, flag);
}

std::vector<SubgroupRef> maximal_subgroups(const SubgroupLattice& l) {
  std::vector<SubgroupRef> out;
  for (std::size_t i : maximal_subgroup_nodes(l))
    out.push_back(l.node(i));
  return out;
}

SubgroupRef frattini_subgroup(const SubgroupLattice& l) {
  ElementSet phi = l.node_set(l.whole_index());
  for (std::size_t i : maximal_subgroup_nodes(l))
    phi &= l.node_set(i);
  return subgroup_from_set(l.ambient(), phi);
}

std::vector<SubgroupRef> class_maximal_subgroups(const SubgroupLattice& l, const ClassOfGroups& x) {
  std::vector<SubgroupRef> out;
  for (std::size_t i : maximal_nodes(l, x.member))
    out.push_back(l.node(i));
  return out;
}

} // namespace qh
