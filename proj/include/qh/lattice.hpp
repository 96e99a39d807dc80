#ifndef QH_LATTICE_HPP
#define QH_LATTICE_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "qh/class_of_groups.hpp"
#include "qh/element_space.hpp"
#include "qh/perm_group.hpp"

namespace qh {

/**
 * Every subgroup of a small group.
 *
 * Nodes are ordered by order, then lexicographically by element set, so node 0
 * is the trivial subgroup and the last node is the whole group. Subgroups are
 * grouped into conjugacy classes (`conjugation_orbits`); the first member of
 * each orbit is its representative.
 */
class SubgroupLattice {
public:
  const PermGroup& ambient() const;
  std::size_t size() const;
  const SubgroupRef& node(std::size_t i) const;
  const ElementSet& node_set(std::size_t i) const;
  std::size_t trivial_index() const { return 0; }
  std::size_t whole_index() const { return size() - 1; }

  /// node i is a subgroup of node j
  bool includes(std::size_t i, std::size_t j) const;

  const std::vector<std::vector<std::size_t>>& conjugation_orbits() const;
  std::size_t orbit_of(std::size_t i) const;

  std::optional<std::size_t> find(const ElementSet& s) const;

private:
  struct Data;
  std::shared_ptr<const Data> data_;
  friend SubgroupLattice all_subgroups(const PermGroup& g);
};

/// ResourceError when |G| exceeds bounds().lattice.
SubgroupLattice all_subgroups(const PermGroup& g);

std::vector<SubgroupRef> maximal_subgroups(const SubgroupLattice& l);
SubgroupRef frattini_subgroup(const SubgroupLattice& l);

/// Node indices of the subgroups maximal among those satisfying `member`, which
/// is evaluated once per conjugacy class.
std::vector<std::size_t> maximal_nodes(const SubgroupLattice& l,
                                       const std::function<bool(const PermGroup&)>& member);

/// Proper subgroups maximal under inclusion, by node index.
std::vector<std::size_t> maximal_subgroup_nodes(const SubgroupLattice& l);

/// Subgroups in X contained in no strictly larger subgroup in X.
std::vector<SubgroupRef> class_maximal_subgroups(const SubgroupLattice& l, const ClassOfGroups& x);

} // namespace qh

#endif // QH_LATTICE_HPP
