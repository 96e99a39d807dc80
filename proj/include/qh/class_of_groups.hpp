#ifndef QH_CLASS_OF_GROUPS_HPP
#define QH_CLASS_OF_GROUPS_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "qh/perm_group.hpp"

namespace qh {

/**
 * A class of groups given by a membership predicate.
 *
 * `local_definition`, when set, maps a prime p to the canonical local value
 * F(p). Membership must be invariant under relabeling of points and must hold
 * for the trivial group.
 */
struct ClassOfGroups {
  std::string name;
  std::function<bool(const PermGroup&)> member;
  std::function<ClassOfGroups(std::uint64_t)> local_definition;
  bool hereditary = false;
  bool contains_nilpotent = false;
  /// Fullness and integration of the local definition were asserted by the caller, not checked.
  bool user_asserted = false;

  bool operator()(const PermGroup& g) const { return member(g); }
  bool has_local_definition() const { return static_cast<bool>(local_definition); }
};

} // namespace qh

#endif // QH_CLASS_OF_GROUPS_HPP
