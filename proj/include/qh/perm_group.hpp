#ifndef QH_PERM_GROUP_HPP
#define QH_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "qh/permutation.hpp"
#include "qh/stabilizer_chain.hpp"

namespace qh {

class ElementSpace;

/**
 * A finite permutation group given by generators.
 *
 * The stabilizer chain is built eagerly on construction, so a PermGroup is an
 * immutable value and cheap to copy (the state is shared). The element table
 * used by enumeration-based algorithms is built lazily and guarded by the
 * enumeration bound.
 */
class PermGroup {
public:
  /// Trivial group on zero points.
  PermGroup();

  /// Throws InputError when a generator has the wrong degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const;
  const std::vector<Permutation>& generators() const;
  const StabilizerChain& chain() const;
  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }

  /// Throws InputError on degree mismatch.
  bool contains(const Permutation& p) const;

  /// Element table for this group. Throws ResourceError above bounds().enumeration.
  const ElementSpace& elements() const;

  /// Equality of the generated groups (same degree, mutual generator membership).
  friend bool operator==(const PermGroup& a, const PermGroup& b);

private:
  struct Data;
  std::shared_ptr<Data> data_;
};

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators);

/// A subgroup of `ambient`, stored as its own PermGroup on the same points.
class SubgroupRef {
public:
  /// Throws PreconditionError when a generator of `group` is not in `ambient`.
  SubgroupRef(PermGroup ambient, PermGroup group);

  static SubgroupRef whole(const PermGroup& g);
  static SubgroupRef trivial(const PermGroup& g);
  static SubgroupRef generated(const PermGroup& ambient, std::vector<Permutation> generators);

  const PermGroup& ambient() const { return ambient_; }
  const PermGroup& group() const { return group_; }
  const std::vector<Permutation>& generators() const { return group_.generators(); }
  std::uint64_t order() const { return group_.order(); }
  bool contains(const Permutation& p) const { return group_.contains(p); }

  bool is_subgroup_of(const SubgroupRef& other) const;
  /// Conjugation by every ambient generator keeps the subgroup.
  bool is_normal() const;

  friend bool operator==(const SubgroupRef& a, const SubgroupRef& b) {
    return a.group_ == b.group_;
  }

private:
  PermGroup ambient_;
  PermGroup group_;
};

/// G/N realized on the right cosets of N, with the projection homomorphism.
class QuotientMap {
public:
  const PermGroup& source() const { return source_; }
  const PermGroup& group() const { return group_; }
  std::size_t index() const { return reps_.size(); }

  /// Image of g in G/N; g must lie in the source group.
  Permutation project(const Permutation& g) const;

private:
  friend QuotientMap quotient_group(const PermGroup& g, const SubgroupRef& n);
  PermGroup source_;
  PermGroup group_;
  std::vector<std::uint32_t> coset_of_; // by element index of source
  std::vector<std::uint32_t> reps_;     // element index of one representative per coset
};

bool contains(const PermGroup& g, const Permutation& p);

/// {g in G : gs = sg for all s in S}. Enumerates G.
SubgroupRef centralizer(const PermGroup& g, const SubgroupRef& s);
SubgroupRef center(const PermGroup& g);

/// Smallest normal subgroup of G containing S. Works on the stabilizer chain only.
SubgroupRef normal_closure(const PermGroup& g, const SubgroupRef& s);

/// Normal closure in <A, B> of all generator commutators [a, b].
SubgroupRef commutator_subgroup(const PermGroup& g, const SubgroupRef& a, const SubgroupRef& b);

/// Throws PreconditionError when N is not normal in G.
QuotientMap quotient_group(const PermGroup& g, const SubgroupRef& n);

/// A acts on points [0, deg A), B on [deg A, deg A + deg B).
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/**
 * N ⋊ H for an action given on the element set of N.
 *
 * `action[i]` is the automorphism of N assigned to the i-th generator of H, as a
 * permutation of the element indices of `n.elements()`. The images must define a
 * homomorphism H -> Aut(N). When that homomorphism is injective the result acts
 * on N's element set alone (right translations by N's generators plus the action
 * images); otherwise H's own points are appended so that the result still has
 * order |N| * |H|.
 */
PermGroup semidirect_product(const PermGroup& n, const PermGroup& h,
                             std::span<const Permutation> action);

} // namespace qh

#endif // QH_PERM_GROUP_HPP
