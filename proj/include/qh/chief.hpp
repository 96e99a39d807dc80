#ifndef QH_CHIEF_HPP
#define QH_CHIEF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qh/element_space.hpp"
#include "qh/perm_group.hpp"

namespace qh {

/// Which minimal normal subgroup a chief-series step lifts when there is a choice.
enum class TieBreak {
  least,    // lexicographically least element-set encoding
  greatest, // lexicographically greatest
};

/**
 * A chief factor H/K of G together with the G-action on it.
 *
 * The factor group is realized on the right cosets of K in H (coset 0 is K
 * itself) by right multiplication, which is the regular representation of H/K.
 * `action()[i]` is the permutation of those cosets induced by conjugation with
 * the i-th generator of G, and the centralizer is the kernel of that action.
 */
class ChiefFactor {
public:
  const PermGroup& ambient() const;
  const SubgroupRef& lower() const;
  const SubgroupRef& upper() const;
  const PermGroup& factor() const;
  const std::vector<Permutation>& action() const;
  const SubgroupRef& centralizer() const;

  std::uint64_t order() const;
  bool is_abelian() const;
  /// C_G(H/K) = G
  bool is_central() const;

  const ElementSet& lower_set() const;
  const ElementSet& upper_set() const;
  const ElementSet& centralizer_set() const;

  /// Coset label of an element of H (by index in the ambient element table).
  std::uint32_t coset_of(ElementIndex h) const;
  /// One representative per coset, indexed by coset label.
  std::span<const ElementIndex> coset_representatives() const;
  /// Conjugation action of an arbitrary element of G on the cosets.
  Permutation action_of(ElementIndex g) const;

private:
  struct Data;
  std::shared_ptr<const Data> data_;
  friend ChiefFactor make_chief_factor(const PermGroup&, const ElementSet&, const ElementSet&);
};

struct ChiefSeries {
  PermGroup ambient;
  std::vector<SubgroupRef> terms; // 1 = terms[0] < ... < terms.back() = G
  std::vector<ChiefFactor> factors;
};

/// Builds the factor without checking that H/K is a chief factor.
ChiefFactor make_chief_factor(const PermGroup& g, const ElementSet& lower, const ElementSet& upper);

/// Checked construction. Throws PreconditionError naming an intermediate normal subgroup if one exists.
ChiefFactor chief_factor(const PermGroup& g, const SubgroupRef& lower, const SubgroupRef& upper);

std::vector<SubgroupRef> minimal_normal_subgroups(const PermGroup& g);
ChiefSeries chief_series(const PermGroup& g, TieBreak tie = TieBreak::least);

/// Witness h in H with conjugation by g equal to conjugation by h on H/K, found by
/// scanning every coset; nullopt when g induces an outer automorphism.
std::optional<Permutation> induces_inner_automorphism(const ChiefFactor& cf, const Permutation& g);

/// Preimage in G of Inn(H/K) under the action homomorphism: <H, C_G(H/K)>.
SubgroupRef inner_induction_subgroup(const ChiefFactor& cf);
ElementSet inner_induction_set(const ChiefFactor& cf);

/// (H/K) ⋊ G/C_G(H/K) acting faithfully on the coset set. ResourceError above bounds().semidirect.
PermGroup factor_semidirect(const ChiefFactor& cf);

/**
 * For N normal in G and a direct product of isomorphic non-abelian simple
 * groups, the minimal normal subgroups of G whose direct product is N.
 * Throws PreconditionError otherwise.
 */
std::vector<SubgroupRef> semisimple_decomposition(const PermGroup& g, const SubgroupRef& n);

// ---- element-level normal structure ----

/// Minimal elements among normal subgroups of G strictly containing K (and inside
/// `within` when given), sorted lexicographically.
std::vector<ElementSet> minimal_normal_over(const ElementSpace& space, const ElementSet& k,
                                            const ElementSet* within = nullptr);

/// Every normal subgroup of G, sorted by order then lexicographically.
std::vector<ElementSet> normal_subgroups(const ElementSpace& space);

/// Chief factors of a G-chief series running from 1 up to the normal subgroup `top`.
std::vector<ChiefFactor> chief_factors_below(const PermGroup& g, const ElementSet& top,
                                             TieBreak tie = TieBreak::least);

} // namespace qh

#endif // QH_CHIEF_HPP
