#ifndef QH_ELEMENT_SPACE_HPP
#define QH_ELEMENT_SPACE_HPP

#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "qh/perm_group.hpp"
#include "qh/permutation.hpp"
#include "qh/stabilizer_chain.hpp"

namespace qh {

using ElementIndex = std::uint32_t;

/// Subset of a group's elements, as a bitset over element indices.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }

  bool test(ElementIndex i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(ElementIndex i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(ElementIndex i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool is_subset_of(const ElementSet& other) const;
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator|=(const ElementSet& other);
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  /// a \ b
  friend ElementSet operator-(ElementSet a, const ElementSet& b);

  std::vector<ElementIndex> to_vector() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(static_cast<ElementIndex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const;
  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;

  /// Lexicographic order of the ascending element-index sequences.
  friend bool lex_less(const ElementSet& a, const ElementSet& b);

private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/**
 * Explicit element table of a permutation group.
 *
 * Elements are numbered in lexicographic order of their image lists, so index 0
 * is the identity and index order is independent of the generating set.
 * Products are located by tracking only the images of base points and reading
 * off the stabilizer-chain coordinates.
 */
class ElementSpace {
public:
  ElementSpace(const StabilizerChain& chain, std::span<const Permutation> generators);

  std::size_t size() const { return elements_.size(); }
  std::size_t degree() const { return chain_->degree(); }
  const Permutation& element(ElementIndex i) const { return elements_[i]; }
  const std::vector<Permutation>& all() const { return elements_; }

  static constexpr ElementIndex identity() { return 0; }
  ElementIndex mul(ElementIndex a, ElementIndex b) const;
  ElementIndex inv(ElementIndex a) const { return inverse_[a]; }
  /// b^-1 a b
  ElementIndex conj(ElementIndex a, ElementIndex b) const { return mul(mul(inverse_[b], a), b); }
  /// a^-1 b^-1 a b
  ElementIndex commutator(ElementIndex a, ElementIndex b) const {
    return mul(mul(inverse_[a], inverse_[b]), mul(a, b));
  }
  std::uint64_t element_order(ElementIndex a) const;

  /// nullopt when p is not a member.
  std::optional<ElementIndex> index_of(const Permutation& p) const;
  /// Throws PreconditionError when p is not a member.
  ElementIndex require_index(const Permutation& p) const;

  const std::vector<ElementIndex>& generator_indices() const { return generators_; }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const;
  ElementSet trivial_set() const;

  /// Subgroup generated by `gens`.
  ElementSet closure(std::span<const ElementIndex> gens) const;
  /// Smallest subgroup normal in the whole group that contains `gens`.
  ElementSet normal_closure(std::span<const ElementIndex> gens) const;
  /// Greedy generating set: repeatedly adds the least element outside the current span.
  std::vector<ElementIndex> generating_set(const ElementSet& subgroup) const;

  bool is_normal(const ElementSet& subgroup) const;
  ElementSet conjugate_set(const ElementSet& s, ElementIndex by) const;

  /// Conjugacy classes of the whole group, ordered by least member.
  const std::vector<std::vector<ElementIndex>>& conjugacy_classes() const;

  std::vector<Permutation> to_permutations(std::span<const ElementIndex> idx) const;

private:
  ElementIndex rank_from_base_images(std::span<const Point> images) const;

  const StabilizerChain* chain_;
  std::vector<Point> base_;
  std::vector<Permutation> elements_;
  std::vector<ElementIndex> inverse_;
  std::vector<ElementIndex> rank_to_index_;
  std::vector<std::uint64_t> strides_;
  std::vector<ElementIndex> generators_;

  mutable std::once_flag classes_once_;
  mutable std::vector<std::vector<ElementIndex>> classes_;
};

/// Elements of `s`, as a subset of the ambient group's element table.
ElementSet element_set(const SubgroupRef& s);

/// Subgroup of `ambient` with element set `s` (which must be a subgroup).
SubgroupRef subgroup_from_set(const PermGroup& ambient, const ElementSet& s);

} // namespace qh

#endif // QH_ELEMENT_SPACE_HPP
