#ifndef QH_STABILIZER_CHAIN_HPP
#define QH_STABILIZER_CHAIN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qh/permutation.hpp"

namespace qh {

/**
 * Base and strong generating set built by deterministic incremental Schreier-Sims.
 *
 * Level i stores the basic orbit of base point b_i under the strong generators
 * that fix b_0..b_{i-1}, together with explicit transversal elements u with
 * b_i^u = orbit point (and their inverses, for sifting).
 */
class StabilizerChain {
public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> orbit_pos; // indexed by point, -1 outside the orbit
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
  };

  struct SiftResult {
    Permutation residue;
    std::size_t level; // == levels().size() when every base point was matched
  };

  StabilizerChain() = default;
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const { return degree_; }
  std::span<const Level> levels() const { return levels_; }
  std::vector<Point> base() const;

  /// Product of basic orbit lengths. Throws ResourceError on 64-bit overflow.
  std::uint64_t order() const;

  SiftResult sift(const Permutation& g, std::size_t from_level = 0) const;
  bool contains(const Permutation& g) const;

  /// Adds g to the generated group. No-op when g is already a member.
  void extend(const Permutation& g);

private:
  void add_to_levels(std::size_t first, std::size_t last, const Permutation& h);
  void grow_orbit(Level& level, std::size_t first_new_generator);
  void complete_from(std::size_t level);

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
  // checked_[i][s]: orbit positions of level i already verified against generator s
  std::vector<std::vector<std::size_t>> checked_;
};

} // namespace qh

#endif // QH_STABILIZER_CHAIN_HPP
