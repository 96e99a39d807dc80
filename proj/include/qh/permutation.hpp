#ifndef QH_PERMUTATION_HPP
#define QH_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qh {

using Point = std::uint32_t;

/**
 * A bijection on {0, ..., degree-1}, stored as its image list.
 *
 * Permutations act on the right: the image of p under g*h is (p^g)^h, so
 * `(g * h)[p] == h[g[p]]`.
 */
class Permutation {
public:
  Permutation() = default;

  /// Validates that `images` is a bijection; throws InputError otherwise.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles; throws InputError on repeated or out-of-range points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  /// No validation. Caller guarantees a bijection.
  static Permutation from_images_unchecked(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point p) const { return images_[p]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::uint64_t order() const;

  /// Disjoint-cycle notation, fixed points omitted; identity is "()".
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

private:
  std::vector<Point> images_;
};

/// a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);

/// b^-1 a b
Permutation conjugate(const Permutation& a, const Permutation& b);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

} // namespace qh

template <>
struct std::hash<qh::Permutation> {
  std::size_t operator()(const qh::Permutation& p) const noexcept;
};

#endif // QH_PERMUTATION_HPP
