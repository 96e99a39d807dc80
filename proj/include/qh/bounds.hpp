#ifndef QH_BOUNDS_HPP
#define QH_BOUNDS_HPP

#include <cstdint>

namespace qh {

// Process-wide size limits. Set once before starting work; reads are unsynchronized.
struct Bounds {
  std::uint64_t enumeration = 10000; // max |G| for explicit element enumeration
  std::uint64_t lattice = 2000;      // max |G| for full subgroup lattice
  std::uint64_t semidirect = 10000;  // max |H/K| * |G : C_G(H/K)| for factor semidirect products
};

const Bounds& bounds();
void set_bounds(const Bounds& b);

/// Installs bounds for the lifetime of the guard and restores the previous ones after.
class ScopedBounds {
public:
  explicit ScopedBounds(const Bounds& b) : saved_(bounds()) { set_bounds(b); }
  ~ScopedBounds() { set_bounds(saved_); }
  ScopedBounds(const ScopedBounds&) = delete;
  ScopedBounds& operator=(const ScopedBounds&) = delete;

private:
  Bounds saved_;
};

} // namespace qh

#endif // QH_BOUNDS_HPP
