#include "qh/permutation.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "qh/errors.hpp"

namespace qh {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Point p = images_[i];
    if (p >= images_.size())
      throw InputError("permutation image " + std::to_string(p) + " out of range for degree " +
                       std::to_string(images_.size()));
    if (seen[p])
      throw InputError("permutation is not a bijection: point " + std::to_string(p) +
                       " is hit twice");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return from_images_unchecked(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point p = cycle[i];
      if (p >= degree)
        throw InputError("point " + std::to_string(p) + " out of range for degree " +
                         std::to_string(degree));
      if (used[p])
        throw InputError("point " + std::to_string(p) + " appears twice in cycle notation");
      used[p] = true;
      images[p] = cycle[(i + 1) % cycle.size()];
    }
  }
  return from_images_unchecked(std::move(images));
}

Permutation Permutation::from_images_unchecked(std::vector<Point> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return from_images_unchecked(std::move(inv));
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (Point p = static_cast<Point>(i); !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    any = true;
    os << '(';
    Point p = static_cast<Point>(i);
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first)
        os << ' ';
      os << p;
      first = false;
      p = images_[p];
    }
    os << ')';
  }
  if (!any)
    os << "()";
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<Point> images(a.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = b.images_[a.images_[i]];
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

Permutation conjugate(const Permutation& a, const Permutation& b) {
  return b.inverse() * a * b;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_cycle_string();
}

} // namespace qh

std::size_t std::hash<qh::Permutation>::operator()(const qh::Permutation& p) const noexcept {
  // FNV-1a over the image list
  std::size_t h = 1469598103934665603ull;
  for (qh::Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}
