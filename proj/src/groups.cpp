#include "qh/groups.hpp"

#include <numeric>

#include "qh/errors.hpp"

namespace qh::groups {

namespace {

Permutation cycle_on(std::uint32_t degree, std::uint32_t first, std::uint32_t len) {
  std::vector<Point> c(len);
  std::iota(c.begin(), c.end(), first);
  return Permutation::from_cycles(degree, {c});
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

PermGroup cyclic(std::uint32_t n) {
  if (n == 0)
    throw InputError("cyclic group order must be positive");
  if (n == 1)
    return PermGroup(1, {});
  return PermGroup(n, {cycle_on(n, 0, n)});
}

PermGroup symmetric(std::uint32_t n) {
  if (n == 0)
    throw InputError("symmetric group degree must be positive");
  if (n < 2)
    return PermGroup(n, {});
  return PermGroup(n, {cycle_on(n, 0, n), Permutation::from_cycles(n, {{0, 1}})});
}

PermGroup alternating(std::uint32_t n) {
  if (n == 0)
    throw InputError("alternating group degree must be positive");
  std::vector<Permutation> gens;
  // 3-cycles (0 1 k) generate A_n
  for (std::uint32_t k = 2; k < n; ++k)
    gens.push_back(Permutation::from_cycles(n, {{0, 1, k}}));
  return PermGroup(n, std::move(gens));
}

PermGroup dihedral(std::uint32_t order) {
  if (order < 4 || order % 2 != 0)
    throw InputError("dihedral group order must be even and at least 4");
  const std::uint32_t n = order / 2;
  if (n == 2)
    return PermGroup(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  std::vector<Point> reflection(n);
  for (std::uint32_t i = 0; i < n; ++i)
    reflection[i] = (n - i) % n;
  return PermGroup(n, {cycle_on(n, 0, n), Permutation(reflection)});
}

PermGroup quaternion() {
  return PermGroup(8, {Permutation::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}),
                       Permutation::from_cycles(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})});
}

PermGroup special_linear_2(std::uint32_t p) {
  if (!is_prime(p))
    throw InputError("SL(2, p) needs a prime p, got " + std::to_string(p));
  const std::uint32_t deg = p * p - 1;
  // vector (a, b) != 0 has point index a*p + b - 1
  auto act = [&](std::uint32_t m00, std::uint32_t m01, std::uint32_t m10, std::uint32_t m11) {
    std::vector<Point> images(deg);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        if (a == 0 && b == 0)
          continue;
        std::uint32_t x = (a * m00 + b * m10) % p;
        std::uint32_t y = (a * m01 + b * m11) % p;
        images[a * p + b - 1] = x * p + y - 1;
      }
    return Permutation(images);
  };
  return PermGroup(deg, {act(1, 1, 0, 1), act(0, p - 1, 1, 0)});
}

PermGroup elementary_abelian(std::uint32_t p, std::uint32_t rank) {
  if (!is_prime(p))
    throw InputError("elementary abelian group needs a prime p, got " + std::to_string(p));
  const std::uint32_t deg = p * rank;
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < rank; ++i)
    gens.push_back(cycle_on(deg, i * p, p));
  return PermGroup(deg == 0 ? 1 : deg, std::move(gens));
}

PermGroup a5_wreath_c2() {
  std::vector<Permutation> gens{
      Permutation::from_cycles(10, {{0, 1, 2, 3, 4}}),
      Permutation::from_cycles(10, {{0, 1, 2}}),
      Permutation::from_cycles(10, {{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}),
  };
  return PermGroup(10, std::move(gens));
}

} // namespace qh::groups
