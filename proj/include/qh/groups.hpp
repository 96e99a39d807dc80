#ifndef QH_GROUPS_HPP
#define QH_GROUPS_HPP

#include <cstdint>

#include "qh/perm_group.hpp"

namespace qh::groups {

PermGroup cyclic(std::uint32_t n);
PermGroup symmetric(std::uint32_t n);
PermGroup alternating(std::uint32_t n);
/// Dihedral group of the given order (2n) acting on n points.
PermGroup dihedral(std::uint32_t order);
/// Quaternion group in its regular representation on 8 points.
PermGroup quaternion();
/// SL(2, p) acting on the p^2 - 1 nonzero row vectors of F_p^2.
PermGroup special_linear_2(std::uint32_t p);
/// (C_p)^rank
PermGroup elementary_abelian(std::uint32_t p, std::uint32_t rank);
/// (A5 x A5) extended by the involution swapping the factors, on 10 points.
PermGroup a5_wreath_c2();

bool is_prime(std::uint64_t n);

} // namespace qh::groups

#endif // QH_GROUPS_HPP
