#ifndef QH_FORMATIONS_HPP
#define QH_FORMATIONS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qh/chief.hpp"
#include "qh/class_of_groups.hpp"
#include "qh/perm_group.hpp"

namespace qh {

/// Lower central series on the stabilizer chain.
bool is_nilpotent(const PermGroup& g);
/// InputError unless p is prime.
bool is_p_group(const PermGroup& g, std::uint64_t p);
bool is_abelian(const PermGroup& g);

/// (H/K) ⋊ G/C_G(H/K) lies in X.
bool central_by_definition(const ChiefFactor& cf, const ClassOfGroups& x);
/// G/C_G(H/K) lies in F(p) for every prime p dividing |H/K|. PreconditionError without a local definition.
bool central_by_local_definition(const ChiefFactor& cf, const ClassOfGroups& x);
/// Definitional test; on ResourceError falls back to the local definition when X is hereditary and has one.
bool is_class_central(const ChiefFactor& cf, const ClassOfGroups& x);

/// Every generator of G induces an inner automorphism on H/K.
bool acts_by_inner_automorphisms(const ChiefFactor& cf);

/// Every factor of the chief series is F-central or acted on only by inner automorphisms.
bool is_quasi_F(const PermGroup& g, const ClassOfGroups& f);
bool is_quasinilpotent(const PermGroup& g);
/// Abelian chief factors central, non-abelian chief factors simple.
bool is_nca_member(const PermGroup& g);

/// Not in X, while every maximal subgroup is.
bool is_s_critical(const PermGroup& g, const ClassOfGroups& x);
std::vector<PermGroup> s_critical_groups(std::span<const PermGroup> corpus, const ClassOfGroups& x);

namespace classes {

ClassOfGroups nilpotent();
ClassOfGroups p_groups(std::uint64_t p);
ClassOfGroups abelian();
ClassOfGroups all();
ClassOfGroups nca();
/// F*: groups in which every element induces an inner automorphism on every F-eccentric chief factor.
ClassOfGroups quasi(const ClassOfGroups& f);
ClassOfGroups quasinilpotent();

/// A class with a caller-supplied local definition, flagged user-asserted.
ClassOfGroups user_defined(std::string name, std::function<bool(const PermGroup&)> member,
                           std::function<ClassOfGroups(std::uint64_t)> local_definition,
                           bool hereditary, bool contains_nilpotent);

/// `N`, `Np:<prime>`, `N*`, `Nca`, `abelian`, `all`. InputError otherwise.
ClassOfGroups parse(std::string_view selector);

} // namespace classes

} // namespace qh

#endif // QH_FORMATIONS_HPP
