#include "qh/perm_group.hpp"

#include <limits>
#include <mutex>

#include "qh/bounds.hpp"
#include "qh/element_space.hpp"
#include "qh/errors.hpp"

namespace qh {

namespace {
Bounds g_bounds;
constexpr std::uint32_t kUnlabeled = std::numeric_limits<std::uint32_t>::max();
} // namespace

const Bounds& bounds() { return g_bounds; }
void set_bounds(const Bounds& b) {
  if (b.enumeration == 0 || b.lattice == 0 || b.semidirect == 0)
    throw InputError("bounds must be positive");
  g_bounds = b;
}

struct PermGroup::Data {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  StabilizerChain chain;
  std::once_flag space_once;
  std::unique_ptr<ElementSpace> space;
};

PermGroup::PermGroup() : data_(std::make_shared<Data>()) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : data_(std::make_shared<Data>()) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw InputError("generator " + g.to_cycle_string() + " has degree " +
                       std::to_string(g.degree()) + ", expected " + std::to_string(degree));
  data_->degree = degree;
  data_->chain = StabilizerChain(degree, generators);
  data_->generators = std::move(generators);
}

std::size_t PermGroup::degree() const { return data_->degree; }
const std::vector<Permutation>& PermGroup::generators() const { return data_->generators; }
const StabilizerChain& PermGroup::chain() const { return data_->chain; }
std::uint64_t PermGroup::order() const { return data_->chain.order(); }

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree())
    throw InputError("degree mismatch: permutation on " + std::to_string(p.degree()) +
                     " points, group on " + std::to_string(degree()));
  return data_->chain.contains(p);
}

const ElementSpace& PermGroup::elements() const {
  if (order() > bounds().enumeration)
    throw ResourceError("group of order " + std::to_string(order()) +
                        " exceeds the enumeration bound " + std::to_string(bounds().enumeration));
  std::call_once(data_->space_once, [d = data_.get()] {
    d->space = std::make_unique<ElementSpace>(d->chain, d->generators);
  });
  return *data_->space;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  if (a.data_ == b.data_)
    return true;
  if (a.degree() != b.degree() || a.order() != b.order())
    return false;
  for (const auto& g : a.generators())
    if (!b.chain().contains(g))
      return false;
  for (const auto& g : b.generators())
    if (!a.chain().contains(g))
      return false;
  return true;
}

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> generators) {
  return PermGroup(degree, std::move(generators));
}

// ---- SubgroupRef ----

SubgroupRef::SubgroupRef(PermGroup ambient, PermGroup group)
    : ambient_(std::move(ambient)), group_(std::move(group)) {
  if (group_.degree() != ambient_.degree())
    throw PreconditionError("subgroup degree differs from ambient degree");
  for (const auto& g : group_.generators())
    if (!ambient_.chain().contains(g))
      throw PreconditionError("generator " + g.to_cycle_string() + " is not in the ambient group");
}

SubgroupRef SubgroupRef::whole(const PermGroup& g) { return SubgroupRef(g, g); }

SubgroupRef SubgroupRef::trivial(const PermGroup& g) {
  return SubgroupRef(g, PermGroup(g.degree(), {}));
}

SubgroupRef SubgroupRef::generated(const PermGroup& ambient, std::vector<Permutation> generators) {
  return SubgroupRef(ambient, PermGroup(ambient.degree(), std::move(generators)));
}

bool SubgroupRef::is_subgroup_of(const SubgroupRef& other) const {
  if (group_.degree() != other.group_.degree())
    return false;
  for (const auto& g : generators())
    if (!other.group_.chain().contains(g))
      return false;
  return true;
}

bool SubgroupRef::is_normal() const {
  for (const auto& s : generators())
    for (const auto& g : ambient_.generators())
      if (!group_.chain().contains(conjugate(s, g)))
        return false;
  return true;
}

// ---- element-set bridge ----

ElementSet element_set(const SubgroupRef& s) {
  const ElementSpace& space = s.ambient().elements();
  std::vector<ElementIndex> gens;
  for (const auto& g : s.generators())
    gens.push_back(space.require_index(g));
  return space.closure(gens);
}

SubgroupRef subgroup_from_set(const PermGroup& ambient, const ElementSet& s) {
  const ElementSpace& space = ambient.elements();
  auto gens = space.generating_set(s);
  return SubgroupRef(ambient, PermGroup(ambient.degree(), space.to_permutations(gens)));
}

// ---- operations ----

bool contains(const PermGroup& g, const Permutation& p) { return g.contains(p); }

SubgroupRef centralizer(const PermGroup& g, const SubgroupRef& s) {
  if (!(s.ambient() == g))
    throw PreconditionError("centralizer: subgroup belongs to a different group");
  const ElementSpace& space = g.elements();
  std::vector<ElementIndex> sg;
  for (const auto& p : s.generators())
    sg.push_back(space.require_index(p));
  ElementSet result(space.size());
  for (ElementIndex x = 0; x < space.size(); ++x) {
    bool commutes = true;
    for (ElementIndex y : sg)
      if (space.mul(x, y) != space.mul(y, x)) {
        commutes = false;
        break;
      }
    if (commutes)
      result.set(x);
  }
  return subgroup_from_set(g, result);
}

SubgroupRef center(const PermGroup& g) { return centralizer(g, SubgroupRef::whole(g)); }

namespace {

PermGroup normal_closure_in(const PermGroup& ambient, std::vector<Permutation> gens) {
  StabilizerChain chain(ambient.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& a : ambient.generators()) {
      Permutation c = conjugate(gens[i], a);
      if (!chain.contains(c)) {
        chain.extend(c);
        gens.push_back(std::move(c));
      }
    }
  }
  return PermGroup(ambient.degree(), std::move(gens));
}

} // namespace

SubgroupRef normal_closure(const PermGroup& g, const SubgroupRef& s) {
  if (!(s.ambient() == g))
    throw PreconditionError("normal_closure: subgroup belongs to a different group");
  return SubgroupRef(g, normal_closure_in(g, s.generators()));
}

SubgroupRef commutator_subgroup(const PermGroup& g, const SubgroupRef& a, const SubgroupRef& b) {
  std::vector<Permutation> joint = a.generators();
  joint.insert(joint.end(), b.generators().begin(), b.generators().end());
  PermGroup u(g.degree(), std::move(joint));
  std::vector<Permutation> comms;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) {
      Permutation c = commutator(x, y);
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  return SubgroupRef(g, normal_closure_in(u, std::move(comms)));
}

QuotientMap quotient_group(const PermGroup& g, const SubgroupRef& n) {
  if (!n.is_normal())
    throw PreconditionError("quotient_group: subgroup is not normal");
  const ElementSpace& space = g.elements();
  ElementSet nset = element_set(n);

  QuotientMap q;
  q.source_ = g;
  q.coset_of_.assign(space.size(), kUnlabeled);
  auto label = [&](ElementIndex rep) {
    auto c = static_cast<std::uint32_t>(q.reps_.size());
    q.reps_.push_back(rep);
    nset.for_each([&](ElementIndex x) { q.coset_of_[space.mul(x, rep)] = c; });
  };
  label(space.identity());
  for (std::size_t c = 0; c < q.reps_.size(); ++c) {
    for (ElementIndex s : space.generator_indices()) {
      ElementIndex y = space.mul(q.reps_[c], s);
      if (q.coset_of_[y] == kUnlabeled)
        label(y);
    }
  }
  std::vector<Permutation> gens;
  for (const auto& s : g.generators())
    gens.push_back(q.project(s));
  q.group_ = PermGroup(q.reps_.size(), std::move(gens));
  return q;
}

Permutation QuotientMap::project(const Permutation& g) const {
  const ElementSpace& space = source_.elements();
  ElementIndex gi = space.require_index(g);
  std::vector<Point> images(reps_.size());
  for (std::size_t c = 0; c < reps_.size(); ++c)
    images[c] = coset_of_[space.mul(reps_[c], gi)];
  return Permutation::from_images_unchecked(std::move(images));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t da = a.degree(), db = b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> images(da + db);
    for (std::size_t i = 0; i < da; ++i)
      images[i] = g[static_cast<Point>(i)];
    for (std::size_t i = 0; i < db; ++i)
      images[da + i] = static_cast<Point>(da + i);
    gens.push_back(Permutation::from_images_unchecked(std::move(images)));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> images(da + db);
    for (std::size_t i = 0; i < da; ++i)
      images[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < db; ++i)
      images[da + i] = static_cast<Point>(da + g[static_cast<Point>(i)]);
    gens.push_back(Permutation::from_images_unchecked(std::move(images)));
  }
  return PermGroup(da + db, std::move(gens));
}

PermGroup semidirect_product(const PermGroup& n, const PermGroup& h,
                             std::span<const Permutation> action) {
  if (action.size() != h.generators().size())
    throw PreconditionError("semidirect_product: " + std::to_string(action.size()) +
                            " action images for " + std::to_string(h.generators().size()) +
                            " generators");
  const ElementSpace& space = n.elements();
  const std::size_t m = space.size();
  for (std::size_t i = 0; i < action.size(); ++i) {
    const Permutation& alpha = action[i];
    if (alpha.degree() != m)
      throw PreconditionError("semidirect_product: action image " + std::to_string(i) +
                              " is not a permutation of the " + std::to_string(m) +
                              " elements of N");
    for (ElementIndex b : space.generator_indices())
      for (ElementIndex x = 0; x < m; ++x)
        if (alpha[space.mul(x, b)] != space.mul(alpha[x], alpha[b]))
          throw PreconditionError("semidirect_product: action image " + std::to_string(i) +
                                  " is not an automorphism of N");
  }
  // Pair each action image with its H generator; the pairs generate a copy of H
  // exactly when the images define a homomorphism H -> Aut(N).
  const std::size_t dh = h.degree();
  auto pad = [&](const Permutation& on_n, const Permutation* on_h) {
    std::vector<Point> images(m + dh);
    for (std::size_t x = 0; x < m; ++x)
      images[x] = on_n[static_cast<Point>(x)];
    for (std::size_t x = 0; x < dh; ++x)
      images[m + x] = static_cast<Point>(m + (on_h ? (*on_h)[static_cast<Point>(x)] : x));
    return Permutation::from_images_unchecked(std::move(images));
  };
  std::vector<Permutation> paired;
  for (std::size_t i = 0; i < action.size(); ++i)
    paired.push_back(pad(action[i], &h.generators()[i]));
  if (PermGroup(m + dh, paired).order() != h.order())
    throw PreconditionError("semidirect_product: action images do not define a homomorphism");
  const bool faithful =
      PermGroup(m, std::vector<Permutation>(action.begin(), action.end())).order() == h.order();

  std::vector<Permutation> translations;
  for (ElementIndex b : space.generator_indices()) {
    std::vector<Point> images(m);
    for (ElementIndex x = 0; x < m; ++x)
      images[x] = space.mul(x, b);
    translations.push_back(Permutation::from_images_unchecked(std::move(images)));
  }
  if (faithful) {
    translations.insert(translations.end(), action.begin(), action.end());
    return PermGroup(m, std::move(translations));
  }
  std::vector<Permutation> gens;
  for (const auto& t : translations)
    gens.push_back(pad(t, nullptr));
  gens.insert(gens.end(), paired.begin(), paired.end());
  return PermGroup(m + dh, std::move(gens));
}

} // namespace qh
