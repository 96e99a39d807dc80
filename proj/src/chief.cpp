#include "qh/chief.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "qh/bounds.hpp"
#include "qh/errors.hpp"

namespace qh {

namespace {

constexpr std::uint32_t kOutside = std::numeric_limits<std::uint32_t>::max();

bool is_prime_small(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// Order of xK in G/K.
std::uint64_t order_modulo(const ElementSpace& space, ElementIndex x, const ElementSet& k) {
  std::uint64_t j = 1;
  for (ElementIndex y = x; !k.test(y); y = space.mul(y, x))
    ++j;
  return j;
}

void sort_lex(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
    return lex_less(a, b);
  });
}

} // namespace

struct ChiefFactor::Data {
  PermGroup ambient;
  ElementSet lower, upper, centralizer;
  SubgroupRef lower_ref, upper_ref, centralizer_ref;
  PermGroup factor;
  std::vector<Permutation> action;
  std::vector<std::uint32_t> coset_of;
  std::vector<ElementIndex> reps;
};

const PermGroup& ChiefFactor::ambient() const { return data_->ambient; }
const SubgroupRef& ChiefFactor::lower() const { return data_->lower_ref; }
const SubgroupRef& ChiefFactor::upper() const { return data_->upper_ref; }
const PermGroup& ChiefFactor::factor() const { return data_->factor; }
const std::vector<Permutation>& ChiefFactor::action() const { return data_->action; }
const SubgroupRef& ChiefFactor::centralizer() const { return data_->centralizer_ref; }
std::uint64_t ChiefFactor::order() const { return data_->reps.size(); }
const ElementSet& ChiefFactor::lower_set() const { return data_->lower; }
const ElementSet& ChiefFactor::upper_set() const { return data_->upper; }
const ElementSet& ChiefFactor::centralizer_set() const { return data_->centralizer; }
std::uint32_t ChiefFactor::coset_of(ElementIndex h) const { return data_->coset_of[h]; }
std::span<const ElementIndex> ChiefFactor::coset_representatives() const { return data_->reps; }

bool ChiefFactor::is_abelian() const {
  const auto& gens = data_->factor.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

bool ChiefFactor::is_central() const {
  return data_->centralizer.count() == data_->ambient.elements().size();
}

Permutation ChiefFactor::action_of(ElementIndex g) const {
  const ElementSpace& space = data_->ambient.elements();
  std::vector<Point> images(data_->reps.size());
  for (std::size_t c = 0; c < data_->reps.size(); ++c)
    images[c] = data_->coset_of[space.conj(data_->reps[c], g)];
  return Permutation::from_images_unchecked(std::move(images));
}

ChiefFactor make_chief_factor(const PermGroup& g, const ElementSet& lower, const ElementSet& upper) {
  const ElementSpace& space = g.elements();
  auto data = std::make_shared<ChiefFactor::Data>(ChiefFactor::Data{
      g, lower, upper, ElementSet{}, subgroup_from_set(g, lower), subgroup_from_set(g, upper),
      SubgroupRef::trivial(g), PermGroup{}, {}, {}, {}});

  // right cosets K h, coset 0 = K
  auto upper_gens = space.generating_set(upper);
  data->coset_of.assign(space.size(), kOutside);
  auto label = [&](ElementIndex rep) {
    auto c = static_cast<std::uint32_t>(data->reps.size());
    data->reps.push_back(rep);
    lower.for_each([&](ElementIndex k) { data->coset_of[space.mul(k, rep)] = c; });
  };
  label(space.identity());
  for (std::size_t c = 0; c < data->reps.size(); ++c)
    for (ElementIndex h : upper_gens) {
      ElementIndex y = space.mul(data->reps[c], h);
      if (data->coset_of[y] == kOutside)
        label(y);
    }
  const std::size_t m = data->reps.size();

  std::vector<Permutation> factor_gens;
  for (ElementIndex h : upper_gens) {
    std::vector<Point> images(m);
    for (std::size_t c = 0; c < m; ++c)
      images[c] = data->coset_of[space.mul(data->reps[c], h)];
    factor_gens.push_back(Permutation::from_images_unchecked(std::move(images)));
  }
  data->factor = PermGroup(m, std::move(factor_gens));

  for (ElementIndex s : space.generator_indices()) {
    std::vector<Point> images(m);
    for (std::size_t c = 0; c < m; ++c)
      images[c] = data->coset_of[space.conj(data->reps[c], s)];
    data->action.push_back(Permutation::from_images_unchecked(std::move(images)));
  }

  // g centralizes H/K iff [h, g] in K for every generator h of H
  ElementSet cent(space.size());
  for (ElementIndex x = 0; x < space.size(); ++x) {
    bool ok = true;
    for (ElementIndex h : upper_gens)
      if (!lower.test(space.commutator(h, x))) {
        ok = false;
        break;
      }
    if (ok)
      cent.set(x);
  }
  data->centralizer_ref = subgroup_from_set(g, cent);
  data->centralizer = std::move(cent);

  ChiefFactor cf;
  cf.data_ = std::move(data);
  return cf;
}

std::vector<ElementSet> minimal_normal_over(const ElementSpace& space, const ElementSet& k,
                                            const ElementSet* within) {
  const auto k_gens = space.generating_set(k);
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> candidates;
  for (const auto& cls : space.conjugacy_classes()) {
    ElementIndex x = cls.front();
    if (k.test(x) || (within && !within->test(x)))
      continue;
    // a minimal normal subgroup over K is the normal closure of an element of prime order mod K
    if (!is_prime_small(order_modulo(space, x, k)))
      continue;
    std::vector<ElementIndex> gens = k_gens;
    gens.push_back(x);
    ElementSet n = space.normal_closure(gens);
    if (seen.insert(n).second)
      candidates.push_back(std::move(n));
  }
  std::vector<ElementSet> minimal;
  for (const auto& c : candidates) {
    bool is_min = true;
    for (const auto& d : candidates)
      if (d != c && d.is_subset_of(c)) {
        is_min = false;
        break;
      }
    if (is_min)
      minimal.push_back(c);
  }
  sort_lex(minimal);
  return minimal;
}

std::vector<ElementSet> normal_subgroups(const ElementSpace& space) {
  std::vector<ElementIndex> reps;
  for (const auto& cls : space.conjugacy_classes())
    reps.push_back(cls.front());
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> found{space.trivial_set()};
  std::vector<std::vector<ElementIndex>> found_gens{{}};
  seen.insert(found.front());
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (ElementIndex x : reps) {
      if (found[i].test(x))
        continue;
      std::vector<ElementIndex> gens = found_gens[i];
      gens.push_back(x);
      ElementSet n = space.normal_closure(gens);
      if (seen.insert(n).second) {
        found.push_back(n);
        found_gens.push_back(space.generating_set(n));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
    auto ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : lex_less(a, b);
  });
  return found;
}

std::vector<ChiefFactor> chief_factors_below(const PermGroup& g, const ElementSet& top,
                                             TieBreak tie) {
  const ElementSpace& space = g.elements();
  std::vector<ChiefFactor> out;
  ElementSet k = space.trivial_set();
  while (k != top) {
    auto mins = minimal_normal_over(space, k, &top);
    const ElementSet& m = tie == TieBreak::least ? mins.front() : mins.back();
    out.push_back(make_chief_factor(g, k, m));
    k = m;
  }
  return out;
}

ChiefSeries chief_series(const PermGroup& g, TieBreak tie) {
  ChiefSeries series{g, {SubgroupRef::trivial(g)}, {}};
  if (g.is_trivial())
    return series;
  series.factors = chief_factors_below(g, g.elements().full_set(), tie);
  for (const auto& cf : series.factors)
    series.terms.push_back(cf.upper());
  return series;
}

std::vector<SubgroupRef> minimal_normal_subgroups(const PermGroup& g) {
  const ElementSpace& space = g.elements();
  std::vector<SubgroupRef> out;
  for (const auto& m : minimal_normal_over(space, space.trivial_set()))
    out.push_back(subgroup_from_set(g, m));
  return out;
}

ChiefFactor chief_factor(const PermGroup& g, const SubgroupRef& lower, const SubgroupRef& upper) {
  if (!(lower.ambient() == g) || !(upper.ambient() == g))
    throw PreconditionError("chief_factor: subgroups belong to a different group");
  if (!lower.is_normal() || !upper.is_normal())
    throw PreconditionError("chief_factor: K and H must be normal in G");
  if (!lower.is_subgroup_of(upper) || lower.order() == upper.order())
    throw PreconditionError("chief_factor: K must be a proper subgroup of H");
  const ElementSpace& space = g.elements();
  ElementSet k = element_set(lower), h = element_set(upper);
  auto mins = minimal_normal_over(space, k, &h);
  for (const auto& m : mins)
    if (m != h) {
      auto w = subgroup_from_set(g, m);
      std::string gens;
      for (const auto& p : w.generators())
        gens += p.to_cycle_string() + " ";
      throw PreconditionError("chief_factor: normal subgroup of order " +
                              std::to_string(w.order()) + " lies strictly between K and H: < " +
                              gens + ">");
    }
  return make_chief_factor(g, k, h);
}

std::optional<Permutation> induces_inner_automorphism(const ChiefFactor& cf, const Permutation& g) {
  const ElementSpace& space = cf.ambient().elements();
  ElementIndex gi = space.require_index(g);
  Permutation target = cf.action_of(gi);
  for (ElementIndex rep : cf.coset_representatives())
    if (cf.action_of(rep) == target)
      return space.element(rep);
  return std::nullopt;
}

ElementSet inner_induction_set(const ChiefFactor& cf) {
  const ElementSpace& space = cf.ambient().elements();
  auto gens = space.generating_set(cf.upper_set());
  auto cgens = space.generating_set(cf.centralizer_set());
  gens.insert(gens.end(), cgens.begin(), cgens.end());
  return space.closure(gens);
}

SubgroupRef inner_induction_subgroup(const ChiefFactor& cf) {
  return subgroup_from_set(cf.ambient(), inner_induction_set(cf));
}

PermGroup factor_semidirect(const ChiefFactor& cf) {
  const std::uint64_t index = cf.ambient().order() / cf.centralizer().order();
  if (cf.order() * index > bounds().semidirect)
    throw ResourceError("factor semidirect product of order " + std::to_string(cf.order() * index) +
                        " exceeds the semidirect bound " + std::to_string(bounds().semidirect));
  const PermGroup& n = cf.factor();
  const ElementSpace& nspace = n.elements();
  // regular action: element f of the factor is determined by the coset f[0]
  std::vector<ElementIndex> by_point(nspace.size());
  for (ElementIndex f = 0; f < nspace.size(); ++f)
    by_point[nspace.element(f)[0]] = f;
  std::vector<Permutation> images;
  for (const auto& a : cf.action()) {
    std::vector<Point> img(nspace.size());
    for (ElementIndex f = 0; f < nspace.size(); ++f)
      img[f] = by_point[a[nspace.element(f)[0]]];
    images.push_back(Permutation::from_images_unchecked(std::move(img)));
  }
  QuotientMap q = quotient_group(cf.ambient(), cf.centralizer());
  return semidirect_product(n, q.group(), images);
}

std::vector<SubgroupRef> semisimple_decomposition(const PermGroup& g, const SubgroupRef& n) {
  if (!(n.ambient() == g) || !n.is_normal())
    throw PreconditionError("semisimple_decomposition: N must be normal in G");
  const PermGroup& ng = n.group();
  if (ng.is_trivial())
    throw PreconditionError("semisimple_decomposition: N is trivial");
  bool abelian = true;
  for (const auto& a : ng.generators())
    for (const auto& b : ng.generators())
      abelian = abelian && a * b == b * a;
  if (abelian)
    throw PreconditionError("semisimple_decomposition: N is abelian");
  auto simple_factors = minimal_normal_subgroups(ng);
  std::uint64_t product = 1;
  for (const auto& t : simple_factors) {
    if (t.order() != simple_factors.front().order() ||
        minimal_normal_subgroups(t.group()).size() != 1 ||
        !(minimal_normal_subgroups(t.group()).front() == SubgroupRef::whole(t.group())))
      throw PreconditionError(
          "semisimple_decomposition: N is not a direct product of isomorphic simple groups");
    product *= t.order();
  }
  if (product != ng.order())
    throw PreconditionError(
        "semisimple_decomposition: N is not a direct product of isomorphic simple groups");

  // G permutes the simple direct factors; each orbit generates a minimal normal subgroup of G
  const std::size_t k = simple_factors.size();
  std::vector<int> orbit_of(k, -1);
  std::vector<SubgroupRef> out;
  for (std::size_t start = 0; start < k; ++start) {
    if (orbit_of[start] >= 0)
      continue;
    std::vector<std::size_t> orbit{start};
    orbit_of[start] = static_cast<int>(out.size());
    for (std::size_t h = 0; h < orbit.size(); ++h) {
      for (const auto& s : g.generators()) {
        std::vector<Permutation> conj_gens;
        for (const auto& t : simple_factors[orbit[h]].generators())
          conj_gens.push_back(conjugate(t, s));
        PermGroup image(g.degree(), std::move(conj_gens));
        for (std::size_t j = 0; j < k; ++j)
          if (orbit_of[j] < 0 && image == simple_factors[j].group()) {
            orbit_of[j] = orbit_of[start];
            orbit.push_back(j);
          }
      }
    }
    std::vector<Permutation> gens;
    for (std::size_t j : orbit)
      for (const auto& t : simple_factors[j].generators())
        gens.push_back(t);
    out.push_back(SubgroupRef::generated(g, std::move(gens)));
  }
  return out;
}

} // namespace qh
