#include "qh/element_space.hpp"

#include <algorithm>
#include <numeric>

#include "qh/errors.hpp"

namespace qh {

// ---- ElementSet ----

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_)
    c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i])
      return false;
  return true;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] |= other.words_[i];
  return *this;
}

ElementSet operator-(ElementSet a, const ElementSet& b) {
  for (std::size_t i = 0; i < a.words_.size(); ++i)
    a.words_[i] &= ~b.words_[i];
  return a;
}

std::vector<ElementIndex> ElementSet::to_vector() const {
  std::vector<ElementIndex> v;
  v.reserve(count());
  for_each([&](ElementIndex i) { v.push_back(i); });
  return v;
}

std::size_t ElementSet::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ universe_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
  const std::size_t nw = a.words_.size();
  for (std::size_t w = 0; w < nw; ++w) {
    std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (!diff)
      continue;
    int bit = __builtin_ctzll(diff);
    // The set holding the first differing element is smaller unless the other set
    // has nothing beyond it (then the other is a proper prefix).
    const bool in_a = (a.words_[w] >> bit) & 1u;
    const ElementSet& other = in_a ? b : a;
    std::uint64_t above = bit == 63 ? 0 : (other.words_[w] >> (bit + 1));
    bool other_has_more = above != 0;
    for (std::size_t v = w + 1; v < nw && !other_has_more; ++v)
      other_has_more = other.words_[v] != 0;
    return in_a ? other_has_more : !other_has_more;
  }
  return false;
}

// ---- ElementSpace ----

ElementSpace::ElementSpace(const StabilizerChain& chain, std::span<const Permutation> generators)
    : chain_(&chain), base_(chain.base()) {
  const auto levels = chain.levels();
  const std::size_t n = static_cast<std::size_t>(chain.order());
  const std::size_t depth = levels.size();

  strides_.assign(depth, 1);
  for (std::size_t i = depth; i-- > 1;)
    strides_[i - 1] = strides_[i] * levels[i].orbit.size();

  // rank r has digits k_i = (r / stride_i) % |orbit_i|; element = u^{(L-1)} ... u^{(0)}
  std::vector<Permutation> by_rank;
  by_rank.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    Permutation g = Permutation::identity(chain.degree());
    for (std::size_t i = depth; i-- > 0;) {
      std::size_t k = (r / strides_[i]) % levels[i].orbit.size();
      g = g * levels[i].transversal[k];
    }
    by_rank.push_back(std::move(g));
  }

  std::vector<ElementIndex> order(n);
  std::iota(order.begin(), order.end(), ElementIndex{0});
  std::sort(order.begin(), order.end(),
            [&](ElementIndex x, ElementIndex y) { return by_rank[x] < by_rank[y]; });
  rank_to_index_.assign(n, 0);
  elements_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    rank_to_index_[order[i]] = static_cast<ElementIndex>(i);
    elements_.push_back(std::move(by_rank[order[i]]));
  }

  inverse_.resize(n);
  std::vector<Point> images(depth);
  for (std::size_t i = 0; i < n; ++i) {
    const Permutation& g = elements_[i];
    // b^(g^-1) = the point mapped onto b by g
    for (std::size_t l = 0; l < depth; ++l) {
      for (Point p = 0; p < g.degree(); ++p) {
        if (g[p] == base_[l]) {
          images[l] = p;
          break;
        }
      }
    }
    inverse_[i] = rank_from_base_images(images);
  }

  for (const auto& g : generators)
    generators_.push_back(require_index(g));
}

ElementIndex ElementSpace::rank_from_base_images(std::span<const Point> images) const {
  const auto levels = chain_->levels();
  std::int32_t pos[64];
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    Point p = images[i];
    for (std::size_t j = 0; j < i; ++j)
      p = levels[j].inverse_transversal[static_cast<std::size_t>(pos[j])][p];
    pos[i] = levels[i].orbit_pos[p];
    rank += static_cast<std::uint64_t>(pos[i]) * strides_[i];
  }
  return rank_to_index_[rank];
}

ElementIndex ElementSpace::mul(ElementIndex a, ElementIndex b) const {
  Point images[64];
  const Permutation& ga = elements_[a];
  const Permutation& gb = elements_[b];
  for (std::size_t i = 0; i < base_.size(); ++i)
    images[i] = gb[ga[base_[i]]];
  return rank_from_base_images(std::span<const Point>(images, base_.size()));
}

std::uint64_t ElementSpace::element_order(ElementIndex a) const {
  std::uint64_t k = 1;
  for (ElementIndex x = a; x != identity(); x = mul(x, a))
    ++k;
  return k;
}

std::optional<ElementIndex> ElementSpace::index_of(const Permutation& p) const {
  if (p.degree() != degree() || !chain_->contains(p))
    return std::nullopt;
  Point images[64];
  for (std::size_t i = 0; i < base_.size(); ++i)
    images[i] = p[base_[i]];
  return rank_from_base_images(std::span<const Point>(images, base_.size()));
}

ElementIndex ElementSpace::require_index(const Permutation& p) const {
  auto i = index_of(p);
  if (!i)
    throw PreconditionError("permutation " + p.to_cycle_string() + " is not a group element");
  return *i;
}

ElementSet ElementSpace::full_set() const {
  ElementSet s(size());
  for (std::size_t i = 0; i < size(); ++i)
    s.set(static_cast<ElementIndex>(i));
  return s;
}

ElementSet ElementSpace::trivial_set() const {
  ElementSet s(size());
  s.set(identity());
  return s;
}

ElementSet ElementSpace::closure(std::span<const ElementIndex> gens) const {
  ElementSet s(size());
  std::vector<ElementIndex> queue{identity()};
  s.set(identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ElementIndex x = queue[head];
    for (ElementIndex g : gens) {
      ElementIndex y = mul(x, g);
      if (!s.test(y)) {
        s.set(y);
        queue.push_back(y);
      }
    }
  }
  return s;
}

ElementSet ElementSpace::normal_closure(std::span<const ElementIndex> gens) const {
  std::vector<ElementIndex> list(gens.begin(), gens.end());
  ElementSet s = closure(list);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (ElementIndex g : generators_) {
      ElementIndex c = conj(list[i], g);
      if (!s.test(c)) {
        list.push_back(c);
        s = closure(list);
      }
    }
  }
  return s;
}

std::vector<ElementIndex> ElementSpace::generating_set(const ElementSet& subgroup) const {
  std::vector<ElementIndex> gens;
  ElementSet span = trivial_set();
  subgroup.for_each([&](ElementIndex x) {
    if (!span.test(x)) {
      gens.push_back(x);
      span = closure(gens);
    }
  });
  return gens;
}

bool ElementSpace::is_normal(const ElementSet& subgroup) const {
  bool normal = true;
  subgroup.for_each([&](ElementIndex x) {
    if (!normal)
      return;
    for (ElementIndex g : generators_)
      if (!subgroup.test(conj(x, g))) {
        normal = false;
        return;
      }
  });
  return normal;
}

ElementSet ElementSpace::conjugate_set(const ElementSet& s, ElementIndex by) const {
  ElementSet out(size());
  s.for_each([&](ElementIndex x) { out.set(conj(x, by)); });
  return out;
}

const std::vector<std::vector<ElementIndex>>& ElementSpace::conjugacy_classes() const {
  std::call_once(classes_once_, [this] {
    std::vector<bool> seen(size(), false);
    for (std::size_t start = 0; start < size(); ++start) {
      if (seen[start])
        continue;
      std::vector<ElementIndex> cls{static_cast<ElementIndex>(start)};
      seen[start] = true;
      for (std::size_t h = 0; h < cls.size(); ++h) {
        for (ElementIndex g : generators_) {
          ElementIndex c = conj(cls[h], g);
          if (!seen[c]) {
            seen[c] = true;
            cls.push_back(c);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
      classes_.push_back(std::move(cls));
    }
  });
  return classes_;
}

std::vector<Permutation> ElementSpace::to_permutations(std::span<const ElementIndex> idx) const {
  std::vector<Permutation> out;
  out.reserve(idx.size());
  for (auto i : idx)
    out.push_back(elements_[i]);
  return out;
}

} // namespace qh
