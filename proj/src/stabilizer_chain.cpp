#include "qh/stabilizer_chain.hpp"

#include "qh/errors.hpp"

namespace qh {

namespace {

Point first_moved_point(const Permutation& p) {
  for (Point i = 0; i < p.degree(); ++i)
    if (p[i] != i)
      return i;
  return 0;
}

} // namespace

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators)
    : degree_(degree) {
  for (const auto& g : generators)
    extend(g);
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto& lv : levels_)
    b.push_back(lv.base);
  return b;
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t result = 1;
  for (const auto& lv : levels_) {
    if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(lv.orbit.size()), &result))
      throw ResourceError("group order exceeds 64 bits");
  }
  return result;
}

StabilizerChain::SiftResult StabilizerChain::sift(const Permutation& g,
                                                  std::size_t from_level) const {
  Permutation h = g;
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    std::int32_t pos = lv.orbit_pos[h[lv.base]];
    if (pos < 0)
      return {std::move(h), i};
    h = h * lv.inverse_transversal[static_cast<std::size_t>(pos)];
  }
  return {std::move(h), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_)
    return false;
  auto r = sift(g);
  return r.level == levels_.size() && r.residue.is_identity();
}

void StabilizerChain::extend(const Permutation& g) {
  if (g.degree() != degree_)
    throw InputError("generator degree " + std::to_string(g.degree()) +
                     " does not match group degree " + std::to_string(degree_));
  auto [residue, level] = sift(g);
  if (level == levels_.size() && residue.is_identity())
    return;
  if (level == levels_.size()) {
    Level lv;
    lv.base = first_moved_point(residue);
    lv.orbit = {lv.base};
    lv.orbit_pos.assign(degree_, -1);
    lv.orbit_pos[lv.base] = 0;
    lv.transversal = {Permutation::identity(degree_)};
    lv.inverse_transversal = {Permutation::identity(degree_)};
    levels_.push_back(std::move(lv));
    checked_.emplace_back();
  }
  add_to_levels(0, level, residue);
  complete_from(level);
}

void StabilizerChain::add_to_levels(std::size_t first, std::size_t last, const Permutation& h) {
  for (std::size_t l = first; l <= last; ++l) {
    Level& lv = levels_[l];
    lv.generators.push_back(h);
    checked_[l].push_back(0);
    grow_orbit(lv, lv.generators.size() - 1);
  }
}

void StabilizerChain::grow_orbit(Level& lv, std::size_t first_new_generator) {
  const std::size_t old_size = lv.orbit.size();
  for (std::size_t pos = 0; pos < lv.orbit.size(); ++pos) {
    const std::size_t first_gen = pos < old_size ? first_new_generator : 0;
    for (std::size_t s = first_gen; s < lv.generators.size(); ++s) {
      const Permutation& gen = lv.generators[s];
      Point q = gen[lv.orbit[pos]];
      if (lv.orbit_pos[q] >= 0)
        continue;
      lv.orbit_pos[q] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(q);
      Permutation u = lv.transversal[pos] * gen;
      lv.inverse_transversal.push_back(u.inverse());
      lv.transversal.push_back(std::move(u));
    }
  }
}

void StabilizerChain::complete_from(std::size_t start) {
  std::size_t i = start;
  for (;;) {
    bool restarted = false;
    for (std::size_t s = 0; s < levels_[i].generators.size() && !restarted; ++s) {
      for (std::size_t pos = checked_[i][s]; pos < levels_[i].orbit.size(); ++pos) {
        const Level& lv = levels_[i];
        const Permutation& gen = lv.generators[s];
        Point q = gen[lv.orbit[pos]];
        Permutation schreier = lv.transversal[pos] * gen *
                               lv.inverse_transversal[static_cast<std::size_t>(lv.orbit_pos[q])];
        checked_[i][s] = pos + 1;
        auto [h, j] = sift(schreier, i + 1);
        if (j == levels_.size() && h.is_identity())
          continue;
        if (j == levels_.size()) {
          Level nl;
          nl.base = first_moved_point(h);
          nl.orbit = {nl.base};
          nl.orbit_pos.assign(degree_, -1);
          nl.orbit_pos[nl.base] = 0;
          nl.transversal = {Permutation::identity(degree_)};
          nl.inverse_transversal = {Permutation::identity(degree_)};
          levels_.push_back(std::move(nl));
          checked_.emplace_back();
        }
        add_to_levels(i + 1, j, h);
        i = j;
        restarted = true;
        break;
      }
    }
    if (restarted)
      continue;
    if (i == 0)
      break;
    --i;
  }
}

} // namespace qh
