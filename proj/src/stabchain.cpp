#include "psc/stabchain.hpp"

#include <deque>

#include "psc/errors.hpp"

namespace psc {

StabChain::StabChain(int degree, const std::vector<Perm>& generators) : degree_(degree) {
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw DegreeMismatchError("generator degree mismatch in chain");
    if (g.is_identity()) continue;
    // g belongs to every level whose earlier base points it fixes
    std::size_t j = 0;
    while (j < levels_.size() && g(levels_[j].base) == levels_[j].base) ++j;
    if (j == levels_.size()) {
      int moved = 0;
      while (g(moved) == moved) ++moved;
      extend_base(moved);
    }
    for (std::size_t k = 0; k <= j && k < levels_.size(); ++k) levels_[k].gens.push_back(g);
  }

  if (!levels_.empty()) {
    // Complete levels bottom-up; a new strong generator restarts at its level.
    std::size_t i = levels_.size() - 1;
    for (;;) {
      recompute_orbit(i);
      bool clean = true;
      std::size_t restart = 0;
      // levels_ may grow below (extend_base), so index rather than hold a reference
      for (std::size_t oi = 0; oi < levels_[i].orbit.size() && clean; ++oi) {
        int pt = levels_[i].orbit[oi];
        const Perm u = levels_[i].transversal.at(pt);
        std::vector<Perm> gens = levels_[i].gens;
        for (const Perm& s : gens) {
          Perm to = levels_[i].transversal.at(s(pt));
          Perm h = u * s * to.inverse();
          if (h.is_identity()) continue;
          auto [res, lvl] = sift(h, i + 1);
          if (res.is_identity()) continue;
          if (lvl == levels_.size()) {
            int moved = 0;
            while (res(moved) == moved) ++moved;
            extend_base(moved);
          }
          for (std::size_t k = i + 1; k <= lvl; ++k) levels_[k].gens.push_back(res);
          clean = false;
          restart = lvl;
          break;
        }
      }
      if (clean) {
        if (i == 0) break;
        --i;
      } else {
        i = restart;
      }
    }
  }

  order_ = 1;
  for (const Level& L : levels_) order_ *= BigInt(L.orbit.size());
}

void StabChain::extend_base(int point) {
  Level L;
  L.base = point;
  levels_.push_back(std::move(L));
}

void StabChain::recompute_orbit(std::size_t level) {
  Level& L = levels_[level];
  L.orbit.clear();
  L.transversal.clear();
  L.orbit.push_back(L.base);
  L.transversal.emplace(L.base, Perm(degree_));
  std::deque<int> queue{L.base};
  while (!queue.empty()) {
    int pt = queue.front();
    queue.pop_front();
    const Perm u = L.transversal.at(pt);
    for (const Perm& s : L.gens) {
      int img = s(pt);
      if (!L.transversal.count(img)) {
        L.transversal.emplace(img, u * s);
        L.orbit.push_back(img);
        queue.push_back(img);
      }
    }
  }
}

std::pair<Perm, std::size_t> StabChain::sift(const Perm& g, std::size_t from) const {
  Perm h = g;
  for (std::size_t i = from; i < levels_.size(); ++i) {
    if (h.is_identity()) return {h, i};
    int img = h(levels_[i].base);
    auto it = levels_[i].transversal.find(img);
    if (it == levels_[i].transversal.end()) return {h, i};
    h = h * it->second.inverse();
  }
  return {h, levels_.size()};
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [res, lvl] = sift(g, 0);
  (void)lvl;
  return res.is_identity();
}

}  // namespace psc
