#pragma once

#include <unordered_map>
#include <vector>

#include "psc/bigint.hpp"
#include "psc/perm.hpp"

namespace psc {

// Deterministic Schreier-Sims stabilizer chain. Supplies the group order and
// a membership test without materializing elements.
class StabChain {
public:
  StabChain() = default;
  StabChain(int degree, const std::vector<Perm>& generators);

  int degree() const { return degree_; }
  const BigInt& order() const { return order_; }
  bool contains(const Perm& g) const;

private:
  struct Level {
    int base = -1;
    std::vector<Perm> gens;  // generators stabilizing all earlier base points
    std::vector<int> orbit;  // orbit of base, in discovery order
    std::unordered_map<int, Perm> transversal;  // point -> perm mapping base to it
  };

  void extend_base(int point);
  void recompute_orbit(std::size_t level);
  // Sift g through levels starting at `from`; returns the residue and the
  // level where sifting stopped.
  std::pair<Perm, std::size_t> sift(const Perm& g, std::size_t from) const;
  void complete_level(std::size_t level);

  int degree_ = 0;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

}  // namespace psc
