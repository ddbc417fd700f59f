#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "psc/bigint.hpp"

namespace psc {

// A permutation of {0,...,n-1}, stored as its image table.
// Composition is left-to-right: (a * b) applies a first, then b.
class Perm {
public:
  Perm() = default;
  explicit Perm(int degree);  // identity
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator!=(const Perm& o) const { return images_ != o.images_; }
  bool operator<(const Perm& o) const { return images_ < o.images_; }

  Perm operator*(const Perm& o) const;  // apply *this, then o
  Perm inverse() const;
  // g^-1 * (*this) * g, i.e. the conjugate of *this by g.
  Perm conjugated_by(const Perm& g) const;

  bool is_identity() const;
  bool commutes_with(const Perm& o) const;
  BigInt order() const;  // lcm of cycle lengths
  // Largest e such that p^e divides the order.
  int order_p_exponent(long p) const;
  Perm power(const BigInt& k) const;

  // Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; "()" is the
  // identity. Parsing accepts arbitrary whitespace; printing is canonical
  // (cycles start at their smallest point and are sorted by it).
  static Perm parse_cycles(const std::string& s, int degree);
  std::string cycle_string() const;

private:
  std::vector<int> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace psc
