#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "psc/bigint.hpp"

namespace psc {

// Sparse integer matrix; zero entries are never stored.
struct IntegerMatrix {
  long long rows = 0;
  long long cols = 0;
  std::map<std::pair<long long, long long>, BigInt> entries;

  IntegerMatrix() = default;
  IntegerMatrix(long long r, long long c) : rows(r), cols(c) {}

  void set(long long r, long long c, const BigInt& v);
  void add(long long r, long long c, const BigInt& v);
  BigInt get(long long r, long long c) const;
  bool is_zero() const { return entries.empty(); }

  static IntegerMatrix identity(long long n);
  IntegerMatrix multiply(const IntegerMatrix& other) const;
  bool operator==(const IntegerMatrix& other) const;
};

struct SmithNormalFormResult {
  std::vector<BigInt> diagonal;  // nonnegative, d1 | d2 | ...; zeros trimmed
  long long rank = 0;            // count of nonzero diagonal entries
  std::optional<IntegerMatrix> left;   // unimodular; left * M * right is diagonal
  std::optional<IntegerMatrix> right;
};

// Exact Smith normal form. Pivot rule: nonzero entry of minimal absolute
// value, ties by lowest (row, col). Transforms are tracked only on request
// (dense elimination); without them a sparse elimination is used.
SmithNormalFormResult smith_normal_form(const IntegerMatrix& M, bool with_transforms = false);

}  // namespace psc
