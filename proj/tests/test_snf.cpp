#include <random>

#include "doctest.h"

#include "psc/snf.hpp"

using namespace psc;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntegerMatrix M(static_cast<long long>(rows.size()),
                  rows.empty() ? 0 : static_cast<long long>(rows[0].size()));
  for (long long r = 0; r < M.rows; ++r)
    for (long long c = 0; c < M.cols; ++c)
      if (rows[r][c] != 0) M.entries[{r, c}] = rows[r][c];
  return M;
}

void check_divisibility(const std::vector<BigInt>& diag) {
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] > 0);
    if (i) CHECK(diag[i] % diag[i - 1] == 0);
  }
}

IntegerMatrix diagonal_matrix(long long rows, long long cols, const std::vector<BigInt>& diag) {
  IntegerMatrix D(rows, cols);
  for (std::size_t i = 0; i < diag.size(); ++i)
    D.entries[{static_cast<long long>(i), static_cast<long long>(i)}] = diag[i];
  return D;
}

bool is_unimodular(const IntegerMatrix& M) {
  if (M.rows != M.cols) return false;
  SmithNormalFormResult s = smith_normal_form(M);
  if (s.rank != M.rows) return false;
  for (const BigInt& d : s.diagonal)
    if (d != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("SNF of small known matrices") {
  CHECK(smith_normal_form(IntegerMatrix::identity(3)).diagonal ==
        std::vector<BigInt>{1, 1, 1});

  SmithNormalFormResult s = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
  CHECK(s.diagonal == std::vector<BigInt>{2, 4});
  CHECK(s.rank == 2);

  SmithNormalFormResult z = smith_normal_form(IntegerMatrix(3, 5));
  CHECK(z.diagonal.empty());
  CHECK(z.rank == 0);

  // torsion-producing example
  CHECK(smith_normal_form(from_rows({{2, 0}, {0, 3}})).diagonal ==
        std::vector<BigInt>{1, 6});
  CHECK(smith_normal_form(from_rows({{4, 0}, {0, 6}})).diagonal ==
        std::vector<BigInt>{2, 12});
}

TEST_CASE("transform reconstruction on small matrices") {
  IntegerMatrix M = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  SmithNormalFormResult s = smith_normal_form(M, true);
  REQUIRE(s.left);
  REQUIRE(s.right);
  check_divisibility(s.diagonal);
  IntegerMatrix D = diagonal_matrix(M.rows, M.cols, s.diagonal);
  CHECK(s.left->multiply(M).multiply(*s.right) == D);
  CHECK(is_unimodular(*s.left));
  CHECK(is_unimodular(*s.right));
}

TEST_CASE("random matrices: chain, transforms, sparse/dense agreement") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dim(1, 12);
  std::uniform_int_distribution<int> val(-9, 9);
  std::uniform_int_distribution<int> fill(0, 2);
  for (int iter = 0; iter < 60; ++iter) {
    long long r = dim(rng), c = dim(rng);
    IntegerMatrix M(r, c);
    for (long long i = 0; i < r; ++i)
      for (long long j = 0; j < c; ++j)
        if (fill(rng) == 0) {
          int v = val(rng);
          if (v != 0) M.entries[{i, j}] = v;
        }
    SmithNormalFormResult sparse = smith_normal_form(M);
    SmithNormalFormResult dense = smith_normal_form(M, true);
    check_divisibility(sparse.diagonal);
    CHECK(sparse.diagonal == dense.diagonal);
    IntegerMatrix D = diagonal_matrix(r, c, dense.diagonal);
    CHECK(dense.left->multiply(M).multiply(*dense.right) == D);
  }
}

TEST_CASE("single entries and degenerate shapes") {
  CHECK(smith_normal_form(from_rows({{-7}})).diagonal == std::vector<BigInt>{7});
  CHECK(smith_normal_form(from_rows({{0, 5, 0}})).diagonal == std::vector<BigInt>{5});
  IntegerMatrix col(4, 1);
  col.entries[{2, 0}] = -3;
  CHECK(smith_normal_form(col).diagonal == std::vector<BigInt>{3});
}
