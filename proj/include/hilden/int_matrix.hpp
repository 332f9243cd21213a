#pragma once

#include <vector>

#include "hilden/bigint.hpp"

namespace hilden {

// Dense matrix of exact integers. Rows and columns are 0-based here; this is
// plain linear algebra, not marked-point bookkeeping.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int size);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  BigInt& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool operator==(const IntMatrix&) const = default;

  std::string str() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> entries_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Exact determinant of a square matrix (fraction-free elimination).
BigInt determinant(const IntMatrix& m);

struct SmithResult {
  IntMatrix S;  // diagonal, d1 | d2 | ..., entries >= 0
  IntMatrix U;  // unimodular row transform
  IntMatrix V;  // unimodular column transform, S = U * M * V
};

SmithResult smith_normal_form(const IntMatrix& m);

// The nonzero diagonal of a Smith form, in divisibility order.
std::vector<BigInt> invariant_factors(const IntMatrix& smith_diagonal);

}  // namespace hilden
