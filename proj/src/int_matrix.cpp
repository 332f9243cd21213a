#include "hilden/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hilden {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("IntMatrix: negative dimension");
  entries_.assign(static_cast<std::size_t>(rows) * cols, BigInt());
}

IntMatrix IntMatrix::identity(int size) {
  IntMatrix m(size, size);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

std::string IntMatrix::str() const {
  std::string out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c) out += ' ';
      out += at(r, c).str();
    }
    out += '\n';
  }
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("multiply: dimension mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix not square");
  const int n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; every division is exact.
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k).is_zero()) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!a.at(i, k).is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

struct Worker {
  IntMatrix S, U, V;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < S.cols(); ++j) std::swap(S.at(a, j), S.at(b, j));
    for (int j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
  }

  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < S.rows(); ++i) std::swap(S.at(i, a), S.at(i, b));
    for (int i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
  }

  void add_row(int dst, int src, const BigInt& factor) {
    for (int j = 0; j < S.cols(); ++j)
      S.at(dst, j) += factor * S.at(src, j);
    for (int j = 0; j < U.cols(); ++j)
      U.at(dst, j) += factor * U.at(src, j);
  }

  void add_col(int dst, int src, const BigInt& factor) {
    for (int i = 0; i < S.rows(); ++i)
      S.at(i, dst) += factor * S.at(i, src);
    for (int i = 0; i < V.rows(); ++i)
      V.at(i, dst) += factor * V.at(i, src);
  }

  void negate_row(int r) {
    for (int j = 0; j < S.cols(); ++j) S.at(r, j) = -S.at(r, j);
    for (int j = 0; j < U.cols(); ++j) U.at(r, j) = -U.at(r, j);
  }

  // smallest nonzero |entry| in the trailing submatrix, ties by position
  bool find_pivot(int t, int& pr, int& pc) const {
    bool found = false;
    BigInt best;
    for (int i = t; i < S.rows(); ++i) {
      for (int j = t; j < S.cols(); ++j) {
        if (S.at(i, j).is_zero()) continue;
        const BigInt mag = S.at(i, j).abs();
        if (!found || mag < best) {
          found = true;
          best = mag;
          pr = i;
          pc = j;
        }
      }
    }
    return found;
  }

  bool cross_clear(int t) const {
    for (int i = t + 1; i < S.rows(); ++i)
      if (!S.at(i, t).is_zero()) return false;
    for (int j = t + 1; j < S.cols(); ++j)
      if (!S.at(t, j).is_zero()) return false;
    return true;
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  Worker w;
  w.S = m;
  w.U = IntMatrix::identity(m.rows());
  w.V = IntMatrix::identity(m.cols());

  const int steps = std::min(m.rows(), m.cols());
  for (int t = 0; t < steps; ++t) {
    int pr = 0, pc = 0;
    if (!w.find_pivot(t, pr, pc)) break;  // trailing submatrix is zero
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    while (true) {
      // Reduce the pivot cross; the pivot shrinks whenever a remainder
      // survives, so this terminates.
      for (int i = t + 1; i < w.S.rows(); ++i) {
        if (w.S.at(i, t).is_zero()) continue;
        w.add_row(i, t, -(w.S.at(i, t) / w.S.at(t, t)));
      }
      for (int j = t + 1; j < w.S.cols(); ++j) {
        if (w.S.at(t, j).is_zero()) continue;
        w.add_col(j, t, -(w.S.at(t, j) / w.S.at(t, t)));
      }
      if (!w.cross_clear(t)) {
        int rr = 0, cc = 0;
        if (w.find_pivot(t, rr, cc)) {
          w.swap_rows(t, rr);
          w.swap_cols(t, cc);
        }
        continue;
      }
      // Divisibility sweep: fold a bad entry into the pivot row and retry.
      bool divides_all = true;
      for (int i = t + 1; i < w.S.rows() && divides_all; ++i) {
        for (int j = t + 1; j < w.S.cols() && divides_all; ++j) {
          if (!(w.S.at(i, j) % w.S.at(t, t)).is_zero()) {
            w.add_row(t, i, 1);
            divides_all = false;
          }
        }
      }
      if (divides_all) break;
    }
    if (w.S.at(t, t).sign() < 0) w.negate_row(t);
  }

  return SmithResult{std::move(w.S), std::move(w.U), std::move(w.V)};
}

std::vector<BigInt> invariant_factors(const IntMatrix& smith_diagonal) {
  std::vector<BigInt> out;
  const int steps = std::min(smith_diagonal.rows(), smith_diagonal.cols());
  for (int i = 0; i < steps; ++i) {
    if (smith_diagonal.at(i, i).is_zero()) break;
    out.push_back(smith_diagonal.at(i, i));
  }
  return out;
}

}  // namespace hilden
