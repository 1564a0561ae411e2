#include "lenscontact/linalg.hpp"

#include <utility>

namespace lenscontact {
namespace {

// Bareiss forward elimination in place on the first `n` columns of an
// n x (n + extra) matrix. Returns the determinant of the leading block;
// zero means singular and leaves `a` partially reduced.
Integer bareiss_eliminate(IntMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t cols = a.cols();
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    const Integer& pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Integer factor = a(i, k);
      // Zero entries stay zero unless the pivot row feeds them, which keeps
      // banded matrices cheap.
      for (std::size_t j = k + 1; j < cols; ++j) {
        Integer& entry = a(i, j);
        const bool fed = factor != 0 && a(k, j) != 0;
        if (entry == 0 && !fed) continue;
        Integer numerator = entry * pivot;
        if (fed) numerator -= factor * a(k, j);
        entry = numerator / previous;
      }
      a(i, k) = 0;
    }
    previous = pivot;
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix work = m;
  return bareiss_eliminate(work);
}

std::vector<Rational> solve_exact(const IntMatrix& m, const std::vector<Integer>& rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw std::invalid_argument("solve_exact: shape mismatch");
  if (n == 0) return {};
  IntMatrix work(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) work(i, j) = m(i, j);
    work(i, n) = rhs[i];
  }
  if (bareiss_eliminate(work) == 0) throw SingularMatrixError("linking matrix is singular");
  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc = work(ii, n);
    for (std::size_t j = ii + 1; j < n; ++j) {
      if (work(ii, j) != 0) acc -= work(ii, j) * x[j];
    }
    x[ii] = acc / work(ii, ii);
  }
  return x;
}

}  // namespace lenscontact
