#pragma once

// Exact integer linear algebra by fraction-free (Bareiss) elimination.

#include "lenscontact/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lenscontact {

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant of a square matrix. All intermediate values are exact
/// integers (each is a minor of the input).
Integer determinant(const IntMatrix& m);

/// Solves m x = rhs exactly. Throws SingularMatrixError when det m = 0 and
/// std::invalid_argument on a shape mismatch.
std::vector<Rational> solve_exact(const IntMatrix& m, const std::vector<Integer>& rhs);

}  // namespace lenscontact
