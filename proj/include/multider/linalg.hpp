#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "multider/scalar.hpp"

namespace multider {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::vector<Scalar> row(std::size_t i) const;

  RationalMatrix operator*(const RationalMatrix& other) const;
  std::vector<Scalar> operator*(const std::vector<Scalar>& v) const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::size_t rank(const RationalMatrix& a);

// Basis of {v : a v = 0}. Vector i has a 1 in the i-th free column and 0 in
// the other free columns.
std::vector<std::vector<Scalar>> rational_kernel(const RationalMatrix& a);

Scalar determinant(const RationalMatrix& a);
RationalMatrix inverse(const RationalMatrix& a);

// Nonzero rows of the reduced row echelon form. Canonical for the row space.
std::vector<std::vector<Scalar>> reduced_row_basis(const std::vector<std::vector<Scalar>>& rows);

// Coordinates of v with respect to independent basis rows; nullopt if v is
// outside their span.
std::optional<std::vector<Scalar>> coordinates_in_span(
    const std::vector<std::vector<Scalar>>& basis, const std::vector<Scalar>& v);

}  // namespace multider
