#pragma once

#include <cstddef>
#include <vector>

#include "multider/polynomial.hpp"

namespace multider {

class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t num_variables() const { return nvars_; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, Polynomial p);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t nvars_;
  std::vector<Polynomial> entries_;
};

// Laplace expansion along rows with memoized column-subset minors.
Polynomial determinant(const PolyMatrix& m);

}  // namespace multider
