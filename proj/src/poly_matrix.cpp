#include "multider/poly_matrix.hpp"

#include <unordered_map>

#include "multider/errors.hpp"

namespace multider {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols, Polynomial(nvars)) {}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
  if (p.num_variables() != nvars_) throw DimensionMismatch("matrix entry over the wrong ring");
  entries_[i * cols_ + j] = std::move(p);
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square polynomial matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(m.num_variables(), 1);
  if (n > 16) throw InputError("polynomial determinant too large for cofactor expansion");

  // minor(mask) = determinant of rows [n - popcount(mask), n) against the
  // columns in mask.
  std::unordered_map<unsigned, Polynomial> memo;
  auto minor = [&](auto&& self, unsigned mask, std::size_t row) -> Polynomial {
    if (row == n) return Polynomial::constant(m.num_variables(), 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial total(m.num_variables());
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const Polynomial& e = m(row, c);
      if (!e.is_zero()) {
        Polynomial sub = self(self, mask & ~(1u << c), row + 1);
        if (!sub.is_zero()) {
          Polynomial t = e * sub;
          if (sign < 0) {
            total -= t;
          } else {
            total += t;
          }
        }
      }
      sign = -sign;
    }
    memo.emplace(mask, total);
    return total;
  };
  return minor(minor, (1u << n) - 1, 0);
}

}  // namespace multider
