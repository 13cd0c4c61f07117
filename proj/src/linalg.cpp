#include "multider/linalg.hpp"

#include <utility>

#include "multider/errors.hpp"

namespace multider {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Scalar> RationalMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

std::vector<Scalar> RationalMatrix::operator*(const std::vector<Scalar>& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  std::vector<Scalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j] != 0) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

namespace {

using IntRow = std::vector<mpz_class>;

// Row echelon form over the integers. Every stored entry is a minor of the
// input, so the division by the previous pivot is exact.
struct Echelon {
  std::vector<IntRow> rows;
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
  int swaps = 0;
};

Echelon bareiss(const RationalMatrix& a) {
  Echelon e;
  e.cols = a.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<Scalar> r = a.row(i);
    mpz_class den = common_denominator(r);
    IntRow ir(e.cols);
    bool nonzero = false;
    for (std::size_t j = 0; j < e.cols; ++j) {
      if (r[j] == 0) continue;
      mpz_class t = r[j].get_num() * (den / r[j].get_den());
      ir[j] = std::move(t);
      nonzero = true;
    }
    if (nonzero) e.rows.push_back(std::move(ir));
  }

  std::size_t r = 0;
  mpz_class prev = 1;
  mpz_class t1, t2;
  for (std::size_t c = 0; c < e.cols && r < e.rows.size(); ++c) {
    std::size_t p = r;
    while (p < e.rows.size() && e.rows[p][c] == 0) ++p;
    if (p == e.rows.size()) continue;
    if (p != r) {
      std::swap(e.rows[p], e.rows[r]);
      ++e.swaps;
    }
    const IntRow& piv = e.rows[r];
    for (std::size_t i = r + 1; i < e.rows.size(); ++i) {
      IntRow& row = e.rows[i];
      const mpz_class lead = row[c];
      for (std::size_t j = c + 1; j < e.cols; ++j) {
        // row[j] = (piv[c]*row[j] - lead*piv[j]) / prev
        mpz_mul(t1.get_mpz_t(), piv[c].get_mpz_t(), row[j].get_mpz_t());
        if (lead != 0 && piv[j] != 0) {
          mpz_mul(t2.get_mpz_t(), lead.get_mpz_t(), piv[j].get_mpz_t());
          mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        }
        mpz_divexact(row[j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = piv[c];
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

std::size_t rank(const RationalMatrix& a) { return bareiss(a).pivots.size(); }

std::vector<std::vector<Scalar>> rational_kernel(const RationalMatrix& a) {
  Echelon e = bareiss(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> kernel;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(n);
    v[f] = 1;
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      const std::size_t pc = e.pivots[k];
      const IntRow& row = e.rows[k];
      Scalar acc = 0;
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (row[j] != 0 && v[j] != 0) acc += Scalar(row[j]) * v[j];
      }
      if (acc != 0) {
        v[pc] = -acc / Scalar(row[pc]);
      }
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

Scalar determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Scalar scale = 1;
  RationalMatrix scaled = a;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class den = common_denominator(a.row(i));
    scale /= Scalar(den);
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = a(i, j) * Scalar(den);
  }
  Echelon e = bareiss(scaled);
  if (e.pivots.size() < n) return 0;
  Scalar d(e.rows[n - 1][n - 1]);
  if (e.swaps % 2) d = -d;
  return d * scale;
}

RationalMatrix inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && aug(p, c) == 0) ++p;
    if (p == n) throw SingularMatrixError("matrix is singular");
    if (p != c) {
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(p, j), aug(c, j));
    }
    Scalar inv = 1 / aug(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug(i, c) == 0) continue;
      Scalar f = aug(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(c, j);
    }
  }
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  }
  return out;
}

std::vector<std::vector<Scalar>> reduced_row_basis(const std::vector<std::vector<Scalar>>& rows) {
  std::vector<std::vector<Scalar>> m = rows;
  if (m.empty()) return m;
  const std::size_t n = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Scalar inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Scalar f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

std::optional<std::vector<Scalar>> coordinates_in_span(
    const std::vector<std::vector<Scalar>>& basis, const std::vector<Scalar>& v) {
  // Solve sum_i c_i basis[i] = v as a linear system in the c_i.
  const std::size_t k = basis.size();
  const std::size_t n = v.size();
  RationalMatrix sys(n, k + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) sys(j, i) = basis[i][j];
    sys(j, k) = -v[j];
  }
  auto ker = rational_kernel(sys);
  for (const auto& w : ker) {
    if (w[k] == 0) continue;
    std::vector<Scalar> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = w[i] / w[k];
    return c;
  }
  return std::nullopt;
}

}  // namespace multider
