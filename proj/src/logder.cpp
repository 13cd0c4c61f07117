#include "multider/logder.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <unordered_map>

#include "multider/errors.hpp"
#include "multider/poly_matrix.hpp"

namespace multider {

bool membership(const Derivation& theta, const Multiarrangement& ma) {
  if (theta.dimension() != ma.dimension()) throw DimensionMismatch("derivation and arrangement dimensions differ");
  for (std::size_t h = 0; h < ma.size(); ++h) {
    if (ma.mult(h) == 0) continue;
    if (!divisible_by_linear_power(theta.apply(ma.form(h)), ma.form(h), ma.mult(h))) return false;
  }
  return true;
}

namespace {

// Coordinates y = P x in which up to n hyperplanes become coordinate
// hyperplanes. The conditions for those hyperplanes are then imposed by
// writing theta(y_j) = y_j^{m_j} h_j, so only the other hyperplanes give rows.
struct Frame {
  std::size_t n = 0;
  RationalMatrix p;
  RationalMatrix p_inv;
  std::vector<int> mult;
  std::vector<bool> in_frame;
  bool identity = false;
};

Frame choose_frame(const Multiarrangement& ma) {
  Frame f;
  f.n = ma.dimension();
  f.in_frame.assign(ma.size(), false);
  std::vector<std::size_t> order(ma.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ma.mult(a) > ma.mult(b); });

  std::vector<std::vector<Scalar>> rows;
  auto try_add = [&](const std::vector<Scalar>& r) {
    rows.push_back(r);
    if (reduced_row_basis(rows).size() == rows.size()) return true;
    rows.pop_back();
    return false;
  };
  for (std::size_t h : order) {
    if (rows.size() == f.n || ma.mult(h) == 0) break;
    if (try_add(ma.form(h).coefficients())) {
      f.in_frame[h] = true;
      f.mult.push_back(ma.mult(h));
    }
  }
  for (std::size_t i = 0; i < f.n && rows.size() < f.n; ++i) {
    std::vector<Scalar> e(f.n);
    e[i] = 1;
    if (try_add(e)) f.mult.push_back(0);
  }
  f.p = RationalMatrix::from_rows(rows);
  f.p_inv = inverse(f.p);
  f.identity = f.p == RationalMatrix::identity(f.n);
  return f;
}

std::uint64_t pack(const Monomial& m) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) key = (key << 8) | m[i];
  return key;
}

struct Column {
  std::size_t block;
  Monomial mono;
};

struct System {
  std::vector<Column> columns;
  RationalMatrix constraints;
};

System build_system(const Multiarrangement& ma, const Frame& frame, int k) {
  if (k > 255) throw InputError("degree above 255 is not supported");
  const std::size_t n = frame.n;
  System sys;
  for (std::size_t j = 0; j < n; ++j) {
    int e = k - frame.mult[j];
    if (e < 0) continue;
    Monomial shift = Monomial::variable(j, static_cast<std::uint16_t>(frame.mult[j]));
    for (const auto& mu : monomials_of_degree(n, e)) sys.columns.push_back({j, mu * shift});
  }

  std::unordered_map<std::uint64_t, std::size_t> row_index;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (std::size_t h = 0; h < ma.size(); ++h) {
    const int mh = ma.mult(h);
    if (frame.in_frame[h] || mh == 0 || sys.columns.empty()) continue;
    // alpha_h = sum_j c_j y_j.
    std::vector<Scalar> c(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) c[j] += ma.form(h)[i] * frame.p_inv(i, j);
    }
    std::size_t piv = 0;
    while (c[piv] == 0) ++piv;
    // With z_piv = alpha_h and z_i = y_i otherwise, y_piv = l(z).
    Polynomial l = Polynomial::variable(n, piv) * (1 / c[piv]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != piv && c[i] != 0) l.add_term(Monomial::variable(i), -c[i] / c[piv]);
    }
    // Powers of l, dropping terms whose z_piv exponent already reaches mh.
    std::vector<Polynomial> trunc{Polynomial::constant(n, 1)};
    auto truncated_power = [&](int e) -> const Polynomial& {
      while (static_cast<int>(trunc.size()) <= e) {
        Polynomial next = trunc.back() * l;
        Polynomial kept(n);
        for (const auto& [m, s] : next.terms()) {
          if (m[piv] < mh) kept.add_term(m, s);
        }
        trunc.push_back(std::move(kept));
      }
      return trunc[static_cast<std::size_t>(e)];
    };
    row_index.clear();
    for (std::size_t col = 0; col < sys.columns.size(); ++col) {
      const Column& cl = sys.columns[col];
      const Scalar& cj = c[cl.block];
      if (cj == 0) continue;
      Monomial rest = cl.mono;
      rest[piv] = 0;
      for (const auto& [nu, s] : truncated_power(cl.mono[piv]).terms()) {
        auto [it, inserted] = row_index.try_emplace(pack(nu * rest), rows.size());
        if (inserted) rows.emplace_back();
        rows[it->second].emplace_back(col, cj * s);
      }
    }
  }
  sys.constraints = RationalMatrix(rows.size(), sys.columns.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [col, v] : rows[r]) sys.constraints(r, col) += v;
  }
  return sys;
}

// Evaluates y-monomials at y = P x with shared power caches.
class Substituter {
 public:
  explicit Substituter(const Frame& f) : frame_(f), powers_(f.n) {
    for (std::size_t j = 0; j < f.n; ++j) images_.push_back(Polynomial::linear(f.p.row(j)));
  }

  Polynomial monomial(const Monomial& beta) {
    Polynomial out = Polynomial::constant(frame_.n, 1);
    for (std::size_t j = 0; j < frame_.n; ++j) {
      if (beta[j]) out *= power(j, beta[j]);
    }
    return out;
  }

 private:
  const Polynomial& power(std::size_t j, int e) {
    auto& cache = powers_[j];
    if (cache.empty()) cache.push_back(Polynomial::constant(frame_.n, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images_[j]);
    return cache[static_cast<std::size_t>(e)];
  }

  const Frame& frame_;
  std::vector<Polynomial> images_;
  std::vector<std::vector<Polynomial>> powers_;
};

std::vector<Derivation> solve_piece(const Multiarrangement& ma, int k) {
  const std::size_t n = ma.dimension();
  if (k < 0) return {};
  Frame frame = choose_frame(ma);
  System sys = build_system(ma, frame, k);
  if (sys.columns.empty()) return {};
  std::vector<std::vector<Scalar>> kernel;
  if (sys.constraints.rows() == 0) {
    for (std::size_t col = 0; col < sys.columns.size(); ++col) {
      std::vector<Scalar> v(sys.columns.size());
      v[col] = 1;
      kernel.push_back(std::move(v));
    }
  } else {
    kernel = rational_kernel(sys.constraints);
  }

  std::vector<Polynomial> substituted;
  if (!frame.identity) {
    Substituter sub(frame);
    for (const auto& cl : sys.columns) substituted.push_back(sub.monomial(cl.mono));
  }
  std::vector<Derivation> basis;
  for (const auto& v : kernel) {
    std::vector<Polynomial> g(n, Polynomial(n));
    for (std::size_t col = 0; col < sys.columns.size(); ++col) {
      if (v[col] == 0) continue;
      const Column& cl = sys.columns[col];
      if (frame.identity) {
        g[cl.block].add_term(cl.mono, v[col]);
      } else {
        g[cl.block] += substituted[col] * v[col];
      }
    }
    if (frame.identity) {
      basis.push_back(normalized(Derivation(std::move(g))));
      continue;
    }
    std::vector<Polynomial> coeffs(n, Polynomial(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (frame.p_inv(i, j) != 0 && !g[j].is_zero()) coeffs[i] += g[j] * frame.p_inv(i, j);
      }
    }
    basis.push_back(normalized(Derivation(std::move(coeffs))));
  }
  return basis;
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

PolyMatrix coefficient_matrix(const std::vector<Derivation>& thetas, std::size_t n) {
  PolyMatrix m(thetas.size(), n, n);
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, thetas[i].coefficient(j));
  }
  return m;
}

Scalar numeric_determinant(const std::vector<Derivation>& thetas, const std::vector<Scalar>& point) {
  const std::size_t n = point.size();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = thetas[i].coefficient(j).evaluate(point);
  }
  return determinant(m);
}

// det = c * q with c a nonzero constant, or nullopt.
std::optional<Scalar> proportionality(const Polynomial& det, const Polynomial& q) {
  if (det.is_zero() || det.degree() != q.degree()) return std::nullopt;
  Scalar c = det.leading_term().second / q.leading_term().second;
  if (det == q * c) return c;
  return std::nullopt;
}

bool is_saito_basis(const std::vector<Derivation>& thetas, const Polynomial& q, Scalar* c) {
  Polynomial det = determinant(coefficient_matrix(thetas, q.num_variables()));
  auto prop = proportionality(det, q);
  if (!prop) return false;
  *c = *prop;
  return true;
}

void enumerate_tuples(std::size_t n, int total, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int min, int left) {
    if (cur.size() + 1 == n) {
      if (left >= min) {
        cur.push_back(left);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    int slots = static_cast<int>(n - cur.size());
    for (int d = min; d * slots <= left; ++d) {
      cur.push_back(d);
      rec(d, left - d);
      cur.pop_back();
    }
  };
  if (n == 0) return;
  rec(0, total);
}

}  // namespace

GradedPiece graded_piece(const Multiarrangement& ma, int k) {
  return GradedPiece{ma, k, solve_piece(ma, k)};
}

std::size_t graded_dimension(const Multiarrangement& ma, int k) {
  if (k < 0) return 0;
  Frame frame = choose_frame(ma);
  System sys = build_system(ma, frame, k);
  if (sys.constraints.rows() == 0) return sys.columns.size();
  return sys.columns.size() - rank(sys.constraints);
}

std::vector<std::size_t> hilbert_dims(const Multiarrangement& ma, int max_degree) {
  if (max_degree < 0) throw InputError("max degree must be nonnegative");
  std::vector<std::size_t> dims;
  for (int k = 0; k <= max_degree; ++k) dims.push_back(graded_dimension(ma, k));
  return dims;
}

SaitoResult saito_check(const std::vector<Derivation>& thetas, const Multiarrangement& ma) {
  const std::size_t n = ma.dimension();
  if (thetas.size() != n) throw InputError("Saito's criterion needs exactly " + std::to_string(n) + " derivations");
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (thetas[i].dimension() != n) throw DimensionMismatch("derivation dimension mismatch");
    if (!membership(thetas[i], ma)) {
      throw MembershipError("derivation " + std::to_string(i) + " is not in D(A,m)");
    }
  }
  SaitoResult r;
  r.holds = is_saito_basis(thetas, defining_polynomial(ma), &r.c);
  if (!r.holds) r.c = 0;
  return r;
}

std::string to_string(RefutationMode mode) {
  switch (mode) {
    case RefutationMode::None: return "none";
    case RefutationMode::Hilbert: return "hilbert";
    case RefutationMode::Randomized: return "randomized";
    case RefutationMode::Symbolic: return "symbolic";
  }
  return "none";
}

std::size_t free_hilbert_value(const std::vector<int>& exps, std::size_t n, int k) {
  long long total = 0;
  for (int d : exps) {
    if (k >= d) total += binomial(k - d + static_cast<long long>(n) - 1, static_cast<long long>(n) - 1);
  }
  return static_cast<std::size_t>(total);
}

FreenessCertificate find_free_basis(const Multiarrangement& ma, const FreenessOptions& options) {
  if (!is_essential(ma.arrangement())) throw InputError("freeness search needs an essential arrangement");
  const std::size_t n = ma.dimension();
  const int total = ma.order();
  FreenessCertificate cert;
  cert.seed = options.seed;
  cert.repetitions = options.repetitions;

  // The numerator of the Hilbert series of a free module is sum_i t^{d_i},
  // so the dimensions pin down the only tuple that can work.
  std::vector<int> found;
  bool consistent = true;
  for (int k = 0;; ++k) {
    cert.dimensions.push_back(graded_dimension(ma, k));
    long long numer = 0;
    for (std::size_t i = 0; i <= n && static_cast<int>(i) <= k; ++i) {
      long long term = binomial(static_cast<long long>(n), static_cast<long long>(i)) *
                       static_cast<long long>(cert.dimensions[static_cast<std::size_t>(k) - i]);
      numer += (i % 2) ? -term : term;
    }
    if (numer < 0 || found.size() + static_cast<std::size_t>(numer) > n) {
      consistent = false;
      break;
    }
    for (long long i = 0; i < numer; ++i) found.push_back(k);
    if (found.size() == n) break;
    int partial = 0;
    for (int d : found) partial += d;
    if (partial + static_cast<int>(n - found.size()) * (k + 1) > total) {
      consistent = false;
      break;
    }
  }
  int found_sum = 0;
  for (int d : found) found_sum += d;
  if (found_sum != total) consistent = false;
  const int last = static_cast<int>(cert.dimensions.size()) - 1;

  std::vector<std::vector<int>> tuples;
  enumerate_tuples(n, total, tuples);
  std::size_t candidate_index = tuples.size();
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    TupleRecord rec;
    rec.degrees = tuples[t];
    for (int k = 0; k <= last; ++k) {
      if (free_hilbert_value(tuples[t], n, k) != cert.dimensions[static_cast<std::size_t>(k)]) {
        rec.mismatch_degree = k;
        break;
      }
    }
    if (rec.mismatch_degree >= 0) {
      rec.outcome = "hilbert";
    } else {
      if (!consistent || tuples[t] != found) throw InvariantViolation("two degree tuples match one Hilbert function");
      candidate_index = t;
      rec.outcome = "candidate";
    }
    cert.search_log.push_back(std::move(rec));
  }
  if (candidate_index == tuples.size()) {
    cert.mode = RefutationMode::Hilbert;
    return cert;
  }

  std::vector<int> degrees = found;
  std::vector<int> distinct = degrees;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::unordered_map<int, std::vector<Derivation>> pieces;
  for (int d : distinct) pieces[d] = solve_piece(ma, d);
  const Polynomial q = defining_polynomial(ma);
  TupleRecord& rec = cert.search_log[candidate_index];

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> coef(-16, 16);
  std::uniform_int_distribution<int> coord(-64, 64);
  auto random_point = [&]() {
    std::vector<Scalar> pt(n);
    for (auto& x : pt) x = coord(rng);
    return pt;
  };
  auto accept = [&](std::vector<Derivation> thetas, const char* outcome) {
    Scalar c;
    if (!is_saito_basis(thetas, q, &c)) {
      throw InvariantViolation("nonvanishing determinant over D(A,m) is not a multiple of Q");
    }
    cert.free = true;
    cert.basis = std::move(thetas);
    cert.exponents = degrees;
    cert.c = c;
    cert.mode = RefutationMode::None;
    rec.outcome = outcome;
  };

  for (int rep = 0; rep < options.repetitions; ++rep) {
    std::vector<Derivation> thetas;
    for (int d : degrees) {
      const auto& b = pieces[d];
      Derivation theta = Derivation::zero(n);
      for (const auto& e : b) theta = theta + e * Scalar(coef(rng));
      thetas.push_back(normalized(theta));
    }
    if (numeric_determinant(thetas, random_point()) != 0) {
      accept(std::move(thetas), "randomized-nonzero");
      return cert;
    }
  }

  // Deterministic certificate: the determinant of generic combinations is a
  // combination of the determinants of basis subsets, one per degree group.
  std::vector<std::pair<int, int>> groups;  // (degree, count)
  for (int d : distinct) {
    groups.emplace_back(d, static_cast<int>(std::count(degrees.begin(), degrees.end(), d)));
  }
  std::vector<std::vector<std::size_t>> choice(groups.size());
  bool found_nonzero = false;
  std::function<void(std::size_t)> search = [&](std::size_t g) {
    if (found_nonzero) return;
    if (g == groups.size()) {
      std::vector<Derivation> thetas;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        for (std::size_t idx : choice[i]) thetas.push_back(pieces[groups[i].first][idx]);
      }
      if (numeric_determinant(thetas, random_point()) != 0 ||
          !determinant(coefficient_matrix(thetas, n)).is_zero()) {
        accept(std::move(thetas), "symbolic-nonzero");
        found_nonzero = true;
      }
      return;
    }
    const std::size_t size = pieces[groups[g].first].size();
    const std::size_t need = static_cast<std::size_t>(groups[g].second);
    std::function<void(std::size_t)> pick = [&](std::size_t start) {
      if (found_nonzero) return;
      if (choice[g].size() == need) {
        search(g + 1);
        return;
      }
      for (std::size_t i = start; i < size; ++i) {
        choice[g].push_back(i);
        pick(i + 1);
        choice[g].pop_back();
      }
    };
    pick(0);
  };
  search(0);
  if (found_nonzero) return cert;
  rec.outcome = "symbolic-zero";
  cert.mode = RefutationMode::Symbolic;
  return cert;
}

std::optional<std::vector<int>> exponents(const Multiarrangement& ma, const FreenessOptions& options) {
  FreenessCertificate cert = find_free_basis(ma, options);
  if (!cert.free) return std::nullopt;
  return cert.exponents;
}

bool is_k_critical(const Multiarrangement& ma, int k) {
  if (k < 0) return false;
  for (int j = 0; j < k; ++j) {
    if (graded_dimension(ma, j) != 0) return false;
  }
  if (graded_dimension(ma, k) == 0) return false;
  for (std::size_t h = 0; h < ma.size(); ++h) {
    if (graded_dimension(increment(ma, h), k) != 0) return false;
  }
  return true;
}

UniversalityCheck check_universal(const Derivation& theta, const Multiarrangement& ma_base) {
  const std::size_t n = ma_base.dimension();
  if (theta.dimension() != n) throw DimensionMismatch("derivation and arrangement dimensions differ");
  auto deg = theta.degree();
  if (!deg) throw InputError("universality is only defined for nonzero homogeneous derivations");
  UniversalityCheck out;
  out.degree = *deg;
  out.degree_condition = static_cast<int>(n) * (*deg - 1) == ma_base.order();
  std::vector<Derivation> nablas;
  for (std::size_t i = 0; i < n; ++i) nablas.push_back(covariant_derivative(Derivation::partial(n, i), theta));
  out.members = std::all_of(nablas.begin(), nablas.end(),
                            [&](const Derivation& d) { return membership(d, ma_base); });
  out.independent = !determinant(coefficient_matrix(nablas, n)).is_zero();
  out.universal = out.degree_condition && out.members && out.independent;
  if (out.universal &&
      !membership(theta, ma_base.with_multiplicity(ma_base.multiplicity().plus_one()))) {
    throw InvariantViolation("universal derivation outside D(A,m+1)");
  }
  return out;
}

bool is_universal(const Derivation& theta, const Multiarrangement& ma_base) {
  return check_universal(theta, ma_base).universal;
}

std::optional<Derivation> find_universal(const Multiarrangement& ma_base, const FreenessOptions& options) {
  if (!is_essential(ma_base.arrangement())) throw InputError("universal derivations need an essential arrangement");
  if (irreducible_component_count(ma_base.arrangement()) != 1) {
    throw InputError("universal derivations need an irreducible arrangement");
  }
  const int n = static_cast<int>(ma_base.dimension());
  if (ma_base.order() % n != 0) return std::nullopt;
  const int d = ma_base.order() / n;
  auto exps = exponents(ma_base, options);
  if (!exps || std::any_of(exps->begin(), exps->end(), [&](int e) { return e != d; })) return std::nullopt;
  Multiarrangement next = ma_base.with_multiplicity(ma_base.multiplicity().plus_one());
  if (!is_k_critical(next, d + 1)) return std::nullopt;
  GradedPiece piece = graded_piece(next, d + 1);
  if (piece.dimension() != 1) throw InvariantViolation("critical degree piece is not one-dimensional");
  const Derivation& theta = piece.basis.front();
  if (!is_universal(theta, ma_base)) throw InvariantViolation("critical element fails the universality check");
  return theta;
}

}  // namespace multider
