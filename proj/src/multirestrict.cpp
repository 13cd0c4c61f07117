#include "multider/multirestrict.hpp"

#include <algorithm>
#include <numeric>

#include "multider/errors.hpp"
#include "multider/logder.hpp"
#include "multider/rank2.hpp"

namespace multider {

Filtration::Filtration(FiltrationLevels levels) : levels_(std::move(levels)) {
  for (auto& l : levels_) {
    std::sort(l.begin(), l.end());
    if (std::adjacent_find(l.begin(), l.end()) != l.end()) {
      throw InputError("filtration level repeats a hyperplane");
    }
  }
}

namespace {

std::vector<std::size_t> set_minus(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t rank_of(const Arrangement& a, const std::vector<std::size_t>& idx) {
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t h : idx) rows.push_back(a.form(h).coefficients());
  return reduced_row_basis(rows).size();
}

int level_order(const Multiarrangement& ma, const std::vector<std::size_t>& idx) {
  int s = 0;
  for (std::size_t h : idx) s += ma.mult(h);
  return s;
}

std::vector<int> sorted_exponents(const Multiarrangement& ma) {
  auto cert = find_free_basis(essentialize(ma));
  if (!cert.free) throw InvariantViolation("rank-2 localization reported not free");
  return cert.exponents;
}

}  // namespace

void validate_filtration(const Arrangement& a, const Filtration& f) {
  if (f.length() == 0) throw InputError("empty filtration");
  std::vector<std::size_t> all(a.size());
  std::iota(all.begin(), all.end(), 0);
  for (std::size_t i = 0; i < f.length(); ++i) {
    const auto& lv = f.level(i);
    for (std::size_t h : lv) {
      if (h >= a.size()) throw InputError("filtration names a hyperplane out of range");
    }
    if (rank_of(a, lv) != i + 1) {
      throw InputError("filtration level " + std::to_string(i + 1) + " does not have rank " + std::to_string(i + 1));
    }
    if (i > 0) {
      const auto& prev = f.level(i - 1);
      if (!std::includes(lv.begin(), lv.end(), prev.begin(), prev.end()) || lv.size() == prev.size()) {
        throw InputError("filtration levels are not strictly increasing");
      }
      auto fresh = set_minus(lv, prev);
      for (std::size_t x = 0; x < fresh.size(); ++x) {
        for (std::size_t y = x + 1; y < fresh.size(); ++y) {
          Flat cap = flat_of(a, {fresh[x], fresh[y]});
          bool covered = std::any_of(prev.begin(), prev.end(),
                                     [&](std::size_t h) { return cap.contains_hyperplane(h); });
          if (!covered) throw InputError("filtration step " + std::to_string(i + 1) + " is not modular");
        }
      }
    }
  }
  if (f.level(f.length() - 1) != all) throw InputError("last filtration level must be the whole arrangement");
}

Rank2Basis special_rank2_basis(const Multiarrangement& local, std::size_t alpha0_index) {
  if (local.arrangement().rank() != 2) throw InputError("special basis needs a rank-2 localization");
  if (alpha0_index >= local.size()) throw InputError("alpha0 index out of range");
  Multiarrangement q = essentialize(local);
  const LinearForm& a0 = q.form(alpha0_index);
  FreenessCertificate cert = find_free_basis(q);
  if (!cert.free) throw InvariantViolation("rank-2 localization reported not free");
  const Derivation& p1 = cert.basis[0];
  const Derivation& p2 = cert.basis[1];
  const int e1 = cert.exponents[0];
  const int e2 = cert.exponents[1];

  // Modulo alpha0 a homogeneous polynomial f is determined by f(v), v
  // spanning ker alpha0.
  std::vector<Scalar> v{-a0[1], a0[0]};
  auto at_v = [&](const Derivation& d) {
    return std::vector<Scalar>{d.coefficient(0).evaluate(v), d.coefficient(1).evaluate(v)};
  };
  auto is_zero = [](const std::vector<Scalar>& u) { return u[0] == 0 && u[1] == 0; };
  // s with u2 = s*u1, if any.
  auto ratio = [](const std::vector<Scalar>& u1, const std::vector<Scalar>& u2) -> std::optional<Scalar> {
    if (u1[0] * u2[1] != u1[1] * u2[0]) return std::nullopt;
    return u1[0] != 0 ? u2[0] / u1[0] : u2[1] / u1[1];
  };
  const auto u1 = at_v(p1);
  const auto u2 = at_v(p2);

  Rank2Basis out;
  if (is_zero(u1)) {
    out.psi = p1;
    out.theta = p2;
  } else if (auto s = ratio(u1, u2)) {
    // psi = p2 - s*w^{e2-e1}*p1 with w(v) = 1.
    std::size_t k = v[0] != 0 ? 0 : 1;
    Polynomial w = Polynomial::variable(2, k) * (1 / v[k]);
    out.psi = p2 - p1.times(w.pow(static_cast<unsigned>(e2 - e1)) * *s);
    out.theta = p1;
  } else {
    throw InvariantViolation("no basis element divisible by alpha0 in a rank-2 localization");
  }
  out.theta_degree = out.theta == p1 ? e1 : e2;
  out.psi_degree = out.theta == p1 ? e2 : e1;
  if (!divisible_by_form(out.psi, a0) || divisible_by_form(out.theta, a0)) {
    throw InvariantViolation("special rank-2 basis reduction failed");
  }
  if (out.theta_degree + out.psi_degree != q.order()) throw InvariantViolation("special basis degrees do not sum to |m|");
  return out;
}

int EulerRestriction::order() const { return std::accumulate(multiplicity.begin(), multiplicity.end(), 0); }

EulerRestriction euler_multiplicity(const Multiarrangement& ma, std::size_t h0) {
  if (h0 >= ma.size()) throw InputError("hyperplane index out of range");
  if (ma.mult(h0) == 0) throw InputError("Euler restriction needs a positive multiplicity on H0");
  EulerRestriction er;
  er.h0 = h0;
  for (Flat& x : rank2_flats_through(ma.arrangement(), h0)) {
    Multiarrangement local = localize(ma, x);
    auto pos = static_cast<std::size_t>(
        std::find(x.hyperplanes.begin(), x.hyperplanes.end(), h0) - x.hyperplanes.begin());
    Rank2Basis rb = special_rank2_basis(local, pos);
    FlatWitness w;
    w.flat = std::move(x);
    w.local_order = local.order();
    w.theta_degree = rb.theta_degree;
    w.psi_degree = rb.psi_degree;
    Multiarrangement q = essentialize(local);
    w.psi_divisible = divisible_by_form(rb.psi, q.form(pos));
    w.theta_divisible = divisible_by_form(rb.theta, q.form(pos));
    er.multiplicity.push_back(w.theta_degree);
    er.flats.push_back(std::move(w));
  }
  return er;
}

BPolynomialData b_polynomial(const Multiarrangement& ma, std::size_t h0) {
  if (h0 >= ma.size()) throw InputError("hyperplane index out of range");
  BPolynomialData data;
  data.h0 = h0;
  data.m0 = ma.mult(h0) + 1;
  const std::size_t n = ma.dimension();
  data.b = ma.form(h0).to_polynomial().pow(static_cast<unsigned>(data.m0 - 1));
  data.degree = data.m0 - 1;
  for (Flat& x : rank2_flats_through(ma.arrangement(), h0)) {
    BFlatTerm t;
    for (std::size_t h : x.hyperplanes) {
      if (h != h0) {
        t.hx = h;
        break;
      }
    }
    auto pos = static_cast<std::size_t>(
        std::find(x.hyperplanes.begin(), x.hyperplanes.end(), h0) - x.hyperplanes.begin());
    Multiarrangement local = localize(ma, x);
    t.exponents_before = sorted_exponents(local);
    t.exponents_after = sorted_exponents(increment(local, pos));
    std::vector<int> diff;
    std::set_difference(t.exponents_after.begin(), t.exponents_after.end(), t.exponents_before.begin(),
                        t.exponents_before.end(), std::back_inserter(diff));
    if (diff.size() != 1) throw UndefinedExponentError("no unique non-shared exponent at a flat through H0");
    t.dx = diff.front();
    t.exponent = t.dx - data.m0;
    if (t.exponent < 0) throw InputError("negative exponent in the B-polynomial");
    if (t.exponent > 0) data.b *= ma.form(t.hx).to_polynomial().pow(static_cast<unsigned>(t.exponent));
    data.degree += t.exponent;
    t.flat = std::move(x);
    data.terms.push_back(std::move(t));
  }
  if (data.b.num_variables() != n) throw InvariantViolation("B-polynomial over the wrong ring");
  return data;
}

bool in_b_ideal(const Polynomial& f, const BPolynomialData& data, const Arrangement& a) {
  const std::size_t n = a.dimension();
  const LinearForm& a0 = a.form(data.h0);
  const std::size_t piv = a0.pivot();
  // Coordinates z with z_piv = alpha0.
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != piv) {
      images.push_back(Polynomial::variable(n, i));
      continue;
    }
    Polynomial img = Polynomial::variable(n, piv);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != piv && a0[j] != 0) img.add_term(Monomial::variable(j), -a0[j]);
    }
    images.push_back(std::move(img));
  }
  Polynomial g = compose(f, images);
  // (alpha0^m0, alpha0^{m0-1} P): need alpha0^{m0-1} | f and, after dividing,
  // the part free of alpha0 divisible by P restricted to H0.
  Polynomial rest(n);
  for (const auto& [m, c] : g.terms()) {
    if (m[piv] < data.m0 - 1) return false;
    if (m[piv] == data.m0 - 1) {
      Monomial r = m;
      r[piv] = 0;
      rest.add_term(r, c);
    }
  }
  for (const auto& t : data.terms) {
    if (t.exponent == 0) continue;
    const LinearForm& b = a.form(t.hx);
    std::vector<Scalar> c(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != piv) c[i] = b[i] - b[piv] * a0[i];
    }
    if (!divisible_by_linear_power(rest, LinearForm(c), t.exponent)) return false;
  }
  return true;
}

NoncriticalVerdict noncritical_criterion(const Multiarrangement& ma, std::size_t h) {
  if (ma.dimension() != 3 || ma.arrangement().rank() != 3) {
    throw InputError("the non-criticality criterion needs a rank-3 arrangement");
  }
  if (h >= ma.size()) throw InputError("hyperplane index out of range");
  FreenessCertificate cert = find_free_basis(ma);
  if (!cert.free) throw InputError("the non-criticality criterion needs a free multiarrangement");
  NoncriticalVerdict v;
  v.exponents = cert.exponents;
  v.restriction = euler_multiplicity(increment(ma, h), h);
  v.restricted_order = v.restriction.order();
  v.holds = v.restricted_order < v.exponents[1] + v.exponents[2];
  return v;
}

bool check_supersolvable(const Multiarrangement& ma, const Filtration& f) {
  const Arrangement& a = ma.arrangement();
  validate_filtration(a, f);
  for (std::size_t d = 2; d < f.length(); ++d) {
    const auto& level = f.level(d);
    const auto& prev = f.level(d - 1);
    for (std::size_t hn : set_minus(level, prev)) {
      for (std::size_t ho : prev) {
        Flat x = flat_of(a, {hn, ho});
        std::vector<std::size_t> local;
        std::set_intersection(x.hyperplanes.begin(), x.hyperplanes.end(), level.begin(), level.end(),
                              std::back_inserter(local));
        if (local.size() == 2) continue;
        int fresh = 0;
        for (std::size_t h : set_minus(local, prev)) fresh += ma.mult(h);
        if (ma.mult(ho) < fresh - 1) return false;
      }
    }
  }
  return true;
}

std::vector<int> supersolvable_exponents(const Multiarrangement& ma, const Filtration& f) {
  if (!check_supersolvable(ma, f)) throw InputError("multiplicity is not supersolvable for this filtration");
  std::vector<int> exps;
  if (f.length() == 1) {
    exps.push_back(level_order(ma, f.level(0)));
  } else {
    DeltaValue dv = delta(subarrangement(ma, f.level(1)));
    exps = {dv.d1, dv.d2};
    for (std::size_t i = 2; i < f.length(); ++i) {
      exps.push_back(level_order(ma, f.level(i)) - level_order(ma, f.level(i - 1)));
    }
  }
  exps.resize(ma.dimension(), 0);
  std::sort(exps.begin(), exps.end());
  return exps;
}

ObstructionReport universal_obstruction_report(const Multiarrangement& ma, const Filtration& f) {
  if (!check_supersolvable(ma, f)) throw InputError("multiplicity is not supersolvable for this filtration");
  if (f.length() < 2) throw InputError("obstruction report needs a filtration of length at least 2");
  for (int v : ma.multiplicity().values()) {
    if (v < 1) throw InputError("obstruction report needs m+1 with every entry at least 1");
  }
  ObstructionReport r;
  Multiarrangement base = ma.with_multiplicity(ma.multiplicity() - Multiplicity::ones(ma.size()));
  const auto& a2 = f.level(1);
  r.a2_balanced = is_balanced(subarrangement(ma, a2));
  const int m2 = level_order(base, a2);
  r.a2_order_even = m2 % 2 == 0;
  DeltaValue dv = delta(subarrangement(base, a2));
  r.a2_exponents = {dv.d1, dv.d2};
  r.a2_equal_exponents = r.a2_order_even && dv.d1 == m2 / 2 && dv.d2 == m2 / 2;
  r.level_increments_equal = r.a2_order_even;
  for (std::size_t i = 2; i < f.length(); ++i) {
    int inc = level_order(base, f.level(i)) - level_order(base, f.level(i - 1));
    r.level_increments.push_back(inc);
    if (2 * inc != m2) r.level_increments_equal = false;
  }
  for (std::size_t h = 0; h < ma.size(); ++h) {
    if (std::binary_search(a2.begin(), a2.end(), h)) continue;
    if (check_supersolvable(increment(ma, h), f)) r.still_supersolvable.push_back(h);
  }
  r.breaks_supersolvability = r.still_supersolvable.empty();
  r.all_pass = r.a2_balanced && r.a2_equal_exponents && r.level_increments_equal && r.breaks_supersolvability;
  if (r.all_pass) {
    r.universal = find_universal(base);
    r.universal_exists = r.universal.has_value();
  }
  return r;
}

}  // namespace multider
