#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

Forms forms_of(const multider::Arrangement& a) {
  Forms out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a.form(i).coefficients());
  return out;
}

std::size_t rank(std::vector<std::vector<Q>> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Q f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) s = -s;
    }
  }
  return s;
}

}  // namespace

Q leibniz(const std::vector<std::vector<Q>>& m) {
  std::vector<std::size_t> p(m.size());
  std::iota(p.begin(), p.end(), 0);
  Q total = 0;
  do {
    Q t = permutation_sign(p);
    for (std::size_t i = 0; i < p.size(); ++i) t *= m[i][p[i]];
    total += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

multider::Polynomial leibniz(const std::vector<std::vector<multider::Polynomial>>& m) {
  std::size_t nvars = m.at(0).at(0).num_variables();
  std::vector<std::size_t> p(m.size());
  std::iota(p.begin(), p.end(), 0);
  multider::Polynomial total(nvars);
  do {
    multider::Polynomial t = multider::Polynomial::constant(nvars, permutation_sign(p));
    for (std::size_t i = 0; i < p.size(); ++i) t = t * m[i][p[i]];
    total += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

namespace {

Poly power_of_form(const std::vector<Q>& form, int e) {
  Poly acc;
  acc[Exponent(form.size(), 0)] = 1;
  for (int s = 0; s < e; ++s) {
    Poly next;
    for (const auto& [mono, c] : acc) {
      for (std::size_t v = 0; v < form.size(); ++v) {
        if (form[v] == 0) continue;
        Exponent m = mono;
        ++m[v];
        next[m] += c * form[v];
      }
    }
    for (auto it = next.begin(); it != next.end();) it = it->second == 0 ? next.erase(it) : std::next(it);
    acc = std::move(next);
  }
  return acc;
}

// lex with variable `lead` compared first, then 0,1,2,...
struct LexFrom {
  std::size_t lead;
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a[lead] != b[lead]) return a[lead] > b[lead];
    return a > b;
  }
};

}  // namespace

Poly remainder_mod_power(const Poly& p, const std::vector<Q>& form, int e) {
  std::size_t lead = 0;
  while (lead < form.size() && form[lead] == 0) ++lead;
  if (e <= 0) return {};
  Poly divisor = power_of_form(form, e);
  LexFrom order{lead};
  std::map<Exponent, Q, LexFrom> work(order);
  for (const auto& [m, c] : p) {
    if (c != 0) work[m] += c;
  }
  Exponent lt = divisor.begin()->first;
  for (const auto& [m, c] : divisor) {
    if (order(m, lt)) lt = m;
  }
  Q lc = divisor[lt];
  Poly rem;
  while (!work.empty()) {
    auto [m, c] = *work.begin();
    work.erase(work.begin());
    if (c == 0) continue;
    bool divides = true;
    for (std::size_t v = 0; v < m.size(); ++v) divides = divides && m[v] >= lt[v];
    if (!divides) {
      rem[m] += c;
      continue;
    }
    Q f = c / lc;
    for (const auto& [dm, dc] : divisor) {
      Exponent t = m;
      for (std::size_t v = 0; v < t.size(); ++v) t[v] += dm[v] - lt[v];
      if (t == m) continue;
      Q& slot = work[t];
      slot -= f * dc;
      if (slot == 0) work.erase(t);
    }
  }
  for (auto it = rem.begin(); it != rem.end();) it = it->second == 0 ? rem.erase(it) : std::next(it);
  return rem;
}

bool divisible(const Poly& p, const std::vector<Q>& form, int e) {
  return remainder_mod_power(p, form, e).empty();
}

Poly from_library(const multider::Polynomial& p) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Exponent e(p.num_variables());
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = m[v];
    out[e] = c;
  }
  return out;
}

namespace {

void monomials(std::size_t n, int d, Exponent& cur, std::size_t v, std::vector<Exponent>& out) {
  if (v + 1 == n) {
    cur[v] = d;
    out.push_back(cur);
    return;
  }
  for (int a = d; a >= 0; --a) {
    cur[v] = a;
    monomials(n, d - a, cur, v + 1, out);
  }
}

}  // namespace

std::size_t graded_dimension(const Forms& forms, const std::vector<int>& mult, int k) {
  if (k < 0) return 0;
  std::size_t n = forms.at(0).size();
  std::vector<Exponent> monos;
  Exponent cur(n, 0);
  monomials(n, k, cur, 0, monos);
  std::size_t unknowns = n * monos.size();
  std::vector<std::vector<Q>> rows;
  for (std::size_t h = 0; h < forms.size(); ++h) {
    if (mult[h] == 0) continue;
    std::map<Exponent, std::size_t> row_of;
    std::vector<std::vector<Q>> block;
    for (std::size_t b = 0; b < monos.size(); ++b) {
      Poly single{{monos[b], Q(1)}};
      Poly rem = remainder_mod_power(single, forms[h], mult[h]);
      for (const auto& [m, c] : rem) {
        auto [it, fresh] = row_of.emplace(m, block.size());
        if (fresh) block.emplace_back(unknowns, Q(0));
        for (std::size_t i = 0; i < n; ++i) {
          if (forms[h][i] != 0) block[it->second][i * monos.size() + b] += c * forms[h][i];
        }
      }
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }
  return unknowns - rank(rows);
}

std::vector<std::size_t> hilbert(const Forms& forms, const std::vector<int>& mult, int max_degree) {
  std::vector<std::size_t> out;
  for (int k = 0; k <= max_degree; ++k) out.push_back(graded_dimension(forms, mult, k));
  return out;
}

std::pair<int, int> rank2_exponents(const Forms& forms, const std::vector<int>& mult) {
  int total = std::accumulate(mult.begin(), mult.end(), 0);
  for (int k = 0;; ++k) {
    if (graded_dimension(forms, mult, k) > 0) return {k, total - k};
  }
}

bool is_k_critical(const Forms& forms, const std::vector<int>& mult, int k) {
  for (int j = 0; j < k; ++j) {
    if (graded_dimension(forms, mult, j) != 0) return false;
  }
  if (graded_dimension(forms, mult, k) == 0) return false;
  for (std::size_t h = 0; h < mult.size(); ++h) {
    auto bumped = mult;
    ++bumped[h];
    if (graded_dimension(forms, bumped, k) != 0) return false;
  }
  return true;
}

std::set<std::set<std::size_t>> rank2_flats(const Forms& forms) {
  std::set<std::set<std::size_t>> out;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      std::set<std::size_t> flat{i, j};
      for (std::size_t k = 0; k < forms.size(); ++k) {
        if (rank({forms[i], forms[j], forms[k]}) == 2) flat.insert(k);
      }
      out.insert(flat);
    }
  }
  return out;
}

std::pair<int, int> wakamiko(int k1, int k2, int k3) {
  std::vector<int> k{k1, k2, k3};
  std::sort(k.begin(), k.end());
  int total = k[0] + k[1] + k[2];
  if (k[2] >= k[0] + k[1] - 1) {
    return {std::min(k[0] + k[1], k[2]), std::max(k[0] + k[1], k[2])};
  }
  return {total / 2, total - total / 2};
}

}  // namespace oracle
