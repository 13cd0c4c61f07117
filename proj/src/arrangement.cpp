#include "multider/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "multider/errors.hpp"
#include "multider/logder.hpp"

namespace multider {

namespace {

std::vector<std::vector<Scalar>> form_rows(const std::vector<LinearForm>& forms) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& f : forms) rows.push_back(f.coefficients());
  return rows;
}

// rref must be the output of reduced_row_basis.
bool in_row_span(const std::vector<std::vector<Scalar>>& rref, std::vector<Scalar> v) {
  for (const auto& row : rref) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    if (v[p] == 0) continue;
    Scalar f = v[p];
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
  }
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

}  // namespace

Arrangement::Arrangement(std::size_t dimension, std::vector<LinearForm> forms,
                         std::vector<std::string> variable_names)
    : dimension_(dimension), forms_(std::move(forms)), names_(std::move(variable_names)) {
  if (dimension_ == 0 || dimension_ > kMaxVariables) {
    throw InputError("arrangement dimension must be between 1 and " + std::to_string(kMaxVariables));
  }
  if (names_.empty()) names_ = default_variable_names(dimension_);
  if (names_.size() != dimension_) throw DimensionMismatch("variable name count differs from dimension");
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (forms_[i].dimension() != dimension_) {
      throw DimensionMismatch("form " + std::to_string(i) + " has the wrong length");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (forms_[i] == forms_[j]) {
        throw InputError("hyperplanes " + std::to_string(j) + " and " + std::to_string(i) +
                         " are proportional");
      }
    }
  }
}

std::size_t Arrangement::rank() const {
  if (forms_.empty()) return 0;
  return reduced_row_basis(form_rows(forms_)).size();
}

std::optional<std::size_t> Arrangement::index_of(const LinearForm& f) const {
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (forms_[i] == f) return i;
  }
  return std::nullopt;
}

Multiplicity::Multiplicity(std::vector<int> values) : values_(std::move(values)) {
  for (int v : values_) {
    if (v < 0) throw InputError("multiplicities must be nonnegative");
  }
}

Multiplicity Multiplicity::ones(std::size_t n) { return constant(n, 1); }
Multiplicity Multiplicity::zeros(std::size_t n) { return constant(n, 0); }
Multiplicity Multiplicity::constant(std::size_t n, int value) {
  return Multiplicity(std::vector<int>(n, value));
}

Multiplicity Multiplicity::indicator(std::size_t n, std::size_t h) {
  if (h >= n) throw InputError("hyperplane index out of range");
  std::vector<int> v(n, 0);
  v[h] = 1;
  return Multiplicity(std::move(v));
}

int Multiplicity::order() const { return std::accumulate(values_.begin(), values_.end(), 0); }

Multiplicity Multiplicity::operator+(const Multiplicity& other) const {
  if (size() != other.size()) throw DimensionMismatch("multiplicity length mismatch");
  std::vector<int> v(size());
  for (std::size_t i = 0; i < size(); ++i) v[i] = values_[i] + other.values_[i];
  return Multiplicity(std::move(v));
}

Multiplicity Multiplicity::operator-(const Multiplicity& other) const {
  if (size() != other.size()) throw DimensionMismatch("multiplicity length mismatch");
  std::vector<int> v(size());
  for (std::size_t i = 0; i < size(); ++i) v[i] = values_[i] - other.values_[i];
  return Multiplicity(std::move(v));
}

bool pointwise_leq(const Multiplicity& a, const Multiplicity& b) {
  if (a.size() != b.size()) throw DimensionMismatch("multiplicity length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::string to_string(const Multiplicity& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(m[i]);
  }
  return s;
}

Multiplicity parse_multiplicity(std::string_view text) {
  std::vector<int> v;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InputError("malformed multiplicity '" + std::string(text) + "'");
    }
    if (used != item.size()) throw InputError("malformed multiplicity '" + std::string(text) + "'");
    v.push_back(x);
  }
  return Multiplicity(std::move(v));
}

Multiarrangement::Multiarrangement(Arrangement arrangement, Multiplicity multiplicity)
    : arrangement_(std::move(arrangement)), multiplicity_(std::move(multiplicity)) {
  if (arrangement_.size() != multiplicity_.size()) {
    throw DimensionMismatch("multiplicity has " + std::to_string(multiplicity_.size()) +
                            " entries for " + std::to_string(arrangement_.size()) + " hyperplanes");
  }
}

Multiarrangement Multiarrangement::with_multiplicity(Multiplicity m) const {
  return Multiarrangement(arrangement_, std::move(m));
}

bool Flat::contains_hyperplane(std::size_t h) const {
  return std::binary_search(hyperplanes.begin(), hyperplanes.end(), h);
}

Flat flat_of(const Arrangement& a, const std::vector<std::size_t>& generators) {
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t g : generators) rows.push_back(a.form(g).coefficients());
  Flat x;
  x.defining_forms = reduced_row_basis(rows);
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (in_row_span(x.defining_forms, a.form(h).coefficients())) x.hyperplanes.push_back(h);
  }
  return x;
}

std::vector<Flat> rank2_flats(const Arrangement& a) {
  std::vector<Flat> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      Flat x = flat_of(a, {i, j});
      bool seen = std::any_of(out.begin(), out.end(),
                              [&](const Flat& y) { return y.defining_forms == x.defining_forms; });
      if (!seen) out.push_back(std::move(x));
    }
  }
  return out;
}

std::vector<Flat> rank2_flats_through(const Arrangement& a, std::size_t h) {
  if (h >= a.size()) throw InputError("hyperplane index out of range");
  std::vector<Flat> out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j == h) continue;
    Flat x = flat_of(a, {h, j});
    bool seen = std::any_of(out.begin(), out.end(),
                            [&](const Flat& y) { return y.defining_forms == x.defining_forms; });
    if (!seen) out.push_back(std::move(x));
  }
  return out;
}

Polynomial defining_polynomial(const Multiarrangement& ma) {
  Polynomial q = Polynomial::constant(ma.dimension(), 1);
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (ma.mult(i) > 0) q *= ma.form(i).to_polynomial().pow(static_cast<unsigned>(ma.mult(i)));
  }
  return q;
}

bool is_essential(const Arrangement& a) { return a.rank() == a.dimension(); }

int irreducible_component_count(const Arrangement& a) {
  if (!is_essential(a)) throw InputError("irreducible component count needs an essential arrangement");
  Multiarrangement simple(a, Multiplicity::ones(a.size()));
  return static_cast<int>(graded_dimension(simple, 1));
}

Multiarrangement localize(const Multiarrangement& ma, const Flat& x) {
  const Arrangement& a = ma.arrangement();
  if (x.hyperplanes.empty()) throw InputError("flat lists no hyperplanes");
  for (const auto& row : x.defining_forms) {
    if (row.size() != a.dimension()) throw DimensionMismatch("flat lives in a different space");
  }
  for (std::size_t h : x.hyperplanes) {
    if (h >= a.size()) throw InputError("flat lists a hyperplane index out of range");
  }
  Flat actual = flat_of(a, x.hyperplanes);
  if (actual.defining_forms != x.defining_forms || actual.hyperplanes != x.hyperplanes) {
    throw InputError("not a flat of this arrangement");
  }
  return subarrangement(ma, x.hyperplanes);
}

Multiarrangement subarrangement(const Multiarrangement& ma, const std::vector<std::size_t>& indices) {
  std::vector<LinearForm> forms;
  std::vector<int> mult;
  for (std::size_t h : indices) {
    if (h >= ma.size()) throw InputError("hyperplane index out of range");
    forms.push_back(ma.form(h));
    mult.push_back(ma.mult(h));
  }
  return Multiarrangement(
      Arrangement(ma.dimension(), std::move(forms), ma.arrangement().variable_names()),
      Multiplicity(std::move(mult)));
}

Multiarrangement delete_hyperplane(const Multiarrangement& ma, std::size_t h) {
  if (h >= ma.size()) throw InputError("hyperplane index out of range");
  if (ma.mult(h) == 0) throw InputError("cannot delete a hyperplane of multiplicity 0");
  if (ma.mult(h) > 1) return ma.with_multiplicity(ma.multiplicity() - Multiplicity::indicator(ma.size(), h));
  std::vector<LinearForm> forms;
  std::vector<int> mult;
  for (std::size_t i = 0; i < ma.size(); ++i) {
    if (i == h) continue;
    forms.push_back(ma.form(i));
    mult.push_back(ma.mult(i));
  }
  return Multiarrangement(
      Arrangement(ma.dimension(), std::move(forms), ma.arrangement().variable_names()),
      Multiplicity(std::move(mult)));
}

Multiarrangement increment(const Multiarrangement& ma, std::size_t h) {
  return ma.with_multiplicity(ma.multiplicity().incremented(h));
}

Multiarrangement insert_hyperplane(const Multiarrangement& ma, std::size_t position,
                                   const LinearForm& form, int multiplicity) {
  if (position > ma.size()) throw InputError("insertion position out of range");
  std::vector<LinearForm> forms = ma.arrangement().forms();
  std::vector<int> mult = ma.multiplicity().values();
  forms.insert(forms.begin() + static_cast<std::ptrdiff_t>(position), form);
  mult.insert(mult.begin() + static_cast<std::ptrdiff_t>(position), multiplicity);
  return Multiarrangement(
      Arrangement(ma.dimension(), std::move(forms), ma.arrangement().variable_names()),
      Multiplicity(std::move(mult)));
}

Multiarrangement essentialize(const Multiarrangement& ma) {
  const Arrangement& a = ma.arrangement();
  if (is_essential(a)) return ma;
  auto basis = reduced_row_basis(form_rows(a.forms()));
  if (basis.empty()) throw InputError("arrangement has no hyperplanes");
  std::vector<LinearForm> forms;
  for (const auto& f : a.forms()) {
    auto c = coordinates_in_span(basis, f.coefficients());
    if (!c) throw InvariantViolation("form outside the span of the arrangement");
    forms.emplace_back(*c);
  }
  return Multiarrangement(Arrangement(basis.size(), std::move(forms)), ma.multiplicity());
}

std::vector<std::vector<std::size_t>> coordinate_symmetries(const Arrangement& a) {
  const std::size_t n = a.dimension();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      // (alpha o g)(x) with g(x)_i = s_i x_{sigma(i)}.
      std::vector<std::size_t> perm;
      bool ok = true;
      for (const auto& f : a.forms()) {
        std::vector<Scalar> c(n);
        for (std::size_t i = 0; i < n; ++i) {
          c[sigma[i]] = (signs & (1u << i)) ? Scalar(-f[i]) : f[i];
        }
        auto idx = a.index_of(LinearForm(c));
        if (!idx) {
          ok = false;
          break;
        }
        perm.push_back(*idx);
      }
      if (ok && std::find(out.begin(), out.end(), perm) == out.end()) out.push_back(perm);
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

Multiplicity permute(const Multiplicity& m, const std::vector<std::size_t>& perm) {
  if (perm.size() != m.size()) throw DimensionMismatch("permutation length mismatch");
  std::vector<int> v(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) v[perm[i]] = m[i];
  return Multiplicity(std::move(v));
}

Multiplicity orbit_minimum(const Multiplicity& m, const std::vector<std::vector<std::size_t>>& perms) {
  Multiplicity best = m;
  for (const auto& p : perms) {
    Multiplicity img = permute(m, p);
    if (img.values() < best.values()) best = img;
  }
  return best;
}

}  // namespace multider
