#include "multider/derivation.hpp"

#include "multider/errors.hpp"

namespace multider {

Derivation::Derivation(std::vector<Polynomial> coefficients) : coefficients_(std::move(coefficients)) {
  for (const auto& f : coefficients_) {
    if (f.num_variables() != coefficients_.size()) {
      throw DimensionMismatch("derivation needs one coefficient per variable");
    }
  }
}

Derivation Derivation::zero(std::size_t n) { return Derivation(std::vector<Polynomial>(n, Polynomial(n))); }

Derivation Derivation::partial(std::size_t n, std::size_t i) {
  Derivation d = zero(n);
  d.coefficients_.at(i) = Polynomial::constant(n, 1);
  return d;
}

Polynomial Derivation::apply(const Polynomial& p) const {
  if (p.num_variables() != dimension()) throw DimensionMismatch("derivation applied over the wrong ring");
  Polynomial out(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (coefficients_[i].is_zero()) continue;
    Polynomial d = partial_derivative(p, i);
    if (!d.is_zero()) out += coefficients_[i] * d;
  }
  return out;
}

Polynomial Derivation::apply(const LinearForm& f) const {
  if (f.dimension() != dimension()) throw DimensionMismatch("derivation applied to a foreign form");
  Polynomial out(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (f[i] != 0) out += coefficients_[i] * f[i];
  }
  return out;
}

bool Derivation::is_zero() const {
  for (const auto& f : coefficients_) {
    if (!f.is_zero()) return false;
  }
  return true;
}

bool Derivation::is_homogeneous() const {
  int d = kMinusInfinity;
  for (const auto& f : coefficients_) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) return false;
    if (d == kMinusInfinity) {
      d = f.degree();
    } else if (f.degree() != d) {
      return false;
    }
  }
  return true;
}

std::optional<int> Derivation::degree() const {
  if (is_zero() || !is_homogeneous()) return std::nullopt;
  for (const auto& f : coefficients_) {
    if (!f.is_zero()) return f.degree();
  }
  return std::nullopt;
}

Derivation Derivation::operator+(const Derivation& other) const {
  if (dimension() != other.dimension()) throw DimensionMismatch("derivations over different rings");
  std::vector<Polynomial> c = coefficients_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coefficients_[i];
  return Derivation(std::move(c));
}

Derivation Derivation::operator-(const Derivation& other) const {
  if (dimension() != other.dimension()) throw DimensionMismatch("derivations over different rings");
  std::vector<Polynomial> c = coefficients_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coefficients_[i];
  return Derivation(std::move(c));
}

Derivation Derivation::operator*(const Scalar& s) const {
  std::vector<Polynomial> c = coefficients_;
  for (auto& f : c) f *= s;
  return Derivation(std::move(c));
}

Derivation Derivation::times(const Polynomial& p) const {
  std::vector<Polynomial> c;
  for (const auto& f : coefficients_) c.push_back(f * p);
  return Derivation(std::move(c));
}

Derivation euler_derivation(std::size_t n) {
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(Polynomial::variable(n, i));
  return Derivation(std::move(c));
}

Derivation covariant_derivative(const Derivation& phi, const Derivation& theta) {
  if (phi.dimension() != theta.dimension()) throw DimensionMismatch("covariant derivative dimension mismatch");
  std::vector<Polynomial> c;
  for (const auto& f : theta.coefficients()) c.push_back(phi.apply(f));
  return Derivation(std::move(c));
}

Derivation normalized(const Derivation& theta) {
  for (const auto& f : theta.coefficients()) {
    if (!f.is_zero()) return theta * (1 / f.leading_term().second);
  }
  return theta;
}

bool divisible_by_form(const Derivation& theta, const LinearForm& form) {
  for (const auto& f : theta.coefficients()) {
    if (!divisible_by_linear_power(f, form, 1)) return false;
  }
  return true;
}

std::vector<std::string> coefficient_strings(const Derivation& theta, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& f : theta.coefficients()) out.push_back(to_string(f, names));
  return out;
}

Derivation derivation_from_strings(const std::vector<std::string>& coefficients,
                                   const std::vector<std::string>& names) {
  if (coefficients.size() != names.size()) {
    throw DimensionMismatch("derivation needs " + std::to_string(names.size()) + " coefficients");
  }
  std::vector<Polynomial> c;
  for (const auto& s : coefficients) c.push_back(parse_polynomial(s, names));
  return Derivation(std::move(c));
}

std::string to_string(const Derivation& theta, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < theta.dimension(); ++i) {
    const Polynomial& f = theta.coefficient(i);
    if (f.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(f, names) + ")*d" + names[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace multider
