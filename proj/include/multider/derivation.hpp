#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "multider/polynomial.hpp"

namespace multider {

// sum_i f_i d/dx_i
class Derivation {
 public:
  Derivation() = default;
  explicit Derivation(std::vector<Polynomial> coefficients);
  static Derivation zero(std::size_t n);
  static Derivation partial(std::size_t n, std::size_t i);

  std::size_t dimension() const { return coefficients_.size(); }
  const Polynomial& coefficient(std::size_t i) const { return coefficients_.at(i); }
  const std::vector<Polynomial>& coefficients() const { return coefficients_; }

  Polynomial apply(const Polynomial& p) const;
  Polynomial apply(const LinearForm& f) const;

  bool is_zero() const;
  bool is_homogeneous() const;
  // Common degree of the coefficients; nullopt for zero or mixed degrees.
  std::optional<int> degree() const;

  Derivation operator+(const Derivation& other) const;
  Derivation operator-(const Derivation& other) const;
  Derivation operator*(const Scalar& c) const;
  Derivation times(const Polynomial& p) const;
  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  std::vector<Polynomial> coefficients_;
};

Derivation euler_derivation(std::size_t n);

// sum_i phi(f_i) d/dx_i where theta = sum_i f_i d/dx_i.
Derivation covariant_derivative(const Derivation& phi, const Derivation& theta);

// Scales so the grlex-leading term of the first nonzero coefficient is 1.
Derivation normalized(const Derivation& theta);

bool divisible_by_form(const Derivation& theta, const LinearForm& form);

std::vector<std::string> coefficient_strings(const Derivation& theta,
                                             const std::vector<std::string>& names);
Derivation derivation_from_strings(const std::vector<std::string>& coefficients,
                                   const std::vector<std::string>& names);
std::string to_string(const Derivation& theta, const std::vector<std::string>& names);

}  // namespace multider
