#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multider/linalg.hpp"
#include "multider/scalar.hpp"

namespace multider {

inline constexpr std::size_t kMaxVariables = 8;
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exponents{};

  int degree() const;
  std::uint16_t operator[](std::size_t i) const { return exponents[i]; }
  std::uint16_t& operator[](std::size_t i) { return exponents[i]; }
  Monomial operator*(const Monomial& other) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  static Monomial variable(std::size_t i, std::uint16_t power = 1);
};

// Graded lex, larger first: higher degree wins, ties broken by x1 > x2 > ...
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// All monomials of degree d in n variables, in grlex-descending order.
std::vector<Monomial> monomials_of_degree(std::size_t n, int d);

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, GrlexGreater>;

  explicit Polynomial(std::size_t nvars = 0);
  static Polynomial constant(std::size_t nvars, const Scalar& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial term(std::size_t nvars, const Monomial& m, const Scalar& c);
  static Polynomial linear(const std::vector<Scalar>& coefficients);

  std::size_t num_variables() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // kMinusInfinity for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Scalar coefficient(const Monomial& m) const;
  std::pair<Monomial, Scalar> leading_term() const;

  void add_term(const Monomial& m, const Scalar& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned e) const;
  Scalar evaluate(std::span<const Scalar> point) const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t nvars_;
  TermMap terms_;
};

Polynomial partial_derivative(const Polynomial& p, std::size_t i);

// p(images[0], ..., images[n-1]).
Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images);

// p(M x): x_i is replaced by sum_j M(i,j) x_j.
Polynomial substitute_linear(const Polynomial& p, const RationalMatrix& m);

class LinearForm {
 public:
  explicit LinearForm(std::vector<Scalar> coefficients);

  std::size_t dimension() const { return coefficients_.size(); }
  const std::vector<Scalar>& coefficients() const { return coefficients_; }
  const Scalar& operator[](std::size_t i) const { return coefficients_[i]; }
  std::size_t pivot() const { return pivot_; }
  Polynomial to_polynomial() const;
  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.coefficients_ == b.coefficients_;
  }

 private:
  std::vector<Scalar> coefficients_;
  std::size_t pivot_ = 0;
};

// p is divisible by form^e. Decided by moving form to a coordinate.
bool divisible_by_linear_power(const Polynomial& p, const LinearForm& form, int e);

std::vector<std::string> default_variable_names(std::size_t n);

std::string to_string(const Polynomial& p, const std::vector<std::string>& names);
std::string to_string(const Polynomial& p);
std::string to_string(const LinearForm& f, const std::vector<std::string>& names);

// Integers, p/q rationals, named variables, + - * / ^ and parentheses.
// Division is only by nonzero constants.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

}  // namespace multider
