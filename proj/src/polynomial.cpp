#include "multider/polynomial.hpp"

#include <cctype>
#include <functional>
#include <sstream>

#include "multider/errors.hpp"

namespace multider {

int Monomial::degree() const {
  int d = 0;
  for (auto e : exponents) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exponents[i] = static_cast<std::uint16_t>(exponents[i] + other.exponents[i]);
  }
  return m;
}

Monomial Monomial::variable(std::size_t i, std::uint16_t power) {
  Monomial m;
  m.exponents[i] = power;
  return m;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da > db;
  return a.exponents > b.exponents;
}

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (d < 0 || n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  // Lex-descending enumeration of exponent vectors with fixed total.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      cur.exponents[i] = static_cast<std::uint16_t>(left);
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.exponents[i] = static_cast<std::uint16_t>(e);
      rec(i + 1, left - e);
    }
  };
  rec(0, d);
  return out;
}

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVariables) throw InputError("too many variables");
}

Polynomial Polynomial::constant(std::size_t nvars, const Scalar& c) {
  Polynomial p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw InputError("variable index out of range");
  Polynomial p(nvars);
  p.add_term(Monomial::variable(i), 1);
  return p;
}

Polynomial Polynomial::term(std::size_t nvars, const Monomial& m, const Scalar& c) {
  Polynomial p(nvars);
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::linear(const std::vector<Scalar>& coefficients) {
  Polynomial p(coefficients.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    p.add_term(Monomial::variable(i), coefficients[i]);
  }
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return kMinusInfinity;
  return terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return false;
  }
  return true;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::pair<Monomial, Scalar> Polynomial::leading_term() const {
  if (terms_.empty()) throw InputError("leading term of the zero polynomial");
  return *terms_.begin();
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_) throw DimensionMismatch("polynomials over different rings");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, v] : p.terms_) v = -v;
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point has wrong length");
  Scalar total = 0;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (int k = 0; k < m[i]; ++k) t *= point[i];
    }
    total += t;
  }
  return total;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t i) {
  if (i >= p.num_variables()) throw InputError("partial derivative index out of range");
  Polynomial out(p.num_variables());
  for (const auto& [m, c] : p.terms()) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] = static_cast<std::uint16_t>(d[i] - 1);
    out.add_term(d, c * m[i]);
  }
  return out;
}

Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != p.num_variables()) throw DimensionMismatch("compose: wrong image count");
  std::size_t target = images.empty() ? 0 : images.front().num_variables();
  for (const auto& img : images) {
    if (img.num_variables() != target) throw DimensionMismatch("compose: mixed image rings");
  }
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (m[i]) t *= power(i, m[i]);
    }
    out += t;
  }
  return out;
}

Polynomial substitute_linear(const Polynomial& p, const RationalMatrix& m) {
  const std::size_t n = p.num_variables();
  if (m.rows() != n || m.cols() != n) throw DimensionMismatch("substitution matrix has wrong shape");
  if (rank(m) != n) throw SingularMatrixError("substitution matrix is singular");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::linear(m.row(i)));
  return compose(p, images);
}

LinearForm::LinearForm(std::vector<Scalar> coefficients) : coefficients_(std::move(coefficients)) {
  std::size_t p = 0;
  while (p < coefficients_.size() && coefficients_[p] == 0) ++p;
  if (p == coefficients_.size()) throw InputError("linear form with all coefficients zero");
  pivot_ = p;
  Scalar lead = coefficients_[p];
  for (auto& c : coefficients_) c /= lead;
}

Polynomial LinearForm::to_polynomial() const { return Polynomial::linear(coefficients_); }

bool divisible_by_linear_power(const Polynomial& p, const LinearForm& form, int e) {
  if (form.dimension() != p.num_variables()) throw DimensionMismatch("form and polynomial rings differ");
  if (e <= 0 || p.is_zero()) return true;
  if (p.degree() < e) return false;
  const std::size_t n = p.num_variables();
  const std::size_t piv = form.pivot();
  // In coordinates z with z_piv = form(x), x_piv = z_piv - sum_{i != piv} a_i z_i.
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != piv) {
      images.push_back(Polynomial::variable(n, i));
      continue;
    }
    Polynomial img = Polynomial::variable(n, piv);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != piv && form[j] != 0) img.add_term(Monomial::variable(j), -form[j]);
    }
    images.push_back(std::move(img));
  }
  Polynomial q = compose(p, images);
  for (const auto& [m, c] : q.terms()) {
    if (m[piv] < e) return false;
  }
  return true;
}

std::vector<std::string> default_variable_names(std::size_t n) {
  static const char* small[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(n <= 4 ? std::string(small[i]) : "x" + std::to_string(i + 1));
  }
  return names;
}

namespace {

std::string monomial_string(const Monomial& m, std::size_t n, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (names.size() != p.num_variables()) throw DimensionMismatch("wrong number of variable names");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c < 0;
    Scalar a = negative ? Scalar(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_string(m, p.num_variables(), names);
    if (mono.empty()) {
      out += format_scalar(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += format_scalar(a) + '*' + mono;
    }
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  return to_string(p, default_variable_names(p.num_variables()));
}

std::string to_string(const LinearForm& f, const std::vector<std::string>& names) {
  return to_string(f.to_polynomial(), names);
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                     " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t n() const { return names_.size(); }

  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    for (;;) {
      if (accept('*')) {
        p *= unary();
      } else if (accept('/')) {
        Polynomial d = unary();
        if (d.degree() != 0) fail("division by a non-constant");
        p *= 1 / d.terms().begin()->second;
      } else {
        return p;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      return base.pow(e);
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(n(), Scalar(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view ident = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == ident) return Polynomial::variable(n(), i);
      }
      pos_ = start;
      fail("unknown variable '" + std::string(ident) + "'");
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

}  // namespace multider
