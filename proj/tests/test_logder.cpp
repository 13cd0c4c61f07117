#include <doctest.h>

#include <random>

#include "multider/arrangement.hpp"
#include "multider/catalog.hpp"
#include "multider/derivation.hpp"
#include "multider/errors.hpp"
#include "multider/logder.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace multider;
using testutil::P;

namespace {

Derivation D3(const std::vector<std::string>& c) {
  return derivation_from_strings(c, default_variable_names(c.size()));
}

Multiarrangement boolean2(std::vector<int> m) {
  Arrangement a(2, {LinearForm({Scalar(1), Scalar(0)}), LinearForm({Scalar(0), Scalar(1)})});
  return Multiarrangement(a, Multiplicity(m));
}

Multiarrangement with(const char* name, const char* mult) {
  return catalog(name).with_multiplicity(parse_multiplicity(mult));
}

const std::vector<std::string> kPhi1{"x^4 - 2*x^3*y", "-2*x*y^3 + y^4", "-3*z^4 - 6*x*y*z^2 + 4*x*z^3 + 4*y*z^3"};

// A3 order: x-y, x-z, x, y-z, y, z
const char* kM1Plus1 = "3,2,3,2,3,2";
const char* kM1 = "2,1,2,1,2,1";

Polynomial saito_det(const std::vector<Derivation>& thetas) {
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& t : thetas) {
    std::vector<Polynomial> r;
    for (std::size_t j = 0; j < t.dimension(); ++j) r.push_back(t.coefficient(j));
    rows.push_back(r);
  }
  return oracle::leibniz(rows);
}

Multiarrangement random_instance(std::mt19937& rng, int max_mult) {
  static const std::vector<const char*> names{"A2", "B2", "A3", "deletedA3", "X3", "maehara4"};
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  Multiarrangement ma = catalog(names[pick(rng)]);
  std::uniform_int_distribution<int> mult(0, ma.dimension() == 2 ? max_mult + 2 : max_mult);
  std::vector<int> m;
  for (std::size_t i = 0; i < ma.size(); ++i) m.push_back(mult(rng));
  return ma.with_multiplicity(Multiplicity(m));
}

}  // namespace

TEST_SUITE("logder") {
  TEST_CASE("membership examples") {
    auto a2 = catalog("A2");
    CHECK(membership(euler_derivation(2), a2));
    CHECK_FALSE(membership(D3({"0", "x"}), boolean2({1, 1})));
    CHECK(membership(D3(kPhi1), with("A3", kM1Plus1)));
    CHECK_THROWS_AS(membership(euler_derivation(3), a2), DimensionMismatch);
  }

  TEST_CASE("Euler derivation") {
    CHECK(euler_derivation(2) == D3({"x", "y"}));
    std::mt19937 rng(59);
    for (int t = 0; t < 10; ++t) {
      LinearForm f({testutil::random_scalar(rng) + 7, testutil::random_scalar(rng), testutil::random_scalar(rng)});
      CHECK(euler_derivation(3).apply(f) == f.to_polynomial());
    }
    CHECK(membership(euler_derivation(3), catalog("A3")));
  }

  TEST_CASE("covariant derivative examples") {
    auto phi1 = D3(kPhi1);
    auto dx = covariant_derivative(Derivation::partial(3, 0), phi1);
    auto dy = covariant_derivative(Derivation::partial(3, 1), phi1);
    auto dz = covariant_derivative(Derivation::partial(3, 2), phi1);
    CHECK(dx == D3({"4*x^3 - 6*x^2*y", "-2*y^3", "-6*y*z^2 + 4*z^3"}));
    CHECK(dy == D3({"-2*x^3", "-6*x*y^2 + 4*y^3", "-6*x*z^2 + 4*z^3"}));
    CHECK(dz == D3({"0", "0", "-12*z*(z - x)*(z - y)"}));
    std::mt19937 rng(61);
    for (int t = 0; t < 10; ++t) {
      auto phi = testutil::random_derivation(rng, 3, 1 + t % 3, 3);
      CHECK(covariant_derivative(phi, euler_derivation(3)) == phi);
      auto theta = testutil::random_derivation(rng, 3, 2 + t % 3, 3);
      CHECK(covariant_derivative(euler_derivation(3), theta) == theta * Scalar(2 + t % 3));
    }
  }

  TEST_CASE("nabla evaluation identity and degree law") {
    std::mt19937 rng(67);
    for (int t = 0; t < 30; ++t) {
      int a = 1 + t % 3, b = 1 + (t / 3) % 3;
      auto theta = testutil::random_derivation(rng, 3, a, 3);
      auto other = testutil::random_derivation(rng, 3, b, 3);
      LinearForm alpha({Scalar(1), testutil::random_scalar(rng), testutil::random_scalar(rng)});
      auto nabla = covariant_derivative(theta, other);
      CHECK(nabla.apply(alpha) == theta.apply(other.apply(alpha)));
      if (!nabla.is_zero()) CHECK(*nabla.degree() == a + b - 1);
    }
  }

  TEST_CASE("saito criterion examples") {
    auto r = saito_check({D3({"x", "0"}), D3({"0", "y"})}, boolean2({1, 1}));
    CHECK(r.holds);
    CHECK(r.c == 1);
    auto phi1 = D3(kPhi1);
    std::vector<Derivation> nablas;
    for (std::size_t i = 0; i < 3; ++i) nablas.push_back(covariant_derivative(Derivation::partial(3, i), phi1));
    CHECK(saito_check(nablas, with("A3", kM1)).holds);
    CHECK_THROWS_AS(saito_check({D3({"x", "0"}), D3({"0", "x"})}, boolean2({1, 1})), MembershipError);
    CHECK_THROWS_AS(saito_check({D3({"x", "0"})}, boolean2({1, 1})), InputError);
  }

  TEST_CASE("graded pieces") {
    auto b = graded_piece(boolean2({1, 1}), 1);
    CHECK(b.dimension() == 2);
    for (const auto& t : b.basis) CHECK(membership(t, boolean2({1, 1})));
    CHECK(graded_dimension(with("B2", "3,5,2,2"), 4) == 0);
    CHECK(graded_dimension(catalog("A2"), 1) == 1);
    CHECK(hilbert_dims(boolean2({1, 1}), 2) == std::vector<std::size_t>{0, 2, 4});
    CHECK(hilbert_dims(with("B2", "3,5,2,2"), 5) == std::vector<std::size_t>{0, 0, 0, 0, 0, 1});
    CHECK(hilbert_dims(boolean2({0, 0}), 1) == std::vector<std::size_t>{2, 4});
    CHECK(graded_dimension(catalog("A2"), -1) == 0);
  }

  TEST_CASE("graded dimensions agree with the oracle") {
    std::mt19937 rng(71);
    for (int t = 0; t < 40; ++t) {
      auto ma = random_instance(rng, 2);
      int top = std::min(ma.order(), ma.dimension() == 2 ? 8 : 5);
      CHECK(hilbert_dims(ma, top) == oracle::hilbert(oracle::forms_of(ma.arrangement()), ma.multiplicity().values(), top));
    }
  }

  TEST_CASE("graded piece bases are independent members") {
    std::mt19937 rng(73);
    for (int t = 0; t < 15; ++t) {
      auto ma = random_instance(rng, 2);
      int k = 1 + t % 4;
      auto piece = graded_piece(ma, k);
      std::vector<std::vector<Scalar>> rows;
      for (const auto& th : piece.basis) {
        CHECK(membership(th, ma));
        CHECK(*th.degree() == k);
        std::vector<Scalar> flat;
        for (std::size_t i = 0; i < th.dimension(); ++i) {
          for (const auto& mono : monomials_of_degree(ma.dimension(), k)) flat.push_back(th.coefficient(i).coefficient(mono));
        }
        rows.push_back(flat);
      }
      if (!rows.empty()) CHECK(oracle::rank(rows) == rows.size());
    }
  }

  TEST_CASE("monotonicity of membership") {
    std::mt19937 rng(79);
    for (int t = 0; t < 15; ++t) {
      auto ma = random_instance(rng, 3);
      std::vector<int> lower;
      for (int v : ma.multiplicity().values()) lower.push_back(v == 0 ? 0 : v - 1 - t % 2 * (v > 1));
      auto smaller = ma.with_multiplicity(Multiplicity(lower));
      for (const auto& th : graded_piece(ma, ma.order() / static_cast<int>(ma.dimension()) + 1).basis) {
        CHECK(membership(th, smaller));
      }
    }
  }

  TEST_CASE("freeness examples") {
    auto b2 = find_free_basis(with("B2", "3,5,2,2"));
    CHECK(b2.free);
    CHECK(b2.exponents == std::vector<int>{5, 7});
    CHECK(b2.seed == kDefaultSeed);
    CHECK(b2.repetitions == kDefaultRepetitions);
    auto a3 = find_free_basis(catalog("A3").with_multiplicity(Multiplicity::constant(6, 3)));
    CHECK(a3.exponents == std::vector<int>{5, 6, 7});
    auto x3 = find_free_basis(catalog("X3").with_multiplicity(Multiplicity::constant(6, 2)));
    CHECK_FALSE(x3.free);
    CHECK(x3.mode != RefutationMode::None);
    CHECK(exponents(with("B2", "2,4,1,1")) == std::vector<int>{4, 4});
    CHECK(exponents(catalog("A3").with_multiplicity(Multiplicity::zeros(6))) == std::vector<int>{0, 0, 0});
    CHECK(exponents(with("deletedA3", "2,2,3,2,2")) == std::vector<int>{3, 4, 4});
    CHECK(exponents(with("X3", "2,2,2,1,1,1")) == std::vector<int>{3, 3, 3});
    Arrangement line(2, {LinearForm({Scalar(1), Scalar(0)})});
    CHECK_THROWS_AS(find_free_basis(Multiarrangement(line, Multiplicity::ones(1))), InputError);
  }

  TEST_CASE("search log covers every tuple") {
    auto cert = find_free_basis(with("B2", "3,5,2,2"));
    // nondecreasing pairs summing to 12
    CHECK(cert.search_log.size() == 7);
    int candidates = 0;
    for (const auto& r : cert.search_log) {
      if (r.outcome == "hilbert") {
        CHECK(r.mismatch_degree >= 0);
      } else {
        ++candidates;
        CHECK(r.degrees == std::vector<int>{5, 7});
      }
    }
    CHECK(candidates == 1);
  }

  TEST_CASE("symbolic path agrees with the randomized path") {
    std::mt19937 rng(83);
    FreenessOptions symbolic;
    symbolic.repetitions = 0;
    for (int t = 0; t < 15; ++t) {
      auto ma = random_instance(rng, 2);
      auto fast = find_free_basis(ma);
      auto slow = find_free_basis(ma, symbolic);
      CHECK(fast.free == slow.free);
      CHECK(fast.exponents == slow.exponents);
      if (slow.free) CHECK(saito_check(slow.basis, ma).holds);
    }
  }

  TEST_CASE("seeds change nothing but the basis") {
    auto ma = with("deletedA3", "2,2,3,2,2");
    FreenessOptions other;
    other.seed = 7;
    auto a = find_free_basis(ma);
    auto b = find_free_basis(ma, other);
    CHECK(a.exponents == b.exponents);
    CHECK(saito_check(b.basis, ma).holds);
    auto again = find_free_basis(ma);
    CHECK(again.basis == a.basis);
    CHECK(again.c == a.c);
  }

  TEST_CASE("saito soundness and the free Hilbert law") {
    std::mt19937 rng(89);
    int free_seen = 0;
    for (int t = 0; t < 40; ++t) {
      auto ma = random_instance(rng, 2);
      auto cert = find_free_basis(ma);
      if (!cert.free) continue;
      ++free_seen;
      int sum = 0;
      for (int d : cert.exponents) sum += d;
      CHECK(sum == ma.order());
      CHECK(std::is_sorted(cert.exponents.begin(), cert.exponents.end()));
      for (const auto& th : cert.basis) CHECK(membership(th, ma));
      CHECK(saito_det(cert.basis) == defining_polynomial(ma) * cert.c);
      CHECK(cert.c != 0);
      int top = std::min(ma.order(), ma.dimension() == 2 ? 10 : 6);
      auto dims = oracle::hilbert(oracle::forms_of(ma.arrangement()), ma.multiplicity().values(), top);
      for (int k = 0; k <= top; ++k) CHECK(dims[static_cast<std::size_t>(k)] == free_hilbert_value(cert.exponents, ma.dimension(), k));
    }
    CHECK(free_seen > 10);
  }

  TEST_CASE("criticality") {
    CHECK(is_k_critical(with("B2", "3,5,2,2"), 5));
    CHECK_FALSE(is_k_critical(with("B2", "3,5,2,2"), 4));
    CHECK(is_k_critical(with("A3", kM1Plus1), 4));
    CHECK_FALSE(is_k_critical(boolean2({1, 1}), 1));
    auto forms = oracle::forms_of(catalog("B2").arrangement());
    CHECK(oracle::is_k_critical(forms, {3, 5, 2, 2}, 5));
  }

  TEST_CASE("criticality agrees with the oracle") {
    std::mt19937 rng(97);
    for (int t = 0; t < 20; ++t) {
      auto ma = random_instance(rng, 2);
      auto forms = oracle::forms_of(ma.arrangement());
      for (int k = 0; k <= 4; ++k) CHECK(is_k_critical(ma, k) == oracle::is_k_critical(forms, ma.multiplicity().values(), k));
    }
  }

  TEST_CASE("universality examples") {
    auto phi1 = D3(kPhi1);
    CHECK(is_universal(phi1, with("A3", kM1)));
    auto chk = check_universal(phi1, with("A3", kM1));
    CHECK(chk.degree == 4);
    CHECK(chk.members);
    CHECK(chk.independent);
    CHECK(is_universal(euler_derivation(2), catalog("A2").with_multiplicity(Multiplicity::zeros(3))));
    auto b2 = find_free_basis(with("B2", "3,5,2,2"));
    CHECK(is_universal(b2.basis.front(), with("B2", "2,4,1,1")));
    CHECK_FALSE(is_universal(b2.basis.back(), with("B2", "2,4,1,1")));
    CHECK_FALSE(is_universal(D3({"x", "0"}), catalog("A2").with_multiplicity(Multiplicity::zeros(3))));
  }

  TEST_CASE("find universal examples") {
    auto del = find_universal(with("deletedA3", "1,1,2,1,1"));
    REQUIRE(del);
    CHECK(*del->degree() == 3);
    CHECK(is_universal(*del, with("deletedA3", "1,1,2,1,1")));
    CHECK_FALSE(find_universal(with("X3", "2,2,2,1,1,1")));
    auto a2 = find_universal(with("A2", "2,1,1"));
    REQUIRE(a2);
    CHECK(*a2->degree() == 3);
    auto b2 = find_universal(with("B2", "2,4,1,1"));
    REQUIRE(b2);
    CHECK(*b2->degree() == 5);
    auto euler = find_universal(catalog("A3").with_multiplicity(Multiplicity::zeros(6)));
    REQUIRE(euler);
    CHECK(*euler->degree() == 1);
    Arrangement xy(2, {LinearForm({Scalar(1), Scalar(0)}), LinearForm({Scalar(0), Scalar(1)})});
    CHECK_THROWS_AS(find_universal(Multiarrangement(xy, Multiplicity::zeros(2))), InputError);
  }

  TEST_CASE("a universal derivation is the unique element of its degree") {
    for (const char* spec : {"B2:2,4,1,1", "A2:2,1,1", "deletedA3:1,1,2,1,1", "A3:2,1,2,1,2,1", "A3:1,1,1,0,0,0"}) {
      std::string s(spec);
      auto colon = s.find(':');
      auto base = catalog(s.substr(0, colon)).with_multiplicity(parse_multiplicity(s.substr(colon + 1)));
      auto theta = find_universal(base);
      REQUIRE(theta);
      int d = *theta->degree();
      auto plus = base.with_multiplicity(base.multiplicity().plus_one());
      auto dims = oracle::hilbert(oracle::forms_of(plus.arrangement()), plus.multiplicity().values(), d);
      for (int k = 0; k < d; ++k) CHECK(dims[static_cast<std::size_t>(k)] == 0);
      CHECK(dims[static_cast<std::size_t>(d)] == 1);
    }
  }

  TEST_CASE("transporting a basis through a universal derivation") {
    // D(A, m + mu) from D(A, mu) for a 0/1 multiplicity mu
    auto base = with("B2", "2,4,1,1");
    auto theta = find_universal(base);
    REQUIRE(theta);
    for (const char* mu : {"1,0,0,0", "0,1,1,0", "1,1,1,1", "0,0,0,0"}) {
      auto mum = parse_multiplicity(mu);
      auto small = catalog("B2").with_multiplicity(mum);
      auto cert = find_free_basis(small);
      REQUIRE(cert.free);
      std::vector<Derivation> moved;
      for (const auto& psi : cert.basis) moved.push_back(covariant_derivative(psi, *theta));
      CHECK(saito_check(moved, base.with_multiplicity(base.multiplicity() + mum)).holds);
    }
  }
}
