#include <doctest.h>

#include <functional>
#include <random>

#include "multider/arrangement.hpp"
#include "multider/catalog.hpp"
#include "multider/errors.hpp"
#include "multider/logder.hpp"
#include "multider/rank2.hpp"
#include "oracles.hpp"

using namespace multider;

namespace {

Multiarrangement with(const std::string& name, const char* mult) {
  return catalog_from_spec(name).with_multiplicity(parse_multiplicity(mult));
}

// Every m with |m| <= max_order, entries >= lo.
std::vector<Multiplicity> grid(std::size_t n, int max_order, int lo = 0) {
  std::vector<Multiplicity> out;
  std::vector<int> cur(n, lo);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = lo; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v + lo);
    }
  };
  rec(0, max_order - lo * static_cast<int>(n) + lo);
  return out;
}

int oracle_delta(const Multiarrangement& ma) {
  auto [d1, d2] = oracle::rank2_exponents(oracle::forms_of(ma.arrangement()), ma.multiplicity().values());
  return d2 - d1;
}

}  // namespace

TEST_SUITE("rank2") {
  TEST_CASE("balance") {
    CHECK_FALSE(is_balanced(parse_multiplicity("1,1,5")));
    CHECK(is_balanced(parse_multiplicity("3,5,2,2")));
    CHECK(is_balanced(Multiplicity::zeros(4)));
    CHECK(dominating_hyperplane(parse_multiplicity("1,1,5")) == std::size_t{2});
    CHECK_FALSE(dominating_hyperplane(parse_multiplicity("2,2,3")));
  }

  TEST_CASE("delta examples") {
    auto d = delta(with("A2", "1,1,1"));
    CHECK(d.d1 == 1);
    CHECK(d.d2 == 2);
    CHECK(d.gap() == 1);
    CHECK(delta(with("A2", "2,2,2")).gap() == 0);
    auto u = delta(with("A2", "1,1,5"));
    CHECK(u.d1 == 2);
    CHECK(u.d2 == 5);
    CHECK(delta(with("B2", "3,5,2,2")).gap() == 2);
    CHECK_THROWS_AS(delta(catalog("A3")), InputError);
  }

  TEST_CASE("delta of a rank-2 localization inside three variables") {
    auto loc = localize(with("A3", "2,2,2,1,1,1"), flat_of(catalog("A3").arrangement(), {0, 2}));
    auto d = delta(loc);
    CHECK(d.d1 + d.d2 == 5);
    CHECK(d.gap() == 1);
  }

  TEST_CASE("closed form for A2") {
    CHECK(wakamiko_exponents(2, 2, 2) == std::pair<int, int>{3, 3});
    CHECK(wakamiko_exponents(1, 1, 5) == std::pair<int, int>{2, 5});
    CHECK(wakamiko_exponents(2, 2, 3) == std::pair<int, int>{3, 4});
    CHECK_THROWS_AS(wakamiko_exponents(-1, 0, 0), InputError);
    for (int a = 0; a <= 6; ++a) {
      for (int b = 0; b <= 6; ++b) {
        for (int c = 0; c <= 6; ++c) {
          auto ma = with("A2", (std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c)).c_str());
          auto d = delta(ma);
          CHECK(wakamiko_exponents(a, b, c) == std::pair<int, int>{d.d1, d.d2});
          CHECK(wakamiko_exponents(a, b, c) == oracle::wakamiko(a, b, c));
        }
      }
    }
  }

  TEST_CASE("lattice distance") {
    auto m = parse_multiplicity("3,5,2,2");
    CHECK(lattice_distance(m, m) == 0);
    CHECK(lattice_distance(m, parse_multiplicity("2,4,1,1")) == 4);
    for (std::size_t h = 0; h < 4; ++h) {
      CHECK(lattice_distance(m.plus_one(), m.incremented(h)) == 3);
    }
    CHECK_THROWS_AS(lattice_distance(m, Multiplicity::ones(3)), DimensionMismatch);
  }

  TEST_CASE("component examples") {
    auto inf = classify_component(with("A2", "1,1,5"));
    CHECK(inf.infinite);
    CHECK(inf.dominating == 2);
    auto fin = classify_component(with("A2", "3,2,2"));
    CHECK_FALSE(fin.infinite);
    CHECK(fin.peak == parse_multiplicity("3,2,2"));
    CHECK(fin.peak_delta == 1);
    auto b2 = classify_component(with("B2", "3,5,2,2"));
    CHECK_FALSE(b2.infinite);
    CHECK(b2.peak == parse_multiplicity("3,5,2,2"));
    CHECK(b2.peak_delta == 2);
    CHECK(b2.distance == 0);
    CHECK_THROWS_AS(classify_component(with("A2", "2,2,2")), InputError);
    auto walk = classify_component(with("B2", "3,4,2,2"));
    CHECK_FALSE(walk.infinite);
    CHECK(walk.path.front() == parse_multiplicity("3,4,2,2"));
    CHECK(walk.path.back() == walk.peak);
    CHECK(walk.query_delta == walk.peak_delta - walk.distance);
  }

  TEST_CASE("lattice laws on A2 and B2") {
    for (const char* name : {"A2", "B2"}) {
      auto family = catalog(name);
      const int lines = static_cast<int>(family.size());
      for (const auto& m : grid(family.size(), 12)) {
        auto ma = family.with_multiplicity(m);
        int dm = delta(ma).gap();
        if (is_balanced(m)) CHECK(dm <= lines - 2);
        for (std::size_t h = 0; h < family.size(); ++h) {
          CHECK(std::abs(dm - delta(ma.with_multiplicity(m.incremented(h))).gap()) == 1);
        }
        if (auto dom = dominating_hyperplane(m)) {
          auto d = delta(ma);
          CHECK(d.d2 == m[*dom]);
          CHECK(d.d1 == m.order() - m[*dom]);
        }
      }
    }
  }

  TEST_CASE("component law on sampled members") {
    std::mt19937 rng(101);
    for (const char* name : {"A2", "B2", "maehara4"}) {
      auto family = catalog(name);
      for (const auto& m : grid(family.size(), 10, 1)) {
        auto ma = family.with_multiplicity(m);
        if (!is_balanced(m) || delta(ma).gap() == 0) continue;
        auto cls = classify_component(ma);
        CHECK(cls.query_delta == cls.peak_delta - cls.distance);
        CHECK(cls.query_delta == oracle_delta(ma));
        CHECK(cls.distance == lattice_distance(m, cls.peak));
        auto members = component_members(family.with_multiplicity(cls.peak), cls.peak_delta);
        REQUIRE_FALSE(members.empty());
        std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
        for (int s = 0; s < 5; ++s) {
          const auto& q = members[pick(rng)];
          CHECK(oracle_delta(family.with_multiplicity(q)) == cls.peak_delta - lattice_distance(q, cls.peak));
        }
      }
    }
  }

  TEST_CASE("lower element kill test") {
    for (const char* name : {"A2", "B2"}) {
      auto family = catalog(name);
      for (const auto& m : grid(family.size(), 9, 1)) {
        auto ma = family.with_multiplicity(m);
        auto cert = find_free_basis(ma);
        REQUIRE(cert.free);
        const auto& lower = cert.basis.front();
        if (auto dom = dominating_hyperplane(m)) {
          CHECK(lower.apply(family.form(*dom)).is_zero());
        } else if (cert.exponents[0] != cert.exponents[1]) {
          for (std::size_t h = 0; h < family.size(); ++h) CHECK_FALSE(lower.apply(family.form(h)).is_zero());
        }
      }
    }
  }

  TEST_CASE("universal classification examples") {
    auto b2 = find_free_basis(with("B2", "3,5,2,2"));
    CHECK(classify_universal_rank2(with("B2", "2,4,1,1"), b2.basis.front()));
    auto odd = find_free_basis(with("B2", "3,4,2,2"));
    CHECK_FALSE(classify_universal_rank2(with("B2", "2,3,1,1"), odd.basis.front()));
    auto m4 = with("maehara4", "2,2,1,1");
    auto low = find_free_basis(m4.with_multiplicity(m4.multiplicity().plus_one()));
    CHECK_FALSE(classify_universal_rank2(m4, low.basis.front()));
    Arrangement xy(2, {LinearForm({Scalar(1), Scalar(0)}), LinearForm({Scalar(0), Scalar(1)})});
    CHECK_THROWS_AS(classify_universal_rank2(Multiarrangement(xy, Multiplicity::ones(2)), euler_derivation(2)),
                    InputError);
    CHECK_THROWS_AS(classify_universal_rank2(with("A2", "0,0,5"), euler_derivation(2)), InputError);
  }

  TEST_CASE("classification agrees with universality on the grid") {
    for (const char* name : {"A2", "B2", "maehara4"}) {
      auto family = catalog(name);
      for (const auto& mu : grid(family.size(), 12, 1)) {
        auto base = family.with_multiplicity(mu - Multiplicity::ones(mu.size()));
        if (family.size() == 3 && !is_balanced(base.multiplicity())) continue;
        auto cert = find_free_basis(family.with_multiplicity(mu));
        REQUIRE(cert.free);
        const auto& theta = cert.basis.front();
        CHECK(classify_universal_rank2(base, theta) == is_universal(theta, base));
      }
    }
  }
}
