#include "multider/catalog.hpp"

#include <numeric>
#include <sstream>

#include "multider/errors.hpp"

namespace multider {

namespace {

LinearForm lf(std::initializer_list<Scalar> c) { return LinearForm(std::vector<Scalar>(c)); }

Multiarrangement simple(std::size_t dim, std::vector<LinearForm> forms) {
  std::size_t n = forms.size();
  return Multiarrangement(Arrangement(dim, std::move(forms)), Multiplicity::ones(n));
}

void expect_params(std::string_view name, const std::vector<Scalar>& params, std::size_t count) {
  if (params.size() != count) {
    throw InputError("catalog entry " + std::string(name) + " takes " + std::to_string(count) +
                     " parameter(s)");
  }
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"A2", "A3", "B2", "B3", "deletedA3", "X3", "fan2d", "maehara4"};
}

Multiarrangement catalog(std::string_view name, const std::vector<Scalar>& params) {
  if (name == "A2") {
    expect_params(name, params, 0);
    return simple(2, {lf({1, 0}), lf({0, 1}), lf({1, -1})});
  }
  if (name == "A3") {
    // x4 = 0; order H12, H13, H14, H23, H24, H34.
    expect_params(name, params, 0);
    return simple(3, {lf({1, -1, 0}), lf({1, 0, -1}), lf({1, 0, 0}), lf({0, 1, -1}),
                      lf({0, 1, 0}), lf({0, 0, 1})});
  }
  if (name == "B2") {
    expect_params(name, params, 0);
    return simple(2, {lf({1, 0}), lf({0, 1}), lf({1, -1}), lf({1, 1})});
  }
  if (name == "B3") {
    expect_params(name, params, 0);
    return simple(3, {lf({1, 0, 0}), lf({0, 1, 0}), lf({1, 1, 0}), lf({2, 1, 0}), lf({0, 0, 1}),
                      lf({0, 1, 1}), lf({1, 1, 1}), lf({2, 1, 1}), lf({2, 2, 1})});
  }
  if (name == "deletedA3") {
    expect_params(name, params, 0);
    return simple(3, {lf({0, 1, -1}), lf({0, 1, 0}), lf({1, -1, 0}), lf({1, 0, 0}), lf({1, 0, -1})});
  }
  if (name == "X3") {
    expect_params(name, params, 0);
    return simple(3, {lf({1, 0, 0}), lf({0, 1, 0}), lf({0, 0, 1}), lf({1, 1, 0}), lf({0, 1, 1}),
                      lf({1, 0, 1})});
  }
  if (name == "fan2d") {
    // default h = 4 with slopes 1..4
    std::vector<Scalar> slopes = params.empty() ? std::vector<Scalar>{1, 2, 3, 4} : params;
    std::vector<LinearForm> forms{lf({1, 0, 0}), lf({0, 1, 0}), lf({1, -1, 0})};
    for (const auto& a : slopes) forms.push_back(LinearForm({-a, 0, 1}));
    return simple(3, std::move(forms));
  }
  if (name == "maehara4") {
    Scalar t = params.empty() ? Scalar(7, 3) : params.front();
    if (params.size() > 1) throw InputError("maehara4 takes one slope");
    return simple(2, {lf({1, 0}), lf({0, 1}), lf({1, -1}), LinearForm({1, -t})});
  }
  throw InputError("unknown catalog entry '" + std::string(name) + "'");
}

Multiarrangement catalog_from_spec(std::string_view spec) {
  std::string_view name = spec;
  std::vector<Scalar> params;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    name = spec.substr(0, colon);
    std::stringstream ss{std::string(spec.substr(colon + 1))};
    std::string item;
    while (std::getline(ss, item, ',')) params.push_back(parse_scalar(item));
  }
  return catalog(name, params);
}

std::vector<FiltrationLevels> catalog_filtrations(std::string_view name,
                                                  const std::vector<Scalar>& params) {
  Multiarrangement ma = catalog(name, params);
  const std::size_t n = ma.size();
  if (name == "A2" || name == "B2" || name == "maehara4") return {{{0}, all_indices(n)}};
  if (name == "A3") return {{{0}, {0, 1, 3}, all_indices(n)}};
  if (name == "B3") return {{{0}, {0, 1, 2, 3}, all_indices(n)}};
  if (name == "deletedA3") return {{{3}, {1, 2, 3}, all_indices(n)}, {{2}, {0, 2, 4}, all_indices(n)}};
  if (name == "fan2d") return {{{0}, {0, 1, 2}, all_indices(n)}};
  return {};
}

}  // namespace multider
