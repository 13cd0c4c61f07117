#include "multider/arrangement_json.hpp"

#include "multider/errors.hpp"

namespace multider {

nlohmann::json scalar_to_json(const Scalar& s) {
  if (is_integer(s) && s.get_num().fits_slong_p()) return s.get_num().get_si();
  return format_scalar(s);
}

Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw InputError("expected an integer or a \"p/q\" string, got " + j.dump());
}

nlohmann::json to_json(const Multiarrangement& ma) {
  nlohmann::json j;
  j["variables"] = ma.arrangement().variable_names();
  j["hyperplanes"] = nlohmann::json::array();
  for (std::size_t i = 0; i < ma.size(); ++i) {
    nlohmann::json form = nlohmann::json::array();
    for (const auto& c : ma.form(i).coefficients()) form.push_back(scalar_to_json(c));
    j["hyperplanes"].push_back({{"form", form}, {"multiplicity", ma.mult(i)}});
  }
  return j;
}

Multiarrangement multiarrangement_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("hyperplanes") || !j["hyperplanes"].is_array()) {
    throw InputError("multiarrangement JSON needs a \"hyperplanes\" array");
  }
  std::vector<std::string> names;
  if (j.contains("variables")) {
    for (const auto& v : j["variables"]) {
      if (!v.is_string()) throw InputError("variable names must be strings");
      names.push_back(v.get<std::string>());
    }
  }
  std::vector<LinearForm> forms;
  std::vector<int> mult;
  std::size_t dim = names.size();
  for (const auto& h : j["hyperplanes"]) {
    if (!h.is_object() || !h.contains("form") || !h["form"].is_array()) {
      throw InputError("each hyperplane needs a \"form\" array");
    }
    std::vector<Scalar> c;
    for (const auto& x : h["form"]) c.push_back(scalar_from_json(x));
    if (dim == 0) dim = c.size();
    if (c.size() != dim) throw DimensionMismatch("hyperplane form has the wrong length");
    forms.emplace_back(std::move(c));
    int m = 1;
    if (h.contains("multiplicity")) {
      if (!h["multiplicity"].is_number_integer()) throw InputError("multiplicity must be an integer");
      m = h["multiplicity"].get<int>();
    }
    mult.push_back(m);
  }
  if (dim == 0) throw InputError("cannot infer the dimension of an empty arrangement");
  return Multiarrangement(Arrangement(dim, std::move(forms), std::move(names)),
                          Multiplicity(std::move(mult)));
}

}  // namespace multider
