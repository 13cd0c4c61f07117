#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "multider/arrangement_json.hpp"
#include "multider/catalog.hpp"
#include "multider/derivation.hpp"
#include "multider/errors.hpp"
#include "multider/logder.hpp"
#include "multider/multirestrict.hpp"
#include "multider/rank2.hpp"
#include "sweep.hpp"

namespace multider::cli {

using nlohmann::json;

namespace {

struct Common {
  std::string input;
  std::string mult;
  std::uint64_t seed = kDefaultSeed;
  int repetitions = kDefaultRepetitions;
  std::string format;
  bool timing = false;
};

struct Input {
  Multiarrangement ma;
  std::string catalog_name;
  std::vector<Scalar> params;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError("invalid JSON in " + what + ": " + e.what());
  }
}

// Inline JSON if it looks like JSON, otherwise a file path.
json json_argument(const std::string& value, const std::string& what) {
  auto first = value.find_first_not_of(" \t\n");
  if (first != std::string::npos && (value[first] == '{' || value[first] == '[')) {
    return parse_json_text(value, what);
  }
  return parse_json_text(read_file(value), what + " '" + value + "'");
}

Input load_input(const Common& c) {
  Input in;
  const std::string prefix = "catalog:";
  if (c.input.rfind(prefix, 0) == 0) {
    std::string rest = c.input.substr(prefix.size());
    auto colon = rest.find(':');
    in.catalog_name = rest.substr(0, colon);
    if (colon != std::string::npos) {
      std::stringstream ss(rest.substr(colon + 1));
      std::string item;
      while (std::getline(ss, item, ',')) in.params.push_back(parse_scalar(item));
    }
    in.ma = catalog(in.catalog_name, in.params);
  } else {
    in.ma = multiarrangement_from_json(json_argument(c.input, "input"));
  }
  if (!c.mult.empty()) {
    Multiplicity m = parse_multiplicity(c.mult);
    if (m.size() != in.ma.size()) {
      throw DimensionMismatch("--mult has " + std::to_string(m.size()) + " entries for " +
                              std::to_string(in.ma.size()) + " hyperplanes");
    }
    in.ma = in.ma.with_multiplicity(m);
  }
  return in;
}

std::optional<Filtration> load_filtration(const std::string& spec, const Input& in) {
  if (spec.empty() || spec.rfind("catalog", 0) == 0) {
    std::size_t index = 0;
    if (spec.size() > 8 && spec[7] == ':') index = std::stoul(spec.substr(8));
    if (in.catalog_name.empty()) {
      if (spec.empty()) return std::nullopt;
      throw InputError("shipped filtrations need a catalog input");
    }
    auto shipped = catalog_filtrations(in.catalog_name, in.params);
    if (index >= shipped.size()) {
      if (spec.empty()) return std::nullopt;
      throw InputError("catalog '" + in.catalog_name + "' has no filtration " + std::to_string(index));
    }
    return Filtration(shipped[index]);
  }
  json j = json_argument(spec, "filtration");
  if (j.is_object() && j.contains("filtration")) j = j["filtration"];
  try {
    return Filtration(j.get<FiltrationLevels>());
  } catch (const json::exception& e) {
    throw InputError(std::string("filtration must be a list of index lists: ") + e.what());
  }
}

json filtration_json(const Filtration& f) {
  json levels = json::array();
  for (std::size_t i = 0; i < f.length(); ++i) levels.push_back(f.level(i));
  return levels;
}

json derivation_json(const Derivation& theta, const Arrangement& a) {
  return coefficient_strings(theta, a.variable_names());
}

json base_report(const std::string& command, const Common& c, const Input& in) {
  json r;
  r["command"] = command;
  r["input"] = to_json(in.ma);
  if (!in.catalog_name.empty()) r["catalog"] = in.catalog_name;
  r["randomized"] = {{"seed", c.seed}, {"repetitions", c.repetitions}};
  return r;
}

void emit(const json& report, const std::string& format, std::ostream& out) {
  if (format == "tsv") {
    for (const auto& [key, value] : report.items()) {
      out << key << '\t' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  } else {
    out << report.dump(2) << '\n';
  }
}

FreenessOptions freeness_options(const Common& c) {
  FreenessOptions fo;
  fo.seed = c.seed;
  fo.repetitions = c.repetitions;
  return fo;
}

json certificate_json(const FreenessCertificate& cert, const Arrangement& a) {
  json tuples = json::array();
  for (const auto& t : cert.search_log) {
    json jt = {{"degrees", t.degrees}, {"outcome", t.outcome}};
    if (t.mismatch_degree >= 0) jt["mismatch_degree"] = t.mismatch_degree;
    tuples.push_back(jt);
  }
  json r;
  r["free"] = cert.free;
  r["exponents"] = cert.free ? json(cert.exponents) : json(nullptr);
  if (cert.free) {
    json basis = json::array();
    for (const auto& b : cert.basis) basis.push_back(derivation_json(b, a));
    r["certificate"] = {{"variables", a.variable_names()}, {"basis", basis}, {"c", scalar_to_json(cert.c)}};
  }
  r["search"] = {{"mode", to_string(cert.mode)}, {"dimensions", cert.dimensions}, {"tuples", tuples}};
  return r;
}

int cmd_free(const std::string& name, const Common& c, std::ostream& out, json& report) {
  Input in = load_input(c);
  report = base_report(name, c, in);
  auto cert = find_free_basis(in.ma, freeness_options(c));
  report.update(certificate_json(cert, in.ma.arrangement()));
  (void)out;
  return cert.free ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact logarithmic derivation modules of multiarrangements", "multider-cli"};
  app.require_subcommand(1);
  Common c;
  std::optional<int> max_degree;
  std::optional<int> degree;
  std::string theta_arg;
  std::optional<std::size_t> hyperplane;
  bool want_b = false;
  bool want_noncritical = false;
  bool want_obstruction = false;
  std::string filtration_arg;
  std::string ranges_arg;
  std::string predicates_arg = "free";
  int jobs = 1;
  std::size_t max_rows = 100000;
  std::optional<int> max_order;
  bool symmetry = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", c.input, "file path, inline JSON, or catalog:NAME[:params]")->required();
    sub->add_option("--mult", c.mult, "comma-separated multiplicity");
    sub->add_option("--seed", c.seed, "seed for randomized determinant checks");
    sub->add_option("--repetitions", c.repetitions, "randomized determinant trials")->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_flag("--timing", c.timing, "add wall-clock timing to the report");
    return sub;
  };

  std::map<std::string, std::function<int(json&)>> handlers;
  auto query = [&](const std::string& name, const std::string& help, std::function<int(json&)> body) {
    CLI::App* sub = add_common(app.add_subcommand(name, help));
    handlers[name] = std::move(body);
    return sub;
  };

  query("exponents", "exponents of D(A,m) with a Saito certificate",
        [&](json& r) { return cmd_free("exponents", c, out, r); });
  query("is-free", "decide freeness of D(A,m)", [&](json& r) { return cmd_free("is-free", c, out, r); });

  auto* gd = query("graded-dim", "dimensions of graded pieces of D(A,m)", [&](json& r) {
    Input in = load_input(c);
    r = base_report("graded-dim", c, in);
    if (degree) {
      auto piece = graded_piece(in.ma, *degree);
      json basis = json::array();
      for (const auto& b : piece.basis) basis.push_back(derivation_json(b, in.ma.arrangement()));
      r["degree"] = *degree;
      r["dimension"] = piece.dimension();
      r["variables"] = in.ma.arrangement().variable_names();
      r["basis"] = basis;
    } else if (max_degree) {
      if (*max_degree < 0) throw InputError("--max-degree must be nonnegative");
      r["max_degree"] = *max_degree;
      r["dimensions"] = hilbert_dims(in.ma, *max_degree);
    } else {
      throw InputError("graded-dim needs --max-degree or --degree");
    }
    return kExitOk;
  });
  gd->add_option("--max-degree", max_degree, "largest degree");
  gd->add_option("--degree", degree, "single degree, with a basis");

  auto* crit = query("is-critical", "decide k-criticality of (A,m)", [&](json& r) {
    Input in = load_input(c);
    r = base_report("is-critical", c, in);
    bool v = is_k_critical(in.ma, *degree);
    r["degree"] = *degree;
    r["critical"] = v;
    return v ? kExitOk : kExitNegative;
  });
  crit->add_option("--degree", degree, "k")->required();

  query("find-universal", "search for an m-universal derivation; --mult is m", [&](json& r) {
    Input in = load_input(c);
    r = base_report("find-universal", c, in);
    r["base_multiplicity"] = in.ma.multiplicity().values();
    r["multiplicity"] = in.ma.multiplicity().plus_one().values();
    auto theta = find_universal(in.ma, freeness_options(c));
    r["found"] = theta.has_value();
    if (theta) {
      r["degree"] = *theta->degree();
      r["variables"] = in.ma.arrangement().variable_names();
      r["theta"] = derivation_json(*theta, in.ma.arrangement());
    }
    return theta ? kExitOk : kExitNegative;
  });

  auto* iu = query("is-universal", "check a derivation for m-universality; --mult is m", [&](json& r) {
    Input in = load_input(c);
    r = base_report("is-universal", c, in);
    json coeffs = json_argument(theta_arg, "theta");
    if (coeffs.is_object() && coeffs.contains("theta")) coeffs = coeffs["theta"];
    if (!coeffs.is_array()) throw InputError("--theta must be a JSON list of coefficient strings");
    std::vector<std::string> strs;
    for (const auto& e : coeffs) {
      if (!e.is_string()) throw InputError("--theta entries must be strings");
      strs.push_back(e.get<std::string>());
    }
    Derivation theta = derivation_from_strings(strs, in.ma.arrangement().variable_names());
    if (theta.dimension() != in.ma.dimension()) throw DimensionMismatch("--theta has the wrong number of coefficients");
    auto check = check_universal(theta, in.ma);
    r["base_multiplicity"] = in.ma.multiplicity().values();
    r["universal"] = check.universal;
    r["degree"] = check.degree;
    r["degree_condition"] = check.degree_condition;
    r["members"] = check.members;
    r["independent"] = check.independent;
    return check.universal ? kExitOk : kExitNegative;
  });
  iu->add_option("--theta", theta_arg, "JSON list of coefficients, inline or file")->required();

  query("delta", "exponent gap of a rank-2 multiarrangement", [&](json& r) {
    Input in = load_input(c);
    r = base_report("delta", c, in);
    auto dv = delta(in.ma);
    r["exponents"] = {dv.d1, dv.d2};
    r["delta"] = dv.gap();
    r["balanced"] = is_balanced(in.ma);
    return kExitOk;
  });

  query("classify-component", "locate the rank-2 lattice component of m", [&](json& r) {
    Input in = load_input(c);
    r = base_report("classify-component", c, in);
    auto cc = classify_component(in.ma);
    r["component"] = cc.infinite ? "infinite" : "finite";
    if (cc.infinite) r["dominating"] = cc.dominating;
    r["query_delta"] = cc.query_delta;
    r["peak"] = cc.peak.values();
    r["peak_delta"] = cc.peak_delta;
    r["distance"] = cc.distance;
    json path = json::array();
    for (const auto& p : cc.path) path.push_back(p.values());
    r["path"] = path;
    return kExitOk;
  });

  auto* er = query("euler-restrict", "Euler multiplicity of the restriction to a hyperplane", [&](json& r) {
    Input in = load_input(c);
    r = base_report("euler-restrict", c, in);
    r["hyperplane"] = *hyperplane;
    auto res = euler_multiplicity(in.ma, *hyperplane);
    json flats = json::array();
    for (std::size_t i = 0; i < res.flats.size(); ++i) {
      const auto& w = res.flats[i];
      flats.push_back({{"hyperplanes", w.flat.hyperplanes},
                       {"local_order", w.local_order},
                       {"theta_degree", w.theta_degree},
                       {"psi_degree", w.psi_degree},
                       {"euler_multiplicity", res.multiplicity[i]}});
    }
    r["flats"] = flats;
    r["euler_multiplicity"] = res.multiplicity;
    r["order"] = res.order();
    int code = kExitOk;
    if (want_b) {
      auto b = b_polynomial(in.ma, *hyperplane);
      json terms = json::array();
      for (const auto& t : b.terms) {
        terms.push_back({{"hyperplanes", t.flat.hyperplanes},
                         {"hx", t.hx},
                         {"exponents_before", t.exponents_before},
                         {"exponents_after", t.exponents_after},
                         {"dx", t.dx},
                         {"exponent", t.exponent}});
      }
      r["b_polynomial"] = {{"m0", b.m0},
                           {"terms", terms},
                           {"polynomial", to_string(b.b, in.ma.arrangement().variable_names())},
                           {"degree", b.degree}};
    }
    if (want_noncritical) {
      auto v = noncritical_criterion(in.ma, *hyperplane);
      r["noncritical"] = {{"holds", v.holds}, {"exponents", v.exponents}, {"restricted_order", v.restricted_order}};
      if (!v.holds) code = kExitNegative;
    }
    return code;
  });
  er->add_option("--hyperplane", hyperplane, "index of H0")->required();
  er->add_flag("--b-polynomial", want_b, "treat the multiplicity as m+1 and report B");
  er->add_flag("--noncritical", want_noncritical, "evaluate the non-criticality criterion at H0");

  auto* ss = query("check-ss", "supersolvable multiplicity test along a filtration", [&](json& r) {
    Input in = load_input(c);
    r = base_report("check-ss", c, in);
    auto f = load_filtration(filtration_arg, in);
    if (!f) throw InputError("check-ss needs --filtration");
    validate_filtration(in.ma.arrangement(), *f);
    r["filtration"] = filtration_json(*f);
    bool v = check_supersolvable(in.ma, *f);
    r["supersolvable"] = v;
    if (v) r["exponents"] = supersolvable_exponents(in.ma, *f);
    if (v && want_obstruction) {
      auto o = universal_obstruction_report(in.ma, *f);
      json jo = {{"a2_balanced", o.a2_balanced},
                 {"a2_order_even", o.a2_order_even},
                 {"a2_equal_exponents", o.a2_equal_exponents},
                 {"level_increments_equal", o.level_increments_equal},
                 {"breaks_supersolvability", o.breaks_supersolvability},
                 {"all_pass", o.all_pass},
                 {"a2_exponents", o.a2_exponents},
                 {"level_increments", o.level_increments},
                 {"still_supersolvable", o.still_supersolvable}};
      if (o.universal_exists) jo["universal_exists"] = *o.universal_exists;
      if (o.universal) jo["universal"] = derivation_json(*o.universal, in.ma.arrangement());
      r["obstruction"] = jo;
    }
    return v ? kExitOk : kExitNegative;
  });
  ss->add_option("--filtration", filtration_arg, "JSON levels inline or file, or catalog[:i]");
  ss->add_flag("--obstruction", want_obstruction, "treat the multiplicity as m+1 and report obstructions");

  std::optional<SweepTable> table;
  auto* sw = query("sweep", "evaluate predicates over a multiplicity grid", [&](json& r) {
    Input in = load_input(c);
    SweepOptions o;
    o.ranges = parse_ranges(ranges_arg, in.ma.size());
    o.predicates = parse_predicates(predicates_arg);
    o.jobs = jobs;
    o.seed = c.seed;
    o.max_rows = max_rows;
    o.max_order = max_order;
    o.symmetry = symmetry;
    o.filtration = load_filtration(filtration_arg, in);
    table = run_sweep(in.ma, o);
    r = base_report("sweep", c, in);
    r.update(table_to_json(*table));
    return kExitOk;
  });
  sw->add_option("--range", ranges_arg, "a=1..4,b=1..4,... or *=lo..hi")->required();
  sw->add_option("--predicates", predicates_arg, "free,universal,balanced,delta,supersolvable");
  sw->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  sw->add_option("--max-rows", max_rows, "row budget");
  sw->add_option("--max-order", max_order, "skip rows with |m| above this");
  sw->add_flag("--symmetry", symmetry, "keep one representative per coordinate-symmetry orbit");
  sw->add_option("--filtration", filtration_arg, "JSON levels inline or file, or catalog[:i]");

  std::vector<const char*> argv{"multider-cli"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  std::string name = app.get_subcommands().front()->get_name();
  try {
    auto start = std::chrono::steady_clock::now();
    json report;
    int code = handlers.at(name)(report);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string format = c.format.empty() ? (name == "sweep" ? "tsv" : "json") : c.format;
    if (name == "sweep" && format == "tsv") {
      write_tsv(*table, out);
      if (c.timing) err << "timing_seconds\t" << seconds << '\n';
    } else {
      if (c.timing) report["timing_seconds"] = seconds;
      emit(report, format, out);
    }
    return code;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << name << ": " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace multider::cli
