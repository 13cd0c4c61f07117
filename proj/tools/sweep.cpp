#include "sweep.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "multider/errors.hpp"
#include "multider/rank2.hpp"

namespace multider::cli {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss{std::string(s)};
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw InputError("malformed integer '" + s + "' in range");
  }
  if (used != s.size()) throw InputError("malformed integer '" + s + "' in range");
  return v;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::vector<SweepRange> parse_ranges(std::string_view spec, std::size_t hyperplanes) {
  std::vector<std::optional<SweepRange>> slots(hyperplanes);
  std::optional<SweepRange> wildcard;
  for (const auto& item : split(spec, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("range item '" + item + "' lacks '='");
    std::string name = item.substr(0, eq);
    std::string body = item.substr(eq + 1);
    SweepRange r;
    r.name = name;
    if (auto dots = body.find(".."); dots != std::string::npos) {
      r.lo = parse_int(body.substr(0, dots));
      r.hi = parse_int(body.substr(dots + 2));
    } else {
      r.lo = r.hi = parse_int(body);
    }
    if (r.lo < 0 || r.hi < r.lo) throw InputError("range '" + item + "' is empty or negative");
    if (name == "*") {
      wildcard = r;
      continue;
    }
    if (name.size() != 1 || name[0] < 'a' || name[0] > 'z') {
      throw InputError("range names are single letters a.. or '*', got '" + name + "'");
    }
    r.hyperplane = static_cast<std::size_t>(name[0] - 'a');
    if (r.hyperplane >= hyperplanes) throw InputError("range '" + name + "' names a missing hyperplane");
    if (slots[r.hyperplane]) throw InputError("range '" + name + "' given twice");
    slots[r.hyperplane] = r;
  }
  std::vector<SweepRange> out;
  for (std::size_t h = 0; h < hyperplanes; ++h) {
    if (slots[h]) {
      out.push_back(*slots[h]);
    } else if (wildcard) {
      SweepRange r = *wildcard;
      r.hyperplane = h;
      r.name = std::string(1, static_cast<char>('a' + h));
      out.push_back(r);
    } else {
      throw InputError("no range for hyperplane " + std::to_string(h));
    }
  }
  return out;
}

std::vector<Predicate> parse_predicates(std::string_view spec) {
  std::vector<Predicate> out;
  for (const auto& p : split(spec, ',')) {
    Predicate v;
    if (p == "free") {
      v = Predicate::Free;
    } else if (p == "universal") {
      v = Predicate::Universal;
    } else if (p == "balanced") {
      v = Predicate::Balanced;
    } else if (p == "delta") {
      v = Predicate::Delta;
    } else if (p == "supersolvable") {
      v = Predicate::Supersolvable;
    } else {
      throw InputError("unknown predicate '" + p + "'");
    }
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  if (out.empty()) throw InputError("no predicates given");
  return out;
}

std::vector<Multiplicity> sweep_grid(const Multiarrangement& family, const SweepOptions& options) {
  const std::size_t n = family.size();
  if (options.ranges.size() != n) throw InputError("sweep needs one range per hyperplane");
  std::vector<std::vector<std::size_t>> perms;
  if (options.symmetry) perms = coordinate_symmetries(family.arrangement());
  // smallest order still to come after position h
  std::vector<int> tail(n + 1, 0);
  for (std::size_t h = n; h-- > 0;) tail[h] = tail[h + 1] + options.ranges[h].lo;
  const std::size_t visit_budget = options.max_rows * 64 + 1024;
  std::size_t visited = 0;
  std::vector<Multiplicity> out;
  std::vector<int> cur(n);
  std::function<void(std::size_t, int)> walk = [&](std::size_t h, int partial) {
    if (h == n) {
      if (++visited > visit_budget) throw InputError("resource bounds exceeded: grid too large");
      Multiplicity m(cur);
      if (options.symmetry && orbit_minimum(m, perms) != m) return;
      out.push_back(std::move(m));
      if (out.size() > options.max_rows) {
        throw InputError("resource bounds exceeded: more than " + std::to_string(options.max_rows) + " rows");
      }
      return;
    }
    for (int v = options.ranges[h].lo; v <= options.ranges[h].hi; ++v) {
      if (options.max_order && partial + v + tail[h + 1] > *options.max_order) break;
      cur[h] = v;
      walk(h + 1, partial + v);
    }
  };
  walk(0, 0);
  return out;
}

SweepTable run_sweep(const Multiarrangement& family, const SweepOptions& options) {
  SweepTable table;
  table.header.push_back("index");
  for (const auto& r : options.ranges) table.header.push_back(r.name);
  table.header.push_back("order");
  for (Predicate p : options.predicates) {
    switch (p) {
      case Predicate::Free:
        table.header.insert(table.header.end(), {"free", "exponents"});
        break;
      case Predicate::Universal:
        table.header.insert(table.header.end(), {"universal", "universal_degree"});
        break;
      case Predicate::Balanced:
        table.header.push_back("balanced");
        break;
      case Predicate::Delta:
        if (family.arrangement().rank() != 2) throw InputError("the delta predicate needs rank 2");
        table.header.push_back("delta");
        break;
      case Predicate::Supersolvable:
        if (!options.filtration) throw InputError("the supersolvable predicate needs --filtration");
        validate_filtration(family.arrangement(), *options.filtration);
        table.header.insert(table.header.end(), {"supersolvable", "ss_exponents"});
        break;
    }
  }
  std::vector<Multiplicity> grid = sweep_grid(family, options);
  FreenessOptions fo;
  fo.seed = options.seed;
  auto rows = parallel_map(grid.size(), options.jobs, [&](std::size_t i) {
    const Multiplicity& mu = grid[i];
    Multiarrangement ma = family.with_multiplicity(mu);
    SweepRow row;
    row.multiplicity = mu;
    for (Predicate p : options.predicates) {
      switch (p) {
        case Predicate::Free: {
          auto exps = exponents(ma, fo);
          row.fields.push_back(exps ? "1" : "0");
          row.fields.push_back(exps ? join(*exps) : "-");
          break;
        }
        case Predicate::Universal: {
          bool positive = std::all_of(mu.values().begin(), mu.values().end(), [](int v) { return v >= 1; });
          if (!positive) {
            row.fields.insert(row.fields.end(), {"-", "-"});
            break;
          }
          auto theta = find_universal(ma.with_multiplicity(mu - Multiplicity::ones(mu.size())), fo);
          row.fields.push_back(theta ? "1" : "0");
          row.fields.push_back(theta ? std::to_string(*theta->degree()) : "-");
          break;
        }
        case Predicate::Balanced:
          row.fields.push_back(is_balanced(mu) ? "1" : "0");
          break;
        case Predicate::Delta:
          row.fields.push_back(std::to_string(delta(ma).gap()));
          break;
        case Predicate::Supersolvable: {
          bool ss = check_supersolvable(ma, *options.filtration);
          row.fields.push_back(ss ? "1" : "0");
          row.fields.push_back(ss ? join(supersolvable_exponents(ma, *options.filtration)) : "-");
          break;
        }
      }
    }
    return row;
  });
  table.rows = std::move(rows);
  return table;
}

void write_tsv(const SweepTable& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.header.size(); ++i) out << (i ? "\t" : "") << table.header[i];
  out << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    out << r;
    for (int v : row.multiplicity.values()) out << '\t' << v;
    out << '\t' << row.multiplicity.order();
    for (const auto& f : row.fields) out << '\t' << f;
    out << '\n';
  }
}

nlohmann::json table_to_json(const SweepTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    nlohmann::json j;
    j["index"] = r;
    j["multiplicity"] = row.multiplicity.values();
    j["order"] = row.multiplicity.order();
    std::size_t offset = 2 + row.multiplicity.size();
    for (std::size_t f = 0; f < row.fields.size(); ++f) j[table.header[offset + f]] = row.fields[f];
    rows.push_back(std::move(j));
  }
  return {{"header", table.header}, {"rows", rows}};
}

}  // namespace multider::cli
