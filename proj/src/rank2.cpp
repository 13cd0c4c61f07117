#include "multider/rank2.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>

#include "multider/errors.hpp"
#include "multider/logder.hpp"

namespace multider {

bool is_balanced(const Multiplicity& m) { return !dominating_hyperplane(m).has_value(); }

bool is_balanced(const Multiarrangement& ma) { return is_balanced(ma.multiplicity()); }

std::optional<std::size_t> dominating_hyperplane(const Multiplicity& m) {
  const int total = m.order();
  for (std::size_t h = 0; h < m.size(); ++h) {
    if (m[h] > total - m[h]) return h;
  }
  return std::nullopt;
}

DeltaValue delta(const Multiarrangement& ma) {
  if (ma.arrangement().rank() != 2) throw InputError("delta needs a rank-2 multiarrangement");
  FreenessCertificate cert = find_free_basis(essentialize(ma));
  if (!cert.free) throw InvariantViolation("rank-2 multiarrangement reported not free");
  return DeltaValue{cert.exponents[0], cert.exponents[1]};
}

std::pair<int, int> wakamiko_exponents(int k1, int k2, int k3) {
  if (k1 < 0 || k2 < 0 || k3 < 0) throw InputError("multiplicities must be nonnegative");
  std::array<int, 3> k{k1, k2, k3};
  std::sort(k.begin(), k.end());
  const int total = k[0] + k[1] + k[2];
  if (k[2] >= k[0] + k[1] - 1) {
    int a = k[0] + k[1];
    return {std::min(a, k[2]), std::max(a, k[2])};
  }
  return {total / 2, total - total / 2};
}

int lattice_distance(const Multiplicity& a, const Multiplicity& b) {
  if (a.size() != b.size()) throw DimensionMismatch("multiplicity length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

ComponentClassification classify_component(const Multiarrangement& ma) {
  if (ma.arrangement().rank() != 2) throw InputError("component classification needs rank 2");
  ComponentClassification out;
  out.query = ma.multiplicity();
  out.query_delta = delta(ma).gap();
  if (out.query_delta == 0) throw InputError("delta is zero: the multiplicity lies in no component");
  out.path.push_back(out.query);
  if (auto h = dominating_hyperplane(ma.multiplicity())) {
    out.infinite = true;
    out.dominating = *h;
    out.peak = out.query;
    out.peak_delta = out.query_delta;
    return out;
  }
  Multiplicity cur = out.query;
  int cur_delta = out.query_delta;
  for (;;) {
    bool moved = false;
    for (std::size_t h = 0; h < cur.size() && !moved; ++h) {
      for (int step : {+1, -1}) {
        std::vector<int> v = cur.values();
        v[h] += step;
        if (v[h] < 0) continue;
        Multiplicity cand(std::move(v));
        if (!is_balanced(cand)) continue;
        int d = delta(ma.with_multiplicity(cand)).gap();
        if (d == cur_delta + 1) {
          cur = cand;
          cur_delta = d;
          out.path.push_back(cur);
          moved = true;
          break;
        }
      }
    }
    if (!moved) break;
  }
  out.peak = cur;
  out.peak_delta = cur_delta;
  out.distance = lattice_distance(out.query, out.peak);
  if (out.query_delta != out.peak_delta - out.distance) {
    throw InvariantViolation("delta does not drop by the distance to the peak");
  }
  return out;
}

std::vector<Multiplicity> component_members(const Multiarrangement& peak, int peak_delta) {
  std::vector<Multiplicity> out;
  const Multiplicity& p = peak.multiplicity();
  std::vector<int> cur = p.values();
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
    if (i == cur.size()) {
      Multiplicity m(cur);
      if (is_balanced(m)) out.push_back(std::move(m));
      return;
    }
    for (int s = -budget; s <= budget; ++s) {
      int v = p[i] + s;
      if (v < 0) continue;
      cur[i] = v;
      rec(i + 1, budget - std::abs(s));
    }
    cur[i] = p[i];
  };
  if (peak_delta > 0) rec(0, peak_delta - 1);
  return out;
}

bool classify_universal_rank2(const Multiarrangement& ma_base, const Derivation& theta) {
  if (ma_base.dimension() != 2 || !is_essential(ma_base.arrangement())) {
    throw InputError("rank-2 classification needs an essential arrangement in two variables");
  }
  const int lines = static_cast<int>(ma_base.size());
  if (lines < 3) throw InputError("hypotheses violated: a rank-2 arrangement with fewer than 3 lines is reducible");
  if (lines == 3 && !is_balanced(ma_base)) {
    throw InputError("hypotheses violated: three lines with an unbalanced multiplicity");
  }
  auto deg = theta.degree();
  if (!deg) throw InputError("theta must be nonzero and homogeneous");
  Multiarrangement next = ma_base.with_multiplicity(ma_base.multiplicity().plus_one());
  if (!membership(theta, next)) throw InputError("theta is not in D(A,m+1)");
  if (!is_balanced(next)) return false;
  DeltaValue dv = delta(next);
  return dv.d1 == *deg && dv.d2 == *deg + lines - 2;
}

}  // namespace multider
