#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "multider/arrangement.hpp"
#include "multider/derivation.hpp"

namespace multider {

struct DeltaValue {
  int d1 = 0;
  int d2 = 0;
  int gap() const { return d2 - d1; }
  friend bool operator==(const DeltaValue&, const DeltaValue&) = default;
};

bool is_balanced(const Multiplicity& m);
bool is_balanced(const Multiarrangement& ma);
// The H with m(H) greater than the sum of the others, if any.
std::optional<std::size_t> dominating_hyperplane(const Multiplicity& m);

// Exponent pair of a rank-2 multiarrangement (quotiented to two variables
// if it lives in a bigger space).
DeltaValue delta(const Multiarrangement& ma);

// Exponents of the A2 multiarrangement with multiplicities k1, k2, k3 (any order).
std::pair<int, int> wakamiko_exponents(int k1, int k2, int k3);

int lattice_distance(const Multiplicity& a, const Multiplicity& b);

struct ComponentClassification {
  bool infinite = false;
  std::size_t dominating = 0;  // meaningful when infinite
  Multiplicity query;
  int query_delta = 0;
  Multiplicity peak;
  int peak_delta = 0;
  int distance = 0;
  std::vector<Multiplicity> path;  // query first, peak last
};

ComponentClassification classify_component(const Multiarrangement& ma);

// Balanced multiplicities at distance < peak_delta from the peak.
std::vector<Multiplicity> component_members(const Multiarrangement& peak, int peak_delta);

// Right-hand side of the rank-2 classification for theta in D(m+1).
bool classify_universal_rank2(const Multiarrangement& ma_base, const Derivation& theta);

}  // namespace multider
