#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "multider/arrangement.hpp"
#include "multider/catalog.hpp"
#include "multider/derivation.hpp"

namespace multider {

class Filtration {
 public:
  explicit Filtration(FiltrationLevels levels);
  const FiltrationLevels& levels() const { return levels_; }
  std::size_t length() const { return levels_.size(); }
  const std::vector<std::size_t>& level(std::size_t i) const { return levels_.at(i); }

 private:
  FiltrationLevels levels_;
};

// Throws InputError unless the chain has ranks 1, 2, ..., ends at the whole
// arrangement, and every step is modular in the combinatorial sense.
void validate_filtration(const Arrangement& a, const Filtration& f);

// A basis of a rank-2 module with psi divisible by alpha0 and theta not.
// Both live in the two quotient coordinates of the localization.
struct Rank2Basis {
  Derivation theta;
  Derivation psi;
  int theta_degree = 0;
  int psi_degree = 0;
};

Rank2Basis special_rank2_basis(const Multiarrangement& local, std::size_t alpha0_index);

struct FlatWitness {
  Flat flat;
  int local_order = 0;
  int theta_degree = 0;
  int psi_degree = 0;
  bool psi_divisible = false;
  bool theta_divisible = false;
};

struct EulerRestriction {
  std::size_t h0 = 0;
  std::vector<FlatWitness> flats;
  std::vector<int> multiplicity;  // one entry per flat
  int order() const;
};

EulerRestriction euler_multiplicity(const Multiarrangement& ma, std::size_t h0);

struct BFlatTerm {
  Flat flat;
  std::size_t hx = 0;
  std::vector<int> exponents_before;
  std::vector<int> exponents_after;
  int dx = 0;
  int exponent = 0;
};

struct BPolynomialData {
  std::size_t h0 = 0;
  int m0 = 0;
  std::vector<BFlatTerm> terms;
  Polynomial b;
  int degree = 0;
};

// ma carries m+1.
BPolynomialData b_polynomial(const Multiarrangement& ma, std::size_t h0);
// f lies in the ideal (alpha0^m0, B).
bool in_b_ideal(const Polynomial& f, const BPolynomialData& data, const Arrangement& a);

struct NoncriticalVerdict {
  bool holds = false;
  std::vector<int> exponents;
  int restricted_order = 0;
  EulerRestriction restriction;
};

// ma carries m+1 and must be free of rank 3.
NoncriticalVerdict noncritical_criterion(const Multiarrangement& ma, std::size_t h);

bool check_supersolvable(const Multiarrangement& ma, const Filtration& f);
std::vector<int> supersolvable_exponents(const Multiarrangement& ma, const Filtration& f);

struct ObstructionReport {
  bool a2_balanced = false;
  bool a2_order_even = false;
  bool a2_equal_exponents = false;
  bool level_increments_equal = false;
  bool breaks_supersolvability = false;
  bool all_pass = false;
  std::vector<int> a2_exponents;         // of the base multiplicity m on the rank-2 level
  std::vector<int> level_increments;     // |m_i| - |m_{i-1}| of the base, i >= 3
  std::vector<std::size_t> still_supersolvable;  // H outside the rank-2 level keeping it
  std::optional<bool> universal_exists;  // set only when all conditions pass
  std::optional<Derivation> universal;
};

// ma carries m+1.
ObstructionReport universal_obstruction_report(const Multiarrangement& ma, const Filtration& f);

}  // namespace multider
