#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multider/polynomial.hpp"

namespace multider {

class Arrangement {
 public:
  Arrangement() = default;
  // Rejects forms proportional to an earlier one.
  Arrangement(std::size_t dimension, std::vector<LinearForm> forms,
              std::vector<std::string> variable_names = {});

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return forms_.size(); }
  const LinearForm& form(std::size_t i) const { return forms_.at(i); }
  const std::vector<LinearForm>& forms() const { return forms_; }
  const std::vector<std::string>& variable_names() const { return names_; }
  std::size_t rank() const;
  std::optional<std::size_t> index_of(const LinearForm& f) const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<LinearForm> forms_;
  std::vector<std::string> names_;
};

class Multiplicity {
 public:
  Multiplicity() = default;
  explicit Multiplicity(std::vector<int> values);
  static Multiplicity ones(std::size_t n);
  static Multiplicity zeros(std::size_t n);
  static Multiplicity constant(std::size_t n, int value);
  static Multiplicity indicator(std::size_t n, std::size_t h);

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_.at(i); }
  const std::vector<int>& values() const { return values_; }
  int order() const;
  bool is_zero() const { return order() == 0; }

  Multiplicity operator+(const Multiplicity& other) const;
  // Throws if an entry would go negative.
  Multiplicity operator-(const Multiplicity& other) const;
  Multiplicity plus_one() const { return *this + ones(size()); }
  Multiplicity incremented(std::size_t h) const { return *this + indicator(size(), h); }
  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
  friend auto operator<=>(const Multiplicity&, const Multiplicity&) = default;

 private:
  std::vector<int> values_;
};

bool pointwise_leq(const Multiplicity& a, const Multiplicity& b);
std::string to_string(const Multiplicity& m);
Multiplicity parse_multiplicity(std::string_view text);

class Multiarrangement {
 public:
  Multiarrangement() = default;
  Multiarrangement(Arrangement arrangement, Multiplicity multiplicity);

  const Arrangement& arrangement() const { return arrangement_; }
  const Multiplicity& multiplicity() const { return multiplicity_; }
  std::size_t dimension() const { return arrangement_.dimension(); }
  std::size_t size() const { return arrangement_.size(); }
  int order() const { return multiplicity_.order(); }
  const LinearForm& form(std::size_t i) const { return arrangement_.form(i); }
  int mult(std::size_t i) const { return multiplicity_[i]; }

  Multiarrangement with_multiplicity(Multiplicity m) const;
  friend bool operator==(const Multiarrangement&, const Multiarrangement&) = default;

 private:
  Arrangement arrangement_;
  Multiplicity multiplicity_;
};

struct Flat {
  // Reduced row echelon basis of the forms cutting out the subspace.
  std::vector<std::vector<Scalar>> defining_forms;
  // Every hyperplane containing the subspace, ascending.
  std::vector<std::size_t> hyperplanes;

  std::size_t rank() const { return defining_forms.size(); }
  bool contains_hyperplane(std::size_t h) const;
};

// Intersection of the given hyperplanes.
Flat flat_of(const Arrangement& a, const std::vector<std::size_t>& generators);
// Codimension-2 intersections in order of first appearance over pairs (i < j).
std::vector<Flat> rank2_flats(const Arrangement& a);
// Rank-2 flats contained in hyperplane h, ordered by smallest other hyperplane.
std::vector<Flat> rank2_flats_through(const Arrangement& a, std::size_t h);

Polynomial defining_polynomial(const Multiarrangement& ma);
bool is_essential(const Arrangement& a);
int irreducible_component_count(const Arrangement& a);

Multiarrangement localize(const Multiarrangement& ma, const Flat& x);
// The listed hyperplanes (in the given order) with their multiplicities.
Multiarrangement subarrangement(const Multiarrangement& ma, const std::vector<std::size_t>& indices);
Multiarrangement delete_hyperplane(const Multiarrangement& ma, std::size_t h);
Multiarrangement increment(const Multiarrangement& ma, std::size_t h);
Multiarrangement insert_hyperplane(const Multiarrangement& ma, std::size_t position,
                                   const LinearForm& form, int multiplicity);

// Rewrites ma in coordinates of the span of its forms, so the result is
// essential in rank(ma) variables. Hyperplane order is preserved.
Multiarrangement essentialize(const Multiarrangement& ma);

// Hyperplane permutations induced by signed coordinate permutations that map
// the arrangement onto itself. Contains the identity first.
std::vector<std::vector<std::size_t>> coordinate_symmetries(const Arrangement& a);
Multiplicity permute(const Multiplicity& m, const std::vector<std::size_t>& perm);
// Lexicographically smallest image of m under the given permutations.
Multiplicity orbit_minimum(const Multiplicity& m, const std::vector<std::vector<std::size_t>>& perms);

}  // namespace multider
