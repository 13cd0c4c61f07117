#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multider/arrangement.hpp"
#include "multider/derivation.hpp"

namespace multider {

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr int kDefaultRepetitions = 8;

bool membership(const Derivation& theta, const Multiarrangement& ma);

struct GradedPiece {
  Multiarrangement multiarrangement;
  int degree = 0;
  std::vector<Derivation> basis;

  std::size_t dimension() const { return basis.size(); }
};

GradedPiece graded_piece(const Multiarrangement& ma, int k);
std::size_t graded_dimension(const Multiarrangement& ma, int k);
std::vector<std::size_t> hilbert_dims(const Multiarrangement& ma, int max_degree);

struct SaitoResult {
  bool holds = false;
  Scalar c = 0;
};

// Throws MembershipError if some theta is not in D(ma).
SaitoResult saito_check(const std::vector<Derivation>& thetas, const Multiarrangement& ma);

enum class RefutationMode { None, Hilbert, Randomized, Symbolic };
std::string to_string(RefutationMode mode);

struct TupleRecord {
  std::vector<int> degrees;
  // "hilbert" with the first degree where the predicted dimension differs,
  // "randomized-nonzero", "symbolic-nonzero" or "symbolic-zero".
  std::string outcome;
  int mismatch_degree = -1;
};

struct FreenessOptions {
  std::uint64_t seed = kDefaultSeed;
  int repetitions = kDefaultRepetitions;
};

struct FreenessCertificate {
  bool free = false;
  std::vector<Derivation> basis;
  std::vector<int> exponents;
  Scalar c = 0;
  std::vector<TupleRecord> search_log;
  RefutationMode mode = RefutationMode::None;
  std::vector<std::size_t> dimensions;  // dim D_k for k = 0.. as far as computed
  std::uint64_t seed = kDefaultSeed;
  int repetitions = kDefaultRepetitions;
};

FreenessCertificate find_free_basis(const Multiarrangement& ma, const FreenessOptions& options = {});
std::optional<std::vector<int>> exponents(const Multiarrangement& ma, const FreenessOptions& options = {});

bool is_k_critical(const Multiarrangement& ma, int k);

struct UniversalityCheck {
  bool universal = false;
  bool degree_condition = false;
  bool members = false;
  bool independent = false;
  int degree = 0;
};

// ma_base carries m; theta is tested against D(m+1).
UniversalityCheck check_universal(const Derivation& theta, const Multiarrangement& ma_base);
bool is_universal(const Derivation& theta, const Multiarrangement& ma_base);

std::optional<Derivation> find_universal(const Multiarrangement& ma_base,
                                         const FreenessOptions& options = {});

// Predicted dim of D_k for a free module with the given exponents.
std::size_t free_hilbert_value(const std::vector<int>& exponents, std::size_t n, int k);

}  // namespace multider
