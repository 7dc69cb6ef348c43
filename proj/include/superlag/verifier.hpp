#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "superlag/forms.hpp"
#include "superlag/superalgebra.hpp"
#include "superlag/vector_field.hpp"

namespace superlag {

inline constexpr std::uint64_t kDefaultSeed = 20011;

/// Records named identity checks. Every superfunction identity is compared
/// by normal form and, when oracle trials are enabled, re-evaluated in
/// random concrete exterior algebras.
class IdentityVerifier {
 public:
  struct Tally {
    std::string name;
    std::size_t ran = 0;
    std::size_t passed = 0;
  };

  explicit IdentityVerifier(unsigned oracle_trials = 0, std::uint64_t seed = kDefaultSeed);

  bool equal(std::string_view check, const Superfunction& lhs, const Superfunction& rhs);
  bool equal(std::string_view check, const OneForm& lhs, const OneForm& rhs);
  bool equal(std::string_view check, const VectorField& lhs, const VectorField& rhs);
  /// Records a check decided elsewhere.
  void record(std::string_view check, bool passed);

  const std::vector<Tally>& tallies() const { return tallies_; }
  unsigned oracle_trials() const { return oracle_trials_; }
  std::size_t oracle_assertions() const { return oracle_assertions_; }
  std::size_t oracle_mismatches() const { return oracle_mismatches_; }
  bool all_passed() const;

 private:
  bool compare(const Superfunction& lhs, const Superfunction& rhs);

  unsigned oracle_trials_;
  std::mt19937_64 rng_;
  std::vector<Tally> tallies_;
  std::size_t oracle_assertions_ = 0;
  std::size_t oracle_mismatches_ = 0;
};

/// Checks lhs == rhs (recording on `verifier` when non-null) and throws
/// InconsistentIdentity when it fails.
void require_identity(IdentityVerifier* verifier, std::string_view check, const Superfunction& lhs,
                      const Superfunction& rhs);
void require_identity(IdentityVerifier* verifier, std::string_view check, const OneForm& lhs,
                      const OneForm& rhs);
void require_identity(IdentityVerifier* verifier, std::string_view check, const VectorField& lhs,
                      const VectorField& rhs);

}  // namespace superlag
