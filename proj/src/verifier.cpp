#include "superlag/verifier.hpp"

#include <algorithm>

#include "superlag/error.hpp"
#include "superlag/oracle.hpp"

namespace superlag {

IdentityVerifier::IdentityVerifier(unsigned oracle_trials, std::uint64_t seed)
    : oracle_trials_(oracle_trials), rng_(seed) {}

void IdentityVerifier::record(std::string_view check, bool passed) {
  auto it = std::find_if(tallies_.begin(), tallies_.end(),
                         [&](const Tally& t) { return t.name == check; });
  if (it == tallies_.end()) {
    tallies_.push_back(Tally{std::string(check), 0, 0});
    it = std::prev(tallies_.end());
  }
  ++it->ran;
  if (passed) ++it->passed;
}

bool IdentityVerifier::compare(const Superfunction& lhs, const Superfunction& rhs) {
  const bool symbolic = lhs == rhs;
  if (oracle_trials_ == 0) return symbolic;
  ++oracle_assertions_;
  const bool concrete = oracle::check_identity(lhs, rhs, oracle_trials_, rng_());
  if (concrete != symbolic) ++oracle_mismatches_;
  return symbolic && concrete;
}

bool IdentityVerifier::equal(std::string_view check, const Superfunction& lhs, const Superfunction& rhs) {
  const bool ok = compare(lhs, rhs);
  record(check, ok);
  return ok;
}

bool IdentityVerifier::equal(std::string_view check, const OneForm& lhs, const OneForm& rhs) {
  require_same_chart(lhs.chart(), rhs.chart(), "one-form identity");
  bool ok = true;
  for (std::size_t a = 0; a < lhs.size(); ++a) ok = compare(lhs.coefficient(a), rhs.coefficient(a)) && ok;
  record(check, ok);
  return ok;
}

bool IdentityVerifier::equal(std::string_view check, const VectorField& lhs, const VectorField& rhs) {
  require_same_chart(lhs.domain(), rhs.domain(), "vector field identity");
  require_same_chart(lhs.codomain(), rhs.codomain(), "vector field identity");
  bool ok = true;
  for (std::size_t a = 0; a < lhs.size(); ++a) ok = compare(lhs.component(a), rhs.component(a)) && ok;
  record(check, ok);
  return ok;
}

bool IdentityVerifier::all_passed() const {
  return oracle_mismatches_ == 0 &&
         std::all_of(tallies_.begin(), tallies_.end(), [](const Tally& t) { return t.ran == t.passed; });
}

namespace {

template <typename T>
void require_impl(IdentityVerifier* verifier, std::string_view check, const T& lhs, const T& rhs) {
  const bool ok = verifier ? verifier->equal(check, lhs, rhs) : lhs == rhs;
  if (!ok) {
    throw InconsistentIdentity("identity '" + std::string(check) + "' failed: " + lhs.to_string() +
                               " != " + rhs.to_string());
  }
}

}  // namespace

void require_identity(IdentityVerifier* verifier, std::string_view check, const Superfunction& lhs,
                      const Superfunction& rhs) {
  require_impl(verifier, check, lhs, rhs);
}

void require_identity(IdentityVerifier* verifier, std::string_view check, const OneForm& lhs,
                      const OneForm& rhs) {
  require_impl(verifier, check, lhs, rhs);
}

void require_identity(IdentityVerifier* verifier, std::string_view check, const VectorField& lhs,
                      const VectorField& rhs) {
  require_impl(verifier, check, lhs, rhs);
}

}  // namespace superlag
