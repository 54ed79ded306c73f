#ifndef SCHUBERTPD_VERIFY_HPP
#define SCHUBERTPD_VERIFY_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "schubert/perm.hpp"

namespace schubert {

enum class FamilyKind { Cohomological, K };

struct CheckRecord {
  std::string suite;     // which suite produced the check
  std::string name;      // check name within the suite
  std::string instance;  // permutation (plus indices) the check ran on
  bool pass = false;
  std::string detail;    // renderings of both sides on failure
};

struct VerificationReport {
  int n = 0;
  FamilyKind family = FamilyKind::Cohomological;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  double elapsed_seconds = 0.0;

  bool status() const;
  std::size_t failures() const;
  /// Deterministic: {n, family, seed, checks, status}; elapsed is excluded.
  std::string to_json() const;
  std::string to_table() const;
};

enum class Suite {
  Equality,
  Monk,
  Divisibility,
  Support,
  Stability,
  Pivots,
  Lub,
  Diagrams,
};

std::string to_string(Suite s);
Suite suite_from_string(const std::string& name);

/// Suites meaningful for a family: all eight cohomologically, the equality
/// and lub suites in K.
std::set<Suite> all_suites(FamilyKind family);

inline constexpr std::uint64_t kDefaultSeed = 20259;
inline constexpr int kCohomologicalCap = 6;
inline constexpr int kKCap = 4;

/// One identity check: the three routes of the family agree on pi.
CheckRecord check_equality(const Permutation& pi, int n, FamilyKind family);

/// Runs the named suites over all of S_n; checks are ordered lexicographically
/// by one-line notation, then by check name.  Failures are data, not
/// exceptions.  Refuses n above the per-family cap.
VerificationReport run_suite(int n, FamilyKind family, const std::set<Suite>& suites,
                             std::uint64_t seed = kDefaultSeed);

}  // namespace schubert

#endif
