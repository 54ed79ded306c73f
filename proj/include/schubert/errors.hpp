#ifndef SCHUBERTPD_ERRORS_HPP
#define SCHUBERTPD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schubert {

// Malformed textual input (permutations, polynomial expressions, fixtures).
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// A precondition on mathematical inputs was violated (wrong ambient group,
// mixed coefficient rings, invalid pivot, ...).
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An identity that the theory guarantees failed to hold at runtime.  Seeing
// one of these means a bug, not bad input.
struct ConsistencyError : std::logic_error {
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// A least-upper-bound computation found no bound of the predicted length, or
// more than one minimal bound.
struct LubError : std::runtime_error {
  explicit LubError(const std::string& what) : std::runtime_error(what) {}
};

// A verification run was asked for an ambient size above the configured cap.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace schubert

#endif
