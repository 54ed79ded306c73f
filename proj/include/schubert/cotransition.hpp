#ifndef SCHUBERTPD_COTRANSITION_HPP
#define SCHUBERTPD_COTRANSITION_HPP

#include <map>
#include <vector>

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

/// The cell (i, pi(i)) at which a co-transition step multiplies by
/// x_i - y_{pi(i)}.
struct Pivot {
  int row = 0;
  int col = 0;
  auto operator<=>(const Pivot&) const = default;
};

/// Raised when a pivot is requested where none exists.
struct PivotError : std::runtime_error {
  explicit PivotError(const std::string& what) : std::runtime_error(what) {}
};

/// The minimal i with i + pi(i) < n (the strict triangle condition).  Errors
/// for w_0^n ("base case has no pivot") and for the boundary permutations
/// whose every one-cell touches the antidiagonal, where only the weak
/// condition of valid_pivots applies.
Pivot minimal_pivot(const Permutation& pi, int n);

/// All cells (i, pi(i)) with i + pi(i) <= n whose weak-NW rectangle, minus
/// the cell itself, lies inside dominant_part(pi).  Nonempty for every
/// pi != w_0^n; contains minimal_pivot whenever that exists.
std::vector<Pivot> valid_pivots(const Permutation& pi, int n);

/// { sigma in S_n : sigma covers pi, sigma(i) != pi(i) } for the pivot row i.
/// Every member satisfies sigma(i) > pi(i).
std::vector<Permutation> cover_terms(const Permutation& pi, const Pivot& pivot, int n);

/// A_pi by upward recursion: (x_i - y_{pi(i)}) A_pi = sum of A_sigma over
/// cover_terms, with base case A_{w_0^n}.  Memoized per call.
Polynomial cotransition_schubert(const Permutation& pi, int n);

/// The unique Bruhat-least common upper bound of S inside S_n, by exhaustive
/// scan.  Errors if the minimal bound is not unique or does not have the
/// predicted length (common member length - 1 + |S|).
Permutation lub(const std::vector<Permutation>& s, int n);

/// K-theoretic recursion: (1 - Y_{pi(i)}/X_i) A'_pi equals the inclusion-
/// exclusion sum of (-1)^(|S|-1) A'_{lub(S)} over nonempty subsets S of the
/// cover terms.
Polynomial cotransition_grothendieck(const Permutation& pi, int n);

/// Whole-group tables sharing one memo; results identical to the per-element
/// calls.
std::map<Permutation, Polynomial> cotransition_schubert_all(int n);
std::map<Permutation, Polynomial> cotransition_grothendieck_all(int n);

}  // namespace schubert

#endif
