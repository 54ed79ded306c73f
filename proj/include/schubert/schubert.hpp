#ifndef SCHUBERTPD_SCHUBERT_HPP
#define SCHUBERTPD_SCHUBERT_HPP

#include <map>
#include <string>
#include <vector>

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

/// prod_{i+j<=n} (x_i - y_j), the Schubert polynomial of w_0^n.
Polynomial base_schubert(int n);

/// prod_{i+j<=n} (1 - Y_j/X_i), the Grothendieck polynomial of w_0^n.
/// (The staircase is transpose-symmetric, so indexing the product by rows or
/// by columns gives the same polynomial.)
Polynomial base_grothendieck(int n);

/// A reduced word i_1...i_l with pi = r_{i_1} ... r_{i_l} (composition left
/// to right), produced by descent elimination.
std::vector<int> reduced_word(const Permutation& pi);

/// Double Schubert polynomial A_pi via A_pi = del_{pi^{-1} w_0^n} A_{w_0^n}.
Polynomial schubert_dd(const Permutation& pi, int n);

/// Double Grothendieck polynomial via isobaric Demazure operators applied
/// along a reduced word of pi^{-1} w_0^n to the K base case.
Polynomial grothendieck_demazure(const Permutation& pi, int n);

/// A finite Z[y]-combination of double Schubert polynomials.
struct BasisExpansion {
  std::map<Permutation, Polynomial> coefficients;  // no zero entries

  bool operator==(const BasisExpansion&) const = default;
  std::string to_json() const;
  /// Sum coeff_sigma * A_sigma, expanded at ambient n.
  Polynomial reconstruct(int n) const;
};

/// Equivariant Monk rule: expands (x_i - y_{pi(i)}) A_pi over Bruhat covers,
/// with covers enumerated in S_{n+1} so no terms are lost.
BasisExpansion monk_product(const Permutation& pi, int i, int n);

/// Expansion of a polynomial in the double Schubert basis over S_n, by
/// repeatedly stripping a Bruhat-minimal element of the support.
BasisExpansion expand(const Polynomial& p, int n);

}  // namespace schubert

#endif
