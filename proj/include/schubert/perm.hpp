#ifndef SCHUBERTPD_PERM_HPP
#define SCHUBERTPD_PERM_HPP

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/errors.hpp"

namespace schubert {

/// A permutation of the positive integers with finite support, stored in
/// one-line notation with trailing fixed points trimmed.  The identity is the
/// empty sequence.  Because of the canonical form, a permutation compares
/// equal to any of its embeddings into a larger symmetric group.
class Permutation {
 public:
  Permutation() = default;  // identity
  explicit Permutation(std::vector<int> images);

  static Permutation identity() { return Permutation(); }
  /// w_0^n, the order-reversing longest element of S_n.
  static Permutation longest(int n);
  /// The simple reflection r_i = (i, i+1).
  static Permutation simple(int i);
  static Permutation transposition(int a, int b);
  /// Digit string ("1423", values <= 9) or comma/space separated integers.
  static Permutation parse(std::string_view text);

  /// pi(k), defined for every k >= 1 (fixed beyond the stored support).
  int operator()(int k) const;
  /// Size of the canonical (trimmed) one-line form; 0 for the identity.
  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const { return images_.empty(); }
  /// True iff pi fixes every k > n.
  bool in_sn(int n) const { return size() <= n; }

  /// Number of inversions.
  long long length() const;
  Permutation inverse() const;
  /// One-line form padded with fixed points up to n (n >= size()).
  std::vector<int> one_line(int n) const;
  /// pi composed with the transposition of positions a, b (swaps the two
  /// one-line entries).
  Permutation swap_positions(int a, int b) const;
  /// Digit string when all values are <= 9, else comma separated.
  std::string to_string() const;

  friend Permutation operator*(const Permutation& pi, const Permutation& rho);
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
  void trim();
};

/// Function composition, (pi * rho)(k) = pi(rho(k)).
Permutation operator*(const Permutation& pi, const Permutation& rho);

/// All sigma in S_n covering pi in Bruhat order, sorted.
std::vector<Permutation> covers_above(const Permutation& pi, int n);

/// Bruhat order via NW rank dominance: pi <= rho iff every NW rectangle of
/// rho's permutation matrix has rank at most the corresponding one of pi's.
bool bruhat_leq(const Permutation& pi, const Permutation& rho);

/// All of S_n in lexicographic one-line order.
std::vector<Permutation> symmetric_group(int n);

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

using Diagram = std::set<Cell>;

std::string to_string(const Cell& c);
std::string to_string(const Diagram& d);

/// An n x n partial permutation matrix: at most one 1 per row and column.
struct PartialPermutation {
  int n = 0;
  std::set<Cell> ones;

  PartialPermutation(int n, std::set<Cell> ones);
  int corank() const { return n - static_cast<int>(ones.size()); }
};

/// Cells (a,b) with pi(a) > b and pi^{-1}(b) > a; its size equals length(pi).
Diagram rothe_diagram(const Permutation& pi);
/// Death-ray form for partial permutations: (a,b) is a diagram cell iff no 1
/// lies weakly North in column b nor weakly West in row a.
Diagram rothe_diagram(const PartialPermutation& p);
/// SE corners of the Rothe diagram.
Diagram essential_set(const Permutation& pi);
/// NW-closed part of the Rothe diagram: cells whose whole NW rectangle is in
/// the diagram.  Empty when (1,1) is not a diagram cell.
Diagram dominant_part(const Permutation& pi);
/// The unique extension of a corank-k partial permutation to S_{n+k} that
/// adds no Rothe diagram cells.
Permutation extend_partial(const PartialPermutation& p);

}  // namespace schubert

#endif
