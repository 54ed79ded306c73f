#ifndef SCHUBERTPD_PIPEDREAM_HPP
#define SCHUBERTPD_PIPEDREAM_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"

namespace schubert {

/// Crossing tiles inside the staircase { (a,b) : a+b <= n }; every other
/// tile of the quadrant is an elbow.
struct PipeDream {
  int n = 1;
  std::set<Cell> crosses;

  PipeDream(int n, std::set<Cell> crosses);
  auto operator<=>(const PipeDream&) const = default;
};

struct TraceResult {
  Permutation permutation;
  bool reduced = false;  // |crosses| == length(permutation)
};

/// Follows every pipe from its North entry.  A cross sends both strands
/// straight through, except that a pair of pipes that has already crossed
/// treats any later cross tile it meets as an elbow.  The result maps each
/// West exit row to the column label of the pipe leaving there.
TraceResult trace(const PipeDream& d);

/// All reduced pipe dreams for pi in the size-n staircase (subsets of size
/// length(pi) whose trace is pi), sorted.
std::vector<PipeDream> enumerate_reduced(const Permutation& pi, int n);

/// All subsets of the staircase whose (crossings-ignored-after-the-first)
/// trace is pi; includes the reduced dreams.
std::vector<PipeDream> enumerate_nonreduced(const Permutation& pi, int n);

/// Sum over reduced dreams of prod (x_row - y_col).
Polynomial pipe_polynomial(const Permutation& pi, int n);

/// Sum over nonreduced dreams of (-1)^(|D|-l(pi)) prod (1 - Y_col/X_row).
Polynomial grothendieck_pipe_polynomial(const Permutation& pi, int n);

enum class PipeStyle { Ascii, Unicode };

/// Header of column labels, then one line per row: the traced permutation
/// value in a left gutter, then '+' (cross) or '.' (elbow) per staircase
/// cell, blanks outside.
std::string render_pipe_dream(const PipeDream& d, PipeStyle style = PipeStyle::Ascii);
PipeDream parse_pipe_dream_ascii(std::string_view text);

/// Fixture format: "n=<int>" then one "(row,col)" line per cross, row-major.
std::string to_fixture(const PipeDream& d);
PipeDream parse_pipe_dream(std::string_view fixture);

}  // namespace schubert

#endif
