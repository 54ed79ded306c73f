#ifndef SCHUBERTPD_POLY_HPP
#define SCHUBERTPD_POLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schubert/errors.hpp"
#include "schubert/perm.hpp"

namespace schubert {

using Int = boost::multiprecision::cpp_int;

/// Two coefficient rings share one representation.  Cohomological mode is
/// Z[x1,x2,...,y1,y2,...] with nonnegative exponents; K mode is the Laurent
/// ring in the same symbols (rendered uppercase), where Xi and Yj stand for
/// the exponentials of the cohomological variables.
enum class Mode { Cohomological, K };

enum class VarFamily : unsigned char { X, Y };

struct Var {
  VarFamily family = VarFamily::X;
  int index = 1;  // >= 1
  auto operator<=>(const Var&) const = default;
};

inline Var x_var(int i) { return Var{VarFamily::X, i}; }
inline Var y_var(int j) { return Var{VarFamily::Y, j}; }

/// A sparse exponent vector: sorted (variable, nonzero exponent) pairs.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(Var v, int exp = 1);

  int exponent(Var v) const;
  long long total_degree() const;
  bool is_constant() const { return factors_.empty(); }
  bool has_negative_exponent() const;
  const std::vector<std::pair<Var, int>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& o) const;
  /// Exact monomial quotient; nullopt when an exponent would go negative.
  std::optional<Monomial> divide_nonnegative(const Monomial& o) const;

  bool operator==(const Monomial&) const = default;
  /// Plain lexicographic comparison on the (implicitly padded) exponent
  /// vector over x1 < x2 < ... < y1 < y2 < ...
  std::strong_ordering lex_compare(const Monomial& o) const;

  void set_exponent(Var v, int exp);

 private:
  std::vector<std::pair<Var, int>> factors_;
};

/// Canonical term order: total degree descending, then lexicographically by
/// exponent vector descending.  Used for storage so iteration (and hence all
/// rendering) is deterministic.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  explicit Polynomial(Mode mode = Mode::Cohomological) : mode_(mode) {}

  static Polynomial zero(Mode mode) { return Polynomial(mode); }
  static Polynomial constant(Mode mode, Int c);
  static Polynomial variable(Mode mode, Var v, int exp = 1);

  Mode mode() const { return mode_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Int, TermOrder>& terms() const { return terms_; }

  /// Maximum total degree over the terms (0 for the zero polynomial).
  long long degree() const;
  bool is_homogeneous() const;
  Int coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Int& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator*(const Polynomial& o) const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial operator*(const Int& c) const;

  bool operator==(const Polynomial& o) const = default;

 private:
  Mode mode_;
  std::map<Monomial, Int, TermOrder> terms_;
  void check_same_mode(const Polynomial& o) const;
};

/// The stated binary operation, with the mode check surfaced as DomainError.
enum class ArithOp { Add, Subtract, Multiply };
Polynomial arithmetic(const Polynomial& f, const Polynomial& g, ArithOp op);

/// Ring automorphism exchanging x_i <-> x_{i+1} (X_i <-> X_{i+1} in K mode).
Polynomial swap_x(const Polynomial& f, int i);

/// Divided difference (f - r_i f)/(x_i - x_{i+1}); cohomological mode only.
Polynomial divided_difference(const Polynomial& f, int i);

/// Isobaric Demazure operator (X_i f - X_{i+1} r_i f)/(X_i - X_{i+1});
/// K mode only.  Idempotent, and the identity on inputs symmetric in the two
/// adjacent X variables.
Polynomial isobaric_demazure(const Polynomial& f, int i);

/// Restriction to the point rho: x_i -> y_{rho(i)} (X_i -> Y_{rho(i)}).
Polynomial restrict_to_point(const Polynomial& f, const Permutation& rho);

/// { sigma in S_n : f|_sigma != 0 }, in lexicographic order.
std::vector<Permutation> support(const Polynomial& f, int n);

/// Raised when an exact division has a nonzero remainder.
struct DivisionError : std::runtime_error {
  explicit DivisionError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact quotient f/(v - t), where t must not involve v.  Implemented as
/// synthetic division treating f as univariate in v with polynomial
/// coefficients; Laurent inputs are shifted by a unit power of v first.
Polynomial divide_exact_linear(const Polynomial& f, Var v, const Polynomial& t);

/// f/(x_i - y_j), exact; cohomological mode.
Polynomial divide_exact_x_minus_y(const Polynomial& f, int i, int j);
/// f/(1 - Y_j/X_i), exact; K mode.
Polynomial divide_exact_one_minus_y_over_x(const Polynomial& f, int i, int j);

/// General exact division by leading-term reduction in the canonical order;
/// cohomological mode (used for quotients in the pure-Y subring).
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Parser for the expression grammar.  Lowercase variables select
/// cohomological mode, uppercase select K mode; mixing is an error.  An
/// expression without variables takes default_mode.
Polynomial parse_poly(std::string_view text, Mode default_mode = Mode::Cohomological);

enum class PolyFormat { Text, Latex, Json };
std::string render(const Polynomial& f, PolyFormat fmt = PolyFormat::Text);
Polynomial poly_from_json(std::string_view json_text);

}  // namespace schubert

#endif
