#include "schubert/poly.hpp"

#include <algorithm>

namespace schubert {

Monomial Monomial::variable(Var v, int exp) {
  Monomial m;
  if (exp != 0) m.factors_.push_back({v, exp});
  return m;
}

int Monomial::exponent(Var v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

long long Monomial::total_degree() const {
  long long d = 0;
  for (const auto& [w, e] : factors_) d += e;
  return d;
}

bool Monomial::has_negative_exponent() const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [](const auto& f) { return f.second < 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) out.factors_.push_back({a->first, e});
      ++a, ++b;
    }
  }
  return out;
}

std::optional<Monomial> Monomial::divide_nonnegative(const Monomial& o) const {
  Monomial out;
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      if (a->second < 0) return std::nullopt;
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      return std::nullopt;  // divisor has a variable the dividend lacks
    } else {
      int e = a->second - b->second;
      if (e < 0) return std::nullopt;
      if (e != 0) out.factors_.push_back({a->first, e});
      ++a, ++b;
    }
  }
  return out;
}

std::strong_ordering Monomial::lex_compare(const Monomial& o) const {
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    Var va = (a != factors_.end()) ? a->first : b->first;
    Var vb = (b != o.factors_.end()) ? b->first : a->first;
    // The earlier variable decides; a missing entry counts as exponent 0.
    Var v = std::min(va, vb);
    int ea = (a != factors_.end() && a->first == v) ? a->second : 0;
    int eb = (b != o.factors_.end() && b->first == v) ? b->second : 0;
    if (ea != eb) return ea <=> eb;
    if (a != factors_.end() && a->first == v) ++a;
    if (b != o.factors_.end() && b->first == v) ++b;
  }
  return std::strong_ordering::equal;
}

void Monomial::set_exponent(Var v, int exp) {
  auto it = std::find_if(factors_.begin(), factors_.end(),
                         [&](const auto& f) { return f.first == v; });
  if (it != factors_.end()) {
    if (exp == 0)
      factors_.erase(it);
    else
      it->second = exp;
    return;
  }
  if (exp == 0) return;
  auto pos = std::lower_bound(factors_.begin(), factors_.end(), v,
                              [](const auto& f, const Var& w) { return f.first < w; });
  factors_.insert(pos, {v, exp});
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  long long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  return a.lex_compare(b) == std::strong_ordering::greater;
}

Polynomial Polynomial::constant(Mode mode, Int c) {
  Polynomial p(mode);
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(Mode mode, Var v, int exp) {
  if (mode == Mode::Cohomological && exp < 0)
    throw DomainError("negative exponent in cohomological mode");
  Polynomial p(mode);
  p.add_term(Monomial::variable(v, exp), 1);
  return p;
}

long long Polynomial::degree() const {
  long long d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    long long dm = m.total_degree();
    if (first || dm > d) d = dm;
    first = false;
  }
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  long long d = terms_.begin()->first.total_degree();
  for (const auto& [m, c] : terms_)
    if (m.total_degree() != d) return false;
  return true;
}

Int Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  if (mode_ == Mode::Cohomological && m.has_negative_exponent())
    throw DomainError("negative exponent in cohomological mode");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_mode(const Polynomial& o) const {
  if (mode_ != o.mode_) throw DomainError("polynomial mode mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial out(mode_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_mode(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_mode(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_mode(o);
  Polynomial out(mode_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator*(const Int& c) const {
  Polynomial out(mode_);
  if (c == 0) return out;
  for (const auto& [m, k] : terms_) out.add_term(m, k * c);
  return out;
}

Polynomial arithmetic(const Polynomial& f, const Polynomial& g, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return f + g;
    case ArithOp::Subtract: return f - g;
    case ArithOp::Multiply: return f * g;
  }
  throw DomainError("unknown arithmetic op");
}

Polynomial swap_x(const Polynomial& f, int i) {
  if (i < 1) throw DomainError("swap_x index must be >= 1");
  Polynomial out(f.mode());
  for (const auto& [m, c] : f.terms()) {
    Monomial mm = m;
    int a = mm.exponent(x_var(i)), b = mm.exponent(x_var(i + 1));
    mm.set_exponent(x_var(i), b);
    mm.set_exponent(x_var(i + 1), a);
    out.add_term(mm, c);
  }
  return out;
}

Polynomial divided_difference(const Polynomial& f, int i) {
  if (f.mode() != Mode::Cohomological)
    throw DomainError("divided_difference requires cohomological mode");
  Polynomial num = f - swap_x(f, i);
  try {
    return divide_exact_linear(num, x_var(i), Polynomial::variable(f.mode(), x_var(i + 1)));
  } catch (const DivisionError& e) {
    throw ConsistencyError(std::string("divided difference left a remainder: ") + e.what());
  }
}

Polynomial isobaric_demazure(const Polynomial& f, int i) {
  if (f.mode() != Mode::K) throw DomainError("isobaric_demazure requires K mode");
  Polynomial xi = Polynomial::variable(Mode::K, x_var(i));
  Polynomial xi1 = Polynomial::variable(Mode::K, x_var(i + 1));
  Polynomial num = xi * f - xi1 * swap_x(f, i);
  try {
    return divide_exact_linear(num, x_var(i), xi1);
  } catch (const DivisionError& e) {
    throw ConsistencyError(std::string("isobaric Demazure left a remainder: ") + e.what());
  }
}

Polynomial restrict_to_point(const Polynomial& f, const Permutation& rho) {
  Polynomial out(f.mode());
  for (const auto& [m, c] : f.terms()) {
    Monomial mm;
    for (const auto& [v, e] : m.factors()) {
      Var w = (v.family == VarFamily::X) ? y_var(rho(v.index)) : v;
      mm.set_exponent(w, mm.exponent(w) + e);
    }
    out.add_term(mm, c);
  }
  return out;
}

std::vector<Permutation> support(const Polynomial& f, int n) {
  std::vector<Permutation> out;
  for (const Permutation& sigma : symmetric_group(n))
    if (!restrict_to_point(f, sigma).is_zero()) out.push_back(sigma);
  return out;
}

Polynomial divide_exact_linear(const Polynomial& f, Var v, const Polynomial& t) {
  for (const auto& [m, c] : t.terms())
    if (m.exponent(v) != 0) throw DomainError("divisor tail involves the distinguished variable");
  if (f.is_zero()) return f;

  // Split f by the exponent of v: exponent -> coefficient polynomial.
  std::map<int, Polynomial> coeffs;
  int kmin = 0, kmax = 0;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    int k = m.exponent(v);
    Monomial rest = m;
    rest.set_exponent(v, 0);
    auto it = coeffs.find(k);
    if (it == coeffs.end()) it = coeffs.emplace(k, Polynomial(f.mode())).first;
    it->second.add_term(rest, c);
    if (first || k < kmin) kmin = k;
    if (first || k > kmax) kmax = k;
    first = false;
  }
  const int shift = std::min(kmin, 0);  // Laurent inputs slide up to exponent 0
  const int d = kmax - shift;
  if (d == 0) throw DivisionError("dividend is free of the distinguished variable");

  auto coeff_at = [&](int k) -> Polynomial {
    auto it = coeffs.find(k + shift);
    return it == coeffs.end() ? Polynomial(f.mode()) : it->second;
  };

  std::vector<Polynomial> q(d, Polynomial(f.mode()));
  q[d - 1] = coeff_at(d);
  for (int k = d - 1; k >= 1; --k) q[k - 1] = coeff_at(k) + t * q[k];
  Polynomial rem = coeff_at(0) + t * q[0];
  if (!rem.is_zero())
    throw DivisionError("not divisible; remainder " + render(rem, PolyFormat::Text));

  Polynomial out(f.mode());
  for (int k = 0; k < d; ++k) {
    Monomial mv = Monomial::variable(v, k + shift);
    for (const auto& [m, c] : q[k].terms()) out.add_term(mv * m, c);
  }
  return out;
}

Polynomial divide_exact_x_minus_y(const Polynomial& f, int i, int j) {
  if (f.mode() != Mode::Cohomological)
    throw DomainError("divide_exact_x_minus_y requires cohomological mode");
  return divide_exact_linear(f, x_var(i), Polynomial::variable(f.mode(), y_var(j)));
}

Polynomial divide_exact_one_minus_y_over_x(const Polynomial& f, int i, int j) {
  if (f.mode() != Mode::K)
    throw DomainError("divide_exact_one_minus_y_over_x requires K mode");
  // f/(1 - Yj/Xi) = (f*Xi)/(Xi - Yj), and Xi is a unit.
  Polynomial shifted = f * Polynomial::variable(Mode::K, x_var(i));
  return divide_exact_linear(shifted, x_var(i), Polynomial::variable(Mode::K, y_var(j)));
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (f.mode() != Mode::Cohomological || g.mode() != Mode::Cohomological)
    throw DomainError("divide_exact requires cohomological mode");
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  Polynomial r = f;
  Polynomial q(f.mode());
  const auto& [gm, gc] = *g.terms().begin();
  while (!r.is_zero()) {
    const auto& [rm, rc] = *r.terms().begin();
    auto mq = rm.divide_nonnegative(gm);
    if (!mq)
      throw DivisionError("not divisible; leading term mismatch at " +
                          render(r, PolyFormat::Text));
    if (rc % gc != 0)
      throw DivisionError("not divisible; coefficient " + rc.str() +
                          " not a multiple of " + gc.str());
    Polynomial term(f.mode());
    term.add_term(*mq, rc / gc);
    q += term;
    r -= term * g;
  }
  return q;
}

}  // namespace schubert
