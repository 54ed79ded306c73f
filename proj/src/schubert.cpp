#include "schubert/schubert.hpp"

#include <algorithm>

#include "json.hpp"

namespace schubert {

Polynomial base_schubert(int n) {
  if (n < 1) throw DomainError("base_schubert: n must be >= 1");
  Polynomial out = Polynomial::constant(Mode::Cohomological, 1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j)
      out *= Polynomial::variable(Mode::Cohomological, x_var(i)) -
             Polynomial::variable(Mode::Cohomological, y_var(j));
  return out;
}

Polynomial base_grothendieck(int n) {
  if (n < 1) throw DomainError("base_grothendieck: n must be >= 1");
  Polynomial out = Polynomial::constant(Mode::K, 1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) {
      Polynomial factor = Polynomial::constant(Mode::K, 1);
      Monomial yx = Monomial::variable(y_var(j)) * Monomial::variable(x_var(i), -1);
      factor.add_term(yx, -1);
      out *= factor;
    }
  return out;
}

std::vector<int> reduced_word(const Permutation& pi) {
  // Strip descents from the right: if pi has descent at i then
  // word(pi) = word(pi r_i) ++ [i].
  std::vector<int> word;
  Permutation cur = pi;
  while (!cur.is_identity()) {
    int i = 1;
    while (cur(i) < cur(i + 1)) ++i;
    word.push_back(i);
    cur = cur.swap_positions(i, i + 1);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Polynomial schubert_dd(const Permutation& pi, int n) {
  if (!pi.in_sn(n)) throw DomainError("schubert_dd: permutation not in S_n");
  std::vector<int> word = reduced_word(pi.inverse() * Permutation::longest(n));
  Polynomial f = base_schubert(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = divided_difference(f, *it);
  return f;
}

Polynomial grothendieck_demazure(const Permutation& pi, int n) {
  if (!pi.in_sn(n)) throw DomainError("grothendieck_demazure: permutation not in S_n");
  std::vector<int> word = reduced_word(pi.inverse() * Permutation::longest(n));
  Polynomial f = base_grothendieck(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = isobaric_demazure(f, *it);
  return f;
}

std::string BasisExpansion::to_json() const {
  nlohmann::ordered_json j;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [perm, coeff] : coefficients) {
    nlohmann::ordered_json t;
    t["perm"] = perm.to_string();
    t["coeff"] = nlohmann::ordered_json::parse(render(coeff, PolyFormat::Json));
    j["terms"].push_back(t);
  }
  return j.dump();
}

Polynomial BasisExpansion::reconstruct(int n) const {
  Polynomial out(Mode::Cohomological);
  for (const auto& [perm, coeff] : coefficients) out += coeff * schubert_dd(perm, n);
  return out;
}

BasisExpansion monk_product(const Permutation& pi, int i, int n) {
  if (!pi.in_sn(n)) throw DomainError("monk_product: permutation not in S_n");
  if (i < 1 || i > n) throw DomainError("monk_product: position out of range");
  BasisExpansion out;
  for (const Permutation& rho : covers_above(pi, n + 1)) {
    int sign = (rho(i) > pi(i)) ? 1 : (rho(i) < pi(i) ? -1 : 0);
    if (sign != 0)
      out.coefficients.emplace(rho, Polynomial::constant(Mode::Cohomological, sign));
  }
  return out;
}

BasisExpansion expand(const Polynomial& p, int n) {
  if (p.mode() != Mode::Cohomological) throw DomainError("expand requires cohomological mode");
  if (n < 1) throw DomainError("expand: n must be >= 1");
  BasisExpansion out;
  Polynomial rest = p;
  const std::size_t cap =
      static_cast<std::size_t>(symmetric_group(n).size()) * (p.term_count() + 1);
  std::size_t steps = 0;
  while (!rest.is_zero()) {
    if (++steps > cap)
      throw ConsistencyError("expansion did not terminate within the iteration cap");
    std::vector<Permutation> supp = support(rest, n);
    if (supp.empty())
      throw DivisionError("not expressible over S_" + std::to_string(n) +
                          ": nonzero remainder with empty support");
    // Bruhat-minimal elements are processed in lexicographic order; supp is
    // already lexicographic, so take the first minimal one.
    const Permutation* chosen = nullptr;
    for (const Permutation& sigma : supp) {
      bool minimal = true;
      for (const Permutation& tau : supp)
        if (tau != sigma && bruhat_leq(tau, sigma)) {
          minimal = false;
          break;
        }
      if (minimal) {
        chosen = &sigma;
        break;
      }
    }
    const Permutation sigma = *chosen;
    Polynomial a_sigma = schubert_dd(sigma, n);
    Polynomial coeff;
    try {
      coeff = divide_exact(restrict_to_point(rest, sigma), restrict_to_point(a_sigma, sigma));
    } catch (const DivisionError&) {
      throw DivisionError("not expressible over S_" + std::to_string(n) +
                          ": restriction at " + sigma.to_string() +
                          " is not divisible by A|_" + sigma.to_string());
    }
    rest -= coeff * a_sigma;
    auto [it, inserted] = out.coefficients.emplace(sigma, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) out.coefficients.erase(it);
    }
  }
  return out;
}

}  // namespace schubert
