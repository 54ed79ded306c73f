#include "schubert/cotransition.hpp"

#include <algorithm>
#include <map>

#include "schubert/schubert.hpp"

namespace schubert {

Pivot minimal_pivot(const Permutation& pi, int n) {
  if (!pi.in_sn(n)) throw DomainError("minimal_pivot: permutation not in S_n");
  if (pi == Permutation::longest(n)) throw PivotError("base case has no pivot");
  for (int i = 1; i <= n; ++i)
    if (i + pi(i) < n) return Pivot{i, pi(i)};
  throw PivotError("no strict pivot: every one-cell of " + pi.to_string() +
                   " touches the antidiagonal of S_" + std::to_string(n));
}

std::vector<Pivot> valid_pivots(const Permutation& pi, int n) {
  if (!pi.in_sn(n)) throw DomainError("valid_pivots: permutation not in S_n");
  const Diagram dom = dominant_part(pi);
  std::vector<Pivot> out;
  for (int i = 1; i <= n; ++i) {
    const int c = pi(i);
    if (i + c > n) continue;
    bool ok = true;
    for (int a = 1; a <= i && ok; ++a)
      for (int b = 1; b <= c && ok; ++b) {
        if (a == i && b == c) continue;
        if (!dom.count({a, b})) ok = false;
      }
    if (ok) out.push_back(Pivot{i, c});
  }
  return out;
}

std::vector<Permutation> cover_terms(const Permutation& pi, const Pivot& pivot, int n) {
  const std::vector<Pivot> valid = valid_pivots(pi, n);
  if (std::find(valid.begin(), valid.end(), pivot) == valid.end())
    throw DomainError("invalid pivot (" + std::to_string(pivot.row) + "," +
                      std::to_string(pivot.col) + ") for " + pi.to_string());
  std::vector<Permutation> out;
  for (const Permutation& sigma : covers_above(pi, n))
    if (sigma(pivot.row) != pi(pivot.row)) out.push_back(sigma);
  if (out.empty()) throw ConsistencyError("cover term set of a valid pivot is empty");
  for (const Permutation& sigma : out)
    if (sigma(pivot.row) < pi(pivot.row))
      throw ConsistencyError("cover term decreases the pivot position");
  return out;
}

namespace {

// The recursion pivot: the strict minimal pivot when one exists, otherwise
// the Northernmost valid pivot (the weak generalization).
Pivot recursion_pivot(const Permutation& pi, int n) {
  try {
    return minimal_pivot(pi, n);
  } catch (const PivotError&) {
    std::vector<Pivot> valid = valid_pivots(pi, n);
    if (valid.empty()) throw;
    return valid.front();
  }
}

using Memo = std::map<Permutation, Polynomial>;

const Polynomial& cotransition_schubert_memo(const Permutation& pi, int n, Memo& memo) {
  auto it = memo.find(pi);
  if (it != memo.end()) return it->second;
  Polynomial value(Mode::Cohomological);
  if (pi == Permutation::longest(n)) {
    value = base_schubert(n);
  } else {
    const Pivot pivot = recursion_pivot(pi, n);
    Polynomial sum(Mode::Cohomological);
    for (const Permutation& sigma : cover_terms(pi, pivot, n))
      sum += cotransition_schubert_memo(sigma, n, memo);
    try {
      value = divide_exact_x_minus_y(sum, pivot.row, pivot.col);
    } catch (const DivisionError& e) {
      throw ConsistencyError(std::string("co-transition sum not divisible: ") + e.what());
    }
  }
  return memo.emplace(pi, std::move(value)).first->second;
}

}  // namespace

Polynomial cotransition_schubert(const Permutation& pi, int n) {
  if (!pi.in_sn(n)) throw DomainError("cotransition_schubert: permutation not in S_n");
  Memo memo;
  return cotransition_schubert_memo(pi, n, memo);
}

std::map<Permutation, Polynomial> cotransition_schubert_all(int n) {
  Memo memo;
  for (const Permutation& pi : symmetric_group(n)) cotransition_schubert_memo(pi, n, memo);
  return memo;
}

Permutation lub(const std::vector<Permutation>& s, int n) {
  if (s.empty()) throw DomainError("lub of an empty set");
  std::vector<Permutation> members(s);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const long long member_len = members.front().length();
  for (const Permutation& m : members) {
    if (!m.in_sn(n)) throw DomainError("lub: member not in S_n");
    if (m.length() != member_len) throw DomainError("lub: members of unequal length");
  }
  std::vector<Permutation> bounds;
  for (const Permutation& tau : symmetric_group(n)) {
    bool ok = true;
    for (const Permutation& m : members)
      if (!bruhat_leq(m, tau)) {
        ok = false;
        break;
      }
    if (ok) bounds.push_back(tau);
  }
  std::vector<Permutation> minimal;
  for (const Permutation& tau : bounds) {
    bool is_min = true;
    for (const Permutation& other : bounds)
      if (other != tau && bruhat_leq(other, tau)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(tau);
  }
  if (minimal.empty()) throw LubError("no common upper bound in S_" + std::to_string(n));
  if (minimal.size() > 1) {
    std::string what = "least upper bound not unique:";
    for (const Permutation& m : minimal) what += " " + m.to_string();
    throw LubError(what);
  }
  const long long expected = member_len - 1 + static_cast<long long>(members.size());
  if (minimal.front().length() != expected)
    throw LubError("lub " + minimal.front().to_string() + " has length " +
                   std::to_string(minimal.front().length()) + ", expected " +
                   std::to_string(expected));
  return minimal.front();
}

namespace {

const Polynomial& cotransition_grothendieck_memo(const Permutation& pi, int n, Memo& memo) {
  auto it = memo.find(pi);
  if (it != memo.end()) return it->second;
  Polynomial value(Mode::K);
  if (pi == Permutation::longest(n)) {
    value = base_grothendieck(n);
  } else {
    const Pivot pivot = recursion_pivot(pi, n);
    const std::vector<Permutation> covers = cover_terms(pi, pivot, n);
    if (covers.size() > 20) throw CapacityError("too many cover terms for subset sum");
    Polynomial sum(Mode::K);
    for (unsigned mask = 1; mask < (1u << covers.size()); ++mask) {
      std::vector<Permutation> subset;
      for (size_t k = 0; k < covers.size(); ++k)
        if (mask >> k & 1) subset.push_back(covers[k]);
      int sign = (subset.size() % 2 == 1) ? 1 : -1;
      sum += cotransition_grothendieck_memo(lub(subset, n), n, memo) * Int(sign);
    }
    try {
      value = divide_exact_one_minus_y_over_x(sum, pivot.row, pivot.col);
    } catch (const DivisionError& e) {
      throw ConsistencyError(std::string("K co-transition sum not divisible: ") + e.what());
    }
  }
  return memo.emplace(pi, std::move(value)).first->second;
}

}  // namespace

Polynomial cotransition_grothendieck(const Permutation& pi, int n) {
  if (!pi.in_sn(n)) throw DomainError("cotransition_grothendieck: permutation not in S_n");
  Memo memo;
  return cotransition_grothendieck_memo(pi, n, memo);
}

std::map<Permutation, Polynomial> cotransition_grothendieck_all(int n) {
  Memo memo;
  for (const Permutation& pi : symmetric_group(n)) cotransition_grothendieck_memo(pi, n, memo);
  return memo;
}

}  // namespace schubert
