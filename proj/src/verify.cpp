#include "schubert/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "schubert/cotransition.hpp"
#include "schubert/pipedream.hpp"
#include "schubert/schubert.hpp"

namespace schubert {

bool VerificationReport::status() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.pass; }));
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["family"] = (family == FamilyKind::K) ? "ktheory" : "cohomology";
  j["seed"] = seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& c : checks) {
    nlohmann::ordered_json jc;
    jc["suite"] = c.suite;
    jc["name"] = c.name;
    jc["instance"] = c.instance;
    jc["pass"] = c.pass;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    j["checks"].push_back(jc);
  }
  j["status"] = status() ? "pass" : "fail";
  return j.dump();
}

std::string VerificationReport::to_table() const {
  std::ostringstream out;
  out << "verification over S_" << n << ", family "
      << (family == FamilyKind::K ? "ktheory" : "cohomology") << ", seed " << seed << "\n";
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_suite;
  for (const CheckRecord& c : checks) {
    auto& [p, t] = per_suite[c.suite];
    ++t;
    if (c.pass) ++p;
    if (!c.pass)
      out << "  FAIL " << c.suite << "/" << c.name << " @ " << c.instance
          << (c.detail.empty() ? "" : ("\n       " + c.detail)) << "\n";
  }
  for (const auto& [s, pt] : per_suite)
    out << "  " << s << ": " << pt.first << "/" << pt.second << " passed\n";
  out << (status() ? "status: pass" : "status: FAIL") << " (" << checks.size() << " checks, "
      << failures() << " failures, " << elapsed_seconds << "s)\n";
  return out.str();
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::Equality: return "equality";
    case Suite::Monk: return "monk";
    case Suite::Divisibility: return "divisibility";
    case Suite::Support: return "support";
    case Suite::Stability: return "stability";
    case Suite::Pivots: return "pivots";
    case Suite::Lub: return "lub";
    case Suite::Diagrams: return "diagrams";
  }
  return "?";
}

Suite suite_from_string(const std::string& name) {
  for (Suite s : {Suite::Equality, Suite::Monk, Suite::Divisibility, Suite::Support,
                  Suite::Stability, Suite::Pivots, Suite::Lub, Suite::Diagrams})
    if (to_string(s) == name) return s;
  throw DomainError("unknown suite '" + name + "'");
}

std::set<Suite> all_suites(FamilyKind family) {
  if (family == FamilyKind::K) return {Suite::Equality, Suite::Lub};
  return {Suite::Equality, Suite::Monk,   Suite::Divisibility, Suite::Support,
          Suite::Stability, Suite::Pivots, Suite::Lub,          Suite::Diagrams};
}

namespace {

std::string instance_of(const Permutation& pi) { return pi.to_string(); }

CheckRecord make_check(std::string suite, std::string name, std::string instance, bool pass,
                       std::string detail = "") {
  return CheckRecord{std::move(suite), std::move(name), std::move(instance), pass,
                     pass ? "" : std::move(detail)};
}

CheckRecord equality_check(const Permutation& pi, int n, FamilyKind family,
                           const Polynomial* cotrans_hint) {
  if (family == FamilyKind::Cohomological) {
    Polynomial dd = schubert_dd(pi, n);
    Polynomial pd = pipe_polynomial(pi, n);
    Polynomial ct = cotrans_hint ? *cotrans_hint : cotransition_schubert(pi, n);
    bool pass = (dd == pd) && (dd == ct);
    return make_check("equality", "dd=pipedream=cotransition", instance_of(pi), pass,
                      "dd=" + render(dd) + " | pipedream=" + render(pd) +
                          " | cotransition=" + render(ct));
  }
  Polynomial dz = grothendieck_demazure(pi, n);
  Polynomial pd = grothendieck_pipe_polynomial(pi, n);
  Polynomial ct = cotrans_hint ? *cotrans_hint : cotransition_grothendieck(pi, n);
  bool pass = (dz == pd) && (dz == ct);
  return make_check("equality", "demazure=pipedream=cotransition", instance_of(pi), pass,
                    "demazure=" + render(dz) + " | pipedream=" + render(pd) +
                        " | cotransition=" + render(ct));
}

void run_equality(std::vector<CheckRecord>& out, int n, FamilyKind family) {
  std::map<Permutation, Polynomial> table = (family == FamilyKind::K)
                                                ? cotransition_grothendieck_all(n)
                                                : cotransition_schubert_all(n);
  for (const Permutation& pi : symmetric_group(n))
    out.push_back(equality_check(pi, n, family, &table.at(pi)));
}

void run_monk(std::vector<CheckRecord>& out, int n) {
  for (const Permutation& pi : symmetric_group(n)) {
    Polynomial a = schubert_dd(pi, n + 1);
    for (int i = 1; i <= n; ++i) {
      Polynomial lhs = (Polynomial::variable(Mode::Cohomological, x_var(i)) -
                        Polynomial::variable(Mode::Cohomological, y_var(pi(i)))) *
                       a;
      Polynomial rhs = monk_product(pi, i, n).reconstruct(n + 1);
      out.push_back(make_check("monk", "signed cover sum", instance_of(pi) + " i=" +
                                                               std::to_string(i),
                               lhs == rhs, "lhs=" + render(lhs) + " | rhs=" + render(rhs)));
    }
  }
}

void run_divisibility(std::vector<CheckRecord>& out, int n) {
  for (const Permutation& pi : symmetric_group(n)) {
    Pivot pivot{};
    try {
      pivot = minimal_pivot(pi, n);
    } catch (const PivotError&) {
      continue;  // w_0^n and the boundary permutations have no strict pivot
    }
    bool pass = true;
    std::string detail;
    for (const Permutation& sigma : cover_terms(pi, pivot, n)) {
      try {
        divide_exact_x_minus_y(schubert_dd(sigma, n), pivot.row, pivot.col);
      } catch (const DivisionError& e) {
        pass = false;
        detail = "A_" + sigma.to_string() + " not divisible: " + e.what();
        break;
      }
    }
    out.push_back(make_check("divisibility", "each summand divisible", instance_of(pi), pass,
                             detail));
  }
}

void run_support(std::vector<CheckRecord>& out, int n) {
  std::vector<Permutation> sn = symmetric_group(n);
  std::map<Permutation, Polynomial> a;
  for (const Permutation& pi : sn) a.emplace(pi, schubert_dd(pi, n));
  for (const Permutation& pi : sn) {
    bool pass = true;
    std::string detail;
    for (const Permutation& rho : sn) {
      bool zero = restrict_to_point(a.at(pi), rho).is_zero();
      if (!bruhat_leq(pi, rho) && !zero) {
        pass = false;
        detail = "A|_rho nonzero at rho=" + rho.to_string() + " although rho !>= pi";
        break;
      }
      if (rho == pi && zero) {
        pass = false;
        detail = "A|_pi vanished";
        break;
      }
    }
    out.push_back(make_check("support", "triangularity+nondegeneracy", instance_of(pi), pass,
                             detail));
  }
}

void run_stability(std::vector<CheckRecord>& out, int n) {
  for (const Permutation& pi : symmetric_group(n)) {
    bool pass = true;
    std::string detail;
    if (schubert_dd(pi, n) != schubert_dd(pi, n + 1)) {
      pass = false;
      detail = "divided-difference route changed from n to n+1";
    }
    if (pass && pipe_polynomial(pi, n) != pipe_polynomial(pi, n + 1)) {
      pass = false;
      detail = "pipe polynomial changed from n to n+1";
    }
    if (pass) {
      auto small = enumerate_reduced(pi, n);
      auto big = enumerate_reduced(pi, n + 1);
      std::set<std::set<Cell>> sa, sb;
      for (const auto& d : small) sa.insert(d.crosses);
      for (const auto& d : big) sb.insert(d.crosses);
      if (sa != sb) {
        pass = false;
        detail = "reduced pipe dream sets differ between staircases";
      }
    }
    if (pass && cotransition_schubert(pi, n) != cotransition_schubert(pi, n + 1)) {
      pass = false;
      detail = "co-transition route changed from n to n+1";
    }
    if (pass) {
      // Cover sets of the recurrence do not change under embedding when the
      // pivot satisfies the weak triangle condition at the smaller n.
      try {
        Pivot p = minimal_pivot(pi, n);
        if (cover_terms(pi, p, n) != cover_terms(pi, p, n + 1)) {
          pass = false;
          detail = "cover terms changed from S_n to S_{n+1}";
        }
      } catch (const PivotError&) {
      }
    }
    out.push_back(make_check("stability", "n vs n+1", instance_of(pi), pass, detail));
  }
}

void run_pivots(std::vector<CheckRecord>& out, int n) {
  for (const Permutation& pi : symmetric_group(n)) {
    if (pi == Permutation::longest(n)) continue;
    Polynomial expected = schubert_dd(pi, n);
    bool pass = true;
    std::string detail;
    for (const Pivot& pivot : valid_pivots(pi, n)) {
      Polynomial sum(Mode::Cohomological);
      for (const Permutation& sigma : cover_terms(pi, pivot, n))
        sum += schubert_dd(sigma, n);
      Polynomial got;
      try {
        got = divide_exact_x_minus_y(sum, pivot.row, pivot.col);
      } catch (const DivisionError& e) {
        pass = false;
        detail = std::string("cover sum not divisible: ") + e.what();
        break;
      }
      if (got != expected) {
        pass = false;
        detail = "pivot (" + std::to_string(pivot.row) + "," + std::to_string(pivot.col) +
                 ") gives " + render(got) + " expected " + render(expected);
        break;
      }
    }
    out.push_back(make_check("pivots", "pivot independence", instance_of(pi), pass, detail));
  }
}

void run_lub(std::vector<CheckRecord>& out, int n) {
  for (const Permutation& pi : symmetric_group(n)) {
    if (pi == Permutation::longest(n)) continue;
    bool pass = true;
    std::string detail;
    for (const Pivot& pivot : valid_pivots(pi, n)) {
      std::vector<Permutation> covers = cover_terms(pi, pivot, n);
      for (unsigned mask = 1; mask < (1u << covers.size()) && pass; ++mask) {
        std::vector<Permutation> subset;
        for (size_t k = 0; k < covers.size(); ++k)
          if (mask >> k & 1) subset.push_back(covers[k]);
        try {
          Permutation l = lub(subset, n);
          if (l.length() != pi.length() + static_cast<long long>(subset.size())) {
            pass = false;
            detail = "lub length law failed for subset of size " +
                     std::to_string(subset.size());
          }
        } catch (const LubError& e) {
          pass = false;
          detail = e.what();
        }
      }
      if (!pass) break;
    }
    out.push_back(make_check("lub", "unique lub of predicted length", instance_of(pi), pass,
                             detail));
  }
}

void run_diagrams(std::vector<CheckRecord>& out, int n) {
  for (const Permutation& pi : symmetric_group(n)) {
    bool pass = true;
    std::string detail;
    Diagram d = rothe_diagram(pi);
    if (static_cast<long long>(d.size()) != pi.length()) {
      pass = false;
      detail = "|rothe| != length";
    }
    Diagram ess = essential_set(pi);
    if (pass && !std::includes(d.begin(), d.end(), ess.begin(), ess.end())) {
      pass = false;
      detail = "essential set escapes the diagram";
    }
    if (pass) {
      // NW-closure must agree with 4-adjacency connectivity to (1,1).
      Diagram dom = dominant_part(pi);
      Diagram component;
      std::vector<Cell> queue;
      if (d.count({1, 1})) {
        component.insert({1, 1});
        queue.push_back({1, 1});
      }
      while (!queue.empty()) {
        Cell c = queue.back();
        queue.pop_back();
        for (Cell nb : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1},
                        Cell{c.row, c.col - 1}})
          if (d.count(nb) && !component.count(nb)) {
            component.insert(nb);
            queue.push_back(nb);
          }
      }
      if (dom != component) {
        pass = false;
        detail = "dominant part != NW connected component";
      }
    }
    out.push_back(make_check("diagrams", "rothe laws", instance_of(pi), pass, detail));
  }
  // Partial permutations at sizes <= 3: the extension preserves the diagram.
  for (int np = 1; np <= 3; ++np) {
    bool pass = true;
    std::string detail;
    std::vector<Cell> square;
    for (int a = 1; a <= np; ++a)
      for (int b = 1; b <= np; ++b) square.push_back({a, b});
    for (unsigned long long mask = 0; mask < (1ull << square.size()) && pass; ++mask) {
      std::set<Cell> ones;
      for (size_t k = 0; k < square.size(); ++k)
        if (mask >> k & 1) ones.insert(square[k]);
      std::optional<PartialPermutation> p;
      try {
        p.emplace(np, ones);
      } catch (const DomainError&) {
        continue;  // two ones share a row or column
      }
      Permutation rho = extend_partial(*p);
      if (rothe_diagram(rho) != rothe_diagram(*p) ||
          rho.length() != static_cast<long long>(rothe_diagram(*p).size())) {
        pass = false;
        detail = "extension changed the diagram for a partial permutation of size " +
                 std::to_string(np);
      }
    }
    out.push_back(
        make_check("diagrams", "partial extension", "square n=" + std::to_string(np), pass,
                   detail));
  }
}

}  // namespace

CheckRecord check_equality(const Permutation& pi, int n, FamilyKind family) {
  if (!pi.in_sn(n)) throw DomainError("check_equality: permutation not in S_n");
  return equality_check(pi, n, family, nullptr);
}

VerificationReport run_suite(int n, FamilyKind family, const std::set<Suite>& suites,
                             std::uint64_t seed) {
  const int cap = (family == FamilyKind::K) ? kKCap : kCohomologicalCap;
  if (n < 1) throw DomainError("run_suite: n must be >= 1");
  if (n > cap)
    throw CapacityError("n=" + std::to_string(n) + " exceeds the cap " + std::to_string(cap) +
                        " for this family");
  VerificationReport report;
  report.n = n;
  report.family = family;
  report.seed = seed;
  const auto t0 = std::chrono::steady_clock::now();

  const std::set<Suite> applicable = all_suites(family);
  auto wanted = [&](Suite s) { return suites.count(s) && applicable.count(s); };

  if (wanted(Suite::Equality)) run_equality(report.checks, n, family);
  if (family == FamilyKind::Cohomological) {
    if (wanted(Suite::Monk)) run_monk(report.checks, n);
    if (wanted(Suite::Divisibility)) run_divisibility(report.checks, n);
    if (wanted(Suite::Support)) run_support(report.checks, n);
    if (wanted(Suite::Stability)) run_stability(report.checks, n);
    if (wanted(Suite::Pivots)) run_pivots(report.checks, n);
  }
  if (wanted(Suite::Lub)) run_lub(report.checks, n);
  if (family == FamilyKind::Cohomological && wanted(Suite::Diagrams))
    run_diagrams(report.checks, n);

  // Canonical ordering: by instance (one-line notation), then suite, then name.
  std::stable_sort(report.checks.begin(), report.checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     if (a.instance != b.instance) return a.instance < b.instance;
                     if (a.suite != b.suite) return a.suite < b.suite;
                     return a.name < b.name;
                   });
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace schubert
