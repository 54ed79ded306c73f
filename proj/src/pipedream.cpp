#include "schubert/pipedream.hpp"

#include <algorithm>
#include <sstream>

namespace schubert {

PipeDream::PipeDream(int n_, std::set<Cell> crosses_)
    : n(n_), crosses(std::move(crosses_)) {
  if (n < 1) throw DomainError("pipe dream staircase size must be >= 1");
  for (const Cell& c : crosses)
    if (c.row < 1 || c.col < 1 || c.row + c.col > n)
      throw DomainError("cross " + to_string(c) + " outside the staircase of size " +
                        std::to_string(n));
}

TraceResult trace(const PipeDream& d) {
  const int n = d.n;
  // Sweep the grid rows top to bottom, cells right to left.  north[b] holds
  // the pipe entering (a,b) from the North.  Pipes labelled above n ride the
  // all-elbow region East of column n and enter row a from the East as pipe
  // n+a; they can never reach a cross, so they never disturb rows <= n.
  std::vector<int> north(n + 1);
  for (int b = 1; b <= n; ++b) north[b] = b;
  std::vector<int> exit_at(n + 1, 0);
  // crossed[p][q]: pipes p,q (both <= n) have already crossed.
  std::vector<std::vector<char>> crossed(n + 1, std::vector<char>(n + 1, 0));

  for (int a = 1; a <= n; ++a) {
    int east = n + a;
    for (int b = n; b >= 1; --b) {
      int np = north[b], ep = east;
      bool is_cross = d.crosses.count({a, b}) != 0;
      if (is_cross && (np > n || ep > n))
        throw ConsistencyError("pipe above n reached a staircase cross");
      if (is_cross && !crossed[np][ep]) {
        crossed[np][ep] = crossed[ep][np] = 1;
        north[b] = np;  // straight through: North pipe continues South
        east = ep;      // East pipe continues West
      } else {
        north[b] = ep;  // elbow: East turns South,
        east = np;      //        North turns West
      }
    }
    exit_at[a] = east;
  }

  std::vector<int> images(n);
  for (int a = 1; a <= n; ++a) {
    if (exit_at[a] < 1 || exit_at[a] > n)
      throw ConsistencyError("pipe trace escaped the staircase");
    images[a - 1] = exit_at[a];
  }
  Permutation pi{std::move(images)};
  return TraceResult{pi, static_cast<long long>(d.crosses.size()) == pi.length()};
}

namespace {

std::vector<Cell> staircase_cells(int n) {
  std::vector<Cell> cells;
  for (int a = 1; a < n; ++a)
    for (int b = 1; a + b <= n; ++b) cells.push_back({a, b});
  return cells;
}

}  // namespace

std::vector<PipeDream> enumerate_reduced(const Permutation& pi, int n) {
  if (!pi.in_sn(n)) throw DomainError("enumerate_reduced: permutation not in S_n");
  const std::vector<Cell> cells = staircase_cells(n);
  const int m = static_cast<int>(cells.size());
  const long long ell = pi.length();
  std::vector<PipeDream> out;
  if (ell > m) return out;

  // All size-ell subsets of the staircase, in combination order.
  std::vector<int> idx(ell);
  for (int k = 0; k < ell; ++k) idx[k] = k;
  while (true) {
    std::set<Cell> crosses;
    for (int k : idx) crosses.insert(cells[k]);
    PipeDream d(n, std::move(crosses));
    TraceResult t = trace(d);
    if (t.reduced && t.permutation == pi) out.push_back(std::move(d));
    // next combination
    int k = static_cast<int>(ell) - 1;
    while (k >= 0 && idx[k] == m - static_cast<int>(ell) + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < ell; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PipeDream> enumerate_nonreduced(const Permutation& pi, int n) {
  if (!pi.in_sn(n)) throw DomainError("enumerate_nonreduced: permutation not in S_n");
  const std::vector<Cell> cells = staircase_cells(n);
  const int m = static_cast<int>(cells.size());
  if (m > 30) throw CapacityError("nonreduced enumeration limited to staircases of 30 cells");
  std::vector<PipeDream> out;
  for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
    std::set<Cell> crosses;
    for (int k = 0; k < m; ++k)
      if (mask >> k & 1) crosses.insert(cells[k]);
    PipeDream d(n, std::move(crosses));
    if (trace(d).permutation == pi) out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial pipe_polynomial(const Permutation& pi, int n) {
  Polynomial out(Mode::Cohomological);
  for (const PipeDream& d : enumerate_reduced(pi, n)) {
    Polynomial prod = Polynomial::constant(Mode::Cohomological, 1);
    for (const Cell& c : d.crosses)
      prod *= Polynomial::variable(Mode::Cohomological, x_var(c.row)) -
              Polynomial::variable(Mode::Cohomological, y_var(c.col));
    out += prod;
  }
  return out;
}

Polynomial grothendieck_pipe_polynomial(const Permutation& pi, int n) {
  Polynomial out(Mode::K);
  const long long ell = pi.length();
  for (const PipeDream& d : enumerate_nonreduced(pi, n)) {
    Polynomial prod = Polynomial::constant(Mode::K, 1);
    for (const Cell& c : d.crosses) {
      Polynomial factor = Polynomial::constant(Mode::K, 1);
      factor.add_term(Monomial::variable(y_var(c.col)) * Monomial::variable(x_var(c.row), -1),
                      -1);
      prod *= factor;
    }
    int sign = ((static_cast<long long>(d.crosses.size()) - ell) % 2 == 0) ? 1 : -1;
    out += prod * Int(sign);
  }
  return out;
}

std::string render_pipe_dream(const PipeDream& d, PipeStyle style) {
  const int n = d.n;
  const Permutation pi = trace(d).permutation;
  const int w = static_cast<int>(std::to_string(n).size());
  std::ostringstream out;
  auto pad = [w](int v) {
    std::string s = std::to_string(v);
    return std::string(w - s.size(), ' ') + s;
  };
  out << std::string(w, ' ');
  for (int b = 1; b <= n; ++b) out << ' ' << pad(b);
  out << '\n';
  const char* cross = (style == PipeStyle::Unicode) ? "┼" : "+";
  const char* elbow = (style == PipeStyle::Unicode) ? "╯" : ".";
  for (int a = 1; a <= n; ++a) {
    std::string line = pad(pi(a));
    for (int b = 1; a + b <= n; ++b) {
      line += ' ';
      line += std::string(w - 1, ' ');
      line += d.crosses.count({a, b}) ? cross : elbow;
    }
    out << line << '\n';
  }
  return out.str();
}

PipeDream parse_pipe_dream_ascii(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<std::string>> rows;
  bool header_skipped = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    if (!header_skipped) {
      header_skipped = true;
      continue;
    }
    rows.push_back(std::move(toks));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw FormatError("empty pipe dream rendering");
  std::set<Cell> crosses;
  for (int a = 1; a <= n; ++a) {
    const auto& toks = rows[a - 1];
    if (toks.empty()) throw FormatError("missing gutter label in row " + std::to_string(a));
    for (size_t k = 1; k < toks.size(); ++k) {
      const std::string& s = toks[k];
      int b = static_cast<int>(k);
      if (s == "+" || s == "┼")
        crosses.insert({a, b});
      else if (s != "." && s != "╯")
        throw FormatError("unexpected tile '" + s + "' in row " + std::to_string(a));
    }
  }
  return PipeDream(n, std::move(crosses));
}

std::string to_fixture(const PipeDream& d) {
  std::ostringstream out;
  out << "n=" << d.n << '\n';
  for (const Cell& c : d.crosses) out << to_string(c) << '\n';
  return out.str();
}

PipeDream parse_pipe_dream(std::string_view fixture) {
  std::istringstream in{std::string(fixture)};
  std::string line;
  if (!std::getline(in, line) || line.rfind("n=", 0) != 0)
    throw FormatError("pipe dream fixture must start with n=<int>");
  int n = 0;
  try {
    n = std::stoi(line.substr(2));
  } catch (const std::exception&) {
    throw FormatError("bad staircase size in '" + line + "'");
  }
  std::set<Cell> crosses;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    int r = 0, c = 0;
    char lp = 0, comma = 0, rp = 0;
    std::istringstream ls(line);
    if (!(ls >> lp >> r >> comma >> c >> rp) || lp != '(' || comma != ',' || rp != ')')
      throw FormatError("bad cross line '" + line + "'");
    crosses.insert({r, c});
  }
  return PipeDream(n, std::move(crosses));
}

}  // namespace schubert
