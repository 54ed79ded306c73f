#include "schubert/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace schubert {

void Permutation::trim() {
  while (!images_.empty() && images_.back() == static_cast<int>(images_.size()))
    images_.pop_back();
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int m = static_cast<int>(images_.size());
  std::vector<char> seen(m + 1, 0);
  for (int v : images_) {
    if (v < 1) throw FormatError("value " + std::to_string(v) + " must be positive");
    if (v > m)
      throw FormatError("value " + std::to_string(v) + " out of range for length " +
                        std::to_string(m));
    if (seen[v]) throw FormatError("value " + std::to_string(v) + " repeated");
    seen[v] = 1;
  }
  trim();
}

Permutation Permutation::longest(int n) {
  if (n < 0) throw DomainError("longest: n must be nonnegative");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::simple(int i) {
  if (i < 1) throw DomainError("simple reflection index must be >= 1");
  return transposition(i, i + 1);
}

Permutation Permutation::transposition(int a, int b) {
  if (a < 1 || b < 1 || a == b) throw DomainError("bad transposition");
  if (a > b) std::swap(a, b);
  std::vector<int> v(b);
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[a - 1], v[b - 1]);
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> vals;
  const bool has_sep = text.find(',') != std::string_view::npos ||
                       text.find(' ') != std::string_view::npos ||
                       text.find('\t') != std::string_view::npos;
  if (!has_sep) {
    if (text.empty()) throw FormatError("empty permutation");
    for (char c : text) {
      if (c < '1' || c > '9')
        throw FormatError(std::string("unexpected character '") + c +
                          "' in digit-string permutation");
      vals.push_back(c - '0');
    }
  } else {
    std::string buf(text);
    for (char& c : buf)
      if (c == ',' || c == '\t') c = ' ';
    std::istringstream in(buf);
    std::string tok;
    while (in >> tok) {
      try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        vals.push_back(v);
      } catch (const std::exception&) {
        throw FormatError("not an integer: '" + tok + "'");
      }
    }
    if (vals.empty()) throw FormatError("empty permutation");
  }
  return Permutation(std::move(vals));
}

int Permutation::operator()(int k) const {
  if (k < 1) throw DomainError("permutations act on positive integers");
  if (k > size()) return k;
  return images_[k - 1];
}

long long Permutation::length() const {
  long long inversions = 0;
  const int m = size();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (images_[i] > images_[j]) ++inversions;
  return inversions;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(size());
  for (int k = 1; k <= size(); ++k) v[images_[k - 1] - 1] = k;
  return Permutation(std::move(v));
}

std::vector<int> Permutation::one_line(int n) const {
  if (n < size()) throw DomainError("one_line: permutation does not fit in S_n");
  std::vector<int> v(n);
  for (int k = 1; k <= n; ++k) v[k - 1] = (*this)(k);
  return v;
}

Permutation Permutation::swap_positions(int a, int b) const {
  if (a < 1 || b < 1 || a == b) throw DomainError("bad position swap");
  std::vector<int> v = one_line(std::max({a, b, size()}));
  std::swap(v[a - 1], v[b - 1]);
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  if (images_.empty()) return "1";  // identity shown as the 1-point form
  bool digits = std::all_of(images_.begin(), images_.end(), [](int v) { return v <= 9; });
  std::string out;
  for (size_t i = 0; i < images_.size(); ++i) {
    if (digits)
      out += static_cast<char>('0' + images_[i]);
    else {
      if (i) out += ',';
      out += std::to_string(images_[i]);
    }
  }
  return out;
}

Permutation operator*(const Permutation& pi, const Permutation& rho) {
  const int n = std::max(pi.size(), rho.size());
  std::vector<int> v(n);
  for (int k = 1; k <= n; ++k) v[k - 1] = pi(rho(k));
  return Permutation(std::move(v));
}

std::vector<Permutation> covers_above(const Permutation& pi, int n) {
  if (!pi.in_sn(n)) throw DomainError("covers_above: permutation not in S_n");
  std::vector<int> v = pi.one_line(n);
  std::vector<Permutation> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (v[a - 1] >= v[b - 1]) continue;
      bool blocked = false;
      for (int c = a + 1; c < b && !blocked; ++c)
        if (v[c - 1] > v[a - 1] && v[c - 1] < v[b - 1]) blocked = true;
      if (!blocked) out.push_back(pi.swap_positions(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool bruhat_leq(const Permutation& pi, const Permutation& rho) {
  const int n = std::max(pi.size(), rho.size());
  if (n == 0) return true;
  // rank[i][j] = #{a<=i : sigma(a)<=j}, built by prefix summing the matrix.
  auto ranks = [n](const Permutation& sigma) {
    std::vector<std::vector<int>> r(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        r[i][j] = r[i - 1][j] + r[i][j - 1] - r[i - 1][j - 1] + (sigma(i) == j ? 1 : 0);
    return r;
  };
  auto rp = ranks(pi), rr = ranks(rho);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (rr[i][j] > rp[i][j]) return false;
  return true;
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string to_string(const Diagram& d) {
  if (d.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (const Cell& c : d) {
    if (!first) out += ",";
    out += to_string(c);
    first = false;
  }
  return out + "}";
}

PartialPermutation::PartialPermutation(int n_, std::set<Cell> ones_)
    : n(n_), ones(std::move(ones_)) {
  if (n < 0) throw DomainError("partial permutation size must be nonnegative");
  std::set<int> rows, cols;
  for (const Cell& c : ones) {
    if (c.row < 1 || c.row > n || c.col < 1 || c.col > n)
      throw DomainError("partial permutation entry " + to_string(c) + " outside the square");
    if (!rows.insert(c.row).second)
      throw DomainError("two entries in row " + std::to_string(c.row));
    if (!cols.insert(c.col).second)
      throw DomainError("two entries in column " + std::to_string(c.col));
  }
}

Diagram rothe_diagram(const Permutation& pi) {
  Diagram d;
  const int m = pi.size();
  const Permutation inv = pi.inverse();
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b < pi(a); ++b)
      if (inv(b) > a) d.insert({a, b});
  return d;
}

Diagram rothe_diagram(const PartialPermutation& p) {
  Diagram d;
  for (int a = 1; a <= p.n; ++a) {
    for (int b = 1; b <= p.n; ++b) {
      bool dead = false;
      for (const Cell& c : p.ones) {
        if (c.col == b && c.row <= a) dead = true;   // 1 weakly North
        if (c.row == a && c.col <= b) dead = true;   // 1 weakly West
        if (dead) break;
      }
      if (!dead) d.insert({a, b});
    }
  }
  return d;
}

Diagram essential_set(const Permutation& pi) {
  Diagram d = rothe_diagram(pi);
  Diagram out;
  for (const Cell& c : d)
    if (!d.count({c.row + 1, c.col}) && !d.count({c.row, c.col + 1})) out.insert(c);
  return out;
}

Diagram dominant_part(const Permutation& pi) {
  Diagram d = rothe_diagram(pi);
  Diagram out;
  for (const Cell& c : d) {
    bool closed = true;
    for (int a = 1; a <= c.row && closed; ++a)
      for (int b = 1; b <= c.col && closed; ++b)
        if (!d.count({a, b})) closed = false;
    if (closed) out.insert(c);
  }
  return out;
}

Permutation extend_partial(const PartialPermutation& p) {
  const int n = p.n;
  const int k = p.corank();
  std::map<int, int> row_to_col;
  std::set<int> used_cols;
  for (const Cell& c : p.ones) {
    row_to_col[c.row] = c.col;
    used_cols.insert(c.col);
  }
  std::vector<int> v(n + k, 0);
  for (auto [r, c] : row_to_col) v[r - 1] = c;
  // Free rows take the new columns in increasing order; the new rows take the
  // free columns in increasing order.  This is the unique assignment that
  // creates no inversions among the added entries.
  int next_new_col = n + 1;
  for (int r = 1; r <= n; ++r)
    if (!row_to_col.count(r)) v[r - 1] = next_new_col++;
  int next_new_row = n + 1;
  for (int c = 1; c <= n; ++c)
    if (!used_cols.count(c)) v[next_new_row++ - 1] = c;
  return Permutation(std::move(v));
}

}  // namespace schubert
