#include <cctype>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "schubert/poly.hpp"

namespace schubert {

namespace {

constexpr long long kMaxExponent = 100000;

// Recursive-descent parser for
//   expr   := ["-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := base ("^" int)?
//   base   := var | int | "(" expr ")"
//   var    := ("x"|"y"|"X"|"Y") uint
// Lowercase variables select cohomological mode, uppercase K mode.  The
// leading minus and signed exponents (K mode only) extend the base grammar.
class Parser {
 public:
  Parser(std::string_view text, Mode default_mode)
      : text_(text), default_mode_(default_mode) {}

  Polynomial run() {
    // Pre-scan variable case to fix the mode before building any terms.
    for (size_t k = 0; k < text_.size(); ++k) {
      char c = text_[k];
      if ((c == 'x' || c == 'y') && digit_follows(k)) saw_lower_ = true;
      if ((c == 'X' || c == 'Y') && digit_follows(k)) saw_upper_ = true;
    }
    if (saw_lower_ && saw_upper_) fail(0, "mixed lowercase and uppercase variables");
    mode_ = saw_upper_ ? Mode::K : (saw_lower_ ? Mode::Cohomological : default_mode_);
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(pos_, "trailing input");
    return p;
  }

 private:
  std::string_view text_;
  Mode default_mode_;
  Mode mode_ = Mode::Cohomological;
  size_t pos_ = 0;
  bool saw_lower_ = false, saw_upper_ = false;

  [[noreturn]] void fail(size_t at, const std::string& msg) {
    throw FormatError("parse error at position " + std::to_string(at) + ": " + msg);
  }

  bool digit_follows(size_t k) const {
    return k + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k + 1]));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<char> peek() {
    skip_ws();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  Int read_uint() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail(start, "expected a number");
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  long long read_exponent() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    Int e = read_uint();
    if (e > kMaxExponent) fail(pos_, "exponent overflow");
    long long v = e.convert_to<long long>();
    return neg ? -v : v;
  }

  Polynomial expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (auto c = peek()) {
      if (*c != '+' && *c != '-') break;
      ++pos_;
      Polynomial t = term();
      if (*c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (peek() != '^') return b;
    ++pos_;
    long long e = read_exponent();
    if (e < 0) {
      if (mode_ != Mode::K) fail(pos_, "negative exponent outside K mode");
      if (b.term_count() != 1 || b.terms().begin()->second != 1 ||
          b.terms().begin()->first.factors().size() != 1)
        fail(pos_, "negative exponent on a non-variable base");
      auto [v, ve] = b.terms().begin()->first.factors()[0];
      long long total = static_cast<long long>(ve) * e;
      if (total < -kMaxExponent || total > kMaxExponent) fail(pos_, "exponent overflow");
      return Polynomial::variable(mode_, v, static_cast<int>(total));
    }
    if (b.term_count() == 1) {
      const auto& [m, c] = *b.terms().begin();
      Monomial out;
      for (const auto& [v, ve] : m.factors()) {
        long long total = static_cast<long long>(ve) * e;
        if (total < -kMaxExponent || total > kMaxExponent) fail(pos_, "exponent overflow");
        out.set_exponent(v, static_cast<int>(total));
      }
      Int coeff = 1;
      for (long long k = 0; k < e; ++k) coeff *= c;
      Polynomial p(mode_);
      p.add_term(out, coeff);
      return p;
    }
    if (e > 64) fail(pos_, "exponent overflow");
    Polynomial acc = Polynomial::constant(mode_, 1);
    for (long long k = 0; k < e; ++k) acc *= b;
    return acc;
  }

  Polynomial base() {
    auto c = peek();
    if (!c) fail(pos_, "unexpected end of input");
    if (*c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (*c == 'x' || *c == 'y' || *c == 'X' || *c == 'Y') {
      char name = *c;
      ++pos_;
      Int idx = read_uint();
      if (idx < 1 || idx > 1000000) fail(pos_, "variable index out of range");
      Var v{(name == 'x' || name == 'X') ? VarFamily::X : VarFamily::Y,
            idx.convert_to<int>()};
      return Polynomial::variable(mode_, v);
    }
    if (std::isdigit(static_cast<unsigned char>(*c)))
      return Polynomial::constant(mode_, read_uint());
    fail(pos_, std::string("unexpected character '") + *c + "'");
  }
};

std::string var_name(const Var& v, Mode mode, bool latex) {
  char base = (v.family == VarFamily::X) ? 'x' : 'y';
  if (mode == Mode::K) base = static_cast<char>(std::toupper(base));
  if (latex) return std::string(1, base) + "_{" + std::to_string(v.index) + "}";
  return std::string(1, base) + std::to_string(v.index);
}

std::string monomial_text(const Monomial& m, Mode mode, bool latex) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += latex ? " " : "*";
    out += var_name(v, mode, latex);
    if (e != 1) {
      if (latex)
        out += "^{" + std::to_string(e) + "}";
      else
        out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::string render_text(const Polynomial& f, bool latex) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::string ms = monomial_text(m, f.mode(), latex);
    if (ms.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + (latex ? " " : "*");
      out += ms;
    }
    first = false;
  }
  return out;
}

}  // namespace

Polynomial parse_poly(std::string_view text, Mode default_mode) {
  return Parser(text, default_mode).run();
}

std::string render(const Polynomial& f, PolyFormat fmt) {
  if (fmt == PolyFormat::Text) return render_text(f, false);
  if (fmt == PolyFormat::Latex) return render_text(f, true);

  nlohmann::ordered_json j;
  j["mode"] = (f.mode() == Mode::K) ? "K" : "cohomological";
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : f.terms()) {
    nlohmann::ordered_json t;
    t["coeff"] = c.str();
    nlohmann::ordered_json xs = nlohmann::ordered_json::object();
    nlohmann::ordered_json ys = nlohmann::ordered_json::object();
    for (const auto& [v, e] : m.factors()) {
      auto& dst = (v.family == VarFamily::X) ? xs : ys;
      dst[std::to_string(v.index)] = e;
    }
    t["x"] = xs;
    t["y"] = ys;
    j["terms"].push_back(t);
  }
  return j.dump();
}

Polynomial poly_from_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad polynomial JSON: ") + e.what());
  }
  const std::string mode_s = j.value("mode", "cohomological");
  if (mode_s != "cohomological" && mode_s != "K")
    throw FormatError("bad polynomial JSON: unknown mode '" + mode_s + "'");
  Mode mode = (mode_s == "K") ? Mode::K : Mode::Cohomological;
  Polynomial out(mode);
  if (!j.contains("terms")) return out;
  for (const auto& t : j.at("terms")) {
    Monomial m;
    auto read_family = [&](const char* key, VarFamily fam) {
      if (!t.contains(key)) return;
      for (const auto& [idx, e] : t.at(key).items())
        m.set_exponent(Var{fam, std::stoi(idx)}, e.get<int>());
    };
    read_family("x", VarFamily::X);
    read_family("y", VarFamily::Y);
    out.add_term(m, Int(t.at("coeff").get<std::string>()));
  }
  return out;
}

}  // namespace schubert
