#include "mcg/word.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "mcg/errors.hpp"
#include "mcg/registry.hpp"

namespace mcg {

LetterWord free_reduce(LetterWord w) {
  LetterWord out;
  out.reserve(w.size());
  for (auto& l : w) {
    if (!out.empty() && out.back().curve == l.curve && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(std::move(l));
    }
  }
  return out;
}

LetterWord inverse(const LetterWord& w) {
  LetterWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

LetterWord concat(const LetterWord& a, const LetterWord& b) {
  LetterWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(std::move(out));
}

CurveRef::CurveRef(LetterWord conj, std::string base_name)
    : conjugator(free_reduce(std::move(conj))), base(std::move(base_name)) {}

CurveRef CurveRef::conjugated_by(const LetterWord& g) const {
  return CurveRef(concat(g, conjugator), base);
}

LetterWord CurveRef::twist_letters(int exp) const {
  LetterWord out = conjugator;
  out.push_back(Letter{base, exp});
  auto inv = inverse(conjugator);
  out.insert(out.end(), inv.begin(), inv.end());
  return free_reduce(std::move(out));
}

bool TwistWord::positive() const {
  for (const auto& t : tokens) {
    if (t.exponent != 1) return false;
  }
  return true;
}

TwistWord operator*(const TwistWord& a, const TwistWord& b) {
  TwistWord out = a;
  out.tokens.insert(out.tokens.end(), b.tokens.begin(), b.tokens.end());
  return out;
}

TwistWord normalize(TwistWord w) {
  TwistWord out;
  out.tokens.reserve(w.size());
  for (auto& t : w.tokens) {
    t.curve = CurveRef(std::move(t.curve.conjugator), std::move(t.curve.base));
    if (!out.tokens.empty() && out.tokens.back().curve == t.curve &&
        out.tokens.back().exponent == -t.exponent) {
      out.tokens.pop_back();
    } else {
      out.tokens.push_back(std::move(t));
    }
  }
  return out;
}

TwistWord power(const TwistWord& w, unsigned n) {
  TwistWord out;
  out.tokens.reserve(w.size() * n);
  for (unsigned i = 0; i < n; ++i) {
    out.tokens.insert(out.tokens.end(), w.tokens.begin(), w.tokens.end());
  }
  return normalize(std::move(out));
}

TwistWord conjugate_all(const TwistWord& w, const LetterWord& g) {
  TwistWord out;
  out.tokens.reserve(w.size());
  for (const auto& t : w.tokens) out.tokens.emplace_back(t.curve.conjugated_by(g), t.exponent);
  return normalize(std::move(out));
}

Census census(const TwistWord& w, const Registry& registry) {
  Census c;
  for (const auto& t : w.tokens) {
    ++c.n;
    if (registry.is_separating(t.curve)) {
      ++c.separating;
    } else {
      ++c.nonseparating;
    }
  }
  return c;
}

// ---------------------------------------------------------------- printing

std::string to_string(const Letter& l) { return l.exp == 1 ? l.curve : l.curve + "^" + std::to_string(l.exp); }

std::string to_string(const LetterWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w[i]);
  }
  return s;
}

std::string to_string(const CurveRef& c) {
  if (c.conjugator.empty()) return c.base;
  return "conj(" + to_string(c.conjugator) + "; " + c.base + ")";
}

std::string to_string(const TwistToken& t) {
  std::string s = to_string(t.curve);
  if (t.exponent != 1) s += "^" + std::to_string(t.exponent);
  return s;
}

std::string to_string(const TwistWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w.tokens[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const TwistWord& w) { return os << to_string(w); }
std::ostream& operator<<(std::ostream& os, const CurveRef& c) { return os << to_string(c); }

// ----------------------------------------------------------------- parsing

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
        // '*' and '.' are accepted as visual product separators
        advance();
      } else {
        break;
      }
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string name() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      fail("expected a curve name");
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      advance();
    }
    return std::string(text_.substr(start, pos_ - start));
  }
  bool peek_keyword(std::string_view kw) {
    skip_space();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    std::size_t after = pos_ + kw.size();
    return after < text_.size() && text_[after] == '(';
  }
  void consume(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) advance();
  }
  long long integer() {
    skip_space();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      advance();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) fail("exponent too large");
      advance();
    }
    return neg ? -v : v;
  }
  /// Optional "^n" or "^{n}" suffix; returns 1 when absent.
  long long exponent() {
    if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
    advance();
    bool brace = accept('{');
    long long e = integer();
    if (brace) expect('}');
    return e;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

CurveRef parse_curve_expr(Lexer& lx);

// Letters contributed by one conjugator item: name^e or conj(...)^e.
void parse_conjugator_item(Lexer& lx, LetterWord& out) {
  if (lx.peek_keyword("conj")) {
    CurveRef c = parse_curve_expr(lx);
    long long e = lx.exponent();
    if (e == 0) lx.fail("zero exponent");
    for (long long i = 0; i < (e > 0 ? e : -e); ++i) {
      auto l = c.twist_letters(e > 0 ? 1 : -1);
      out.insert(out.end(), l.begin(), l.end());
    }
    return;
  }
  std::string n = lx.name();
  long long e = lx.exponent();
  if (e == 0) lx.fail("zero exponent");
  for (long long i = 0; i < (e > 0 ? e : -e); ++i) out.push_back(Letter{n, e > 0 ? 1 : -1});
}

CurveRef parse_curve_expr(Lexer& lx) {
  if (!lx.peek_keyword("conj")) return CurveRef(lx.name());
  lx.consume(4);
  lx.expect('(');
  LetterWord g;
  while (lx.peek() != ';') {
    if (lx.at_end()) lx.fail("unterminated conj(");
    parse_conjugator_item(lx, g);
  }
  lx.expect(';');
  CurveRef inner = parse_curve_expr(lx);
  lx.expect(')');
  return inner.conjugated_by(free_reduce(std::move(g)));
}

void parse_items(Lexer& lx, TwistWord& out, bool in_group) {
  while (!lx.at_end()) {
    char c = lx.peek();
    if (c == ')') {
      if (!in_group) lx.fail("unbalanced ')'");
      return;
    }
    if (c == '(') {
      lx.expect('(');
      TwistWord inner;
      parse_items(lx, inner, true);
      lx.expect(')');
      long long e = lx.exponent();
      if (e < 0) lx.fail("negative group exponents are not supported");
      for (long long i = 0; i < e; ++i) out.tokens.insert(out.tokens.end(), inner.tokens.begin(), inner.tokens.end());
      continue;
    }
    if (c == '1') {
      lx.integer();  // the empty word
      continue;
    }
    CurveRef curve = parse_curve_expr(lx);
    long long e = lx.exponent();
    if (e == 0) lx.fail("zero exponent");
    for (long long i = 0; i < (e > 0 ? e : -e); ++i) out.tokens.emplace_back(curve, e > 0 ? 1 : -1);
  }
  if (in_group) lx.fail("unbalanced '('");
}

}  // namespace

LetterWord parse_letter_word(std::string_view text) {
  Lexer lx(text);
  LetterWord out;
  while (!lx.at_end()) {
    if (lx.peek() == '1') {
      lx.integer();
      continue;
    }
    parse_conjugator_item(lx, out);
  }
  return free_reduce(std::move(out));
}

CurveRef parse_curve(std::string_view text) {
  Lexer lx(text);
  CurveRef c = parse_curve_expr(lx);
  if (!lx.at_end()) lx.fail("trailing text after curve");
  return c;
}

TwistWord parse_word(std::string_view text) {
  Lexer lx(text);
  TwistWord out;
  parse_items(lx, out, false);
  return normalize(std::move(out));
}

}  // namespace mcg
