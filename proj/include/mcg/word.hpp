#pragma once

// Dehn-twist words over named base curves.
//
// A twist along a conjugated curve w(a) is the twist w t_a w^-1, so every
// curve reference flattens to (conjugator word, base name) where the
// conjugator is a word in twists along base curves.  Composition is
// functional: the rightmost token acts first.

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mcg {

class Registry;

/// One twist (or inverse twist) along a base curve; the alphabet of conjugators.
struct Letter {
  std::string curve;
  int exp = 1;  // +1 or -1

  Letter inverse() const { return Letter{curve, -exp}; }
  auto operator<=>(const Letter&) const = default;
};

using LetterWord = std::vector<Letter>;

/// Free reduction of a letter word.
LetterWord free_reduce(LetterWord w);
LetterWord inverse(const LetterWord& w);
LetterWord concat(const LetterWord& a, const LetterWord& b);

/// The curve conjugator(base), conjugator kept freely reduced.
struct CurveRef {
  LetterWord conjugator;
  std::string base;

  CurveRef() = default;
  explicit CurveRef(std::string base_name) : base(std::move(base_name)) {}
  CurveRef(LetterWord conj, std::string base_name);

  bool bare() const { return conjugator.empty(); }
  /// The curve g(this).
  CurveRef conjugated_by(const LetterWord& g) const;
  /// The twist t_this^exp written as a letter word u b^exp u^-1.
  LetterWord twist_letters(int exp) const;

  auto operator<=>(const CurveRef&) const = default;
};

struct TwistToken {
  CurveRef curve;
  int exponent = 1;

  TwistToken() = default;
  explicit TwistToken(CurveRef c, int e = 1) : curve(std::move(c)), exponent(e) {}

  auto operator<=>(const TwistToken&) const = default;
};

struct TwistWord {
  std::vector<TwistToken> tokens;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  const TwistToken& operator[](std::size_t i) const { return tokens[i]; }
  TwistToken& operator[](std::size_t i) { return tokens[i]; }
  bool positive() const;

  bool operator==(const TwistWord&) const = default;
};

TwistWord operator*(const TwistWord& a, const TwistWord& b);

/// Normal form: conjugators freely reduced, adjacent t^e t^-e pairs cancelled.
TwistWord normalize(TwistWord w);
/// n-fold concatenation, normalized.
TwistWord power(const TwistWord& w, unsigned n);
/// Every token's curve replaced by g(curve); the word becomes g w g^-1.
TwistWord conjugate_all(const TwistWord& w, const LetterWord& g);

struct Census {
  std::size_t n = 0;
  std::size_t nonseparating = 0;
  std::size_t separating = 0;
  bool operator==(const Census&) const = default;
};

/// Counts twists by separating type; throws UnknownCurve if a base is unregistered.
Census census(const TwistWord& w, const Registry& registry);

// Canonical text forms.
//   letter:  c1  or  c1^-1
//   token:   base, conj(g1 g2^-1 ...; base), optionally followed by ^-1
//   word:    whitespace-separated tokens; "(w)^n" groups and "1" (empty word)
//            are accepted on input only.
std::string to_string(const Letter& l);
std::string to_string(const LetterWord& w);
std::string to_string(const CurveRef& c);
std::string to_string(const TwistToken& t);
std::string to_string(const TwistWord& w);

LetterWord parse_letter_word(std::string_view text);
CurveRef parse_curve(std::string_view text);
TwistWord parse_word(std::string_view text);

std::ostream& operator<<(std::ostream& os, const TwistWord& w);
std::ostream& operator<<(std::ostream& os, const CurveRef& c);

}  // namespace mcg
