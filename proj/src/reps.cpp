#include "mcg/reps.hpp"

#include <map>
#include <string>

#include "mcg/errors.hpp"

namespace mcg {

SpMatrix transvection(const CurveRef& c, const Registry& reg) {
  return transvection_matrix(reg.homology_class(c));
}

SpMatrix word_matrix(const TwistWord& w, const Registry& reg) {
  SpMatrix m = SpMatrix::identity();
  for (const auto& t : w.tokens) {
    const SpMatrix tv = transvection(t.curve, reg);
    m = m * (t.exponent > 0 ? tv : tv.symplectic_inverse());
  }
  return m;
}

namespace {

struct Lift {
  Pi1Automorphism forward;
  Pi1Automorphism backward;
};

Pi1Automorphism from_text(const char* a1, const char* b1, const char* a2, const char* b2) {
  return Pi1Automorphism({FreeWord::parse(a1), FreeWord::parse(b1), FreeWord::parse(a2), FreeWord::parse(b2)});
}

// Loops: c1 = b1, c2 = a1, c3 = b1 b2, c4 = a2, c5 = b2.
const std::map<std::string, Lift, std::less<>>& lifts() {
  static const std::map<std::string, Lift, std::less<>> table = {
      {"c1", {from_text("a1 b1", "b1", "a2", "b2"), from_text("a1 b1^-1", "b1", "a2", "b2")}},
      {"c2", {from_text("a1", "b1 a1^-1", "a2", "b2"), from_text("a1", "b1 a1", "a2", "b2")}},
      {"c3",
       {from_text("b2 b1 a1", "b1", "b1 b2 a2", "b2"), from_text("b1^-1 b2^-1 a1", "b1", "b2^-1 b1^-1 a2", "b2")}},
      {"c4", {from_text("a1", "b1", "a2", "b2 a2^-1"), from_text("a1", "b1", "a2", "b2 a2")}},
      {"c5", {from_text("a1", "b1", "a2 b2", "b2"), from_text("a1", "b1", "a2 b2^-1", "b2")}},
  };
  return table;
}

}  // namespace

bool has_twist_pi1(std::string_view base) { return lifts().count(base) > 0; }

Pi1Automorphism twist_pi1(std::string_view base) {
  auto it = lifts().find(base);
  if (it == lifts().end()) throw VerificationError("no pi1 lift for the twist along " + std::string(base));
  return it->second.forward;
}

Pi1Automorphism letters_pi1(const LetterWord& w) {
  Pi1Automorphism f;
  for (const auto& l : w) {
    auto it = lifts().find(l.curve);
    if (it == lifts().end()) throw VerificationError("no pi1 lift for the twist along " + l.curve);
    f = f * (l.exp > 0 ? it->second.forward : it->second.backward);
  }
  return f;
}

Pi1Automorphism twist_pi1(const CurveRef& c, int exp) {
  return letters_pi1(c.twist_letters(exp));
}

Pi1Automorphism word_pi1(const TwistWord& w) {
  Pi1Automorphism f;
  for (const auto& t : w.tokens) f = f * twist_pi1(t.curve, t.exponent);
  return f;
}

std::optional<FreeWord> loop_word(const CurveRef& c, const Registry& reg) {
  const auto& base = reg.curve(c.base);
  if (!base.pi1) return std::nullopt;
  for (const auto& l : c.conjugator) {
    if (!has_twist_pi1(l.curve)) return std::nullopt;
  }
  return letters_pi1(c.conjugator).apply(*base.pi1);
}

}  // namespace mcg
