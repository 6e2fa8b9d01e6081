#pragma once

// Verification representations: the symplectic action on H1 and the action
// on the free group of rank 4 lifting the twists along the chain c1..c5.
//
// Convention: a word t_1 t_2 ... t_n acts as t_1 o t_2 o ... o t_n, so its
// matrix is M_1 M_2 ... M_n.

#include <optional>

#include "mcg/free_group.hpp"
#include "mcg/h1.hpp"
#include "mcg/registry.hpp"
#include "mcg/word.hpp"

namespace mcg {

SpMatrix transvection(const CurveRef& c, const Registry& reg);
SpMatrix word_matrix(const TwistWord& w, const Registry& reg);

/// Right-handed twist along a base curve, lifted to an automorphism of the
/// free group on a1 b1 a2 b2.  Available for c1..c5; throws VerificationError
/// otherwise.
Pi1Automorphism twist_pi1(std::string_view base);
bool has_twist_pi1(std::string_view base);
/// Twist along an arbitrary curve reference u(b): phi_u T_b phi_u^-1.
Pi1Automorphism twist_pi1(const CurveRef& c, int exp = 1);
Pi1Automorphism letters_pi1(const LetterWord& w);
Pi1Automorphism word_pi1(const TwistWord& w);

/// A loop representing the curve, if the base has a pi1 word and every
/// conjugator letter has a pi1 lift.
std::optional<FreeWord> loop_word(const CurveRef& c, const Registry& reg);

}  // namespace mcg
