#pragma once

// Words in the free group on a1, b1, a2, b2 and automorphisms of it.
// The genus-2 surface group is the quotient by [a1,b1][a2,b2]; comparisons
// here are made in the free group, so "equal up to inner automorphism" is a
// sufficient (not necessary) certificate for equality in Out(pi_1).

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcg/h1.hpp"

namespace mcg {

/// Generator letters are +-1..+-4 for a1, b1, a2, b2.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<int> letters);

  static FreeWord generator(int g) { return FreeWord({g}); }
  static FreeWord parse(std::string_view text);
  /// [a1,b1][a2,b2] = a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1.
  static FreeWord surface_relator();

  const std::vector<int>& letters() const { return w_; }
  std::size_t length() const { return w_.size(); }
  bool empty() const { return w_.empty(); }

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& o) const;
  FreeWord cyclically_reduced() const;
  /// w = u core u^-1 with core cyclically reduced.
  std::pair<FreeWord, FreeWord> conjugate_split() const;
  /// Exponent sums in (A1, B1, A2, B2).
  H1Vector abelianize() const;

  bool operator==(const FreeWord&) const = default;

 private:
  std::vector<int> w_;  // always freely reduced
};

/// Conjugacy in the free group (equality of cyclic reductions up to rotation).
bool conjugate(const FreeWord& x, const FreeWord& y);

std::string to_string(const FreeWord& w);
const char* generator_name(int g);

class Pi1Automorphism {
 public:
  Pi1Automorphism();  // identity
  explicit Pi1Automorphism(std::array<FreeWord, 4> images) : images_(std::move(images)) {}

  const FreeWord& image(int g) const { return images_[g - 1]; }
  FreeWord apply(const FreeWord& w) const;
  /// Composition (this after other).
  Pi1Automorphism operator*(const Pi1Automorphism& other) const;
  /// Action on H1: column j holds the exponent sums of the image of generator j.
  SpMatrix abelianization() const;
  /// The surface relator is sent to a conjugate of itself or of its inverse.
  bool preserves_surface_relator() const;

  bool operator==(const Pi1Automorphism&) const = default;

 private:
  std::array<FreeWord, 4> images_;
};

/// Some w with f(x) = w g(x) w^-1 for every generator x, if one exists in the
/// free group.  Returns the conjugator.
std::optional<FreeWord> inner_difference(const Pi1Automorphism& f, const Pi1Automorphism& g);
inline bool equal_up_to_inner(const Pi1Automorphism& f, const Pi1Automorphism& g) {
  return inner_difference(f, g).has_value();
}

}  // namespace mcg
