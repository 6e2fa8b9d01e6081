#pragma once

// The curve registry: named simple closed curves on the closed genus-2
// surface with their homology classes, pi_1 representatives, separating
// flags, pairwise geometric intersection numbers and the certified lantern
// configurations.  Immutable after construction.

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcg/free_group.hpp"
#include "mcg/h1.hpp"
#include "mcg/word.hpp"

namespace mcg {

struct BaseCurve {
  std::string name;
  H1Vector homology;
  std::optional<FreeWord> pi1;  // a representative loop, when known
  bool separating = false;
};

struct LanternConfig {
  std::string id;
  std::array<std::string, 4> boundary;  // product of these four twists (pairwise disjoint)
  std::array<std::string, 3> interior;  // equals t_interior[0] t_interior[1] t_interior[2]
};

/// Outcome of an intersection query.  `value` is empty when the registry
/// cannot decide the pair; `trace` lists the reductions that were applied.
struct IntersectionResult {
  std::optional<int> value;
  std::vector<std::string> trace;
};

/// A rewritten curve presentation plus the identities used.
struct Simplification {
  CurveRef curve;
  std::vector<std::string> rules;
};

class Registry {
 public:
  enum class Validation { kFull, kSkipLanterns };

  static Registry parse(std::string_view text, Validation v = Validation::kFull);
  static Registry load(const std::filesystem::path& path, Validation v = Validation::kFull);
  /// The built-in genus-2 registry (same content as data/genus2.reg).
  static const Registry& standard();
  static std::string_view standard_text();

  /// Normalized text form; parse(serialize()) reproduces this registry.
  std::string serialize() const;
  /// FNV-1a 64 of serialize(), as 16 hex digits.
  std::string digest() const;

  bool has_curve(std::string_view name) const;
  const BaseCurve& curve(std::string_view name) const;
  const std::vector<BaseCurve>& curves() const { return curves_; }
  const std::vector<LanternConfig>& lanterns() const { return lanterns_; }
  const LanternConfig* find_lantern(std::string_view id) const;

  /// Registered geometric intersection number of two base curves.
  std::optional<int> base_intersection(std::string_view a, std::string_view b) const;
  /// Geometric intersection of two curve references, using i(w a, w b) = i(a, b)
  /// and twists along curves that fix one side; never guesses.
  IntersectionResult intersection(const CurveRef& a, const CurveRef& b) const;

  H1Vector homology_class(const CurveRef& c) const;
  bool is_separating(const CurveRef& c) const;
  /// H1 action of the conjugator word (rightmost letter acts first).
  SpMatrix letters_matrix(const LetterWord& w) const;

  /// Rewrites c into a presentation of the same isotopy class with a shorter
  /// conjugator, using only identities backed by registry data.
  Simplification simplify(const CurveRef& c) const;

  /// Failures of the lantern identities (boundary product = interior product).
  std::vector<std::string> verify_lanterns() const;

  /// Copy with one homology entry replaced; validation is skipped.
  Registry with_homology(std::string_view name, const H1Vector& v) const;

 private:
  void validate(Validation v) const;
  bool letter_fixes(const Letter& l, std::string_view base) const;
  std::size_t index_of(std::string_view name) const;

  std::vector<BaseCurve> curves_;
  std::map<std::pair<std::string, std::string>, int> intersections_;  // keys ordered by declaration
  std::vector<std::pair<std::string, std::string>> intersection_order_;
  std::vector<LanternConfig> lanterns_;
};

}  // namespace mcg
