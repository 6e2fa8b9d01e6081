#pragma once

// Simple-connectivity checks for the total space of a Lefschetz fibration:
// the presentation <a1 b1 a2 b2 | [a1,b1][a2,b2], vanishing cycles>, its
// abelianization by Smith normal form, and Todd-Coxeter coset enumeration.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mcg/registry.hpp"
#include "mcg/word.hpp"

namespace mcg {

/// Letters are +-(i+1) for generator i.
struct FPGroup {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;  // freely reduced, never empty
};

/// Text form: first line "gens: a b ...", then one relator per line
/// ("a b^-1 a^3"); '#' comments; a line "1" is the trivial relator and is dropped.
FPGroup parse_presentation(std::string_view text);
std::string to_text(const FPGroup& g);

struct TotalSpacePresentation {
  FPGroup group;
  /// One entry per token whose loop was replaced by its homology class.
  std::vector<std::string> abelianized;
  /// Tokens whose relator is the trivial word (null-homologous, abelianized).
  std::size_t trivial_relators = 0;
  /// Surface relator plus the genuine loop relators only.  pi1 of the total
  /// space is a quotient of this group, so order 1 here proves pi1 = 1.
  FPGroup loops_only;
};

TotalSpacePresentation total_space_presentation(const TwistWord& w, const Registry& reg);

/// Elementary divisors d1 | d2 | ... of Z^r / (relation lattice), one per
/// generator: 1 for a trivial factor, 0 for a free Z, d > 1 for Z/d.
struct AbelianInvariants {
  std::vector<long long> divisors;
  bool trivial() const;
  std::size_t free_rank() const;
};

/// Diagonal of the Smith normal form (nonnegative, divisibility chain,
/// length min(rows, cols)).
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m);

/// H1 of the total space from the registry classes of the vanishing cycles.
AbelianInvariants h1_quotient(const TwistWord& w, const Registry& reg);
/// Abelianization of a finite presentation.
AbelianInvariants abelianization(const FPGroup& g);

struct CosetResult {
  bool complete = false;       // false: the coset limit was reached
  std::size_t order = 0;       // index of the trivial subgroup when complete
  std::size_t defined = 0;     // cosets defined in total
};

/// HLT enumeration over the trivial subgroup with no lookahead: cosets are
/// scanned and defined strictly in order, so the run is deterministic.
CosetResult coset_enumerate(const FPGroup& g, std::size_t limit);

std::string to_string(const AbelianInvariants& a);

}  // namespace mcg
