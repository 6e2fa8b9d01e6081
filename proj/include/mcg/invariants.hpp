#pragma once

// Bookkeeping for the total space of a genus-2 Lefschetz fibration over the
// sphere: e = n - 4, the hyperelliptic signature formula
// 5 sigma = -3 n0 - n1, and the rational blowdown ledger.

#include <optional>
#include <string>

#include "mcg/word.hpp"

namespace mcg {

struct FibrationInvariants {
  long long n = 0;
  std::optional<long long> n0;  // unknown after a blowdown ledger step with p > 2
  std::optional<long long> n1;
  long long e = 0;
  long long sigma = 0;
  long long c1sq = 0;
  long long chi_h = 0;
  long long b2plus = 0;
  long long b2minus = 0;

  bool operator==(const FibrationInvariants&) const = default;
};

/// Throws VerificationError when the signature or a derived field is not integral.
FibrationInvariants fibration_invariants(const Census& c);

/// Effect of a rational blowdown along a C_p configuration (p >= 2).
FibrationInvariants blowdown_ledger(const FibrationInvariants& inv, long long p);

/// "aCP²#bCP̄²" from b2+ and b2-.  The caller asserts simple connectivity and
/// an odd indefinite form; refuses when b2+ = 0.
std::string homeo_type(const FibrationInvariants& inv);

/// One report line: "n n0 n1 e sigma c1sq chi_h b2+ b2-" ("?" for unknown counts).
std::string invariant_line(const FibrationInvariants& inv);
std::string invariant_header();

}  // namespace mcg
