#include "mcg/invariants.hpp"

#include "mcg/errors.hpp"

namespace mcg {

namespace {

long long exact_div(long long num, long long den, const char* what) {
  if (num % den != 0) {
    throw VerificationError(std::string("non-integral ") + what + ": " + std::to_string(num) + "/" +
                            std::to_string(den));
  }
  return num / den;
}

void derive_rest(FibrationInvariants& f) {
  f.c1sq = checked_add(checked_mul(3, f.sigma), checked_mul(2, f.e));
  f.chi_h = exact_div(checked_add(f.sigma, f.e), 4, "chi_h");
  f.b2plus = exact_div(f.e - 2 + f.sigma, 2, "b2+");
  f.b2minus = exact_div(f.e - 2 - f.sigma, 2, "b2-");
}

}  // namespace

FibrationInvariants fibration_invariants(const Census& c) {
  FibrationInvariants f;
  f.n = static_cast<long long>(c.n);
  f.n0 = static_cast<long long>(c.nonseparating);
  f.n1 = static_cast<long long>(c.separating);
  f.e = f.n - 4;
  f.sigma = exact_div(-3 * *f.n0 - *f.n1, 5, "signature");
  derive_rest(f);
  return f;
}

FibrationInvariants blowdown_ledger(const FibrationInvariants& inv, long long p) {
  if (p < 2) throw Error(ExitCode::kParse, "blowdown ledger needs p >= 2, got " + std::to_string(p));
  FibrationInvariants f = inv;
  f.sigma = checked_add(inv.sigma, p - 1);
  f.e = checked_add(inv.e, -(p - 1));
  f.n = f.e + 4;
  if (p == 2 && inv.n0 && inv.n1) {
    // a lantern contraction: two nonseparating twists fewer, one separating more
    f.n0 = *inv.n0 - 2;
    f.n1 = *inv.n1 + 1;
  } else {
    f.n0.reset();
    f.n1.reset();
  }
  derive_rest(f);
  return f;
}

std::string homeo_type(const FibrationInvariants& inv) {
  if (inv.b2plus <= 0) throw VerificationError("homeomorphism lookup needs b2+ > 0 (indefinite form)");
  return std::to_string(inv.b2plus) + "CP²#" + std::to_string(inv.b2minus) + "CP̄²";
}

std::string invariant_header() { return "n n0 n1 e sigma c1sq chi_h b2+ b2-"; }

std::string invariant_line(const FibrationInvariants& f) {
  auto opt = [](const std::optional<long long>& v) { return v ? std::to_string(*v) : std::string("?"); };
  return std::to_string(f.n) + " " + opt(f.n0) + " " + opt(f.n1) + " " + std::to_string(f.e) + " " +
         std::to_string(f.sigma) + " " + std::to_string(f.c1sq) + " " + std::to_string(f.chi_h) + " " +
         std::to_string(f.b2plus) + " " + std::to_string(f.b2minus);
}

}  // namespace mcg
