#pragma once

// Formal Seiberg-Witten calculus on basic-class supports: finitely supported
// integer functions on a lattice of named classes, with blow-up, descent
// through rational blowdowns along C_p configurations, knot surgery and the
// minimality test.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "mcg/errors.hpp"

namespace mcg {

using Rational = boost::rational<long long>;

/// Integer combination of named basis classes; zero coefficients are never stored.
using LatticeClass = std::map<std::string, long long>;

LatticeClass operator+(const LatticeClass& a, const LatticeClass& b);
LatticeClass operator-(const LatticeClass& a);
LatticeClass operator-(const LatticeClass& a, const LatticeClass& b);
LatticeClass operator*(long long k, const LatticeClass& a);
LatticeClass basis_class(const std::string& name);

/// "E1+E2", "-2T", "0".
std::string to_string(const LatticeClass& c);
LatticeClass parse_class(std::string_view text);

/// Bad lattice data or a malformed configuration.
class LatticeError : public Error {
 public:
  explicit LatticeError(const std::string& what) : Error(ExitCode::kVerification, what) {}
};

class ClassLattice {
 public:
  void declare(const std::string& name, long long self);
  bool has(const std::string& name) const { return self_.count(name) != 0; }
  const std::vector<std::string>& names() const { return order_; }
  void set_pairing(const std::string& a, const std::string& b, long long v);
  /// Declared value, or 0 for an unstated pair.
  long long basis_pairing(const std::string& a, const std::string& b) const;
  /// Pairs of distinct basis classes whose pairing was never stated.
  std::vector<std::pair<std::string, std::string>> defaulted_pairs() const;

  /// Pairing in the ambient lattice; throws LatticeError on undeclared names.
  long long pairing(const LatticeClass& a, const LatticeClass& b) const;

  /// Pairing of the induced classes after the recorded blowdowns: the
  /// orthogonal projection away from every blown-down sphere,
  /// a.b - v_a^T Q^-1 v_b with Q the Gram matrix of the spheres.
  Rational effective_pairing(const LatticeClass& a, const LatticeClass& b) const;

  /// Records spheres as blown down.  Throws LatticeError when their Gram
  /// matrix together with earlier spheres is singular.
  void blow_down(const std::vector<LatticeClass>& spheres);
  const std::vector<LatticeClass>& blown_down() const { return spheres_; }

 private:
  void check(const LatticeClass& c) const;

  std::vector<std::string> order_;
  std::map<std::string, long long> self_;
  std::map<std::pair<std::string, std::string>, long long> pairs_;
  std::vector<LatticeClass> spheres_;
  std::vector<std::vector<Rational>> q_inverse_;
};

/// Basic class -> nonzero SW value.
using SWFunction = std::map<LatticeClass, long long>;

/// "sw = +1 e(E1+E2) -1 e(-E1-E2)"; the zero function prints as "sw = 0".
std::string to_string(const SWFunction& sw);
/// Accepts the terms of the text form (with or without the "sw =" prefix).
SWFunction parse_sw(std::string_view text);

/// Product with e^E + e^-E.  Declares E in the lattice (E.E = -1, orthogonal
/// to every existing class); throws LatticeError when E is already present.
SWFunction blowup(const SWFunction& sw, const std::string& exceptional, ClassLattice& lat);

/// Inverse filter of blowup: keeps classes with E-coefficient +1 and drops E.
SWFunction blowdown_exceptional(const SWFunction& sw, const std::string& exceptional);

/// Descent through the rational blowdown of the linear chain u_1 .. u_{p-1}
/// with u_{p-1}^2 = -(p+2), the others -2 and u_i.u_{i+1} = 1.  Keeps the
/// classes L with L.u_i = 0 for i <= p-2 and L.u_{p-1} = +-p (values and
/// labels unchanged), then records the spheres as blown down in lat.
SWFunction descend_blowdown(const SWFunction& sw, const std::vector<LatticeClass>& spheres, long long p,
                            ClassLattice& lat);

struct KnotSurgeryResult {
  SWFunction sw;
  bool monic = true;  // false: the result admits no symplectic structure
};

/// Symmetrized Alexander polynomial: odd-length palindromic coefficient list,
/// centre entry is the constant term.
void check_alexander(const std::vector<long long>& coeffs);
std::vector<long long> multiply_alexander(const std::vector<long long>& a, const std::vector<long long>& b);

/// SW . Delta(t^2) with t^2 = e^{2T}; requires T^2 = 0.
KnotSurgeryResult knot_surgery(const SWFunction& sw, const std::string& torus, const std::vector<long long>& alexander,
                               const ClassLattice& lat);

struct ClassPair {
  LatticeClass k;
  LatticeClass k_prime;
  Rational square;  // (K - K')^2 after the recorded blowdowns
};

struct MinimalityResult {
  bool minimal = true;
  std::vector<ClassPair> pairs;      // every unordered pair of distinct basic classes
  std::optional<ClassPair> offender;  // first pair with square -4
};

MinimalityResult minimality_check(const SWFunction& sw, const ClassLattice& lat);

/// sw(-L) = +-sw(L) for every basic class L.
bool charge_symmetric(const SWFunction& sw);

std::set<LatticeClass> support(const SWFunction& sw);

std::string to_string(const Rational& r);

/// Interpreter for the sw script language:
///   class NAME SELF        declare a basis class
///   pair A B VALUE         declare a pairing
///   start TERMS            set the function, e.g. "start +1 e(0)"
///   blowup E | blowdown E
///   descend P U1 .. U(P-1)
///   knot T [c, ...]        knot surgery on the current function
///   save NAME | load NAME | compare A B
///   print | minimal? | symmetric?
struct SWScriptResult {
  std::string report;
  SWFunction final_sw;
  std::optional<MinimalityResult> last_minimality;
};

SWScriptResult run_sw_script(std::string_view text);

}  // namespace mcg
