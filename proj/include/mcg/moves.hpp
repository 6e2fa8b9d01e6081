#pragma once

// Legality-checked rewriting moves on twist words and replayable derivation
// certificates.

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcg/errors.hpp"
#include "mcg/invariants.hpp"
#include "mcg/registry.hpp"
#include "mcg/word.hpp"

namespace mcg {

struct Move {
  enum class Kind { kCommute, kBraid, kHurwitzLeft, kHurwitzRight, kCyclic, kGlobalConj, kLantern, kSimplify };

  Kind kind = Kind::kCommute;
  long long index = 0;      // token position (or rotation amount for kCyclic)
  bool forward = true;      // braid fwd/bwd, lantern contract/expand
  std::string config;       // lantern id
  LetterWord conjugator;    // kGlobalConj

  static Move at(Kind k, long long i) {
    Move m;
    m.kind = k;
    m.index = i;
    return m;
  }

  bool operator==(const Move&) const = default;
};

std::string to_string(const Move& m);
/// One script line, e.g. "commute 7", "lantern 4 L1 contract".
Move parse_move(std::string_view line, std::size_t lineno = 0);
/// A script: one move per line, '#' comments, blank lines ignored.
std::vector<Move> parse_script(std::string_view text);

/// Words are rewritten either as full relators (product = 1, cyclic and
/// global-conjugation moves allowed) or as subwords.
enum class Context { kRelator, kSubword };

struct WordInput {
  TwistWord word;
  Context context = Context::kSubword;
};

/// A word file: a twist word, optionally followed by "= 1" to declare a relator.
WordInput parse_word_input(std::string_view text);

struct MoveStep {
  Move move;
  TwistWord before;
  TwistWord after;
  std::vector<std::string> evidence;
  std::array<long long, 16> digest_before{};
  std::array<long long, 16> digest_after{};
  bool lantern = false;  // a lantern contraction or expansion

  bool operator==(const MoveStep&) const = default;
};

/// Applies one move; throws MoveError when illegal.
MoveStep apply_move(const TwistWord& w, const Move& m, Context ctx, const Registry& reg);

MoveStep apply_commute(const TwistWord& w, std::size_t i, const Registry& reg);
MoveStep apply_braid(const TwistWord& w, std::size_t i, bool forward, const Registry& reg);
MoveStep apply_hurwitz(const TwistWord& w, std::size_t i, bool left, const Registry& reg);
MoveStep apply_cyclic(const TwistWord& w, long long k, Context ctx, const Registry& reg);
MoveStep apply_global_conj(const TwistWord& w, const LetterWord& g, Context ctx, const Registry& reg);
MoveStep apply_lantern(const TwistWord& w, std::size_t i, std::string_view config, bool contract,
                       const Registry& reg);
MoveStep apply_simplify(const TwistWord& w, std::size_t i, const Registry& reg);

struct Summary {
  Census census;
  std::size_t lantern_contractions = 0;
  std::size_t lantern_expansions = 0;
  std::vector<std::string> invariant_lines;  // initial, then after every length change (relators only)
  std::vector<std::string> annotations;

  bool operator==(const Summary&) const = default;
};

struct DerivationCertificate {
  std::string registry_digest;
  WordInput initial;
  std::vector<MoveStep> steps;
  TwistWord final_word;
  Summary summary;
};

/// Thrown by run_script with the failing step index (0-based) and reason.
class StepFailure : public Error {
 public:
  StepFailure(std::size_t step, const std::string& line, const Error& cause)
      : Error(cause.code(), "step " + std::to_string(step + 1) + " (" + line + "): " + cause.what()), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

DerivationCertificate run_script(const WordInput& initial, const std::vector<Move>& script, const Registry& reg);

/// Invariant report after every step that changed the word length.
std::vector<FibrationInvariants> invariant_trajectory(const DerivationCertificate& cert, const Registry& reg);

std::string certificate_to_json(const DerivationCertificate& cert);
DerivationCertificate certificate_from_json(std::string_view text);

/// Replays the certificate against the registry; throws VerificationError at
/// the first divergence.
void check_certificate(const DerivationCertificate& cert, const Registry& reg);

std::string read_file(const std::filesystem::path& path);

}  // namespace mcg
