#include <doctest.h>

#include <random>

#include "mcg/moves.hpp"
#include "mcg/pi1.hpp"
#include "mcg/reps.hpp"
#include "support.hpp"

using namespace mcg;

namespace {

const Registry& reg() { return Registry::standard(); }

MoveErrorKind rejection(const TwistWord& w, const Move& m, Context ctx) {
  try {
    apply_move(w, m, ctx, reg());
  } catch (const MoveError& e) {
    return e.kind();
  }
  FAIL("move accepted: " << to_string(m) << " on " << to_string(w));
  return MoveErrorKind::kPatternMismatch;
}

int chain_index(const std::string& base) { return base[1] - '0'; }

}  // namespace

TEST_CASE("move script syntax") {
  CHECK(parse_move("commute 7") == Move::at(Move::Kind::kCommute, 7));
  CHECK(to_string(parse_move("lantern 4 L1 contract")) == "lantern 4 L1 contract");
  CHECK(to_string(parse_move("gconj c1 c2^-1")) == "gconj c1 c2^-1");
  CHECK(to_string(parse_move("cyclic -2")) == "cyclic -2");
  CHECK(parse_script("# only comments\n\n").empty());
  try {
    parse_script("commute 1\nbraid 2 sideways\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 9);
  }
  CHECK_THROWS_AS(parse_move("commute -1"), ParseError);
  CHECK_THROWS_AS(parse_move("twirl 3"), ParseError);
}

TEST_CASE("word files declare relators with '= 1'") {
  CHECK(testing::load_word("relator_k3.twf").context == Context::kRelator);
  CHECK(testing::load_word("ten.twf").context == Context::kSubword);
  CHECK_THROWS_AS(parse_word_input("c1 = c2"), ParseError);
}

TEST_CASE("single moves") {
  const TwistWord w = parse_word("c1 c3 c1 c2 c1");
  CHECK(to_string(apply_commute(w, 0, reg()).after) == "c3 c1 c1 c2 c1");
  CHECK(rejection(w, Move::at(Move::Kind::kCommute, 2), Context::kSubword) == MoveErrorKind::kNonDisjoint);
  CHECK(to_string(apply_braid(w, 2, true, reg()).after) == "c1 c3 c2 c1 c2");
  CHECK(rejection(w, Move::at(Move::Kind::kBraid, 0), Context::kSubword) == MoveErrorKind::kNonUnitIntersection);
  CHECK(rejection(w, Move::at(Move::Kind::kBraid, 1), Context::kSubword) == MoveErrorKind::kPatternMismatch);
  CHECK(to_string(apply_hurwitz(w, 2, true, reg()).after) == "c1 c3 conj(c1; c2) c1 c1");
  CHECK(to_string(apply_hurwitz(w, 2, false, reg()).after) == "c1 c3 c2 conj(c2^-1; c1) c1");
  CHECK(rejection(w, Move::at(Move::Kind::kCyclic, 1), Context::kSubword) == MoveErrorKind::kNotRelator);
  CHECK(rejection(w, Move::at(Move::Kind::kCommute, 4), Context::kSubword) == MoveErrorKind::kIndexOutOfRange);
  Move lan = Move::at(Move::Kind::kLantern, 0);
  lan.config = "L1";
  CHECK(rejection(w, lan, Context::kSubword) == MoveErrorKind::kConfigMismatch);
  lan.config = "L9";
  CHECK(rejection(w, lan, Context::kSubword) == MoveErrorKind::kUnknownConfig);
}

TEST_CASE("lantern contraction and expansion are inverse") {
  const TwistWord w = parse_word("c2 c5 c5 c1 c1 c4");
  const MoveStep c = apply_lantern(w, 1, "L1", true, reg());
  CHECK(to_string(c.after) == "c2 c3 delta x c4");
  CHECK(c.lantern);
  const MoveStep e = apply_lantern(c.after, 1, "L1", false, reg());
  CHECK(census(e.after, reg()) == census(w, reg()));
  CHECK(word_matrix(e.after, reg()) == word_matrix(w, reg()));
}

TEST_CASE("three lantern embeddings reproduce the displayed words") {
  const char* expected[] = {
      "conj(c5; c4) c3 c2 c3 delta x c4 c3 conj(c1^-1; c2)",
      "c5 c4 c5 conj(c3; c2) conj(c3; c4) kbar hbar c5 conj(c1^-1; c2)",
      "conj(c5; c4) conj(c3; c2) c1 k h conj(c3^-1; c4) c1 c2 c1",
  };
  for (int k = 0; k < 3; ++k) {
    const auto cert = testing::derive("ten.twf", "lantern_case" + std::to_string(k + 1) + ".twf");
    CHECK(to_string(cert.final_word) == expected[k]);
    CHECK(cert.summary.lantern_contractions == 1);
  }
}

TEST_CASE("full derivation: six lanterns, 24 twists, census (18, 6)") {
  const auto cert = testing::derive("relator_k3.twf", "lemma63.twf");
  CHECK(cert.final_word.size() == 24);
  CHECK(cert.summary.census.nonseparating == 18);
  CHECK(cert.summary.census.separating == 6);
  CHECK(cert.summary.lantern_contractions == 6);
  CHECK(cert.summary.lantern_expansions == 0);
  for (const auto& s : cert.steps) CHECK(s.digest_before == s.digest_after);
  CHECK(word_matrix(cert.final_word, reg()).is_identity());
}

TEST_CASE("failed scripts name the step") {
  const auto in = testing::load_word("ten.twf");
  try {
    run_script(in, parse_script("commute 1\nbraid 0 fwd\n"), reg());
    FAIL("expected StepFailure");
  } catch (const StepFailure& e) {
    CHECK(e.step() == 0);
    CHECK(e.code() == ExitCode::kIllegalMove);
  }
  CHECK_THROWS_AS(run_script(parse_word_input("c1 c2 = 1"), {}, reg()), VerificationError);
}

TEST_CASE("certificate round trip and tamper detection") {
  const auto cert = testing::derive("relator_k3.twf", "lemma63.twf");
  const std::string json = certificate_to_json(cert);
  const auto back = certificate_from_json(json);
  CHECK(certificate_to_json(back) == json);
  CHECK_NOTHROW(check_certificate(back, reg()));
  CHECK(json == read_file(testing::data_path("lemma63.cert")));

  auto edited = back;
  edited.steps[10].after.tokens[3].curve.base = "h";
  CHECK_THROWS_AS(check_certificate(edited, reg()), VerificationError);
  auto summary = back;
  summary.summary.census.separating = 5;
  CHECK_THROWS_AS(check_certificate(summary, reg()), VerificationError);
  auto digest = back;
  digest.registry_digest = "0000000000000000";
  CHECK_THROWS_AS(check_certificate(digest, reg()), VerificationError);

  const auto empty = testing::derive("relator_k3.twf", "empty.twf");
  CHECK(empty.steps.empty());
  CHECK_NOTHROW(check_certificate(certificate_from_json(certificate_to_json(empty)), reg()));
}

TEST_CASE("property: 1000 randomized illegal moves are rejected") {
  std::mt19937_64 rng(2024);
  static const char* chain[] = {"c1", "c2", "c3", "c4", "c5"};
  std::uniform_int_distribution<int> pick(0, 4), kind(0, 4);
  int rejected = 0;
  while (rejected < 1000) {
    TwistWord w;
    for (int i = 0; i < 12; ++i) w.tokens.emplace_back(CurveRef(chain[pick(rng)]));
    std::uniform_int_distribution<std::size_t> pos(0, w.size() - 3);
    const std::size_t i = pos(rng);
    const int a = chain_index(w[i].curve.base), b = chain_index(w[i + 1].curve.base);
    const int c = chain_index(w[i + 2].curve.base);
    Move m;
    MoveErrorKind want{};
    switch (kind(rng)) {
      case 0:  // commute across an intersecting pair
        if (std::abs(a - b) != 1) continue;
        m = Move::at(Move::Kind::kCommute, static_cast<long long>(i));
        want = MoveErrorKind::kNonDisjoint;
        break;
      case 1:  // braid on a non-a-b-a pattern
        if (a == c) continue;
        m = Move::at(Move::Kind::kBraid, static_cast<long long>(i));
        want = MoveErrorKind::kPatternMismatch;
        break;
      case 2:  // braid on disjoint curves
        w.tokens[i + 2] = w.tokens[i];
        if (std::abs(a - b) == 1) continue;
        m = Move::at(Move::Kind::kBraid, static_cast<long long>(i));
        want = MoveErrorKind::kNonUnitIntersection;
        break;
      case 3:  // rotation of a subword
        m = Move::at(Move::Kind::kCyclic, static_cast<long long>(i));
        want = MoveErrorKind::kNotRelator;
        break;
      default:  // index past the end
        m = Move::at(Move::Kind::kCommute, static_cast<long long>(w.size() - 1 + i));
        want = MoveErrorKind::kIndexOutOfRange;
        break;
    }
    CHECK(rejection(w, m, Context::kSubword) == want);
    ++rejected;
  }
  CHECK(rejected == 1000);
}

TEST_CASE("property: random words act symplectically") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> len(1, 50);
  for (int n = 0; n < 300; ++n) {
    const SpMatrix m = word_matrix(testing::random_word(rng, len(rng)), reg());
    CHECK(m.is_symplectic());
    CHECK(m.determinant() == 1);
  }
}

TEST_CASE("property: non-lantern moves keep the census, the H1 action and the H1 quotient") {
  std::mt19937_64 rng(17);
  const auto start = testing::load_word("relator_k3.twf");
  std::uniform_int_distribution<int> kind(0, 4);
  for (int trial = 0; trial < 20; ++trial) {
    TwistWord w = start.word;
    const Census c0 = census(w, reg());
    int applied = 0;
    for (int step = 0; step < 60; ++step) {
      std::uniform_int_distribution<std::size_t> pos(0, w.size() - 1);
      Move m;
      switch (kind(rng)) {
        case 0: m = Move::at(Move::Kind::kCommute, static_cast<long long>(pos(rng))); break;
        case 1: m = Move::at(Move::Kind::kBraid, static_cast<long long>(pos(rng))); break;
        case 2: m = Move::at(Move::Kind::kHurwitzLeft, static_cast<long long>(pos(rng))); break;
        case 3: m = Move::at(Move::Kind::kHurwitzRight, static_cast<long long>(pos(rng))); break;
        default: m = Move::at(Move::Kind::kCyclic, static_cast<long long>(pos(rng))); break;
      }
      try {
        w = apply_move(w, m, Context::kRelator, reg()).after;
        ++applied;
      } catch (const MoveError&) {
      }
      CHECK(census(w, reg()) == c0);
    }
    CHECK(applied > 0);
    CHECK(word_matrix(w, reg()).is_identity());
    CHECK(h1_quotient(w, reg()).trivial());
  }
}
