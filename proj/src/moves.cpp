#include "mcg/moves.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mcg/errors.hpp"
#include "mcg/reps.hpp"

namespace mcg {

namespace {

struct Field {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Field> fields(std::string_view line) {
  std::vector<Field> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.push_back({std::string(line.substr(i, j - i)), i + 1});
    i = j;
  }
  return out;
}

long long field_int(const Field& f, std::size_t lineno, bool allow_negative) {
  const std::string& s = f.text;
  std::size_t k = 0;
  if (allow_negative && !s.empty() && s[0] == '-') k = 1;
  if (k >= s.size() || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(k), s.end(),
                                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("expected " + std::string(allow_negative ? "an integer" : "a position") + ", got '" + s + "'",
                     lineno, f.column);
  }
  try {
    return std::stoll(s);
  } catch (const std::out_of_range&) {
    throw ParseError("integer out of range '" + s + "'", lineno, f.column);
  }
}

void require_index(const TwistWord& w, std::size_t i, std::size_t span) {
  if (i + span > w.size()) {
    throw MoveError(MoveErrorKind::kIndexOutOfRange, "positions " + std::to_string(i) + ".." +
                                                         std::to_string(i + span - 1) + " in a word of length " +
                                                         std::to_string(w.size()));
  }
}

std::string intersection_text(const CurveRef& a, const CurveRef& b, const IntersectionResult& r) {
  return "i(" + to_string(a) + ", " + to_string(b) + ") = " + (r.value ? std::to_string(*r.value) : "UNKNOWN");
}

// Fills digests and checks that the H1 action is unchanged.
MoveStep finish(Move m, const TwistWord& before, TwistWord after, std::vector<std::string> evidence,
                const Registry& reg, bool lantern = false) {
  MoveStep s;
  s.move = std::move(m);
  s.before = before;
  s.after = std::move(after);
  s.evidence = std::move(evidence);
  s.lantern = lantern;
  const SpMatrix mb = word_matrix(s.before, reg);
  const SpMatrix ma = word_matrix(s.after, reg);
  if (!(mb == ma)) {
    throw VerificationError("H1 action changed by " + to_string(s.move) + ": " + to_string(mb) + " -> " +
                            to_string(ma));
  }
  s.digest_before = mb.digest();
  s.digest_after = ma.digest();
  s.evidence.push_back("H1 action unchanged " + to_string(ma));
  return s;
}

std::vector<std::string> sorted_bases(const TwistWord& w, std::size_t i, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = i; k < i + n; ++k) out.push_back(w[k].curve.base);
  std::sort(out.begin(), out.end());
  return out;
}

// Checks that tokens i..i+n-1 are positive and share one conjugator.
LetterWord common_conjugator(const TwistWord& w, std::size_t i, std::size_t n, const std::string& id) {
  for (std::size_t k = i; k < i + n; ++k) {
    if (w[k].exponent != 1) {
      throw MoveError(MoveErrorKind::kConfigMismatch, id + ": token " + std::to_string(k) + " is not a positive twist");
    }
    if (w[k].curve.conjugator != w[i].curve.conjugator) {
      throw MoveError(MoveErrorKind::kConfigMismatch,
                      id + ": tokens " + std::to_string(i) + " and " + std::to_string(k) + " have different conjugators");
    }
  }
  return w[i].curve.conjugator;
}

}  // namespace

std::string to_string(const Move& m) {
  switch (m.kind) {
    case Move::Kind::kCommute:
      return "commute " + std::to_string(m.index);
    case Move::Kind::kBraid:
      return "braid " + std::to_string(m.index) + (m.forward ? " fwd" : " bwd");
    case Move::Kind::kHurwitzLeft:
      return "hurwitzL " + std::to_string(m.index);
    case Move::Kind::kHurwitzRight:
      return "hurwitzR " + std::to_string(m.index);
    case Move::Kind::kCyclic:
      return "cyclic " + std::to_string(m.index);
    case Move::Kind::kGlobalConj:
      return "gconj " + (m.conjugator.empty() ? std::string("1") : to_string(m.conjugator));
    case Move::Kind::kLantern:
      return "lantern " + std::to_string(m.index) + " " + m.config + (m.forward ? " contract" : " expand");
    case Move::Kind::kSimplify:
      return "simplify " + std::to_string(m.index);
  }
  return "?";
}

Move parse_move(std::string_view line, std::size_t lineno) {
  const auto f = fields(line);
  if (f.empty()) throw ParseError("empty move", lineno, 1);
  Move m;
  const std::string& op = f[0].text;
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (f.size() < lo + 1) throw ParseError("'" + op + "' needs more arguments", lineno, f[0].column);
    if (f.size() > hi + 1) throw ParseError("unexpected '" + f[hi + 1].text + "'", lineno, f[hi + 1].column);
  };
  if (op == "commute" || op == "hurwitzL" || op == "hurwitzR" || op == "simplify") {
    arity(1, 1);
    m.kind = op == "commute"    ? Move::Kind::kCommute
             : op == "hurwitzL" ? Move::Kind::kHurwitzLeft
             : op == "hurwitzR" ? Move::Kind::kHurwitzRight
                                : Move::Kind::kSimplify;
    m.index = field_int(f[1], lineno, false);
  } else if (op == "braid") {
    arity(1, 2);
    m.kind = Move::Kind::kBraid;
    m.index = field_int(f[1], lineno, false);
    if (f.size() == 3) {
      if (f[2].text == "fwd") m.forward = true;
      else if (f[2].text == "bwd") m.forward = false;
      else throw ParseError("expected fwd or bwd, got '" + f[2].text + "'", lineno, f[2].column);
    }
  } else if (op == "cyclic") {
    arity(1, 1);
    m.kind = Move::Kind::kCyclic;
    m.index = field_int(f[1], lineno, true);
  } else if (op == "gconj") {
    if (f.size() < 2) throw ParseError("'gconj' needs a conjugator", lineno, f[0].column);
    m.kind = Move::Kind::kGlobalConj;
    const std::string rest(line.substr(f[1].column - 1));
    try {
      m.conjugator = parse_letter_word(rest);
    } catch (const ParseError& e) {
      throw ParseError(std::string("in conjugator: ") + e.what(), lineno, f[1].column);
    }
  } else if (op == "lantern") {
    arity(3, 3);
    m.kind = Move::Kind::kLantern;
    m.index = field_int(f[1], lineno, false);
    m.config = f[2].text;
    if (f[3].text == "contract") m.forward = true;
    else if (f[3].text == "expand") m.forward = false;
    else throw ParseError("expected contract or expand, got '" + f[3].text + "'", lineno, f[3].column);
  } else {
    throw ParseError("unknown move '" + op + "'", lineno, f[0].column);
  }
  return m;
}

std::vector<Move> parse_script(std::string_view text) {
  std::vector<Move> out;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (fields(line).empty()) continue;
    out.push_back(parse_move(line, lineno));
  }
  return out;
}

WordInput parse_word_input(std::string_view text) {
  // Locate '=' outside comments.
  std::size_t eq = std::string_view::npos;
  bool comment = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') comment = false;
    else if (text[i] == '#') comment = true;
    else if (!comment && text[i] == '=') {
      eq = i;
      break;
    }
  }
  WordInput in;
  in.word = normalize(parse_word(text.substr(0, eq)));
  if (eq != std::string_view::npos) {
    const TwistWord rhs = parse_word(text.substr(eq + 1));
    if (!rhs.empty()) {
      const auto line = static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(eq), '\n')) + 1;
      throw ParseError("a relator must be written 'word = 1'", line);
    }
    in.context = Context::kRelator;
  }
  return in;
}

MoveStep apply_commute(const TwistWord& w, std::size_t i, const Registry& reg) {
  require_index(w, i, 2);
  const auto r = reg.intersection(w[i].curve, w[i + 1].curve);
  std::vector<std::string> ev{intersection_text(w[i].curve, w[i + 1].curve, r)};
  ev.insert(ev.end(), r.trace.begin(), r.trace.end());
  if (!r.value || *r.value != 0) {
    throw MoveError(MoveErrorKind::kNonDisjoint, "commute " + std::to_string(i) + ": " + ev.front());
  }
  TwistWord out = w;
  std::swap(out[i], out[i + 1]);
  return finish(Move::at(Move::Kind::kCommute, static_cast<long long>(i)), w, std::move(out), std::move(ev), reg);
}

MoveStep apply_braid(const TwistWord& w, std::size_t i, bool forward, const Registry& reg) {
  require_index(w, i, 3);
  if (!(w[i] == w[i + 2]) || w[i + 1].exponent != w[i].exponent) {
    throw MoveError(MoveErrorKind::kPatternMismatch, "braid " + std::to_string(i) + ": tokens " + to_string(w[i]) +
                                                         " " + to_string(w[i + 1]) + " " + to_string(w[i + 2]) +
                                                         " are not of the form a b a");
  }
  const auto r = reg.intersection(w[i].curve, w[i + 1].curve);
  std::vector<std::string> ev{intersection_text(w[i].curve, w[i + 1].curve, r)};
  ev.insert(ev.end(), r.trace.begin(), r.trace.end());
  if (!r.value || *r.value != 1) {
    throw MoveError(MoveErrorKind::kNonUnitIntersection, "braid " + std::to_string(i) + ": " + ev.front());
  }
  TwistWord out = w;
  out[i] = w[i + 1];
  out[i + 1] = w[i];
  out[i + 2] = w[i + 1];
  Move m = Move::at(Move::Kind::kBraid, static_cast<long long>(i));
  m.forward = forward;
  return finish(std::move(m), w, std::move(out), std::move(ev), reg);
}

MoveStep apply_hurwitz(const TwistWord& w, std::size_t i, bool left, const Registry& reg) {
  require_index(w, i, 2);
  const TwistToken& a = w[i];
  const TwistToken& b = w[i + 1];
  TwistWord out = w;
  std::vector<std::string> ev;
  if (left) {
    // t_a^e t_b^f = t_{t_a^e(b)}^f t_a^e
    out[i] = TwistToken(b.curve.conjugated_by(a.curve.twist_letters(a.exponent)), b.exponent);
    out[i + 1] = a;
    ev.push_back("slide " + to_string(b) + " left past " + to_string(a));
  } else {
    // t_a^e t_b^f = t_b^f t_{t_b^-f(a)}^e
    out[i] = b;
    out[i + 1] = TwistToken(a.curve.conjugated_by(b.curve.twist_letters(-b.exponent)), a.exponent);
    ev.push_back("slide " + to_string(a) + " right past " + to_string(b));
  }
  return finish(Move::at(left ? Move::Kind::kHurwitzLeft : Move::Kind::kHurwitzRight, static_cast<long long>(i)), w,
                std::move(out), std::move(ev), reg);
}

MoveStep apply_cyclic(const TwistWord& w, long long k, Context ctx, const Registry& reg) {
  if (ctx != Context::kRelator) {
    throw MoveError(MoveErrorKind::kNotRelator, "cyclic " + std::to_string(k) + ": rotation needs a full relator");
  }
  TwistWord out = w;
  if (!w.empty()) {
    const long long n = static_cast<long long>(w.size());
    const long long r = ((k % n) + n) % n;
    std::rotate(out.tokens.begin(), out.tokens.begin() + r, out.tokens.end());
  }
  Move m = Move::at(Move::Kind::kCyclic, k);
  return finish(std::move(m), w, std::move(out), {"rotation of a relator is a conjugation"}, reg);
}

MoveStep apply_global_conj(const TwistWord& w, const LetterWord& g, Context ctx, const Registry& reg) {
  Move m = Move::at(Move::Kind::kGlobalConj, 0);
  m.conjugator = free_reduce(g);
  if (ctx != Context::kRelator) {
    throw MoveError(MoveErrorKind::kNotRelator, to_string(m) + ": global conjugation needs a full relator");
  }
  for (const auto& l : m.conjugator) reg.curve(l.curve);
  return finish(std::move(m), w, conjugate_all(w, g), {"g w g^-1 = 1 for a relator w"}, reg);
}

MoveStep apply_lantern(const TwistWord& w, std::size_t i, std::string_view config, bool contract,
                       const Registry& reg) {
  const LanternConfig* cfg = reg.find_lantern(config);
  if (!cfg) throw MoveError(MoveErrorKind::kUnknownConfig, "no lantern configuration '" + std::string(config) + "'");
  Move m = Move::at(Move::Kind::kLantern, static_cast<long long>(i));
  m.config = cfg->id;
  m.forward = contract;
  TwistWord out;
  std::vector<std::string> ev;
  if (contract) {
    require_index(w, i, 4);
    const LetterWord u = common_conjugator(w, i, 4, cfg->id);
    std::vector<std::string> want(cfg->boundary.begin(), cfg->boundary.end());
    std::sort(want.begin(), want.end());
    if (sorted_bases(w, i, 4) != want) {
      throw MoveError(MoveErrorKind::kConfigMismatch, cfg->id + ": tokens " + std::to_string(i) + ".." +
                                                          std::to_string(i + 3) + " do not match the boundary curves");
    }
    out.tokens.assign(w.tokens.begin(), w.tokens.begin() + static_cast<std::ptrdiff_t>(i));
    for (const auto& n : cfg->interior) out.tokens.emplace_back(CurveRef(u, n));
    out.tokens.insert(out.tokens.end(), w.tokens.begin() + static_cast<std::ptrdiff_t>(i + 4), w.tokens.end());
    ev.push_back(cfg->id + " contract under conjugator " + (u.empty() ? std::string("1") : to_string(u)));
    ev.push_back("C2 blowdown performed");
  } else {
    require_index(w, i, 3);
    const LetterWord u = common_conjugator(w, i, 3, cfg->id);
    bool match = false;
    for (std::size_t r = 0; r < 3 && !match; ++r) {
      match = true;
      for (std::size_t k = 0; k < 3 && match; ++k) match = w[i + k].curve.base == cfg->interior[(k + r) % 3];
    }
    if (!match) {
      throw MoveError(MoveErrorKind::kConfigMismatch, cfg->id + ": tokens " + std::to_string(i) + ".." +
                                                          std::to_string(i + 2) +
                                                          " are not the interior curves in cyclic order");
    }
    out.tokens.assign(w.tokens.begin(), w.tokens.begin() + static_cast<std::ptrdiff_t>(i));
    for (const auto& n : cfg->boundary) out.tokens.emplace_back(CurveRef(u, n));
    out.tokens.insert(out.tokens.end(), w.tokens.begin() + static_cast<std::ptrdiff_t>(i + 3), w.tokens.end());
    ev.push_back(cfg->id + " expand under conjugator " + (u.empty() ? std::string("1") : to_string(u)));
  }
  return finish(std::move(m), w, std::move(out), std::move(ev), reg, true);
}

MoveStep apply_simplify(const TwistWord& w, std::size_t i, const Registry& reg) {
  require_index(w, i, 1);
  Simplification s = reg.simplify(w[i].curve);
  if (s.rules.empty()) {
    throw MoveError(MoveErrorKind::kNoSimplification, "simplify " + std::to_string(i) + ": no identity applies to " +
                                                          to_string(w[i].curve));
  }
  TwistWord out = w;
  out[i].curve = s.curve;
  return finish(Move::at(Move::Kind::kSimplify, static_cast<long long>(i)), w, std::move(out), std::move(s.rules), reg);
}

MoveStep apply_move(const TwistWord& w, const Move& m, Context ctx, const Registry& reg) {
  auto pos = [&]() -> std::size_t {
    if (m.index < 0) throw MoveError(MoveErrorKind::kIndexOutOfRange, "negative position");
    return static_cast<std::size_t>(m.index);
  };
  switch (m.kind) {
    case Move::Kind::kCommute:
      return apply_commute(w, pos(), reg);
    case Move::Kind::kBraid:
      return apply_braid(w, pos(), m.forward, reg);
    case Move::Kind::kHurwitzLeft:
      return apply_hurwitz(w, pos(), true, reg);
    case Move::Kind::kHurwitzRight:
      return apply_hurwitz(w, pos(), false, reg);
    case Move::Kind::kCyclic:
      return apply_cyclic(w, m.index, ctx, reg);
    case Move::Kind::kGlobalConj:
      return apply_global_conj(w, m.conjugator, ctx, reg);
    case Move::Kind::kLantern:
      return apply_lantern(w, pos(), m.config, m.forward, reg);
    case Move::Kind::kSimplify:
      return apply_simplify(w, pos(), reg);
  }
  throw MoveError(MoveErrorKind::kPatternMismatch, "unknown move kind");
}

namespace {

void verify_initial(const WordInput& in, const Registry& reg) {
  for (const auto& t : in.word.tokens) {
    reg.curve(t.curve.base);
    for (const auto& l : t.curve.conjugator) reg.curve(l.curve);
  }
  if (in.context == Context::kRelator) {
    if (!in.word.positive()) throw VerificationError("a relator may only contain positive twists");
    const SpMatrix m = word_matrix(in.word, reg);
    if (!m.is_identity()) throw VerificationError("declared relator acts on H1 as " + to_string(m));
  }
}

Summary make_summary(const WordInput& initial, const std::vector<MoveStep>& steps, const TwistWord& final_word,
                     const Registry& reg) {
  Summary s;
  s.census = census(final_word, reg);
  for (const auto& st : steps) {
    if (!st.lantern) continue;
    if (st.move.forward) ++s.lantern_contractions;
    else ++s.lantern_expansions;
  }
  if (initial.context != Context::kRelator) return s;
  const FibrationInvariants start = fibration_invariants(census(initial.word, reg));
  s.invariant_lines.push_back(invariant_line(start));
  const bool k3_blown_up = start.e == 26 && start.sigma == -18;
  std::size_t net = 0;
  for (const auto& st : steps) {
    if (st.before.size() == st.after.size()) continue;
    s.invariant_lines.push_back(invariant_line(fibration_invariants(census(st.after, reg))));
    if (!st.lantern) continue;
    net = st.move.forward ? net + 1 : net - 1;
    if (k3_blown_up && st.move.forward && net == 1) {
      s.annotations.push_back("X(1) is diffeomorphic to K3#CP̄² (recorded, not computed)");
    } else if (k3_blown_up && st.move.forward && net == 2) {
      s.annotations.push_back("X(2) is diffeomorphic to K3 (recorded, not computed)");
    }
  }
  const FibrationInvariants fin = fibration_invariants(s.census);
  if (fin.b2plus > 0) {
    s.annotations.push_back("if simply connected with odd form: homeomorphic to " + homeo_type(fin));
  }
  return s;
}

}  // namespace

DerivationCertificate run_script(const WordInput& initial, const std::vector<Move>& script, const Registry& reg) {
  verify_initial(initial, reg);
  DerivationCertificate cert;
  cert.registry_digest = reg.digest();
  cert.initial = initial;
  TwistWord cur = initial.word;
  for (std::size_t k = 0; k < script.size(); ++k) {
    try {
      cert.steps.push_back(apply_move(cur, script[k], initial.context, reg));
    } catch (const Error& e) {
      throw StepFailure(k, to_string(script[k]), e);
    }
    cur = cert.steps.back().after;
  }
  cert.final_word = cur;
  cert.summary = make_summary(initial, cert.steps, cur, reg);
  return cert;
}

std::vector<FibrationInvariants> invariant_trajectory(const DerivationCertificate& cert, const Registry& reg) {
  std::vector<FibrationInvariants> out{fibration_invariants(census(cert.initial.word, reg))};
  for (const auto& st : cert.steps) {
    if (st.before.size() != st.after.size()) out.push_back(fibration_invariants(census(st.after, reg)));
  }
  return out;
}

using ojson = nlohmann::ordered_json;

std::string certificate_to_json(const DerivationCertificate& cert) {
  ojson j;
  j["format"] = "mcgrw-certificate/1";
  j["registry_digest"] = cert.registry_digest;
  j["initial"] = {{"word", to_string(cert.initial.word)}, {"relator", cert.initial.context == Context::kRelator}};
  j["steps"] = ojson::array();
  for (const auto& s : cert.steps) {
    j["steps"].push_back({{"move", to_string(s.move)},
                          {"before", to_string(s.before)},
                          {"after", to_string(s.after)},
                          {"lantern", s.lantern},
                          {"evidence", s.evidence},
                          {"digest_before", s.digest_before},
                          {"digest_after", s.digest_after}});
  }
  j["final"] = to_string(cert.final_word);
  const auto& sm = cert.summary;
  j["summary"] = {{"census", {{"n", sm.census.n}, {"n0", sm.census.nonseparating}, {"n1", sm.census.separating}}},
                  {"lantern_contractions", sm.lantern_contractions},
                  {"lantern_expansions", sm.lantern_expansions},
                  {"invariants_header", invariant_header()},
                  {"invariants", sm.invariant_lines},
                  {"annotations", sm.annotations}};
  return j.dump(2) + "\n";
}

DerivationCertificate certificate_from_json(std::string_view text) {
  DerivationCertificate c;
  try {
    const ojson j = ojson::parse(text);
    if (j.at("format").get<std::string>() != "mcgrw-certificate/1") throw ParseError("unknown certificate format");
    c.registry_digest = j.at("registry_digest").get<std::string>();
    c.initial.word = parse_word(j.at("initial").at("word").get<std::string>());
    c.initial.context = j.at("initial").at("relator").get<bool>() ? Context::kRelator : Context::kSubword;
    for (const auto& s : j.at("steps")) {
      MoveStep st;
      st.move = parse_move(s.at("move").get<std::string>());
      st.before = parse_word(s.at("before").get<std::string>());
      st.after = parse_word(s.at("after").get<std::string>());
      st.lantern = s.at("lantern").get<bool>();
      st.evidence = s.at("evidence").get<std::vector<std::string>>();
      st.digest_before = s.at("digest_before").get<std::array<long long, 16>>();
      st.digest_after = s.at("digest_after").get<std::array<long long, 16>>();
      c.steps.push_back(std::move(st));
    }
    c.final_word = parse_word(j.at("final").get<std::string>());
    const auto& sm = j.at("summary");
    c.summary.census.n = sm.at("census").at("n").get<std::size_t>();
    c.summary.census.nonseparating = sm.at("census").at("n0").get<std::size_t>();
    c.summary.census.separating = sm.at("census").at("n1").get<std::size_t>();
    c.summary.lantern_contractions = sm.at("lantern_contractions").get<std::size_t>();
    c.summary.lantern_expansions = sm.at("lantern_expansions").get<std::size_t>();
    c.summary.invariant_lines = sm.at("invariants").get<std::vector<std::string>>();
    c.summary.annotations = sm.at("annotations").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
  return c;
}

void check_certificate(const DerivationCertificate& cert, const Registry& reg) {
  if (cert.registry_digest != reg.digest()) {
    throw VerificationError("registry digest " + cert.registry_digest + " does not match " + reg.digest());
  }
  verify_initial(cert.initial, reg);
  TwistWord cur = cert.initial.word;
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const MoveStep& claimed = cert.steps[k];
    const std::string where = "step " + std::to_string(k + 1) + " (" + to_string(claimed.move) + ")";
    if (!(claimed.before == cur)) throw VerificationError(where + ": 'before' differs from the replayed word");
    MoveStep replay;
    try {
      replay = apply_move(cur, claimed.move, cert.initial.context, reg);
    } catch (const MoveError& e) {
      throw VerificationError(where + ": replay rejects the move: " + e.what());
    }
    if (!(replay.after == claimed.after)) throw VerificationError(where + ": 'after' differs from the replay");
    if (replay.digest_before != claimed.digest_before || replay.digest_after != claimed.digest_after) {
      throw VerificationError(where + ": matrix digest mismatch");
    }
    if (replay.evidence != claimed.evidence || replay.lantern != claimed.lantern) {
      throw VerificationError(where + ": evidence differs from the replay");
    }
    cur = replay.after;
  }
  if (!(cur == cert.final_word)) throw VerificationError("final word differs from the replay");
  if (!(make_summary(cert.initial, cert.steps, cur, reg) == cert.summary)) {
    throw VerificationError("summary differs from the replay");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ExitCode::kParse, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mcg
