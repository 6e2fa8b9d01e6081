#include "mcg/registry.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "mcg/errors.hpp"

namespace mcg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

long long parse_int(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw ParseError("bad integer '" + s + "'", line);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad integer '" + s + "'", line);
  }
}

std::pair<std::string, std::string> key(std::string_view a, std::string_view b) {
  return a < b ? std::pair{std::string(a), std::string(b)} : std::pair{std::string(b), std::string(a)};
}

std::string letter_text(const Letter& l) { return to_string(l); }

}  // namespace

Registry Registry::parse(std::string_view text, Validation v) {
  Registry reg;
  enum class Section { kNone, kCurves, kIntersections, kLanterns } section = Section::kNone;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    if (line == "[curves]") {
      section = Section::kCurves;
    } else if (line == "[intersections]") {
      section = Section::kIntersections;
    } else if (line == "[lanterns]") {
      section = Section::kLanterns;
    } else if (section == Section::kCurves) {
      // name sep|nonsep (h1: w x y z) [pi1: word]
      BaseCurve c;
      const auto open = line.find('(');
      const auto close = line.find(')');
      if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
        throw ParseError("curve line needs '(h1: w x y z)'", lineno);
      }
      const auto head = split_ws(line.substr(0, open));
      if (head.size() != 2 || !valid_name(head[0])) throw ParseError("curve line needs 'name sep|nonsep'", lineno);
      c.name = head[0];
      if (head[1] == "sep") c.separating = true;
      else if (head[1] != "nonsep") throw ParseError("expected sep or nonsep, got '" + head[1] + "'", lineno);
      std::string_view h1 = trim(line.substr(open + 1, close - open - 1));
      if (h1.substr(0, 3) != "h1:") throw ParseError("expected 'h1:'", lineno);
      const auto coords = split_ws(h1.substr(3));
      if (coords.size() != 4) throw ParseError("h1 needs four coordinates", lineno);
      for (int i = 0; i < 4; ++i) c.homology.c[i] = parse_int(coords[i], lineno);
      std::string_view rest = trim(line.substr(close + 1));
      if (!rest.empty()) {
        if (rest.front() != '[' || rest.back() != ']') throw ParseError("expected '[pi1: word]'", lineno);
        std::string_view body = trim(rest.substr(1, rest.size() - 2));
        if (body.substr(0, 4) != "pi1:") throw ParseError("expected 'pi1:'", lineno);
        try {
          c.pi1 = FreeWord::parse(body.substr(4));
        } catch (const ParseError& e) {
          throw ParseError(e.what(), lineno);
        }
      }
      if (reg.has_curve(c.name)) throw ParseError("duplicate curve '" + c.name + "'", lineno);
      reg.curves_.push_back(std::move(c));
    } else if (section == Section::kIntersections) {
      const auto f = split_ws(line);
      if (f.size() != 3) throw ParseError("intersection line needs 'name name count'", lineno);
      for (int i = 0; i < 2; ++i) {
        if (!reg.has_curve(f[i])) throw ParseError("unknown curve '" + f[i] + "'", lineno);
      }
      const long long n = parse_int(f[2], lineno);
      if (n < 0) throw ParseError("negative intersection number", lineno);
      auto k = key(f[0], f[1]);
      if (f[0] == f[1]) throw ParseError("self-intersection entries are implicit", lineno);
      if (reg.intersections_.count(k)) throw ParseError("duplicate intersection entry", lineno);
      reg.intersections_[k] = static_cast<int>(n);
      reg.intersection_order_.emplace_back(f[0], f[1]);
    } else if (section == Section::kLanterns) {
      // L1: b b b b -> i i i
      const auto colon = line.find(':');
      const auto arrow = line.find("->");
      if (colon == std::string_view::npos || arrow == std::string_view::npos || arrow < colon) {
        throw ParseError("lantern line needs 'id: b1 b2 b3 b4 -> i1 i2 i3'", lineno);
      }
      LanternConfig cfg;
      cfg.id = std::string(trim(line.substr(0, colon)));
      if (!valid_name(cfg.id)) throw ParseError("bad lantern id", lineno);
      const auto bd = split_ws(line.substr(colon + 1, arrow - colon - 1));
      const auto in = split_ws(line.substr(arrow + 2));
      if (bd.size() != 4 || in.size() != 3) throw ParseError("lantern needs 4 boundary and 3 interior curves", lineno);
      for (const auto& n : bd) {
        if (!reg.has_curve(n)) throw ParseError("unknown curve '" + n + "'", lineno);
      }
      for (const auto& n : in) {
        if (!reg.has_curve(n)) throw ParseError("unknown curve '" + n + "'", lineno);
      }
      std::copy(bd.begin(), bd.end(), cfg.boundary.begin());
      std::copy(in.begin(), in.end(), cfg.interior.begin());
      if (reg.find_lantern(cfg.id)) throw ParseError("duplicate lantern '" + cfg.id + "'", lineno);
      reg.lanterns_.push_back(std::move(cfg));
    } else {
      throw ParseError("content outside of a section", lineno);
    }
    if (nl == text.size()) break;
  }
  reg.validate(v);
  return reg;
}

Registry Registry::load(const std::filesystem::path& path, Validation v) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ExitCode::kParse, "cannot read registry file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), v);
}

std::string Registry::serialize() const {
  std::string out = "# genus-2 surface curve registry\n[curves]\n";
  for (const auto& c : curves_) {
    out += c.name + (c.separating ? " sep" : " nonsep") + " (h1: " + to_string(c.homology) + ")";
    if (c.pi1) out += " [pi1: " + to_string(*c.pi1) + "]";
    out += '\n';
  }
  out += "[intersections]\n";
  for (const auto& [a, b] : intersection_order_) {
    out += a + " " + b + " " + std::to_string(intersections_.at(key(a, b))) + "\n";
  }
  out += "[lanterns]\n";
  for (const auto& l : lanterns_) {
    out += l.id + ":";
    for (const auto& n : l.boundary) out += " " + n;
    out += " ->";
    for (const auto& n : l.interior) out += " " + n;
    out += '\n';
  }
  return out;
}

std::string Registry::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool Registry::has_curve(std::string_view name) const {
  return std::any_of(curves_.begin(), curves_.end(), [&](const BaseCurve& c) { return c.name == name; });
}

std::size_t Registry::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (curves_[i].name == name) return i;
  }
  throw UnknownCurve(std::string(name));
}

const BaseCurve& Registry::curve(std::string_view name) const { return curves_[index_of(name)]; }

const LanternConfig* Registry::find_lantern(std::string_view id) const {
  for (const auto& l : lanterns_) {
    if (l.id == id) return &l;
  }
  return nullptr;
}

std::optional<int> Registry::base_intersection(std::string_view a, std::string_view b) const {
  index_of(a);
  index_of(b);
  if (a == b) return 0;
  auto it = intersections_.find(key(a, b));
  if (it == intersections_.end()) return std::nullopt;
  return it->second;
}

SpMatrix Registry::letters_matrix(const LetterWord& w) const {
  SpMatrix m = SpMatrix::identity();
  for (const auto& l : w) {
    const SpMatrix t = transvection_matrix(curve(l.curve).homology);
    m = m * (l.exp > 0 ? t : t.symplectic_inverse());
  }
  return m;
}

H1Vector Registry::homology_class(const CurveRef& c) const {
  return letters_matrix(c.conjugator) * curve(c.base).homology;
}

bool Registry::is_separating(const CurveRef& c) const { return homology_class(c).zero(); }

bool Registry::letter_fixes(const Letter& l, std::string_view base) const {
  if (l.curve == base) return true;
  const auto i = base_intersection(l.curve, base);
  return i && *i == 0;
}

Simplification Registry::simplify(const CurveRef& c) const {
  Simplification out{c, {}};
  index_of(c.base);
  LetterWord g = c.conjugator;
  std::string base = c.base;
  while (!g.empty()) {
    const Letter last = g.back();
    if (last.curve == base) {
      out.rules.push_back("t_" + base + " fixes " + base + ": drop " + letter_text(last));
      g.pop_back();
      continue;
    }
    if (letter_fixes(last, base)) {
      out.rules.push_back("i(" + last.curve + "," + base + ")=0: drop " + letter_text(last));
      g.pop_back();
      continue;
    }
    if (g.size() >= 2) {
      const Letter p = g[g.size() - 2];
      const Letter q = last;
      const auto i = base_intersection(p.curve, q.curve);
      if (p.curve == base && p.exp == q.exp && i && *i == 1) {
        // t_p t_q (p) = q and t_p^-1 t_q^-1 (p) = q when i(p,q) = 1.
        out.rules.push_back(letter_text(p) + " " + letter_text(q) + " (" + base + ") = " + q.curve);
        base = q.curve;
        g.pop_back();
        g.pop_back();
        continue;
      }
    }
    break;
  }
  out.curve = CurveRef(std::move(g), std::move(base));
  return out;
}

IntersectionResult Registry::intersection(const CurveRef& a, const CurveRef& b) const {
  IntersectionResult r;
  index_of(a.base);
  index_of(b.base);
  // i(u a, v b) = i(v^-1 u a, b)
  LetterWord g = free_reduce(concat(inverse(b.conjugator), a.conjugator));
  std::string alpha = a.base;
  std::string beta = b.base;
  if (!a.conjugator.empty() || !b.conjugator.empty()) {
    r.trace.push_back("reduce to i(" + to_string(CurveRef(g, alpha)) + ", " + beta + ")");
  }
  for (int round = 0; round < 64; ++round) {
    bool progress = false;
    Simplification s = simplify(CurveRef(g, alpha));
    if (!s.rules.empty()) {
      progress = true;
      for (auto& rule : s.rules) r.trace.push_back(std::move(rule));
      g = s.curve.conjugator;
      alpha = s.curve.base;
    }
    while (!g.empty() && letter_fixes(g.front(), beta)) {
      r.trace.push_back(g.front().curve + " fixes " + beta + ": strip " + letter_text(g.front()));
      g.erase(g.begin());
      progress = true;
    }
    if (!g.empty() && alpha == beta &&
        std::all_of(g.begin(), g.end(), [&](const Letter& l) { return l == g.front(); })) {
      // i(t_a^k(b), b) = |k| i(a,b)^2
      if (const auto ab = base_intersection(g.front().curve, alpha)) {
        r.value = static_cast<int>(g.size()) * *ab * *ab;
        r.trace.push_back("i(t_" + g.front().curve + "^" + std::to_string(g.size() * g.front().exp) + "(" + alpha +
                          "), " + alpha + ") = |k| i(" + g.front().curve + "," + alpha + ")^2 = " +
                          std::to_string(*r.value));
        return r;
      }
    }
    if (g.empty()) {
      r.value = base_intersection(alpha, beta);
      r.trace.push_back("registry i(" + alpha + "," + beta + ") = " + (r.value ? std::to_string(*r.value) : "unknown"));
      return r;
    }
    // Look from the other side: i(g alpha, beta) = i(g^-1 beta, alpha).
    Simplification t = simplify(CurveRef(inverse(g), beta));
    if (!t.rules.empty()) {
      progress = true;
      for (auto& rule : t.rules) r.trace.push_back(std::move(rule));
      g = t.curve.conjugator;
      beta = std::exchange(alpha, t.curve.base);
      r.trace.push_back("swap to i(" + to_string(CurveRef(g, alpha)) + ", " + beta + ")");
    }
    if (!progress) break;
  }
  r.trace.push_back("unresolved: i(" + to_string(CurveRef(g, alpha)) + ", " + beta + ")");
  return r;
}

std::vector<std::string> Registry::verify_lanterns() const {
  std::vector<std::string> failures;
  for (const auto& l : lanterns_) {
    SpMatrix lhs = SpMatrix::identity();
    for (const auto& n : l.boundary) lhs = lhs * transvection_matrix(curve(n).homology);
    SpMatrix rhs = SpMatrix::identity();
    for (const auto& n : l.interior) rhs = rhs * transvection_matrix(curve(n).homology);
    if (!(lhs == rhs)) {
      failures.push_back(l.id + ": boundary product " + to_string(lhs) + " != interior product " + to_string(rhs));
    }
  }
  return failures;
}

void Registry::validate(Validation v) const {
  for (const auto& c : curves_) {
    if (c.separating != c.homology.zero()) {
      throw RegistryError("curve " + c.name + ": separating flag disagrees with homology class (" +
                          to_string(c.homology) + ")");
    }
    if (c.pi1 && !(c.pi1->abelianize() == c.homology)) {
      throw RegistryError("curve " + c.name + ": pi1 word abelianizes to (" + to_string(c.pi1->abelianize()) +
                          "), not (" + to_string(c.homology) + ")");
    }
  }
  for (const auto& [k, n] : intersections_) {
    const long long p = pairing(curve(k.first).homology, curve(k.second).homology);
    const long long ap = p < 0 ? -p : p;
    if (ap > n || (n - ap) % 2 != 0) {
      throw RegistryError("i(" + k.first + "," + k.second + ") = " + std::to_string(n) +
                          " is incompatible with algebraic intersection " + std::to_string(p));
    }
  }
  for (const auto& l : lanterns_) {
    int seps = 0;
    for (const auto& n : l.interior) seps += curve(n).separating ? 1 : 0;
    if (seps != 1) throw RegistryError("lantern " + l.id + ": exactly one interior curve must be separating");
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        const auto n = base_intersection(l.boundary[i], l.boundary[j]);
        if (!n || *n != 0) throw RegistryError("lantern " + l.id + ": boundary curves must be registered disjoint");
      }
      for (const auto& in : l.interior) {
        const auto n = base_intersection(l.boundary[i], in);
        if (!n || *n != 0) {
          throw RegistryError("lantern " + l.id + ": " + in + " must be registered disjoint from " + l.boundary[i]);
        }
      }
    }
  }
  if (v == Validation::kFull) {
    const auto failures = verify_lanterns();
    if (!failures.empty()) throw RegistryError("lantern identity fails: " + failures.front());
  }
}

Registry Registry::with_homology(std::string_view name, const H1Vector& v) const {
  Registry copy = *this;
  copy.curves_[index_of(name)].homology = v;
  return copy;
}

}  // namespace mcg
