#include "mcg/sw.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace mcg {

namespace {

void add_term(LatticeClass& c, const std::string& name, long long k) {
  if (k == 0) return;
  const long long v = checked_add(c[name], k);
  if (v == 0) c.erase(name);
  else c[name] = v;
}

std::pair<std::string, std::string> key(const std::string& a, const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

bool is_name_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
bool is_name_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

long long parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ParseError("bad integer '" + s + "' in " + what);
  return v;
}

}  // namespace

LatticeClass operator+(const LatticeClass& a, const LatticeClass& b) {
  LatticeClass r = a;
  for (const auto& [n, k] : b) add_term(r, n, k);
  return r;
}

LatticeClass operator-(const LatticeClass& a) { return -1 * a; }
LatticeClass operator-(const LatticeClass& a, const LatticeClass& b) { return a + (-b); }

LatticeClass operator*(long long k, const LatticeClass& a) {
  LatticeClass r;
  if (k == 0) return r;
  for (const auto& [n, c] : a) r[n] = checked_mul(k, c);
  return r;
}

LatticeClass basis_class(const std::string& name) { return {{name, 1}}; }

std::string to_string(const LatticeClass& c) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [n, k] : c) {
    if (k < 0) s += '-';
    else if (!s.empty()) s += '+';
    if (std::llabs(k) != 1) s += std::to_string(std::llabs(k));
    s += n;
  }
  return s;
}

LatticeClass parse_class(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw ParseError("empty class");
  if (t == "0") return {};
  LatticeClass c;
  std::size_t i = 0;
  while (i < t.size()) {
    long long sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-' in class '" + t + "'");
    }
    std::size_t d = i;
    while (d < t.size() && std::isdigit(static_cast<unsigned char>(t[d]))) ++d;
    const long long k = d > i ? parse_int(t.substr(i, d - i), "class '" + t + "'") : 1;
    if (d >= t.size() || !is_name_start(t[d])) throw ParseError("expected a class name in '" + t + "'");
    std::size_t e = d;
    while (e < t.size() && is_name_char(t[e])) ++e;
    add_term(c, t.substr(d, e - d), checked_mul(sign, k));
    i = e;
  }
  return c;
}

void ClassLattice::declare(const std::string& name, long long self) {
  if (name.empty() || !is_name_start(name[0]) ||
      !std::all_of(name.begin(), name.end(), [](char ch) { return is_name_char(ch); })) {
    throw ParseError("bad class name '" + name + "'");
  }
  if (has(name)) throw LatticeError("class " + name + " already declared");
  order_.push_back(name);
  self_[name] = self;
}

void ClassLattice::set_pairing(const std::string& a, const std::string& b, long long v) {
  if (!has(a)) throw LatticeError("undeclared class " + a);
  if (!has(b)) throw LatticeError("undeclared class " + b);
  if (a == b) {
    if (self_[a] != v) throw LatticeError("pairing " + a + "." + a + " contradicts the declared self-intersection");
    return;
  }
  auto [it, fresh] = pairs_.emplace(key(a, b), v);
  if (!fresh && it->second != v) throw LatticeError("pairing " + a + "." + b + " declared twice with different values");
}

long long ClassLattice::basis_pairing(const std::string& a, const std::string& b) const {
  if (a == b) return self_.at(a);
  auto it = pairs_.find(key(a, b));
  return it == pairs_.end() ? 0 : it->second;
}

std::vector<std::pair<std::string, std::string>> ClassLattice::defaulted_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < order_.size(); ++i)
    for (std::size_t j = i + 1; j < order_.size(); ++j)
      if (!pairs_.count(key(order_[i], order_[j]))) out.emplace_back(order_[i], order_[j]);
  return out;
}

void ClassLattice::check(const LatticeClass& c) const {
  for (const auto& [n, k] : c)
    if (!has(n)) throw LatticeError("pairing undefined: class " + n + " is not declared");
}

long long ClassLattice::pairing(const LatticeClass& a, const LatticeClass& b) const {
  check(a);
  check(b);
  long long s = 0;
  for (const auto& [n, k] : a)
    for (const auto& [m, l] : b) s = checked_add(s, checked_mul(checked_mul(k, l), basis_pairing(n, m)));
  return s;
}

Rational ClassLattice::effective_pairing(const LatticeClass& a, const LatticeClass& b) const {
  Rational s(pairing(a, b));
  const std::size_t n = spheres_.size();
  std::vector<long long> va(n), vb(n);
  for (std::size_t i = 0; i < n; ++i) {
    va[i] = pairing(a, spheres_[i]);
    vb[i] = pairing(b, spheres_[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (va[i] != 0 && vb[j] != 0) s -= Rational(va[i]) * q_inverse_[i][j] * Rational(vb[j]);
  return s;
}

void ClassLattice::blow_down(const std::vector<LatticeClass>& spheres) {
  std::vector<LatticeClass> all = spheres_;
  all.insert(all.end(), spheres.begin(), spheres.end());
  const std::size_t n = all.size();
  // Gauss-Jordan on [Q | I]
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = pairing(all[i], all[j]);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == Rational(0)) ++p;
    if (p == n) throw LatticeError("blown-down spheres have a singular intersection matrix");
    std::swap(a[c], a[p]);
    const Rational piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == Rational(0)) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  q_inverse_.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q_inverse_[i][j] = a[i][n + j];
  spheres_ = std::move(all);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const SWFunction& sw) {
  if (sw.empty()) return "sw = 0";
  std::string s = "sw =";
  for (const auto& [c, v] : sw) s += std::string(" ") + (v > 0 ? "+" : "") + std::to_string(v) + " e(" + to_string(c) + ")";
  return s;
}

SWFunction parse_sw(std::string_view text) {
  std::string t = trim(text);
  if (t.rfind("sw", 0) == 0) {
    const auto eq = t.find('=');
    if (eq == std::string::npos || trim(std::string_view(t).substr(2, eq - 2)) != "") {
      throw ParseError("expected 'sw = ...'");
    }
    t = trim(std::string_view(t).substr(eq + 1));
  }
  SWFunction sw;
  if (t == "0") return sw;
  std::size_t i = 0;
  while (i < t.size()) {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
    if (i == t.size()) break;
    const auto open = t.find("e(", i);
    if (open == std::string::npos) throw ParseError("expected 'VALUE e(CLASS)' in '" + t + "'");
    const std::string value_text = trim(std::string_view(t).substr(i, open - i));
    const auto close = t.find(')', open);
    if (close == std::string::npos) throw ParseError("unclosed 'e(' in '" + t + "'");
    const long long v = parse_int(value_text.empty() || value_text == "+" ? "1" : value_text == "-" ? "-1" : value_text,
                                  "'" + t + "'");
    const LatticeClass c = parse_class(std::string_view(t).substr(open + 2, close - open - 2));
    const long long total = checked_add(sw[c], v);
    if (total == 0) sw.erase(c);
    else sw[c] = total;
    i = close + 1;
  }
  if (sw.empty() && t.empty()) throw ParseError("empty SW function (write 'sw = 0')");
  return sw;
}

SWFunction blowup(const SWFunction& sw, const std::string& exceptional, ClassLattice& lat) {
  if (lat.has(exceptional)) throw LatticeError("blowup: " + exceptional + " is not a fresh class");
  const auto existing = lat.names();
  lat.declare(exceptional, -1);
  for (const auto& n : existing) lat.set_pairing(exceptional, n, 0);
  SWFunction out;
  const LatticeClass e = basis_class(exceptional);
  for (const auto& [c, v] : sw) {
    out[c + e] = v;
    out[c - e] = v;
  }
  return out;
}

SWFunction blowdown_exceptional(const SWFunction& sw, const std::string& exceptional) {
  SWFunction out;
  for (const auto& [c, v] : sw) {
    auto it = c.find(exceptional);
    if (it == c.end() || it->second != 1) continue;
    LatticeClass d = c;
    d.erase(exceptional);
    out[d] = v;
  }
  return out;
}

SWFunction descend_blowdown(const SWFunction& sw, const std::vector<LatticeClass>& spheres, long long p,
                            ClassLattice& lat) {
  if (p < 2) throw LatticeError("descend: p must be at least 2");
  if (spheres.size() != static_cast<std::size_t>(p - 1)) {
    throw LatticeError("descend: a C_" + std::to_string(p) + " configuration has " + std::to_string(p - 1) +
                       " spheres, got " + std::to_string(spheres.size()));
  }
  const std::size_t last = spheres.size() - 1;
  for (std::size_t i = 0; i < spheres.size(); ++i) {
    for (std::size_t j = i; j < spheres.size(); ++j) {
      const Rational got = lat.effective_pairing(spheres[i], spheres[j]);
      long long want = 0;
      if (i == j) want = i == last ? -(p + 2) : -2;
      else if (j == i + 1) want = 1;
      if (got != Rational(want)) {
        throw LatticeError("descend: malformed C_" + std::to_string(p) + " configuration, " +
                           to_string(spheres[i]) + "." + to_string(spheres[j]) + " = " + to_string(got) +
                           ", expected " + std::to_string(want));
      }
    }
  }
  SWFunction out;
  for (const auto& [c, v] : sw) {
    bool keep = true;
    for (std::size_t i = 0; i < last && keep; ++i) keep = lat.effective_pairing(c, spheres[i]) == Rational(0);
    if (keep) {
      const Rational t = lat.effective_pairing(c, spheres[last]);
      keep = t == Rational(p) || t == Rational(-p);
    }
    if (keep) out[c] = v;
  }
  lat.blow_down(spheres);
  return out;
}

void check_alexander(const std::vector<long long>& a) {
  if (a.empty() || a.size() % 2 == 0) throw LatticeError("Alexander polynomial needs an odd number of coefficients");
  if (a.size() > 1 && a.front() == 0) throw LatticeError("Alexander polynomial has a zero leading coefficient");
  if (!std::equal(a.begin(), a.end(), a.rbegin())) throw LatticeError("Alexander polynomial is not symmetrized");
}

std::vector<long long> multiply_alexander(const std::vector<long long>& a, const std::vector<long long>& b) {
  check_alexander(a);
  check_alexander(b);
  std::vector<long long> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  while (r.size() > 1 && r.front() == 0) {
    r.erase(r.begin());
    r.pop_back();
  }
  return r;
}

KnotSurgeryResult knot_surgery(const SWFunction& sw, const std::string& torus, const std::vector<long long>& alexander,
                               const ClassLattice& lat) {
  check_alexander(alexander);
  if (!lat.has(torus)) throw LatticeError("knot: undeclared torus class " + torus);
  const LatticeClass t = basis_class(torus);
  if (lat.effective_pairing(t, t) != Rational(0)) throw LatticeError("knot: " + torus + " must have square 0");
  const long long half = static_cast<long long>(alexander.size() / 2);
  KnotSurgeryResult r;
  r.monic = std::llabs(alexander.front()) == 1;
  for (const auto& [c, v] : sw) {
    for (std::size_t i = 0; i < alexander.size(); ++i) {
      if (alexander[i] == 0) continue;
      const long long j = static_cast<long long>(i) - half;
      const LatticeClass d = c + (2 * j) * t;
      const long long total = checked_add(r.sw[d], checked_mul(v, alexander[i]));
      if (total == 0) r.sw.erase(d);
      else r.sw[d] = total;
    }
  }
  return r;
}

MinimalityResult minimality_check(const SWFunction& sw, const ClassLattice& lat) {
  MinimalityResult r;
  for (auto a = sw.begin(); a != sw.end(); ++a) {
    for (auto b = std::next(a); b != sw.end(); ++b) {
      const LatticeClass d = a->first - b->first;
      ClassPair cp{a->first, b->first, lat.effective_pairing(d, d)};
      if (cp.square == Rational(-4) && !r.offender) {
        r.minimal = false;
        r.offender = cp;
      }
      r.pairs.push_back(std::move(cp));
    }
  }
  return r;
}

bool charge_symmetric(const SWFunction& sw) {
  for (const auto& [c, v] : sw) {
    auto it = sw.find(-c);
    if (it == sw.end() || std::llabs(it->second) != std::llabs(v)) return false;
  }
  return true;
}

std::set<LatticeClass> support(const SWFunction& sw) {
  std::set<LatticeClass> s;
  for (const auto& [c, v] : sw) s.insert(c);
  return s;
}

namespace {

std::vector<long long> parse_coefficients(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw ParseError("expected a coefficient list '[c, ...]'");
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t.substr(1, t.size() - 2));
  std::vector<long long> out;
  for (std::string w; in >> w;) out.push_back(parse_int(w, "coefficient list"));
  return out;
}

std::string coefficients_text(const std::vector<long long>& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + std::to_string(a[i]);
  return s + "]";
}

struct SWState {
  ClassLattice lattice;
  SWFunction sw;
};

}  // namespace

SWScriptResult run_sw_script(std::string_view text) {
  SWScriptResult res;
  std::ostringstream out;
  SWState st;
  bool started = false;
  std::map<std::string, SWState> saved;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cmd;
    ls >> cmd;
    std::string rest;
    std::getline(ls, rest);
    rest = trim(rest);
    std::vector<std::string> args;
    {
      std::istringstream as(rest);
      for (std::string a; as >> a;) args.push_back(a);
    }
    auto need = [&](std::size_t n) {
      if (args.size() != n) {
        throw ParseError("'" + cmd + "' takes " + std::to_string(n) + " argument(s)", lineno);
      }
    };
    auto need_start = [&] {
      if (!started) throw ParseError("'" + cmd + "' before 'start'", lineno);
    };
    try {
      if (cmd == "class") {
        need(2);
        st.lattice.declare(args[0], parse_int(args[1], "class"));
        out << "class " << args[0] << " self " << args[1] << "\n";
      } else if (cmd == "pair") {
        need(3);
        st.lattice.set_pairing(args[0], args[1], parse_int(args[2], "pair"));
        out << "pair " << args[0] << "." << args[1] << " = " << args[2] << "\n";
      } else if (cmd == "start") {
        st.sw = parse_sw(rest);
        started = true;
        out << "start: " << to_string(st.sw) << "\n";
      } else if (cmd == "blowup") {
        need(1);
        need_start();
        st.sw = blowup(st.sw, args[0], st.lattice);
        out << "blowup " << args[0] << ": " << to_string(st.sw) << " (support " << st.sw.size() << ")\n";
      } else if (cmd == "blowdown") {
        need(1);
        need_start();
        st.sw = blowdown_exceptional(st.sw, args[0]);
        out << "blowdown " << args[0] << ": " << to_string(st.sw) << "\n";
      } else if (cmd == "descend") {
        if (args.size() < 2) throw ParseError("'descend' takes P and P-1 sphere classes", lineno);
        need_start();
        const long long p = parse_int(args[0], "descend");
        std::vector<LatticeClass> spheres;
        for (std::size_t i = 1; i < args.size(); ++i) spheres.push_back(parse_class(args[i]));
        const std::size_t before = st.sw.size();
        st.sw = descend_blowdown(st.sw, spheres, p, st.lattice);
        out << "descend p=" << p << " along";
        for (const auto& s : spheres) out << " " << to_string(s);
        out << ": kept " << st.sw.size() << " of " << before << ", " << to_string(st.sw) << "\n";
      } else if (cmd == "knot") {
        const auto sp = rest.find_first_of(" \t");
        if (sp == std::string::npos) throw ParseError("'knot' takes T and a coefficient list", lineno);
        need_start();
        const std::string torus = rest.substr(0, sp);
        const auto coeffs = parse_coefficients(rest.substr(sp));
        const auto r = knot_surgery(st.sw, torus, coeffs, st.lattice);
        st.sw = r.sw;
        out << "knot " << torus << " " << coefficients_text(coeffs) << ": " << to_string(st.sw) << "\n";
        out << "  " << (r.monic ? "monic" : "not monic: admits no symplectic structure") << "\n";
      } else if (cmd == "save") {
        need(1);
        need_start();
        saved[args[0]] = st;
        out << "save " << args[0] << "\n";
      } else if (cmd == "load") {
        need(1);
        auto it = saved.find(args[0]);
        if (it == saved.end()) throw ParseError("no saved state '" + args[0] + "'", lineno);
        st = it->second;
        started = true;
        out << "load " << args[0] << ": " << to_string(st.sw) << "\n";
      } else if (cmd == "compare") {
        need(2);
        for (const auto& a : args)
          if (!saved.count(a)) throw ParseError("no saved state '" + a + "'", lineno);
        const bool same = support(saved[args[0]].sw) == support(saved[args[1]].sw);
        out << "compare " << args[0] << " " << args[1] << ": supports " << (same ? "equal" : "distinct") << "\n";
      } else if (cmd == "print") {
        need(0);
        need_start();
        out << to_string(st.sw) << "\n";
      } else if (cmd == "minimal?") {
        need(0);
        need_start();
        auto m = minimality_check(st.sw, st.lattice);
        out << "minimal? " << (m.minimal ? "true" : "false") << "\n";
        for (const auto& cp : m.pairs) {
          out << "  (" << to_string(cp.k) << ") - (" << to_string(cp.k_prime) << "): square "
              << to_string(cp.square) << "\n";
        }
        if (m.offender) out << "  witness: square -4 for (" << to_string(m.offender->k) << ", " << to_string(m.offender->k_prime) << ")\n";
        res.last_minimality = std::move(m);
      } else if (cmd == "symmetric?") {
        need(0);
        need_start();
        out << "symmetric? " << (charge_symmetric(st.sw) ? "true" : "false") << "\n";
      } else {
        throw ParseError("unknown command '" + cmd + "'", lineno, 1);
      }
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(e.what(), lineno);
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  const auto defaulted = st.lattice.defaulted_pairs();
  if (!defaulted.empty()) {
    out << "unstated pairings taken as 0:";
    for (const auto& [a, b] : defaulted) out << " " << a << "." << b;
    out << "\n";
  }
  out << "final: " << to_string(st.sw) << "\n";
  res.final_sw = st.sw;
  res.report = out.str();
  return res;
}

}  // namespace mcg
