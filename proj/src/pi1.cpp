#include "mcg/pi1.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "mcg/errors.hpp"
#include "mcg/free_group.hpp"
#include "mcg/reps.hpp"

namespace mcg {

namespace {

std::vector<int> reduce(const std::vector<int>& in) {
  std::vector<int> out;
  for (int l : in) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

std::vector<int> power_word(int gen, long long e) {
  return std::vector<int>(static_cast<std::size_t>(std::llabs(e)), e > 0 ? gen : -gen);
}

}  // namespace

FPGroup parse_presentation(std::string_view text) {
  FPGroup g;
  bool have_gens = false;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> f;
    for (std::string t; ls >> t;) f.push_back(t);
    if (f.empty()) continue;
    if (!have_gens) {
      if (f[0] != "gens:") throw ParseError("presentation must start with 'gens:'", lineno, 1);
      for (std::size_t i = 1; i < f.size(); ++i) {
        if (std::find(g.generators.begin(), g.generators.end(), f[i]) != g.generators.end()) {
          throw ParseError("duplicate generator '" + f[i] + "'", lineno);
        }
        g.generators.push_back(f[i]);
      }
      if (g.generators.empty()) throw ParseError("no generators", lineno);
      have_gens = true;
      continue;
    }
    std::vector<int> rel;
    for (const auto& tok : f) {
      if (tok == "1") continue;
      const auto caret = tok.find('^');
      const std::string name = tok.substr(0, caret);
      auto it = std::find(g.generators.begin(), g.generators.end(), name);
      if (it == g.generators.end()) throw ParseError("unknown generator '" + name + "'", lineno);
      long long e = 1;
      if (caret != std::string::npos) {
        const std::string ex = tok.substr(caret + 1);
        std::size_t used = 0;
        try {
          e = std::stoll(ex, &used);
        } catch (const std::logic_error&) {
          used = 0;
        }
        if (used == 0 || used != ex.size()) throw ParseError("bad exponent in '" + tok + "'", lineno);
        if (std::llabs(e) > 1000000) throw ParseError("exponent too large in '" + tok + "'", lineno);
      }
      const auto add = power_word(static_cast<int>(it - g.generators.begin()) + 1, e);
      rel.insert(rel.end(), add.begin(), add.end());
    }
    rel = reduce(rel);
    if (!rel.empty()) g.relators.push_back(std::move(rel));
  }
  if (!have_gens) throw ParseError("presentation must start with 'gens:'");
  return g;
}

std::string to_text(const FPGroup& g) {
  std::string s = "gens:";
  for (const auto& n : g.generators) s += " " + n;
  s += '\n';
  for (const auto& r : g.relators) {
    // run-length form: a^3 b^-1
    std::string line;
    for (std::size_t i = 0; i < r.size();) {
      std::size_t j = i;
      while (j < r.size() && r[j] == r[i]) ++j;
      const long long e = static_cast<long long>(j - i) * (r[i] > 0 ? 1 : -1);
      if (!line.empty()) line += ' ';
      line += g.generators[static_cast<std::size_t>(std::abs(r[i]) - 1)];
      if (e != 1) line += "^" + std::to_string(e);
      i = j;
    }
    s += line + '\n';
  }
  return s;
}

TotalSpacePresentation total_space_presentation(const TwistWord& w, const Registry& reg) {
  TotalSpacePresentation p;
  p.group.generators = {"a1", "b1", "a2", "b2"};
  p.group.relators.push_back(FreeWord::surface_relator().letters());
  p.loops_only = p.group;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const CurveRef& c = w[k].curve;
    if (auto loop = loop_word(c, reg); loop && !loop->empty()) {
      p.group.relators.push_back(loop->cyclically_reduced().letters());
      p.loops_only.relators.push_back(p.group.relators.back());
      continue;
    }
    const H1Vector v = reg.homology_class(c);
    std::vector<int> rel;
    for (int g = 0; g < 4; ++g) {
      const auto add = power_word(g + 1, v.c[g]);
      rel.insert(rel.end(), add.begin(), add.end());
    }
    if (rel.empty()) {
      ++p.trivial_relators;
      p.abelianized.push_back("token " + std::to_string(k) + " " + to_string(c) + ": null-homologous, dropped");
    } else {
      p.abelianized.push_back("token " + std::to_string(k) + " " + to_string(c) + ": class (" + to_string(v) + ")");
      p.group.relators.push_back(std::move(rel));
    }
  }
  return p;
}

bool AbelianInvariants::trivial() const {
  return std::all_of(divisors.begin(), divisors.end(), [](long long d) { return d == 1; });
}

std::size_t AbelianInvariants::free_rank() const {
  return static_cast<std::size_t>(std::count(divisors.begin(), divisors.end(), 0LL));
}

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  const std::size_t n = std::min(rows, cols);
  std::vector<long long> diag;
  auto row_op = [&](std::size_t dst, std::size_t src, long long q) {  // row dst -= q * row src
    for (std::size_t j = 0; j < cols; ++j) m[dst][j] = checked_add(m[dst][j], -checked_mul(q, m[src][j]));
  };
  auto col_op = [&](std::size_t dst, std::size_t src, long long q) {
    for (std::size_t i = 0; i < rows; ++i) m[i][dst] = checked_add(m[i][dst], -checked_mul(q, m[i][src]));
  };
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero entry of the remaining block becomes the pivot
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) pr = i, pc = j;
      if (pr == rows) {
        diag.resize(n, 0);
        return diag;
      }
      std::swap(m[t], m[pr]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        row_op(i, t, m[i][t] / m[t][t]);
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        col_op(j, t, m[t][j] / m[t][t]);
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the rest of the block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_op(t, bad, -1);
    }
    diag.push_back(std::llabs(m[t][t]));
  }
  return diag;
}

namespace {

AbelianInvariants from_columns(std::size_t gens, const std::vector<std::vector<long long>>& cols) {
  std::vector<std::vector<long long>> m(gens, std::vector<long long>(cols.size(), 0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < gens; ++i) m[i][j] = cols[j][i];
  AbelianInvariants a;
  a.divisors = cols.empty() ? std::vector<long long>{} : smith_diagonal(std::move(m));
  a.divisors.resize(gens, 0);
  return a;
}

}  // namespace

AbelianInvariants h1_quotient(const TwistWord& w, const Registry& reg) {
  std::vector<std::vector<long long>> cols;
  for (const auto& t : w.tokens) {
    const H1Vector v = reg.homology_class(t.curve);
    cols.push_back({v.c[0], v.c[1], v.c[2], v.c[3]});
  }
  return from_columns(4, cols);
}

AbelianInvariants abelianization(const FPGroup& g) {
  std::vector<std::vector<long long>> cols;
  for (const auto& r : g.relators) {
    std::vector<long long> v(g.generators.size(), 0);
    for (int l : r) v[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
    cols.push_back(std::move(v));
  }
  return from_columns(g.generators.size(), cols);
}

std::string to_string(const AbelianInvariants& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.divisors.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(a.divisors[i]);
  }
  return s + "]";
}

namespace {

class CosetTable {
 public:
  CosetTable(std::size_t gens, std::size_t limit) : width_(2 * gens), limit_(limit) { add(); }

  static std::size_t col(int letter) { return 2 * static_cast<std::size_t>(std::abs(letter) - 1) + (letter < 0); }
  static std::size_t inv(std::size_t c) { return c ^ 1; }

  bool live(std::size_t c) const { return parent_[c] == c; }
  std::size_t size() const { return parent_.size(); }
  std::size_t live_count() const { return live_; }
  bool full() const { return parent_.size() >= limit_; }

  std::size_t& at(std::size_t c, std::size_t x) { return table_[c * width_ + x]; }

  std::size_t define(std::size_t c, std::size_t x) {
    const std::size_t d = add();
    at(c, x) = d;
    at(d, inv(x)) = c;
    return d;
  }

  // Returns false when a definition was needed but the limit was reached.
  bool scan_and_fill(std::size_t c, const std::vector<int>& w) {
    std::size_t f = c, b = c;
    std::size_t i = 0, j = w.size();
    while (true) {
      while (i < j && at(f, col(w[i])) != kNone) f = at(f, col(w[i++]));
      if (i == j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j > i && at(b, inv(col(w[j - 1]))) != kNone) b = at(b, inv(col(w[--j])));
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        at(f, col(w[i])) = b;
        at(b, inv(col(w[i]))) = f;
        return true;
      }
      if (full()) return false;
      define(f, col(w[i]));
    }
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t width() const { return width_; }

 private:
  std::size_t add() {
    const std::size_t d = parent_.size();
    parent_.push_back(d);
    table_.resize(table_.size() + width_, kNone);
    ++live_;
    return d;
  }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& q) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    --live_;
    q.push_back(l);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> q;
    merge(a, b, q);
    for (std::size_t n = 0; n < q.size(); ++n) {
      const std::size_t e = q[n];
      for (std::size_t x = 0; x < width_; ++x) {
        const std::size_t f = at(e, x);
        if (f == kNone) continue;
        if (at(f, inv(x)) == e) at(f, inv(x)) = kNone;
        const std::size_t e1 = rep(e), f1 = rep(f);
        if (at(e1, x) != kNone) {
          merge(f1, at(e1, x), q);
        } else if (at(f1, inv(x)) != kNone) {
          merge(e1, at(f1, inv(x)), q);
        } else {
          at(e1, x) = f1;
          at(f1, inv(x)) = e1;
        }
      }
    }
  }

  std::size_t width_;
  std::size_t limit_;
  std::size_t live_ = 0;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> table_;
};

}  // namespace

CosetResult coset_enumerate(const FPGroup& g, std::size_t limit) {
  if (limit == 0) throw Error(ExitCode::kParse, "coset limit must be positive");
  CosetResult r;
  CosetTable t(g.generators.size(), limit);
  for (std::size_t c = 0; c < t.size(); ++c) {
    for (const auto& rel : g.relators) {
      if (!t.live(c)) break;
      if (!t.scan_and_fill(c, rel)) {
        r.defined = t.size();
        return r;
      }
    }
    for (std::size_t x = 0; x < t.width() && t.live(c); ++x) {
      if (t.at(c, x) != CosetTable::kNone) continue;
      if (t.full()) {
        r.defined = t.size();
        return r;
      }
      t.define(c, x);
    }
  }
  r.complete = true;
  r.order = t.live_count();
  r.defined = t.size();
  return r;
}

}  // namespace mcg
