#include "mcg/free_group.hpp"

#include <cctype>
#include <cstdlib>

#include "mcg/errors.hpp"

namespace mcg {

namespace {

std::vector<int> reduce(const std::vector<int>& in) {
  std::vector<int> out;
  out.reserve(in.size());
  for (int l : in) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

const char* generator_name(int g) {
  static const char* names[] = {"a1", "b1", "a2", "b2"};
  return names[std::abs(g) - 1];
}

FreeWord::FreeWord(std::vector<int> letters) : w_(reduce(letters)) {
  for (int l : w_) {
    if (l == 0 || std::abs(l) > 4) throw Error(ExitCode::kParse, "free-group letter out of range");
  }
}

FreeWord FreeWord::parse(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '.' || text[i] == '*')) ++i;
  };
  while (true) {
    skip();
    if (i >= text.size()) break;
    if (text[i] == '1' && (i + 1 >= text.size() || !std::isalnum(static_cast<unsigned char>(text[i + 1])))) {
      ++i;
      continue;
    }
    if (i + 1 >= text.size()) throw ParseError("bad free-group word '" + std::string(text) + "'");
    int g = 0;
    std::string_view name = text.substr(i, 2);
    if (name == "a1") g = 1;
    else if (name == "b1") g = 2;
    else if (name == "a2") g = 3;
    else if (name == "b2") g = 4;
    else throw ParseError("unknown surface generator in '" + std::string(text) + "'");
    i += 2;
    long long e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("bad exponent in '" + std::string(text) + "'");
      }
      e = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) e = e * 10 + (text[i++] - '0');
      if (neg) e = -e;
    }
    for (long long k = 0; k < std::llabs(e); ++k) out.push_back(e > 0 ? g : -g);
  }
  return FreeWord(std::move(out));
}

FreeWord FreeWord::surface_relator() { return FreeWord({1, 2, -1, -2, 3, 4, -3, -4}); }

FreeWord FreeWord::inverse() const {
  std::vector<int> out(w_.rbegin(), w_.rend());
  for (int& l : out) l = -l;
  return FreeWord(std::move(out));
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<int> out = w_;
  out.insert(out.end(), o.w_.begin(), o.w_.end());
  return FreeWord(std::move(out));
}

std::pair<FreeWord, FreeWord> FreeWord::conjugate_split() const {
  std::size_t k = 0;
  const std::size_t n = w_.size();
  while (2 * k + 1 < n && w_[k] == -w_[n - 1 - k]) ++k;
  FreeWord u, core;
  u.w_.assign(w_.begin(), w_.begin() + static_cast<std::ptrdiff_t>(k));
  core.w_.assign(w_.begin() + static_cast<std::ptrdiff_t>(k), w_.end() - static_cast<std::ptrdiff_t>(k));
  return {u, core};
}

FreeWord FreeWord::cyclically_reduced() const { return conjugate_split().second; }

H1Vector FreeWord::abelianize() const {
  H1Vector v;
  for (int l : w_) v.c[std::abs(l) - 1] += l > 0 ? 1 : -1;
  return v;
}

bool conjugate(const FreeWord& x, const FreeWord& y) {
  const std::vector<int> a = x.cyclically_reduced().letters();
  const std::vector<int> b = y.cyclically_reduced().letters();
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = a[(i + r) % n] == b[i];
    if (ok) return true;
  }
  return false;
}

std::string to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    int l = w.letters()[i];
    if (i) s += ' ';
    s += generator_name(l);
    if (l < 0) s += "^-1";
  }
  return s;
}

Pi1Automorphism::Pi1Automorphism() {
  for (int g = 1; g <= 4; ++g) images_[g - 1] = FreeWord::generator(g);
}

FreeWord Pi1Automorphism::apply(const FreeWord& w) const {
  std::vector<int> out;
  for (int l : w.letters()) {
    const FreeWord img = l > 0 ? images_[l - 1] : images_[-l - 1].inverse();
    out.insert(out.end(), img.letters().begin(), img.letters().end());
  }
  return FreeWord(std::move(out));
}

Pi1Automorphism Pi1Automorphism::operator*(const Pi1Automorphism& other) const {
  std::array<FreeWord, 4> imgs;
  for (int g = 1; g <= 4; ++g) imgs[g - 1] = apply(other.image(g));
  return Pi1Automorphism(std::move(imgs));
}

SpMatrix Pi1Automorphism::abelianization() const {
  SpMatrix m;
  for (int col = 0; col < 4; ++col) {
    H1Vector v = images_[col].abelianize();
    for (int row = 0; row < 4; ++row) m(row, col) = v.c[row];
  }
  return m;
}

bool Pi1Automorphism::preserves_surface_relator() const {
  const FreeWord r = FreeWord::surface_relator();
  const FreeWord img = apply(r);
  return conjugate(img, r) || conjugate(img, r.inverse());
}

namespace {

// Shortest p with w = (w[0..p))^(n/p).
std::size_t period(const std::vector<int>& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return n;
}

}  // namespace

std::optional<FreeWord> inner_difference(const Pi1Automorphism& f, const Pi1Automorphism& g) {
  // Candidate conjugators come from the first generator; they are w = u r^k s^-1 v^-1
  // where f(a1) = u F u^-1, g(a1) = v G v^-1, G = s t, F = t s and r is the root of F.
  const auto [u, fcore] = f.image(1).conjugate_split();
  const auto [v, gcore] = g.image(1).conjugate_split();
  const auto& F = fcore.letters();
  const auto& G = gcore.letters();
  if (F.size() != G.size()) return std::nullopt;
  auto works = [&](const FreeWord& w) {
    const FreeWord winv = w.inverse();
    for (int x = 1; x <= 4; ++x) {
      if (!(f.image(x) == w * g.image(x) * winv)) return false;
    }
    return true;
  };
  if (F.empty()) {
    // f(a1) = g(a1) = 1 cannot happen for automorphisms; treat as a mismatch.
    return std::nullopt;
  }
  const std::size_t n = F.size();
  const std::size_t p = period(F);
  const FreeWord root(std::vector<int>(F.begin(), F.begin() + static_cast<std::ptrdiff_t>(p)));
  std::size_t bound = 2;
  for (int x = 2; x <= 4; ++x) bound += (f.image(x).length() + g.image(x).length()) / p + 1;
  for (std::size_t i = 0; i < n; ++i) {
    bool rot = true;
    for (std::size_t j = 0; j < n && rot; ++j) rot = G[(j + i) % n] == F[j];
    if (!rot) continue;
    const FreeWord s(std::vector<int>(G.begin(), G.begin() + static_cast<std::ptrdiff_t>(i)));
    const FreeWord tail = s.inverse() * v.inverse();
    FreeWord pos = u, neg = u;
    for (std::size_t k = 0; k <= bound; ++k) {
      if (works(pos * tail)) return pos * tail;
      if (k && works(neg * tail)) return neg * tail;
      pos = pos * root;
      neg = neg * root.inverse();
    }
  }
  return std::nullopt;
}

}  // namespace mcg
