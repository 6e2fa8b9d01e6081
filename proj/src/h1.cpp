#include "mcg/h1.hpp"

#include <ostream>

#include "mcg/errors.hpp"

namespace mcg {

H1Vector operator+(const H1Vector& a, const H1Vector& b) {
  H1Vector r;
  for (int i = 0; i < 4; ++i) r.c[i] = checked_add(a.c[i], b.c[i]);
  return r;
}

long long pairing(const H1Vector& x, const H1Vector& y) {
  // <x,y> = x_A1 y_B1 - x_B1 y_A1 + x_A2 y_B2 - x_B2 y_A2
  long long s = 0;
  s = checked_add(s, checked_mul(x.c[0], y.c[1]));
  s = checked_add(s, -checked_mul(x.c[1], y.c[0]));
  s = checked_add(s, checked_mul(x.c[2], y.c[3]));
  s = checked_add(s, -checked_mul(x.c[3], y.c[2]));
  return s;
}

SpMatrix SpMatrix::identity() {
  SpMatrix m;
  for (int i = 0; i < 4; ++i) m.m_[i][i] = 1;
  return m;
}

SpMatrix SpMatrix::form() {
  SpMatrix j;
  j.m_[0][1] = 1;
  j.m_[1][0] = -1;
  j.m_[2][3] = 1;
  j.m_[3][2] = -1;
  return j;
}

SpMatrix SpMatrix::operator*(const SpMatrix& o) const {
  SpMatrix r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      long long s = 0;
      for (int k = 0; k < 4; ++k) s = checked_add(s, checked_mul(m_[i][k], o.m_[k][j]));
      r.m_[i][j] = s;
    }
  }
  return r;
}

H1Vector SpMatrix::operator*(const H1Vector& v) const {
  H1Vector r;
  for (int i = 0; i < 4; ++i) {
    long long s = 0;
    for (int k = 0; k < 4; ++k) s = checked_add(s, checked_mul(m_[i][k], v.c[k]));
    r.c[i] = s;
  }
  return r;
}

SpMatrix SpMatrix::operator-() const {
  SpMatrix r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.m_[i][j] = -m_[i][j];
  return r;
}

SpMatrix SpMatrix::transposed() const {
  SpMatrix r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.m_[i][j] = m_[j][i];
  return r;
}

SpMatrix SpMatrix::symplectic_inverse() const {
  const SpMatrix j = form();
  return -(j * transposed() * j);
}

bool SpMatrix::is_symplectic() const {
  const SpMatrix j = form();
  return transposed() * j * *this == j;
}

long long SpMatrix::determinant() const {
  // Laplace expansion along the first row with 3x3 minors.
  auto minor3 = [this](int skip) {
    int cols[3];
    for (int c = 0, k = 0; c < 4; ++c)
      if (c != skip) cols[k++] = c;
    auto at = [&](int r, int c) { return m_[r][cols[c]]; };
    long long d = 0;
    d = checked_add(d, checked_mul(at(1, 0), checked_add(checked_mul(at(2, 1), at(3, 2)), -checked_mul(at(2, 2), at(3, 1)))));
    d = checked_add(d, -checked_mul(at(1, 1), checked_add(checked_mul(at(2, 0), at(3, 2)), -checked_mul(at(2, 2), at(3, 0)))));
    d = checked_add(d, checked_mul(at(1, 2), checked_add(checked_mul(at(2, 0), at(3, 1)), -checked_mul(at(2, 1), at(3, 0)))));
    return d;
  };
  long long det = 0;
  for (int c = 0; c < 4; ++c) {
    long long term = checked_mul(m_[0][c], minor3(c));
    det = checked_add(det, (c % 2 == 0) ? term : -term);
  }
  return det;
}

std::array<long long, 16> SpMatrix::digest() const {
  std::array<long long, 16> d{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) d[4 * i + j] = m_[i][j];
  return d;
}

SpMatrix SpMatrix::from_digest(const std::array<long long, 16>& d) {
  SpMatrix m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.m_[i][j] = d[4 * i + j];
  return m;
}

SpMatrix transvection_matrix(const H1Vector& v) {
  SpMatrix m;
  for (int col = 0; col < 4; ++col) {
    H1Vector e;
    e.c[col] = 1;
    const long long k = pairing(e, v);
    for (int row = 0; row < 4; ++row) m(row, col) = checked_add(e.c[row], checked_mul(k, v.c[row]));
  }
  return m;
}

std::string to_string(const H1Vector& v) {
  return std::to_string(v.c[0]) + " " + std::to_string(v.c[1]) + " " + std::to_string(v.c[2]) + " " +
         std::to_string(v.c[3]);
}

std::string to_string(const SpMatrix& m) {
  std::string s = "[";
  for (int i = 0; i < 4; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < 4; ++j) {
      if (j) s += ' ';
      s += std::to_string(m(i, j));
    }
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const SpMatrix& m) { return os << to_string(m); }
std::ostream& operator<<(std::ostream& os, const H1Vector& v) { return os << "(" << to_string(v) << ")"; }

}  // namespace mcg
