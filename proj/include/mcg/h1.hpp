#pragma once

// First homology of the closed genus-2 surface with the ordered symplectic
// basis (A1, B1, A2, B2): <A_i, B_i> = 1, all other basis pairings zero.

#include <array>
#include <iosfwd>
#include <string>

namespace mcg {

struct H1Vector {
  std::array<long long, 4> c{};  // coordinates in (A1, B1, A2, B2)

  bool zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
  H1Vector operator-() const { return {{-c[0], -c[1], -c[2], -c[3]}}; }
  friend H1Vector operator+(const H1Vector& a, const H1Vector& b);
  friend H1Vector operator-(const H1Vector& a, const H1Vector& b) { return a + (-b); }
  bool operator==(const H1Vector&) const = default;
};

/// The symplectic pairing <x, y>.
long long pairing(const H1Vector& x, const H1Vector& y);

/// 4x4 integer matrix acting on column vectors.
class SpMatrix {
 public:
  using Rows = std::array<std::array<long long, 4>, 4>;

  SpMatrix() = default;  // zero matrix
  explicit SpMatrix(const Rows& rows) : m_(rows) {}
  static SpMatrix identity();
  /// The standard symplectic form J with J(x, y) = x^T J y.
  static SpMatrix form();

  long long operator()(int r, int c) const { return m_[r][c]; }
  long long& operator()(int r, int c) { return m_[r][c]; }

  SpMatrix operator*(const SpMatrix& o) const;
  H1Vector operator*(const H1Vector& v) const;
  SpMatrix operator-() const;
  SpMatrix transposed() const;
  /// Inverse of a symplectic matrix: -J M^T J.
  SpMatrix symplectic_inverse() const;

  bool is_symplectic() const;
  bool is_identity() const { return *this == identity(); }
  long long determinant() const;

  /// Row-major 16 entries.
  std::array<long long, 16> digest() const;
  static SpMatrix from_digest(const std::array<long long, 16>& d);

  bool operator==(const SpMatrix&) const = default;

 private:
  Rows m_{};
};

/// x -> x + <x, v> v, the action of a right-handed twist along a curve of class v.
SpMatrix transvection_matrix(const H1Vector& v);

std::string to_string(const H1Vector& v);
std::string to_string(const SpMatrix& m);
std::ostream& operator<<(std::ostream& os, const SpMatrix& m);
std::ostream& operator<<(std::ostream& os, const H1Vector& v);

}  // namespace mcg
