#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace p2leaf {

using BigInt = boost::multiprecision::cpp_int;

/// Element a0 + a1 z + a2 z^2 + a3 z^3 of Z[z], z = exp(i pi / 5).
///
/// Values are kept reduced modulo z^4 - z^3 + z^2 - z + 1, so two values are
/// equal exactly when their coefficient tuples are equal. The ring contains
/// the golden ratio (z + z^-1) and is closed under rotation by multiples of
/// 36 degrees and under complex conjugation, which is all the geometry of a
/// kite/dart tiling needs.
class CycloInt {
 public:
  using Coeffs = std::array<BigInt, 4>;

  CycloInt() = default;
  CycloInt(long long a0) : c_{BigInt(a0), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  CycloInt(BigInt a0, BigInt a1, BigInt a2, BigInt a3)
      : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

  /// z^k for any integer k.
  static CycloInt zeta_pow(int k);

  const Coeffs& coeffs() const noexcept { return c_; }
  const BigInt& operator[](std::size_t i) const noexcept { return c_[i]; }
  bool is_zero() const noexcept;

  /// Multiplication by z^k, cheaper than a general product.
  CycloInt times_zeta(int k) const;
  /// Complex conjugate (z -> z^-1).
  CycloInt conj() const;

  CycloInt& operator+=(const CycloInt& o);
  CycloInt& operator-=(const CycloInt& o);
  CycloInt& operator*=(const CycloInt& o);

  friend CycloInt operator+(CycloInt a, const CycloInt& b) { return a += b; }
  friend CycloInt operator-(CycloInt a, const CycloInt& b) { return a -= b; }
  friend CycloInt operator*(const CycloInt& a, const CycloInt& b);
  friend CycloInt operator-(const CycloInt& a);

  friend bool operator==(const CycloInt& a, const CycloInt& b) { return a.c_ == b.c_; }
  /// Lexicographic order on the coefficient tuple. Has no geometric meaning;
  /// it only provides canonical orderings.
  friend std::strong_ordering operator<=>(const CycloInt& a, const CycloInt& b);

  std::string to_string() const;

 private:
  Coeffs c_{};
};

/// The golden ratio phi = z + z^-1 = (1, 0, 1, -1).
CycloInt golden();
CycloInt zeta();

/// Numeric embedding z -> exp(i pi / 5). For rendering and sanity checks only.
std::complex<double> to_float(const CycloInt& a);

/// |a|^2 = a * conj(a); always a real element of Z[phi].
CycloInt norm2(const CycloInt& a);

/// Exact sign (-1, 0, +1) of Im(a).
int imag_sign(const CycloInt& a);

/// Exact sign of the cross product Im(conj(u) * v): positive when v is
/// counter-clockwise of u.
int orientation(const CycloInt& u, const CycloInt& v);

struct CycloHash {
  std::size_t operator()(const CycloInt& a) const noexcept;
};

/// Planar point identified with a complex number in Z[z].
using Point = CycloInt;

/// p -> translation + z^rotation * (reflect ? conj(p) : p).
struct Isometry {
  int rotation = 0;
  bool reflect = false;
  Point translation{};

  static Isometry identity() { return {}; }

  Point apply(const Point& p) const;
  Isometry inverse() const;
  /// (a * b)(p) = a(b(p)).
  friend Isometry operator*(const Isometry& a, const Isometry& b);
  friend bool operator==(const Isometry& a, const Isometry& b);
};

/// Linear part of each of the 20 elements of the dihedral group of order 20.
const std::array<Isometry, 20>& point_group();

}  // namespace p2leaf
