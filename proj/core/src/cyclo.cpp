#include "p2leaf/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace p2leaf {

namespace {

int mod10(int k) { return ((k % 10) + 10) % 10; }

int sign_of(const BigInt& x) { return x.sign(); }

// Sign of p + q*sqrt(5).
int sign_surd5(const BigInt& p, const BigInt& q) {
  const int sp = sign_of(p);
  const int sq = sign_of(q);
  if (sp >= 0 && sq >= 0) return (sp > 0 || sq > 0) ? 1 : 0;
  if (sp <= 0 && sq <= 0) return -1;
  const BigInt p2 = p * p;
  const BigInt q2 = 5 * q * q;
  if (sp > 0) return p2 > q2 ? 1 : -1;
  return q2 > p2 ? 1 : -1;
}

}  // namespace

CycloInt CycloInt::zeta_pow(int k) { return CycloInt(1).times_zeta(k); }

bool CycloInt::is_zero() const noexcept {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

CycloInt CycloInt::times_zeta(int k) const {
  CycloInt r = *this;
  for (int i = mod10(k); i > 0; --i) {
    // z^4 = z^3 - z^2 + z - 1
    const BigInt a3 = r.c_[3];
    r.c_[3] = r.c_[2] + a3;
    r.c_[2] = r.c_[1] - a3;
    r.c_[1] = r.c_[0] + a3;
    r.c_[0] = -a3;
  }
  return r;
}

CycloInt CycloInt::conj() const {
  // z -> z^9 = 1 - z + z^2 - z^3, z^2 -> z^8 = -z^3, z^3 -> z^7 = -z^2
  return CycloInt(c_[0] + c_[1], -c_[1], c_[1] - c_[3], -c_[1] - c_[2]);
}

CycloInt& CycloInt::operator+=(const CycloInt& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloInt& CycloInt::operator*=(const CycloInt& o) { return *this = *this * o; }

CycloInt operator*(const CycloInt& a, const CycloInt& b) {
  std::array<BigInt, 7> d{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < 4; ++j) d[i + j] += a.c_[i] * b.c_[j];
  }
  for (std::size_t k = 6; k >= 4; --k) {
    d[k - 1] += d[k];
    d[k - 2] -= d[k];
    d[k - 3] += d[k];
    d[k - 4] -= d[k];
  }
  return CycloInt(std::move(d[0]), std::move(d[1]), std::move(d[2]), std::move(d[3]));
}

CycloInt operator-(const CycloInt& a) { return CycloInt(-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]); }

std::strong_ordering operator<=>(const CycloInt& a, const CycloInt& b) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (a.c_[i] < b.c_[i]) return std::strong_ordering::less;
    if (b.c_[i] < a.c_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string CycloInt::to_string() const {
  std::ostringstream os;
  os << '(' << c_[0] << ',' << c_[1] << ',' << c_[2] << ',' << c_[3] << ')';
  return os.str();
}

CycloInt golden() { return CycloInt(1, 0, 1, -1); }

CycloInt zeta() { return CycloInt(0, 1, 0, 0); }

std::complex<double> to_float(const CycloInt& a) {
  std::complex<double> r{0.0, 0.0};
  for (int k = 0; k < 4; ++k) {
    const double angle = k * std::numbers::pi / 5.0;
    r += a[k].convert_to<double>() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return r;
}

CycloInt norm2(const CycloInt& a) { return a * a.conj(); }

int imag_sign(const CycloInt& a) {
  // Im(a) = sin36 * (a1 + (a2 + a3) * phi) and phi = (1 + sqrt5) / 2.
  const BigInt u = a[1];
  const BigInt v = a[2] + a[3];
  return sign_surd5(2 * u + v, v);
}

int orientation(const CycloInt& u, const CycloInt& v) { return imag_sign(u.conj() * v); }

std::size_t CycloHash::operator()(const CycloInt& a) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < 4; ++i) {
    h ^= boost::multiprecision::hash_value(a[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Point Isometry::apply(const Point& p) const {
  return translation + (reflect ? p.conj() : p).times_zeta(rotation);
}

Isometry Isometry::inverse() const {
  if (reflect) {
    // p = z^k conj(q - t)
    return Isometry{mod10(rotation), true, -translation.conj().times_zeta(rotation)};
  }
  return Isometry{mod10(-rotation), false, -translation.times_zeta(-rotation)};
}

Isometry operator*(const Isometry& a, const Isometry& b) {
  // a(b(p)) = ta + z^ka * ca(tb + z^kb * cb(p))
  const int kb = a.reflect ? -b.rotation : b.rotation;
  return Isometry{mod10(a.rotation + kb), a.reflect != b.reflect, a.apply(b.translation)};
}

bool operator==(const Isometry& a, const Isometry& b) {
  return mod10(a.rotation) == mod10(b.rotation) && a.reflect == b.reflect &&
         a.translation == b.translation;
}

const std::array<Isometry, 20>& point_group() {
  static const std::array<Isometry, 20> group = [] {
    std::array<Isometry, 20> g{};
    for (int k = 0; k < 10; ++k) {
      g[static_cast<std::size_t>(k)] = Isometry{k, false, Point{}};
      g[static_cast<std::size_t>(k + 10)] = Isometry{k, true, Point{}};
    }
    return g;
  }();
  return group;
}

}  // namespace p2leaf
