#include "coxtop/surd.hpp"

#include <limits>

#include "coxtop/coxeter_matrix.hpp"
#include "coxtop/errors.hpp"

namespace coxtop {

namespace {

constexpr std::array<int, 3> kPrimes = {2, 3, 5};

int slot_product_factor(int a, int b) {
  int common = a & b;
  int f = 1;
  for (int i = 0; i < 3; ++i)
    if ((common >> i) & 1) f *= kPrimes[i];
  return f;
}

int rational_sign(const Rational& r) { return r.sign(); }

// Sign of the element restricted to slots < 2^level.
int sign_in_level(const Surd& x, int level) {
  if (level == 0) return rational_sign(x.coord(0));
  const int bit = level - 1;
  const int half = 1 << bit;
  Surd a;
  Surd b;
  for (int k = 0; k < half; ++k) {
    a += Surd(x.coord(k)) * Surd::basis(k);
    b += Surd(x.coord(k | half)) * Surd::basis(k);
  }
  const int sa = sign_in_level(a, bit);
  const int sb = sign_in_level(b, bit);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a + b*sqrt(p) with opposite signs: compare a^2 against p*b^2.
  Surd t = a * a - Surd(static_cast<long>(kPrimes[bit])) * b * b;
  return sa * sign_in_level(t, bit);
}

}  // namespace

Surd Surd::basis(int slot) {
  Surd out;
  out.c_[slot] = 1;
  return out;
}

Surd Surd::cos_pi_over(int m) {
  switch (m) {
    case 2:
      return Surd();
    case 3:
      return Surd(Rational(1, 2));
    case 4:
      return Surd(Rational(1, 2)) * basis(1);  // sqrt2/2
    case 5:
      return Surd(Rational(1, 4)) + Surd(Rational(1, 4)) * basis(4);  // (1+sqrt5)/4
    case 6:
      return Surd(Rational(1, 2)) * basis(2);  // sqrt3/2
    default:
      break;
  }
  if (m == kInfinity) return Surd(1L);
  throw ValidationError("cos(pi/" + std::to_string(m) +
                        ") is outside Q(sqrt2,sqrt3,sqrt5); supported orders are 2..6 and inf");
}

bool Surd::is_zero() const {
  for (const auto& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

bool Surd::is_rational() const {
  for (int k = 1; k < kDim; ++k)
    if (!c_[k].is_zero()) return false;
  return true;
}

int Surd::sign() const { return sign_in_level(*this, 3); }

Surd Surd::conjugate(int bit) const {
  Surd out = *this;
  for (int k = 0; k < kDim; ++k)
    if ((k >> bit) & 1) out.c_[k] = -out.c_[k];
  return out;
}

Surd Surd::inverse() const {
  if (is_zero()) throw std::domain_error("Surd: division by zero");
  // Multiply by conjugates until the value drops to Q.
  Surd y = *this;
  Surd num(1L);
  for (int bit = 2; bit >= 0; --bit) {
    Surd c = y.conjugate(bit);
    num *= c;
    y *= c;
  }
  Surd out = num;
  for (auto& v : out.c_) v /= y.c_[0];
  return out;
}

Surd Surd::operator-() const {
  Surd out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

Surd& Surd::operator+=(const Surd& o) {
  for (int k = 0; k < kDim; ++k)
    if (!o.c_[k].is_zero()) c_[k] += o.c_[k];
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (int k = 0; k < kDim; ++k)
    if (!o.c_[k].is_zero()) c_[k] -= o.c_[k];
  return *this;
}

Surd operator*(const Surd& a, const Surd& b) {
  Surd out;
  for (int i = 0; i < Surd::kDim; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < Surd::kDim; ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i ^ j] += a.c_[i] * b.c_[j] * slot_product_factor(i, j);
    }
  }
  return out;
}

Surd& Surd::operator*=(const Surd& o) { return *this = *this * o; }

std::string Surd::str() const {
  static const std::array<const char*, kDim> names = {
      "", "sqrt2", "sqrt3", "sqrt6", "sqrt5", "sqrt10", "sqrt15", "sqrt30"};
  std::string out;
  for (int k = 0; k < kDim; ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += '+';
    out += c_[k].str();
    if (k != 0) {
      out += '*';
      out += names[k];
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace coxtop
