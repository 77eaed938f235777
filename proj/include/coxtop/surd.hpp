#ifndef COXTOP_SURD_HPP
#define COXTOP_SURD_HPP

#include <array>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxtop {

using Rational = boost::multiprecision::cpp_rational;

/// An element of the real field Q(sqrt2, sqrt3, sqrt5), stored as rational
/// coordinates over the basis sqrt(d) for the eight squarefree products d of
/// {2, 3, 5}. Basis slot k holds sqrt(2^b0 * 3^b1 * 5^b2) where b_i is bit i
/// of k, so multiplying two basis vectors is an XOR of slots times the primes
/// in the common bits.
class Surd {
 public:
  static constexpr int kDim = 8;

  Surd() = default;
  Surd(Rational r) { c_[0] = std::move(r); }  // NOLINT: implicit by design of arithmetic
  Surd(long v) : Surd(Rational(v)) {}         // NOLINT

  /// sqrt(2^b0 3^b1 5^b2) for the given slot.
  static Surd basis(int slot);

  /// cos(pi/m) for m in {2,...,6}; the value 1 for the infinite order.
  /// Throws ValidationError for other m.
  static Surd cos_pi_over(int m);

  const Rational& coord(int slot) const { return c_[slot]; }

  bool is_zero() const;
  bool is_rational() const;

  /// -1, 0 or +1, decided exactly by descending the tower of quadratic
  /// extensions.
  int sign() const;

  /// Flips the sign of every coordinate whose slot contains `bit`.
  Surd conjugate(int bit) const;

  Surd inverse() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o) { return *this *= o.inverse(); }

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(Surd a, const Surd& b) { return a /= b; }
  friend bool operator==(const Surd& a, const Surd& b) { return a.c_ == b.c_; }

  /// Canonical text such as "1/2+1/4*sqrt5"; used for hashing and printing.
  std::string str() const;

 private:
  std::array<Rational, kDim> c_{};
};

}  // namespace coxtop

#endif
