#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace echreeb {

using BigInt = boost::multiprecision::cpp_int;

// Exact element of the real quadratic field Q(sqrt(6)), stored as
// (p + q*sqrt(6)) / r with integer p, q and r > 0, gcd(p, q, r) = 1.
// All comparisons, signs and floors are integer-exact; sqrt(6) is
// irrational so the representation is unique.
class Surd {
 public:
  Surd() : p_(0), q_(0), r_(1) {}
  Surd(long long n) : p_(n), q_(0), r_(1) {}  // NOLINT: implicit by design
  Surd(BigInt p, BigInt q, BigInt r);

  static Surd rational(BigInt num, BigInt den) { return Surd(std::move(num), 0, std::move(den)); }
  static Surd sqrt6() { return Surd(0, 1, 1); }
  // Exact value of an IEEE double (doubles are dyadic rationals).
  static Surd from_double(double x);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& r() const { return r_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }
  bool is_rational() const { return q_ == 0; }
  bool is_integer() const { return q_ == 0 && r_ == 1; }

  Surd operator-() const { return Surd(-p_, -q_, r_); }
  Surd operator+(const Surd& o) const;
  Surd operator-(const Surd& o) const;
  Surd operator*(const Surd& o) const;
  Surd operator/(const Surd& o) const;
  Surd& operator+=(const Surd& o) { return *this = *this + o; }
  Surd& operator-=(const Surd& o) { return *this = *this - o; }
  Surd& operator*=(const Surd& o) { return *this = *this * o; }

  // Sign of the real value: -1, 0, +1. Exact.
  int sign() const;

  bool operator==(const Surd& o) const { return p_ == o.p_ && q_ == o.q_ && r_ == o.r_; }
  bool operator!=(const Surd& o) const { return !(*this == o); }
  bool operator<(const Surd& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const Surd& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const Surd& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const Surd& o) const { return (*this - o).sign() >= 0; }

  Surd reciprocal() const;
  BigInt floor() const;
  // x - floor(x), in [0, 1).
  Surd mod1() const;

  double to_double() const;
  std::string str() const;

 private:
  void normalize();

  BigInt p_, q_, r_;
};

inline Surd operator+(long long a, const Surd& b) { return Surd(a) + b; }
inline Surd operator-(long long a, const Surd& b) { return Surd(a) - b; }
inline Surd operator*(long long a, const Surd& b) { return Surd(a) * b; }

}  // namespace echreeb
