#include "echreeb/surd.hpp"

#include <cmath>
#include <sstream>

namespace echreeb {

namespace {

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
  return boost::multiprecision::gcd(boost::multiprecision::gcd(a, b), c);
}

}  // namespace

Surd::Surd(BigInt p, BigInt q, BigInt r) : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {
  if (r_ == 0) throw std::domain_error("Surd: zero denominator");
  normalize();
}

void Surd::normalize() {
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  BigInt g = gcd3(boost::multiprecision::abs(p_), boost::multiprecision::abs(q_), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

Surd Surd::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Surd::from_double: non-finite value");
  if (x == 0.0) return Surd(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  auto mant_int = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  BigInt p(mant_int);
  BigInt r(1);
  if (exp >= 0) {
    p <<= exp;
  } else {
    r <<= -exp;
  }
  return Surd(std::move(p), 0, std::move(r));
}

Surd Surd::operator+(const Surd& o) const {
  return Surd(p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_, r_ * o.r_);
}

Surd Surd::operator-(const Surd& o) const {
  return Surd(p_ * o.r_ - o.p_ * r_, q_ * o.r_ - o.q_ * r_, r_ * o.r_);
}

Surd Surd::operator*(const Surd& o) const {
  return Surd(p_ * o.p_ + 6 * q_ * o.q_, p_ * o.q_ + q_ * o.p_, r_ * o.r_);
}

Surd Surd::reciprocal() const {
  // 1 / ((p + q*sqrt6)/r) = r*(p - q*sqrt6) / (p^2 - 6 q^2)
  BigInt norm = p_ * p_ - 6 * q_ * q_;
  if (norm == 0) throw std::domain_error("Surd: division by zero");
  return Surd(r_ * p_, -r_ * q_, norm);
}

Surd Surd::operator/(const Surd& o) const { return *this * o.reciprocal(); }

int Surd::sign() const {
  const int sp = p_ == 0 ? 0 : (p_ > 0 ? 1 : -1);
  const int sq = q_ == 0 ? 0 : (q_ > 0 ? 1 : -1);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: compare |p| with |q|*sqrt(6) by squaring.
  BigInt lhs = p_ * p_;
  BigInt rhs = 6 * q_ * q_;
  if (lhs == rhs) return 0;  // impossible since sqrt6 is irrational, kept for safety
  return (lhs > rhs) ? sp : sq;
}

BigInt Surd::floor() const {
  if (q_ == 0) {
    // Floor division toward -infinity.
    BigInt quot = p_ / r_;
    if (p_ < 0 && quot * r_ != p_) --quot;
    return quot;
  }
  BigInt n(static_cast<long long>(std::floor(to_double())));
  auto at_least = [&](const BigInt& k) {  // value >= k ?
    return (*this - Surd(k, 0, 1)).sign() >= 0;
  };
  // Bracket then binary-search; the double guess is almost always exact.
  BigInt step = 1;
  if (at_least(n)) {
    while (at_least(n + step)) {
      n += step;
      step <<= 1;
    }
  } else {
    while (!at_least(n)) {
      n -= step;
      step <<= 1;
    }
  }
  // Invariant: value >= n, value < n + step.
  BigInt lo = n, hi = n + step;
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (at_least(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

Surd Surd::mod1() const { return *this - Surd(floor(), 0, 1); }

double Surd::to_double() const {
  const long double rp = r_.convert_to<long double>();
  const long double num = p_.convert_to<long double>() + q_.convert_to<long double>() * 2.449489742783178098197284074705891L;
  return static_cast<double>(num / rp);
}

std::string Surd::str() const {
  std::ostringstream os;
  if (q_ == 0) {
    os << p_;
    if (r_ != 1) os << "/" << r_;
    return os.str();
  }
  os << "(" << p_;
  if (q_ >= 0) {
    os << "+" << q_;
  } else {
    os << "-" << -q_;
  }
  os << "*sqrt6)";
  if (r_ != 1) os << "/" << r_;
  return os.str();
}

}  // namespace echreeb
