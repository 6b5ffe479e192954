#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "echreeb/poly.hpp"
#include "echreeb/surd.hpp"

using namespace echreeb;

TEST_CASE("construction and normalization") {
  CHECK(Surd(3).str() == "3");
  CHECK(Surd::rational(4, 6) == Surd::rational(2, 3));
  CHECK(Surd(2, 4, 6) == Surd(1, 2, 3));
  CHECK(Surd(1, 0, -2) == Surd::rational(-1, 2));
  CHECK_THROWS_AS(Surd(1, 1, 0), std::domain_error);
}

TEST_CASE("field arithmetic") {
  const Surd s6 = Surd::sqrt6();
  CHECK(s6 * s6 == Surd(6));
  CHECK((s6 + 1) * (s6 - 1) == Surd(5));
  CHECK((Surd(1) / s6) == Surd(0, 1, 6));
  CHECK(s6.reciprocal() * s6 == Surd(1));
  CHECK_THROWS_AS(Surd(0).reciprocal(), std::domain_error);
  // (1/2 + sqrt6/3) * 6 = 3 + 2 sqrt6
  CHECK(Surd(3, 2, 6) * Surd(6) == Surd(3, 2, 1));
}

TEST_CASE("exact signs and comparisons") {
  // 2 < sqrt6 < 5/2
  CHECK(Surd(2) < Surd::sqrt6());
  CHECK(Surd::sqrt6() < Surd::rational(5, 2));
  // 5 - 2 sqrt6 > 0 since 25 > 24
  CHECK(Surd(5, -2, 1).sign() == 1);
  CHECK(Surd(-5, 2, 1).sign() == -1);
  CHECK(Surd(0).sign() == 0);
}

TEST_CASE("floors") {
  CHECK(Surd::rational(7, 2).floor() == 3);
  CHECK(Surd::rational(-7, 2).floor() == -4);
  CHECK(Surd::sqrt6().floor() == 2);
  CHECK((-Surd::sqrt6()).floor() == -3);
  // floor(5 (sqrt6/2 - 1)) = floor(1.1237...) = 1
  const Surd rot = Surd(-2, 1, 2);
  CHECK((Surd(5) * rot).floor() == 1);
  CHECK((Surd(4) * rot).floor() == 0);
  CHECK(rot.mod1() == rot);
  CHECK((rot + Surd(3)).mod1() == rot);
}

TEST_CASE("from_double is exact") {
  for (double x : {0.5, -0.75, 1.0 / 1024.0, 3.141592653589793, -0.1}) {
    CHECK(Surd::from_double(x).to_double() == x);
  }
  CHECK(Surd::from_double(0.0) == Surd(0));
  CHECK_THROWS_AS(Surd::from_double(std::nan("")), std::domain_error);
}

TEST_CASE("randomized floor agreement with floating point") {
  std::mt19937_64 rng(20240817ULL);
  for (int trial = 0; trial < 200000; ++trial) {
    const long long den = 2 + static_cast<long long>(rng() % 100000);
    const long long num = 1 + static_cast<long long>(rng() % (den - 1));
    const long long m = 1 + static_cast<long long>(rng() % 10000);
    const Surd value = Surd(m) * Surd::rational(num, den);
    const double approx = static_cast<double>(m) * static_cast<double>(num) / static_cast<double>(den);
    if (std::abs(approx - std::round(approx)) < 1e-9) continue;  // stay off knife edges
    CHECK(value.floor() == BigInt(static_cast<long long>(std::floor(approx))));
  }
}

TEST_CASE("polynomial algebra") {
  // (u^2 - 1)(u + 2) = u^3 + 2u^2 - u - 2
  const SurdPoly a = {Surd(-1), Surd(0), Surd(1)};
  const SurdPoly b = {Surd(2), Surd(1)};
  const SurdPoly p = poly_mul(a, b);
  CHECK(p == SurdPoly{Surd(-2), Surd(-1), Surd(2), Surd(1)});
  CHECK(poly_eval(p, Surd(2)) == Surd(12));
  CHECK(poly_derivative(p) == SurdPoly{Surd(-1), Surd(4), Surd(3)});
  CHECK(poly_is_zero(poly_sub(p, p)));
  CHECK(poly_eval(p, 2.0) == doctest::Approx(12.0));
}
