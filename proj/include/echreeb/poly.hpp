#pragma once

#include <vector>

#include "echreeb/surd.hpp"

namespace echreeb {

// Polynomial with coefficients in Q(sqrt6); coeffs[k] multiplies u^k.
using SurdPoly = std::vector<Surd>;

inline void poly_trim(SurdPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline bool poly_is_zero(const SurdPoly& p) {
  for (const auto& c : p)
    if (!c.is_zero()) return false;
  return true;
}

inline Surd poly_eval(const SurdPoly& p, const Surd& u) {
  Surd acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * u + *it;
  return acc;
}

inline double poly_eval(const SurdPoly& p, double u) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * u + it->to_double();
  return acc;
}

inline SurdPoly poly_derivative(const SurdPoly& p) {
  SurdPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(Surd(static_cast<long long>(k)) * p[k]);
  poly_trim(d);
  return d;
}

inline SurdPoly poly_add(const SurdPoly& a, const SurdPoly& b) {
  SurdPoly out(std::max(a.size(), b.size()), Surd(0));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  poly_trim(out);
  return out;
}

inline SurdPoly poly_sub(const SurdPoly& a, const SurdPoly& b) {
  SurdPoly out(std::max(a.size(), b.size()), Surd(0));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
  poly_trim(out);
  return out;
}

inline SurdPoly poly_mul(const SurdPoly& a, const SurdPoly& b) {
  if (a.empty() || b.empty()) return {};
  SurdPoly out(a.size() + b.size() - 1, Surd(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  poly_trim(out);
  return out;
}

inline SurdPoly poly_scale(const Surd& s, const SurdPoly& a) {
  SurdPoly out = a;
  for (auto& c : out) c = c * s;
  poly_trim(out);
  return out;
}

}  // namespace echreeb
