// Copyright (c) fgk contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>

namespace fgk {

using Int = boost::multiprecision::cpp_int;

inline Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }

/// Nonnegative gcd; gcd(0, 0) = 0.
inline Int gcd(const Int& a, const Int& b) {
  Int x = abs(a), y = abs(b);
  while (y != 0) {
    Int r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

inline Int gcd(std::span<const Int> values) {
  Int g = 0;
  for (const auto& v : values) g = gcd(g, v);
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
inline std::tuple<Int, Int, Int> extended_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

/// Floor modulus in [0, |m|).
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += abs(m);
  return r;
}

inline std::string to_string(const Int& x) { return x.str(); }

/// Narrowing for values that index containers (vertex counts, degrees).
template <class T>
T narrow(const Int& x, const char* what) {
  if (x < Int(std::numeric_limits<T>::min()) ||
      x > Int(std::numeric_limits<T>::max()))
    throw std::out_of_range(std::string(what) + " out of range: " + x.str());
  return x.convert_to<T>();
}

}  // namespace fgk
