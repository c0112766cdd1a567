/*
   Copyright 2026 The gwcount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Exact integers and rationals plus the elementary number theory the rest of
// the library leans on (valuations, Legendre symbols, squarefree parts).

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwcount/errors.hpp"

namespace gwcount {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}
inline Integer denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

/// Representative of a in [0, m).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

inline Integer pow_mod(const Integer& base, Integer exponent, const Integer& m) {
  return boost::multiprecision::powm(mod_floor(base, m), exponent, m);
}

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

/// Inverse of a modulo m; throws MathError when gcd(a, m) != 1.
inline Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r0 = m, r1 = mod_floor(a, m);
  Integer s0 = 0, s1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) {
    throw MathError("not-invertible",
                    a.str() + " is not invertible modulo " + m.str());
  }
  return mod_floor(s0, m);
}

inline bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr int kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int p : kSmall) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return boost::multiprecision::miller_rabin_test(n, 25);
}

/// p-adic valuation of a nonzero integer.
inline int valuation(Integer n, const Integer& p) {
  if (n == 0) throw MathError("zero", "valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

/// Valuation of a nonzero rational.
inline int valuation(const Rational& r, const Integer& p) {
  return valuation(numerator_of(r), p) - valuation(denominator_of(r), p);
}

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
inline int legendre(const Integer& a, const Integer& p) {
  Integer r = mod_floor(a, p);
  if (r == 0) return 0;
  Integer e = pow_mod(r, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

/// Least positive quadratic nonresidue modulo an odd prime.
inline Integer least_nonresidue(const Integer& p) {
  for (Integer u = 2;; ++u) {
    if (legendre(u, p) == -1) return u;
  }
}

inline std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

inline std::optional<Rational> rational_sqrt(const Rational& x) {
  auto n = exact_sqrt(numerator_of(x));
  auto d = exact_sqrt(denominator_of(x));
  if (!n || !d) return std::nullopt;
  return Rational(*n, *d);
}

namespace detail {

inline Integer pollard_brent(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (Integer c = 1;; ++c) {
    auto f = [&](const Integer& x) { return (x * x + c) % n; };
    Integer y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBlock = 64;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBlock, r - k); ++i) {
          y = f(y);
          q = (q * abs(Integer(x - y))) % n;
        }
        g = gcd(q, n);
        k += kBlock;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_into(Integer n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  if (auto r = exact_sqrt(n)) {
    factor_into(*r, out);
    factor_into(*r, out);
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

/// Prime factorization of |n| (n != 0), sorted by prime.
inline std::vector<std::pair<Integer, int>> factorize(const Integer& value) {
  if (value == 0) throw MathError("zero", "factorization of zero");
  Integer n = abs(value);
  std::vector<Integer> primes;
  for (unsigned p = 2; p < 5000 && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  detail::factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, int>> result;
  for (const auto& p : primes) {
    if (!result.empty() && result.back().first == p) {
      ++result.back().second;
    } else {
      result.emplace_back(p, 1);
    }
  }
  return result;
}

/// Signed squarefree integer s with n = s * m^2.
inline Integer squarefree_part(const Integer& n) {
  Integer s = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e % 2) s *= p;
  }
  return s;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline std::string to_string(const Rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

}  // namespace gwcount
