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

// Validated simple extensions base[X]/(m): m must be monic, separable and
// irreducible. Reducibility is certified by a factor, inseparability by
// gcd(m, m').

#include <string>
#include <vector>

#include "gwcount/field.hpp"
#include "gwcount/squares.hpp"

namespace gwcount {

/// base[var]/(min_poly). Throws MathError with code "reducible",
/// "inseparable", "not-monic" or Unsupported.
FieldPtr make_extension(const FieldPtr& base, const Polynomial& min_poly,
                        const std::string& var = "x");

/// A nontrivial factor of f over Q (monic), or the zero polynomial when f is
/// irreducible. Complete: rational roots, then Kronecker's interpolation
/// search for factors of degree <= deg f / 2.
Polynomial rational_reducibility_witness(const Polynomial& f);

// ===========================================================================

namespace detail {

using IntPoly = std::vector<Integer>;

inline IntPoly primitive_integer_poly(const Polynomial& f) {
  Integer lcm = 1;
  for (const auto& c : f.coeffs) {
    Integer d = denominator_of(c.scalar());
    lcm = lcm / gcd(lcm, d) * d;
  }
  IntPoly out;
  Integer g = 0;
  for (const auto& c : f.coeffs) {
    Rational v = c.scalar() * lcm;
    out.push_back(numerator_of(v));
    g = gcd(g, out.back());
  }
  for (auto& c : out) c /= g;
  return out;
}

inline Integer eval_int(const IntPoly& f, const Integer& x) {
  Integer r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

inline std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t count = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

inline Polynomial to_rational_poly(const FieldPtr& q, const std::vector<Rational>& c) {
  std::vector<Element> e;
  for (const auto& x : c) e.push_back(from_rational(q, x));
  return make_polynomial(q, std::move(e));
}

/// Lagrange interpolation through (xs[i], ys[i]) over Q.
inline std::vector<Rational> interpolate(const std::vector<Integer>& xs,
                                         const std::vector<Integer>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> result(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * Rational(xs[j]);
      }
      basis = std::move(next);
      denom *= Rational(xs[i] - xs[j]);
    }
    for (std::size_t k = 0; k < n; ++k) result[k] += basis[k] * Rational(ys[i]) / denom;
  }
  return result;
}

inline bool divides_exactly(const Polynomial& g, const Polynomial& f) {
  return (f % g).is_zero();
}

}  // namespace detail

inline Polynomial rational_reducibility_witness(const Polynomial& f) {
  const FieldPtr q = f.field;
  const int n = f.degree();
  if (n <= 1) return make_polynomial(q, {});
  const detail::IntPoly F = detail::primitive_integer_poly(f);

  // Linear factors.
  if (F[0] == 0) return make_polynomial(q, {zero(q), one(q)});
  for (const auto& num : detail::positive_divisors(F[0])) {
    for (const auto& den : detail::positive_divisors(F.back())) {
      for (int sign : {1, -1}) {
        Rational root(num * sign, den);
        if (evaluate(f, from_rational(q, root)).is_zero()) {
          return make_polynomial(q, {from_rational(q, -root), one(q)});
        }
      }
    }
  }
  if (n <= 3) return make_polynomial(q, {});

  // A squarefree reduction that stays irreducible modulo a good prime
  // certifies irreducibility over Q.
  for (unsigned p = 3; p < 200; p += 2) {
    if (!is_probable_prime(p) || F.back() % p == 0) continue;
    FieldPtr fp = finite_field(p);
    std::vector<Element> c;
    for (const auto& x : F) c.push_back(from_rational(fp, Rational(x)));
    Polynomial g = make_polynomial(fp, std::move(c));
    if (gcd(g, derivative(g)).degree() > 0) continue;
    if (finite_field_reducibility_witness(g).is_zero()) return make_polynomial(q, {});
  }

  // Kronecker: a factor of degree d is determined by its values at d + 1
  // integer points, each of which divides the value of F there.
  for (int d = 2; 2 * d <= n; ++d) {
    std::vector<Integer> xs, values;
    for (long t = 0; static_cast<int>(xs.size()) < d + 1; ++t) {
      // Candidate points 0, 1, -1, 2, -2, ...
      const long x = (t % 2) ? (t + 1) / 2 : -(t / 2);
      Integer v = detail::eval_int(F, x);
      if (v != 0) {
        xs.emplace_back(x);
        values.push_back(v);
      }
    }
    std::vector<std::vector<Integer>> choices;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::vector<Integer> opts;
      for (const auto& dv : detail::positive_divisors(values[i])) {
        opts.push_back(dv);
        if (i > 0) opts.push_back(-dv);  // overall sign fixed by the first point
      }
      choices.push_back(std::move(opts));
    }
    std::vector<std::size_t> idx(xs.size(), 0);
    while (true) {
      std::vector<Integer> ys;
      for (std::size_t i = 0; i < xs.size(); ++i) ys.push_back(choices[i][idx[i]]);
      std::vector<Rational> g = detail::interpolate(xs, ys);
      if (g.back() != 0) {
        Polynomial gp = make_monic(detail::to_rational_poly(q, g));
        if (detail::divides_exactly(gp, f)) return gp;
      }
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return make_polynomial(q, {});
}

inline FieldPtr make_extension(const FieldPtr& base, const Polynomial& min_poly,
                               const std::string& var) {
  require_same_field(base, min_poly.field, "make_extension");
  const int n = min_poly.degree();
  if (n < 1 || !min_poly.coeffs.back().is_one()) {
    throw MathError("not-monic", "minimal polynomial must be monic of positive degree");
  }
  const std::string text = to_string(min_poly, var);
  auto reducible = [&](const Polynomial& factor, const std::string& note) {
    std::string w = factor.is_zero() ? note : to_string(factor, var);
    return MathError("reducible", text + " is reducible over " + describe(*base), w);
  };

  if (base->quadratically_closed() && n > 1) {
    throw reducible(make_polynomial(base, {}), "algebraically closed base");
  }
  if (n > 1) {
    Polynomial g = gcd(min_poly, derivative(min_poly));
    if (g.degree() > 0) {
      throw MathError("inseparable", text + " is not separable", to_string(g, var));
    }
  }
  if (n == 1) {
    return detail::raw_extension(base, min_poly, var, FieldKind::SimpleExtension);
  }

  if (base->is_finite()) {
    Polynomial w = finite_field_reducibility_witness(min_poly);
    if (!w.is_zero()) throw reducible(w, "");
  } else if (base->kind() == FieldKind::Rationals) {
    Polynomial w = rational_reducibility_witness(min_poly);
    if (!w.is_zero()) throw reducible(w, "");
  } else if (base->kind() == FieldKind::RealClosed) {
    if (n > 2) throw reducible(make_polynomial(base, {}), "degree > 2 over R");
    const auto& c = min_poly.coeffs;
    if (c[1].scalar() * c[1].scalar() - 4 * c[0].scalar() >= 0) {
      throw reducible(make_polynomial(base, {}), "nonnegative discriminant");
    }
  } else {
    if (n > 2) {
      throw Unsupported("irreducibility of degree " + std::to_string(n) +
                        " polynomials over " + describe(*base));
    }
    const auto& c = min_poly.coeffs;
    const Element disc = c[1] * c[1] - from_integer(base, 4) * c[0];
    if (disc.is_zero() || is_square(disc)) {
      std::string note = "discriminant " + to_string(disc) + " is a square";
      if (base->kind() != FieldKind::PAdic) {
        if (auto r = sqrt(disc)) {
          const Element root = (-c[1] + *r) / from_integer(base, 2);
          throw reducible(make_polynomial(base, {-root, one(base)}), note);
        }
      }
      throw reducible(make_polynomial(base, {}), note);
    }
  }
  return detail::raw_extension(base, min_poly, var, FieldKind::SimpleExtension);
}

}  // namespace gwcount
