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

// Independent oracles and random generators shared by the unit suites and the
// acceptance runner. The oracles use plain machine integers, never the
// library's field arithmetic.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gwcount/gwcount.hpp"

namespace gwtest {

using namespace gwcount;
using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// Hilbert symbol by brute force.

inline long long mod_ll(long long a, long long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

/// +1 iff a x^2 + b y^2 = z^2 has a primitive solution modulo p^3 (2^4 when
/// p = 2). Entries are first divided by p^2 as often as possible.
inline int hilbert_oracle(long long a, long long b, long long p) {
  const long long p2 = p * p;
  while (a % p2 == 0) a /= p2;
  while (b % p2 == 0) b /= p2;
  const long long m = p == 2 ? 16 : p2 * p;
  std::vector<char> squares(static_cast<std::size_t>(m), 0);
  std::vector<char> b_squares(static_cast<std::size_t>(m), 0);
  for (long long t = 0; t < m; ++t) {
    squares[static_cast<std::size_t>(mod_ll(t * t, m))] = 1;
    b_squares[static_cast<std::size_t>(mod_ll(b * mod_ll(t * t, m), m))] = 1;
  }
  for (long long t = 0; t < m; ++t) {
    const long long t2 = mod_ll(t * t, m);
    if (b_squares[static_cast<std::size_t>(mod_ll(1 - a * t2, m))]) return 1;  // z = 1
    if (squares[static_cast<std::size_t>(mod_ll(a + b * t2, m))]) return 1;    // x = 1
    if (squares[static_cast<std::size_t>(mod_ll(a * t2 + b, m))]) return 1;    // y = 1
  }
  return -1;
}

// ---------------------------------------------------------------------------
// Congruence of diagonal forms over F_p by exhaustive search.

/// True iff some invertible P satisfies P^T diag(a) P = diag(b) over F_p.
/// Pairwise orthogonal anisotropic vectors are independent, so it suffices to
/// find v_1..v_n with Q_a(v_i) = b_i and B_a(v_i, v_j) = 0.
inline bool congruent_oracle(const std::vector<int>& a, const std::vector<int>& b, int p) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  std::vector<std::vector<int>> vectors;
  int total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  for (int code = 0; code < total; ++code) {
    std::vector<int> v(n);
    int c = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = c % p;
      c /= p;
    }
    vectors.push_back(v);
  }
  auto bil = [&](const std::vector<int>& x, const std::vector<int>& y) {
    long long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<long long>(a[i]) * x[i] * y[i];
    return static_cast<int>(mod_ll(s, p));
  };
  std::vector<const std::vector<int>*> chosen;
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (const auto& v : vectors) {
      if (bil(v, v) != mod_ll(b[i], p)) continue;
      bool orthogonal = true;
      for (const auto* w : chosen) orthogonal = orthogonal && bil(v, *w) == 0;
      if (!orthogonal) continue;
      chosen.push_back(&v);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return search(search, 0);
}

/// All multisets of size <= max_rank drawn from 1..p-1.
inline std::vector<std::vector<int>> diagonal_forms(int p, std::size_t max_rank) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> frontier{{}};
  for (std::size_t r = 1; r <= max_rank; ++r) {
    std::vector<std::vector<int>> next;
    for (const auto& f : frontier) {
      for (int x = f.empty() ? 1 : f.back(); x < p; ++x) {
        auto g = f;
        g.push_back(x);
        next.push_back(g);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

inline GWElement form_from_entries(const FieldPtr& f, const std::vector<int>& entries) {
  GWElement q(f);
  for (int x : entries) q += GWElement::rank_one(from_integer(f, x));
  return q;
}

// ---------------------------------------------------------------------------
// Random data.

inline long long uniform(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// Random element; prime-layer characteristic-0 values are small fractions.
inline Element random_element(Rng& rng, const FieldPtr& f) {
  if (f->is_prime_layer()) {
    if (f->is_finite()) {
      const long long p = static_cast<long long>(f->characteristic());
      return from_integer(f, uniform(rng, 0, p - 1));
    }
    return from_rational(f, Rational(uniform(rng, -12, 12), uniform(rng, 1, 4)));
  }
  std::vector<Element> c;
  for (std::size_t i = 0; i < f->degree(); ++i) c.push_back(random_element(rng, f->base()));
  return Element::make_coeffs(f, std::move(c));
}

inline Element random_nonzero(Rng& rng, const FieldPtr& f) {
  while (true) {
    Element x = random_element(rng, f);
    if (!x.is_zero()) return x;
  }
}

/// Honest random form of rank <= max_rank.
inline GWElement random_form(Rng& rng, const FieldPtr& f, int max_rank = 4) {
  GWElement q(f);
  const long long r = uniform(rng, 0, max_rank);
  for (long long i = 0; i < r; ++i) q += GWElement::rank_one(random_nonzero(rng, f));
  return q;
}

/// Random virtual form.
inline GWElement random_virtual(Rng& rng, const FieldPtr& f, int max_rank = 3) {
  return random_form(rng, f, max_rank) - random_form(rng, f, max_rank);
}

/// A quadratic extension of f by a random non-square, or f itself.
inline FieldPtr random_quadratic(Rng& rng, const FieldPtr& f, const std::string& var) {
  for (int tries = 0; tries < 50; ++tries) {
    const Element d = random_nonzero(rng, f);
    if (is_square(d)) continue;
    return make_extension(f, make_polynomial(f, {-d, zero(f), one(f)}), var);
  }
  return f;
}

/// Random valid curve record over `base`: k(u) is base or a quadratic
/// extension, each node field is k(u) or quadratic over it.
inline CurveRecord random_curve(Rng& rng, const FieldPtr& base, int max_nodes = 3) {
  CurveRecord c;
  c.field = uniform(rng, 0, 1) ? random_quadratic(rng, base, "u") : base;
  const long long nodes = uniform(rng, 0, max_nodes);
  for (long long i = 0; i < nodes; ++i) {
    NodeRecord node;
    node.curve_field = c.field;
    node.node_field = uniform(rng, 0, 2) == 0 ? random_quadratic(rng, c.field, "p") : c.field;
    if (uniform(rng, 0, 3) != 0) node.tangent = random_nonzero(rng, node.node_field);
    c.nodes.push_back(std::move(node));
  }
  return c;
}

}  // namespace gwtest
