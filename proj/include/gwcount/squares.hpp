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

// Square classes k*/(k*)^2.
//
// Canonical representatives exist for Q (signed squarefree integers), R (+-1),
// C and quadratic extensions of R (1), Q_p (1, u, p, up with u the least
// nonresidue mod p) and every finite field (1 or a fixed nonresidue). Towers
// of quadratic extensions of Q have decidable but non-canonical classes:
// a ~ b iff ab is a square, decided by descending one quadratic layer at a
// time. Anything else falls back to comparing representatives exactly.

#include <optional>
#include <string>

#include "gwcount/field.hpp"

namespace gwcount {

enum class SquareSupport { Canonical, Decidable, Identity };

SquareSupport square_support(const Field& field);

/// x != 0. Throws Unsupported when squareness is not decidable over x's field.
bool is_square(const Element& x);

/// A square root of x in its own field, or nullopt when x is not a square.
/// Throws Unsupported for R, Q_p and quadratically closed fields when a root
/// exists but is not representable in the rational model.
std::optional<Element> sqrt(const Element& x);

class SquareClass {
 public:
  SquareClass() = default;
  SquareClass(Element representative, bool canonical)
      : rep_(std::move(representative)), canonical_(canonical) {}

  const Element& representative() const { return rep_; }
  const FieldPtr& field() const { return rep_.field(); }
  bool canonical() const { return canonical_; }
  bool is_trivial() const;

  friend bool operator==(const SquareClass& a, const SquareClass& b);
  friend bool operator!=(const SquareClass& a, const SquareClass& b) {
    return !(a == b);
  }

 private:
  Element rep_;
  bool canonical_ = false;
};

/// The class of x != 0; square_class(x * c^2) == square_class(x).
SquareClass square_class(const Element& x);
bool same_square_class(const Element& a, const Element& b);
/// Class of the product of representatives.
SquareClass operator*(const SquareClass& a, const SquareClass& b);

std::string to_string(const SquareClass& c);

// ===========================================================================

namespace detail {

inline bool all_layers_quadratic_over_q(const Field& f) {
  const Field* cur = &f;
  while (!cur->is_prime_layer()) {
    if (cur->degree() != 2) return false;
    cur = cur->base().get();
  }
  return cur->kind() == FieldKind::Rationals;
}

inline void require_nonzero(const Element& x) {
  if (x.is_zero()) {
    throw MathError("zero", "zero has no square class");
  }
}

inline bool euler_is_square(const Element& x) {
  const Integer half = (x.field()->order() - 1) / 2;
  return pow(x, half).is_one();
}

inline std::optional<Element> tonelli_shanks(const Element& x) {
  if (!euler_is_square(x)) return std::nullopt;
  const FieldPtr& f = x.field();
  Integer t = f->order() - 1;
  unsigned s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  Element c = pow(element_from_index(f, f->nonresidue_index()), t);
  Element r = pow(x, (t + 1) / 2);
  Element u = pow(x, t);
  unsigned m = s;
  while (!u.is_one()) {
    unsigned i = 0;
    Element probe = u;
    while (!probe.is_one()) {
      probe = probe * probe;
      ++i;
    }
    Element b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b;
    m = i;
    c = b * b;
    u = u * c;
    r = r * b;
  }
  return r;
}

/// Square root in a quadratic layer over a base with computable roots.
/// Writing the generator as X = Y - c1/2 with Y^2 = c, an element A + B*Y
/// with B != 0 is a square iff N = A^2 - c B^2 = n^2 in the base and
/// (A + n)/2 or (A - n)/2 is a nonzero square t = u^2; then v = B / (2u).
inline std::optional<Element> quadratic_descent_sqrt(const Element& x) {
  const FieldPtr& f = x.field();
  const FieldPtr& k = f->base();
  const auto& m = f->modulus().coeffs;
  const Element half = inverse(from_integer(k, 2));
  const Element c1h = m[1] * half;
  const Element c = c1h * c1h - m[0];
  const Element& alpha = x.coeffs()[0];
  const Element& beta = x.coeffs()[1];
  const Element a = alpha - beta * c1h;
  const Element b = beta;

  auto build = [&](const Element& u, const Element& v) {
    // u + v*Y = (u + v*c1/2) + v*X
    return Element::make_coeffs(f, {u + v * c1h, v});
  };

  if (b.is_zero()) {
    if (a.is_zero()) return zero(f);
    if (auto r = sqrt(a)) return build(*r, zero(k));
    if (auto r = sqrt(a / c)) return build(zero(k), *r);
    return std::nullopt;
  }
  auto n = sqrt(a * a - c * b * b);
  if (!n) return std::nullopt;
  for (const Element& sign_n : {*n, -*n}) {
    const Element t = (a + sign_n) * half;
    if (t.is_zero()) continue;
    if (auto u = sqrt(t)) {
      return build(*u, b / (from_integer(k, 2) * *u));
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline SquareSupport square_support(const Field& f) {
  if (f.is_finite() || f.quadratically_closed()) return SquareSupport::Canonical;
  if (f.is_prime_layer()) return SquareSupport::Canonical;
  if (detail::all_layers_quadratic_over_q(f)) return SquareSupport::Decidable;
  return SquareSupport::Identity;
}

inline bool is_square(const Element& x) {
  detail::require_nonzero(x);
  const Field& f = *x.field();
  if (f.quadratically_closed()) return true;
  if (f.is_finite()) return detail::euler_is_square(x);
  if (f.is_prime_layer()) {
    const Rational& r = x.scalar();
    switch (f.kind()) {
      case FieldKind::Rationals:
        return rational_sqrt(r).has_value();
      case FieldKind::RealClosed:
        return r > 0;
      case FieldKind::PAdic: {
        const Integer& p = f.prime();
        if (valuation(r, p) % 2) return false;
        Integer unit = numerator_of(r) * denominator_of(r);
        while (unit % p == 0) unit /= p;
        return legendre(unit, p) == 1;
      }
      default:
        break;
    }
  }
  if (detail::all_layers_quadratic_over_q(f)) return sqrt(x).has_value();
  throw Unsupported("square test in " + describe(f));
}

inline std::optional<Element> sqrt(const Element& x) {
  const Field& f = *x.field();
  if (x.is_zero()) return x;
  if (f.is_finite()) return detail::tonelli_shanks(x);
  if (f.is_prime_layer()) {
    if (auto r = rational_sqrt(x.scalar())) return from_rational(x.field(), *r);
    if (f.kind() == FieldKind::Rationals || !is_square(x)) return std::nullopt;
    throw Unsupported("square root of " + to_string(x) + " is not rational");
  }
  if (f.quadratically_closed()) {
    throw Unsupported("square roots in " + describe(f) + " are not representable");
  }
  if (detail::all_layers_quadratic_over_q(f)) return detail::quadratic_descent_sqrt(x);
  throw Unsupported("square root in " + describe(f));
}

inline SquareClass square_class(const Element& x) {
  detail::require_nonzero(x);
  const FieldPtr& fp = x.field();
  const Field& f = *fp;
  if (f.quadratically_closed()) return SquareClass(one(fp), true);
  if (f.is_finite()) {
    if (detail::euler_is_square(x)) return SquareClass(one(fp), true);
    return SquareClass(element_from_index(fp, f.nonresidue_index()), true);
  }
  if (f.is_prime_layer()) {
    const Rational& r = x.scalar();
    switch (f.kind()) {
      case FieldKind::Rationals:
        return SquareClass(
            from_rational(fp, Rational(squarefree_part(numerator_of(r) *
                                                       denominator_of(r)))),
            true);
      case FieldKind::RealClosed:
        return SquareClass(from_integer(fp, r > 0 ? 1 : -1), true);
      case FieldKind::PAdic: {
        const Integer& p = f.prime();
        const int v = valuation(r, p);
        Integer unit = numerator_of(r) * denominator_of(r);
        while (unit % p == 0) unit /= p;
        Integer rep = legendre(unit, p) == 1 ? Integer(1) : least_nonresidue(p);
        if (v % 2) rep *= p;
        return SquareClass(from_rational(fp, Rational(rep)), true);
      }
      default:
        break;
    }
  }
  return SquareClass(x, false);
}

inline bool same_square_class(const Element& a, const Element& b) {
  require_same_field(a.field(), b.field(), "square class comparison");
  detail::require_nonzero(a);
  detail::require_nonzero(b);
  switch (square_support(*a.field())) {
    case SquareSupport::Canonical:
      return square_class(a).representative() == square_class(b).representative();
    case SquareSupport::Decidable:
      return is_square(a * b);
    case SquareSupport::Identity:
      break;
  }
  return a == b;
}

inline bool SquareClass::is_trivial() const {
  return same_square_class(rep_, one(rep_.field()));
}

inline bool operator==(const SquareClass& a, const SquareClass& b) {
  if (!same_field(a.field(), b.field())) return false;
  if (a.canonical_ && b.canonical_) return a.rep_ == b.rep_;
  return same_square_class(a.rep_, b.rep_);
}

inline SquareClass operator*(const SquareClass& a, const SquareClass& b) {
  return square_class(a.representative() * b.representative());
}

inline std::string to_string(const SquareClass& c) {
  return to_string(c.representative());
}

}  // namespace gwcount
