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

// Exact fields of characteristic != 2 and their elements.
//
// A field is either a prime layer (Q, R, Q_p, F_p; elements are rationals,
// reduced to [0, p) in characteristic p) or a simple extension base[X]/(m)
// whose elements are coefficient vectors over the base. F_{p^m} and C are
// extension layers over F_p and R that keep their own kind.
//
// R and Q_p are modeled by their dense subfield Q: every square class, norm,
// trace, signature and Hilbert symbol the library needs is exact on it.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gwcount/errors.hpp"
#include "gwcount/numbers.hpp"

namespace gwcount {

enum class FieldKind {
  Rationals,
  FiniteField,
  RealClosed,
  ComplexClosed,
  PAdic,
  SimpleExtension,
};

class Field;
class Element;
using FieldPtr = std::shared_ptr<const Field>;

/// Polynomial with coefficients in `field`, lowest degree first, no trailing
/// zeros (the zero polynomial has no coefficients).
struct Polynomial {
  FieldPtr field;
  std::vector<Element> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
};

class Element {
 public:
  Element() = default;

  const FieldPtr& field() const { return field_; }
  bool valid() const { return static_cast<bool>(field_); }
  bool is_zero() const;
  bool is_one() const;

  /// Value of a prime-layer element.
  const Rational& scalar() const { return scalar_; }
  /// Coordinates of an extension-layer element in the power basis.
  const std::vector<Element>& coeffs() const { return coeffs_; }

  static Element make_scalar(FieldPtr field, Rational value);
  static Element make_coeffs(FieldPtr field, std::vector<Element> coeffs);

 private:
  FieldPtr field_;
  Rational scalar_;
  std::vector<Element> coeffs_;
};

class Field : public std::enable_shared_from_this<Field> {
 public:
  FieldKind kind() const { return kind_; }
  /// 0 or the odd prime p.
  const Integer& characteristic() const { return characteristic_; }
  /// p for FiniteField and PAdic kinds.
  const Integer& prime() const { return prime_; }
  bool is_prime_layer() const { return !base_; }
  const FieldPtr& base() const { return base_; }
  const Polynomial& modulus() const { return modulus_; }
  /// Degree over base(); 1 for prime layers.
  std::size_t degree() const { return degree_; }
  const std::string& generator_name() const { return generator_; }

  FieldPtr self() const { return shared_from_this(); }
  /// The prime layer at the bottom of the tower.
  FieldPtr root() const;
  FieldKind root_kind() const { return root()->kind(); }

  bool is_finite() const { return characteristic_ != 0; }
  /// Number of elements of a finite field.
  const Integer& order() const { return order_; }
  /// True for C and for quadratic extensions of R.
  bool quadratically_closed() const { return quadratically_closed_; }
  /// Index (see element_from_index) of the fixed quadratic nonresidue of a
  /// finite field.
  const Integer& nonresidue_index() const { return nonresidue_index_; }

  static std::shared_ptr<Field> make_prime(FieldKind kind, Integer prime);
  static std::shared_ptr<Field> make_layer(FieldKind kind, FieldPtr base,
                                           Polynomial modulus,
                                           std::string generator);

 private:
  Field() = default;
  void finish();

  FieldKind kind_ = FieldKind::Rationals;
  Integer characteristic_ = 0;
  Integer prime_ = 0;
  FieldPtr base_;
  Polynomial modulus_;
  std::size_t degree_ = 1;
  std::string generator_;
  Integer order_ = 0;
  bool quadratically_closed_ = false;
  Integer nonresidue_index_ = 0;
};

/// Structural field equality: same kind, primes, and identical towers.
/// Generator names are cosmetic and ignored.
bool same_field(const Field& a, const Field& b);
inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || same_field(*a, *b);
}

inline void require_same_field(const FieldPtr& a, const FieldPtr& b,
                               const char* what) {
  if (!same_field(a, b)) {
    throw MathError("owner-mismatch", std::string(what) +
                                          ": operands belong to different fields");
  }
}

// ---------------------------------------------------------------------------
// Element construction and arithmetic.

Element zero(const FieldPtr& field);
Element one(const FieldPtr& field);
Element from_rational(const FieldPtr& field, const Rational& value);
inline Element from_integer(const FieldPtr& field, long long value) {
  return from_rational(field, Rational(value));
}
/// The class of X in base[X]/(m).
Element generator(const FieldPtr& field);

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator-(const Element& a);
Element operator*(const Element& a, const Element& b);
Element inverse(const Element& a);
inline Element operator/(const Element& a, const Element& b) {
  return a * inverse(b);
}
Element pow(const Element& a, Integer exponent);
bool operator==(const Element& a, const Element& b);
inline bool operator!=(const Element& a, const Element& b) { return !(a == b); }
/// Total order used only to sort canonical square-class representatives.
int compare(const Element& a, const Element& b);

// ---------------------------------------------------------------------------
// Towers.

bool is_ancestor(const FieldPtr& ancestor, const FieldPtr& field);
std::size_t degree_over(const FieldPtr& field, const FieldPtr& ancestor);
/// Image of x (owned by an ancestor of `field`) in `field`.
Element embed(const Element& x, const FieldPtr& field);
/// Basis of `field` as a vector space over `ancestor`: products of power
/// bases along the tower.
std::vector<Element> basis_over(const FieldPtr& field, const FieldPtr& ancestor);
/// Coordinates of x in basis_over(x.field(), ancestor).
std::vector<Element> coordinates_over(const Element& x, const FieldPtr& ancestor);

Element trace_down(const Element& x);
Element norm_down(const Element& x);
/// Tr_{F/K}(x) for x in F and K an ancestor of F.
Element trace(const Element& x, const FieldPtr& ancestor);
/// N_{F/K}(x) for x in F and K an ancestor of F.
Element norm(const Element& x, const FieldPtr& ancestor);

/// Determinant of a square matrix over `field` by Gaussian elimination.
Element determinant(std::vector<std::vector<Element>> rows, const FieldPtr& field);

/// Finite fields only: the element whose flattened prime-field coordinates are
/// the base-p digits of `index`.
Element element_from_index(const FieldPtr& field, Integer index);

// ---------------------------------------------------------------------------
// Polynomials.

Polynomial make_polynomial(const FieldPtr& field, std::vector<Element> coeffs);
Polynomial monomial(const FieldPtr& field, const Element& c, std::size_t degree);
Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Polynomial& a, const Element& c);
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
inline Polynomial operator%(const Polynomial& a, const Polynomial& b) {
  return divmod(a, b).second;
}
Polynomial make_monic(const Polynomial& a);
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial derivative(const Polynomial& a);
Polynomial powmod(Polynomial base, Integer exponent, const Polynomial& modulus);
Element evaluate(const Polynomial& a, const Element& x);
bool operator==(const Polynomial& a, const Polynomial& b);

// ---------------------------------------------------------------------------
// Prime layers and the built-in extension layers.

FieldPtr rationals();
FieldPtr reals();
/// C = R[i]/(i^2 + 1).
FieldPtr complexes();
/// Q_p for an odd prime p.
FieldPtr padics(const Integer& p);
/// F_{p^m}, p an odd prime. For m > 1 the modulus is the monic irreducible
/// polynomial of degree m over F_p minimizing sum c_i p^i; the generator is
/// named "a".
FieldPtr finite_field(const Integer& p, unsigned m = 1);

/// Monic irreducible test over a finite field (Ben-Or). Returns a nontrivial
/// common factor with X^{q^i} - X as the reducibility witness, or the zero
/// polynomial when f is irreducible.
Polynomial finite_field_reducibility_witness(const Polynomial& f);

namespace detail {
/// Extension layer without irreducibility checks; callers guarantee them.
FieldPtr raw_extension(const FieldPtr& base, const Polynomial& modulus,
                       const std::string& generator, FieldKind kind);
}  // namespace detail

std::string to_string(const Element& x);
std::string to_string(const Polynomial& p, const std::string& variable);
std::string describe(const Field& field);

// ===========================================================================
// Implementation.

inline Element Element::make_scalar(FieldPtr field, Rational value) {
  Element e;
  e.field_ = std::move(field);
  e.scalar_ = std::move(value);
  return e;
}

inline Element Element::make_coeffs(FieldPtr field, std::vector<Element> coeffs) {
  Element e;
  e.field_ = std::move(field);
  e.coeffs_ = std::move(coeffs);
  return e;
}

inline bool Element::is_zero() const {
  if (field_->is_prime_layer()) return scalar_ == 0;
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Element& c) { return c.is_zero(); });
}

inline bool Element::is_one() const {
  if (field_->is_prime_layer()) return scalar_ == 1;
  if (!coeffs_[0].is_one()) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Element& c) { return c.is_zero(); });
}

inline FieldPtr Field::root() const {
  const Field* f = this;
  while (f->base_) f = f->base_.get();
  return f->self();
}

inline std::shared_ptr<Field> Field::make_prime(FieldKind kind, Integer prime) {
  std::shared_ptr<Field> f(new Field());
  f->kind_ = kind;
  f->prime_ = prime;
  f->characteristic_ = kind == FieldKind::FiniteField ? prime : Integer(0);
  f->degree_ = 1;
  f->finish();
  return f;
}

inline std::shared_ptr<Field> Field::make_layer(FieldKind kind, FieldPtr base,
                                                Polynomial modulus,
                                                std::string generator) {
  std::shared_ptr<Field> f(new Field());
  f->kind_ = kind;
  f->prime_ = base->prime();
  f->characteristic_ = base->characteristic();
  f->degree_ = static_cast<std::size_t>(modulus.degree());
  f->base_ = std::move(base);
  f->modulus_ = std::move(modulus);
  f->generator_ = std::move(generator);
  f->finish();
  return f;
}

inline void Field::finish() {
  if (characteristic_ != 0) {
    order_ = base_ ? boost::multiprecision::pow(base_->order(),
                                                static_cast<unsigned>(degree_))
                   : characteristic_;
    // Smallest index whose element fails Euler's criterion. Indices below
    // |base| are base elements: in an odd-degree layer their square classes
    // are unchanged, in an even-degree layer they all become squares.
    if (base_ && degree_ % 2 == 1) {
      nonresidue_index_ = base_->nonresidue_index();
    } else {
      const FieldPtr me = shared_from_this();
      const Integer half = (order_ - 1) / 2;
      for (Integer k = base_ ? base_->order() : Integer(2);; ++k) {
        if (!pow(element_from_index(me, k), half).is_one()) {
          nonresidue_index_ = k;
          break;
        }
      }
    }
  }
  quadratically_closed_ =
      kind_ == FieldKind::ComplexClosed ||
      (base_ && base_->kind() == FieldKind::RealClosed && degree_ == 2);
}

inline bool same_field(const Field& a, const Field& b) {
  if (&a == &b) return true;
  if (a.kind() != b.kind() || a.prime() != b.prime() ||
      a.degree() != b.degree() || a.is_prime_layer() != b.is_prime_layer()) {
    return false;
  }
  if (a.is_prime_layer()) return true;
  if (!same_field(*a.base(), *b.base())) return false;
  const auto& ma = a.modulus().coeffs;
  const auto& mb = b.modulus().coeffs;
  if (ma.size() != mb.size()) return false;
  for (std::size_t i = 0; i < ma.size(); ++i) {
    // Coefficients live in structurally equal bases; compare by value.
    if (!(ma[i] == Element(mb[i]))) return false;
  }
  return true;
}

namespace detail {

inline Rational reduce_scalar(const Field& f, const Rational& value) {
  if (f.characteristic() == 0) return value;
  const Integer& p = f.characteristic();
  Integer num = mod_floor(numerator_of(value), p);
  Integer den = denominator_of(value);
  if (den != 1) {
    if (den % p == 0) {
      throw MathError("not-invertible", "denominator " + den.str() +
                                            " vanishes in characteristic " +
                                            p.str());
    }
    num = mod_floor(num * inverse_mod(den, p), p);
  }
  return Rational(num);
}

}  // namespace detail

inline Element zero(const FieldPtr& field) {
  if (field->is_prime_layer()) return Element::make_scalar(field, 0);
  return Element::make_coeffs(
      field, std::vector<Element>(field->degree(), zero(field->base())));
}

inline Element one(const FieldPtr& field) { return from_rational(field, 1); }

inline Element from_rational(const FieldPtr& field, const Rational& value) {
  if (field->is_prime_layer()) {
    return Element::make_scalar(field, detail::reduce_scalar(*field, value));
  }
  std::vector<Element> c(field->degree(), zero(field->base()));
  c[0] = from_rational(field->base(), value);
  return Element::make_coeffs(field, std::move(c));
}

inline Element generator(const FieldPtr& field) {
  if (field->is_prime_layer()) {
    throw MathError("no-generator", "prime field has no adjoined generator");
  }
  std::vector<Element> c(field->degree(), zero(field->base()));
  if (field->degree() == 1) {
    // X = -m_0 in a degree-one extension.
    c[0] = -field->modulus().coeffs[0];
  } else {
    c[1] = one(field->base());
  }
  return Element::make_coeffs(field, std::move(c));
}

inline Element operator+(const Element& a, const Element& b) {
  require_same_field(a.field(), b.field(), "addition");
  const auto& f = a.field();
  if (f->is_prime_layer()) {
    return Element::make_scalar(f, detail::reduce_scalar(*f, a.scalar() + b.scalar()));
  }
  std::vector<Element> c(f->degree());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs()[i] + b.coeffs()[i];
  return Element::make_coeffs(f, std::move(c));
}

inline Element operator-(const Element& a) {
  const auto& f = a.field();
  if (f->is_prime_layer()) {
    return Element::make_scalar(f, detail::reduce_scalar(*f, -a.scalar()));
  }
  std::vector<Element> c(f->degree());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs()[i];
  return Element::make_coeffs(f, std::move(c));
}

inline Element operator-(const Element& a, const Element& b) { return a + (-b); }

namespace detail {

/// Reduces a coefficient vector (any length) modulo the monic modulus of f.
inline std::vector<Element> reduce_mod(const Field& f, std::vector<Element> c) {
  const auto& m = f.modulus().coeffs;
  const std::size_t n = f.degree();
  for (std::size_t k = c.size(); k-- > n;) {
    if (c[k].is_zero()) continue;
    const Element lead = c[k];
    for (std::size_t j = 0; j < n; ++j) {
      c[k - n + j] = c[k - n + j] - lead * m[j];
    }
    c[k] = zero(f.base());
  }
  c.resize(n, zero(f.base()));
  return c;
}

}  // namespace detail

inline Element operator*(const Element& a, const Element& b) {
  require_same_field(a.field(), b.field(), "multiplication");
  const auto& f = a.field();
  if (f->is_prime_layer()) {
    return Element::make_scalar(f, detail::reduce_scalar(*f, a.scalar() * b.scalar()));
  }
  const std::size_t n = f->degree();
  std::vector<Element> prod(2 * n - 1, zero(f->base()));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs()[j].is_zero()) continue;
      prod[i + j] = prod[i + j] + a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return Element::make_coeffs(f, detail::reduce_mod(*f, std::move(prod)));
}

inline Element inverse(const Element& a) {
  const auto& f = a.field();
  if (a.is_zero()) throw MathError("division-by-zero", "inverse of zero");
  if (f->is_prime_layer()) {
    if (f->characteristic() == 0) return Element::make_scalar(f, 1 / a.scalar());
    const Integer& p = f->characteristic();
    return Element::make_scalar(f, Rational(inverse_mod(numerator_of(a.scalar()), p)));
  }
  // Extended Euclid on (a(X), m(X)) over the base.
  Polynomial r0 = f->modulus();
  Polynomial r1 = make_polynomial(f->base(), a.coeffs());
  Polynomial s0 = make_polynomial(f->base(), {});
  Polynomial s1 = make_polynomial(f->base(), {one(f->base())});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) {
    throw MathError("zero-divisor", "element is a zero divisor; modulus reducible");
  }
  Polynomial inv = scale(s0, inverse(r0.coeffs[0]));
  std::vector<Element> c = inv.coeffs;
  c.resize(f->degree(), zero(f->base()));
  return Element::make_coeffs(f, std::move(c));
}

inline Element pow(const Element& a, Integer exponent) {
  Element base = a;
  if (exponent < 0) {
    base = inverse(a);
    exponent = -exponent;
  }
  Element result = one(a.field());
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

inline bool operator==(const Element& a, const Element& b) {
  if (!same_field(a.field(), b.field())) return false;
  if (a.field()->is_prime_layer()) return a.scalar() == b.scalar();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] != b.coeffs()[i]) return false;
  }
  return true;
}

inline int compare(const Element& a, const Element& b) {
  if (a.field()->is_prime_layer()) {
    if (a.scalar() < b.scalar()) return -1;
    return a.scalar() == b.scalar() ? 0 : 1;
  }
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    int c = compare(a.coeffs()[i], b.coeffs()[i]);
    if (c) return c;
  }
  return 0;
}

// ---------------------------------------------------------------------------

inline bool is_ancestor(const FieldPtr& ancestor, const FieldPtr& field) {
  for (const Field* f = field.get(); f; f = f->base().get()) {
    if (same_field(*f, *ancestor)) return true;
  }
  return false;
}

inline std::size_t degree_over(const FieldPtr& field, const FieldPtr& ancestor) {
  std::size_t d = 1;
  for (const Field* f = field.get(); f; f = f->base().get()) {
    if (same_field(*f, *ancestor)) return d;
    d *= f->degree();
  }
  throw MathError("not-a-tower", describe(*ancestor) + " is not a subfield of " +
                                     describe(*field));
}

inline Element embed(const Element& x, const FieldPtr& field) {
  if (same_field(x.field(), field)) return x;
  if (field->is_prime_layer()) {
    throw MathError("owner-mismatch", "element of " + describe(*x.field()) +
                                          " does not embed into " +
                                          describe(*field));
  }
  std::vector<Element> c(field->degree(), zero(field->base()));
  c[0] = embed(x, field->base());
  return Element::make_coeffs(field, std::move(c));
}

inline std::vector<Element> basis_over(const FieldPtr& field,
                                       const FieldPtr& ancestor) {
  if (same_field(field, ancestor)) return {one(field)};
  if (field->is_prime_layer()) degree_over(field, ancestor);  // throws
  std::vector<Element> lower = basis_over(field->base(), ancestor);
  std::vector<Element> result;
  Element power = one(field);
  const Element x = generator(field);
  for (std::size_t i = 0; i < field->degree(); ++i) {
    for (const auto& b : lower) result.push_back(embed(b, field) * power);
    power = power * x;
  }
  return result;
}

inline std::vector<Element> coordinates_over(const Element& x,
                                             const FieldPtr& ancestor) {
  if (same_field(x.field(), ancestor)) return {x};
  if (x.field()->is_prime_layer()) degree_over(x.field(), ancestor);  // throws
  std::vector<Element> result;
  for (const auto& c : x.coeffs()) {
    auto part = coordinates_over(c, ancestor);
    result.insert(result.end(), part.begin(), part.end());
  }
  return result;
}

inline Element trace_down(const Element& x) {
  const auto& f = x.field();
  if (f->is_prime_layer()) throw MathError("not-a-tower", "trace below a prime field");
  Element power = one(f);
  const Element gen = generator(f);
  Element sum = zero(f->base());
  for (std::size_t i = 0; i < f->degree(); ++i) {
    sum = sum + (x * power).coeffs()[i];
    power = power * gen;
  }
  return sum;
}

inline Element norm_down(const Element& x) {
  const auto& f = x.field();
  if (f->is_prime_layer()) throw MathError("not-a-tower", "norm below a prime field");
  const std::size_t n = f->degree();
  // Column i holds the coordinates of x * X^i.
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  Element power = one(f);
  const Element gen = generator(f);
  for (std::size_t i = 0; i < n; ++i) {
    Element col = x * power;
    for (std::size_t r = 0; r < n; ++r) rows[r][i] = col.coeffs()[r];
    power = power * gen;
  }
  return determinant(std::move(rows), f->base());
}

inline Element trace(const Element& x, const FieldPtr& ancestor) {
  degree_over(x.field(), ancestor);
  Element y = x;
  while (!same_field(y.field(), ancestor)) y = trace_down(y);
  return y;
}

inline Element norm(const Element& x, const FieldPtr& ancestor) {
  degree_over(x.field(), ancestor);
  Element y = x;
  while (!same_field(y.field(), ancestor)) y = norm_down(y);
  return y;
}

inline Element determinant(std::vector<std::vector<Element>> a,
                           const FieldPtr& field) {
  const std::size_t n = a.size();
  Element det = one(field);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return zero(field);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    const Element inv = inverse(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const Element factor = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - factor * a[col][c];
    }
  }
  return det;
}

inline Element element_from_index(const FieldPtr& field, Integer index) {
  if (!field->is_finite()) {
    throw MathError("not-finite", "element indexing needs a finite field");
  }
  if (field->is_prime_layer()) {
    return Element::make_scalar(field, Rational(mod_floor(index, field->order())));
  }
  const Integer& q = field->base()->order();
  std::vector<Element> c;
  for (std::size_t i = 0; i < field->degree(); ++i) {
    c.push_back(element_from_index(field->base(), index % q));
    index /= q;
  }
  return Element::make_coeffs(field, std::move(c));
}

// ---------------------------------------------------------------------------

inline Polynomial make_polynomial(const FieldPtr& field, std::vector<Element> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  return Polynomial{field, std::move(coeffs)};
}

inline Polynomial monomial(const FieldPtr& field, const Element& c,
                           std::size_t degree) {
  std::vector<Element> v(degree + 1, zero(field));
  v[degree] = c;
  return make_polynomial(field, std::move(v));
}

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const auto& f = a.field;
  std::vector<Element> c(std::max(a.coeffs.size(), b.coeffs.size()), zero(f));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] = c[i] + b.coeffs[i];
  return make_polynomial(f, std::move(c));
}

inline Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + scale(b, -one(b.field));
}

inline Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return make_polynomial(a.field, {});
  std::vector<Element> c(a.coeffs.size() + b.coeffs.size() - 1, zero(a.field));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      c[i + j] = c[i + j] + a.coeffs[i] * b.coeffs[j];
    }
  }
  return make_polynomial(a.field, std::move(c));
}

inline Polynomial scale(const Polynomial& a, const Element& s) {
  std::vector<Element> c;
  c.reserve(a.coeffs.size());
  for (const auto& x : a.coeffs) c.push_back(x * s);
  return make_polynomial(a.field, std::move(c));
}

inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                const Polynomial& b) {
  if (b.is_zero()) throw MathError("division-by-zero", "polynomial division by zero");
  const auto& f = a.field;
  std::vector<Element> r = a.coeffs;
  const int db = b.degree();
  if (a.degree() < db) return {make_polynomial(f, {}), a};
  std::vector<Element> q(static_cast<std::size_t>(a.degree() - db + 1), zero(f));
  const Element lead_inv = inverse(b.coeffs.back());
  for (int k = a.degree(); k >= db; --k) {
    const Element c = r[static_cast<std::size_t>(k)] * lead_inv;
    q[static_cast<std::size_t>(k - db)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(k - db + j);
      r[idx] = r[idx] - c * b.coeffs[static_cast<std::size_t>(j)];
    }
  }
  r.resize(static_cast<std::size_t>(db), zero(f));
  return {make_polynomial(f, std::move(q)), make_polynomial(f, std::move(r))};
}

inline Polynomial make_monic(const Polynomial& a) {
  if (a.is_zero()) return a;
  return scale(a, inverse(a.coeffs.back()));
}

inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

inline Polynomial derivative(const Polynomial& a) {
  std::vector<Element> c;
  for (std::size_t i = 1; i < a.coeffs.size(); ++i) {
    c.push_back(a.coeffs[i] * from_integer(a.field, static_cast<long long>(i)));
  }
  return make_polynomial(a.field, std::move(c));
}

inline Polynomial powmod(Polynomial base, Integer exponent, const Polynomial& modulus) {
  Polynomial result = make_polynomial(modulus.field, {one(modulus.field)});
  base = base % modulus;
  while (exponent > 0) {
    if (exponent & 1) result = (result * base) % modulus;
    exponent >>= 1;
    if (exponent > 0) base = (base * base) % modulus;
  }
  return result;
}

inline Element evaluate(const Polynomial& a, const Element& x) {
  Element r = zero(x.field());
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    r = r * x + embed(a.coeffs[i], x.field());
  }
  return r;
}

inline bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs.size() != b.coeffs.size()) return false;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] != b.coeffs[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace detail {

inline FieldPtr raw_extension(const FieldPtr& base, const Polynomial& modulus,
                              const std::string& generator, FieldKind kind) {
  return Field::make_layer(kind, base, modulus, generator);
}

inline void require_odd_prime(const Integer& p) {
  if (p == 2) {
    throw MathError("characteristic-2",
                    "residue characteristic 2 is not supported");
  }
  if (!is_probable_prime(p)) {
    throw MathError("not-prime", p.str() + " is not prime");
  }
}

}  // namespace detail

inline FieldPtr rationals() {
  static const FieldPtr q = Field::make_prime(FieldKind::Rationals, 0);
  return q;
}

inline FieldPtr reals() {
  static const FieldPtr r = Field::make_prime(FieldKind::RealClosed, 0);
  return r;
}

inline FieldPtr complexes() {
  static const FieldPtr c = [] {
    FieldPtr r = reals();
    Polynomial m = make_polynomial(r, {one(r), zero(r), one(r)});
    return detail::raw_extension(r, m, "i", FieldKind::ComplexClosed);
  }();
  return c;
}

inline FieldPtr padics(const Integer& p) {
  detail::require_odd_prime(p);
  return Field::make_prime(FieldKind::PAdic, p);
}

inline Polynomial finite_field_reducibility_witness(const Polynomial& f) {
  const FieldPtr& k = f.field;
  const Integer& q = k->order();
  const Polynomial x = monomial(k, one(k), 1);
  Polynomial power = x;
  for (int i = 1; 2 * i <= f.degree(); ++i) {
    power = powmod(power, q, f);
    Polynomial g = gcd(power - x, f);
    if (g.degree() > 0) return g;
  }
  return make_polynomial(k, {});
}

inline FieldPtr finite_field(const Integer& p, unsigned m) {
  detail::require_odd_prime(p);
  if (m == 0) throw MathError("bad-degree", "finite field degree must be positive");
  FieldPtr prime = Field::make_prime(FieldKind::FiniteField, p);
  if (m == 1) return prime;
  const Integer count = boost::multiprecision::pow(p, m);
  for (Integer idx = 0; idx < count; ++idx) {
    std::vector<Element> c;
    Integer t = idx;
    for (unsigned i = 0; i < m; ++i) {
      c.push_back(element_from_index(prime, t % p));
      t /= p;
    }
    c.push_back(one(prime));
    Polynomial f = make_polynomial(prime, std::move(c));
    if (f.coeffs[0].is_zero()) continue;
    if (finite_field_reducibility_witness(f).is_zero()) {
      return detail::raw_extension(prime, f, "a", FieldKind::FiniteField);
    }
  }
  throw MathError("internal", "no irreducible polynomial found");
}

// ---------------------------------------------------------------------------

namespace detail {

inline bool needs_parentheses(const std::string& text) {
  return text.find_first_of("+-", 1) != std::string::npos || text[0] == '-';
}

/// A negative rational, possibly embedded as a constant of an extension.
inline bool is_negative_scalar(const Element& x) {
  if (x.field()->is_prime_layer()) {
    return x.field()->characteristic() == 0 && x.scalar() < 0;
  }
  for (std::size_t i = 1; i < x.coeffs().size(); ++i) {
    if (!x.coeffs()[i].is_zero()) return false;
  }
  return is_negative_scalar(x.coeffs()[0]);
}

}  // namespace detail

inline std::string to_string(const Element& x) {
  const auto& f = x.field();
  if (f->is_prime_layer()) return to_string(x.scalar());
  std::string out;
  const std::string& var = f->generator_name();
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    const Element& c = x.coeffs()[i];
    if (c.is_zero()) continue;
    std::string mono;
    if (i == 1) mono = var;
    if (i > 1) mono = var + "^" + std::to_string(i);
    bool negative = detail::is_negative_scalar(c);
    // Negative rationals print as a subtraction so the text re-parses.
    Element shown = negative ? -c : c;
    std::string coef = to_string(shown);
    if (!shown.field()->is_prime_layer() && detail::needs_parentheses(coef)) {
      coef = "(" + coef + ")";
    }
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (shown.is_one()) {
      term = mono;
    } else {
      term = coef + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? "-" + term : "+" + term;
    }
  }
  return out.empty() ? "0" : out;
}

inline std::string to_string(const Polynomial& p, const std::string& variable) {
  std::string out;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    const Element& c = p.coeffs[i];
    if (c.is_zero()) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? variable : variable + "^" + std::to_string(i));
    bool negative = detail::is_negative_scalar(c);
    Element shown = negative ? -c : c;
    std::string coef = to_string(shown);
    if (!shown.field()->is_prime_layer() && detail::needs_parentheses(coef)) {
      coef = "(" + coef + ")";
    }
    std::string term = mono.empty() ? coef : (shown.is_one() ? mono : coef + "*" + mono);
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? "-" + term : "+" + term;
    }
  }
  return out.empty() ? "0" : out;
}

inline std::string describe(const Field& f) {
  switch (f.kind()) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::RealClosed:
      return "R";
    case FieldKind::PAdic:
      return "Qp(" + f.prime().str() + ")";
    case FieldKind::ComplexClosed:
      return "C";
    case FieldKind::FiniteField: {
      if (f.is_prime_layer()) return "F(" + f.prime().str() + ")";
      return "F(" + f.prime().str() + "^" + std::to_string(f.degree()) + ")";
    }
    case FieldKind::SimpleExtension:
      break;
  }
  return describe(*f.base()) + "[" + f.generator_name() + "]/(" +
         to_string(f.modulus(), f.generator_name()) + ")";
}

}  // namespace gwcount
