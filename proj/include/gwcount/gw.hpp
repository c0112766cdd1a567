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

// The Grothendieck-Witt ring GW(k) of a field: formal integer combinations of
// rank-one forms <a>, ring operations, classifying invariants, and equality.
//
// Conventions: the discriminant is the plain product of diagonal entries
// (no (-1)^{r(r-1)/2} twist) and the Hasse invariant is
// prod_{i<j} (a_i, a_j)_v. Over Q, rank + signature + discriminant + Hasse
// invariants at 2 and at every prime dividing an entry classify forms
// (Hasse-Minkowski plus Witt cancellation).

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gwcount/field.hpp"
#include "gwcount/literal.hpp"
#include "gwcount/squares.hpp"

namespace gwcount {

/// The real place of Q or R, or a real embedding of a real quadratic field
/// (generator sent to the root (-c1 + sign*sqrt(D))/2 of its modulus).
struct RealPlace {
  int embedding_sign = 1;
};
/// The p-adic place of Q (p = 2 allowed).
struct FinitePlace {
  Integer p;
};
/// The place of Q_p itself.
struct LocalPlace {};

using Place = std::variant<RealPlace, FinitePlace, LocalPlace>;

std::string to_string(const Place& place);

class GWElement {
 public:
  struct Term {
    SquareClass cls;
    long long multiplicity;
  };

  GWElement() = default;
  explicit GWElement(FieldPtr field) : field_(std::move(field)) {}

  /// The rank-one form <a>, a != 0.
  static GWElement rank_one(const Element& a);
  /// n copies of h = <1> + <-1>.
  static GWElement hyperbolic(const FieldPtr& field, long long n = 1);

  const FieldPtr& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// All multiplicities nonnegative.
  bool is_honest() const;

  void add_term(const SquareClass& cls, long long multiplicity);
  /// Multiplicity of the class of a (0 if absent).
  long long multiplicity(const Element& a) const;

  GWElement& operator+=(const GWElement& other);
  GWElement& operator-=(const GWElement& other);
  friend GWElement operator+(GWElement a, const GWElement& b) { return a += b; }
  friend GWElement operator-(GWElement a, const GWElement& b) { return a -= b; }
  friend GWElement operator-(const GWElement& a);
  friend GWElement operator*(const GWElement& a, const GWElement& b);
  friend GWElement operator*(long long n, const GWElement& a);

  /// Same multiset of classes. GW equality is is_equal().
  friend bool identical(const GWElement& a, const GWElement& b);

  /// Expanded diagonal entries (honest forms only).
  std::vector<Element> diagonal() const;

 private:
  void sort_terms();

  FieldPtr field_;
  std::vector<Term> terms_;
};

inline GWElement hyperbolic(const FieldPtr& field, long long n) {
  return GWElement::hyperbolic(field, n);
}

long long rank(const GWElement& q);
SquareClass discriminant(const GWElement& q);
/// Sign of x under a real place of its field.
int real_sign(const Element& x, const RealPlace& place);
long long signature(const GWElement& q, const RealPlace& place = {});

/// Hilbert symbol (a, b)_v for nonzero a, b in Q, R or Q_p.
int hilbert_symbol(const Element& a, const Element& b, const Place& place);
/// The same for nonzero rationals; p = 0 denotes the real place.
int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p);
int hasse_invariant(const GWElement& q, const Place& place);

/// Places at which Hasse invariants are compared for forms over Q: the real
/// place, 2, and every prime dividing an entry of either form.
std::vector<Place> relevant_places(const GWElement& a, const GWElement& b);

/// Equality in GW(k) for k in {Q, F_q (and finite towers), R, C, Q_p}.
bool is_equal(const GWElement& a, const GWElement& b);
/// Equality in W(k) = GW(k)/(h).
bool witt_equal(const GWElement& a, const GWElement& b);
/// Cancels pairs <a> + <-a> (and 2<a> when -a ~ a); idempotent.
GWElement witt_class(const GWElement& q);

/// Image of q under GW(k) -> GW(E) for k a subfield of E.
GWElement restrict_to(const GWElement& q, const FieldPtr& extension);

/// Decomposition of an honest form over Q_p into (unit part, uniformizer part
/// mod h), both over F_p.
std::pair<GWElement, GWElement> qp_residues(const GWElement& q);

/// form := ['-'] term (('+'|'-') term)*
/// term := unit (['*'] unit)*
/// unit := int | '<' elem '>' | 'h' | '(' form ')'
GWElement parse_form(const FieldPtr& field, std::string_view text);
std::string format_form(const GWElement& q);

// ===========================================================================

inline std::string to_string(const Place& place) {
  if (const auto* r = std::get_if<RealPlace>(&place)) {
    return r->embedding_sign > 0 ? "inf" : "inf-";
  }
  if (const auto* f = std::get_if<FinitePlace>(&place)) return f->p.str();
  return "local";
}

inline GWElement GWElement::rank_one(const Element& a) {
  GWElement q(a.field());
  q.add_term(square_class(a), 1);
  return q;
}

inline GWElement GWElement::hyperbolic(const FieldPtr& field, long long n) {
  GWElement q(field);
  q.add_term(square_class(one(field)), n);
  q.add_term(square_class(-one(field)), n);
  return q;
}

inline bool GWElement::is_honest() const {
  for (const auto& t : terms_) {
    if (t.multiplicity < 0) return false;
  }
  return true;
}

inline void GWElement::add_term(const SquareClass& cls, long long multiplicity) {
  if (!field_) field_ = cls.field();
  require_same_field(field_, cls.field(), "GW addition");
  if (multiplicity == 0) return;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].cls == cls) {
      terms_[i].multiplicity += multiplicity;
      if (terms_[i].multiplicity == 0) terms_.erase(terms_.begin() + static_cast<long>(i));
      return;
    }
  }
  terms_.push_back({cls, multiplicity});
  sort_terms();
}

inline void GWElement::sort_terms() {
  if (terms_.empty() || !terms_.front().cls.canonical()) return;
  auto key_less = [](const Term& a, const Term& b) {
    const Element& x = a.cls.representative();
    const Element& y = b.cls.representative();
    if (x.is_one() != y.is_one()) return x.is_one();
    if (x.field()->is_prime_layer() && x.field()->characteristic() == 0) {
      const Rational ax = x.scalar() < 0 ? Rational(-x.scalar()) : x.scalar();
      const Rational ay = y.scalar() < 0 ? Rational(-y.scalar()) : y.scalar();
      if (ax != ay) return ax < ay;
      return x.scalar() > y.scalar();
    }
    return compare(x, y) < 0;
  };
  std::stable_sort(terms_.begin(), terms_.end(), key_less);
}

inline long long GWElement::multiplicity(const Element& a) const {
  const SquareClass c = square_class(a);
  for (const auto& t : terms_) {
    if (t.cls == c) return t.multiplicity;
  }
  return 0;
}

inline GWElement& GWElement::operator+=(const GWElement& other) {
  if (!field_) field_ = other.field_;
  if (other.field_) require_same_field(field_, other.field_, "GW addition");
  for (const auto& t : other.terms_) add_term(t.cls, t.multiplicity);
  return *this;
}

inline GWElement& GWElement::operator-=(const GWElement& other) {
  if (!field_) field_ = other.field_;
  if (other.field_) require_same_field(field_, other.field_, "GW subtraction");
  for (const auto& t : other.terms_) add_term(t.cls, -t.multiplicity);
  return *this;
}

inline GWElement operator-(const GWElement& a) {
  GWElement r(a.field_);
  for (const auto& t : a.terms_) r.add_term(t.cls, -t.multiplicity);
  return r;
}

inline GWElement operator*(const GWElement& a, const GWElement& b) {
  require_same_field(a.field_, b.field_, "GW multiplication");
  GWElement r(a.field_);
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      r.add_term(s.cls * t.cls, s.multiplicity * t.multiplicity);
    }
  }
  return r;
}

inline GWElement operator*(long long n, const GWElement& a) {
  GWElement r(a.field_);
  for (const auto& t : a.terms_) r.add_term(t.cls, n * t.multiplicity);
  return r;
}

inline bool identical(const GWElement& a, const GWElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.is_zero()) return true;
  if (!same_field(a.field_, b.field_)) return false;
  for (const auto& t : a.terms_) {
    bool found = false;
    for (const auto& u : b.terms_) {
      if (t.cls == u.cls) {
        if (t.multiplicity != u.multiplicity) return false;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

inline std::vector<Element> GWElement::diagonal() const {
  if (!is_honest()) throw MathError("virtual-form", "diagonal of a virtual form");
  std::vector<Element> d;
  for (const auto& t : terms_) {
    for (long long i = 0; i < t.multiplicity; ++i) d.push_back(t.cls.representative());
  }
  return d;
}

inline long long rank(const GWElement& q) {
  long long r = 0;
  for (const auto& t : q.terms()) r += t.multiplicity;
  return r;
}

inline SquareClass discriminant(const GWElement& q) {
  if (!q.field()) throw MathError("no-field", "discriminant of an unowned form");
  Element d = one(q.field());
  for (const auto& t : q.terms()) {
    if (t.multiplicity % 2) d = d * t.cls.representative();
  }
  return square_class(d);
}

inline int real_sign(const Element& x, const RealPlace& place) {
  if (x.is_zero()) return 0;
  const Field& f = *x.field();
  if (f.is_prime_layer() &&
      (f.kind() == FieldKind::Rationals || f.kind() == FieldKind::RealClosed)) {
    return x.scalar() > 0 ? 1 : -1;
  }
  if (!f.is_prime_layer() && f.degree() == 2 && f.base()->is_prime_layer() &&
      f.base()->kind() == FieldKind::Rationals) {
    const auto& m = f.modulus().coeffs;
    const Rational c1 = m[1].scalar(), c0 = m[0].scalar();
    const Rational disc = c1 * c1 - 4 * c0;
    if (disc > 0) {
      // x = alpha + beta*r with r = (-c1 + s*sqrt(D))/2, i.e. A + B*sqrt(D).
      const Rational alpha = x.coeffs()[0].scalar(), beta = x.coeffs()[1].scalar();
      const Rational a = alpha - beta * c1 / 2;
      const Rational b = beta * place.embedding_sign / 2;
      auto sgn = [](const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
      if (b == 0) return sgn(a);
      if (a == 0 || sgn(a) == sgn(b)) return sgn(b) ? sgn(b) : sgn(a);
      return a * a > b * b * disc ? sgn(a) : sgn(b);
    }
  }
  throw MathError("place-mismatch", describe(f) + " has no such real place");
}

inline long long signature(const GWElement& q, const RealPlace& place) {
  long long s = 0;
  for (const auto& t : q.terms()) s += real_sign(t.cls.representative(), place) * t.multiplicity;
  return s;
}

inline int hilbert_symbol(const Rational& ra, const Rational& rb, const Integer& p) {
  if (ra == 0 || rb == 0) throw MathError("zero", "Hilbert symbol of zero");
  // a/b is in the class of a*b.
  const Integer a = numerator_of(ra) * denominator_of(ra);
  const Integer b = numerator_of(rb) * denominator_of(rb);
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  const int alpha = valuation(a, p), beta = valuation(b, p);
  Integer u = a, v = b;
  for (int i = 0; i < alpha; ++i) u /= p;
  for (int i = 0; i < beta; ++i) v /= p;
  if (p == 2) {
    auto eps = [](const Integer& x) { return static_cast<int>(mod_floor((x - 1) / 2, 2)); };
    auto omega = [](const Integer& x) { return static_cast<int>(mod_floor((x * x - 1) / 8, 2)); };
    const int e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
    return e % 2 ? -1 : 1;
  }
  int s = (alpha % 2 && beta % 2 && mod_floor(p, 4) == 3) ? -1 : 1;
  if (beta % 2) s *= legendre(u, p);
  if (alpha % 2) s *= legendre(v, p);
  return s;
}

inline int hilbert_symbol(const Element& a, const Element& b, const Place& place) {
  require_same_field(a.field(), b.field(), "Hilbert symbol");
  const Field& f = *a.field();
  if (!f.is_prime_layer()) {
    throw MathError("place-mismatch", "Hilbert symbols over " + describe(f) + " are not supported");
  }
  if (std::holds_alternative<RealPlace>(place)) {
    if (f.kind() != FieldKind::Rationals && f.kind() != FieldKind::RealClosed) {
      throw MathError("place-mismatch", "real place on " + describe(f));
    }
    return hilbert_symbol(a.scalar(), b.scalar(), Integer(0));
  }
  if (const auto* fp = std::get_if<FinitePlace>(&place)) {
    const bool ok = f.kind() == FieldKind::Rationals ||
                    (f.kind() == FieldKind::PAdic && f.prime() == fp->p);
    if (!ok || !is_probable_prime(fp->p)) {
      throw MathError("place-mismatch", "place " + fp->p.str() + " on " + describe(f));
    }
    return hilbert_symbol(a.scalar(), b.scalar(), fp->p);
  }
  if (f.kind() != FieldKind::PAdic) {
    throw MathError("place-mismatch", "local place on " + describe(f));
  }
  return hilbert_symbol(a.scalar(), b.scalar(), f.prime());
}

inline int hasse_invariant(const GWElement& q, const Place& place) {
  if (!q.is_honest()) throw MathError("virtual-form", "Hasse invariant of a virtual form");
  int eps = 1;
  const auto& t = q.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Element& a = t[i].cls.representative();
    const long long m = t[i].multiplicity;
    if ((m * (m - 1) / 2) % 2) eps *= hilbert_symbol(a, a, place);
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if ((m * t[j].multiplicity) % 2) {
        eps *= hilbert_symbol(a, t[j].cls.representative(), place);
      }
    }
  }
  return eps;
}

inline std::vector<Place> relevant_places(const GWElement& a, const GWElement& b) {
  std::set<Integer> primes{2};
  for (const GWElement* q : {&a, &b}) {
    for (const auto& t : q->terms()) {
      const Rational& r = t.cls.representative().scalar();
      for (const Integer& n : {numerator_of(r), denominator_of(r)}) {
        for (const auto& [p, e] : factorize(n)) primes.insert(p);
      }
    }
  }
  std::vector<Place> places{RealPlace{}};
  for (const auto& p : primes) places.push_back(FinitePlace{p});
  return places;
}

inline bool is_equal(const GWElement& a, const GWElement& b) {
  if (a.field() && b.field()) require_same_field(a.field(), b.field(), "is_equal");
  const FieldPtr field = a.field() ? a.field() : b.field();
  if (!field) return true;
  // a = b iff P = N where a - b = P - N with P, N honest.
  const GWElement diff = a - b;
  GWElement pos(field), neg(field);
  for (const auto& t : diff.terms()) {
    if (t.multiplicity > 0) {
      pos.add_term(t.cls, t.multiplicity);
    } else {
      neg.add_term(t.cls, -t.multiplicity);
    }
  }
  if (rank(pos) != rank(neg)) return false;
  if (pos.is_zero()) return true;
  const Field& f = *field;
  if (f.quadratically_closed()) return true;
  if (f.is_finite()) return discriminant(pos) == discriminant(neg);
  if (f.is_prime_layer()) {
    switch (f.kind()) {
      case FieldKind::RealClosed:
        return signature(pos) == signature(neg);
      case FieldKind::PAdic:
        return discriminant(pos) == discriminant(neg) &&
               hasse_invariant(pos, LocalPlace{}) == hasse_invariant(neg, LocalPlace{});
      case FieldKind::Rationals: {
        if (signature(pos) != signature(neg)) return false;
        if (discriminant(pos) != discriminant(neg)) return false;
        for (const auto& place : relevant_places(pos, neg)) {
          if (hasse_invariant(pos, place) != hasse_invariant(neg, place)) return false;
        }
        return true;
      }
      default:
        break;
    }
  }
  throw Unsupported("GW equality over " + describe(f));
}

inline bool witt_equal(const GWElement& a, const GWElement& b) {
  const long long d = rank(a) - rank(b);
  if (d % 2) return false;
  const FieldPtr field = a.field() ? a.field() : b.field();
  if (!field) return true;
  if (d < 0) return is_equal(a + hyperbolic(field, -d / 2), b);
  return is_equal(a, b + hyperbolic(field, d / 2));
}

inline GWElement witt_class(const GWElement& q) {
  GWElement r(q.field());
  const auto& t = q.terms();
  std::vector<bool> used(t.size(), false);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const SquareClass neg = square_class(-t[i].cls.representative());
    if (neg == t[i].cls) {
      if (t[i].multiplicity % 2) r.add_term(t[i].cls, 1);
      continue;
    }
    long long partner = 0;
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (!used[j] && t[j].cls == neg) {
        partner = t[j].multiplicity;
        used[j] = true;
        break;
      }
    }
    const long long net = t[i].multiplicity - partner;
    if (net > 0) r.add_term(t[i].cls, net);
    if (net < 0) r.add_term(neg, -net);
  }
  return r;
}

inline GWElement restrict_to(const GWElement& q, const FieldPtr& extension) {
  if (!q.field()) return GWElement(extension);
  degree_over(extension, q.field());  // throws unless q.field() is a subfield
  GWElement r(extension);
  for (const auto& t : q.terms()) {
    r.add_term(square_class(embed(t.cls.representative(), extension)), t.multiplicity);
  }
  return r;
}

inline std::pair<GWElement, GWElement> qp_residues(const GWElement& q) {
  const FieldPtr& f = q.field();
  if (!f || f->kind() != FieldKind::PAdic) {
    throw MathError("place-mismatch", "qp_residues needs a form over Q_p");
  }
  if (!q.is_honest()) throw MathError("virtual-form", "qp_residues of a virtual form");
  const Integer& p = f->prime();
  const FieldPtr fp = finite_field(p);
  GWElement units(fp), uniformizers(fp);
  for (const auto& t : q.terms()) {
    const Rational& r = t.cls.representative().scalar();
    const int v = valuation(r, p);
    Rational unit = r;
    for (int i = 0; i < v; ++i) unit /= Rational(p);
    for (int i = 0; i < -v; ++i) unit *= Rational(p);
    const SquareClass residue = square_class(from_rational(fp, unit));
    (v % 2 ? uniformizers : units).add_term(residue, t.multiplicity);
  }
  return {units, witt_class(uniformizers)};
}

// ---------------------------------------------------------------------------

namespace detail {

class FormParser {
 public:
  FormParser(FieldPtr field, std::string_view text)
      : field_(std::move(field)), text_(text) {}

  GWElement parse() {
    GWElement q = form();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return q;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  GWElement form() {
    GWElement q(field_);
    long long sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    q += sign * term();
    while (true) {
      if (accept('+')) {
        q += term();
      } else if (accept('-')) {
        q -= term();
      } else {
        return q;
      }
    }
  }

  // Products bind tighter than sums; an integer n stands for n<1>, so "3<2>"
  // and "3*<2>" agree.
  GWElement term() {
    GWElement acc = unit();
    while (true) {
      skip_ws();
      if (accept('*')) {
        acc = acc * unit();
      } else if (pos_ < text_.size() && (text_[pos_] == '<' || text_[pos_] == 'h' ||
                                         text_[pos_] == '(')) {
        acc = acc * unit();
      } else {
        return acc;
      }
    }
  }

  GWElement unit() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ > start) {
      const long long n = std::stoll(std::string(text_.substr(start, pos_ - start)));
      return n * GWElement::rank_one(one(field_));
    }
    if (accept('<')) {
      const std::size_t elem_start = pos_;
      const std::size_t close = text_.find('>', pos_);
      if (close == std::string_view::npos) fail("expected '>'");
      Element a = parse_element(field_, text_.substr(elem_start, close - elem_start), elem_start);
      if (a.is_zero()) {
        pos_ = elem_start;
        fail("<0> is not a form");
      }
      pos_ = close + 1;
      return GWElement::rank_one(a);
    }
    if (accept('h')) return GWElement::hyperbolic(field_, 1);
    if (accept('(')) {
      GWElement inner = form();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("expected an integer, '<', 'h' or '('");
  }

  FieldPtr field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GWElement parse_form(const FieldPtr& field, std::string_view text) {
  return detail::FormParser(field, text).parse();
}

inline std::string format_form(const GWElement& q) {
  if (q.is_zero()) return "0";
  std::string out;
  for (const auto& t : q.terms()) {
    long long m = t.multiplicity;
    if (out.empty()) {
      if (m < 0) out += "-";
    } else {
      out += m < 0 ? " - " : " + ";
    }
    if (m < 0) m = -m;
    if (m != 1) out += std::to_string(m);
    out += "<" + to_string(t.cls.representative()) + ">";
  }
  return out;
}

}  // namespace gwcount
