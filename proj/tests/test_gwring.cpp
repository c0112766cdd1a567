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

#include <gtest/gtest.h>

#include "support.hpp"

using namespace gwcount;
using gwtest::Rng;

namespace {

GWElement F(const FieldPtr& k, const char* text) { return parse_form(k, text); }
GWElement FQ(const char* text) { return parse_form(rationals(), text); }
Element q(long long v) { return from_integer(rationals(), v); }

}  // namespace

TEST(GWArithmetic, Products) {
  EXPECT_TRUE(identical(FQ("<2>") * FQ("<3>"), FQ("<6>")));
  const GWElement two = FQ("<2>+<8>");
  EXPECT_EQ(two.terms().size(), 1u);
  EXPECT_EQ(two.multiplicity(q(2)), 2);
  EXPECT_TRUE(is_equal(FQ("h") * FQ("<-5>"), FQ("h")));
  EXPECT_FALSE(identical(FQ("h") * FQ("<-5>"), FQ("h")));
}

TEST(GWArithmetic, Hyperbolic) {
  const FieldPtr k = rationals();
  EXPECT_TRUE(hyperbolic(k, 0).is_zero());
  EXPECT_TRUE(identical(hyperbolic(k, 1), FQ("<1>+<-1>")));
  const GWElement h2 = hyperbolic(k, 2);
  EXPECT_EQ(rank(h2), 4);
  EXPECT_TRUE(discriminant(h2).is_trivial());
  EXPECT_EQ(signature(h2), 0);
}

TEST(GWInvariants, Rank) {
  EXPECT_EQ(rank(FQ("<1>")), 1);
  EXPECT_EQ(rank(FQ("2h") + gwcount::hyperbolic(rationals(), 0) + FQ("8<1>")), 12);
  EXPECT_EQ(rank(GWElement(rationals())), 0);
}

TEST(GWInvariants, Discriminant) {
  EXPECT_EQ(discriminant(FQ("<2>+<3>")).representative(), q(6));
  EXPECT_EQ(discriminant(FQ("h")).representative(), q(-1));
  const FieldPtr f7 = finite_field(7);
  EXPECT_TRUE(discriminant(F(f7, "<3>+<3>")).is_trivial());
}

TEST(GWInvariants, Signature) {
  EXPECT_EQ(signature(F(reals(), "2h + 8<1>")), 8);
  EXPECT_EQ(signature(FQ("h")), 0);
  EXPECT_EQ(signature(FQ("<2>+<10>")), 2);
  const FieldPtr k = parse_field("Q[x]/(x^2-5)");
  EXPECT_EQ(signature(F(k, "<x>"), RealPlace{1}), 1);
  EXPECT_EQ(signature(F(k, "<x>"), RealPlace{-1}), -1);
  EXPECT_EQ(signature(F(k, "<2-x>"), RealPlace{1}), -1);
  EXPECT_EQ(signature(F(k, "<2-x>"), RealPlace{-1}), 1);
  EXPECT_THROW(signature(F(finite_field(5), "<1>")), MathError);
}

TEST(Hilbert, Examples) {
  const FieldPtr k = rationals();
  EXPECT_EQ(hilbert_symbol(q(-1), q(-1), RealPlace{}), -1);
  EXPECT_EQ(hilbert_symbol(q(2), q(5), FinitePlace{5}), -1);
  EXPECT_EQ(gwtest::hilbert_oracle(2, 5, 5), -1);
  for (long long b : {-7, -1, 2, 3, 10}) {
    for (long long p : {0, 2, 3, 5, 7}) {
      const Place place = p == 0 ? Place{RealPlace{}} : Place{FinitePlace{p}};
      EXPECT_EQ(hilbert_symbol(one(k), q(b), place), 1);
    }
  }
  EXPECT_EQ(hilbert_symbol(q(-1), q(-1), FinitePlace{2}), -1);
  EXPECT_EQ(hilbert_symbol(q(3), q(3), FinitePlace{3}), -1);
}

TEST(Hilbert, PlaceMismatch) {
  EXPECT_THROW(hilbert_symbol(from_integer(finite_field(5), 2), from_integer(finite_field(5), 3),
                              RealPlace{}),
               MathError);
  const FieldPtr q5 = padics(5);
  EXPECT_THROW(hilbert_symbol(from_integer(q5, 2), from_integer(q5, 3), FinitePlace{7}),
               MathError);
  EXPECT_EQ(hilbert_symbol(from_integer(q5, 2), from_integer(q5, 5), LocalPlace{}), -1);
}

TEST(Hasse, Examples) {
  EXPECT_EQ(hasse_invariant(FQ("<1>+<1>"), FinitePlace{5}), 1);
  EXPECT_EQ(hasse_invariant(FQ("<2>+<5>"), FinitePlace{5}), -1);
  EXPECT_EQ(hasse_invariant(FQ("<7>"), FinitePlace{7}), 1);
  // Repeated classes contribute (a, a) once per pair.
  EXPECT_EQ(hasse_invariant(FQ("3<-1>"), RealPlace{}), -1);
}

TEST(IsEqual, Examples) {
  const FieldPtr f7 = finite_field(7);
  EXPECT_TRUE(is_equal(F(f7, "<3>+<3>"), F(f7, "<1>+<1>")));
  EXPECT_TRUE(gwtest::congruent_oracle({3, 3}, {1, 1}, 7));
  EXPECT_FALSE(is_equal(F(reals(), "<1>"), F(reals(), "<-1>")));
  const GWElement s0 = FQ("<-5> + 4h + <1>");
  EXPECT_TRUE(is_equal(s0, s0));
  EXPECT_TRUE(is_equal(F(complexes(), "<i>+<2>"), F(complexes(), "2<1>")));
  EXPECT_TRUE(is_equal(FQ("<1>+<1>"), FQ("<2>+<2>")));
  EXPECT_FALSE(is_equal(FQ("<1>+<1>"), FQ("<3>+<3>")));
  EXPECT_TRUE(is_equal(FQ("<1>+<1>+<1>"), FQ("<3>+<2>+<6>")));
  EXPECT_FALSE(is_equal(FQ("<1>"), FQ("<2>")));
}

TEST(IsEqual, VirtualForms) {
  EXPECT_TRUE(is_equal(FQ("<2> - <1>"), FQ("<2>+<-1> - h")));
  EXPECT_TRUE(is_equal(FQ("<5> + <-5> - h"), GWElement(rationals())));
  EXPECT_FALSE(is_equal(FQ("<2> - <3>"), GWElement(rationals())));
}

TEST(IsEqual, PAdic) {
  const FieldPtr q5 = padics(5);
  EXPECT_TRUE(is_equal(F(q5, "<1>+<1>"), F(q5, "<2>+<2>")));
  EXPECT_FALSE(is_equal(F(q5, "<5>+<10>"), F(q5, "<1>+<2>")));
  EXPECT_TRUE(is_equal(F(q5, "<5>+<-5>"), F(q5, "h")));
}

TEST(IsEqual, OwnerMismatch) {
  EXPECT_THROW(is_equal(FQ("<1>"), F(reals(), "<1>")), MathError);
  EXPECT_THROW(FQ("<1>") + F(reals(), "<1>"), MathError);
}

TEST(QpResidues, Examples) {
  const FieldPtr q5 = padics(5);
  const FieldPtr f5 = finite_field(5);
  auto [u1, p1] = qp_residues(F(q5, "<1>"));
  EXPECT_TRUE(identical(u1, F(f5, "<1>")));
  EXPECT_TRUE(p1.is_zero());
  auto [u2, p2] = qp_residues(F(q5, "<5>+<10>"));
  EXPECT_TRUE(u2.is_zero());
  EXPECT_TRUE(witt_equal(p2, F(f5, "<1>+<2>")));
  auto [u3, p3] = qp_residues(F(q5, "<2>+<10>"));
  EXPECT_TRUE(identical(u3, F(f5, "<2>")));
  EXPECT_TRUE(identical(p3, F(f5, "<2>")));
}

TEST(WittClass, Examples) {
  EXPECT_TRUE(witt_class(FQ("h")).is_zero());
  EXPECT_TRUE(identical(witt_class(FQ("<1>")), FQ("<1>")));
  EXPECT_TRUE(identical(witt_class(FQ("<5>+<-5>+<2>")), FQ("<2>")));
  const FieldPtr f5 = finite_field(5);
  EXPECT_TRUE(witt_class(F(f5, "2<2>")).is_zero());
}

TEST(FormText, ParseExamples) {
  const GWElement g = FQ("2<1> + <-1> - 3<5>");
  EXPECT_EQ(g.multiplicity(q(1)), 2);
  EXPECT_EQ(g.multiplicity(q(-1)), 1);
  EXPECT_EQ(g.multiplicity(q(5)), -3);
  EXPECT_TRUE(identical(FQ("h"), FQ("<1>+<-1>")));
  EXPECT_THROW(FQ("<0>"), ParseError);
  EXPECT_THROW(FQ("<1> +"), ParseError);
  EXPECT_THROW(FQ("<1"), ParseError);
  EXPECT_TRUE(FQ("0").is_zero());
  EXPECT_TRUE(identical(FQ("3*<2>"), FQ("3<2>")));
  EXPECT_TRUE(identical(FQ("2(<1>+<3>)"), FQ("2<1>+2<3>")));
  EXPECT_TRUE(identical(FQ("<1/2>"), FQ("<2>")));
}

TEST(FormText, RoundTrip) {
  Rng rng(21);
  for (const auto& f : {rationals(), finite_field(7), parse_field("F(3^2)"), reals(),
                        padics(5), parse_field("Q[x]/(x^2-2)")}) {
    for (int i = 0; i < 100; ++i) {
      const GWElement g = gwtest::random_virtual(rng, f);
      const GWElement back = parse_form(f, format_form(g));
      EXPECT_TRUE(identical(g, back)) << format_form(g);
    }
  }
}

// ---------------------------------------------------------------------------
// Properties.

namespace {

std::vector<FieldPtr> decidable_fields() {
  return {rationals(), reals(), complexes(), finite_field(5), parse_field("F(3^2)"),
          padics(3), padics(5)};
}

}  // namespace

TEST(GWProperties, RingLaws) {
  Rng rng(31);
  for (const auto& f : decidable_fields()) {
    for (int i = 0; i < 500; ++i) {
      const GWElement a = gwtest::random_virtual(rng, f, 2);
      const GWElement b = gwtest::random_virtual(rng, f, 2);
      const GWElement c = gwtest::random_virtual(rng, f, 2);
      EXPECT_TRUE(is_equal((a + b) + c, a + (b + c))) << describe(*f);
      EXPECT_TRUE(is_equal((a * b) * c, a * (b * c))) << describe(*f);
      EXPECT_TRUE(is_equal(a * (b + c), a * b + a * c)) << describe(*f);
      EXPECT_TRUE(is_equal(a * b, b * a)) << describe(*f);
      EXPECT_TRUE(is_equal(a + b, b + a)) << describe(*f);
    }
  }
}

TEST(GWProperties, RingLawsTermwiseInNumberField) {
  Rng rng(32);
  const FieldPtr k = parse_field("Q[x]/(x^2-3)[y]/(y^2-x)");
  for (int i = 0; i < 100; ++i) {
    const GWElement a = gwtest::random_virtual(rng, k, 2);
    const GWElement b = gwtest::random_virtual(rng, k, 2);
    const GWElement c = gwtest::random_virtual(rng, k, 2);
    EXPECT_TRUE(identical(a * (b + c), a * b + a * c));
    EXPECT_TRUE(identical((a * b) * c, a * (b * c)));
  }
}

TEST(GWProperties, RankOneDependsOnSquareClass) {
  Rng rng(33);
  for (const auto& f : decidable_fields()) {
    for (int i = 0; i < 100; ++i) {
      const Element a = gwtest::random_nonzero(rng, f);
      const Element b = gwtest::random_nonzero(rng, f);
      EXPECT_TRUE(identical(GWElement::rank_one(a), GWElement::rank_one(a * b * b)));
    }
  }
}

TEST(GWProperties, InvariantHomomorphisms) {
  Rng rng(34);
  for (const auto& f : {rationals(), reals(), finite_field(7), padics(5)}) {
    for (int i = 0; i < 100; ++i) {
      const GWElement a = gwtest::random_form(rng, f);
      const GWElement b = gwtest::random_form(rng, f);
      EXPECT_EQ(rank(a + b), rank(a) + rank(b));
      EXPECT_EQ(rank(a * b), rank(a) * rank(b));
      EXPECT_TRUE(discriminant(a + b) == discriminant(a) * discriminant(b));
      if (f->kind() == FieldKind::Rationals || f->kind() == FieldKind::RealClosed) {
        EXPECT_EQ(signature(a + b), signature(a) + signature(b));
        const Element x = gwtest::random_nonzero(rng, f);
        const Element y = gwtest::random_nonzero(rng, f);
        EXPECT_EQ(signature(GWElement::rank_one(x * y)),
                  signature(GWElement::rank_one(x)) * signature(GWElement::rank_one(y)));
      }
    }
  }
}

TEST(GWProperties, HilbertBimultiplicative) {
  Rng rng(35);
  const FieldPtr k = rationals();
  std::vector<Place> places{RealPlace{}};
  for (int p : {2, 3, 5, 7, 11, 13}) places.push_back(FinitePlace{p});
  for (const auto& place : places) {
    for (int i = 0; i < 200; ++i) {
      const Element a = gwtest::random_nonzero(rng, k);
      const Element b1 = gwtest::random_nonzero(rng, k);
      const Element b2 = gwtest::random_nonzero(rng, k);
      EXPECT_EQ(hilbert_symbol(a, b1 * b2, place),
                hilbert_symbol(a, b1, place) * hilbert_symbol(a, b2, place));
      EXPECT_EQ(hilbert_symbol(a, b1, place), hilbert_symbol(b1, a, place));
    }
  }
}

TEST(GWProperties, HilbertProductFormula) {
  Rng rng(36);
  for (int i = 0; i < 100; ++i) {
    const Rational a(gwtest::uniform(rng, -500, 500) | 1, gwtest::uniform(rng, 1, 30));
    const Rational b(gwtest::uniform(rng, -500, 500) | 1, gwtest::uniform(rng, 1, 30));
    std::set<Integer> primes{2};
    for (const Integer& n : {numerator_of(a), denominator_of(a), numerator_of(b), denominator_of(b)}) {
      for (const auto& [p, e] : factorize(n)) primes.insert(p);
    }
    int product = hilbert_symbol(a, b, Integer(0));
    for (const auto& p : primes) product *= hilbert_symbol(a, b, p);
    EXPECT_EQ(product, 1) << a << " " << b;
  }
}

TEST(GWProperties, EqualityMatchesCongruenceSearchSmall) {
  // The exhaustive version is an acceptance criterion; this spot-checks F_7.
  const FieldPtr f7 = finite_field(7);
  const auto forms = gwtest::diagonal_forms(7, 2);
  for (const auto& a : forms) {
    for (const auto& b : forms) {
      EXPECT_EQ(is_equal(gwtest::form_from_entries(f7, a), gwtest::form_from_entries(f7, b)),
                gwtest::congruent_oracle(a, b, 7));
    }
  }
}

TEST(GWProperties, QpResiduesPushout) {
  Rng rng(37);
  for (const auto& q : {padics(3), padics(5), padics(7)}) {
    const FieldPtr fp = finite_field(q->prime());
    for (int i = 0; i < 100; ++i) {
      const GWElement g = gwtest::random_form(rng, q);
      auto [u, p] = qp_residues(g);
      auto [u2, p2] = qp_residues(g + hyperbolic(q, 1));
      EXPECT_TRUE(is_equal(u2, u + hyperbolic(fp, 1)));
      EXPECT_TRUE(witt_equal(p2, p));
      EXPECT_EQ((rank(u) + rank(p)) % 2, rank(g) % 2);
    }
  }
}

TEST(GWProperties, WittClassIdempotentAndCompatible) {
  Rng rng(38);
  for (const auto& f : decidable_fields()) {
    for (int i = 0; i < 100; ++i) {
      const GWElement a = gwtest::random_form(rng, f);
      const GWElement w = witt_class(a);
      EXPECT_TRUE(identical(witt_class(w), w));
      EXPECT_TRUE(witt_equal(a, w));
      // Search n, m <= 5 for a + nh = b + mh with b = a + kh.
      const GWElement b = a + hyperbolic(f, gwtest::uniform(rng, 0, 3));
      bool found = false;
      for (int n = 0; n <= 5 && !found; ++n) {
        for (int m = 0; m <= 5 && !found; ++m) {
          found = is_equal(a + hyperbolic(f, n), b + hyperbolic(f, m));
        }
      }
      EXPECT_TRUE(found);
      EXPECT_TRUE(witt_equal(witt_class(a), witt_class(b)));
    }
  }
}

TEST(GWProperties, RestrictionIsRingHomomorphism) {
  Rng rng(39);
  const FieldPtr k = rationals();
  const FieldPtr e = parse_field("Q[x]/(x^2-7)");
  for (int i = 0; i < 100; ++i) {
    const GWElement a = gwtest::random_form(rng, k);
    const GWElement b = gwtest::random_form(rng, k);
    EXPECT_TRUE(identical(restrict_to(a * b, e), restrict_to(a, e) * restrict_to(b, e)));
    EXPECT_EQ(signature(restrict_to(a, e), RealPlace{1}), signature(a));
    EXPECT_EQ(signature(restrict_to(a, e), RealPlace{-1}), signature(a));
  }
  EXPECT_TRUE(identical(restrict_to(FQ("<7>"), e), parse_form(e, "<1>")));
}
