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

FieldPtr Q() { return rationals(); }

Element q(long long v) { return from_integer(rationals(), v); }

}  // namespace

TEST(MakeExtension, RationalQuadratic) {
  const FieldPtr k = parse_field("Q[x]/(x^2-5)");
  EXPECT_EQ(k->kind(), FieldKind::SimpleExtension);
  EXPECT_EQ(k->degree(), 2u);
  EXPECT_EQ(degree_over(k, Q()), 2u);
}

TEST(MakeExtension, F9HasNoRootsInF3) {
  const FieldPtr f3 = finite_field(3);
  const Polynomial m = parse_polynomial(f3, "x^2+1", "x");
  for (int t = 0; t < 3; ++t) {
    EXPECT_FALSE(evaluate(m, from_integer(f3, t)).is_zero());
  }
  const FieldPtr f9 = make_extension(f3, m);
  EXPECT_EQ(f9->order(), 9);
}

TEST(MakeExtension, ReducibleCarriesWitness) {
  try {
    parse_field("Q[x]/(x^2-4)");
    FAIL() << "expected rejection";
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), "reducible");
    EXPECT_EQ(e.witness(), "x-2");
  }
}

TEST(MakeExtension, QuarticReducibleWithoutRoots) {
  try {
    parse_field("Q[x]/(x^4+4)");
    FAIL() << "expected rejection";
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), "reducible");
    EXPECT_FALSE(e.witness().empty());
  }
  EXPECT_NO_THROW(parse_field("Q[x]/(x^4+1)"));
  EXPECT_NO_THROW(parse_field("Q[x]/(x^3-2)"));
}

TEST(MakeExtension, InseparableCarriesGcd) {
  try {
    parse_field("Q[x]/(x^2-2x+1)");
    FAIL() << "expected rejection";
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), "inseparable");
    EXPECT_EQ(e.witness(), "x-1");
  }
  try {
    parse_field("F(3)[x]/(x^3+2)");
    FAIL() << "expected rejection";
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), "inseparable");
  }
}

TEST(MakeExtension, RejectsNonMonicAndClosedBases) {
  EXPECT_THROW(parse_field("Q[x]/(2x^2-5)"), MathError);
  EXPECT_THROW(parse_field("C[y]/(y^2-2)"), MathError);
  EXPECT_THROW(parse_field("R[y]/(y^2-2)"), MathError);
  EXPECT_NO_THROW(parse_field("R[y]/(y^2+2)"));
}

TEST(FieldLiteral, Atoms) {
  EXPECT_EQ(describe(*parse_field("Q")), "Q");
  EXPECT_EQ(describe(*parse_field("F(7)")), "F(7)");
  EXPECT_EQ(parse_field("F(3^2)")->order(), 9);
  EXPECT_EQ(parse_field("F(25)")->order(), 25);
  EXPECT_EQ(parse_field("Qp(5)")->kind(), FieldKind::PAdic);
  EXPECT_TRUE(parse_field("C")->quadratically_closed());
}

TEST(FieldLiteral, RejectsCharacteristicTwoAndGarbage) {
  EXPECT_THROW(parse_field("F(2)"), Error);
  EXPECT_THROW(parse_field("F(4)"), Error);
  EXPECT_THROW(parse_field("Qp(2)"), Error);
  EXPECT_THROW(parse_field("F(6)"), Error);
  EXPECT_THROW(parse_field("Z"), ParseError);
  EXPECT_THROW(parse_field("Q[x]/(x^2-5"), ParseError);
}

TEST(FieldLiteral, ParseErrorPosition) {
  try {
    parse_element(Q(), "2 + $");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Norm, Examples) {
  const FieldPtr k = parse_field("Q[x]/(x^2-5)");
  EXPECT_EQ(norm(parse_element(k, "2+x"), Q()), q(-1));
  EXPECT_EQ(norm(one(k), Q()), q(1));
  const FieldPtr c = complexes();
  const Element z = parse_element(c, "3+4i");
  EXPECT_EQ(norm(z, reals()), from_integer(reals(), 25));
}

TEST(Trace, Examples) {
  const FieldPtr k = parse_field("Q[x]/(x^2-5)");
  EXPECT_TRUE(trace(generator(k), Q()).is_zero());
  EXPECT_TRUE(trace(generator(complexes()), reals()).is_zero());
  const FieldPtr f9 = parse_field("F(3)[a]/(a^2+1)");
  const Element alpha = generator(f9);
  EXPECT_TRUE(trace(alpha, finite_field(3)).is_zero());
  // alpha + alpha^3 computed directly in F_9.
  EXPECT_TRUE((alpha + pow(alpha, Integer(3))).is_zero());
}

TEST(SquareClass, Examples) {
  EXPECT_EQ(square_class(q(18)).representative(), q(2));
  EXPECT_EQ(square_class(from_rational(reals(), Rational(-7, 3))).representative(),
            from_integer(reals(), -1));
  const FieldPtr q5 = padics(5);
  // 50 = 2 * 5^2: even valuation, unit part 2 is a nonresidue mod 5.
  EXPECT_EQ(square_class(from_integer(q5, 50)).representative(), from_integer(q5, 2));
  EXPECT_EQ(square_class(from_integer(q5, 10)).representative(), from_integer(q5, 10));
  EXPECT_EQ(square_class(from_integer(q5, 4)).representative(), from_integer(q5, 1));
  EXPECT_EQ(square_class(from_rational(Q(), Rational(3, 8))).representative(), q(6));
  EXPECT_THROW(square_class(q(0)), MathError);
}

TEST(SquareClass, FiniteFieldsUseOneOrFixedNonresidue) {
  const FieldPtr f7 = finite_field(7);
  std::set<std::string> reps;
  for (int t = 1; t < 7; ++t) reps.insert(to_string(square_class(from_integer(f7, t))));
  EXPECT_EQ(reps.size(), 2u);
  EXPECT_TRUE(reps.count("1"));
  EXPECT_TRUE(reps.count("3"));  // least nonresidue mod 7
}

TEST(IsSquare, Examples) {
  EXPECT_TRUE(is_square(from_integer(finite_field(7), 2)));
  EXPECT_TRUE(is_square(parse_element(complexes(), "2+i")));
  EXPECT_FALSE(is_square(q(-4)));
  EXPECT_TRUE(is_square(q(49)));
  const FieldPtr k = parse_field("Q[x]/(x^2-2)[y]/(y^2-3)");
  EXPECT_TRUE(is_square(from_integer(k, 6)));
  EXPECT_FALSE(is_square(from_integer(k, 5)));
  const auto r = sqrt(parse_element(k, "5+2*x*y"));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r * *r, parse_element(k, "5+2*x*y"));
  EXPECT_THROW(is_square(q(0)), MathError);
}

TEST(SquareClass, QuadraticNumberFieldClassesAreDecidable) {
  const FieldPtr k = parse_field("Q[x]/(x^2-5)");
  const Element a = parse_element(k, "1+x");
  const Element c = parse_element(k, "3-2x");
  EXPECT_TRUE(square_class(a) == square_class(a * c * c));
  EXPECT_FALSE(square_class(a) == square_class(from_integer(k, 1)));
  EXPECT_TRUE(square_class(from_integer(k, 5)) == square_class(one(k)));
}

// ---------------------------------------------------------------------------
// Properties.

namespace {

std::vector<std::pair<FieldPtr, FieldPtr>> extension_pairs() {
  return {
      {parse_field("Q[x]/(x^2-5)"), rationals()},
      {parse_field("Q[x]/(x^3-2)"), rationals()},
      {parse_field("F(3)[a]/(a^2+1)"), finite_field(3)},
      {parse_field("F(5^3)"), finite_field(5)},
      {complexes(), reals()},
      {parse_field("Q[x]/(x^2-2)[y]/(y^2-3)"), rationals()},
      {parse_field("F(3)[x]/(x^2+1)[y]/(y^2-x-1)"), finite_field(3)},
  };
}

}  // namespace

TEST(FieldProperties, NormMultiplicativeTraceAdditive) {
  Rng rng(11);
  for (const auto& [e, k] : extension_pairs()) {
    for (int i = 0; i < 200; ++i) {
      const Element x = gwtest::random_element(rng, e);
      const Element y = gwtest::random_element(rng, e);
      EXPECT_EQ(norm(x * y, k), norm(x, k) * norm(y, k)) << describe(*e);
      EXPECT_EQ(trace(x + y, k), trace(x, k) + trace(y, k)) << describe(*e);
    }
  }
}

TEST(FieldProperties, NormRespectsSquareClasses) {
  Rng rng(12);
  for (const auto& [e, k] : extension_pairs()) {
    if (k->kind() == FieldKind::RealClosed) continue;
    for (int i = 0; i < 100; ++i) {
      const Element x = gwtest::random_nonzero(rng, e);
      const Element c = gwtest::random_nonzero(rng, e);
      EXPECT_TRUE(square_class(norm(x * c * c, k)) == square_class(norm(x, k)));
    }
  }
}

TEST(FieldProperties, TowerTransitivity) {
  Rng rng(13);
  const FieldPtr m = parse_field("Q[x]/(x^2-2)[y]/(y^2-3)");
  const FieldPtr l = m->base();
  const FieldPtr mf = parse_field("F(3)[x]/(x^2+1)[y]/(y^2-x-1)");
  for (const auto& top : {m, mf}) {
    const FieldPtr mid = top->base();
    const FieldPtr bottom = top->root();
    for (int i = 0; i < 100; ++i) {
      const Element x = gwtest::random_element(rng, top);
      EXPECT_EQ(trace(x, bottom), trace(trace(x, mid), bottom));
      EXPECT_EQ(norm(x, bottom), norm(norm(x, mid), bottom));
    }
  }
  EXPECT_EQ(degree_over(m, l), 2u);
}

TEST(FieldProperties, SquareClassIdempotentAndSquareInvariant) {
  Rng rng(14);
  const std::vector<FieldPtr> fields = {rationals(), reals(), padics(3), padics(7),
                                        finite_field(5), parse_field("F(3^2)"),
                                        parse_field("Q[x]/(x^2+3)"), complexes()};
  for (const auto& f : fields) {
    for (int i = 0; i < 100; ++i) {
      const Element a = gwtest::random_nonzero(rng, f);
      const Element b = gwtest::random_nonzero(rng, f);
      const SquareClass c = square_class(a);
      EXPECT_TRUE(square_class(c.representative()) == c) << describe(*f);
      EXPECT_TRUE(square_class(a * b * b) == c) << describe(*f);
    }
  }
}

TEST(FieldProperties, TonelliShanksRoots) {
  Rng rng(15);
  for (const auto& f : {finite_field(13), finite_field(17), parse_field("F(3^4)"),
                        parse_field("F(7^2)")}) {
    for (int i = 0; i < 100; ++i) {
      const Element a = gwtest::random_nonzero(rng, f);
      const auto r = sqrt(a * a);
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(*r * *r, a * a);
    }
  }
}
