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

GWElement FQ(const char* text) { return parse_form(rationals(), text); }
Element q(long long v) { return from_integer(rationals(), v); }

}  // namespace

TEST(LocalDegree, Examples) {
  const FieldPtr k = rationals();
  EXPECT_TRUE(identical(local_degree({k, k, q(3)}), FQ("<3>")));
  for (long long d : {5, -1, 7}) {
    const FieldPtr kd = parse_field("Q[x]/(x^2-(" + std::to_string(d) + "))");
    EXPECT_TRUE(is_equal(local_degree({kd, k, one(kd)}),
                         GWElement::rank_one(q(2)) + GWElement::rank_one(q(2 * d))));
  }
  EXPECT_TRUE(identical(local_degree({complexes(), reals(), one(complexes())}),
                        parse_form(reals(), "h")));
}

TEST(LocalDegree, NonEtaleRejected) {
  const FieldPtr k = rationals();
  try {
    local_degree({k, k, q(0)});
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), "unsupported");
    EXPECT_NE(std::string(e.what()).find("local-algebra degree"), std::string::npos);
  }
}

TEST(GlobalDegree, Examples) {
  const FieldPtr k = rationals();
  const FieldPtr r = reals();
  EXPECT_TRUE(identical(global_degree_at({k, {{k, k, q(3)}, {k, k, q(5)}}}), FQ("<3>+<5>")));
  EXPECT_TRUE(global_degree_at({k, {}}).is_zero());
  const GWElement mixed = global_degree_at(
      {r, {{complexes(), r, one(complexes())}, {r, r, from_integer(r, -1)}}});
  EXPECT_TRUE(identical(mixed, parse_form(r, "<1> + 2<-1>")));
}

TEST(EtaleMapDegree, Examples) {
  EXPECT_TRUE(identical(etale_map_degree(EtaleAlgebra(rationals(), {rationals(), rationals()})),
                        FQ("2<1>")));
  EXPECT_TRUE(identical(etale_map_degree(EtaleAlgebra(rationals(), {parse_field("Q[x]/(x^2-5)")})),
                        FQ("<2>+<10>")));
  const GWElement f9 = etale_map_degree(EtaleAlgebra(finite_field(3), {parse_field("F(3^2)")}));
  EXPECT_EQ(rank(f9), 2);
  EXPECT_FALSE(discriminant(f9).is_trivial());
}

TEST(HessianIndex, NoSignTwist) {
  const FieldPtr k = rationals();
  EXPECT_TRUE(identical(hessian_index(q(-2), k), FQ("<-2>")));
}

// ---------------------------------------------------------------------------
// Properties.

namespace {

EtalePointRecord random_point(Rng& rng, const FieldPtr& target) {
  const FieldPtr source =
      gwtest::uniform(rng, 0, 1) ? gwtest::random_quadratic(rng, target, "t") : target;
  return {source, target, gwtest::random_nonzero(rng, source)};
}

}  // namespace

TEST(DegreeProperties, RankIsFiberDegree) {
  Rng rng(51);
  for (const auto& k : {rationals(), finite_field(7), reals()}) {
    for (int i = 0; i < 100; ++i) {
      FiberRecord fiber{k, {}};
      long long expected = 0;
      for (long long j = gwtest::uniform(rng, 0, 4); j > 0; --j) {
        fiber.points.push_back(random_point(rng, k));
        expected += static_cast<long long>(degree_over(fiber.points.back().source, k));
      }
      EXPECT_EQ(rank(global_degree_at(fiber)), expected);
    }
  }
}

TEST(DegreeProperties, JacobianSquareInvariance) {
  Rng rng(52);
  for (const auto& k : {rationals(), finite_field(11), reals()}) {
    for (int i = 0; i < 100; ++i) {
      EtalePointRecord pt = random_point(rng, k);
      const GWElement before = local_degree(pt);
      const Element c = gwtest::random_nonzero(rng, pt.source);
      pt.jacobian = pt.jacobian * c * c;
      EXPECT_TRUE(is_equal(local_degree(pt), before));
    }
  }
}

TEST(DegreeProperties, UnitJacobiansGiveTraceForm) {
  Rng rng(53);
  for (const auto& k : {rationals(), finite_field(5), reals()}) {
    for (int i = 0; i < 100; ++i) {
      FiberRecord fiber{k, {}};
      std::vector<FieldPtr> factors;
      for (long long j = gwtest::uniform(rng, 1, 3); j > 0; --j) {
        EtalePointRecord pt = random_point(rng, k);
        pt.jacobian = one(pt.source);
        factors.push_back(pt.source);
        fiber.points.push_back(pt);
      }
      EXPECT_TRUE(is_equal(global_degree_at(fiber), etale_map_degree(EtaleAlgebra(k, factors))));
    }
  }
}

// Base change along Q in K = Q(sqrt d). A point with residue field Q(sqrt e)
// splits into two K-points (J and its conjugate) when e/d is a square, and
// otherwise becomes one point with residue field K(sqrt e).
TEST(DegreeProperties, BaseChangeCompatibility) {
  Rng rng(54);
  const FieldPtr k = rationals();
  const std::vector<long long> ds = {2, 3, 5, 6, 7, -1, -2, -3};
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    const long long d = ds[static_cast<std::size_t>(gwtest::uniform(rng, 0, 7))];
    const FieldPtr big = parse_field("Q[w]/(w^2-(" + std::to_string(d) + "))");
    const bool split = gwtest::uniform(rng, 0, 1);
    const long long s = gwtest::uniform(rng, 1, 3);
    long long e = d * s * s;
    if (!split) {
      do {
        e = ds[static_cast<std::size_t>(gwtest::uniform(rng, 0, 7))];
      } while (e == d);
    }
    const FieldPtr small = parse_field("Q[t]/(t^2-(" + std::to_string(e) + "))");
    const Element j = gwtest::random_nonzero(rng, small);
    const GWElement original = local_degree({small, k, j});
    const GWElement restricted = restrict_to(original, big);

    const Element a = embed(j.coeffs()[0], big);
    const Element b = embed(j.coeffs()[1], big);
    GWElement extended(big);
    if (split) {
      // t = s * w in K.
      const Element t = from_integer(big, s) * generator(big);
      for (const Element& root : {t, -t}) {
        extended += local_degree({big, big, a + b * root});
      }
    } else {
      const FieldPtr top = make_extension(
          big, make_polynomial(big, {from_integer(big, -e), zero(big), one(big)}), "t");
      const Element jt = Element::make_coeffs(top, {a, b});
      extended += local_degree({top, big, jt});
    }
    EXPECT_EQ(rank(extended), rank(restricted));
    EXPECT_TRUE(discriminant(extended) == discriminant(restricted));
    if (d > 0) {
      for (int sign : {1, -1}) {
        EXPECT_EQ(signature(extended, RealPlace{sign}), signature(restricted, RealPlace{sign}))
            << "d=" << d << " e=" << e << " J=" << to_string(j);
      }
    }
    ++checked;
  }
  EXPECT_GE(checked, 100);
}
