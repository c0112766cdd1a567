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

// Enriched counts of rational plane cubics through 8 points, for several
// choices of the fields of definition of the points, and their real and
// complex specializations.

#include <iostream>
#include <string>
#include <vector>

#include "gwcount/gwcount.hpp"

using namespace gwcount;

namespace {

void show(const std::string& label, const GWElement& n) {
  const Specialization c = specialize(n, SpecializeTarget::Complex);
  std::cout << label << "\n  N = " << format_form(n) << "\n  rank " << c.rank;
  if (!n.field()->is_finite() && n.field()->is_prime_layer() &&
      n.field()->kind() != FieldKind::PAdic) {
    std::cout << ", signature " << signature(n);
  }
  std::cout << "\n";
}

}  // namespace

int main() {
  const FieldPtr r = reals();
  const FieldPtr c = complexes();
  for (int m = 0; m <= 4; ++m) {
    std::vector<FieldPtr> points(static_cast<std::size_t>(8 - 2 * m), r);
    points.insert(points.end(), static_cast<std::size_t>(m), c);
    show("R, " + std::to_string(m) + " conjugate pair(s)",
         table1_value(Table1Row::P2Cubic, SigmaList(r, points)));
  }

  const FieldPtr q = rationals();
  const FieldPtr q2 = parse_field("Q[x]/(x^2-2)");
  const FieldPtr q3 = parse_field("Q[y]/(y^3-2)");
  show("Q, six rational points and one point over Q(sqrt 2)",
       table1_value(Table1Row::P2Cubic, SigmaList(q, {q, q, q, q, q, q, q2})));
  show("Q, five rational points and one point over Q(cbrt 2)",
       table1_value(Table1Row::P2Cubic, SigmaList(q, {q, q, q, q, q, q3})));

  const FieldPtr f5 = finite_field(5);
  const FieldPtr f25 = parse_field("F(5^2)");
  show("F_5, four points over F_25",
       table1_value(Table1Row::P2Cubic, SigmaList(f5, {f25, f25, f25, f25})));

  // The same count for S = P^2 through the anticanonical formula.
  const DelPezzoModel p2 = DelPezzoModel::blowup_p2(q, 0);
  const SigmaList eight(q, std::vector<FieldPtr>(8, q));
  std::cout << "anticanonical formula agrees: "
            << (is_equal(closed_form_anticanonical(p2, eight),
                         table1_value(Table1Row::P2Cubic, eight))
                    ? "yes"
                    : "no")
            << "\nclassical N_3 = " << kontsevich_Nd(3) << "\n";
}
