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

// Trace forms, discriminants and node masses for a few small fields.

#include <iostream>

#include "gwcount/gwcount.hpp"

using namespace gwcount;

int main() {
  const FieldPtr q = rationals();
  for (const char* literal : {"Q[x]/(x^2-5)", "Q[x]/(x^2+1)", "Q[x]/(x^3-2)",
                              "Q[x]/(x^2-2)[y]/(y^2-3)"}) {
    const FieldPtr e = parse_field(literal);
    const GWElement t = trace_form(e, q);
    std::cout << literal << "\n  trace form " << format_form(t) << "\n  disc "
              << to_string(field_disc(e, q)) << ", signature " << signature(t) << "\n";
  }

  const FieldPtr f3 = finite_field(3);
  const FieldPtr f9 = parse_field("F(3^2)");
  std::cout << "F_9 over F_3: trace form " << format_form(trace_form(f9, f3)) << ", disc "
            << to_string(field_disc(f9, f3)) << "\n";

  // A node over Q(sqrt 2) with tangent class sqrt 2: its two branches are
  // defined over Q(2^(1/4)).
  const FieldPtr k2 = parse_field("Q[x]/(x^2-2)");
  const NodeRecord node{q, k2, generator(k2)};
  std::cout << "node mass " << format_form(mass(node)) << ", node algebra disc "
            << to_string(disc_algebra(node_algebra(node))) << "\n";

  // Local A1-degree of an etale point with residue field Q(sqrt 3).
  const FieldPtr k3 = parse_field("Q[t]/(t^2-3)");
  std::cout << "deg at t with J = 1 + t: "
            << format_form(local_degree({k3, q, parse_element(k3, "1+t")})) << "\n";
}
