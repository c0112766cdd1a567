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

// A1-degrees from fiber data. At a point x where f is etale the local degree
// is Tr_{k(x)/k(y)}<Jf(x)>; the degree at y sums the local degrees over the
// fiber.

#include <utility>
#include <vector>

#include "gwcount/gw.hpp"
#include "gwcount/transfer.hpp"

namespace gwcount {

struct EtalePointRecord {
  FieldPtr source;   // k(x)
  FieldPtr target;   // k(y)
  Element jacobian;  // Jf(x), in k(x)
};

struct FiberRecord {
  FieldPtr target;
  std::vector<EtalePointRecord> points;
};

GWElement local_degree(const EtalePointRecord& point);
GWElement global_degree_at(const FiberRecord& fiber);
/// Degree of a finite etale map Spec E -> Spec k: the trace form of E.
GWElement etale_map_degree(const EtaleAlgebra& e);
/// Tr_{k(p)/k}<hess>: the index of a nondegenerate critical point p with
/// Hessian determinant `hess` in k(p). No sign twist is applied.
GWElement hessian_index(const Element& hess, const FieldPtr& base);

// ===========================================================================

inline GWElement local_degree(const EtalePointRecord& point) {
  require_same_field(point.jacobian.field(), point.source, "local_degree");
  degree_over(point.source, point.target);
  if (point.jacobian.is_zero()) {
    throw Unsupported("Jacobian vanishes: requires local-algebra degree, unsupported");
  }
  return transfer(GWElement::rank_one(point.jacobian), point.target);
}

inline GWElement global_degree_at(const FiberRecord& fiber) {
  GWElement q(fiber.target);
  for (const auto& pt : fiber.points) {
    require_same_field(pt.target, fiber.target, "global_degree_at");
    q += local_degree(pt);
  }
  return q;
}

inline GWElement etale_map_degree(const EtaleAlgebra& e) { return trace_form(e); }

inline GWElement hessian_index(const Element& hess, const FieldPtr& base) {
  return local_degree({hess.field(), base, hess});
}

}  // namespace gwcount
