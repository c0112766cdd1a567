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

// Enriched counts of rational curves: sigma lists of point fields, curve
// records with node data, the weighted sum of node masses, the closed forms for
// the standard del Pezzo examples, and classical specializations.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwcount/a1degree.hpp"
#include "gwcount/gw.hpp"
#include "gwcount/picard.hpp"
#include "gwcount/transfer.hpp"

namespace gwcount {

/// Fields of definition L_1, ..., L_r of the point conditions.
class SigmaList {
 public:
  SigmaList() = default;
  SigmaList(FieldPtr base, std::vector<FieldPtr> extensions);

  const FieldPtr& base() const { return base_; }
  const std::vector<FieldPtr>& extensions() const { return extensions_; }
  /// Sum of [L_i : k].
  long long total_degree() const { return total_; }

 private:
  FieldPtr base_;
  std::vector<FieldPtr> extensions_;
  long long total_ = 0;
};

struct CurveRecord {
  FieldPtr field;  // k(u)
  std::vector<NodeRecord> nodes;
};

struct CurveConfiguration {
  FieldPtr base;
  SigmaList sigma;
  std::optional<DelPezzoModel> surface;
  std::optional<PicardClass> divisor;
  std::vector<CurveRecord> curves;
};

/// Tr_{k(sigma)/k}<1> = sum_i Tr_{L_i/k}<1>.
GWElement sigma_trace(const SigmaList& sigma);
/// Tr_{k(u)/k} prod_p mass(p).
GWElement curve_contribution(const CurveRecord& c, const FieldPtr& base);
GWElement enriched_count(const CurveConfiguration& config);
/// Tr_{k(u)/k} <disc of the product of the node algebras over k(u)>.
GWElement local_ev_degree_via_disc(const CurveRecord& c, const FieldPtr& base);

DelPezzoModel fermat_cubic(const FieldPtr& base);
DelPezzoModel cubic_s0(const FieldPtr& base);

/// <-1> chi(S) + <1> + Tr_{k(sigma)/k}<1>, for sigma of total degree d_S - 1.
GWElement closed_form_anticanonical(const DelPezzoModel& s, const SigmaList& sigma);

enum class Table1Row {
  P2Line = 1,       // P^2, O(1)
  P2Conic = 2,      // P^2, O(2)
  P2Cubic = 3,      // P^2, O(3)
  P1xP1Ruling = 4,  // P^1 x P^1, O(1) x O(d)
  P1xP1Bidegree22 = 5,
  FermatCubic = 6,  // O(1) on the Fermat cubic surface
  CubicS0 = 7,      // O(1) on the cubic surface S0
  Anticanonical = 8 // any del Pezzo S with D = -K_S
};

/// Number of marked points for a row; `d` is the second bidegree of row 4,
/// `s` the surface of the anticanonical row.
long long table1_points(Table1Row row, long long d = 1, const DelPezzoModel* s = nullptr);
GWElement table1_value(Table1Row row, const SigmaList& sigma, long long d = 1,
                       const DelPezzoModel* s = nullptr);

/// Classical count of rational plane curves of degree d through 3d - 1 points.
Integer kontsevich_Nd(int d);

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
ValidationReport validate_config(const CurveConfiguration& config);

struct Specialization {
  long long rank = 0;
  std::optional<long long> signature;
};
enum class SpecializeTarget { Complex, Real };
/// rank (complex points) or (rank, signature) (real points).
Specialization specialize(const GWElement& q, SpecializeTarget target);

// ===========================================================================

inline SigmaList::SigmaList(FieldPtr base, std::vector<FieldPtr> extensions)
    : base_(std::move(base)), extensions_(std::move(extensions)) {
  for (const auto& l : extensions_) total_ += static_cast<long long>(degree_over(l, base_));
}

inline GWElement sigma_trace(const SigmaList& sigma) {
  GWElement q(sigma.base());
  for (const auto& l : sigma.extensions()) q += trace_form(l, sigma.base());
  return q;
}

inline GWElement curve_contribution(const CurveRecord& c, const FieldPtr& base) {
  degree_over(c.field, base);
  GWElement product = GWElement::rank_one(one(c.field));
  for (const auto& node : c.nodes) {
    require_same_field(node.curve_field, c.field, "curve node");
    product = product * mass(node);
  }
  return transfer(product, base);
}

inline GWElement enriched_count(const CurveConfiguration& config) {
  GWElement q(config.base);
  for (const auto& c : config.curves) q += curve_contribution(c, config.base);
  return q;
}

inline GWElement local_ev_degree_via_disc(const CurveRecord& c, const FieldPtr& base) {
  degree_over(c.field, base);
  Element disc = one(c.field);
  for (const auto& node : c.nodes) {
    require_same_field(node.curve_field, c.field, "curve node");
    disc = disc * disc_algebra(node_algebra(node)).representative();
  }
  return transfer(GWElement::rank_one(disc), base);
}

inline DelPezzoModel fermat_cubic(const FieldPtr& base) {
  if (base->characteristic() == 3) {
    throw MathError("singular-surface", "the Fermat cubic is singular in characteristic 3");
  }
  DelPezzoModel s = DelPezzoModel::blowup_p2(base, 6);
  s.with_euler(parse_form(base, "<3> + 4h")).with_name("fermat-cubic");
  return s;
}

inline DelPezzoModel cubic_s0(const FieldPtr& base) {
  if (base->characteristic() == 5) {
    throw MathError("singular-surface", "the cubic surface S0 is singular in characteristic 5");
  }
  DelPezzoModel s = DelPezzoModel::blowup_p2(base, 6);
  s.with_euler(parse_form(base, "<-5> + 4h")).with_name("cubic-S0");
  return s;
}

namespace detail {

inline void require_sigma_degree(const SigmaList& sigma, long long n) {
  if (sigma.total_degree() != n) {
    throw MathError("sigma-degree", "sigma has total degree " +
                                        std::to_string(sigma.total_degree()) + ", expected n = " +
                                        std::to_string(n));
  }
}

}  // namespace detail

inline GWElement closed_form_anticanonical(const DelPezzoModel& s, const SigmaList& sigma) {
  require_same_field(s.base(), sigma.base(), "closed_form_anticanonical");
  detail::require_sigma_degree(sigma, surface_degree(s) - 1);
  const FieldPtr& k = s.base();
  return GWElement::rank_one(from_integer(k, -1)) * euler_char(s) +
         GWElement::rank_one(one(k)) + sigma_trace(sigma);
}

inline long long table1_points(Table1Row row, long long d, const DelPezzoModel* s) {
  switch (row) {
    case Table1Row::P2Line: return 2;
    case Table1Row::P2Conic: return 5;
    case Table1Row::P2Cubic: return 8;
    case Table1Row::P1xP1Ruling: return 2 * d + 1;
    case Table1Row::P1xP1Bidegree22: return 7;
    case Table1Row::FermatCubic: return 2;
    case Table1Row::CubicS0: return 2;
    case Table1Row::Anticanonical:
      if (!s) throw MathError("missing-surface", "the anticanonical row needs a surface");
      return surface_degree(*s) - 1;
  }
  throw MathError("bad-row", "unknown closed-form row");
}

inline GWElement table1_value(Table1Row row, const SigmaList& sigma, long long d,
                              const DelPezzoModel* s) {
  const FieldPtr& k = sigma.base();
  if (row == Table1Row::P1xP1Ruling && d < 0) {
    throw MathError("bad-class", "O(1) x O(d) needs d >= 0");
  }
  detail::require_sigma_degree(sigma, table1_points(row, d, s));
  auto form = [&](const char* text) { return parse_form(k, text); };
  switch (row) {
    case Table1Row::P2Line:
    case Table1Row::P2Conic:
    case Table1Row::P1xP1Ruling:
      return form("<1>");
    case Table1Row::P2Cubic:
      return form("2h") + sigma_trace(sigma);
    case Table1Row::P1xP1Bidegree22:
      return form("2h + <1>") + sigma_trace(sigma);
    case Table1Row::FermatCubic:
      fermat_cubic(k);
      return form("<-3> + 4h + <1>") + sigma_trace(sigma);
    case Table1Row::CubicS0:
      cubic_s0(k);
      return form("<5> + 4h + <1>") + sigma_trace(sigma);
    case Table1Row::Anticanonical:
      return closed_form_anticanonical(*s, sigma);
  }
  throw MathError("bad-row", "unknown closed-form row");
}

inline Integer kontsevich_Nd(int d) {
  if (d < 1) throw MathError("bad-degree", "kontsevich_Nd needs d >= 1");
  std::vector<Integer> n(static_cast<std::size_t>(d) + 1, 0);
  n[1] = 1;
  for (long e = 2; e <= d; ++e) {
    Integer sum = 0;
    for (long d1 = 1; d1 < e; ++d1) {
      const long d2 = e - d1;
      const Integer term = d2 * binomial(3 * e - 4, 3 * d1 - 2) - d1 * binomial(3 * e - 4, 3 * d1 - 1);
      sum += n[static_cast<std::size_t>(d1)] * n[static_cast<std::size_t>(d2)] * d1 * d1 * d2 * term;
    }
    n[static_cast<std::size_t>(e)] = sum;
  }
  return n[static_cast<std::size_t>(d)];
}

inline ValidationReport validate_config(const CurveConfiguration& config) {
  ValidationReport report;
  auto fail = [&](std::string why) { report.failures.push_back(std::move(why)); };
  if (!config.base) {
    fail("missing base field");
    return report;
  }
  if (config.sigma.base() && !same_field(config.sigma.base(), config.base)) {
    fail("sigma is not over the base field");
  }
  for (std::size_t i = 0; i < config.curves.size(); ++i) {
    const CurveRecord& c = config.curves[i];
    const std::string tag = "curve " + std::to_string(i);
    if (!c.field || !is_ancestor(config.base, c.field)) {
      fail(tag + ": field is not an extension of the base");
      continue;
    }
    for (std::size_t j = 0; j < c.nodes.size(); ++j) {
      try {
        validate(c.nodes[j]);
        if (!same_field(c.nodes[j].curve_field, c.field)) {
          fail(tag + " node " + std::to_string(j) + ": curve field mismatch");
        }
      } catch (const MathError& e) {
        fail(tag + " node " + std::to_string(j) + ": " + e.what());
      }
    }
  }
  if (config.surface && config.divisor) {
    const DelPezzoModel& s = *config.surface;
    const PicardClass& d = *config.divisor;
    try {
      const long long n = marked_points(s, d);
      if (config.sigma.total_degree() != n) {
        fail("n mismatch: sigma has total degree " + std::to_string(config.sigma.total_degree()) +
             ", n = " + std::to_string(n));
      }
      const long long delta = node_count(s, d);
      for (std::size_t i = 0; i < config.curves.size(); ++i) {
        const CurveRecord& c = config.curves[i];
        long long nodes = 0;
        for (const auto& node : c.nodes) {
          if (node.node_field && c.field && is_ancestor(c.field, node.node_field)) {
            nodes += static_cast<long long>(degree_over(node.node_field, c.field));
          }
        }
        if (nodes != delta) {
          fail("delta mismatch: curve " + std::to_string(i) + " has " + std::to_string(nodes) +
               " nodes, delta = " + std::to_string(delta));
        }
      }
      const HypothesisResult h = hypothesis_check(s, d);
      if (!h.pass) fail("hypothesis: " + h.reason);
    } catch (const MathError& e) {
      fail(e.what());
    }
  } else if (config.surface || config.divisor) {
    fail("surface and divisor must be given together");
  }
  return report;
}

inline Specialization specialize(const GWElement& q, SpecializeTarget target) {
  Specialization out;
  out.rank = rank(q);
  if (target == SpecializeTarget::Real) out.signature = signature(q, RealPlace{});
  return out;
}

}  // namespace gwcount
