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

// Etale algebras over a base field, their trace forms and discriminants,
// Scharlau transfers GW(E) -> GW(L), and the mass of a node.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwcount/extension.hpp"
#include "gwcount/field.hpp"
#include "gwcount/gw.hpp"
#include "gwcount/squares.hpp"

namespace gwcount {

using Matrix = std::vector<std::vector<Element>>;

/// A finite product of fields, each a (tower) extension of `base`.
class EtaleAlgebra {
 public:
  EtaleAlgebra(FieldPtr base, std::vector<FieldPtr> factors);

  const FieldPtr& base() const { return base_; }
  const std::vector<FieldPtr>& factors() const { return factors_; }
  std::size_t degree() const;

 private:
  FieldPtr base_;
  std::vector<FieldPtr> factors_;
};

/// A node p on a curve u: k(u) = curve_field, k(p) = node_field and the
/// tangent class D(p) in k(p). An empty tangent marks a split node (D = 1).
struct NodeRecord {
  FieldPtr curve_field;
  FieldPtr node_field;
  std::optional<Element> tangent;

  bool split() const { return !tangent.has_value(); }
};

/// Gram matrix Tr_{F/K}(a * b_i * b_j) on basis_over(F, K), F = a.field().
Matrix gram_matrix(const Element& a, const FieldPtr& base);
/// Diagonalizes a symmetric nondegenerate matrix by congruence.
GWElement gram_diagonalize(Matrix g, const FieldPtr& field);

/// Tr_{F/K} of an honest form over F.
GWElement transfer(const GWElement& beta, const FieldPtr& base);
GWElement transfer(const EtaleAlgebra& e, const GWElement& beta);
GWElement trace_form(const FieldPtr& field, const FieldPtr& base);
GWElement trace_form(const EtaleAlgebra& e);

/// Square class of det Tr(b_i b_j).
SquareClass field_disc(const FieldPtr& field, const FieldPtr& base);
SquareClass disc_algebra(const EtaleAlgebra& e);
/// disc(L/K)^[M:L] * N_{L/K}(disc(M/L)) for K <= L <= M.
SquareClass tower_disc(const FieldPtr& k, const FieldPtr& l, const FieldPtr& m);

void validate(const NodeRecord& node);
/// <N_{k(p)/k(u)} D(p)> over k(u); <1> for a split node.
GWElement mass(const NodeRecord& node);
/// k(p)[y]/(y^2 - D(p)) over k(u); k(p) x k(p) when split or D is a square.
EtaleAlgebra node_algebra(const NodeRecord& node);

// ===========================================================================

inline EtaleAlgebra::EtaleAlgebra(FieldPtr base, std::vector<FieldPtr> factors)
    : base_(std::move(base)), factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (!is_ancestor(base_, f)) {
      throw MathError("not-a-tower", describe(*f) + " is not an extension of " + describe(*base_));
    }
  }
}

inline std::size_t EtaleAlgebra::degree() const {
  std::size_t d = 0;
  for (const auto& f : factors_) d += degree_over(f, base_);
  return d;
}

inline Matrix gram_matrix(const Element& a, const FieldPtr& base) {
  const auto basis = basis_over(a.field(), base);
  const std::size_t n = basis.size();
  Matrix g(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Element ai = a * basis[i];
    for (std::size_t j = i; j < n; ++j) {
      g[i][j] = trace(ai * basis[j], base);
      g[j][i] = g[i][j];
    }
  }
  return g;
}

inline GWElement gram_diagonalize(Matrix g, const FieldPtr& field) {
  GWElement result(field);
  std::vector<std::size_t> live(g.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;
  while (!live.empty()) {
    std::size_t pivot = live.size();
    for (std::size_t k = 0; k < live.size(); ++k) {
      if (!g[live[k]][live[k]].is_zero()) {
        pivot = k;
        break;
      }
    }
    if (pivot == live.size()) {
      // No anisotropic basis vector: replace e_i by e_i + e_j.
      const std::size_t i = live[0];
      std::size_t j = g.size();
      for (std::size_t k = 1; k < live.size(); ++k) {
        if (!g[i][live[k]].is_zero()) {
          j = live[k];
          break;
        }
      }
      if (j == g.size()) throw MathError("degenerate", "Gram matrix is degenerate");
      for (std::size_t k = 0; k < g.size(); ++k) g[i][k] = g[i][k] + g[j][k];
      for (std::size_t k = 0; k < g.size(); ++k) g[k][i] = g[k][i] + g[k][j];
      pivot = 0;
    }
    const std::size_t p = live[pivot];
    const Element d = g[p][p];
    const Element dinv = inverse(d);
    live.erase(live.begin() + static_cast<long>(pivot));
    for (std::size_t r : live) {
      const Element f = g[r][p] * dinv;
      if (f.is_zero()) continue;
      for (std::size_t c : live) g[r][c] = g[r][c] - f * g[p][c];
    }
    for (std::size_t r : live) {
      g[r][p] = zero(field);
      g[p][r] = zero(field);
    }
    result.add_term(square_class(d), 1);
  }
  return result;
}

inline GWElement transfer(const GWElement& beta, const FieldPtr& base) {
  if (!beta.is_honest()) {
    throw MathError("virtual-form", "transfer of a virtual form; decompose it first");
  }
  GWElement result(base);
  if (beta.is_zero()) return result;
  degree_over(beta.field(), base);
  for (const auto& t : beta.terms()) {
    const GWElement piece =
        gram_diagonalize(gram_matrix(t.cls.representative(), base), base);
    result += t.multiplicity * piece;
  }
  return result;
}

inline GWElement transfer(const EtaleAlgebra& e, const GWElement& beta) {
  if (beta.field()) {
    bool owned = false;
    for (const auto& f : e.factors()) owned = owned || same_field(f, beta.field());
    if (!owned) throw MathError("owner-mismatch", "form is not over a factor of the algebra");
  }
  return transfer(beta, e.base());
}

inline GWElement trace_form(const FieldPtr& field, const FieldPtr& base) {
  return gram_diagonalize(gram_matrix(one(field), base), base);
}

inline GWElement trace_form(const EtaleAlgebra& e) {
  GWElement q(e.base());
  for (const auto& f : e.factors()) q += trace_form(f, e.base());
  return q;
}

namespace detail {

inline Element disc_element(const FieldPtr& field, const FieldPtr& base) {
  Element d = determinant(gram_matrix(one(field), base), base);
  if (d.is_zero()) throw MathError("degenerate", "trace form is degenerate");
  return d;
}

}  // namespace detail

inline SquareClass field_disc(const FieldPtr& field, const FieldPtr& base) {
  return square_class(detail::disc_element(field, base));
}

inline SquareClass disc_algebra(const EtaleAlgebra& e) {
  Element d = one(e.base());
  for (const auto& f : e.factors()) d = d * detail::disc_element(f, e.base());
  return square_class(d);
}

inline SquareClass tower_disc(const FieldPtr& k, const FieldPtr& l, const FieldPtr& m) {
  const std::size_t top = degree_over(m, l);
  degree_over(l, k);
  const Element lower = pow(detail::disc_element(l, k), Integer(top));
  const Element upper = norm(detail::disc_element(m, l), k);
  return square_class(lower * upper);
}

inline void validate(const NodeRecord& node) {
  if (!node.curve_field || !node.node_field) {
    throw MathError("invalid-node", "node record is missing a field");
  }
  degree_over(node.node_field, node.curve_field);
  if (node.tangent) {
    require_same_field(node.tangent->field(), node.node_field, "node tangent class");
    if (node.tangent->is_zero()) throw MathError("zero", "tangent class D(p) is zero");
  }
}

inline GWElement mass(const NodeRecord& node) {
  validate(node);
  if (node.split()) return GWElement::rank_one(one(node.curve_field));
  return GWElement::rank_one(norm(*node.tangent, node.curve_field));
}

inline EtaleAlgebra node_algebra(const NodeRecord& node) {
  validate(node);
  if (node.split() || is_square(*node.tangent)) {
    return EtaleAlgebra(node.curve_field, {node.node_field, node.node_field});
  }
  const FieldPtr& kp = node.node_field;
  const Polynomial m = make_polynomial(kp, {-*node.tangent, zero(kp), one(kp)});
  return EtaleAlgebra(node.curve_field, {make_extension(kp, m, "y")});
}

}  // namespace gwcount
