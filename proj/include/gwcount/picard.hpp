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

// Picard lattices of del Pezzo surfaces: blow-ups of P^2 in r <= 7 points
// (basis e0 = line, e1..er exceptional, pairing diag(1, -1, ..., -1)) and
// P^1 x P^1 (basis of the two rulings, pairing (a,b).(a',b') = ab' + a'b).

#include <cctype>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwcount/errors.hpp"
#include "gwcount/gw.hpp"
#include "gwcount/transfer.hpp"

namespace gwcount {

enum class SurfaceKind { BlowupP2, P1xP1 };

struct PicardClass {
  std::vector<long long> c;

  friend bool operator==(const PicardClass&, const PicardClass&) = default;
};

class DelPezzoModel {
 public:
  /// P^2 blown up at closed points with the given residue fields over `base`.
  static DelPezzoModel blowup_p2(FieldPtr base, std::vector<FieldPtr> point_fields = {});
  /// P^2 blown up at r rational points.
  static DelPezzoModel blowup_p2(FieldPtr base, int r);
  static DelPezzoModel p1xp1(FieldPtr base);

  SurfaceKind kind() const { return kind_; }
  const FieldPtr& base() const { return base_; }
  const std::vector<FieldPtr>& point_fields() const { return point_fields_; }
  /// Lattice rank minus one for blow-ups (number of geometric points).
  int r() const { return r_; }
  std::size_t lattice_rank() const { return kind_ == SurfaceKind::P1xP1 ? 2 : r_ + 1; }

  const std::optional<GWElement>& external_euler() const { return euler_; }
  DelPezzoModel& with_euler(GWElement chi);
  /// Label used in messages ("P2", "Bl6P2", "P1xP1", or a preset name).
  const std::string& name() const { return name_; }
  DelPezzoModel& with_name(std::string name);

 private:
  SurfaceKind kind_ = SurfaceKind::BlowupP2;
  FieldPtr base_;
  std::vector<FieldPtr> point_fields_;
  int r_ = 0;
  std::optional<GWElement> euler_;
  std::string name_;
};

long long intersect(const DelPezzoModel& s, const PicardClass& a, const PicardClass& b);
PicardClass canonical_class(const DelPezzoModel& s);
PicardClass anticanonical_class(const DelPezzoModel& s);
/// d_S = K.K
long long surface_degree(const DelPezzoModel& s);
/// d = -K.D
long long curve_degree(const DelPezzoModel& s, const PicardClass& d);
/// n = d - 1
long long marked_points(const DelPezzoModel& s, const PicardClass& d);
/// delta = D.(K + D)/2 + 1
long long node_count(const DelPezzoModel& s, const PicardClass& d);

/// Classes E with E.E = -1 and E.K = -1, |a0| <= bound.
std::vector<PicardClass> minus_one_curves(const DelPezzoModel& s, int bound = 4);

struct HypothesisResult {
  bool pass = true;
  std::string reason;
};
/// Degree condition on (d_S, d) and D != m E for m > 1, E a -1-curve.
/// Effectiveness of D is not checked.
HypothesisResult hypothesis_check(const DelPezzoModel& s, const PicardClass& d);

/// chi(P^n) = sum_{i=0}^n <(-1)^i>.
GWElement euler_char_projective(const FieldPtr& base, int n);
GWElement euler_char(const DelPezzoModel& s);

/// "[a0; a1, ..., ar]", "[a, b]", "O(m)", "O(a,b)", "-K" or "-mK".
/// O(m) is m*line on P^2, (m, m) on P^1 x P^1 and -mK on other blow-ups.
PicardClass parse_class(const DelPezzoModel& s, std::string_view text);
std::string format_class(const DelPezzoModel& s, const PicardClass& d);

// ===========================================================================

inline DelPezzoModel DelPezzoModel::blowup_p2(FieldPtr base, std::vector<FieldPtr> point_fields) {
  DelPezzoModel s;
  s.kind_ = SurfaceKind::BlowupP2;
  s.base_ = std::move(base);
  for (const auto& f : point_fields) s.r_ += static_cast<int>(degree_over(f, s.base_));
  if (s.r_ > 7) {
    throw MathError("not-del-pezzo", "at most 7 blown-up points, got " + std::to_string(s.r_));
  }
  s.point_fields_ = std::move(point_fields);
  s.name_ = s.r_ == 0 ? "P2" : "Bl" + std::to_string(s.r_) + "P2";
  return s;
}

inline DelPezzoModel DelPezzoModel::blowup_p2(FieldPtr base, int r) {
  if (r < 0) throw MathError("not-del-pezzo", "negative number of points");
  std::vector<FieldPtr> fields(static_cast<std::size_t>(r), base);
  return blowup_p2(std::move(base), std::move(fields));
}

inline DelPezzoModel DelPezzoModel::p1xp1(FieldPtr base) {
  DelPezzoModel s;
  s.kind_ = SurfaceKind::P1xP1;
  s.base_ = std::move(base);
  s.name_ = "P1xP1";
  return s;
}

inline DelPezzoModel& DelPezzoModel::with_euler(GWElement chi) {
  require_same_field(chi.field() ? chi.field() : base_, base_, "external Euler characteristic");
  euler_ = std::move(chi);
  return *this;
}

inline DelPezzoModel& DelPezzoModel::with_name(std::string name) {
  name_ = std::move(name);
  return *this;
}

namespace detail {

inline void check_length(const DelPezzoModel& s, const PicardClass& d) {
  if (d.c.size() != s.lattice_rank()) {
    throw MathError("class-length", "class has " + std::to_string(d.c.size()) +
                                        " coefficients, lattice rank is " +
                                        std::to_string(s.lattice_rank()));
  }
}

}  // namespace detail

inline long long intersect(const DelPezzoModel& s, const PicardClass& a, const PicardClass& b) {
  detail::check_length(s, a);
  detail::check_length(s, b);
  if (s.kind() == SurfaceKind::P1xP1) return a.c[0] * b.c[1] + a.c[1] * b.c[0];
  long long v = a.c[0] * b.c[0];
  for (std::size_t i = 1; i < a.c.size(); ++i) v -= a.c[i] * b.c[i];
  return v;
}

inline PicardClass canonical_class(const DelPezzoModel& s) {
  if (s.kind() == SurfaceKind::P1xP1) return {{-2, -2}};
  PicardClass k{std::vector<long long>(s.lattice_rank(), 1)};
  k.c[0] = -3;
  return k;
}

inline PicardClass anticanonical_class(const DelPezzoModel& s) {
  PicardClass k = canonical_class(s);
  for (auto& x : k.c) x = -x;
  return k;
}

inline long long surface_degree(const DelPezzoModel& s) {
  const PicardClass k = canonical_class(s);
  return intersect(s, k, k);
}

inline long long curve_degree(const DelPezzoModel& s, const PicardClass& d) {
  return -intersect(s, canonical_class(s), d);
}

inline long long marked_points(const DelPezzoModel& s, const PicardClass& d) {
  return curve_degree(s, d) - 1;
}

inline long long node_count(const DelPezzoModel& s, const PicardClass& d) {
  const long long twice = intersect(s, d, d) + intersect(s, d, canonical_class(s));
  return twice / 2 + 1;
}

inline std::vector<PicardClass> minus_one_curves(const DelPezzoModel& s, int bound) {
  std::vector<PicardClass> out;
  if (s.kind() == SurfaceKind::P1xP1) return out;  // E.E = 2ab is even
  const int r = s.r();
  std::vector<long long> a(static_cast<std::size_t>(r) + 1, 0);
  // With K = (-3; 1, ..., 1): sum a_i = 1 - 3 a0 and sum a_i^2 = a0^2 + 1.
  for (long long a0 = -bound; a0 <= bound; ++a0) {
    a[0] = a0;
    const long long target_sum = 1 - 3 * a0;
    const long long target_sq = a0 * a0 + 1;
    auto rec = [&](auto&& self, int i, long long sum, long long sq) -> void {
      if (sq > target_sq) return;
      if (i > r) {
        if (sum == target_sum && sq == target_sq) out.push_back({a});
        return;
      }
      const long long room = target_sq - sq;
      long long m = 0;
      while ((m + 1) * (m + 1) <= room) ++m;
      for (long long v = -m; v <= m; ++v) {
        a[static_cast<std::size_t>(i)] = v;
        self(self, i + 1, sum + v, sq + v * v);
      }
      a[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, 1, 0, 0);
  }
  return out;
}

inline HypothesisResult hypothesis_check(const DelPezzoModel& s, const PicardClass& d) {
  const long long ds = surface_degree(s);
  const long long deg = curve_degree(s, d);
  const bool degree_ok = ds >= 4 || (ds == 3 && deg != 6) || (ds == 2 && deg >= 7);
  if (!degree_ok) {
    return {false, "d = " + std::to_string(deg) + " on degree-" + std::to_string(ds) + " surface"};
  }
  for (const auto& e : minus_one_curves(s)) {
    long long m = 0;
    bool multiple = true;
    for (std::size_t i = 0; i < e.c.size() && multiple; ++i) {
      if (e.c[i] == 0) {
        multiple = d.c[i] == 0;
      } else if (d.c[i] % e.c[i] != 0) {
        multiple = false;
      } else {
        const long long q = d.c[i] / e.c[i];
        if (m == 0) m = q;
        multiple = q == m;
      }
    }
    if (multiple && m > 1) {
      return {false, std::to_string(m) + "-fold multiple of -1-curve " + format_class(s, e)};
    }
  }
  return {true, ""};
}

inline GWElement euler_char_projective(const FieldPtr& base, int n) {
  GWElement chi(base);
  for (int i = 0; i <= n; ++i) {
    chi += GWElement::rank_one(from_integer(base, i % 2 ? -1 : 1));
  }
  return chi;
}

inline GWElement euler_char(const DelPezzoModel& s) {
  if (s.external_euler()) return *s.external_euler();
  const FieldPtr& k = s.base();
  if (s.kind() == SurfaceKind::P1xP1) {
    const GWElement p1 = euler_char_projective(k, 1);
    return p1 * p1;
  }
  GWElement chi = euler_char_projective(k, 2);
  const GWElement minus_one = GWElement::rank_one(from_integer(k, -1));
  for (const auto& f : s.point_fields()) chi += minus_one * trace_form(f, k);
  return chi;
}

inline PicardClass parse_class(const DelPezzoModel& s, std::string_view text) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  auto number_list = [&](std::string_view body, std::size_t offset) {
    std::vector<long long> v;
    std::size_t i = 0;
    while (i <= body.size()) {
      std::size_t j = body.find_first_of(",;", i);
      if (j == std::string_view::npos) j = body.size();
      const std::string item(body.substr(i, j - i));
      if (!item.empty()) {
        char* end = nullptr;
        const long long x = std::strtoll(item.c_str(), &end, 10);
        if (*end != '\0') throw ParseError("bad integer '" + item + "'", offset + i);
        v.push_back(x);
      } else if (j < body.size()) {
        throw ParseError("empty coefficient", offset + i);
      }
      i = j + 1;
    }
    return v;
  };
  PicardClass d;
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']') {
    d.c = number_list(std::string_view(t).substr(1, t.size() - 2), 1);
    // A bare [a0] on a blow-up pads the exceptional coefficients with zeros.
    if (s.kind() == SurfaceKind::BlowupP2 && d.c.size() == 1) d.c.resize(s.lattice_rank(), 0);
  } else if (t.size() >= 3 && t.rfind("O(", 0) == 0 && t.back() == ')') {
    const auto v = number_list(std::string_view(t).substr(2, t.size() - 3), 2);
    if (v.size() == 2 && s.kind() == SurfaceKind::P1xP1) {
      d.c = v;
    } else if (v.size() == 1) {
      if (s.kind() == SurfaceKind::P1xP1) {
        d.c = {v[0], v[0]};
      } else if (s.r() == 0) {
        d.c = {v[0]};
      } else {
        d = anticanonical_class(s);
        for (auto& x : d.c) x *= v[0];
      }
    } else {
      throw ParseError("O(...) takes one coefficient (two on P1xP1)", 2);
    }
  } else if (t.size() >= 2 && t.front() == '-' && t.back() == 'K') {
    long long m = 1;
    if (t.size() > 2) m = number_list(std::string_view(t).substr(1, t.size() - 2), 1).at(0);
    d = anticanonical_class(s);
    for (auto& x : d.c) x *= m;
  } else {
    throw ParseError("expected a class literal like [a0; a1, ...], O(d) or -K", 0);
  }
  detail::check_length(s, d);
  return d;
}

inline std::string format_class(const DelPezzoModel& s, const PicardClass& d) {
  std::string out = "[";
  for (std::size_t i = 0; i < d.c.size(); ++i) {
    if (i > 0) out += (i == 1 && s.kind() == SurfaceKind::BlowupP2) ? "; " : ", ";
    out += std::to_string(d.c[i]);
  }
  return out + "]";
}

}  // namespace gwcount
