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

// JSON readers for fibers, surfaces and curve configurations, and the
// invariant report attached to computed forms.
//
//   fiber:   { "target": F, "points": [ { "field": F, "jacobian": elem } ] }
//   surface: { "kind": "BlP2" | "P2" | "P1xP1" | "fermat-cubic" | "cubic-S0",
//              "r": int, "pointFields": [F...], "euler": form }
//   config:  { "base": F, "sigma": [F...], "surface": {...}, "divisor": D,
//              "curves": [ { "field": F, "nodes": [ { "field": F, "D": elem }
//                                                   | "split" ] } ] }
//
// A divisor is an integer array or a class literal ("O(3)", "-K", "[1; 0]").

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gwcount/a1degree.hpp"
#include "gwcount/curvecount.hpp"
#include "gwcount/gw.hpp"
#include "gwcount/literal.hpp"
#include "gwcount/picard.hpp"

namespace gwcount {

using Json = nlohmann::json;

Json read_json_file(const std::string& path);

FiberRecord parse_fiber(const Json& j);
DelPezzoModel parse_surface(const Json& j, const FieldPtr& base);
/// "P2", "P1xP1", "BlP2:r" (r rational points), "fermat-cubic", "cubic-S0".
DelPezzoModel surface_from_name(const std::string& name, const FieldPtr& base);
PicardClass parse_divisor(const Json& j, const DelPezzoModel& s);
CurveConfiguration parse_config(const Json& j);

/// Comma-separated field literals (commas inside brackets are kept).
std::vector<std::string> split_list(const std::string& text);

struct InvariantRow {
  std::string key;
  std::string value;
};
/// rank, disc, signatures at the real places, Hasse invariants where defined.
std::vector<InvariantRow> invariant_table(const GWElement& q);
Json invariants_json(const GWElement& q);

// ===========================================================================

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
}

namespace detail {

inline const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing key \"") + key + "\"", 0);
  }
  return j.at(key);
}

inline std::string require_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string", 0);
  return j.get<std::string>();
}

/// Structural identity with the base: reuse the base's own pointer so the
/// tower stays shared.
inline FieldPtr field_over(const Json& j, const FieldPtr& base, const char* what) {
  FieldPtr f = parse_field(require_string(j, what));
  degree_over(f, base);
  return same_field(f, base) ? base : f;
}

inline Element element_in(const FieldPtr& field, const Json& j) {
  if (j.is_number_integer()) return from_integer(field, j.get<long long>());
  return parse_element(field, require_string(j, "element"));
}

}  // namespace detail

inline FiberRecord parse_fiber(const Json& j) {
  FiberRecord fiber;
  fiber.target = parse_field(detail::require_string(detail::require_key(j, "target"), "target"));
  if (j.contains("points")) {
    for (const auto& p : j.at("points")) {
      EtalePointRecord pt;
      pt.target = fiber.target;
      pt.source = p.contains("field") ? detail::field_over(p.at("field"), fiber.target, "field")
                                      : fiber.target;
      pt.jacobian = detail::element_in(pt.source, detail::require_key(p, "jacobian"));
      fiber.points.push_back(std::move(pt));
    }
  }
  return fiber;
}

inline DelPezzoModel surface_from_name(const std::string& name, const FieldPtr& base) {
  if (name == "P2") return DelPezzoModel::blowup_p2(base);
  if (name == "P1xP1") return DelPezzoModel::p1xp1(base);
  if (name == "fermat-cubic") return fermat_cubic(base);
  if (name == "cubic-S0") return cubic_s0(base);
  if (name.rfind("BlP2:", 0) == 0) {
    const std::string r = name.substr(5);
    if (r.empty() || r.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad point count in '" + name + "'", 5);
    }
    return DelPezzoModel::blowup_p2(base, std::stoi(r));
  }
  throw ParseError("unknown surface '" + name + "'", 0);
}

inline DelPezzoModel parse_surface(const Json& j, const FieldPtr& base) {
  if (j.is_string()) return surface_from_name(j.get<std::string>(), base);
  const std::string kind = detail::require_string(detail::require_key(j, "kind"), "kind");
  DelPezzoModel s = DelPezzoModel::p1xp1(base);
  if (kind == "BlP2" || kind == "P2") {
    std::vector<FieldPtr> fields;
    if (j.contains("pointFields")) {
      for (const auto& f : j.at("pointFields")) {
        fields.push_back(detail::field_over(f, base, "pointFields entry"));
      }
    }
    if (j.contains("r")) {
      const int r = j.at("r").get<int>();
      if (!j.contains("pointFields")) {
        fields.assign(static_cast<std::size_t>(std::max(r, 0)), base);
      }
      s = DelPezzoModel::blowup_p2(base, fields);
      if (s.r() != r) {
        throw MathError("point-degree", "pointFields have total degree " +
                                            std::to_string(s.r()) + ", r = " + std::to_string(r));
      }
    } else {
      s = DelPezzoModel::blowup_p2(base, fields);
    }
  } else if (kind == "P1xP1") {
    s = DelPezzoModel::p1xp1(base);
  } else {
    s = surface_from_name(kind, base);
  }
  if (j.contains("euler")) {
    s.with_euler(parse_form(base, detail::require_string(j.at("euler"), "euler")));
  }
  return s;
}

inline PicardClass parse_divisor(const Json& j, const DelPezzoModel& s) {
  if (j.is_string()) return parse_class(s, j.get<std::string>());
  if (!j.is_array()) throw ParseError("divisor must be an array or a class literal", 0);
  PicardClass d;
  for (const auto& x : j) d.c.push_back(x.get<long long>());
  if (d.c.size() != s.lattice_rank()) {
    throw MathError("class-length", "divisor has " + std::to_string(d.c.size()) +
                                        " coefficients, lattice rank is " +
                                        std::to_string(s.lattice_rank()));
  }
  return d;
}

inline CurveConfiguration parse_config(const Json& j) {
  CurveConfiguration config;
  config.base = parse_field(detail::require_string(detail::require_key(j, "base"), "base"));
  std::vector<FieldPtr> sigma;
  if (j.contains("sigma")) {
    for (const auto& f : j.at("sigma")) sigma.push_back(detail::field_over(f, config.base, "sigma"));
  }
  config.sigma = SigmaList(config.base, std::move(sigma));
  if (j.contains("surface")) config.surface = parse_surface(j.at("surface"), config.base);
  if (j.contains("divisor")) {
    if (!config.surface) throw ParseError("divisor given without a surface", 0);
    config.divisor = parse_divisor(j.at("divisor"), *config.surface);
  }
  if (j.contains("curves")) {
    for (const auto& cj : j.at("curves")) {
      CurveRecord c;
      c.field = detail::field_over(detail::require_key(cj, "field"), config.base, "curve field");
      if (cj.contains("nodes")) {
        for (const auto& nj : cj.at("nodes")) {
          NodeRecord node;
          node.curve_field = c.field;
          if (nj.is_string()) {
            if (nj.get<std::string>() != "split") {
              throw ParseError("node must be an object or \"split\"", 0);
            }
            node.node_field = c.field;
          } else {
            node.node_field = nj.contains("field")
                                  ? detail::field_over(nj.at("field"), c.field, "node field")
                                  : c.field;
            if (nj.contains("D")) {
              const Json& dj = nj.at("D");
              if (!(dj.is_string() && dj.get<std::string>() == "split")) {
                node.tangent = detail::element_in(node.node_field, dj);
              }
            }
          }
          c.nodes.push_back(std::move(node));
        }
      }
      config.curves.push_back(std::move(c));
    }
  }
  return config;
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

namespace detail {

inline std::vector<RealPlace> real_places(const Field& f) {
  if (f.is_prime_layer()) {
    if (f.kind() == FieldKind::Rationals || f.kind() == FieldKind::RealClosed) return {RealPlace{}};
    return {};
  }
  if (f.degree() == 2 && f.base()->is_prime_layer() &&
      f.base()->kind() == FieldKind::Rationals) {
    const auto& m = f.modulus().coeffs;
    if (m[1].scalar() * m[1].scalar() - 4 * m[0].scalar() > 0) {
      return {RealPlace{1}, RealPlace{-1}};
    }
  }
  return {};
}

}  // namespace detail

inline std::vector<InvariantRow> invariant_table(const GWElement& q) {
  std::vector<InvariantRow> rows;
  rows.push_back({"rank", std::to_string(rank(q))});
  if (!q.field()) return rows;
  const Field& f = *q.field();
  rows.push_back({"disc", to_string(discriminant(q))});
  const auto places = detail::real_places(f);
  for (const auto& place : places) {
    const std::string key = places.size() == 1 ? "signature" : "signature." + to_string(Place{place});
    rows.push_back({key, std::to_string(signature(q, place))});
  }
  if (q.is_honest() && !q.is_zero()) {
    if (f.is_prime_layer() && f.kind() == FieldKind::Rationals) {
      for (const auto& place : relevant_places(q, q)) {
        rows.push_back({"hasse." + to_string(place), std::to_string(hasse_invariant(q, place))});
      }
    } else if (f.is_prime_layer() && f.kind() == FieldKind::PAdic) {
      rows.push_back({"hasse", std::to_string(hasse_invariant(q, LocalPlace{}))});
    }
  }
  return rows;
}

inline Json invariants_json(const GWElement& q) {
  Json j = Json::object();
  j["form"] = format_form(q);
  for (const auto& row : invariant_table(q)) {
    if (row.key == "disc") {
      j[row.key] = row.value;
    } else {
      j[row.key] = std::stoll(row.value);
    }
  }
  return j;
}

}  // namespace gwcount
