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

// Command-line front end. run() is the whole program minus process exit, so
// tests drive it directly.
//
// Exit codes: 0 success, 1 usage or syntax error, 2 mathematical rejection.

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gwcount/gwcount.hpp"

namespace gwcount::cli {

/// key=value lines, or one JSON object with --json.
class Report {
 public:
  void add(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
  void add(const std::string& key, long long value) { rows_.emplace_back(key, value); }
  void add_form(const std::string& prefix, const GWElement& q) {
    add(prefix.empty() ? "form" : prefix, format_form(q));
    for (const auto& row : invariant_table(q)) {
      const std::string key = prefix.empty() ? row.key : prefix + "." + row.key;
      if (row.key == "disc") {
        add(key, row.value);
      } else {
        add(key, std::stoll(row.value));
      }
    }
  }
  void print(std::ostream& out, bool json) const {
    if (!json) {
      for (const auto& [k, v] : rows_) {
        out << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
      return;
    }
    Json j = Json::object();
    for (const auto& [k, v] : rows_) {
      if (j.contains(k)) {
        if (!j[k].is_array()) j[k] = Json::array({j[k]});
        j[k].push_back(v);
      } else {
        j[k] = v;
      }
    }
    out << j.dump(2) << '\n';
  }

 private:
  std::vector<std::pair<std::string, Json>> rows_;
};

namespace detail {

inline std::vector<FieldPtr> fields_over(const std::vector<std::string>& literals,
                                         const FieldPtr& base) {
  std::vector<FieldPtr> out;
  for (const auto& lit : literals) {
    FieldPtr f = parse_field(lit);
    degree_over(f, base);
    out.push_back(same_field(f, base) ? base : f);
  }
  return out;
}

struct Table1Case {
  Table1Row row;
  long long d;
  const char* surface;
  const char* divisor;
  long long rank;
};

inline const std::vector<Table1Case>& table1_cases() {
  static const std::vector<Table1Case> cases = {
      {Table1Row::P2Line, 1, "P2", "O(1)", 1},
      {Table1Row::P2Conic, 1, "P2", "O(2)", 1},
      {Table1Row::P2Cubic, 1, "P2", "O(3)", 12},
      {Table1Row::P1xP1Ruling, 1, "P1xP1", "O(1,1)", 1},
      {Table1Row::P1xP1Bidegree22, 1, "P1xP1", "O(2,2)", 12},
      {Table1Row::FermatCubic, 1, "fermat-cubic", "O(1)", 12},
      {Table1Row::CubicS0, 1, "cubic-S0", "O(1)", 12},
  };
  return cases;
}

/// Which closed form applies to (surface, D); row 8 is the generic -K row.
inline Table1Row classify(const std::string& surface, const DelPezzoModel& s,
                          const PicardClass& d, long long& ruling_degree) {
  if (surface == "P2") {
    if (d.c[0] == 1) return Table1Row::P2Line;
    if (d.c[0] == 2) return Table1Row::P2Conic;
    if (d.c[0] == 3) return Table1Row::P2Cubic;
  }
  if (surface == "P1xP1") {
    if (d.c[0] == 2 && d.c[1] == 2) return Table1Row::P1xP1Bidegree22;
    if (d.c[0] == 1 && d.c[1] >= 0) {
      ruling_degree = d.c[1];
      return Table1Row::P1xP1Ruling;
    }
    if (d.c[1] == 1 && d.c[0] >= 0) {
      ruling_degree = d.c[0];
      return Table1Row::P1xP1Ruling;
    }
  }
  const bool anticanonical = d == anticanonical_class(s);
  if (surface == "fermat-cubic" && anticanonical) return Table1Row::FermatCubic;
  if (surface == "cubic-S0" && anticanonical) return Table1Row::CubicS0;
  if (anticanonical) return Table1Row::Anticanonical;
  throw Unsupported("no closed form for " + format_class(s, d) + " on " + s.name());
}

/// Sigma with n points: all rational, or one quadratic point when n >= 2.
inline SigmaList sample_sigma(const FieldPtr& k, long long n, bool quadratic) {
  std::vector<FieldPtr> fields;
  if (quadratic && n >= 2) {
    FieldPtr l;
    if (k->kind() == FieldKind::RealClosed) {
      l = complexes();
    } else if (k->is_finite()) {
      l = parse_field("F(" + k->characteristic().str() + "^2)");
    } else {
      l = parse_field("Q[x]/(x^2-5)");
    }
    fields.push_back(l);
    n -= 2;
  }
  for (long long i = 0; i < n; ++i) fields.push_back(k);
  return SigmaList(k, std::move(fields));
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grothendieck-Witt arithmetic and enriched curve counts", "gwcount"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON output");

  std::string field_text, base_text, form_a, form_b;
  std::vector<std::string> field_list;

  // gw eval|eq|inv
  auto* gw = app.add_subcommand("gw", "GW(k) arithmetic");
  gw->require_subcommand(1);
  auto* gw_eval = gw->add_subcommand("eval", "normalize a form");
  auto* gw_eq = gw->add_subcommand("eq", "decide equality in GW(k)");
  auto* gw_inv = gw->add_subcommand("inv", "invariant table");
  for (auto* sub : {gw_eval, gw_eq, gw_inv}) {
    sub->add_option("--field", field_text, "field literal")->required();
    sub->add_option("form", form_a, "form")->required();
  }
  gw_eq->add_option("other", form_b, "second form")->required();
  bool witt = false;
  gw_eq->add_flag("--witt", witt, "compare in W(k)");

  auto* transfer_cmd = app.add_subcommand("transfer", "Tr_{E/K} of a form over E");
  transfer_cmd->add_option("--field", field_text, "field E")->required();
  transfer_cmd->add_option("--base", base_text, "subfield K")->required();
  transfer_cmd->add_option("form", form_a, "form over E")->required();

  auto* traceform_cmd = app.add_subcommand("traceform", "trace form of an etale algebra");
  traceform_cmd->add_option("--base", base_text, "base field")->required();
  traceform_cmd->add_option("factors", field_list, "factor fields")->required();

  auto* disc_cmd = app.add_subcommand("disc", "discriminant of an etale algebra or a tower");
  disc_cmd->add_option("--base", base_text, "base field");
  std::vector<std::string> tower;
  disc_cmd->add_option("--tower", tower, "K L M")->expected(3);
  disc_cmd->add_option("factors", field_list, "factor fields");

  auto* mass_cmd = app.add_subcommand("mass", "mass of a node");
  std::string node_field_text, tangent_text;
  bool split = false;
  mass_cmd->add_option("--curve-field", base_text, "k(u)")->required();
  mass_cmd->add_option("--node-field", node_field_text, "k(p), default k(u)");
  auto* tangent_opt = mass_cmd->add_option("--D", tangent_text, "tangent class D(p)");
  auto* split_opt = mass_cmd->add_flag("--split", split, "split node");
  tangent_opt->excludes(split_opt);

  auto* degree_cmd = app.add_subcommand("degree", "A1-degree from fiber data");
  std::string fiber_path, jacobian_text;
  degree_cmd->add_option("--fiber", fiber_path, "fiber JSON file");
  degree_cmd->add_option("--target", base_text, "k(y)");
  degree_cmd->add_option("--source", field_text, "k(x)");
  degree_cmd->add_option("--jacobian", jacobian_text, "Jf(x)");

  std::string surface_text, divisor_text, sigma_text, specialize_text;
  auto* picard_cmd = app.add_subcommand("picard", "Picard lattice data");
  picard_cmd->add_option("--surface", surface_text, "P2, P1xP1, BlP2:r, fermat-cubic, cubic-S0")
      ->required();
  picard_cmd->add_option("--field", field_text, "base field")->required();
  picard_cmd->add_option("--D", divisor_text, "divisor class");
  bool list_curves = false;
  picard_cmd->add_flag("--curves", list_curves, "list the -1-curves");

  auto* hyp_cmd = app.add_subcommand("hypcheck", "check the hypothesis on (S, D)");
  hyp_cmd->add_option("--surface", surface_text, "surface")->required();
  hyp_cmd->add_option("--field", field_text, "base field")->required();
  hyp_cmd->add_option("--D", divisor_text, "divisor class")->required();

  auto* count_cmd = app.add_subcommand("count", "enriched count of a curve configuration");
  std::string config_path;
  count_cmd->add_option("--config", config_path, "configuration JSON")->required();

  auto* closed_cmd = app.add_subcommand("closed-form", "closed-form enriched count");
  closed_cmd->add_option("--surface", surface_text, "surface")->required();
  closed_cmd->add_option("--D", divisor_text, "divisor class")->required();
  closed_cmd->add_option("--sigma", sigma_text, "comma-separated point fields")->required();
  closed_cmd->add_option("--field", field_text, "base field (default: inferred from sigma)");
  closed_cmd->add_option("--specialize", specialize_text, "R or C")
      ->check(CLI::IsMember({"R", "C"}));

  auto* kont_cmd = app.add_subcommand("kontsevich", "classical N_d");
  int kont_d = 0;
  kont_cmd->add_option("d", kont_d, "degree")->required()->check(CLI::PositiveNumber);

  auto* self_cmd = app.add_subcommand("selftest", "built-in consistency checks");
  std::string suite;
  self_cmd->add_option("suite", suite, "table1")->required()->check(CLI::IsMember({"table1"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  Report report;
  try {
    if (gw_eval->parsed() || gw_inv->parsed() || gw_eq->parsed()) {
      const FieldPtr k = parse_field(field_text);
      const GWElement a = parse_form(k, form_a);
      if (gw_eq->parsed()) {
        const GWElement b = parse_form(k, form_b);
        const bool equal = witt ? witt_equal(a, b) : is_equal(a, b);
        if (json) {
          report.add("result", equal ? "equal" : "not-equal");
          report.print(out, true);
        } else {
          out << (equal ? "equal" : "not-equal") << '\n';
        }
        return 0;
      }
      if (gw_eval->parsed()) {
        report.add("form", format_form(a));
        report.add("rank", rank(a));
      } else {
        report.add_form("", a);
        report.add("witt", format_form(witt_class(a)));
      }
    } else if (transfer_cmd->parsed()) {
      const FieldPtr e = parse_field(field_text);
      const FieldPtr k = parse_field(base_text);
      report.add_form("", transfer(parse_form(e, form_a), k));
    } else if (traceform_cmd->parsed()) {
      const FieldPtr k = parse_field(base_text);
      const EtaleAlgebra alg(k, detail::fields_over(field_list, k));
      report.add("degree", static_cast<long long>(alg.degree()));
      report.add_form("", trace_form(alg));
    } else if (disc_cmd->parsed()) {
      if (!tower.empty()) {
        const FieldPtr k = parse_field(tower[0]);
        const FieldPtr l = parse_field(tower[1]);
        const FieldPtr m = parse_field(tower[2]);
        const SquareClass lemma = tower_disc(k, l, m);
        const SquareClass direct = field_disc(m, k);
        report.add("disc", to_string(lemma));
        report.add("direct", to_string(direct));
        report.add("agree", lemma == direct ? "true" : "false");
      } else {
        if (base_text.empty() || field_list.empty()) {
          err << "disc: give --base and factor fields, or --tower K L M\n";
          return 1;
        }
        const FieldPtr k = parse_field(base_text);
        report.add("disc", to_string(disc_algebra(EtaleAlgebra(k, detail::fields_over(field_list, k)))));
      }
    } else if (mass_cmd->parsed()) {
      NodeRecord node;
      node.curve_field = parse_field(base_text);
      node.node_field = node_field_text.empty()
                            ? node.curve_field
                            : detail::fields_over({node_field_text}, node.curve_field)[0];
      if (!split) {
        if (tangent_text.empty()) {
          err << "mass: give --D or --split\n";
          return 1;
        }
        node.tangent = parse_element(node.node_field, tangent_text);
      }
      report.add("mass", format_form(mass(node)));
      report.add("disc", to_string(disc_algebra(node_algebra(node))));
    } else if (degree_cmd->parsed()) {
      FiberRecord fiber;
      if (!fiber_path.empty()) {
        fiber = parse_fiber(read_json_file(fiber_path));
      } else {
        if (base_text.empty() || jacobian_text.empty()) {
          err << "degree: give --fiber, or --target and --jacobian\n";
          return 1;
        }
        fiber.target = parse_field(base_text);
        const FieldPtr source =
            field_text.empty() ? fiber.target : detail::fields_over({field_text}, fiber.target)[0];
        fiber.points.push_back({source, fiber.target, parse_element(source, jacobian_text)});
      }
      report.add("points", static_cast<long long>(fiber.points.size()));
      report.add_form("", global_degree_at(fiber));
    } else if (picard_cmd->parsed() || hyp_cmd->parsed()) {
      const FieldPtr k = parse_field(field_text);
      const DelPezzoModel s = surface_from_name(surface_text, k);
      if (hyp_cmd->parsed()) {
        const PicardClass d = parse_class(s, divisor_text);
        const HypothesisResult h = hypothesis_check(s, d);
        report.add("surface_degree", surface_degree(s));
        report.add("d", curve_degree(s, d));
        report.add("hypothesis", h.pass ? "pass" : "fail");
        if (!h.pass) {
          report.add("reason", h.reason);
          report.print(out, json);
          return 2;
        }
      } else {
        report.add("surface", s.name());
        report.add("surface_degree", surface_degree(s));
        report.add("K", format_class(s, canonical_class(s)));
        const auto curves = minus_one_curves(s);
        report.add("minus_one_curves", static_cast<long long>(curves.size()));
        if (list_curves) {
          for (const auto& e : curves) report.add("curve", format_class(s, e));
        }
        report.add("euler", format_form(euler_char(s)));
        if (!divisor_text.empty()) {
          const PicardClass d = parse_class(s, divisor_text);
          report.add("D", format_class(s, d));
          report.add("d", curve_degree(s, d));
          report.add("n", marked_points(s, d));
          report.add("delta", node_count(s, d));
        }
      }
    } else if (count_cmd->parsed()) {
      const CurveConfiguration config = parse_config(read_json_file(config_path));
      const ValidationReport v = validate_config(config);
      if (!v.ok()) {
        report.add("valid", "false");
        for (const auto& f : v.failures) report.add("failure", f);
        report.print(out, json);
        return 2;
      }
      report.add("valid", "true");
      report.add("curves", static_cast<long long>(config.curves.size()));
      report.add_form("", enriched_count(config));
    } else if (closed_cmd->parsed()) {
      const auto literals = split_list(sigma_text);
      std::vector<FieldPtr> parsed;
      for (const auto& lit : literals) parsed.push_back(parse_field(lit));
      FieldPtr k;
      if (!field_text.empty()) {
        k = parse_field(field_text);
      } else {
        if (parsed.empty()) {
          err << "closed-form: empty sigma needs --field\n";
          return 1;
        }
        k = parsed.front()->root();
      }
      std::vector<FieldPtr> fields;
      for (const auto& f : parsed) {
        degree_over(f, k);
        fields.push_back(same_field(f, k) ? k : f);
      }
      const SigmaList sigma(k, std::move(fields));
      const DelPezzoModel s = surface_from_name(surface_text, k);
      const PicardClass d = parse_class(s, divisor_text);
      long long ruling = 1;
      const Table1Row row = detail::classify(surface_text, s, d, ruling);
      const GWElement value = table1_value(row, sigma, ruling, &s);
      report.add("row", static_cast<long long>(row));
      report.add("n", sigma.total_degree());
      report.add_form("", value);
      if (!specialize_text.empty()) {
        const Specialization sp = specialize(
            value, specialize_text == "R" ? SpecializeTarget::Real : SpecializeTarget::Complex);
        report.add("specialized.rank", sp.rank);
        if (sp.signature) report.add("specialized.signature", *sp.signature);
      }
    } else if (kont_cmd->parsed()) {
      const Integer n = kontsevich_Nd(kont_d);
      if (json) {
        report.add("N", n.str());
        report.print(out, true);
      } else {
        out << n << '\n';
      }
      return 0;
    } else if (self_cmd->parsed()) {
      bool ok = true;
      for (const char* field : {"Q", "F(5)", "R"}) {
        const FieldPtr k = parse_field(field);
        for (const auto& c : detail::table1_cases()) {
          for (bool quadratic : {false, true}) {
            std::string status = "ok";
            std::string value;
            try {
              const DelPezzoModel s = surface_from_name(c.surface, k);
              const PicardClass d = parse_class(s, c.divisor);
              const long long n = marked_points(s, d);
              const SigmaList sigma = detail::sample_sigma(k, n, quadratic);
              const GWElement v = table1_value(c.row, sigma, c.d, &s);
              value = format_form(v);
              if (rank(v) != c.rank) status = "rank-mismatch";
              if (d == anticanonical_class(s)) {
                if (!is_equal(v, closed_form_anticanonical(s, sigma))) status = "closed-form-mismatch";
              }
            } catch (const MathError& e) {
              // S0 is singular in characteristic 5: rejection is the expected outcome.
              const bool expected = c.row == Table1Row::CubicS0 && k->characteristic() == 5 &&
                                    e.code() == "singular-surface";
              status = expected ? "rejected" : std::string("error:") + e.code();
            }
            if (status != "ok" && status != "rejected") ok = false;
            report.add("row" + std::to_string(static_cast<int>(c.row)) + "." + field +
                           (quadratic ? ".quadratic" : ".rational"),
                       status + (value.empty() ? "" : " " + value));
          }
        }
      }
      report.add("result", ok ? "pass" : "fail");
      report.print(out, json);
      return ok ? 0 : 2;
    }
  } catch (const ParseError& e) {
    err << "error=parse\nposition=" << e.position() << "\nmessage=" << e.what() << '\n';
    return 1;
  } catch (const MathError& e) {
    err << "error=" << e.code() << "\nmessage=" << e.what() << '\n';
    if (!e.witness().empty()) err << "witness=" << e.witness() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error=usage\nmessage=" << e.what() << '\n';
    return 1;
  } catch (const Json::exception& e) {
    err << "error=json\nmessage=" << e.what() << '\n';
    return 1;
  }
  report.print(out, json);
  return 0;
}

}  // namespace gwcount::cli
