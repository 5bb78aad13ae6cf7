#include "capa/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "capa/circumference.hpp"
#include "capa/classical.hpp"
#include "capa/errors.hpp"
#include "capa/large_arc.hpp"
#include "capa/lookup_table.hpp"
#include "capa/oracle.hpp"
#include "capa/small_arc.hpp"

namespace capa::cli {

namespace {

using nlohmann::ordered_json;

struct Config {
  std::string radius_text;
  std::string unit = "minutes";
  std::string format = "sexagesimal";
  int precision = 12;
  bool trace = false;
};

Rat parse_decimal_rat(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  Int value = 0;
  Int scale = 1;
  bool any = false;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    value = value * 10 + (text[pos++] - '0');
    any = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + (text[pos++] - '0');
      scale *= 10;
      any = true;
    }
  }
  if (!any) throw ParseError("expected a number", pos);
  if (pos != text.size())
    throw ParseError("unexpected trailing characters", pos);
  const Rat q(value, scale);
  return negative ? -q : q;
}

Rat angle_thirds(const std::string& text, const std::string& unit) {
  if (text.find('\'') != std::string::npos)
    return Rat(parse_sexagesimal(text));
  const Rat v = parse_decimal_rat(text);
  if (unit == "thirds") return v;
  if (unit == "minutes") return v * 3600;
  return v * 216000;  // degrees
}

Int angle_thirds_int(const std::string& text, const std::string& unit) {
  return round_rat(angle_thirds(text, unit));
}

Rat angle_degrees(const std::string& text) {
  if (text.find('\'') != std::string::npos)
    return Rat(parse_sexagesimal(text)) / 216000;
  return parse_decimal_rat(text);
}

Rat length_minutes(const std::string& text, const std::string& unit) {
  return angle_thirds(text, unit) / 3600;
}

Int resolve_radius(const Config& cfg) {
  if (cfg.radius_text.empty()) return standard_trijya().thirds;
  Int r;
  if (cfg.radius_text.find('\'') != std::string::npos)
    r = parse_sexagesimal(cfg.radius_text);
  else
    r = round_rat(parse_decimal_rat(cfg.radius_text));
  if (r <= 0) throw DomainError("radius must be positive");
  return r;
}

std::string real_str(const Real& x, int digits) {
  std::ostringstream ss;
  ss << std::setprecision(digits) << x;
  return ss.str();
}

std::string rat_decimal_str(const Rat& q, int digits) {
  return real_str(to_real(q), digits);
}

std::string rat_exact_str(const Rat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

ordered_json json_int(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

std::string arc_decimal(const Config& cfg, const Int& thirds) {
  if (cfg.unit == "thirds") return thirds.str();
  const Rat minutes = minutes_from_thirds(thirds);
  return rat_decimal_str(cfg.unit == "degrees" ? minutes / 60 : minutes,
                         cfg.precision);
}

/// Prints the envelope (json) or the bare result line (text formats).
/// Text-mode traces are the caller's business and must precede this.
void emit_result(const Config& cfg, std::ostream& out,
                 const std::string& method, ordered_json inputs,
                 const Int& radius, const Int& result_thirds,
                 ordered_json extra = ordered_json(),
                 ordered_json trace = ordered_json()) {
  if (cfg.format == "json") {
    ordered_json j;
    j["method"] = method;
    j["inputs"] = std::move(inputs);
    j["radius_thirds"] = json_int(radius);
    j["result_thirds"] = json_int(result_thirds);
    j["result_sexagesimal"] = format_sexagesimal(result_thirds);
    if (!extra.is_null())
      for (auto& [key, value] : extra.items()) j[key] = value;
    if (cfg.trace && !trace.is_null()) j["trace"] = std::move(trace);
    out << j.dump(2) << "\n";
  } else if (cfg.format == "decimal") {
    out << arc_decimal(cfg, result_thirds) << "\n";
  } else {
    out << format_sexagesimal(result_thirds) << "\n";
  }
}

ordered_json trace_to_json(const IterationTrace& trace) {
  ordered_json rows = ordered_json::array();
  int i = 1;
  for (const IterationStep& step : trace.steps) {
    ordered_json row;
    row["i"] = i++;
    row["delta_thirds"] = json_int(step.delta);
    row["s_thirds"] = json_int(step.s);
    row["s_sexagesimal"] = format_sexagesimal(step.s);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string signed_sexagesimal_of_rat_minutes(const Rat& minutes) {
  const Int t = round_to_thirds(minutes);
  return (t >= 0 ? "+" : "") + format_sexagesimal(t);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "capa: exact sexagesimal arc computation "
      "(rational sine approximations, arcsin by series, iteration and "
      "tables, circumference refinement)"};
  app.fallthrough();
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--radius", cfg.radius_text,
                 "trijya: sexagesimal string or thirds (default 3437'44''48''')");
  app.add_option("--unit", cfg.unit, "unit of plain numeric angles")
      ->check(CLI::IsMember({"thirds", "minutes", "degrees"}));
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"sexagesimal", "decimal", "json"}));
  app.add_option("--precision", cfg.precision, "significant digits")
      ->check(CLI::Range(1, 40));
  app.add_flag("--trace", cfg.trace, "show intermediate steps");

  // sin-bhaskara
  std::string sb_deg;
  auto* sin_bhaskara =
      app.add_subcommand("sin-bhaskara", "rational sine approximation");
  sin_bhaskara->add_option("--deg", sb_deg, "angle in degrees")->required();
  sin_bhaskara->callback([&] {
    const Int radius = resolve_radius(cfg);
    const Rat x = angle_degrees(sb_deg);
    const Rat ratio = bhaskara_sin(x);
    const Int jya = round_rat(ratio * radius);
    if (cfg.format == "decimal") {
      out << rat_decimal_str(ratio, cfg.precision) << "\n";
      return;
    }
    ordered_json extra;
    extra["sine_exact"] = rat_exact_str(ratio);
    extra["sine_decimal"] = rat_decimal_str(ratio, cfg.precision);
    emit_result(cfg, out, "sin-bhaskara", {{"deg", sb_deg}}, radius, jya,
                std::move(extra));
  });

  // arcsin-brahmagupta
  std::string ab_jya;
  auto* arcsin_brahmagupta = app.add_subcommand(
      "arcsin-brahmagupta", "quadratic inversion of the rational sine");
  arcsin_brahmagupta->add_option("--jya", ab_jya, "jya (arc units)")
      ->required();
  arcsin_brahmagupta->callback([&] {
    const Int radius = resolve_radius(cfg);
    const Rat m = angle_thirds(ab_jya, cfg.unit);
    const Rat deg = brahmagupta_arcsin(m, Rat(radius));
    const Int result = round_rat(deg * 216000);
    if (cfg.format == "decimal") {
      out << rat_decimal_str(deg, cfg.precision) << "\n";
      return;
    }
    ordered_json extra;
    extra["result_degrees"] = rat_decimal_str(deg, cfg.precision);
    emit_result(cfg, out, "arcsin-brahmagupta", {{"jya", ab_jya}}, radius,
                result, std::move(extra));
  });

  // jya
  std::string j_arc;
  std::string j_method = "series";
  auto* jya_cmd = app.add_subcommand("jya", "jya of an arc");
  jya_cmd->add_option("--arc", j_arc, "arc")->required();
  jya_cmd->add_option("--method", j_method, "series or cubic")
      ->check(CLI::IsMember({"series", "cubic"}));
  jya_cmd->callback([&] {
    const Int radius = resolve_radius(cfg);
    const Int s = angle_thirds_int(j_arc, cfg.unit);
    const Int result = j_method == "cubic" ? cubic_jya(s, Radius{radius})
                                           : madhava_jya(s, Radius{radius});
    emit_result(cfg, out, "jya-" + j_method,
                {{"arc", j_arc}, {"method", j_method}}, radius, result);
  });

  // arcsin-small
  std::string as_jya;
  auto* arcsin_small =
      app.add_subcommand("arcsin-small", "arc by the cubic correction");
  arcsin_small->add_option("--jya", as_jya, "jya")->required();
  arcsin_small->callback([&] {
    const Int radius = resolve_radius(cfg);
    const Int m = angle_thirds_int(as_jya, cfg.unit);
    emit_result(cfg, out, "arcsin-small", {{"jya", as_jya}}, radius,
                arcsin_poly3(m, Radius{radius}));
  });

  // arcsin-iter
  std::string ai_jya;
  int ai_max_iter = 50;
  auto* arcsin_iter =
      app.add_subcommand("arcsin-iter", "arc by fixed-point iteration");
  arcsin_iter->add_option("--jya", ai_jya, "jya")->required();
  arcsin_iter->add_option("--max-iter", ai_max_iter, "iteration cap")
      ->check(CLI::Range(1, 10000));
  arcsin_iter->callback([&] {
    const Int radius = resolve_radius(cfg);
    const Int m = angle_thirds_int(ai_jya, cfg.unit);
    const VariyarResult result =
        variyar_arcsin(m, Radius{radius}, ai_max_iter);
    if (cfg.trace && cfg.format != "json") {
      int i = 1;
      for (const IterationStep& step : result.trace.steps)
        out << "i=" << i++ << "  delta=" << step.delta << "  s=" << step.s
            << "  " << format_sexagesimal(step.s) << "\n";
    }
    emit_result(cfg, out, "arcsin-iter", {{"jya", ai_jya}}, radius, result.s,
                ordered_json(), trace_to_json(result.trace));
  });

  // arcsin-table
  std::string at_jya;
  std::string at_mode = "commentary";
  auto* arcsin_table =
      app.add_subcommand("arcsin-table", "arc by the 24-entry lookup table");
  arcsin_table->add_option("--jya", at_jya, "jya")->required();
  arcsin_table->add_option("--mode", at_mode, "table construction mode")
      ->check(CLI::IsMember({"commentary", "paper-literal"}));
  arcsin_table->callback([&] {
    const Int radius = resolve_radius(cfg);
    const TableMode mode = at_mode == "commentary" ? TableMode::commentary
                                                   : TableMode::paper_literal;
    const LookupTable table =
        build_lookup_table(minutes_from_thirds(radius), mode);
    const Int m = angle_thirds_int(at_jya, cfg.unit);
    const LookupHit hit = lookup_arc(table, m);
    if (cfg.trace && cfg.format != "json")
      out << "k=" << hit.entry.k
          << "  jya=" << format_sexagesimal(hit.entry.jya)
          << "  distance=" << hit.distance << "'''\n";
    ordered_json trace;
    trace["k"] = hit.entry.k;
    trace["entry_jya_sexagesimal"] = format_sexagesimal(hit.entry.jya);
    trace["distance_thirds"] = json_int(hit.distance);
    trace["katapayadi"] = hit.entry.katapayadi;
    emit_result(cfg, out, "arcsin-table", {{"jya", at_jya}, {"mode", at_mode}},
                radius, hit.arc, ordered_json(), std::move(trace));
  });

  // arcsin-large
  std::string al_jya;
  auto* arcsin_large_cmd = app.add_subcommand(
      "arcsin-large", "arc by Madhava's table and the difference formula");
  arcsin_large_cmd->add_option("--jya", al_jya, "jya")->required();
  arcsin_large_cmd->callback([&] {
    const Int radius = resolve_radius(cfg);
    const MadhavaSineTable table = build_madhava_table(Radius{radius});
    const Int m = angle_thirds_int(al_jya, cfg.unit);
    const LargeArcResult result = arcsin_large(m, Radius{radius}, table);
    if (cfg.trace && cfg.format != "json")
      out << "s1=" << format_sexagesimal(result.s1) << "  p=" << result.p
          << "'''  kojya(m)=" << result.kojya_m << "'''\n";
    ordered_json trace;
    trace["s1_thirds"] = json_int(result.s1);
    trace["s1_sexagesimal"] = format_sexagesimal(result.s1);
    trace["p_thirds"] = json_int(result.p);
    trace["kojya_m_thirds"] = json_int(result.kojya_m);
    emit_result(cfg, out, "arcsin-large", {{"jya", al_jya}}, radius, result.s,
                ordered_json(), std::move(trace));
  });

  // circumference
  std::string c_diameter;
  std::string c_approx;
  auto* circumference_cmd = app.add_subcommand(
      "circumference", "refine an approximate circumference");
  circumference_cmd->add_option("--diameter", c_diameter, "diameter")
      ->required();
  circumference_cmd->add_option("--approx", c_approx, "approximate C")
      ->required();
  circumference_cmd->callback([&] {
    const Int radius = resolve_radius(cfg);
    const Rat D = length_minutes(c_diameter, cfg.unit);
    const Rat C_star = length_minutes(c_approx, cfg.unit);
    const CircumferenceResult result = refine_circumference(D, C_star);
    const CircumferenceTrace& t = result.trace;
    if (cfg.trace && cfg.format != "json") {
      int i = 1;
      for (const Rat& term : t.series_terms)
        out << "term " << i++ << "                "
            << signed_sexagesimal_of_rat_minutes(term) << "\n";
      const auto row = [&](const char* label, const Rat& v) {
        out << label << format_sexagesimal(round_to_thirds(v)) << "\n";
      };
      row("a*                    ", t.a_star);
      row("(a*)^2                ", t.a_star_sq);
      row("(b*)^2                ", t.b_star_sq);
      row("sqrt((a*)^2/2)        ", t.sqrt_half_a);
      row("sqrt((b*)^2/2)        ", t.sqrt_half_b);
      row("Delta                 ", t.delta_jya);
      row("delta                 ", t.delta_arc);
      row("4 delta               ", t.correction);
      out << "direction             "
          << (t.direction < 0 ? "C < C*" : t.direction > 0 ? "C > C*" : "C = C*")
          << "\n";
    }
    ordered_json trace;
    trace["series_terms"] = ordered_json::array();
    for (const Rat& term : t.series_terms)
      trace["series_terms"].push_back(
          {{"thirds", json_int(round_to_thirds(term))},
           {"exact", rat_exact_str(term)}});
    const auto put = [&](const char* key, const Rat& v) {
      trace[key] = {{"thirds", json_int(round_to_thirds(v))},
                    {"sexagesimal", format_sexagesimal(round_to_thirds(v))},
                    {"exact", rat_exact_str(v)}};
    };
    put("a_star", t.a_star);
    put("a_star_sq", t.a_star_sq);
    put("b_star_sq", t.b_star_sq);
    put("sqrt_half_a", t.sqrt_half_a);
    put("sqrt_half_b", t.sqrt_half_b);
    put("delta_jya", t.delta_jya);
    put("delta_arc", t.delta_arc);
    put("correction", t.correction);
    trace["direction"] = t.direction;
    ordered_json extra;
    extra["C_exact"] = rat_exact_str(result.C);
    emit_result(cfg, out, "circumference",
                {{"diameter", c_diameter}, {"approx", c_approx}}, radius,
                round_to_thirds(result.C), std::move(extra), std::move(trace));
  });

  // tables
  std::string t_which;
  std::string t_mode = "commentary";
  auto* tables_cmd = app.add_subcommand("tables", "emit the 24-entry tables");
  tables_cmd->add_option("which", t_which, "madhava or lookup")
      ->required()
      ->check(CLI::IsMember({"madhava", "lookup"}));
  tables_cmd->add_option("--mode", t_mode, "lookup construction mode")
      ->check(CLI::IsMember({"commentary", "paper-literal"}));
  tables_cmd->callback([&] {
    const Int radius = resolve_radius(cfg);
    if (t_which == "madhava") {
      const MadhavaSineTable table = build_madhava_table(Radius{radius});
      if (cfg.format == "json") {
        ordered_json j;
        j["method"] = "tables-madhava";
        j["radius_thirds"] = json_int(radius);
        j["entries"] = ordered_json::array();
        for (int jdx = 1; jdx <= 24; ++jdx)
          j["entries"].push_back(
              {{"j", jdx},
               {"arc_minutes", jdx * 225},
               {"jya_sexagesimal", format_sexagesimal(table.at(jdx))},
               {"jya_thirds", json_int(table.at(jdx))}});
        out << j.dump(2) << "\n";
        return;
      }
      out << "j,arc_minutes,jya_sexagesimal,jya_thirds\n";
      for (int jdx = 1; jdx <= 24; ++jdx)
        out << jdx << "," << jdx * 225 << ","
            << format_sexagesimal(table.at(jdx)) << "," << table.at(jdx)
            << "\n";
      return;
    }
    const TableMode mode = t_mode == "commentary" ? TableMode::commentary
                                                  : TableMode::paper_literal;
    const LookupTable table =
        build_lookup_table(minutes_from_thirds(radius), mode);
    if (cfg.format == "json") {
      ordered_json j;
      j["method"] = "tables-lookup";
      j["radius_thirds"] = json_int(radius);
      j["mode"] = t_mode;
      j["entries"] = ordered_json::array();
      for (const LookupEntry& e : table.entries)
        j["entries"].push_back(
            {{"k", e.k},
             {"jya_sexagesimal", format_sexagesimal(e.jya)},
             {"arc_sexagesimal", format_sexagesimal(e.arc)},
             {"katapayadi", e.katapayadi}});
      out << j.dump(2) << "\n";
      return;
    }
    out << "k,jya_sexagesimal,arc_sexagesimal,katapayadi\n";
    for (const LookupEntry& e : table.entries)
      out << e.k << "," << format_sexagesimal(e.jya) << ","
          << format_sexagesimal(e.arc) << "," << e.katapayadi << "\n";
  });

  // error-scan
  std::string es_step = "1";
  bool es_parallel = false;
  auto* error_scan =
      app.add_subcommand("error-scan", "relative error of the rational sine");
  error_scan->add_option("--step", es_step, "grid step in degrees");
  error_scan->add_flag("--parallel", es_parallel, "use the OpenMP kernel");
  error_scan->callback([&] {
    const Rat step = parse_decimal_rat(es_step);
    const ScanResult scan = es_parallel ? bhaskara_error_scan_parallel(step)
                                        : bhaskara_error_scan(step);
    if (cfg.format == "json") {
      ordered_json j;
      j["method"] = "error-scan";
      j["step_deg"] = es_step;
      j["parallel"] = es_parallel;
      j["rows"] = ordered_json::array();
      for (const ScanRow& row : scan.rows)
        j["rows"].push_back({{"x_deg", rat_decimal_str(row.x_deg, 12)},
                             {"approx", real_str(row.approx, 12)},
                             {"exact", real_str(row.exact, 12)},
                             {"rel_err_percent",
                              real_str(row.rel_err_percent, 12)}});
      j["max_abs_rel_err_percent"] =
          real_str(scan.max_abs_rel_err_percent, 12);
      j["argmax_deg"] = rat_decimal_str(scan.argmax_deg, 12);
      j["small_x_limit_percent"] = real_str(scan.small_x_limit_percent, 12);
      out << j.dump(2) << "\n";
      return;
    }
    out << "x_deg,approx,exact,rel_err_percent\n";
    for (const ScanRow& row : scan.rows)
      out << rat_decimal_str(row.x_deg, 12) << ","
          << real_str(row.approx, 12) << "," << real_str(row.exact, 12)
          << "," << real_str(row.rel_err_percent, 12) << "\n";
    out << "# max_abs_rel_err_percent,"
        << real_str(scan.max_abs_rel_err_percent, 12) << ",at_x_deg,"
        << rat_decimal_str(scan.argmax_deg, 12) << "\n";
    out << "# small_x_limit_percent,"
        << real_str(scan.small_x_limit_percent, 12) << "\n";
  });

  // coeffs
  int co_n = 5;
  int co_order = -1;
  bool co_gf_check = false;
  std::string co_t = "0.01";
  std::string co_x = "0.1";
  auto* coeffs_cmd = app.add_subcommand(
      "coeffs", "iteration coefficients against the ternary-tree sequence");
  coeffs_cmd->add_option("--n", co_n, "iteration count")
      ->check(CLI::Range(0, 64));
  coeffs_cmd->add_option("--order", co_order, "truncation grade (default n+2)");
  coeffs_cmd->add_flag("--gf-check", co_gf_check,
                       "compare the closed form against a 20-term sum");
  coeffs_cmd->add_option("--t", co_t, "gf check t");
  coeffs_cmd->add_option("--x", co_x, "gf check x");
  coeffs_cmd->callback([&] {
    const int order = co_order < 0 ? co_n + 2 : co_order;
    const std::vector<Int> coeffs = iterate_coeff_series(co_n, order);
    if (cfg.format == "json") {
      ordered_json j;
      j["method"] = "coeffs";
      j["n"] = co_n;
      j["order"] = order;
      j["rows"] = ordered_json::array();
      for (int a = 0; a <= order; ++a) {
        const Int expected = a001764(a);
        j["rows"].push_back({{"a", a},
                             {"coefficient", json_int(coeffs[a])},
                             {"a001764", json_int(expected)},
                             {"stabilized", coeffs[a] == expected}});
      }
      if (co_gf_check) {
        const Rat t = parse_decimal_rat(co_t);
        const Rat x = parse_decimal_rat(co_x);
        Rat partial = 0;
        Rat term = x;
        const Rat txx = t * x * x;
        for (int a = 0; a <= 20; ++a) {
          partial += Rat(a001764(a)) * term;
          term *= txx;
        }
        const Real closed = gf_closed_form(t, x);
        const Real diff = abs(closed - to_real(partial)) / abs(closed);
        j["gf_check"] = {{"t", co_t},
                         {"x", co_x},
                         {"closed_form", real_str(closed, 30)},
                         {"partial_sum_20", real_str(to_real(partial), 30)},
                         {"rel_diff", real_str(diff, 3)}};
      }
      out << j.dump(2) << "\n";
      return;
    }
    out << "a,coefficient,a001764,stabilized\n";
    for (int a = 0; a <= order; ++a) {
      const Int expected = a001764(a);
      out << a << "," << coeffs[a] << "," << expected << ","
          << (coeffs[a] == expected ? "yes" : "no") << "\n";
    }
    if (co_gf_check) {
      const Rat t = parse_decimal_rat(co_t);
      const Rat x = parse_decimal_rat(co_x);
      Rat partial = 0;
      Rat term = x;
      const Rat txx = t * x * x;
      for (int a = 0; a <= 20; ++a) {
        partial += Rat(a001764(a)) * term;
        term *= txx;
      }
      const Real closed = gf_closed_form(t, x);
      out << "closed_form," << real_str(closed, 30) << "\n";
      out << "partial_sum_20," << real_str(to_real(partial), 30) << "\n";
      out << "rel_diff," << real_str(abs(closed - to_real(partial)) / abs(closed), 3)
          << "\n";
    }
  });

  // convert
  std::string cv_value;
  std::string cv_to = "sexagesimal";
  auto* convert_cmd =
      app.add_subcommand("convert", "unit and format conversion");
  convert_cmd->add_option("--value", cv_value, "angle to convert")->required();
  convert_cmd->add_option("--to", cv_to, "target")
      ->check(CLI::IsMember({"thirds", "minutes", "degrees", "sexagesimal"}));
  convert_cmd->callback([&] {
    const Int radius = resolve_radius(cfg);
    const Rat thirds = angle_thirds(cv_value, cfg.unit);
    const Int rounded = round_rat(thirds);
    std::string text;
    if (cv_to == "sexagesimal")
      text = format_sexagesimal(rounded);
    else if (cv_to == "thirds")
      text = denominator(thirds) == 1 ? numerator(thirds).str()
                                      : rat_decimal_str(thirds, cfg.precision);
    else if (cv_to == "minutes")
      text = rat_decimal_str(thirds / 3600, cfg.precision);
    else
      text = rat_decimal_str(thirds / 216000, cfg.precision);
    if (cfg.format == "json") {
      ordered_json extra;
      extra["converted"] = text;
      extra["to"] = cv_to;
      emit_result(cfg, out, "convert", {{"value", cv_value}}, radius, rounded,
                  std::move(extra));
      return;
    }
    out << text << "\n";
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace capa::cli
