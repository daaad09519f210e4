#include "linkeuler/cli.hpp"

#include "linkeuler/bkss.hpp"
#include "linkeuler/combinatorics.hpp"
#include "linkeuler/conf_poincare.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace linkeuler::cli {

namespace {

using ojson = nlohmann::ordered_json;

// --- argument parsing ------------------------------------------------------

const std::map<std::string, Subcommand> kSubcommands = {
    {"euler", Subcommand::euler},       {"table", Subcommand::table},
    {"relative", Subcommand::relative}, {"verify", Subcommand::verify},
    {"growth", Subcommand::growth},     {"stirling", Subcommand::stirling},
};

const std::map<std::string, Format> kFormats = {
    {"text", Format::text}, {"csv", Format::csv}, {"json", Format::json}};

const std::map<std::string, SeriesKind> kSeries = {
    {"closed", SeriesKind::closed},
    {"summed", SeriesKind::summed},
    {"knot", SeriesKind::knot},
    {"relative", SeriesKind::relative}};

const std::map<std::string, Identity> kIdentityNames = {
    {"stirling-alternating", Identity::stirling_alternating},
    {"finite-difference", Identity::finite_difference},
    {"closed-form", Identity::closed_form},
    {"knot-product", Identity::knot_product}};

// Numbered labels accepted by `verify --prop/--lemma/--theorem/--corollary`.
const std::map<std::string, Identity> kIdentityLabels = {
    {"prop:5.2", Identity::stirling_alternating},
    {"lemma:5.3", Identity::finite_difference},
    {"theorem:5.1", Identity::closed_form},
    {"corollary:5.4", Identity::knot_product}};

const std::map<std::string, TriangleKind> kTriangles = {
    {"first", TriangleKind::first},
    {"second", TriangleKind::second},
    {"eulerian2", TriangleKind::eulerian2}};

std::string identity_name(Identity id) {
  for (const auto& [name, v] : kIdentityNames) {
    if (v == id) return name;
  }
  return "?";
}

std::string series_name(SeriesKind s) {
  for (const auto& [name, v] : kSeries) {
    if (v == s) return name;
  }
  return "?";
}

void require(bool cond, const std::string& message) {
  if (!cond) throw CommandLineError(message);
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Euler series of the E1 page for the cosimplicial model of long links",
               "linkeuler"};
  app.require_subcommand(1);

  Command cmd;
  std::string alpha_text;
  std::vector<std::string> identity_names;
  std::vector<std::string> prop_labels, lemma_labels, theorem_labels,
      corollary_labels;

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--dim,-N", cmd.dim, "ambient dimension N (>= 3)");
    sub->add_option("--ell,-l", cmd.ell, "number of strings (>= 1)");
    sub->add_option("--max-degree,-D", cmd.max_degree,
                    "truncation degree in x (inclusive)");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format,-f", cmd.format, "text, csv or json")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    sub->add_option("--output,-o", cmd.output, "write to this file");
  };

  auto* euler = app.add_subcommand("euler", "Euler series of the E1 page");
  add_model(euler);
  add_output(euler);
  euler->add_option("--series", cmd.series, "closed, summed or knot")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, SeriesKind>{{"closed", SeriesKind::closed},
                                            {"summed", SeriesKind::summed},
                                            {"knot", SeriesKind::knot}}));
  euler->add_flag("--bounds", cmd.bounds,
                  "add Tot(E2) lower-bound windows per degree");
  euler->add_option("--alpha", alpha_text,
                    "lower slope for the bounds (default: empirical)");
  euler->add_option("--p-max", cmd.p_max,
                    "columns used for the empirical slope");

  auto* table = app.add_subcommand("table", "E1 dimension table");
  add_model(table);
  add_output(table);
  table->add_option("--p-max", cmd.p_max, "largest column p");

  auto* relative = app.add_subcommand(
      "relative", "Euler series of the pair (links, product of knots)");
  add_model(relative);
  add_output(relative);

  auto* verify = app.add_subcommand("verify", "check identities exhaustively");
  add_model(verify);
  add_output(verify);
  verify->add_option("--identity", identity_names,
                     "stirling-alternating, finite-difference, closed-form, "
                     "knot-product (default: all)");
  verify->add_option("--prop", prop_labels, "numbered alias, e.g. 5.2");
  verify->add_option("--lemma", lemma_labels, "numbered alias, e.g. 5.3");
  verify->add_option("--theorem", theorem_labels, "numbered alias, e.g. 5.1");
  verify->add_option("--corollary", corollary_labels,
                     "numbered alias, e.g. 5.4");
  verify->add_option("--ell-max", cmd.ell_max, "largest ell checked");
  verify->add_option("--j-max", cmd.j_max, "largest lattice index j checked");
  verify->add_option("--d-max", cmd.d_max,
                     "largest rising-product degree checked");
  verify->add_option("--samples", cmd.samples, "random polynomials checked");
  verify->add_option("--seed", cmd.seed, "seed for the random polynomials");

  auto* growth = app.add_subcommand("growth", "exponential growth estimate");
  add_model(growth);
  add_output(growth);
  growth->add_option("--tail", cmd.tail, "number of trailing ratios averaged");
  auto* growth_series = growth->add_option("--series", cmd.series,
                     "relative (default), closed, summed or knot")
      ->transform(CLI::CheckedTransformer(kSeries));

  auto* stirling = app.add_subcommand("stirling", "Stirling-type triangles");
  add_output(stirling);
  stirling->add_option("--kind", cmd.triangle, "first, second or eulerian2")
      ->transform(CLI::CheckedTransformer(kTriangles));
  stirling->add_option("--n-max", cmd.n_max, "largest row");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw CommandLineError(e.what());
  }

  for (const auto* sub : app.get_subcommands()) {
    cmd.subcommand = kSubcommands.at(sub->get_name());
  }
  if (cmd.subcommand == Subcommand::growth && growth_series->count() == 0) {
    cmd.series = SeriesKind::relative;
  }

  require(cmd.dim >= 3, "--dim: N must be >= 3 (got " +
                            std::to_string(cmd.dim) + ")");
  require(cmd.ell >= 1, "--ell: ell must be >= 1 (got " +
                            std::to_string(cmd.ell) + ")");
  require(cmd.p_max >= 0, "--p-max: must be >= 0");
  require(cmd.tail >= 1, "--tail: must be >= 1");
  require(cmd.ell_max >= 1, "--ell-max: must be >= 1");
  require(cmd.j_max >= 1, "--j-max: must be >= 1");
  require(cmd.d_max >= 0, "--d-max: must be >= 0");
  require(cmd.samples >= 0, "--samples: must be >= 0");
  require(cmd.n_max >= 0, "--n-max: must be >= 0");
  if (!alpha_text.empty()) {
    try {
      cmd.alpha = parse_rational(alpha_text);
    } catch (const UsageError& e) {
      throw CommandLineError(std::string("--alpha: ") + e.what());
    }
    require(*cmd.alpha > 1, "--alpha: lower slope must be > 1 (got " +
                                alpha_text + ")");
  }

  for (const auto& name : identity_names) {
    auto it = kIdentityNames.find(name);
    require(it != kIdentityNames.end(), "--identity: unknown identity '" + name + "'");
    cmd.identities.push_back(it->second);
  }
  auto add_labels = [&](const std::vector<std::string>& labels,
                        const std::string& kind) {
    for (const auto& label : labels) {
      auto it = kIdentityLabels.find(kind + ":" + label);
      require(it != kIdentityLabels.end(),
              "--" + kind + ": unknown label '" + label + "'");
      cmd.identities.push_back(it->second);
    }
  };
  add_labels(prop_labels, "prop");
  add_labels(lemma_labels, "lemma");
  add_labels(theorem_labels, "theorem");
  add_labels(corollary_labels, "corollary");
  if (cmd.subcommand == Subcommand::verify && cmd.identities.empty()) {
    cmd.identities = {Identity::closed_form, Identity::stirling_alternating,
                      Identity::finite_difference, Identity::knot_product};
  }
  return cmd;
}

// --- report construction ---------------------------------------------------

namespace {

ojson model_params(const Command& cmd) {
  ojson p = ojson::object();
  p["N"] = cmd.dim;
  p["ell"] = cmd.ell;
  p["max_degree"] = cmd.max_degree;
  return p;
}

// Degree 0 and every multiple of N-1 up to the truncation degree.
Table lattice_rows(const TruncatedSeries& s, std::size_t step) {
  Table t{{"degree", "coefficient"}, {}};
  for (std::size_t d = 0; d <= s.trunc_degree(); d += step) {
    t.rows.push_back({static_cast<std::int64_t>(d), s.coeff(d)});
  }
  return t;
}

Report euler_report(const Command& cmd) {
  const ModelParams params(cmd.dim, cmd.ell);
  Report r;
  r.params = model_params(cmd);
  r.params["series"] = series_name(cmd.series);

  TruncatedSeries series = TruncatedSeries::zero(cmd.max_degree);
  if (cmd.series == SeriesKind::knot) {
    r.title = "Euler series of the E1 page, ell-fold product of knot models";
    series = knot_power_series(params, cmd.max_degree);
  } else {
    r.title = "Euler series of the E1 page, long links";
    const auto report = euler_series_report(params, cmd.max_degree);
    series = cmd.series == SeriesKind::summed ? report.summed : report.closed;
    r.meta["summed_equals_closed"] = report.agree;
    if (!report.agree) {
      r.ok = false;
      r.notes.push_back("summed and closed forms disagree");
    }
  }
  r.data = lattice_rows(series, params.lattice_step());

  if (cmd.bounds) {
    Rational alpha;
    if (cmd.alpha) {
      alpha = *cmd.alpha;
      r.meta["alpha_source"] = "given";
    } else {
      alpha = empirical_slopes(e1_table(cmd.p_max, params)).lower;
      r.meta["alpha_source"] =
          "empirical lower slope, p_max = " + std::to_string(cmd.p_max);
      if (alpha <= 1) {
        throw UsageError("empirical lower slope " + to_string(alpha) +
                         " is not > 1; pass --alpha");
      }
    }
    r.meta["alpha"] = to_string(alpha);
    r.data.columns = {"degree", "coefficient", "window_lo", "window_hi"};
    for (auto& row : r.data.rows) {
      const auto n = std::get<std::int64_t>(row[0]);
      const auto b = tot_lower_bound(n, alpha, series);
      row.emplace_back(b.window_lo);
      row.emplace_back(b.window_hi);
    }
  }
  return r;
}

Report relative_report(const Command& cmd) {
  const ModelParams params(cmd.dim, cmd.ell);
  Report r;
  r.title = "Euler series of the pair (long links, ell-fold product of knots)";
  r.params = model_params(cmd);
  const auto series = relative_series(params, cmd.max_degree);
  if (series.poly().is_zero()) {
    const std::string note =
        "pair is trivial for ell=" + std::to_string(cmd.ell);
    r.data = Table{{"degree", "coefficient"}, {}};
    r.csv = Table{{"degree", "coefficient"}, {{std::string("ALL"), std::int64_t{0}}}};
    r.text_lines = {"ALL 0", "note: " + note};
    r.meta["note"] = note;
    r.notes.push_back(note);
    return r;
  }
  r.data = lattice_rows(series, params.lattice_step());
  return r;
}

Report table_report(const Command& cmd) {
  const ModelParams params(cmd.dim, cmd.ell);
  const auto table = e1_table(cmd.p_max, params);
  Report r;
  r.title = "E1 page dimensions dim E1^{p,q}";
  r.params = model_params(cmd);
  r.params.erase("max_degree");
  r.params["p_max"] = cmd.p_max;
  r.data.columns = {"p", "q", "dim"};
  r.key_columns = 2;
  std::int64_t q_top = 0;
  for (const auto& e : table.nonzero_entries()) {
    r.data.rows.push_back({e.p, e.q, e.dim});
    q_top = std::max(q_top, e.q);
  }
  try {
    const auto slopes = empirical_slopes(table);
    r.meta["lower_slope"] = to_string(slopes.lower);
    r.meta["upper_slope"] = to_string(slopes.upper);
  } catch (const UndefinedSlopeError&) {
    r.meta["lower_slope"] = nullptr;
    r.meta["upper_slope"] = nullptr;
  }

  // Text: grid of lattice degrees q (rows) against columns p.
  const std::int64_t step = cmd.dim - 1;
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{"q\\p"};
  for (std::int64_t p = 0; p <= cmd.p_max; ++p) head.push_back(std::to_string(p));
  grid.push_back(head);
  for (std::int64_t q = 0; q <= q_top; q += step) {
    std::vector<std::string> line{std::to_string(q)};
    for (std::int64_t p = 0; p <= cmd.p_max; ++p) {
      const ExactInt d = table.dim(p, q);
      line.push_back(d.is_zero() ? "." : to_string(d));
    }
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      width[i] = std::max(width[i], line[i].size());
    }
  }
  for (const auto& line : grid) {
    std::string s;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) s += "  ";
      s += std::string(width[i] - line[i].size(), ' ') + line[i];
    }
    r.text_lines.push_back(s);
  }
  if (!r.meta["lower_slope"].is_null()) {
    r.text_lines.push_back("lower slope " + r.meta["lower_slope"].get<std::string>() +
                           ", upper slope " +
                           r.meta["upper_slope"].get<std::string>());
  }
  return r;
}

Report growth_report(const Command& cmd) {
  const ModelParams params(cmd.dim, cmd.ell);
  TruncatedSeries series = TruncatedSeries::zero(cmd.max_degree);
  switch (cmd.series) {
    case SeriesKind::closed:
      series = euler_series_closed(params, cmd.max_degree);
      break;
    case SeriesKind::summed:
      series = euler_series_summed(params, cmd.max_degree);
      break;
    case SeriesKind::knot:
      series = knot_power_series(params, cmd.max_degree);
      break;
    case SeriesKind::relative:
      series = relative_series(params, cmd.max_degree);
      break;
  }
  const auto est = growth_rate(series, cmd.dim, cmd.tail);

  Report r;
  r.title = "Growth of lattice coefficients";
  r.params = model_params(cmd);
  r.params["series"] = series_name(cmd.series);
  r.params["tail"] = cmd.tail;
  const std::size_t step = params.lattice_step();
  const std::size_t last = series.trunc_degree() / step;
  r.data.columns = {"degree", "coefficient"};
  for (std::size_t j = last - cmd.tail; j <= last; ++j) {
    r.data.rows.push_back({static_cast<std::int64_t>(j * step), series.coeff(j * step)});
  }
  r.meta["u_ratio"] = est.u_ratio;
  r.meta["x_rate"] = est.x_rate;
  r.csv = Table{{"u_ratio", "x_rate"}, {{est.u_ratio, est.x_rate}}};
  return r;
}

struct CaseResult {
  std::vector<std::int64_t> key;
  ExactInt lhs;
  ExactInt rhs;
  bool ok;
};

std::vector<CaseResult> check_identity(Identity id, const Command& cmd) {
  std::vector<CaseResult> out;
  switch (id) {
    case Identity::stirling_alternating:
      for (std::int64_t ell = 1; ell <= cmd.ell_max; ++ell) {
        for (std::int64_t j = 1; j <= cmd.j_max; ++j) {
          const auto rep = verify_stirling_alternating_identity(ell, j);
          out.push_back({{ell, j}, rep.lhs, rep.rhs, rep.ok});
        }
      }
      break;
    case Identity::finite_difference: {
      for (std::int64_t d = 0; d <= cmd.d_max; ++d) {
        const auto q = rising_product(static_cast<std::size_t>(d));
        const auto rep = verify_finite_difference_sum(q.coeffs());
        // s(x) must equal d! (1 - x)^d
        IntPolynomial expected = IntPolynomial::constant(1, Var::x);
        ExactInt fact = 1;
        for (std::int64_t i = 1; i <= d; ++i) {
          expected = expected * IntPolynomial({1, -1}, Var::x);
          fact *= i;
        }
        expected *= fact;
        out.push_back({{d}, rep.total, rep.q_at_minus_one,
                       rep.ok && rep.s_poly == expected});
      }
      std::mt19937_64 rng(cmd.seed);
      std::uniform_int_distribution<int> degree(0, 10);
      std::uniform_int_distribution<int> coeff(-9, 9);
      for (std::int64_t i = 0; i < cmd.samples; ++i) {
        std::vector<ExactInt> q(static_cast<std::size_t>(degree(rng)) + 1);
        for (auto& c : q) c = coeff(rng);
        const auto rep = verify_finite_difference_sum(q);
        out.push_back({{cmd.d_max + 1 + i}, rep.total, rep.q_at_minus_one, rep.ok});
      }
      break;
    }
    case Identity::closed_form:
      for (std::int64_t ell = 1; ell <= cmd.ell_max; ++ell) {
        const ModelParams params(cmd.dim, ell);
        const auto rep = euler_series_report(params, cmd.max_degree);
        for (std::size_t d = 0; d <= cmd.max_degree; d += params.lattice_step()) {
          out.push_back({{ell, static_cast<std::int64_t>(d)}, rep.summed.coeff(d),
                         rep.closed.coeff(d),
                         rep.summed.coeff(d) == rep.closed.coeff(d)});
        }
      }
      break;
    case Identity::knot_product:
      for (std::int64_t ell = 1; ell <= cmd.ell_max; ++ell) {
        const ModelParams params(cmd.dim, ell);
        const std::size_t step = params.lattice_step();
        const auto s = knot_power_series(params, static_cast<std::size_t>(cmd.j_max) * step);
        for (std::int64_t j = 0; j <= cmd.j_max; ++j) {
          const ExactInt lhs = s.coeff(static_cast<std::size_t>(j) * step);
          const ExactInt rhs = binomial(j + ell - 1, ell - 1);
          out.push_back({{ell, j}, lhs, rhs, lhs == rhs});
        }
      }
      break;
  }
  return out;
}

std::string key_label(Identity id) {
  switch (id) {
    case Identity::stirling_alternating:
      return "ell,j";
    case Identity::finite_difference:
      return "case";
    case Identity::closed_form:
      return "ell,degree";
    case Identity::knot_product:
      return "ell,j";
  }
  return "case";
}

Report verify_report(const Command& cmd) {
  Report r;
  r.title = "Identity verification";
  r.params = model_params(cmd);
  r.params["ell_max"] = cmd.ell_max;
  r.params["j_max"] = cmd.j_max;
  r.params["d_max"] = cmd.d_max;
  r.params["samples"] = cmd.samples;
  r.params["seed"] = cmd.seed;
  r.data.columns = {"identity", "case", "lhs", "rhs", "ok"};
  r.key_columns = 2;

  std::size_t passed = 0;
  std::size_t total = 0;
  ojson per_identity = ojson::object();
  for (const auto id : cmd.identities) {
    const auto cases = check_identity(id, cmd);
    std::size_t ok_here = 0;
    for (const auto& c : cases) {
      std::string key;
      for (std::size_t i = 0; i < c.key.size(); ++i) {
        key += (i ? ":" : "") + std::to_string(c.key[i]);
      }
      r.data.rows.push_back({identity_name(id), key, c.lhs, c.rhs,
                             std::int64_t{c.ok ? 1 : 0}});
      if (c.ok) {
        ++ok_here;
      } else {
        r.text_lines.push_back("FAIL " + identity_name(id) + " " + key_label(id) +
                               "=" + key + " lhs=" + to_string(c.lhs) +
                               " rhs=" + to_string(c.rhs));
      }
    }
    per_identity[identity_name(id)] = {{"passed", ok_here}, {"total", cases.size()}};
    passed += ok_here;
    total += cases.size();
  }
  r.ok = passed == total;
  r.meta["identities"] = per_identity;
  r.meta["passed"] = passed;
  r.meta["total"] = total;
  r.meta["ok"] = r.ok;
  r.text_lines.push_back(std::string(r.ok ? "OK " : "FAIL ") +
                         std::to_string(passed) + "/" + std::to_string(total) +
                         " cases");
  return r;
}

Report stirling_report(const Command& cmd) {
  Report r;
  r.params = ojson::object();
  r.data.columns = {"n", "k", "value"};
  r.key_columns = 2;
  for (std::int64_t n = 0; n <= cmd.n_max; ++n) {
    switch (cmd.triangle) {
      case TriangleKind::first:
        for (std::int64_t k = 0; k <= n; ++k) r.data.rows.push_back({n, k, stirling1(n, k)});
        break;
      case TriangleKind::second:
        for (std::int64_t k = 0; k <= n; ++k) r.data.rows.push_back({n, k, stirling2(n, k)});
        break;
      case TriangleKind::eulerian2:
        for (std::int64_t i = 0; i < std::max<std::int64_t>(n, 1); ++i) {
          r.data.rows.push_back({n, i, eulerian2(n, i)});
        }
        break;
    }
  }
  switch (cmd.triangle) {
    case TriangleKind::first:
      r.title = "Stirling numbers of the first kind [n; k]";
      r.params["kind"] = "first";
      break;
    case TriangleKind::second:
      r.title = "Stirling numbers of the second kind {n; k}";
      r.params["kind"] = "second";
      break;
    case TriangleKind::eulerian2:
      r.title = "Second-order Eulerian numbers <<n>>_i";
      r.params["kind"] = "eulerian2";
      break;
  }
  r.params["n_max"] = cmd.n_max;
  return r;
}

// --- rendering -------------------------------------------------------------

std::string format_double(double v) { return ojson(v).dump(); }

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, ExactInt>) {
          return to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else {
          return v;
        }
      },
      c);
}

std::string cell_json(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return ojson(*s).dump();
  return cell_text(c);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out += (i ? "," : "") + csv_field(t.columns[i]);
  }
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += (i ? "," : "") + csv_field(cell_text(row[i]));
    }
    out += "\n";
  }
  return out;
}

std::string json_group(const Row& row, std::size_t from, std::size_t to) {
  if (to - from == 1) return cell_json(row[from]);
  std::string s = "[";
  for (std::size_t i = from; i < to; ++i) {
    s += (i > from ? "," : "") + cell_json(row[i]);
  }
  return s + "]";
}

std::string render_json(const Report& r) {
  std::string degrees = "[";
  std::string coeffs = "[";
  for (std::size_t i = 0; i < r.data.rows.size(); ++i) {
    const auto& row = r.data.rows[i];
    const std::string sep = i ? "," : "";
    degrees += sep + json_group(row, 0, r.key_columns);
    coeffs += sep + json_group(row, r.key_columns, row.size());
  }
  degrees += "]";
  coeffs += "]";
  std::string out = "{\n";
  out += "  \"params\": " + r.params.dump() + ",\n";
  out += "  \"degrees\": " + degrees + ",\n";
  out += "  \"coefficients\": " + coeffs + ",\n";
  out += "  \"meta\": " + r.meta.dump() + "\n";
  out += "}\n";
  return out;
}

std::string render_text(const Report& r) {
  std::string out;
  if (!r.title.empty()) out += "# " + r.title + "\n";
  if (!r.params.empty()) {
    std::string line = "#";
    for (const auto& [k, v] : r.params.items()) {
      line += " " + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    out += line + "\n";
  }
  if (!r.text_lines.empty()) {
    for (const auto& l : r.text_lines) out += l + "\n";
  } else {
    std::vector<std::size_t> width(r.data.columns.size(), 0);
    std::vector<std::vector<std::string>> cells;
    cells.push_back(r.data.columns);
    for (const auto& row : r.data.rows) {
      std::vector<std::string> c;
      for (const auto& cell : row) c.push_back(cell_text(cell));
      cells.push_back(std::move(c));
    }
    for (const auto& row : cells) {
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
        width[i] = std::max(width[i], row[i].size());
      }
    }
    for (const auto& row : cells) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) line += "  ";
        line += std::string(width[i] - row[i].size(), ' ') + row[i];
      }
      out += line + "\n";
    }
    if (r.meta.size()) {
      for (const auto& [k, v] : r.meta.items()) {
        out += k + " = " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
      }
    }
  }
  return out;
}

}  // namespace

Report build_report(const Command& cmd) {
  switch (cmd.subcommand) {
    case Subcommand::euler:
      return euler_report(cmd);
    case Subcommand::table:
      return table_report(cmd);
    case Subcommand::relative:
      return relative_report(cmd);
    case Subcommand::verify:
      return verify_report(cmd);
    case Subcommand::growth:
      return growth_report(cmd);
    case Subcommand::stirling:
      return stirling_report(cmd);
  }
  throw UsageError("unknown subcommand");
}

std::string render(const Report& report, Format format) {
  switch (format) {
    case Format::text:
      return render_text(report);
    case Format::csv:
      return render_csv(report.csv ? *report.csv : report.data);
    case Format::json:
      return render_json(report);
  }
  return {};
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  const bool uses_model = cmd.subcommand != Subcommand::stirling;
  if (uses_model && cmd.dim == 3) {
    err << "warning: N = 3; the slope and growth statements require N >= 4\n";
  }
  Report report;
  try {
    report = build_report(cmd);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  const std::string text = render(report, cmd.format);
  if (cmd.format != Format::text) {
    for (const auto& n : report.notes) err << "note: " << n << "\n";
  } else {
    for (const auto& n : report.notes) {
      if (std::find(report.text_lines.begin(), report.text_lines.end(),
                    "note: " + n) == report.text_lines.end()) {
        err << "note: " << n << "\n";
      }
    }
  }
  if (cmd.output) {
    std::ofstream file(*cmd.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *cmd.output << " for writing\n";
      return 1;
    }
    file << text;
  } else {
    out << text;
  }
  return report.ok ? 0 : 1;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const CommandLineError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  return run(cmd, out, err);
}

}  // namespace linkeuler::cli
