#pragma once

// The csl command line. run_cli is separate from main so tests can drive it
// with captured streams.

#include "csl/csl.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace csl::cli {

struct GlobalConfig {
  double abs_tol = 1e-10;
  std::size_t max_terms = 200000;
  int quad_order = 64;
  bool json = false;
};

/// Domain or convergence failure; maps to exit 3.
struct RuntimeFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string fmt_text(double v) { return detail::fmt_double(v, 12); }

inline void print_json(std::ostream& out, Json j) {
  j["schema_version"] = "1";
  out << dump_json(j);
}

inline WeightKind parse_weight_kind(const std::string& s) {
  if (s == "plain") return WeightKind::Plain;
  if (s == "power") return WeightKind::Power;
  if (s == "fib") return WeightKind::Fib;
  if (s == "luc") return WeightKind::Luc;
  if (s == "integrated") return WeightKind::Integrated;
  if (s == "sprugnoli") return WeightKind::Sprugnoli;
  throw std::invalid_argument("unknown weight kind '" + s + "'");
}

/// WeightSpec from a JSON object; unknown keys are rejected.
inline WeightSpec parse_weight_spec(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("sum spec must be a JSON object");
  static const std::vector<std::string> known = {"kind", "family", "m", "z", "r", "s", "scaling", "start"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(known.begin(), known.end(), it.key()) == known.end())
      throw std::invalid_argument("unknown sum spec key '" + it.key() + "'");
  WeightSpec w;
  if (j.contains("kind")) w.kind = parse_weight_kind(j.at("kind").get<std::string>());
  if (j.contains("family")) {
    const auto f = j.at("family").get<std::string>();
    if (f == "g")
      w.family = SeriesFamily::G;
    else if (f == "f")
      w.family = SeriesFamily::F;
    else
      throw std::invalid_argument("family must be 'g' or 'f'");
  }
  if (j.contains("m")) w.m = j.at("m").get<unsigned>();
  if (j.contains("z")) w.z = j.at("z").get<double>();
  if (j.contains("r")) w.r = j.at("r").get<int>();
  if (j.contains("s")) w.s = j.at("s").get<int>();
  if (j.contains("scaling")) {
    const auto s = j.at("scaling").get<std::string>();
    if (s == "unit")
      w.scaling = FibScaling::Unit;
    else if (s == "lucas_power")
      w.scaling = FibScaling::LucasPower;
    else
      throw std::invalid_argument("scaling must be 'unit' or 'lucas_power'");
  }
  if (j.contains("start")) w.start = j.at("start").get<unsigned>();
  if (w.start > 1) throw std::invalid_argument("start must be 0 or 1");
  return w;
}

inline Json load_spec_text(const std::string& arg) {
  std::string text = arg;
  if (arg.find('{') == std::string::npos) {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot read sum spec file '" + arg + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("sum spec is not valid JSON: ") + e.what());
  }
}

inline FibKind parse_fib_kind(const std::string& s) {
  if (s == "F") return FibKind::F;
  if (s == "L") return FibKind::L;
  throw std::invalid_argument("kind must be F or L");
}

/// Returns the process exit code: 0 ok, 1 verify FAIL, 2 usage, 3 domain/convergence.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate and cross-check reciprocal Catalan series g_m(z) = sum 4^n n^m z^n / ((2n+1) C_n).", "csl"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalConfig g;
  app.add_option("--abs-tol", g.abs_tol, "Series truncation tolerance")->envname("CSL_ABS_TOL")->capture_default_str();
  app.add_option("--max-terms", g.max_terms, "Series term cap")->envname("CSL_MAX_TERMS")->capture_default_str();
  app.add_option("--quad-order", g.quad_order, "Gauss-Legendre starting order")
      ->envname("CSL_QUAD_ORDER")
      ->capture_default_str();
  app.add_flag("--json", g.json, "Emit one JSON document")->envname("CSL_JSON");

  // eval
  std::string eval_what = "g";
  unsigned eval_m = 0;
  double eval_z = 0.0;
  bool eval_series = false;
  auto* eval = app.add_subcommand("eval", "Evaluate a closed form (or its series with --series)");
  eval->add_option("--what", eval_what, "g | f | sprugnoli | integrated | trig0 | trig1 | kernel")->capture_default_str();
  eval->add_option("--m", eval_m, "Order m of g_m")->capture_default_str();
  eval->add_option("--z", eval_z, "Argument")->required();
  eval->add_flag("--series", eval_series, "Sum the series instead of the closed form");

  // poly
  unsigned poly_m = 0;
  std::string poly_method = "recursive";
  bool poly_q = false;
  auto* poly = app.add_subcommand("poly", "Print the exact polynomials P1, P2 (or Q with --q)");
  poly->add_option("--m", poly_m, "Order")->required();
  poly->add_option("--method", poly_method, "recursive | closed")->capture_default_str();
  poly->add_flag("--q", poly_q, "Print the integral kernel Q_m(u)");

  // sum
  std::string sum_spec;
  auto* sum = app.add_subcommand("sum", "Sum a weighted series from a JSON spec (inline or file)");
  sum->add_option("--spec", sum_spec, "JSON object or path: kind, family, m, z, r, s, scaling, start")->required();

  // fib
  int fib_theorem = 1;
  std::string fib_kind = "F";
  int fib_r = 2, fib_s = 0;
  auto* fib = app.add_subcommand("fib", "Fibonacci/Lucas closed forms against their series");
  fib->add_option("--theorem", fib_theorem, "1, 2 or 3")->check(CLI::Range(1, 3))->capture_default_str();
  fib->add_option("--kind", fib_kind, "F | L")->capture_default_str();
  fib->add_option("--r", fib_r, "Even index step (theorem 3)")->capture_default_str();
  fib->add_option("--s", fib_s, "Index shift")->capture_default_str();

  // integrate
  std::string int_what = "g";
  unsigned int_m = 0;
  double int_z = 0.0;
  std::optional<int> int_order;
  auto* integ = app.add_subcommand("integrate", "Finite-interval integral representation");
  integ->add_option("--what", int_what, "g | f")->capture_default_str();
  integ->add_option("--m", int_m, "Order m of g_m")->capture_default_str();
  integ->add_option("--z", int_z, "Argument")->required();
  integ->add_option("--order", int_order, "Starting Gauss-Legendre order (default --quad-order)");

  // mellin
  unsigned mel_m = 0;
  double mel_z = 0.0;
  ImproperIntegralConfig mel_cfg;
  auto* mel = app.add_subcommand("mellin", "Bessel-kernel representation of g_m");
  mel->add_option("--m", mel_m, "Order m of g_m")->capture_default_str();
  mel->add_option("--z", mel_z, "Argument in (0, 0.9]")->required();
  mel->add_option("--cutoff", mel_cfg.upper_cutoff, "Outer cutoff U (0 = automatic)")->capture_default_str();
  mel->add_option("--order", mel_cfg.order, "Panel rule order")->capture_default_str();

  // verify
  std::string ver_filter, ver_format = "json", ver_out;
  int ver_jobs = 1;
  bool ver_timing = false;
  auto* ver = app.add_subcommand("verify", "Run the identity registry");
  ver->add_option("--filter", ver_filter, "Tag (s1..s6) or id glob");
  ver->add_option("--format", ver_format, "json | csv | markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  ver->add_option("--out", ver_out, "Write the report here instead of stdout");
  ver->add_option("--jobs", ver_jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  ver->add_flag("--timing", ver_timing, "Include runtime_ms per case (breaks byte-stability)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    if (e.get_exit_code() != 0) err << app.help();
    return 2;
  }

  try {
    if (!(g.abs_tol > 0)) throw CLI::ValidationError("--abs-tol", "must be positive");
    if (g.max_terms < 1) throw CLI::ValidationError("--max-terms", "must be positive");

    if (*eval) {
      double v = 0.0;
      Json extra;
      if (eval_series) {
        SeriesResult r;
        if (eval_what == "g")
          r = sum_g(eval_m, eval_z, g.abs_tol, g.max_terms);
        else if (eval_what == "f")
          r = sum_f(eval_z, g.abs_tol, g.max_terms);
        else if (eval_what == "sprugnoli")
          r = sum_sprugnoli(eval_z, g.abs_tol, g.max_terms);
        else if (eval_what == "integrated")
          r = sum_integrated(eval_z, g.abs_tol, g.max_terms);
        else
          throw CLI::ValidationError("--what", "--series supports g, f, sprugnoli, integrated");
        if (!r.converged)
          throw RuntimeFailure("series did not reach tolerance within " + std::to_string(g.max_terms) + " terms");
        v = r.value;
        extra = {{"tail_bound", r.tail_bound}, {"terms_used", r.terms_used}};
      } else if (eval_what == "g") {
        v = g_closed(eval_m, eval_z);
      } else if (eval_what == "f") {
        v = f_closed(eval_z);
      } else if (eval_what == "sprugnoli") {
        v = sprugnoli_closed(eval_z);
      } else if (eval_what == "integrated") {
        v = integrated_closed(eval_z);
      } else if (eval_what == "trig0" || eval_what == "trig1") {
        v = g_trig(eval_what == "trig0" ? 0 : 1, eval_z);
      } else if (eval_what == "kernel") {
        v = kernel_a(eval_z);
      } else {
        throw CLI::ValidationError("--what", "unknown function '" + eval_what + "'");
      }
      if (g.json) {
        Json j{{"command", "eval"}, {"what", eval_what}, {"m", eval_m}, {"z", eval_z}, {"value", v},
               {"method", eval_series ? "series" : "closed"}};
        if (!extra.is_null()) j.update(extra);
        print_json(out, j);
      } else {
        out << fmt_text(v) << "\n";
      }
      return 0;
    }

    if (*poly) {
      if (poly_method != "recursive" && poly_method != "closed")
        throw CLI::ValidationError("--method", "must be recursive or closed");
      const bool closed = poly_method == "closed";
      if (poly_q) {
        const auto q = closed ? q_kernel_closed(poly_m) : q_kernel(poly_m);
        if (g.json)
          print_json(out, {{"command", "poly"}, {"m", poly_m}, {"method", poly_method}, {"q", q.q.to_string('u')}});
        else
          out << "Q_" << poly_m << "(u) = " << q.q.to_string('u') << "\n";
      } else {
        const auto p = closed ? p_pair_closed(poly_m) : p_pair_recursive(poly_m);
        if (g.json)
          print_json(out, {{"command", "poly"}, {"m", poly_m}, {"method", poly_method}, {"p1", p.p1.to_string('z')},
                           {"p2", p.p2.to_string('z')}});
        else
          out << "P1_" << poly_m << "(z) = " << p.p1.to_string('z') << "\nP2_" << poly_m
              << "(z) = " << p.p2.to_string('z') << "\n";
      }
      return 0;
    }

    if (*sum) {
      const WeightSpec w = parse_weight_spec(load_spec_text(sum_spec));
      const SeriesResult r = sum_weighted(w, g.abs_tol, g.max_terms);
      if (g.json)
        print_json(out, {{"command", "sum"},
                         {"value", r.value},
                         {"tail_bound", r.tail_bound},
                         {"rounding_bound", r.rounding_bound},
                         {"terms_used", r.terms_used},
                         {"converged", r.converged}});
      else
        out << fmt_text(r.value) << "  (tail <= " << detail::fmt_double(r.tail_bound, 3) << ", " << r.terms_used
            << " terms)\n";
      if (!r.converged)
        throw RuntimeFailure("series did not reach tolerance within " + std::to_string(g.max_terms) + " terms");
      return 0;
    }

    if (*fib) {
      const FibKind k = parse_fib_kind(fib_kind);
      ClosedValue cv;
      WeightSpec w;
      if (fib_theorem == 1) {
        cv = thm1_rhs(k, fib_s);
        w = thm1_series(k, fib_s);
      } else if (fib_theorem == 2) {
        cv = thm2_rhs(k, fib_s);
        w = thm2_series(k, fib_s);
      } else {
        cv = thm3_rhs(k, fib_r, fib_s);
        w = thm3_series(k, fib_r, fib_s);
      }
      const SeriesResult r = sum_weighted(w, g.abs_tol, g.max_terms);
      if (!r.converged)
        throw RuntimeFailure("series did not reach tolerance within " + std::to_string(g.max_terms) + " terms");
      if (g.json)
        print_json(out, {{"command", "fib"}, {"theorem", fib_theorem}, {"kind", fib_kind}, {"r", fib_r},
                         {"s", fib_s}, {"closed_form", cv.to_string()}, {"closed_value", cv.value()},
                         {"series_value", r.value}, {"abs_delta", std::abs(cv.value() - r.value)}});
      else
        out << cv.to_string() << "\nclosed " << fmt_text(cv.value()) << "\nseries " << fmt_text(r.value)
            << "\n|delta| " << detail::fmt_double(std::abs(cv.value() - r.value), 3) << "\n";
      return 0;
    }

    if (*integ) {
      const int order = int_order.value_or(g.quad_order);
      IntegralResult r;
      if (int_what == "g")
        r = g_integral(int_m, int_z, order);
      else if (int_what == "f")
        r = f_integral(int_z, order);
      else
        throw CLI::ValidationError("--what", "must be g or f");
      if (g.json)
        print_json(out, {{"command", "integrate"}, {"what", int_what}, {"m", int_m}, {"z", int_z}, {"value", r.value},
                         {"estimated_error", r.estimated_error}, {"nodes_used", r.nodes_used}});
      else
        out << fmt_text(r.value) << "  (error estimate " << detail::fmt_double(r.estimated_error, 3) << ")\n";
      return 0;
    }

    if (*mel) {
      const IntegralResult r = g_mellin(mel_m, mel_z, mel_cfg);
      if (g.json)
        print_json(out, {{"command", "mellin"}, {"m", mel_m}, {"z", mel_z}, {"value", r.value},
                         {"estimated_error", r.estimated_error}});
      else
        out << fmt_text(r.value) << "  (error estimate " << detail::fmt_double(r.estimated_error, 3) << ")\n";
      return 0;
    }

    if (*ver) {
      const auto registry = filter_registry(default_registry(), ver_filter);
      VerificationReport rep = run(registry, ver_jobs);
      rep.config = Json{{"filter", ver_filter}, {"cases", registry.size()}};
      const ReportFormat fmt = report_format_from_string(ver_format);
      EmitOptions opt;
      opt.include_timing = ver_timing;
      if (ver_out.empty())
        emit(rep, fmt, out, opt);
      else
        emit(rep, fmt, ver_out, opt);
      err << "verify: " << rep.summary.pass << " pass, " << rep.summary.fail << " fail, "
          << rep.summary.paper_discrepancy << " paper-discrepancy, " << rep.summary.skipped << " skipped\n";
      return rep.ok() ? 0 : 1;
    }
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const NotConverged& e) {
    err << "not converged: " << e.what() << "\n";
    return 3;
  } catch (const RuntimeFailure& e) {
    err << "not converged: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace csl::cli
