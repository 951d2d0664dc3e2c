#pragma once

// Identity registry, cross-method runner and report emitters.

#include "csl/analytic_eval.hpp"
#include "csl/bessel_mellin.hpp"
#include "csl/closed_value.hpp"
#include "csl/errors.hpp"
#include "csl/exact_core.hpp"
#include "csl/fibonacci_closed.hpp"
#include "csl/poly_engine.hpp"
#include "csl/quadrature.hpp"
#include "csl/series_oracle.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fnmatch.h>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace csl {

using Json = nlohmann::json;
using Evaluator = std::function<std::vector<double>()>;

struct IdentityCase {
  std::string id;
  std::string lhs_method;
  std::string rhs_method;
  Json params = Json::object();
  double abs_tol = 1e-10;
  double rel_tol = 1e-14;
  std::vector<std::string> tags;
  bool discrepancy_channel = false;  // failure reads as PAPER-DISCREPANCY, not FAIL
  Evaluator lhs;
  Evaluator rhs;
};

enum class Classification { Pass, Fail, PaperDiscrepancy, Skipped };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::Pass: return "PASS";
    case Classification::Fail: return "FAIL";
    case Classification::PaperDiscrepancy: return "PAPER-DISCREPANCY";
    case Classification::Skipped: break;
  }
  return "SKIPPED";
}

inline Classification classification_from_string(const std::string& s) {
  if (s == "PASS") return Classification::Pass;
  if (s == "FAIL") return Classification::Fail;
  if (s == "PAPER-DISCREPANCY") return Classification::PaperDiscrepancy;
  if (s == "SKIPPED") return Classification::Skipped;
  throw std::invalid_argument("unknown classification '" + s + "'");
}

struct CaseResult {
  std::string id;
  std::string lhs_method;
  std::string rhs_method;
  std::vector<std::string> tags;
  Json params = Json::object();
  double lhs_value = 0.0;
  double rhs_value = 0.0;
  double abs_delta = 0.0;
  double rel_delta = 0.0;
  double abs_tol = 0.0;
  double rel_tol = 0.0;
  std::size_t points = 0;
  bool passed = false;
  Classification classification = Classification::Skipped;
  std::string note;
  double runtime_ms = 0.0;

  bool operator==(const CaseResult&) const = default;
};

struct ReportSummary {
  std::size_t total = 0, pass = 0, fail = 0, paper_discrepancy = 0, skipped = 0;
  bool operator==(const ReportSummary&) const = default;
};

struct VerificationReport {
  std::vector<CaseResult> cases;
  ReportSummary summary;
  Json config = Json::object();

  bool ok() const { return summary.fail == 0; }
  bool operator==(const VerificationReport&) const = default;
};

enum class ReportFormat { Json, Csv, Markdown };

inline ReportFormat report_format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "markdown" || s == "md") return ReportFormat::Markdown;
  throw std::invalid_argument("unknown report format '" + s + "' (json|csv|markdown)");
}

struct EmitOptions {
  bool include_timing = false;  // runtime_ms varies run to run
};

/// Evaluate one case. Exceptions become FAIL with the message as note.
inline CaseResult evaluate_case(const IdentityCase& c) {
  CaseResult r;
  r.id = c.id;
  r.lhs_method = c.lhs_method;
  r.rhs_method = c.rhs_method;
  r.tags = c.tags;
  r.params = c.params;
  r.abs_tol = c.abs_tol;
  r.rel_tol = c.rel_tol;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (!c.lhs || !c.rhs) throw std::invalid_argument("case has no evaluator");
    const std::vector<double> lhs = c.lhs();
    const std::vector<double> rhs = c.rhs();
    if (lhs.size() != rhs.size() || lhs.empty())
      throw std::runtime_error("evaluators returned " + std::to_string(lhs.size()) + " vs " +
                               std::to_string(rhs.size()) + " points");
    r.points = lhs.size();
    bool all_ok = true;
    double worst = -1.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      const double d = std::abs(lhs[i] - rhs[i]);
      const double allowed = std::max(c.abs_tol, c.rel_tol * std::abs(rhs[i]));
      const bool ok = std::isfinite(lhs[i]) && std::isfinite(rhs[i]) && d <= allowed;
      all_ok = all_ok && ok;
      double score = allowed > 0 ? d / allowed : (d > 0 ? INFINITY : 0.0);
      if (!ok) score = INFINITY;
      if (score > worst || i == 0) {
        worst = score;
        r.lhs_value = lhs[i];
        r.rhs_value = rhs[i];
        r.abs_delta = d;
        r.rel_delta = rhs[i] != 0 ? d / std::abs(rhs[i]) : d;
      }
    }
    r.passed = all_ok;
    if (all_ok)
      r.classification = Classification::Pass;
    else
      r.classification = c.discrepancy_channel ? Classification::PaperDiscrepancy : Classification::Fail;
  } catch (const std::exception& e) {
    r.passed = false;
    r.classification = Classification::Fail;
    r.note = e.what();
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Run every case; report order is registry order for any job count.
inline VerificationReport run(const std::vector<IdentityCase>& registry, int jobs = 1) {
  if (jobs < 1) throw std::invalid_argument("run: jobs must be at least 1");
  VerificationReport rep;
  rep.cases.resize(registry.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < registry.size(); i = next++) rep.cases[i] = evaluate_case(registry[i]);
  };
  const int n = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(registry.size(), 1)));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& c : rep.cases) {
    ++rep.summary.total;
    switch (c.classification) {
      case Classification::Pass: ++rep.summary.pass; break;
      case Classification::Fail: ++rep.summary.fail; break;
      case Classification::PaperDiscrepancy: ++rep.summary.paper_discrepancy; break;
      case Classification::Skipped: ++rep.summary.skipped; break;
    }
  }
  rep.config = Json{{"cases", registry.size()}};
  return rep;
}

/// Tag match, or shell glob on the id.
inline bool case_matches(const IdentityCase& c, const std::string& filter) {
  if (filter.empty()) return true;
  if (std::find(c.tags.begin(), c.tags.end(), filter) != c.tags.end()) return true;
  return fnmatch(filter.c_str(), c.id.c_str(), 0) == 0;
}

inline std::vector<IdentityCase> filter_registry(const std::vector<IdentityCase>& all, const std::string& filter) {
  std::vector<IdentityCase> out;
  for (const auto& c : all)
    if (case_matches(c, filter)) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------- emitters

namespace detail {

inline void write_json_string(std::ostream& os, const std::string& s) { os << Json(s).dump(); }

// nlohmann's dump with numbers at 17 significant digits; objects are
// std::map-backed so keys come out sorted.
inline void write_json(std::ostream& os, const Json& j, int indent, int depth = 0) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string pad_close(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad;
        write_json_string(os, it.key());
        os << ": ";
        write_json(os, it.value(), indent, depth + 1);
      }
      os << "\n" << pad_close << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        write_json(os, j[i], indent, depth + 1);
      }
      os << "\n" << pad_close << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isfinite(v))
        os << fmt_double(v, 17);
      else
        os << "null";
      return;
    }
    default: os << j.dump();
  }
}

inline double json_double(const Json& j) { return j.is_null() ? NAN : j.get<double>(); }

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

/// Pretty JSON with sorted keys and 17-digit floats.
inline std::string dump_json(const Json& j) {
  std::ostringstream os;
  detail::write_json(os, j, 2);
  os << "\n";
  return os.str();
}

inline Json report_to_json(const VerificationReport& rep, const EmitOptions& opt = {}) {
  Json cases = Json::array();
  for (const auto& c : rep.cases) {
    Json j{{"id", c.id},
           {"lhs_method", c.lhs_method},
           {"rhs_method", c.rhs_method},
           {"tags", c.tags},
           {"params", c.params},
           {"lhs_value", c.lhs_value},
           {"rhs_value", c.rhs_value},
           {"abs_delta", c.abs_delta},
           {"rel_delta", c.rel_delta},
           {"abs_tol", c.abs_tol},
           {"rel_tol", c.rel_tol},
           {"points", c.points},
           {"passed", c.passed},
           {"classification", to_string(c.classification)},
           {"note", c.note}};
    if (opt.include_timing) j["runtime_ms"] = c.runtime_ms;
    cases.push_back(std::move(j));
  }
  return Json{{"schema_version", "1"},
              {"config", rep.config},
              {"summary",
               {{"total", rep.summary.total},
                {"pass", rep.summary.pass},
                {"fail", rep.summary.fail},
                {"paper_discrepancy", rep.summary.paper_discrepancy},
                {"skipped", rep.summary.skipped}}},
              {"cases", cases}};
}

inline VerificationReport report_from_json(const Json& j) {
  VerificationReport rep;
  rep.config = j.at("config");
  const Json& s = j.at("summary");
  rep.summary = {s.at("total").get<std::size_t>(), s.at("pass").get<std::size_t>(), s.at("fail").get<std::size_t>(),
                 s.at("paper_discrepancy").get<std::size_t>(), s.at("skipped").get<std::size_t>()};
  for (const Json& c : j.at("cases")) {
    CaseResult r;
    r.id = c.at("id").get<std::string>();
    r.lhs_method = c.at("lhs_method").get<std::string>();
    r.rhs_method = c.at("rhs_method").get<std::string>();
    r.tags = c.at("tags").get<std::vector<std::string>>();
    r.params = c.at("params");
    r.lhs_value = detail::json_double(c.at("lhs_value"));
    r.rhs_value = detail::json_double(c.at("rhs_value"));
    r.abs_delta = detail::json_double(c.at("abs_delta"));
    r.rel_delta = detail::json_double(c.at("rel_delta"));
    r.abs_tol = detail::json_double(c.at("abs_tol"));
    r.rel_tol = detail::json_double(c.at("rel_tol"));
    r.points = c.at("points").get<std::size_t>();
    r.passed = c.at("passed").get<bool>();
    r.classification = classification_from_string(c.at("classification").get<std::string>());
    r.note = c.at("note").get<std::string>();
    if (c.contains("runtime_ms")) r.runtime_ms = c.at("runtime_ms").get<double>();
    rep.cases.push_back(std::move(r));
  }
  return rep;
}

inline void emit(const VerificationReport& rep, ReportFormat format, std::ostream& os, const EmitOptions& opt = {}) {
  using detail::fmt_double;
  switch (format) {
    case ReportFormat::Json: os << dump_json(report_to_json(rep, opt)); break;
    case ReportFormat::Csv:
      os << "id,lhs,rhs,abs_delta,rel_delta,classification\n";
      for (const auto& c : rep.cases)
        os << detail::csv_field(c.id) << ',' << fmt_double(c.lhs_value) << ',' << fmt_double(c.rhs_value) << ','
           << fmt_double(c.abs_delta) << ',' << fmt_double(c.rel_delta) << ',' << to_string(c.classification) << '\n';
      break;
    case ReportFormat::Markdown:
      os << "| id | lhs | rhs | abs_delta | rel_delta | classification |\n";
      os << "|---|---|---|---|---|---|\n";
      for (const auto& c : rep.cases)
        os << "| " << c.id << " | " << fmt_double(c.lhs_value) << " | " << fmt_double(c.rhs_value) << " | "
           << fmt_double(c.abs_delta, 3) << " | " << fmt_double(c.rel_delta, 3) << " | "
           << to_string(c.classification) << " |\n";
      break;
  }
}

/// Write to a file; I/O failures name the path.
inline void emit(const VerificationReport& rep, ReportFormat format, const std::string& path,
                 const EmitOptions& opt = {}) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("emit: cannot open '" + path + "' for writing");
  emit(rep, format, os, opt);
  os.flush();
  if (!os) throw std::runtime_error("emit: write to '" + path + "' failed");
}

// ---------------------------------------------------------------- registry

namespace detail {

inline constexpr double kSeriesTol = 1e-12;

inline std::vector<double> one(double v) { return {v}; }

inline Evaluator constant_of(ClosedValue v) {
  return [v = std::move(v)] { return one(v.value()); };
}

inline Evaluator series_g_at(std::size_t m, double z) {
  return [m, z] { return one(sum_g(static_cast<unsigned>(m), z, kSeriesTol).value); };
}

inline Evaluator weighted(WeightSpec w, double scale = 1.0, double tol = kSeriesTol) {
  return [w, scale, tol] { return one(scale * sum_weighted(w, tol).value); };
}

template <class F>
Evaluator over(std::vector<double> pts, F f) {
  return [pts = std::move(pts), f] {
    std::vector<double> out;
    out.reserve(pts.size());
    for (double p : pts) out.push_back(f(p));
    return out;
  };
}

inline std::vector<double> open_grid(double lo, double hi, int n) {
  std::vector<double> pts;
  for (int k = 0; k < n; ++k) pts.push_back(lo + (hi - lo) * (k + 0.5) / n);
  return pts;
}

inline NamedConstant sqrt21_ln_root() {
  const HighPrec r21 = boost::multiprecision::sqrt(HighPrec(21));
  return NamedConstant::custom("sqrt21*ln((5-sqrt21)/2)", r21 * boost::multiprecision::log((5 - r21) / 2));
}

struct RegistryBuilder {
  std::vector<IdentityCase> cases;

  IdentityCase& add(std::string id, std::string tag, std::string lhs_method, Evaluator lhs, std::string rhs_method,
                    Evaluator rhs, double abs_tol = 1e-10, double rel_tol = 1e-14, Json params = Json::object()) {
    IdentityCase c;
    c.id = std::move(id);
    c.tags = {std::move(tag)};
    c.lhs_method = std::move(lhs_method);
    c.rhs_method = std::move(rhs_method);
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    c.abs_tol = abs_tol;
    c.rel_tol = rel_tol;
    c.params = std::move(params);
    cases.push_back(std::move(c));
    return cases.back();
  }
};

inline std::string signed_label(int s) { return s < 0 ? "m" + std::to_string(-s) : std::to_string(s); }

inline void add_s1(RegistryBuilder& b) {
  {
    ClosedValue v = ClosedValue::rational(5);
    v.add(make_rational(3, 2), NamedConstant::pi());
    b.add("f-special-z2", "s1", "sum_f", [] { return one(sum_f(2.0, kSeriesTol).value); }, "closed_value",
          constant_of(v), 1e-10, 1e-14, {{"z", 2}});
  }
  {
    ClosedValue v = ClosedValue::rational(22);
    v.add(8, NamedConstant::sqrt3_pi());
    b.add("f-special-z3", "s1", "sum_f", [] { return one(sum_f(3.0, kSeriesTol).value); }, "closed_value",
          constant_of(v), 1e-10, 1e-14, {{"z", 3}});
  }
  const auto fibs = catalan_fib_values();
  b.add("f-fib-F2n", "s1", "sum_weighted", weighted(fibs[0].lhs), "closed_value", constant_of(fibs[0].value));
  b.add("f-fib-L2n", "s1", "sum_weighted", weighted(fibs[1].lhs), "closed_value", constant_of(fibs[1].value));
  b.add("f-closed-grid", "s1", "f_closed", over({0.0, 0.5, 1.0, 1.5, 2.5, 3.0, 3.5}, [](double z) { return f_closed(z); }),
        "sum_f", over({0.0, 0.5, 1.0, 1.5, 2.5, 3.0, 3.5}, [](double z) { return sum_f(z, 1e-11).value; }), 1e-8, 1e-13);
}

inline void add_s2(RegistryBuilder& b) {
  const char* names[] = {"z-quarter", "z-half", "z-three-quarters"};
  const double zs[] = {0.25, 0.5, 0.75};
  const SpecialPoint sps[] = {SpecialPoint::Quarter, SpecialPoint::Half, SpecialPoint::ThreeQuarters};
  for (std::size_t m = 0; m <= 1; ++m)
    for (int i = 0; i < 3; ++i)
      b.add("g" + std::to_string(m) + "-special-" + names[i], "s2", "sum_g", series_g_at(m, zs[i]), "closed_value",
            constant_of(g_special_value(m, sps[i])), 1e-10, 1e-14, {{"m", m}, {"z", zs[i]}});

  {
    ClosedValue v = ClosedValue::rational(make_rational(2, 25));
    v.add(make_rational(-32, 125), NamedConstant::sqrt5_ln_alpha());
    b.add("g1-alt-1n", "s2", "sum_g", series_g_at(1, -0.25), "closed_value", constant_of(v), 1e-10, 1e-14,
          {{"m", 1}, {"z", -0.25}});
  }
  {
    ClosedValue v;
    v.add(make_rational(1, 9), NamedConstant::sqrt3_ln_2_minus_sqrt3());
    b.add("g1-alt-2n", "s2", "sum_g", series_g_at(1, -0.5), "closed_value", constant_of(v), 1e-10, 1e-14,
          {{"m", 1}, {"z", -0.5}});
  }
  {
    ClosedValue v = ClosedValue::rational(make_rational(-2, 49));
    v.add(make_rational(32, 1029), sqrt21_ln_root());
    b.add("g1-alt-3n", "s2", "sum_g", series_g_at(1, -0.75), "closed_value", constant_of(v), 1e-10, 1e-14,
          {{"m", 1}, {"z", -0.75}});
  }

  const std::vector<double> xs = {0.1, 0.3, 0.5, 0.7, 0.9, 1.0};
  for (int variant = 0; variant <= 1; ++variant) {
    const auto m = static_cast<unsigned>(variant);
    b.add("g" + std::to_string(variant) + "-trig-grid", "s2", "g_trig",
          over(xs, [variant](double x) { return g_trig(variant, x); }), "sum_g",
          over(xs, [m](double x) { return sum_g(m, std::sin(x) * std::sin(x), kSeriesTol).value; }), 1e-10, 1e-13);
  }

  {
    const double a = (1 + std::sqrt(5.0)) / 2, bt = (1 - std::sqrt(5.0)) / 2;
    const double pi = std::numbers::pi;
    b.add("golden-angles", "s2", "libm",
          [pi] {
            return std::vector<double>{std::sin(pi / 10), std::sin(3 * pi / 10), std::cos(pi / 10), std::cos(3 * pi / 10)};
          },
          "golden_form",
          [a, bt] {
            const double r = std::sqrt(a * std::sqrt(5.0));
            return std::vector<double>{-bt / 2, a / 2, r / 2, 0.5 * std::sqrt(5.0 / (a * std::sqrt(5.0)))};
          },
          1e-15, 1e-15);
    const double k = std::numbers::pi / std::sqrt(125 * std::sqrt(5.0));
    WeightSpec wa;
    wa.kind = WeightKind::Power;
    wa.m = 0;
    wa.z = a * a / 4;
    WeightSpec wb = wa;
    wb.z = bt * bt / 4;
    b.add("golden-alpha-series", "s2", "sum_weighted", weighted(wa), "golden_form",
          [a, k] { return one(2 / std::sqrt(5.0) * a + 12 * k * std::sqrt(a)); });
    b.add("golden-beta-series", "s2", "sum_weighted", weighted(wb), "golden_form",
          [a, bt, k] { return one(-2 / std::sqrt(5.0) * bt + 4 * k / std::sqrt(a)); });
  }

  for (FibKind kind : {FibKind::F, FibKind::L}) {
    const std::string kn = to_string(kind);
    for (int s = -5; s <= 5; ++s)
      b.add("thm1-" + kn + "-s" + signed_label(s), "s2", "sum_weighted", weighted(thm1_series(kind, s)),
            "closed_value", constant_of(thm1_rhs(kind, s)), 1e-10, 1e-14, {{"kind", kn}, {"s", s}});
    for (int s = -5; s <= 5; ++s)
      b.add("thm2-" + kn + "-s" + signed_label(s), "s2", "sum_weighted", weighted(thm2_series(kind, s)),
             "closed_value", constant_of(thm2_rhs(kind, s)), 1e-10, 1e-14, {{"kind", kn}, {"s", s}})
          .discrepancy_channel = true;
    for (int r : {0, 2, 4})
      for (int s = -3; s <= 3; ++s) {
        const double tol = r >= 4 ? 1e-8 : 1e-10;
        b.add("thm3-" + kn + "-r" + std::to_string(r) + "-s" + signed_label(s), "s2", "sum_weighted",
              weighted(thm3_series(kind, r, s), 1.0, tol / 10), "closed_value", constant_of(thm3_rhs(kind, r, s)), tol,
              1e-14, {{"kind", kn}, {"r", r}, {"s", s}});
      }
  }
  const char* inst_ids[] = {"F-n2", "L-n2", "F-n3", "L-n3"};
  for (int r : {2, 4}) {
    const auto inst = thm3_instances(r);
    const double tol = r >= 4 ? 1e-8 : 1e-10;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      const double scale = to_double(inst[i].lhs_scale);
      b.add(std::string("thm3-inst-") + inst_ids[i] + "-r" + std::to_string(r), "s2", "sum_weighted",
            weighted(inst[i].lhs, scale, tol / (10 * scale)), "closed_value", constant_of(inst[i].value), tol, 1e-14,
            {{"r", r}});
    }
  }
  const char* ex_ids[] = {"F2n", "L2n", "F2n1", "L2n1", "F2nm2", "L2nm2"};
  const auto ex = thm1_examples();
  for (std::size_t i = 0; i < ex.size(); ++i)
    b.add(std::string("fib-example-") + ex_ids[i], "s2", "sum_weighted", weighted(ex[i].lhs), "closed_value",
          constant_of(ex[i].value));
}

inline void add_s3(RegistryBuilder& b) {
  b.add("lemma-int-exact", "s3", "lemma_closed",
        [] {
          std::vector<double> out;
          for (std::size_t n = 0; n <= 50; ++n) out.push_back(to_double(lemma_int_exact(n).first));
          return out;
        },
        "lemma_binomial",
        [] {
          std::vector<double> out;
          for (std::size_t n = 0; n <= 50; ++n) out.push_back(to_double(lemma_int_exact(n).second));
          return out;
        },
        1e-300, 0.0);
  b.add("lemma-int-quadrature", "s3", "gauss_legendre_64",
        [] {
          std::vector<double> out;
          const auto& rule = gauss_legendre(64);
          for (int n = 0; n <= 20; ++n)
            out.push_back(apply_rule(rule, [n](double x) { return std::pow(1 - x * x, n); }, -1.0, 1.0));
          return out;
        },
        "lemma_closed",
        [] {
          std::vector<double> out;
          for (std::size_t n = 0; n <= 20; ++n) out.push_back(to_double(lemma_int_exact(n).first));
          return out;
        },
        1e-300, 1e-12);
  const auto grid = open_grid(-0.9, 0.9, 10);
  for (std::size_t m = 0; m <= 1; ++m)
    b.add("g" + std::to_string(m) + "-integral-grid", "s3", "g_integral",
          over(grid, [m](double z) { return g_integral(m, z).value; }), "g_closed",
          over(grid, [m](double z) { return g_closed(m, z); }), 1e-9, 1e-13);
  const std::vector<double> fz = {-3.0, -1.0, 0.5, 2.0, 3.5};
  b.add("f-integral-grid", "s3", "f_integral", over(fz, [](double z) { return f_integral(z).value; }), "sum_f",
        over(fz, [](double z) { return sum_f(z, 1e-11).value; }), 1e-8, 1e-12);
  const std::vector<double> sz = {-0.75, -0.5, -0.25, 0.25, 0.5, 0.75};
  b.add("sprugnoli-binomial", "s3", "sum_sprugnoli", over(sz, [](double z) { return sum_sprugnoli(z, kSeriesTol).value; }),
        "sprugnoli_closed", over(sz, [](double z) { return sprugnoli_closed(z); }), 1e-10, 1e-14);
  b.add("sprugnoli-integral", "s3", "gauss_legendre",
        over(sz,
             [](double z) {
               auto f = [z](double x) { return 0.5 * z / (1 - z * (1 - x * x)); };
               return integrate_doubling(f, -1.0, 1.0, 64).value;
             }),
        "sprugnoli_closed", over(sz, [](double z) { return sprugnoli_closed(z); }), 1e-10, 1e-14);
  const std::vector<double> tz = {-0.45, -0.3, -0.15, 0.05, 0.15, 0.3, 0.4};
  for (int v = 0; v <= 1; ++v)
    b.add("g" + std::to_string(v) + "-transformed", "s3", "g_transformed_400",
          over(tz, [v](double z) { return g_transformed(v, z, 400); }), "g_closed",
          over(tz, [v](double z) { return g_closed(static_cast<std::size_t>(v), z); }), 1e-8, 1e-13);
}

inline void add_s4(RegistryBuilder& b) {
  const auto grid10 = open_grid(-0.9, 0.9, 10);
  b.add("gm-structure-m2", "s4", "g_closed", over(grid10, [](double z) { return g_closed(2, z); }), "m2_display",
        over(grid10,
             [](double z) {
               const double w = 1 - z;
               return (4 * z * z + 12 * z - 1) / (8 * w * w * w) +
                      (16 * z * z - 2 * z + 1) / (8 * w * w * w * w) * kernel_a(z / w);
             }),
        1e-10, 1e-14);
  const char* names[] = {"z-quarter", "z-half", "z-three-quarters"};
  const double zs[] = {0.25, 0.5, 0.75};
  const SpecialPoint sps[] = {SpecialPoint::Quarter, SpecialPoint::Half, SpecialPoint::ThreeQuarters};
  for (int i = 0; i < 3; ++i)
    b.add(std::string("g2-special-") + names[i], "s4", "sum_g", series_g_at(2, zs[i]), "closed_value",
          constant_of(g_special_value(2, sps[i])), 1e-10, 1e-14, {{"m", 2}, {"z", zs[i]}});
  b.add("corollary-a-plus-b-pi", "s4", "sum_g",
        [] {
          std::vector<double> out;
          for (unsigned m = 3; m <= 6; ++m) out.push_back(sum_g(m, 0.5, kSeriesTol).value);
          return out;
        },
        "closed_value",
        [] {
          std::vector<double> out;
          for (std::size_t m = 3; m <= 6; ++m) {
            const ClosedValue v = g_special_value(m, SpecialPoint::Half);
            for (const auto& t : v.terms())
              if (t.constant.key() != "1" && t.constant.key() != "pi")
                throw std::runtime_error("g_m(1/2) left the Q + Q pi form at m = " + std::to_string(m));
            out.push_back(v.value());
          }
          return out;
        },
        1e-10, 1e-14);
  const std::vector<double> pz = {-0.7, -0.2, 0.3, 0.8};
  b.add("p-closed-form", "s4", "p_pair_recursive",
        over(pz,
             [](double z) {
               double acc = 0;
               for (std::size_t m = 0; m <= 10; ++m) {
                 const auto p = p_pair_recursive(m);
                 acc += poly_eval_f(p.p1, z) + 3 * poly_eval_f(p.p2, z);
               }
               return acc;
             }),
        "p_pair_closed",
        over(pz,
             [](double z) {
               double acc = 0;
               for (std::size_t m = 0; m <= 10; ++m) {
                 const auto p = p_pair_closed(m);
                 acc += poly_eval_f(p.p1, z) + 3 * poly_eval_f(p.p2, z);
               }
               return acc;
             }),
        1e-9, 1e-14);
  b.add("q-closed-form", "s4", "q_kernel", over(pz, [](double u) {
          double acc = 0;
          for (std::size_t m = 0; m <= 8; ++m) acc += poly_eval_f(q_kernel(m).q, u);
          return acc;
        }),
        "q_kernel_closed", over(pz, [](double u) {
          double acc = 0;
          for (std::size_t m = 0; m <= 8; ++m) acc += poly_eval_f(q_kernel_closed(m).q, u);
          return acc;
        }),
        1e-9, 1e-14);
  const auto grid = open_grid(-0.9, 0.9, 20);
  for (std::size_t m = 2; m <= 6; ++m) {
    b.add("gm-integral-m" + std::to_string(m), "s4", "g_integral",
          over(grid, [m](double z) { return g_integral(m, z).value; }), "g_closed",
          over(grid, [m](double z) { return g_closed(m, z); }), 1e-9, 1e-13, {{"m", m}});
    b.add("gm-series-m" + std::to_string(m), "s4", "sum_g",
          over(grid, [m](double z) { return sum_g(static_cast<unsigned>(m), z, kSeriesTol).value; }), "g_closed",
          over(grid, [m](double z) { return g_closed(m, z); }), 1e-10, 1e-13, {{"m", m}});
  }
}

inline void add_s5(RegistryBuilder& b) {
  // Reference values from an independent arbitrary-precision evaluation.
  b.add("bessel-k-oracle", "s5", "bessel_k", [] { return std::vector<double>{bessel_k(0, 2.0), bessel_k(1, 2.0)}; },
        "reference", [] { return std::vector<double>{0.11389387274953343565, 0.13986588181652242728}; }, 1e-12, 1e-9);
  b.add("bessel-recurrence", "s5", "bessel_k_v+1",
        [] {
          std::vector<double> out;
          for (int v = 1; v <= 5; ++v)
            for (double x : {0.5, 1.0, 2.0, 5.0, 10.0}) out.push_back(bessel_k(v + 1, x));
          return out;
        },
        "recurrence",
        [] {
          std::vector<double> out;
          for (int v = 1; v <= 5; ++v)
            for (double x : {0.5, 1.0, 2.0, 5.0, 10.0}) out.push_back(bessel_k(v - 1, x) + 2.0 * v / x * bessel_k(v, x));
          return out;
        },
        1e-300, 1e-7);
  b.add("stirling-mellin-lemma", "s5", "mellin_lemma_check",
        [] {
          double bad = 0;
          for (std::size_t m = 0; m <= 10; ++m)
            for (std::size_t n = 0; n <= 20; ++n) bad += mellin_lemma_check(m, n) ? 0 : 1;
          return one(bad);
        },
        "zero", [] { return one(0.0); }, 1e-300, 0.0);
  const std::vector<double> mz = {0.1, 0.25, 0.5, 0.75};
  for (std::size_t m = 0; m <= 2; ++m)
    b.add("mellin-m" + std::to_string(m), "s5", "g_mellin", over(mz, [m](double z) { return g_mellin(m, z).value; }),
          "g_closed", over(mz, [m](double z) { return g_closed(m, z); }), 1e-300, 1e-5, {{"m", m}});
}

inline void add_s6(RegistryBuilder& b) {
  ClosedValue v = ClosedValue::rational(1);
  v.add(make_rational(1, 8), NamedConstant::pi_squared());
  v.add(make_rational(-1, 2), NamedConstant::pi());
  b.add("integrated-special-z-half", "s6", "sum_integrated",
        [] { return one(sum_integrated(0.5, kSeriesTol).value); }, "closed_value", constant_of(v), 1e-10, 1e-14,
        {{"z", 0.5}})
      .discrepancy_channel = true;
  const std::vector<double> z1 = {-0.75, -0.5, -0.25, 0.25, 0.75};
  b.add("integrated-closed-grid", "s6", "integrated_closed", over(z1, [](double z) { return integrated_closed(z); }),
        "sum_integrated", over(z1, [](double z) { return sum_integrated(z, kSeriesTol).value; }), 1e-10, 1e-13)
      .discrepancy_channel = true;
  const std::vector<double> z2 = {-1e-2, -1e-3, -1e-5, 1e-5, 1e-3, 1e-2};
  b.add("integrated-small-z", "s6", "integrated_closed", over(z2, [](double z) { return integrated_closed(z); }),
        "sum_integrated", over(z2, [](double z) { return sum_integrated(z, kSeriesTol).value; }), 1e-10, 1e-13)
      .discrepancy_channel = true;
}

}  // namespace detail

/// Every displayed identity, each with two independent evaluation paths.
inline std::vector<IdentityCase> default_registry() {
  detail::RegistryBuilder b;
  detail::add_s1(b);
  detail::add_s2(b);
  detail::add_s3(b);
  detail::add_s4(b);
  detail::add_s5(b);
  detail::add_s6(b);
  return std::move(b.cases);
}

}  // namespace csl
