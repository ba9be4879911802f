// Command-line front end: compute superpolynomials, dump the chart atlas,
// run the invariant check suites, and run positivity scans.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "jmh/charts.hpp"
#include "jmh/engine.hpp"
#include "jmh/homology.hpp"

using namespace jmh;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNonPolynomial = 2;
constexpr int kExitInternal = 3;

std::vector<int> parse_jm(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::string latex_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& [m, c] : p.terms()) {
    Int ac = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (auto& [v, e] : m.exponents()) {
      if (!mono.empty()) mono += " ";
      mono += var_name(v) + "^{" + std::to_string(e) + "}";
    }
    if (mono.empty()) {
      s += ac.str();
    } else {
      if (ac != 1) s += ac.str() + " ";
      s += mono;
    }
  }
  return s;
}

json poly_terms_json(const Poly& p, bool qt_grading) {
  json terms = json::array();
  for (auto& [m, c] : p.terms()) {
    json t;
    t["coeff"] = c.str();
    t["a"] = m.exponent(VAR_A);
    if (qt_grading) {
      t["q"] = m.exponent(VAR_q);
      t["t"] = m.exponent(VAR_t);
    } else {
      t["Q"] = m.exponent(VAR_Q);
      t["T"] = m.exponent(VAR_T);
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

struct Options {
  int n = 1;
  std::string jm;
  std::string method = "both";
  std::string grading = "QT";
  std::string format = "text";
  std::string convention = "padleft";
  bool audit = false;
  int threads = 1;
  int k_lo = 0, k_hi = 4, m_lo = 0, m_hi = 4;
};

int threads_from_env() {
  const char* env = std::getenv("JMH_THREADS");
  return env ? std::atoi(env) : 1;
}

int run_compute(const Options& opt) {
  JMVector a(opt.n, parse_jm(opt.jm));
  Method method = opt.method == "syt"       ? Method::Syt
                  : opt.method == "residue" ? Method::Residue
                                            : Method::Both;
  Convention conv =
      opt.convention == "padright" ? Convention::PadRight : Convention::PadLeft;
  Superpolynomial sp = superpolynomial(a, method, conv, opt.threads);
  if (opt.audit) {
    AuditReport audit;
    evaluate_full(jm_to_exponents(a, conv), KernelForm::Zeta, &audit);
    std::cerr << "audit: " << audit.poles_checked
              << " non-enclosed poles checked, " << audit.nonzero.size()
              << " with nonzero total residue\n";
    for (auto& e : audit.nonzero)
      std::cerr << "audit: step z" << e.step << ", pole " << e.pole.str()
                << ": residue " << e.residue.str() << "\n";
  }
  bool qt = opt.grading == "qt";
  Poly out = qt ? specialize_qt(sp.value) : sp.value;
  if (opt.format == "json") {
    json doc;
    doc["n"] = opt.n;
    doc["jm"] = parse_jm(opt.jm);
    doc["exponents"] = jm_to_exponents(a, conv).e;
    doc["method"] = opt.method;
    doc["grading"] = opt.grading;
    doc["terms"] = poly_terms_json(out, qt);
    if (method == Method::Both) doc["methods_agree"] = true;
    std::cout << doc.dump() << "\n";
  } else if (opt.format == "latex") {
    std::cout << latex_poly(out) << "\n";
  } else {
    std::cout << out.str() << "\n";
    if (method == Method::Both) std::cout << "methods agree: yes\n";
  }
  return kExitOk;
}

int run_charts(const Options& opt) {
  std::cout << charts_report_json(opt.n) << "\n";
  return kExitOk;
}

int run_scan(const Options& opt) {
  JMVector b(opt.n, parse_jm(opt.jm));
  PositivityReport report =
      positivity_scan(b, opt.k_lo, opt.k_hi, opt.m_lo, opt.m_hi, opt.threads);
  json doc;
  doc["n"] = opt.n;
  doc["b"] = b.a;
  doc["k_range"] = {opt.k_lo, opt.k_hi};
  doc["m_range"] = {opt.m_lo, opt.m_hi};
  doc["points"] = json::array();
  for (auto& pt : report.points) {
    doc["points"].push_back({{"k", pt.k},
                             {"m", pt.m},
                             {"a", pt.a},
                             {"polynomial", pt.polynomial},
                             {"positive", pt.positive}});
  }
  doc["frontier"] = json::array();
  for (auto& [k, m] : report.frontier) doc["frontier"].push_back({{"k", k}, {"m", m}});
  doc["monotone"] = report.monotone;
  std::cout << doc.dump() << "\n";
  return kExitOk;
}

int run_check(const Options& opt) {
  int n = opt.n;
  bool all_pass = true;
  auto report = [&](const std::string& name, bool pass) {
    std::cout << (pass ? "PASS" : "FAIL") << " " << name << "\n";
    if (!pass) all_pass = false;
  };

  // combinatorics
  {
    static const uint64_t syt_totals[] = {1, 2, 4, 10, 26, 76};
    bool ok = true;
    for (int k = 1; k <= std::min(n, 6); ++k) {
      uint64_t total = 0;
      for (auto& shape : partitions(k)) {
        auto ts = syt_enumerate(shape);
        if (ts.size() != shape.hook_count()) ok = false;
        total += ts.size();
      }
      if (total != syt_totals[k - 1]) ok = false;
    }
    report("syt-hook-counts", ok);
  }
  // charts
  {
    bool ok = true;
    for (int k = 1; k <= std::min(n, 6); ++k) {
      for (auto& s : nested_sets(k)) {
        auto layout = free_coordinates(s);
        if ((int)(layout.free_x.size() + layout.free_y.size()) != k * (k - 1) / 2)
          ok = false;
        auto [px, py] = pivots(s);
        if ((int)(px.size() + py.size()) != k - 1) ok = false;
      }
    }
    report("charts-invariants", ok);
  }
  // dual-evaluator equivalence and symmetry on a small grid
  {
    bool equiv = true, symm = true, inert = true;
    for (int k = 1; k <= std::min(n, 4); ++k) {
      std::vector<int> e(k, 0);
      auto advance = [&]() {
        for (int i = 1; i < k; ++i) {
          if (++e[i] <= (k <= 3 ? 3 : 1)) return true;
          e[i] = 0;
        }
        return false;
      };
      do {
        ExponentVector ev{e};
        Poly full = evaluate_full(ev);
        if (evaluate_syt_sum(ev, opt.threads) != full) equiv = false;
        if (swap_qt(full) != full) symm = false;
        if (k >= 2) {
          std::vector<int> e1 = e;
          e1[0] = 1;
          if (evaluate_full(ExponentVector{e1}) != full) inert = false;
        }
      } while (advance());
    }
    report("dual-evaluator-equivalence", equiv);
    report("qt-swap-symmetry", symm);
    report("z1-inertia", inert);
  }
  // full twist shift
  {
    bool ok = true;
    for (int k = 1; k <= std::min(n, 3); ++k) {
      std::vector<int> base(k - 1, 1);
      if (!fulltwist_shift_check(JMVector(k, base)).all_pass) ok = false;
    }
    report("fulltwist-detB-shift", ok);
  }
  return all_pass ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact triply-graded characters of Jucys-Murphy braid closures"};
  app.require_subcommand(1);

  Options opt;
  opt.threads = threads_from_env();

  auto add_common = [&](CLI::App* cmd, bool needs_jm) {
    cmd->add_option("--n", opt.n, "strand count")->required();
    if (needs_jm)
      cmd->add_option("--jm", opt.jm, "comma-separated JM twist exponents (n-1 of them)");
    cmd->add_option("--threads", opt.threads, "worker threads (0 = auto)");
  };

  CLI::App* compute = app.add_subcommand("compute", "superpolynomial of a JM braid");
  add_common(compute, true);
  compute->add_option("--method", opt.method, "syt|residue|both")
      ->check(CLI::IsMember({"syt", "residue", "both"}));
  compute->add_option("--grading", opt.grading, "QT|qt")
      ->check(CLI::IsMember({"QT", "qt"}));
  compute->add_option("--format", opt.format, "text|json|latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  compute->add_option("--convention", opt.convention, "padleft|padright")
      ->check(CLI::IsMember({"padleft", "padright"}));
  compute->add_flag("--audit", opt.audit, "report residues at non-enclosed poles");

  CLI::App* charts = app.add_subcommand("charts", "NS_n chart atlas (JSON)");
  add_common(charts, false);

  CLI::App* check = app.add_subcommand("check", "run the invariant suites");
  add_common(check, false);

  CLI::App* scan = app.add_subcommand("scan", "positivity scan over b + k*1 + m*rho");
  add_common(scan, true);
  scan->add_option("--kmin", opt.k_lo, "k range low");
  scan->add_option("--kmax", opt.k_hi, "k range high");
  scan->add_option("--mmin", opt.m_lo, "m range low");
  scan->add_option("--mmax", opt.m_hi, "m range high");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (opt.n < 1) {
      std::cerr << "error: --n must be >= 1\n";
      return kExitUsage;
    }
    if (compute->parsed() || scan->parsed()) {
      if ((int)parse_jm(opt.jm).size() != opt.n - 1) {
        std::cerr << "error: --jm must list exactly n-1 integers (got \"" << opt.jm
                  << "\" for n=" << opt.n << ")\n";
        return kExitUsage;
      }
    }
    if (compute->parsed()) return run_compute(opt);
    if (charts->parsed()) return run_charts(opt);
    if (check->parsed()) return run_check(opt);
    if (scan->parsed()) return run_scan(opt);
    return kExitUsage;
  } catch (const NonPolynomialResult& e) {
    std::cerr << "non-polynomial result: " << e.what() << "\n";
    return kExitNonPolynomial;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
