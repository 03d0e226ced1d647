// Command-line front end: arrangement analysis reports, the generic-family
// verification suite, closed-form series expansion, and the degreewise
// linear-algebra oracle.
//
// Exit codes: 0 success, 1 verification failure or internal error, 2
// invalid input.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "arrlog/oracle.hpp"
#include "arrlog/report.hpp"
#include "arrlog/verify.hpp"

namespace {

using namespace arrlog;

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class Fn>
int withField(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldKind::Rational) {
    QField field;
    return fn(field);
  }
  FpField field(spec.prime);
  return fn(field);
}

std::pair<int, int> parsePair(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("expected a 'p,i' pair, got '" + s + "'");
  return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

struct AnalyzeArgs {
  std::string path;
  std::string field = "fp:32003";
  bool fieldGiven = false;
  bool json = false;
  int maxP = 1;
  std::vector<std::string> ext;
};

int runAnalyze(const AnalyzeArgs& args) {
  ArrangementInput input = parseArrangementText(readFile(args.path));
  FieldSpec spec = args.fieldGiven ? FieldSpec::parse(args.field) : input.field;
  AnalysisOptions opts;
  opts.maxP = args.maxP;
  for (const auto& s : args.ext) opts.extPairs.push_back(parsePair(s));
  return withField(spec, [&](const auto& field) {
    auto A = materializeArrangement(field, input);
    if (!isGoodCharacteristic(A))
      std::cerr << "warning: field characteristic divides the hyperplane count of a flat; "
                   "purity analysis skipped\n";
    ordered_json doc = analysisReport(A, input, spec, opts);
    if (args.json)
      std::cout << doc.dump(2) << "\n";
    else
      std::cout << reportText(doc);
    return 0;
  });
}

struct OracleArgs {
  std::string path;
  std::string field = "fp:32003";
  bool fieldGiven = false;
  int low = 0;
  int high = 0;
  int maxP = 1;
  bool json = false;
};

int runOracle(const OracleArgs& args) {
  ArrangementInput input = parseArrangementText(readFile(args.path));
  FieldSpec spec = args.fieldGiven ? FieldSpec::parse(args.field) : input.field;
  return withField(spec, [&](const auto& field) {
    auto A = materializeArrangement(field, input);
    auto rows = compareOracle(A, args.low, args.high, args.maxP);
    bool allMatch = true;
    if (args.json) {
      ordered_json out = ordered_json::array();
      for (const auto& r : rows) {
        out.push_back(ordered_json{{"role", logRoleStr(r.role)},
                                   {"p", r.p},
                                   {"degree", r.degree},
                                   {"oracle", r.oracleDim},
                                   {"groebner", r.gbDim},
                                   {"match", r.match}});
        allMatch = allMatch && r.match;
      }
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "role      p  degree  oracle  groebner  match\n";
      for (const auto& r : rows) {
        std::cout << logRoleStr(r.role) << "_" << r.p << "  " << r.degree << "  " << r.oracleDim
                  << "  " << r.gbDim << "  " << (r.match ? "yes" : "NO") << "\n";
        allMatch = allMatch && r.match;
      }
    }
    return allMatch ? 0 : 1;
  });
}

struct SuiteArgs {
  int maxN = 6;
  int maxL = 3;
  std::string field = "fp:32003";
  int jobs = 1;
  bool json = false;
};

struct SuiteCase {
  std::string key;
  std::function<std::vector<CheckResult>()> run;
};

int runSuite(const SuiteArgs& args) {
  if (args.maxL < 3 || args.maxL > args.maxN) {
    std::cerr << "error: suite requires 3 <= maxL <= maxN\n";
    return 2;
  }
  FieldSpec spec = FieldSpec::parse(args.field);

  std::vector<SuiteCase> cases;
  for (int ell = 3; ell <= args.maxL; ++ell)
    for (int n = ell + 1; n <= args.maxN; ++n) {
      std::string base = "generic n=" + std::to_string(n) + " l=" + std::to_string(ell);
      cases.push_back({base + " theorem", [spec, n, ell] {
                         std::vector<CheckResult> out;
                         withField(spec, [&](const auto& field) {
                           out = verifyGenericTheorem(field, n, ell);
                           return 0;
                         });
                         return out;
                       }});
      cases.push_back({base + " deletion-restriction", [spec, n, ell] {
                         std::vector<CheckResult> out;
                         withField(spec, [&](const auto& field) {
                           auto A = genericArrangement(field, n, ell);
                           const int k = n - 1;
                           for (int p = 0; ell >= 4 && p <= ell - 3; ++p)
                             out.push_back(relativeFormsAdditivity(A, k, p));
                           out.push_back(relativeDerivationsAdditivity(A, k));
                           out.push_back(topFormsSequenceCheck(A, k));
                           return 0;
                         });
                         return out;
                       }});
    }

  struct CaseResult {
    bool error = false;
    std::string message;
    long long ms = 0;
    std::vector<CheckResult> checks;
  };
  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) break;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        results[i].checks = cases[i].run();
      } catch (const std::exception& e) {
        results[i].error = true;
        results[i].message = e.what();
      }
      results[i].ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    }
  };
  const int jobs = std::max(1, args.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool allPass = true;
  ordered_json jcases = ordered_json::array();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const CaseResult& r = results[i];
    bool pass = !r.error;
    for (const auto& c : r.checks) pass = pass && c.pass;
    allPass = allPass && pass;
    if (args.json) {
      ordered_json checks = ordered_json::array();
      for (const auto& c : r.checks)
        checks.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      jcases.push_back(ordered_json{{"key", cases[i].key},
                                    {"status", r.error ? "error" : (pass ? "pass" : "fail")},
                                    {"message", r.message},
                                    {"ms", r.ms},
                                    {"checks", checks}});
    } else {
      std::cout << "case " << cases[i].key << ": "
                << (r.error ? "ERROR" : (pass ? "pass" : "FAIL")) << " (" << r.ms << " ms)\n";
      if (r.error) std::cout << "  aborted: " << r.message << "\n";
      for (const auto& c : r.checks)
        if (!c.pass) std::cout << "  failed: " << c.name << " " << c.detail << "\n";
    }
  }
  if (args.json)
    std::cout << ordered_json{{"cases", jcases}, {"allPass", allPass}}.dump(2) << "\n";
  else
    std::cout << (allPass ? "suite: all cases pass" : "suite: FAILURES present") << "\n";
  return allPass ? 0 : 1;
}

struct SeriesArgs {
  std::string which;
  int ell = 0;
  int p = 0;
  std::string coeff;
  int capS = 10, capU = 8, capV = 6;
  bool json = false;
};

int runSeries(const SeriesArgs& args) {
  RationalGF g;
  int arity;  // expansion variables beyond t: Q counts s only, P adds u, T adds v
  if (args.which == "Q") {
    g = closedFormGF(GFKind::Q, args.ell, args.p);
    arity = 1;
  } else if (args.which == "P") {
    g = closedFormGF(GFKind::P, 0, args.p);
    arity = 2;
  } else if (args.which == "T") {
    g = closedFormGF(GFKind::T);
    arity = 3;
  } else {
    throw std::invalid_argument("series: expected Q, P or T, got '" + args.which + "'");
  }
  auto label = [arity](int es, int eu, int ev) {
    std::ostringstream out;
    out << "s^" << es;
    if (arity >= 2) out << " u^" << eu;
    if (arity >= 3) out << " v^" << ev;
    return out.str();
  };

  if (!args.coeff.empty()) {
    int es = 0, eu = 0, ev = 0;
    std::istringstream is(args.coeff);
    std::string tok;
    std::vector<int> vals;
    while (std::getline(is, tok, ',')) vals.push_back(std::stoi(tok));
    if (vals.empty() || vals.size() > 3)
      throw std::invalid_argument("series: --coeff expects 1 to 3 comma-separated exponents");
    es = vals[0];
    if (vals.size() > 1) eu = vals[1];
    if (vals.size() > 2) ev = vals[2];
    LaurentPoly lp = expandCoefficient(g, es, eu, ev);
    if (args.json) {
      ordered_json terms = ordered_json::array();
      for (const auto& [e, c] : lp.coeff) terms.push_back(ordered_json::array({e, c}));
      std::cout << ordered_json{{"s", es}, {"u", eu}, {"v", ev}, {"coefficient", terms}}.dump(2)
                << "\n";
    } else {
      std::cout << "[" << label(es, eu, ev) << "] = " << lp.str() << "\n";
    }
    return 0;
  }

  TruncSeries t = expandGF(g, args.capS, args.capU, args.capV);
  if (args.json) {
    ordered_json cells = ordered_json::array();
    for (int is = 0; is <= t.capS; ++is)
      for (int iu = 0; iu <= t.capU; ++iu)
        for (int iv = 0; iv <= t.capV; ++iv) {
          const LaurentPoly& lp = t.at(is, iu, iv);
          if (lp.isZero()) continue;
          ordered_json terms = ordered_json::array();
          for (const auto& [e, c] : lp.coeff) terms.push_back(ordered_json::array({e, c}));
          cells.push_back(ordered_json{{"s", is}, {"u", iu}, {"v", iv}, {"coefficient", terms}});
        }
    std::cout << ordered_json{{"cells", cells}}.dump(2) << "\n";
  } else {
    for (int is = 0; is <= t.capS; ++is)
      for (int iu = 0; iu <= t.capU; ++iu)
        for (int iv = 0; iv <= t.capV; ++iv) {
          const LaurentPoly& lp = t.at(is, iu, iv);
          if (lp.isZero()) continue;
          std::cout << label(is, iu, iv) << ": " << lp.str() << "\n";
        }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"logarithmic derivation and form modules of central hyperplane arrangements"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "full report for one arrangement file");
  analyze->add_option("path", an.path, "arrangement text file")->required();
  auto* anField = analyze->add_option("--field", an.field, "q or fp:<prime>");
  analyze->add_flag("--json", an.json, "machine-readable output");
  analyze->add_option("--max-p", an.maxP, "pd/tameness table covers 1..max-p")
      ->check(CLI::Range(1, 12));
  analyze->add_option("--ext", an.ext, "p,i pairs: report Ext^i of the relative p-forms");

  OracleArgs orc;
  auto* oracle = app.add_subcommand("oracle", "compare Groebner Hilbert functions against "
                                              "degreewise linear algebra");
  oracle->add_option("path", orc.path, "arrangement text file")->required();
  oracle->add_option("low", orc.low, "first degree")->required();
  oracle->add_option("high", orc.high, "last degree")->required();
  auto* orField = oracle->add_option("--field", orc.field, "q or fp:<prime>");
  oracle->add_option("--max-p", orc.maxP, "exterior degrees 1..max-p")->check(CLI::Range(1, 12));
  oracle->add_flag("--json", orc.json, "machine-readable output");

  SuiteArgs st;
  auto* suite = app.add_subcommand("suite", "verify the generic-family theorems over a grid");
  suite->add_option("max-n", st.maxN, "largest hyperplane count")->required();
  suite->add_option("max-l", st.maxL, "largest rank")->required();
  suite->add_option("--field", st.field, "q or fp:<prime>");
  suite->add_option("--jobs", st.jobs, "worker threads")->check(CLI::Range(1, 64));
  suite->add_flag("--json", st.json, "machine-readable output");

  SeriesArgs se;
  auto* series = app.add_subcommand("series", "expand the closed-form generating functions");
  series->add_option("which", se.which, "Q, P or T")->required();
  series->add_option("--ell", se.ell, "rank parameter (Q)");
  series->add_option("--p", se.p, "exterior-degree parameter (Q, P)");
  series->add_option("--coeff", se.coeff, "s[,u[,v]] exponents of a single coefficient");
  series->add_option("--truncate-s", se.capS, "s truncation order")->check(CLI::Range(0, 64));
  series->add_option("--truncate-u", se.capU, "u truncation order")->check(CLI::Range(0, 64));
  series->add_option("--truncate-v", se.capV, "v truncation order")->check(CLI::Range(0, 64));
  series->add_flag("--json", se.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    an.fieldGiven = anField->count() > 0;
    orc.fieldGiven = orField->count() > 0;
    if (analyze->parsed()) return runAnalyze(an);
    if (oracle->parsed()) return runOracle(orc);
    if (suite->parsed()) return runSuite(st);
    if (series->parsed()) return runSeries(se);
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    if (msg.find("proportional") != std::string::npos)
      std::cerr << "error: not reduced (" << msg << ")\n";
    else
      std::cerr << "error: " << msg << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // internal cross-check failures (Saito scalar check, predictor consistency)
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
