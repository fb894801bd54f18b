#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ktrunc/figures.hpp"
#include "ktrunc/functorial.hpp"
#include "ktrunc/kgroups.hpp"
#include "ktrunc/mult.hpp"
#include "ktrunc/verify.hpp"

using json = nlohmann::ordered_json;
using namespace ktrunc;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kProperty = 3;
constexpr int kIo = 4;

json kgroup_json(const KGroupResult& r) {
  json b = json::object();
  for (const auto& [j, len] : r.bands.bands) b[std::to_string(j)] = len;
  return {{"p", r.p}, {"e", r.e}, {"i", r.i}, {"form", r.form},
          {"bands", b}, {"total", r.total}};
}

int cmd_kgroup(i64 pv, i64 e, i64 i, const std::string& form) {
  Prime p(pv);
  json out{{"schema_version", 1}};
  if (form == "closed") {
    out.update(kgroup_json(k_closed_form(p, e, i)));
  } else if (form == "witt") {
    out.update(kgroup_json(k_witt_form(p, e, i)));
  } else {
    KGroupResult c = k_closed_form(p, e, i);
    KGroupResult w = k_witt_form(p, e, i);
    out["p"] = pv;
    out["e"] = e;
    out["i"] = i;
    out["closed"] = kgroup_json(c);
    out["witt"] = kgroup_json(w);
    out["agreement"] = check_equivalence(p, e, i).equal;
  }
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_functorial(i64 p, i64 m, i64 n, i64 i, i64 j) {
  TowerMapQuery q{p, m, n, i, j};
  validate_query(q);
  std::optional<i64> lp = ell_prime(q);
  json out{{"schema_version", 1}, {"p", p}, {"m", m}, {"n", n},
           {"i", i},             {"j", j}};
  out["ell"] = ell(q);
  if (lp) out["ell_prime"] = *lp; else out["ell_prime"] = nullptr;
  out["s"] = query_s(q);
  out["t"] = query_t(q);
  out["green"] = lemma_predicate(q);
  out["nonzero"] = pi_star_nonzero(q);
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_mult(const std::string& mode, i64 pv, i64 e, std::optional<i64> j1,
             std::optional<i64> j2, std::optional<i64> i1, std::optional<i64> i2,
             i64 hi) {
  Prime p(pv);
  bool vary_i = j1.has_value();
  if (vary_i != j2.has_value() || vary_i == i1.has_value() ||
      i1.has_value() != i2.has_value())
    throw std::invalid_argument("mult: give either --j1/--j2 or --i1/--i2");
  Parity second = mode == "aa" ? Parity::a : Parity::b;
  json fixed{{"p", pv}, {"e", e}};
  if (vary_i) {
    fixed["j1"] = *j1;
    fixed["j2"] = *j2;
  } else {
    fixed["i1"] = *i1;
    fixed["i2"] = *i2;
  }
  json grid = json::array();
  for (i64 x = 1; x <= hi; ++x) {
    json row = json::array();
    for (i64 y = 1; y <= hi; ++y) {
      i64 a1 = vary_i ? x : *i1, b1 = vary_i ? *j1 : x;
      i64 a2 = vary_i ? y : *i2, b2 = vary_i ? *j2 : y;
      int cell = 0;
      if (generator_exists(Parity::a, p, e, a1, b1) &&
          generator_exists(second, p, e, a2, b2)) {
        Verdict v = second == Parity::a ? product_aa(a1, b1, a2, b2, p, e)
                                        : product_ab(a1, b1, a2, b2, p, e);
        cell = v == Verdict::nonzero ? 1 : 0;
      }
      row.push_back(cell);
    }
    grid.push_back(std::move(row));
  }
  json out{{"schema_version", 1}, {"mode", mode}, {"fixed", fixed}, {"grid", grid}};
  std::cout << out.dump(2) << "\n";
  return kOk;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  f << body;
  f.flush();
  if (!f) throw std::ios_base::failure("cannot write " + path);
}

int emit(const Figure& fig, const std::string& dir) {
  std::string base = dir + "/" + fig.basename;
  write_file(base + ".svg", fig.svg);
  write_file(base + ".csv", fig.csv);
  json out{{"schema_version", 1},
           {"written", {base + ".svg", base + ".csv"}}};
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_verify(bool quick) {
  if (registered_suite_names() != expected_suite_names())
    throw property_violation("verify: registered suites do not match the checklist");
  int failed = 0;
  long long checks = 0;
  for (const SuiteResult& r : run_all_suites(quick)) {
    std::cout << r.name << ": " << (r.passed ? "ok" : "FAIL") << " ("
              << r.checks << " checks)\n";
    if (!r.passed) {
      std::cout << "  counterexample: " << r.counterexample << "\n";
      ++failed;
    }
    checks += r.checks;
  }
  std::cout << (failed ? "FAILED" : "passed") << " (" << checks << " checks, "
            << (quick ? "quick" : "full") << " ranges)\n";
  return failed ? kProperty : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-adic K-theory of truncated polynomial rings"};
  app.require_subcommand(1);

  i64 p = 2, e = 2, i = 1, j = 1, m = 12, n = 11;
  std::string form = "both", mode = "aa", kind, outdir = ".";
  std::optional<i64> j1, j2, i1, i2;
  i64 hi = 30, emax = 4, dmax = 12, imax = 300, jmax = 180, rmax = 3;
  bool quick = false;

  CLI::App* kg = app.add_subcommand("kgroup", "K-group of k[x]/x^e in weight i");
  kg->add_option("-p", p, "prime")->required();
  kg->add_option("-e", e, "truncation exponent")->required();
  kg->add_option("-i", i, "weight")->required();
  kg->add_option("--form", form, "closed|witt|both")
      ->check(CLI::IsMember({"closed", "witt", "both"}));

  CLI::App* fu = app.add_subcommand("functorial", "transfer data for pi: x^m -> x^n");
  fu->add_option("-p", p, "prime")->required();
  fu->add_option("-m", m, "source truncation")->required();
  fu->add_option("-n", n, "target truncation")->required();
  fu->add_option("-i", i, "weight")->required();
  fu->add_option("-j", j, "band")->required();

  CLI::App* mu = app.add_subcommand("mult", "product table by the Theorem criteria");
  mu->add_option("--mode", mode, "aa|ab")->check(CLI::IsMember({"aa", "ab"}));
  mu->add_option("-p", p, "prime")->required();
  mu->add_option("-e", e, "truncation exponent")->required();
  mu->add_option("--j1", j1, "fixed j1 (vary i axes)");
  mu->add_option("--j2", j2, "fixed j2 (vary i axes)");
  mu->add_option("--i1", i1, "fixed i1 (vary j axes)");
  mu->add_option("--i2", i2, "fixed i2 (vary j axes)");
  mu->add_option("--hi", hi, "grid upper bound");

  CLI::App* fg = app.add_subcommand("figure", "write an SVG/CSV figure pair");
  fg->add_option("kind", kind, "slopes|bands|interlock|multtable")->required();
  fg->add_option("-p", p, "prime");
  fg->add_option("-e", e, "truncation exponent");
  fg->add_option("-i", i, "weight");
  fg->add_option("-m", m, "source truncation");
  fg->add_option("-n", n, "target truncation");
  fg->add_option("--emax", emax, "e axis bound (slopes)");
  fg->add_option("--dmax", dmax, "d axis bound (slopes)");
  fg->add_option("--imax", imax, "i axis bound");
  fg->add_option("--jmax", jmax, "j axis bound");
  fg->add_option("--rmax", rmax, "level bound (bands)");
  fg->add_option("--mode", mode, "aa|ab (multtable)")
      ->check(CLI::IsMember({"aa", "ab"}));
  fg->add_option("--j1", j1, "fixed j1 (multtable, vary i)");
  fg->add_option("--j2", j2, "fixed j2 (multtable, vary i)");
  fg->add_option("--i1", i1, "fixed i1 (multtable, vary j)");
  fg->add_option("--i2", i2, "fixed i2 (multtable, vary j)");
  fg->add_option("--hi", hi, "grid upper bound (multtable)");
  fg->add_option("--output-dir", outdir, "directory for the written files")
      ->envname("KTRUNC_OUTPUT_DIR");

  CLI::App* ve = app.add_subcommand("verify", "run the property suites");
  ve->add_flag("--quick", quick, "reduced ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kUsage;
  }

  try {
    if (kg->parsed()) return cmd_kgroup(p, e, i, form);
    if (fu->parsed()) return cmd_functorial(p, m, n, i, j);
    if (mu->parsed()) return cmd_mult(mode, p, e, j1, j2, i1, i2, hi);
    if (fg->parsed()) {
      if (kind == "slopes") return emit(emit_slopes(emax, dmax, i), outdir);
      if (kind == "bands") return emit(emit_bands(Prime(p), e, i, jmax, rmax), outdir);
      if (kind == "interlock")
        return emit(emit_interlock(Prime(p), m, n, imax, jmax), outdir);
      if (kind == "multtable") {
        bool vary_i = j1.has_value();
        if (vary_i != j2.has_value() || vary_i == i1.has_value() ||
            i1.has_value() != i2.has_value())
          throw std::invalid_argument("multtable: give either --j1/--j2 or --i1/--i2");
        MultMode mm = mode == "aa" ? MultMode::aa : MultMode::ab;
        i64 f1 = vary_i ? *j1 : *i1, f2 = vary_i ? *j2 : *i2;
        return emit(emit_multtable(mm, Prime(p), e, vary_i, f1, f2, hi), outdir);
      }
      throw std::invalid_argument("unknown figure kind: " + kind);
    }
    if (ve->parsed()) return cmd_verify(quick);
  } catch (const property_violation& ex) {
    std::cerr << "property violation: " << ex.what() << "\n";
    return kProperty;
  } catch (const std::ios_base::failure& ex) {
    std::cerr << "io error: " << ex.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
