// Acceptance suite: every release criterion in one binary, one verdict
// line each. Exits nonzero if any criterion fails. argv[1] must be the
// path to the stanley CLI (used by the determinism criterion).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "stanley/depth_oracle.hpp"
#include "stanley/json_io.hpp"
#include "stanley/schmitt_vogel.hpp"
#include "stanley/sdepth.hpp"
#include "stanley/verify.hpp"
#include "test_util.hpp"

using namespace stanley;

namespace {

int failures = 0;

void verdict(int number, const std::string& description, bool pass,
             const std::string& detail = "") {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
            << description;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << '\n';
  if (!pass) ++failures;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Counts checks whose name starts with the prefix; all must pass.
std::pair<int, bool> tally(const json& section, const std::string& prefix) {
  int count = 0;
  bool all = true;
  if (!section.contains("rows")) return {0, false};
  for (const auto& row : section["rows"]) {
    if (!row.contains("checks")) continue;
    for (const auto& check : row["checks"]) {
      const std::string name = check["name"].get<std::string>();
      if (name.rfind(prefix, 0) != 0) continue;
      ++count;
      all = all && check["pass"].get<bool>();
    }
  }
  return {count, all};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  // 1. First worked example: sv = 2 exactly, sdepth(S/I) >= 2, sdepth(I) >= 3,
  //    within a second.
  {
    const auto start = std::chrono::steady_clock::now();
    const SqfIdeal I = worked_example_1();
    const SvResult sv = sv_number(I);
    const int sd_q = sdepth(I, PosetKind::quotient, full_set(4)).value;
    const int sd_i = sdepth(I, PosetKind::ideal, full_set(4)).value;
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    std::ostringstream detail;
    detail << "sv=" << sv.r << " sdepth(S/I)=" << sd_q << " sdepth(I)=" << sd_i << " in "
           << ms << " ms";
    verdict(1, "example (x1x2, x1x3, x2x3x4): sv=2 and Stanley depth bounds",
            sv.r == 2 && sd_q >= 2 && sd_i >= 3 && ms < 1000.0, detail.str());
  }

  // 2. Second worked example: reference witness accepted, sv = 3, bounds hold,
  //    within ten seconds.
  {
    const auto start = std::chrono::steady_clock::now();
    const SqfIdeal I = worked_example_2();
    const bool witness_ok = check_sv_witness(I, worked_example_2_witness()).ok();
    const SvResult sv = sv_number(I);
    const int sd_q = sdepth(I, PosetKind::quotient, full_set(5)).value;
    const int sd_i = sdepth(I, PosetKind::ideal, full_set(5)).value;
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    std::ostringstream detail;
    detail << "witness=" << (witness_ok ? "valid" : "invalid") << " sv=" << sv.r
           << " sdepth(S/I)=" << sd_q << " sdepth(I)=" << sd_i << " in " << ms << " ms";
    verdict(2, "degree-3 ideal in 5 variables: reference witness, sv=3, bounds",
            witness_ok && sv.r == 3 && sd_q >= 2 && sd_i >= 3 && ms < 10000.0, detail.str());
  }

  // 3./4./5. Main sweep over generated chordal clutters, n <= 6, all d.
  {
    VerifyOptions opts;
    opts.seed = 42;
    opts.max_n = 6;
    const auto instances = default_main_instances(opts);
    const VerificationReport report = verify_main(instances, opts);

    const auto [conj_count, conj_ok] = tally(report.data, "sdepth_quotient_ge_depth");
    std::ostringstream d3;
    d3 << report.instances_checked << " instances, " << conj_count << " conjecture checks";
    verdict(3, "Stanley's conjecture on >= 200 chordal d-complement instances",
            report.instances_checked >= 200 && conj_count >= 200 && conj_ok && report.all_pass(),
            d3.str());

    const auto [lq_count, lq_ok] = tally(report.data, "chordal_lq_order_valid");
    const auto [depth_count, depth_ok] = tally(report.data, "depth_lq_equals_oracle");
    std::ostringstream d4;
    d4 << lq_count << " constructed orders, " << depth_count << " depth comparisons";
    verdict(4, "constructive linear-quotient orders match the depth oracle",
            lq_count > 0 && lq_ok && depth_count > 0 && depth_ok, d4.str());

    const auto [elim_count, elim_ok] = tally(report.data, "elimination_depth_v");
    std::ostringstream d5;
    d5 << elim_count << " eliminations";
    verdict(5, "depth never drops under elimination at a dividing simplicial vertex",
            elim_count > 0 && elim_ok, d5.str());
  }

  // 6./7. Schmitt-Vogel sweep over random squarefree ideals, n <= 6, |G| <= 8.
  {
    VerifyOptions opts;
    opts.seed = 42;
    opts.max_n = 6;
    const auto instances = default_smain_instances(opts);
    const VerificationReport report = verify_smain(instances, opts);

    const auto [bound_i, ok_i] = tally(report.data, "sdepth_ideal_ge_sv_bound");
    const auto [bound_q, ok_q] = tally(report.data, "sdepth_quotient_ge_sv_bound");
    std::ostringstream d6;
    d6 << report.instances_checked << " ideals";
    verdict(6, "both Schmitt-Vogel bounds on >= 200 random ideals",
            report.instances_checked >= 200 && bound_i >= 200 && bound_q >= 200 && ok_i && ok_q,
            d6.str());

    const auto [loc_count, loc_ok] = tally(report.data, "transport_localize");
    const auto [colon_count, colon_ok] = tally(report.data, "localization_equals_colon");
    const auto [elim_count, elim_ok] = tally(report.data, "transport_eliminate");
    std::ostringstream d7;
    d7 << loc_count << " localizations, " << elim_count << " eliminations";
    verdict(7, "witness transports validate with their level-count bounds",
            loc_count > 0 && loc_ok && colon_count > 0 && colon_ok && elim_count > 0 && elim_ok,
            d7.str());
  }

  // 8. Oracle sanity: principal values for n = 2..6 and the maximal ideal
  //    against a brute-force partition enumeration.
  {
    bool ok = true;
    std::ostringstream detail;
    for (int n = 2; n <= 6; ++n) {
      const SqfIdeal principal = SqfIdeal::make(n, {var_bit(1) | var_bit(2)});
      ok = ok && depth_quotient(principal, full_set(n)) == n - 1;
      ok = ok && sdepth(principal, PosetKind::quotient, full_set(n)).value == n - 1;
    }
    const int expected_maximal[5] = {0, 0, 1, 2, 2};  // ceil(n/2) for n = 2,3,4
    for (int n = 2; n <= 4; ++n) {
      const SqfIdeal maximal = SqfIdeal::make(n, k_subsets(full_set(n), 1));
      const int solver = sdepth(maximal, PosetKind::ideal, full_set(n)).value;
      const int naive =
          testutil::naive_sdepth(char_poset(maximal, PosetKind::ideal, full_set(n)));
      detail << "sdepth(m_" << n << ")=" << solver << "/" << naive << " ";
      ok = ok && solver == naive && solver == expected_maximal[n];
    }
    verdict(8, "principal and maximal-ideal values match the brute force", ok, detail.str());
  }

  // 9. Byte-identical reports across two seeded CLI runs.
  {
    bool ok = false;
    std::string detail = "CLI path missing";
    if (!cli.empty()) {
      const std::string out1 = "acceptance-report-1.json";
      const std::string out2 = "acceptance-report-2.json";
      const std::string base =
          "\"" + cli + "\" verify --seed 42 --json-out ";
      const int rc1 = std::system((base + out1 + " > acceptance-run-1.log").c_str());
      const int rc2 = std::system((base + out2 + " > acceptance-run-2.log").c_str());
      const std::string r1 = slurp(out1);
      const std::string r2 = slurp(out2);
      ok = rc1 == 0 && rc2 == 0 && !r1.empty() && r1 == r2;
      std::ostringstream d;
      d << "exit codes " << rc1 << "/" << rc2 << ", " << r1.size() << " bytes each";
      detail = d.str();
    }
    verdict(9, "two runs of `stanley verify --seed 42` are byte-identical", ok, detail);
  }

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
