// One line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cayley/errors.hpp"
#include "cayley/suites.hpp"

using namespace cayley;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> suites;
  std::function<bool(const std::vector<SuiteResult>&, std::string&)> extra;
};

// Criterion 17 is a measurement; the suite's own assertions are the gate and
// the maxima are printed for the record.
bool trend_note(const std::vector<SuiteResult>& r, std::string& note) {
  const json& d = r[0].details;
  note = "max ratio " + d["max_ratio"].value("graph", std::string("-")) + " = " +
         std::to_string(d["max_ratio"].value("ratio", 0.0)) + "; bipartite dense max " +
         std::to_string(d["max_ratio_bipartite_dense"].value("ratio", 0.0));
  return true;
}

bool phi_rate(const std::vector<SuiteResult>& r, std::string& note) {
  int worst_valid = -1, worst_total = 1;
  for (const auto& run : r[0].details["runs"]) {
    const int v = run["valid"], t = run["records"];
    if (worst_valid < 0 || v * worst_total < worst_valid * t) {
      worst_valid = v;
      worst_total = t;
    }
  }
  note = "worst seed " + std::to_string(worst_valid) + "/" + std::to_string(worst_total);
  return true;
}

bool appendix_a_trend(const std::vector<SuiteResult>& r, std::string& note) {
  for (const auto& row : r[0].details["rows"])
    note += "t=" + std::to_string(row["t"].get<int>()) + ": log2 i - n = " +
            std::to_string(row["log2_i_minus_n"].get<double>()) + "  ";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "engine equivalence (branching vs brute force, <= 24 vertices)", {"engine"}, nullptr},
      {2, "i(C_n) = Lucas(n), 3 <= n <= 30", {"lucas"}, nullptr},
      {3, "i(K_{d,d}) = 2^{d+1} - 1, d <= 6", {"kdd"}, nullptr},
      {4, "i(G x K2) >= i(G)^2 on Cayley graphs <= 14 vertices; i(C10) = 123", {"zhao"}, nullptr},
      {5, "i <= 2 sum 2^{n-|N(A)|} over small-closure A, n <= 14", {"eqsumm"}, nullptr},
      {6, "i <= 2^{n+1} exp(sum 2^{-|N(A)|}), outward rounding", {"cluster"}, nullptr},
      {7, "Olson disjunction, all (M,N), order <= 10", {"olson"}, nullptr},
      {8, "PRP witness j=2, |M|,|D| <= 4, order <= 12", {"prp"}, nullptr},
      {9, "chain existence |M| <= 8, |D| <= 3, k <= 2, c = 4, order <= 12", {"pruse2"}, nullptr},
      {10, "|M + iD| <= m + d^i t on 10^4 random instances", {"fact41"}, nullptr},
      {11, "psi-approximation and |S| <= |F| + 2t psi/(d - psi) on Appendix B", {"psi", "lemma43"},
       nullptr},
      {12, "phi-approximation valid within 100 retries, 5 seeds", {"phi"}, phi_rate},
      {13, "greedy cover <= (|B|/a)(1 + ln b), 10^3 instances", {"cover"}, nullptr},
      {14, "Appendix B structure, n <= 12, d = 3", {"appendix-b"}, nullptr},
      {15, "Appendix A d = 3: regular, connected, maximal sets, i >= 2^{n+1}, trend",
       {"appendix-a"}, appendix_a_trend},
      {16, "thinning: (1)-(2) 100/100, (3)-(4) >= 90/100", {"thinning"}, nullptr},
      {17, "trend: ratio <= 4 on dense bipartite, complete bipartite exact", {"trend"}, trend_note},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string note;
    std::vector<SuiteResult> results;
    try {
      for (const auto& s : c.suites) {
        results.push_back(run_suite(s));
        const SuiteResult& r = results.back();
        ok = ok && r.passed;
        note += s + ": " + std::to_string(r.checked) + " checks, " +
                std::to_string(r.violations) + " violations; ";
        for (const auto& f : r.failures) note += "[" + f + "] ";
      }
      std::string extra;
      if (c.extra) ok = c.extra(results, extra) && ok;
      note += extra;
    } catch (const Error& e) {
      ok = false;
      note += std::string("error: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d %s (%.1fs) %s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                note.c_str());
    std::fflush(stdout);
    failures += !ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
