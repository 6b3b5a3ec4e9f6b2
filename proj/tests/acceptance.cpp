// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Criteria run independently; an exception inside one marks
// only that one as failed.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "examples.hpp"
#include "property_checks.hpp"
#include "waring/criteria.hpp"
#include "waring/cubics.hpp"
#include "waring/io.hpp"
#include "waring/scan.hpp"

using namespace waring;

namespace {

struct Result {
  bool pass = true;
  std::ostringstream log;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string ranks_text(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// 1. ten-term cubic in S^3 C^7
void ten_term_example(Result& res) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto file = read_decomposition(examples::fixture("ten_term_cubic_p6.json"));
  const RationalField Q;
  const auto w = to_input(Q, file);
  const auto rep = certify(Q, w);
  res.require(rep.status == Status::kIdentifiable, std::string("status ") + to_string(rep.status));
  res.require(rep.rank_span == 70, "rank_span " + std::to_string(rep.rank_span));
  res.require(rep.ell == 14u, "ell " + std::to_string(rep.ell.value_or(0)));
  res.require(rep.hessian_rows == 7 && rep.hessian_cols == 98,
              "Hessian shape " + std::to_string(rep.hessian_rows) + "x" + std::to_string(rep.hessian_cols));
  res.require(rep.hessian_ranks == std::vector<std::size_t>(10, 6), "Hessian ranks " + ranks_text(rep.hessian_ranks));
  const auto eqs = contact_equations(Q, build_span(Q, w));
  const auto left = complement_of_column_space(Q, stacked_hessian(Q, eqs, w.terms.back().form));
  res.require(left.size() == 1 && proportional(Q, left[0], Vec<RationalField>{1, 2, 3, 4, 5, 6, 7}),
              "left kernel at the last point is not spanned by (1,...,7)");
  const double s = seconds_since(t0);
  res.require(s < 10.0, "runtime " + std::to_string(s) + " s");
  res.log << "rank_span=" << rep.rank_span << " ell=" << rep.ell.value_or(0) << " H=" << rep.hessian_rows << "x"
          << rep.hessian_cols << " ranks=" << ranks_text(rep.hessian_ranks) << " exact (" << s << " s)";
}

// 2. Kruskal on the same ten points
void kruskal_example(Result& res) {
  const auto t0 = std::chrono::steady_clock::now();
  const RationalField Q;
  const auto k = kruskal_check(Q, examples::ten_term_cubic(Q));
  res.require(k.krank == 7, "krank " + std::to_string(k.krank) + ", expected 7");
  res.require(k.bound == 9, "bound " + std::to_string(k.bound) + ", expected 9");
  res.require(!k.pass, "Kruskal criterion applies");
  const double s = seconds_since(t0);
  res.require(s < 5.0, "runtime " + std::to_string(s) + " s");
  res.log << "krank=" << k.krank << " bound=" << k.bound << " applicable=" << (k.pass ? "yes" : "no") << " (" << s
          << " s)";
}

// 3. exceptional triples (d,n,r)
void exceptional_triples(Result& res) {
  const auto t0 = std::chrono::steady_clock::now();
  struct Triple {
    int d, n;
    std::size_t r;
  };
  for (auto [d, n, r] : {Triple{6, 2, 9}, Triple{4, 3, 8}, Triple{3, 5, 9}}) {
    const auto scan = generic_scan({n, d, r, 20});
    const std::string tag = "(" + std::to_string(d) + "," + std::to_string(n) + "," + std::to_string(r) + ")";
    res.require(scan.certified == 0, tag + " certified " + std::to_string(scan.certified) + " trials");
    bool all_s5 = true, all_rank = true;
    for (const auto& t : scan.trials) {
      all_s5 = all_s5 && t.stage == Stage::kS5;
      for (auto h : t.hessian_ranks) all_rank = all_rank && h == static_cast<std::size_t>(n - 1);
    }
    res.require(all_s5, tag + " has failures outside S5");
    res.require(all_rank, tag + " has Hessian ranks other than n-1");
    res.log << tag << ": 0/" << scan.trials.size() << " certified, H rank " << ranks_text(scan.modal_hessian_profile)
            << "; ";
  }
  const double s = seconds_since(t0);
  res.require(s < 120.0, "runtime " + std::to_string(s) + " s");
  res.log << "(" << s << " s)";
}

// 4. generic identifiability at desk scale
void positive_cases(Result& res) {
  const auto t0 = std::chrono::steady_clock::now();
  struct Triple {
    int d, n;
    std::size_t r;
  };
  for (auto [d, n, r] : {Triple{3, 2, 3}, Triple{3, 3, 5}, Triple{3, 4, 6}, Triple{4, 2, 4}, Triple{4, 3, 5},
                         Triple{5, 2, 4}}) {
    const std::string tag = "(" + std::to_string(d) + "," + std::to_string(n) + "," + std::to_string(r) + ")";
    try {
      const auto scan = generic_scan({n, d, r, 10});
      res.require(scan.certified_fraction == 1.0, tag + " certified fraction " + std::to_string(scan.certified_fraction));
      res.log << tag << "=" << scan.certified_fraction << " ";
    } catch (const WaringError& e) {
      res.require(false, tag + " " + e.what());
      res.log << tag << "=error ";
    }
  }
  const double s = seconds_since(t0);
  res.require(s < 120.0, "runtime " + std::to_string(s) + " s");
  res.log << "(" << s << " s)";
}

// 5. bound tables, small cells
void table_cells(Result& res) {
  const auto t0 = std::chrono::steady_clock::now();
  struct Cell {
    int d, n;
    std::size_t expected;
  };
  for (auto [d, n, expected] : {Cell{4, 2, 4}, Cell{4, 3, 5}, Cell{4, 4, 7}, Cell{6, 2, 6}, Cell{6, 3, 12}}) {
    const auto row = table1_row(d, n, expected + 1);
    const bool next_fails = !row.probes.back().pass;
    res.require(row.max_passing == expected && next_fails, "table 1 d=" + std::to_string(d) + " n=" + std::to_string(n) +
                                                               " gave " + std::to_string(row.max_passing));
    res.log << "T1(" << d << "," << n << ")=" << row.max_passing << " ";
  }
  const std::size_t table2[] = {2, 3, 5, 6, 8};
  for (int n = 1; n <= 5; ++n) {
    const auto row = table2_row(n, table2[n - 1] + 1);
    res.require(row.max_passing == table2[n - 1] && !row.probes.back().pass,
                "table 2 n=" + std::to_string(n) + " gave " + std::to_string(row.max_passing));
    res.log << "T2(" << n << ")=" << row.max_passing << " ";
  }
  const auto six = table2_row(6, 11);
  const auto& p = six.probes.back();
  res.require(p.pass, "table 2 n=6 r=11 tangent " + std::to_string(p.measured.value_or(0)));
  res.require(p.flattening_rank == 218 && p.expected_flattening_rank == 220,
              "table 2 n=6 r=11 Koszul rank " + std::to_string(p.flattening_rank));
  res.log << "T2(6): r=11 tangent=" << p.measured.value_or(0) << " koszul=" << p.flattening_rank << "/"
          << p.expected_flattening_rank;
  const double s = seconds_since(t0);
  res.require(s < 600.0, "runtime " + std::to_string(s) + " s");
  res.log << " (" << s << " s)";
}

// 6. closed-form columns of table 1, d = 4..8, n = 1..10
void formula_columns(Result& res) {
  // published values, rows n = 1..10, columns d = 4..8
  const std::uint64_t spade[10][5] = {
      {2, 2, 3, 3, 4},       {3, 3, 6, 6, 10},      {4, 4, 10, 10, 20},    {5, 5, 15, 15, 35},
      {6, 6, 21, 21, 56},    {7, 7, 28, 28, 84},    {8, 8, 36, 36, 120},   {9, 9, 45, 45, 165},
      {10, 10, 55, 55, 220}, {11, 11, 66, 66, 286},
  };
  const std::uint64_t box[10][5] = {
      {2, 3, 3, 4, 4},       {4, 5, 6, 7, 8},       {6, 8, 9, 11, 12},     {8, 10, 12, 14, 16},
      {10, 13, 15, 18, 20},  {12, 15, 18, 21, 24},  {14, 18, 21, 25, 28},  {16, 20, 24, 28, 32},
      {18, 23, 27, 32, 36},  {20, 25, 30, 35, 40},
  };
  std::size_t cells = 0;
  for (int n = 1; n <= 10; ++n)
    for (int d = 4; d <= 8; ++d) {
      const auto b = bounds(n, d);
      const int delta = d / 2;
      const std::string tag = "d=" + std::to_string(d) + " n=" + std::to_string(n);
      res.require(b.ik_bound == binomial(n + delta - 1, delta - 1) && b.ik_bound == spade[n - 1][d - 4],
                  tag + " ik bound " + std::to_string(b.ik_bound));
      res.require(b.kruskal_generic_bound == static_cast<std::uint64_t>((d * (n + 1) - d + 1) / 2) &&
                      b.kruskal_generic_bound == box[n - 1][d - 4],
                  tag + " Kruskal bound " + std::to_string(b.kruskal_generic_bound));
      ++cells;
    }
  res.log << cells << " cells";
}

// 7. cubic base cases
void cubic_cases_ledger(Result& res) {
  struct Case {
    const char* name;
    int n;
    std::optional<std::size_t> dim2;
    std::size_t dim3;
  };
  const std::vector<Case> cases = {
      {"proprep", 6, 0, 3},   {"proprep", 7, 0, 3},   {"proprep2", 5, 0, 6},  {"proprep2", 6, 0, 7},
      {"proprep2", 7, 0, 8},  {"codim433", 6, {}, 0}, {"codim433", 7, {}, 0}, {"codim433", 8, {}, 0},
      {"codim433", 9, {}, 0}, {"codim4", 8, {}, 1},   {"codim4", 9, {}, 1},   {"codim4", 10, {}, 1},
      {"codim4-pencil", 8, {}, 3}, {"ah", 3, {}, 4},  {"ah", 5, {}, 2},       {"ah", 6, {}, 7},
      {"ah", 7, {}, 8},
  };
  double slowest = 0;
  for (const auto& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = run_case(c.name, c.n);
    const double s = seconds_since(t0);
    slowest = std::max(slowest, s);
    const std::string tag = std::string(c.name) + " n=" + std::to_string(c.n);
    res.require(r.dim3 == c.dim3, tag + " dim(3)=" + std::to_string(r.dim3));
    if (c.dim2) res.require(r.dim2 == c.dim2, tag + " dim(2)=" + std::to_string(r.dim2.value_or(99)));
    res.require(r.match, tag + " " + format_case(r));
    res.require(s < 60.0, tag + " took " + std::to_string(s) + " s");
  }
  for (int n : {5, 6, 7}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = run_case("cubiche", n);
    slowest = std::max(slowest, seconds_since(t0));
    const std::string tag = "cubiche n=" + std::to_string(n);
    res.require(!r.singular.empty(), tag + " checked no points");
    for (const auto& s : r.singular) {
      if (n == 5)
        res.require(!s.zero_dimensional && s.rank == 4, tag + " rank " + std::to_string(s.rank));
      else
        res.require(s.zero_dimensional, tag + " rank " + std::to_string(s.rank));
    }
  }
  res.log << cases.size() << " dimension cases, cubiche n=5,6,7 (slowest " << slowest << " s)";
}

// 8. property suites
void property_suites(Result& res) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::pair<const char*, std::function<props::Outcome()>> suites[] = {
      {"euler", [] { return props::euler_relation(100); }},
      {"flattenings", [] { return props::flattening_ranks(50); }},
      {"invariance", [] { return props::certify_invariance(20); }},
      {"duality", [] { return props::normal_space_duality(20); }},
      {"fp-vs-q", [] { return props::prime_rational_agreement(20); }},
  };
  for (const auto& [name, run] : suites) {
    const auto o = run();
    res.require(o.ok, std::string(name) + ": " + o.detail);
    res.log << name << "=" << o.cases << " ";
  }
  res.log << "(" << seconds_since(t0) << " s)";
}

}  // namespace

int main() {
  const std::pair<const char*, void (*)(Result&)> criteria[] = {
      {"ten-term cubic certified exactly", ten_term_example},
      {"Kruskal k-rank and bound on the ten-term cubic", kruskal_example},
      {"exceptional triples fail at S5 with rank n-1", exceptional_triples},
      {"generic identifiability at desk scale", positive_cases},
      {"table 1 and table 2 small cells", table_cells},
      {"table 1 closed-form columns", formula_columns},
      {"cubic base cases", cubic_cases_ledger},
      {"property suites", property_suites},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [title, run] : criteria) {
    ++index;
    Result res;
    try {
      run(res);
    } catch (const std::exception& e) {
      res.require(false, std::string("exception: ") + e.what());
    }
    if (!res.pass) ++failed;
    std::cout << (res.pass ? "PASS" : "FAIL") << "  criterion " << index << ": " << title << "\n    "
              << res.log.str() << '\n';
    for (const auto& f : res.failures) std::cout << "    failed: " << f << '\n';
    std::cout.flush();
  }
  std::cout << (8 - failed) << "/8 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
