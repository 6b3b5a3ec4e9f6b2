#include "doctest.h"
#include "waring/scan.hpp"

using namespace waring;

TEST_CASE("trial generator is reproducible") {
  auto a = trial_rng(9, 3), b = trial_rng(9, 3), c = trial_rng(9, 4);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
  const PrimeField F(5);
  for (int i = 0; i < 50; ++i) CHECK_FALSE(is_zero_vector(F, random_vector(F, 2, a)));
}

TEST_CASE("scans are reproducible") {
  ScanConfig cfg{2, 4, 4, 3};
  const auto one = generic_scan(cfg), two = generic_scan(cfg);
  REQUIRE(one.trials.size() == 3);
  for (std::size_t t = 0; t < 3; ++t) {
    CHECK(one.trials[t].rank_span == two.trials[t].rank_span);
    CHECK(one.trials[t].hessian_ranks == two.trials[t].hessian_ranks);
    CHECK(one.trials[t].normal_dim == two.trials[t].normal_dim);
  }
  CHECK(one.certified == two.certified);
}

TEST_CASE("positive scans") {
  for (auto [d, n, r] : {std::tuple{3, 2, 3}, std::tuple{4, 2, 4}, std::tuple{5, 2, 4}}) {
    const auto res = generic_scan({n, d, static_cast<std::size_t>(r), 10});
    CHECK(res.certified_fraction == 1.0);
    CHECK_FALSE(res.modal_failure_stage.has_value());
    CHECK(static_cast<std::uint64_t>(r) * (n + 1) < binomial(n + d, d));
  }
}

TEST_CASE("(6,2,9) never certifies; Hessian rank 1") {
  const auto res = generic_scan({2, 6, 9, 5});
  CHECK(res.certified == 0);
  CHECK(res.modal_failure_stage == Stage::kS5);
  CHECK(res.modal_hessian_profile == std::vector<std::size_t>(9, 1));
}

TEST_CASE("scan argument errors") {
  CHECK_THROWS_AS(generic_scan({2, 4, 4, 0}), WaringError);
  CHECK_THROWS_AS(generic_scan({2, 4, 0, 1}), WaringError);
  CHECK_THROWS_AS(generic_scan({3, 3, 5, 1}), WaringError);
}

TEST_CASE("table 1 small cells") {
  const auto row = table1_row(4, 2, 6);
  CHECK(row.max_passing == 4);
  REQUIRE(row.probes.size() == 6);
  CHECK(row.probes[3].measured == 3u);
  CHECK_FALSE(row.probes[4].pass);
  CHECK(table1_row(4, 1, 3).max_passing == 2);
  CHECK_THROWS(table1_row(3, 2, 2));
  CHECK_THROWS(table1_row(4, 0, 2));
}

TEST_CASE("table 2 small cells") {
  CHECK(table2_row(1, 3).max_passing == 2);
  CHECK(table2_row(2, 4).max_passing == 3);
  CHECK(table2_row(3, 6).max_passing == 5);
  CHECK_THROWS(table2_row(0, 2));
}

TEST_CASE("reference tables") {
  CHECK(table1_reference(4, 2) == 4u);
  CHECK(table1_reference(8, 5) == 87u);
  CHECK_FALSE(table1_reference(7, 5).has_value());
  CHECK_FALSE(table1_reference(3, 2).has_value());
  CHECK(table2_reference(6) == 11u);
  CHECK(table2_reference(9) == 15u);
  CHECK_FALSE(table2_reference(10).has_value());
}
