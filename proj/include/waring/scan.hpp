#pragma once

// Randomized scans over F_p: generic identifiability at random decompositions,
// and the per-r smoothness probes behind the published bound tables.
//
// A passing scan is a high-probability statement about a general point, not a
// proof.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "waring/criteria.hpp"
#include "waring/field.hpp"

namespace waring {

inline constexpr const char* kGenericDisclaimer =
    "generic: holds with high probability at random points over F_p; not a proof";

struct ScanConfig {
  int n = 0;
  int d = 0;
  std::size_t r = 0;
  std::size_t trials = 10;
  std::uint64_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 1;
  std::optional<int> koszul_a;
};

struct TrialSummary {
  Status status = Status::kInconclusive;
  Stage stage = Stage::kS1;
  Reason reason = Reason::kNone;
  std::size_t rank_span = 0;
  std::optional<std::size_t> flattening_rank;
  std::optional<std::size_t> tangent_dim;
  std::optional<std::size_t> normal_dim;
  std::vector<std::size_t> hessian_ranks;
};

struct ScanResult {
  ScanConfig config;
  std::vector<TrialSummary> trials;
  std::size_t certified = 0;
  double certified_fraction = 0.0;
  std::optional<Stage> modal_failure_stage;
  std::vector<std::size_t> modal_hessian_profile;
};

// Reproducible generator for trial `trial` of a run seeded with `seed`.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

// Uniform nonzero vector of length m over F_p.
Vec<PrimeField> random_vector(const PrimeField& F, std::size_t m, std::mt19937_64& rng);

// r random forms with unit weights.
WaringInput<PrimeField> random_decomposition(const PrimeField& F, int n, int d, std::size_t r, std::mt19937_64& rng);

ScanResult generic_scan(const ScanConfig& cfg);

struct ProbeResult {
  std::size_t r = 0;
  bool pass = false;
  std::size_t flattening_rank = 0;
  std::size_t expected_flattening_rank = 0;
  std::optional<std::size_t> measured;  // normal dim (table 1) or tangent dim (table 2)
  std::size_t expected = 0;
};

struct TableRow {
  int d = 0;
  int n = 0;
  int koszul_a = 0;  // table 2 only
  std::vector<ProbeResult> probes;
  std::size_t max_passing = 0;  // largest r such that 1..r all pass
};

// Normal-space smoothness test at random points, r = 1..max_r. Requires d >= 4.
TableRow table1_row(int d, int n, std::size_t max_r, std::uint64_t seed = 1,
                    std::uint64_t prime = PrimeField::kDefaultPrime);

// Koszul determinantal-tangent test for cubics at random points, r = 1..max_r.
TableRow table2_row(int n, std::size_t max_r, std::uint64_t seed = 1, std::uint64_t prime = PrimeField::kDefaultPrime,
                    std::optional<int> koszul_a = std::nullopt);

}  // namespace waring

namespace waring {

// Published maximal r certified by the smoothness tests: table 1 for
// d = 4..8, n = 1..10, table 2 (cubics) for n = 1..9. nullopt where no value
// was computed.
std::optional<std::size_t> table1_reference(int d, int n);
std::optional<std::size_t> table2_reference(int n);

}  // namespace waring
