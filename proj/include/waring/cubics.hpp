#pragma once

// Linear systems of quadrics and cubics on P^n that contain prescribed linear
// subspaces and are singular at prescribed points, computed at random points
// over F_p. The registry encodes the finite base cases behind the cubic
// identifiability results as named configurations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "waring/field.hpp"
#include "waring/linalg.hpp"
#include "waring/polyring.hpp"

namespace waring {

// A linear subspace of P^n. With `coordinates` set it is V(x_i : i in
// coordinates); otherwise it is a general subspace of codimension `codim`.
struct SubspaceSpec {
  int codim = 0;
  std::vector<int> coordinates;
  bool contained = true;  // impose that the hypersurfaces contain it
};

// A double point, general on subspace `on` or general in P^n.
struct PointSpec {
  std::optional<int> on;
};

struct CubicSystemSpec {
  int n = 0;
  int degree = 3;
  std::vector<SubspaceSpec> subspaces;
  std::vector<PointSpec> double_points;
  std::uint64_t seed = 1;
  std::uint64_t prime = PrimeField::kDefaultPrime;
};

// Subspaces as column bases and points as coordinate vectors, drawn from the
// spec's seed.
struct RealizedSystem {
  std::vector<Mat<PrimeField>> subspace_bases;  // (n+1) x (n+1-codim)
  std::vector<Vec<PrimeField>> points;
};

// Throws kInvalidInput on malformed specs.
void validate(const CubicSystemSpec& spec);

RealizedSystem realize(const PrimeField& F, const CubicSystemSpec& spec);

// Rows are linear conditions on the binom(n+deg,deg) coefficients:
// vanishing on each contained subspace, then the n+1 partials at each
// double point.
Mat<PrimeField> assemble_conditions(const PrimeField& F, const CubicSystemSpec& spec, const RealizedSystem& realized);

// Rows restricting a form of degree `degree` to the subspace spanned by the
// columns of `basis`: coefficients of f(basis * y).
Mat<PrimeField> restriction_conditions(const PrimeField& F, const Mat<PrimeField>& basis, int degree);

struct SystemBasis {
  std::size_t dimension = 0;
  std::vector<SymTensor<PrimeField>> forms;
  RealizedSystem realized;
};

SystemBasis system_dimension(const CubicSystemSpec& spec);

struct SingularCheck {
  std::size_t rank = 0;
  bool zero_dimensional = false;
};

// Stacked Hessian of the system at a point; rank n means the common singular
// locus is zero-dimensional there.
SingularCheck singular_locus_zero_dim_at(const PrimeField& F, const std::vector<SymTensor<PrimeField>>& basis,
                                         const Vec<PrimeField>& point);

// ---------------------------------------------------------------------------
// Registry of named base cases

struct CubicCase {
  std::string name;
  std::string description;
  std::vector<int> valid_n;
};

const std::vector<CubicCase>& cubic_cases();

// Throws kUnknownCase listing the valid names.
const CubicCase& find_cubic_case(const std::string& name);

struct PointCheck {
  std::size_t point = 0;
  std::size_t rank = 0;
  bool zero_dimensional = false;
  bool expected_zero_dimensional = false;
  std::optional<std::size_t> expected_rank;
};

struct CaseResult {
  std::string name;
  int n = 0;
  std::optional<std::size_t> dim2, expected_dim2;
  std::size_t dim3 = 0;
  std::size_t expected_dim3 = 0;
  std::vector<PointCheck> singular;
  bool match = false;
};

// Spec of a named case at a given n and degree. Throws kUnknownCase.
CubicSystemSpec case_spec(const std::string& name, int n, int degree, std::uint64_t seed,
                          std::uint64_t prime = PrimeField::kDefaultPrime);

CaseResult run_case(const std::string& name, int n, std::uint64_t seed = 1,
                    std::uint64_t prime = PrimeField::kDefaultPrime);

// One line: "dim(2)=0 dim(3)=3 expected(0,3) MATCH" plus singular checks.
std::string format_case(const CaseResult& result);

// k_n = ceil(binom(n+3,3)/(n+1)).
std::size_t cubic_generic_rank(int n);

}  // namespace waring
