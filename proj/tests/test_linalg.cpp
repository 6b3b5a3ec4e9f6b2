#include "doctest.h"
#include "waring/field.hpp"
#include "waring/linalg.hpp"
#include "waring/scan.hpp"

using namespace waring;

namespace {

template <class Field>
Mat<Field> from_ints(const Field& F, std::vector<std::vector<long>> rows) {
  Mat<Field> m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = F.from_int(rows[i][j]);
  return m;
}

template <class Field>
void check_kernel(const Field& F, const Mat<Field>& a) {
  const auto ker = kernel_basis(F, a);
  CHECK(rank(F, a) + ker.size() == a.cols());
  for (const auto& v : ker) CHECK(is_zero_vector(F, apply(F, a, v)));
  if (!ker.empty()) CHECK(rank(F, rows_to_matrix(ker, a.cols())) == ker.size());
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const PrimeField F(7);
  CHECK(F.add(5, 4) == 2);
  CHECK(F.sub(2, 5) == 4);
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.inv(3) == 5);
  CHECK(F.div(1, 3) == 5);
  CHECK(F.neg(0) == 0);
  CHECK(F.from_int(-1) == 6);
  CHECK(F.pow(3, 6) == 1);
  CHECK(F.from_rational(mpq_class(1, 2)) == 4);
  CHECK_THROWS_AS(F.inv(0), std::domain_error);
  CHECK_THROWS_AS(F.from_rational(mpq_class(1, 7)), std::domain_error);
  CHECK(F.label() == "prime:7");
  CHECK(PrimeField().modulus() == 2147483647u);
  CHECK_THROWS(PrimeField(9));
  CHECK_THROWS(PrimeField(2));
}

TEST_CASE("rational field arithmetic") {
  const RationalField Q;
  CHECK(Q.add(mpq_class(1, 2), mpq_class(1, 3)) == mpq_class(5, 6));
  CHECK(Q.inv(mpq_class(-2, 3)) == mpq_class(-3, 2));
  CHECK_THROWS_AS(Q.inv(mpq_class(0)), std::domain_error);
  CHECK(Q.to_string(Q.div(Q.from_int(4), Q.from_int(6))) == "2/3");
  CHECK(Q.label() == "rational");
}

TEST_CASE_TEMPLATE("rank of small matrices", Field, PrimeField, RationalField) {
  const Field F;
  CHECK(rank(F, Mat<Field>(3, 5, F.zero())) == 0);
  auto id = Mat<Field>(4, 4, F.zero());
  for (int i = 0; i < 4; ++i) id(i, i) = F.one();
  CHECK(rank(F, id) == 4);
  CHECK(kernel_basis(F, id).empty());
  CHECK(rank(F, from_ints(F, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
  CHECK(rank(F, Mat<Field>(0, 3)) == 0);
}

TEST_CASE_TEMPLATE("kernel of [1, -1]", Field, PrimeField, RationalField) {
  const Field F;
  const auto ker = kernel_basis(F, from_ints(F, {{1, -1}}));
  REQUIRE(ker.size() == 1);
  CHECK(F.equal(ker[0][0], ker[0][1]));
  CHECK_FALSE(F.is_zero(ker[0][0]));
}

TEST_CASE_TEMPLATE("left kernel", Field, PrimeField, RationalField) {
  const Field F;
  CHECK(complement_of_column_space(F, from_ints(F, {{1, 0, 2}, {0, 1, 3}})).empty());
  const auto left = complement_of_column_space(F, from_ints(F, {{1}, {0}, {0}}));
  REQUIRE(left.size() == 2);
  for (const auto& v : left) CHECK(F.is_zero(v[0]));
  CHECK(rank(F, rows_to_matrix(left, 3)) == 2);
}

TEST_CASE("kernel invariants on random matrices") {
  const PrimeField F(101);
  auto rng = trial_rng(3, 0);
  for (int t = 0; t < 30; ++t) {
    const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
    Mat<PrimeField> a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng() % 3 == 0 ? 0 : rng() % 101;
    CHECK(rank(F, a) <= std::min(rows, cols));
    check_kernel(F, a);
    CHECK(kernel_basis(F, a) == kernel_basis(F, a));
  }
}

TEST_CASE("Bareiss handles fractions and large entries") {
  const RationalField Q;
  Mat<RationalField> a(3, 3);
  // Hilbert matrix: nonsingular with fractional entries
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = mpq_class(1, i + j + 1);
  CHECK(rank(Q, a) == 3);
  check_kernel(Q, a);
  a(2, 0) = a(0, 0) + a(1, 0);
  a(2, 1) = a(0, 1) + a(1, 1);
  a(2, 2) = a(0, 2) + a(1, 2);
  CHECK(rank(Q, a) == 2);
  check_kernel(Q, a);
  Mat<RationalField> big(2, 2);
  big(0, 0) = mpq_class("123456789012345678901234567890");
  big(0, 1) = mpq_class("2");
  big(1, 0) = mpq_class("246913578024691357802469135780");
  big(1, 1) = mpq_class("4");
  CHECK(rank(Q, big) == 1);
}

TEST_CASE("rank over F_p never exceeds rank over Q") {
  const RationalField Q;
  const PrimeField F(5);
  // rank 2 over Q, 1 mod 5
  CHECK(rank(Q, from_ints(Q, {{1, 2}, {3, 11}})) == 2);
  CHECK(rank(F, from_ints(F, {{1, 2}, {3, 11}})) == 1);
}

TEST_CASE("proportional vectors") {
  const RationalField Q;
  const Vec<RationalField> u{1, 2, 3}, v{-2, -4, -6}, w{1, 2, 4};
  CHECK(proportional(Q, u, v));
  CHECK_FALSE(proportional(Q, u, w));
}
