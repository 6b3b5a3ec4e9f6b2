#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "waring/polyring.hpp"
#include "waring/scan.hpp"

using namespace waring;

TEST_CASE("binomials") {
  CHECK(binomial(5, 3) == 10);
  CHECK(binomial(9, 3) == 84);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 2) == 0);
  CHECK(multinomial({1, 1, 1}) == 6);
  CHECK(multinomial({2, 0, 1}) == 3);
  CHECK(binomial_product({2, 1}, {1, 1}) == 2);
}

TEST_CASE("monomial order for n=1, d=2") {
  const MonomialBasis b(2, 2);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == Exponents{2, 0});
  CHECK(b[1] == Exponents{1, 1});
  CHECK(b[2] == Exponents{0, 2});
  CHECK(monomial_rank({1, 1}, 1, 2) == 1);
}

TEST_CASE("first monomial is x0^d and counts match binomials") {
  for (int n = 0; n <= 5; ++n)
    for (int d = 0; d <= 5; ++d) {
      const auto first = monomial_unrank(0, n, d);
      CHECK(first[0] == d);
      CHECK(MonomialBasis(n + 1, d).size() == binomial(n + d, d));
    }
  CHECK(MonomialBasis(3, 3).size() == 10);
  CHECK_THROWS_AS(monomial_unrank(10, 2, 3), std::out_of_range);
}

TEST_CASE("rank and unrank are inverse bijections") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 5; ++d) {
      const std::size_t count = binomial(n + d, d);
      for (std::size_t i = 0; i < count; ++i) {
        const auto alpha = monomial_unrank(i, n, d);
        CHECK(std::accumulate(alpha.begin(), alpha.end(), 0) == d);
        CHECK(monomial_rank(alpha, n, d) == i);
      }
    }
}

TEST_CASE("graded colex agrees with an independent sort") {
  const int n = 3, d = 4;
  std::vector<Exponents> all;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      for (int c = 0; a + b + c <= d; ++c) all.push_back({d - a - b - c, c, b, a});
  std::sort(all.begin(), all.end(), [](const Exponents& x, const Exponents& y) {
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });
  const MonomialBasis basis(n + 1, d);
  REQUIRE(basis.size() == all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(basis[i] == all[i]);
    CHECK(basis.index_of(all[i]) == i);
  }
}

TEST_CASE("expand_power") {
  const RationalField Q;
  SUBCASE("l = x0, d = 3") {
    const auto p = expand_power(Q, Vec<RationalField>{1, 0}, 3);
    CHECK(p.coeffs == Vec<RationalField>{1, 0, 0, 0});
  }
  SUBCASE("binomial theorem") {
    CHECK(expand_power(Q, Vec<RationalField>{1, 1}, 2).coeffs == Vec<RationalField>{1, 2, 1});
  }
  SUBCASE("coefficient of x0 x1 x2 in (x0 + 2x1 + ... + 7x6)^3") {
    Vec<RationalField> l;
    for (int i = 1; i <= 7; ++i) l.push_back(i);
    const auto p = expand_power(Q, l, 3);
    // oracle: multiply the linear form by itself three times
    SymTensor<RationalField> lin{6, 1, l};
    const auto cube = multiply(Q, multiply(Q, lin, lin), lin);
    CHECK(cube.coeffs == p.coeffs);
    CHECK(p.coeffs[monomial_rank({1, 1, 1, 0, 0, 0, 0}, 6, 3)] == 36);
  }
  SUBCASE("zero form rejected") { CHECK_THROWS(expand_power(Q, Vec<RationalField>{0, 0}, 2)); }
  SUBCASE("homogeneous of degree d in l") {
    const Vec<RationalField> l{1, -2, 3};
    Vec<RationalField> l3{3, -6, 9};
    CHECK(expand_power(Q, l3, 4).coeffs == scale(Q, mpq_class(81), expand_power(Q, l, 4)).coeffs);
  }
}

TEST_CASE("partial derivatives") {
  const RationalField Q;
  const auto x0cubed = expand_power(Q, Vec<RationalField>{1, 0}, 3);
  CHECK(partial_derivative(Q, x0cubed, 0).coeffs == Vec<RationalField>{3, 0, 0});
  CHECK(partial_derivative(Q, x0cubed, 1).coeffs == Vec<RationalField>{0, 0, 0});
}

TEST_CASE("derivatives commute and Euler holds for n=2, d=3") {
  const PrimeField F;
  auto rng = trial_rng(5, 0);
  const SymTensor<PrimeField> p{2, 3, random_vector(F, 10, rng)};
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      CHECK(partial_derivative(F, partial_derivative(F, p, i), j).coeffs ==
            partial_derivative(F, partial_derivative(F, p, j), i).coeffs);
  auto sum = SymTensor<PrimeField>::zero(F, 2, 3);
  for (int j = 0; j <= 2; ++j) sum = add(F, sum, multiply_by_variable(F, partial_derivative(F, p, j), j));
  CHECK(sum.coeffs == scale(F, F.from_int(3), p).coeffs);
}

TEST_CASE("evaluation") {
  const RationalField Q;
  const auto x0cubed = expand_power(Q, Vec<RationalField>{1, 0, 0}, 3);
  CHECK(evaluate(Q, x0cubed, Vec<RationalField>{2, 5, 7}) == 8);

  const PrimeField F;
  auto rng = trial_rng(6, 0);
  for (int t = 0; t < 10; ++t) {
    const auto l = random_vector(F, 4, rng), x = random_vector(F, 4, rng);
    auto dot = F.zero();
    for (int i = 0; i < 4; ++i) dot = F.add(dot, F.mul(l[i], x[i]));
    CHECK(evaluate(F, expand_power(F, l, 5), x) == F.pow(dot, 5));
  }
}

TEST_CASE("weighted sums of powers are linear in the coefficient vectors") {
  const PrimeField F;
  auto rng = trial_rng(7, 0);
  const auto l1 = random_vector(F, 3, rng), l2 = random_vector(F, 3, rng);
  const auto w1 = F.from_int(5), w2 = F.from_int(-3);
  const auto sum = add(F, scale(F, w1, expand_power(F, l1, 4)), scale(F, w2, expand_power(F, l2, 4)));
  const auto x = random_vector(F, 3, rng);
  CHECK(evaluate(F, sum, x) == F.add(F.mul(w1, evaluate(F, expand_power(F, l1, 4), x)),
                                     F.mul(w2, evaluate(F, expand_power(F, l2, 4), x))));
}
