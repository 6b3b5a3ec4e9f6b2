#pragma once

// Monomial bookkeeping for homogeneous forms of degree d in n+1 variables.
//
// Monomials of a fixed degree are ordered colexicographically on exponent
// vectors (compare the last exponent first, smaller first), so x0^d is always
// monomial 0. Every matrix in the library indexes forms in this order.
//
// Forms store plain polynomial coefficients: the coefficient of x^alpha is
// stored as is, with no multinomial normalization.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "waring/linalg.hpp"

namespace waring {

// Binomial coefficient; throws on overflow of 64 bits.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

// d! / prod(alpha_i!) where d = sum(alpha).
std::uint64_t multinomial(const std::vector<int>& alpha);

// prod_i C(alpha_i, beta_i), the ratio alpha! / (beta! (alpha-beta)!).
std::uint64_t binomial_product(const std::vector<int>& alpha, const std::vector<int>& beta);

using Exponents = std::vector<int>;

// The monomials of one degree in a fixed number of variables.
class MonomialBasis {
 public:
  MonomialBasis(int num_vars, int degree);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }

  const Exponents& operator[](std::size_t index) const { return monomials_.at(index); }
  const std::vector<Exponents>& monomials() const { return monomials_; }

  // Position of `alpha` in the colex order. Throws if alpha has the wrong
  // length or degree.
  std::size_t index_of(const Exponents& alpha) const;

 private:
  int num_vars_;
  int degree_;
  std::vector<Exponents> monomials_;
};

std::size_t monomial_rank(const Exponents& alpha, int n, int d);
Exponents monomial_unrank(std::size_t index, int n, int d);

std::string monomial_to_string(const Exponents& alpha);

// A homogeneous form of degree d in n+1 variables.
template <class Field>
struct SymTensor {
  int n = 0;
  int d = 0;
  Vec<Field> coeffs;

  static SymTensor zero(const Field& F, int n, int d) {
    return {n, d, Vec<Field>(binomial(n + d, d), F.zero())};
  }
};

// Coefficients a_0..a_n of a_0 x_0 + ... + a_n x_n.
template <class Field>
using LinearForm = Vec<Field>;

template <class Field>
SymTensor<Field> add(const Field& F, const SymTensor<Field>& p, const SymTensor<Field>& q) {
  if (p.n != q.n || p.d != q.d) throw std::invalid_argument("add: shape mismatch");
  SymTensor<Field> out = p;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = F.add(p.coeffs[i], q.coeffs[i]);
  return out;
}

template <class Field>
SymTensor<Field> scale(const Field& F, const typename Field::Element& c, SymTensor<Field> p) {
  for (auto& x : p.coeffs) x = F.mul(c, x);
  return p;
}

// l^d, with coefficient multinomial(d; alpha) * prod a_i^alpha_i on x^alpha.
template <class Field>
SymTensor<Field> expand_power(const Field& F, const LinearForm<Field>& l, int d) {
  if (l.empty()) throw std::invalid_argument("expand_power: empty linear form");
  if (is_zero_vector(F, l)) throw std::invalid_argument("expand_power: zero linear form");
  const int n = static_cast<int>(l.size()) - 1;
  const MonomialBasis basis(n + 1, d);
  // powers[i][e] = a_i^e
  std::vector<Vec<Field>> powers(l.size(), Vec<Field>(d + 1, F.one()));
  for (std::size_t i = 0; i < l.size(); ++i)
    for (int e = 1; e <= d; ++e) powers[i][e] = F.mul(powers[i][e - 1], l[i]);
  SymTensor<Field> out{n, d, Vec<Field>(basis.size(), F.zero())};
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& alpha = basis[k];
    auto c = F.from_int(static_cast<std::int64_t>(multinomial(alpha)));
    for (int i = 0; i <= n; ++i) c = F.mul(c, powers[i][alpha[i]]);
    out.coeffs[k] = c;
  }
  return out;
}

// Formal partial derivative with respect to x_j.
template <class Field>
SymTensor<Field> partial_derivative(const Field& F, const SymTensor<Field>& p, int j) {
  if (p.d < 1) throw std::invalid_argument("partial_derivative: degree must be at least 1");
  if (j < 0 || j > p.n) throw std::out_of_range("partial_derivative: variable index");
  const MonomialBasis lower(p.n + 1, p.d - 1);
  const MonomialBasis upper(p.n + 1, p.d);
  SymTensor<Field> out{p.n, p.d - 1, Vec<Field>(lower.size(), F.zero())};
  for (std::size_t k = 0; k < lower.size(); ++k) {
    Exponents alpha = lower[k];
    alpha[j] += 1;
    out.coeffs[k] = F.mul(F.from_int(alpha[j]), p.coeffs[upper.index_of(alpha)]);
  }
  return out;
}

template <class Field>
typename Field::Element evaluate(const Field& F, const SymTensor<Field>& p, const Vec<Field>& x) {
  if (static_cast<int>(x.size()) != p.n + 1)
    throw std::invalid_argument("evaluate: point has wrong number of coordinates");
  const MonomialBasis basis(p.n + 1, p.d);
  auto sum = F.zero();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (F.is_zero(p.coeffs[k])) continue;
    auto term = p.coeffs[k];
    for (int i = 0; i <= p.n; ++i) term = F.mul(term, F.pow(x[i], basis[k][i]));
    sum = F.add(sum, term);
  }
  return sum;
}

// x_j * p, a form of degree d+1.
template <class Field>
SymTensor<Field> multiply_by_variable(const Field& F, const SymTensor<Field>& p, int j) {
  const MonomialBasis src(p.n + 1, p.d);
  const MonomialBasis dst(p.n + 1, p.d + 1);
  SymTensor<Field> out{p.n, p.d + 1, Vec<Field>(dst.size(), F.zero())};
  for (std::size_t k = 0; k < src.size(); ++k) {
    Exponents alpha = src[k];
    alpha[j] += 1;
    out.coeffs[dst.index_of(alpha)] = p.coeffs[k];
  }
  return out;
}

// Product of two forms.
template <class Field>
SymTensor<Field> multiply(const Field& F, const SymTensor<Field>& p, const SymTensor<Field>& q) {
  if (p.n != q.n) throw std::invalid_argument("multiply: variable count mismatch");
  const MonomialBasis bp(p.n + 1, p.d), bq(q.n + 1, q.d), out_basis(p.n + 1, p.d + q.d);
  SymTensor<Field> out{p.n, p.d + q.d, Vec<Field>(out_basis.size(), F.zero())};
  Exponents sum(p.n + 1);
  for (std::size_t a = 0; a < bp.size(); ++a) {
    if (F.is_zero(p.coeffs[a])) continue;
    for (std::size_t b = 0; b < bq.size(); ++b) {
      if (F.is_zero(q.coeffs[b])) continue;
      for (int i = 0; i <= p.n; ++i) sum[i] = bp[a][i] + bq[b][i];
      auto& slot = out.coeffs[out_basis.index_of(sum)];
      slot = F.add(slot, F.mul(p.coeffs[a], q.coeffs[b]));
    }
  }
  return out;
}

}  // namespace waring
