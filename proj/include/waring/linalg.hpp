#pragma once

// Exact dense linear algebra: rank, kernels and annihilators of column spaces.
//
// Prime fields use plain pivoting elimination. Rationals use fraction-free
// (Bareiss) elimination over the integers for ranks, and Gauss-Jordan over
// mpq for kernels.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "waring/field.hpp"
#include "waring/matrix.hpp"

namespace waring {

template <class Field>
using Vec = std::vector<typename Field::Element>;

template <class Field>
using Mat = Matrix<typename Field::Element>;

template <class E>
struct Echelon {
  Matrix<E> reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
};

// Gauss-Jordan elimination to reduced row echelon form.
template <class Field>
Echelon<typename Field::Element> reduced_echelon(const Field& F, Mat<Field> a) {
  using E = typename Field::Element;
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && F.is_zero(a(sel, col))) ++sel;
    if (sel == m) continue;
    if (sel != row)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(row, j));
    const E scale = F.inv(a(row, col));
    for (std::size_t j = col; j < n; ++j) a(row, j) = F.mul(a(row, j), scale);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || F.is_zero(a(i, col))) continue;
      const E f = a(i, col);
      for (std::size_t j = col; j < n; ++j)
        a(i, j) = F.sub(a(i, j), F.mul(f, a(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

namespace detail {

// Forward elimination modulo p with lazy row reduction; returns the rank.
inline std::size_t rank_mod_p(const PrimeField& F, Matrix<std::uint64_t> a) {
  const std::uint64_t p = F.modulus();
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && a(sel, col) == 0) ++sel;
    if (sel == m) continue;
    if (sel != row)
      for (std::size_t j = col; j < n; ++j) std::swap(a(sel, j), a(row, j));
    const std::uint64_t scale = F.inv(a(row, col));
    auto piv = a.row(row);
    for (std::size_t j = col; j < n; ++j) piv[j] = (piv[j] * scale) % p;
    for (std::size_t i = row + 1; i < m; ++i) {
      auto target = a.row(i);
      const std::uint64_t f = target[col];
      if (f == 0) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t j = col; j < n; ++j) target[j] = (target[j] + nf * piv[j]) % p;
    }
    ++row;
  }
  return row;
}

// Bareiss fraction-free elimination on an integer matrix; returns the rank.
inline std::size_t rank_bareiss(std::vector<std::vector<mpz_class>> a, std::size_t n) {
  const std::size_t m = a.size();
  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && sgn(a[sel][col]) == 0) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[row]);
    const mpz_class& piv = a[row][col];
    for (std::size_t i = row + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        a[i][j] = piv * a[i][j] - a[i][col] * a[row][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = piv;
    ++row;
  }
  return row;
}

}  // namespace detail

// Exact rank.
inline std::size_t rank(const PrimeField& F, const Matrix<std::uint64_t>& a) {
  return detail::rank_mod_p(F, a);
}

inline std::size_t rank(const RationalField&, const Matrix<mpq_class>& a) {
  // Clear denominators row by row; row scaling does not change the rank.
  std::vector<std::vector<mpz_class>> z(a.rows(), std::vector<mpz_class>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) z[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
  }
  return detail::rank_bareiss(std::move(z), a.cols());
}

// Basis of {v : A v = 0}: one vector per free column of the reduced echelon
// form, with a 1 in that column.
template <class Field>
std::vector<Vec<Field>> kernel_basis(const Field& F, const Mat<Field>& a) {
  const auto ech = reduced_echelon(F, a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<Vec<Field>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec<Field> v(n, F.zero());
    v[free] = F.one();
    for (std::size_t i = 0; i < ech.pivots.size(); ++i)
      v[ech.pivots[i]] = F.neg(ech.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Annihilator of the column space: basis of {l : l^T A = 0}.
template <class Field>
std::vector<Vec<Field>> complement_of_column_space(const Field& F, const Mat<Field>& a) {
  return kernel_basis(F, a.transpose());
}

// Stacks vectors as the rows of a matrix with `cols` columns.
template <class E>
Matrix<E> rows_to_matrix(const std::vector<std::vector<E>>& rows, std::size_t cols) {
  Matrix<E> m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

template <class Field>
Mat<Field> multiply(const Field& F, const Mat<Field>& a, const Mat<Field>& b) {
  Mat<Field> c(a.rows(), b.cols(), F.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (F.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = F.add(c(i, j), F.mul(a(i, k), b(k, j)));
    }
  return c;
}

template <class Field>
Vec<Field> apply(const Field& F, const Mat<Field>& a, const Vec<Field>& v) {
  Vec<Field> out(a.rows(), F.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!F.is_zero(v[j])) out[i] = F.add(out[i], F.mul(a(i, j), v[j]));
  return out;
}

template <class Field>
bool is_zero_vector(const Field& F, const Vec<Field>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return F.is_zero(x); });
}

// True when u and v are nonzero multiples of each other.
template <class Field>
bool proportional(const Field& F, const Vec<Field>& u, const Vec<Field>& v) {
  if (u.size() != v.size() || is_zero_vector(F, u) || is_zero_vector(F, v)) return false;
  std::size_t k = 0;
  while (F.is_zero(u[k])) ++k;
  if (F.is_zero(v[k])) return false;
  const auto ratio = F.div(v[k], u[k]);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!F.equal(F.mul(ratio, u[i]), v[i])) return false;
  return true;
}

}  // namespace waring
