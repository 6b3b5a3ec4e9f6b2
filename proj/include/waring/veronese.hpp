#pragma once

// Tangent spaces to the Veronese variety at the points of a Waring
// decomposition, the linear equations of their span, and the stacked Hessian
// that measures the tangential contact locus at each point.

#include <cstddef>
#include <vector>

#include "waring/errors.hpp"
#include "waring/linalg.hpp"
#include "waring/polyring.hpp"

namespace waring {

template <class Field>
struct WaringTerm {
  typename Field::Element weight;
  LinearForm<Field> form;
};

// A claimed decomposition p = sum_i w_i * l_i^d.
template <class Field>
struct WaringInput {
  int n = 0;
  int d = 0;
  std::vector<WaringTerm<Field>> terms;

  std::size_t r() const { return terms.size(); }
};

// Checks the structural invariants of a decomposition; throws kInvalidInput.
template <class Field>
void validate(const Field& F, const WaringInput<Field>& w) {
  if (w.n < 1) throw WaringError(ErrorCode::kInvalidInput, "n must be at least 1");
  if (w.d < 1) throw WaringError(ErrorCode::kInvalidInput, "d must be at least 1");
  if (w.terms.empty()) throw WaringError(ErrorCode::kInvalidInput, "decomposition has no terms");
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    const auto& t = w.terms[i];
    if (static_cast<int>(t.form.size()) != w.n + 1)
      throw WaringError(ErrorCode::kInvalidInput,
                        "term " + std::to_string(i) + " has " + std::to_string(t.form.size()) +
                            " coefficients, expected " + std::to_string(w.n + 1));
    if (is_zero_vector(F, t.form))
      throw WaringError(ErrorCode::kInvalidInput, "term " + std::to_string(i) + " is the zero form");
    if (F.is_zero(t.weight))
      throw WaringError(ErrorCode::kInvalidInput, "term " + std::to_string(i) + " has zero weight");
  }
}

// The tensor sum_i w_i l_i^d.
template <class Field>
SymTensor<Field> represented_tensor(const Field& F, const WaringInput<Field>& w) {
  auto p = SymTensor<Field>::zero(F, w.n, w.d);
  for (const auto& t : w.terms) p = add(F, p, scale(F, t.weight, expand_power(F, t.form, w.d)));
  return p;
}

// binom(n+d,d) x (n+1) matrix whose column j is the coefficient vector of
// x_j * l^(d-1).
template <class Field>
Mat<Field> tangent_matrix(const Field& F, const LinearForm<Field>& l, int d) {
  if (is_zero_vector(F, l)) throw WaringError(ErrorCode::kInvalidInput, "tangent_matrix: zero form");
  const int n = static_cast<int>(l.size()) - 1;
  const auto power = expand_power(F, l, d - 1);
  const MonomialBasis lower(n + 1, d - 1), upper(n + 1, d);
  Mat<Field> t(upper.size(), n + 1, F.zero());
  for (std::size_t k = 0; k < lower.size(); ++k) {
    Exponents alpha = lower[k];
    for (int j = 0; j <= n; ++j) {
      alpha[j] += 1;
      t(upper.index_of(alpha), j) = power.coeffs[k];
      alpha[j] -= 1;
    }
  }
  return t;
}

// The r(n+1) x binom(n+d,d) matrix stacking the transposed tangent matrices.
template <class Field>
struct TangentSpan {
  int n = 0;
  int d = 0;
  Mat<Field> matrix;
  std::size_t rank = 0;
};

template <class Field>
TangentSpan<Field> build_span(const Field& F, const WaringInput<Field>& w) {
  validate(F, w);
  const std::size_t dim = binomial(w.n + w.d, w.d);
  const std::size_t rows = w.r() * static_cast<std::size_t>(w.n + 1);
  if (rows > dim)
    throw WaringError(ErrorCode::kRankBudgetExceeded,
                      "r(n+1) = " + std::to_string(rows) + " exceeds binom(n+d,d) = " + std::to_string(dim));
  TangentSpan<Field> span{w.n, w.d, Mat<Field>(0, dim), 0};
  for (const auto& t : w.terms) span.matrix.append_rows(tangent_matrix(F, t.form, w.d).transpose());
  span.rank = rank(F, span.matrix);
  return span;
}

// The polynomial q with q(a) = <k, (a.x)^d> under the plain coefficient
// pairing, i.e. coefficients k_alpha * multinomial(alpha).
template <class Field>
SymTensor<Field> dual_form(const Field& F, const Vec<Field>& k, int n, int d) {
  const MonomialBasis basis(n + 1, d);
  SymTensor<Field> q{n, d, Vec<Field>(basis.size(), F.zero())};
  for (std::size_t i = 0; i < basis.size(); ++i)
    q.coeffs[i] = F.mul(k[i], F.from_int(static_cast<std::int64_t>(multinomial(basis[i]))));
  return q;
}

// Linear equations cutting out the span of the tangent spaces.
template <class Field>
struct ContactEquations {
  int n = 0;
  int d = 0;
  std::vector<Vec<Field>> kernel;          // kernel vectors of the span matrix
  std::vector<SymTensor<Field>> forms;     // the same, as degree-d polynomials q_l

  std::size_t ell() const { return kernel.size(); }
};

template <class Field>
ContactEquations<Field> contact_equations(const Field& F, const TangentSpan<Field>& span) {
  ContactEquations<Field> eqs{span.n, span.d, kernel_basis(F, span.matrix), {}};
  for (const auto& k : eqs.kernel) eqs.forms.push_back(dual_form(F, k, span.n, span.d));
  return eqs;
}

// Hessian of a form evaluated at a point.
template <class Field>
Mat<Field> hessian_at(const Field& F, const SymTensor<Field>& q, const Vec<Field>& a) {
  const int n = q.n;
  Mat<Field> h(n + 1, n + 1, F.zero());
  if (q.d < 2) return h;
  const MonomialBasis lower(n + 1, q.d - 2), full(n + 1, q.d);
  for (std::size_t b = 0; b < lower.size(); ++b) {
    Exponents beta = lower[b];
    auto value = F.one();
    for (int i = 0; i <= n; ++i) value = F.mul(value, F.pow(a[i], beta[i]));
    if (F.is_zero(value)) continue;
    for (int i = 0; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        beta[i] += 1;
        beta[j] += 1;
        const auto c = q.coeffs[full.index_of(beta)];
        beta[i] -= 1;
        beta[j] -= 1;
        if (F.is_zero(c)) continue;
        // d^2/dx_i dx_j of x^(beta+e_i+e_j) at x^beta
        const std::int64_t factor = i == j ? static_cast<std::int64_t>(beta[i] + 2) * (beta[i] + 1)
                                           : static_cast<std::int64_t>(beta[i] + 1) * (beta[j] + 1);
        const auto term = F.mul(F.mul(c, F.from_int(factor)), value);
        h(i, j) = F.add(h(i, j), term);
        if (i != j) h(j, i) = F.add(h(j, i), term);
      }
    }
  }
  return h;
}

// [H^1 H^2 ... H^l]: the Hessians of `forms` at `a`, stacked horizontally.
template <class Field>
Mat<Field> stacked_hessian_of(const Field& F, const std::vector<SymTensor<Field>>& forms, const Vec<Field>& a) {
  const std::size_t m = a.size();
  Mat<Field> h(m, forms.size() * m, F.zero());
  for (std::size_t k = 0; k < forms.size(); ++k) {
    const auto block = hessian_at(F, forms[k], a);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) h(i, k * m + j) = block(i, j);
  }
  return h;
}

template <class Field>
Mat<Field> stacked_hessian(const Field& F, const ContactEquations<Field>& eqs, const LinearForm<Field>& l) {
  if (eqs.forms.empty()) throw WaringError(ErrorCode::kInvalidInput, "stacked_hessian: no contact equations");
  return stacked_hessian_of(F, eqs.forms, l);
}

// rank(H) == n: the contact locus is zero-dimensional at the point.
template <class Field>
bool contact_zero_dimensional(const Field& F, const Mat<Field>& h, int n) {
  return rank(F, h) == static_cast<std::size_t>(n);
}

}  // namespace waring
