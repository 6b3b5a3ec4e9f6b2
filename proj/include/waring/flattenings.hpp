#pragma once

// Flattenings of symmetric tensors and the smoothness tests built on them.
//
//  * catalecticant: S^k(dual) -> S^(d-k), rows indexed by degree-k monomials
//    beta, columns by degree-(d-k) monomials gamma, entry
//    c_(beta+gamma) * (beta+gamma)! / (beta! gamma!).
//  * Koszul flattening of a cubic: Lambda^a V (x) V* -> Lambda^(a+1) V (x) V,
//    contracting V* with one slot of p and wedging the second slot.
//
// The normal-space test multiplies the kernel of the catalecticant with the
// annihilator of its image. The determinantal tangent test computes
// {q : L M(q) R = 0} where L, R span the left and right kernels of M(p).

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "waring/errors.hpp"
#include "waring/linalg.hpp"
#include "waring/polyring.hpp"

namespace waring {

template <class Field>
Mat<Field> catalecticant(const Field& F, const SymTensor<Field>& p, int k) {
  if (k < 1 || k > p.d - 1)
    throw WaringError(ErrorCode::kInvalidInput,
                      "catalecticant: k = " + std::to_string(k) + " outside [1, " + std::to_string(p.d - 1) + "]");
  const MonomialBasis rows(p.n + 1, k), cols(p.n + 1, p.d - k), full(p.n + 1, p.d);
  Mat<Field> m(rows.size(), cols.size(), F.zero());
  Exponents alpha(p.n + 1);
  for (std::size_t b = 0; b < rows.size(); ++b)
    for (std::size_t g = 0; g < cols.size(); ++g) {
      for (int i = 0; i <= p.n; ++i) alpha[i] = rows[b][i] + cols[g][i];
      const auto& c = p.coeffs[full.index_of(alpha)];
      if (F.is_zero(c)) continue;
      m(b, g) = F.mul(c, F.from_int(static_cast<std::int64_t>(binomial_product(alpha, rows[b]))));
    }
  return m;
}

struct NormalSpace {
  std::size_t flattening_rank = 0;
  std::size_t kernel_dim = 0;       // kernel of the catalecticant map
  std::size_t annihilator_dim = 0;  // annihilator of its image
  std::size_t dimension = 0;        // dim N
  std::size_t expected = 0;         // binom(n+d,d) - r(n+1)
  bool pass = false;
};

// Span of the products u*v, u in the kernel and v in the image annihilator
// of the middle catalecticant, as functionals on degree-d coefficients.
template <class Field>
Mat<Field> normal_space_generators(const Field& F, const SymTensor<Field>& p, int delta,
                                   const std::vector<Vec<Field>>& kernel,
                                   const std::vector<Vec<Field>>& annihilator) {
  const MonomialBasis left(p.n + 1, delta), right(p.n + 1, p.d - delta), full(p.n + 1, p.d);
  // sum index and weight alpha!/(beta! gamma!) for every (beta, gamma)
  std::vector<std::size_t> target(left.size() * right.size());
  Vec<Field> weight(left.size() * right.size());
  Exponents alpha(p.n + 1);
  for (std::size_t b = 0; b < left.size(); ++b)
    for (std::size_t g = 0; g < right.size(); ++g) {
      for (int i = 0; i <= p.n; ++i) alpha[i] = left[b][i] + right[g][i];
      target[b * right.size() + g] = full.index_of(alpha);
      weight[b * right.size() + g] = F.from_int(static_cast<std::int64_t>(binomial_product(alpha, left[b])));
    }
  Mat<Field> gens(0, full.size());
  Vec<Field> row(full.size());
  for (const auto& u : kernel)
    for (const auto& v : annihilator) {
      std::fill(row.begin(), row.end(), F.zero());
      for (std::size_t b = 0; b < left.size(); ++b) {
        if (F.is_zero(u[b])) continue;
        for (std::size_t g = 0; g < right.size(); ++g) {
          if (F.is_zero(v[g])) continue;
          const std::size_t at = b * right.size() + g;
          row[target[at]] = F.add(row[target[at]], F.mul(weight[at], F.mul(u[b], v[g])));
        }
      }
      gens.append_row(row);
    }
  return gens;
}

// Smoothness test through the normal space N of the catalecticant minors.
// Throws kFlatteningRankDeficient when rank(catalecticant) != r.
template <class Field>
NormalSpace normal_space_dimension(const Field& F, const SymTensor<Field>& p, std::size_t r) {
  const int delta = p.d / 2;
  const auto m = catalecticant(F, p, delta);
  NormalSpace out;
  out.flattening_rank = rank(F, m);
  if (out.flattening_rank != r)
    throw WaringError(ErrorCode::kFlatteningRankDeficient,
                      "catalecticant rank " + std::to_string(out.flattening_rank) + " != r = " + std::to_string(r));
  const std::size_t dim = binomial(p.n + p.d, p.d);
  const std::size_t tangent = r * static_cast<std::size_t>(p.n + 1);
  out.expected = dim >= tangent ? dim - tangent : 0;
  // The map sends a row index (degree delta) to a row of m: its kernel is the
  // left kernel of m, the annihilator of its image is the right kernel.
  const auto kernel = complement_of_column_space(F, m);
  const auto annihilator = kernel_basis(F, m);
  out.kernel_dim = kernel.size();
  out.annihilator_dim = annihilator.size();
  out.dimension = kernel.empty() || annihilator.empty()
                      ? 0
                      : rank(F, normal_space_generators(F, p, delta, kernel, annihilator));
  out.pass = dim >= tangent && out.dimension == out.expected;
  return out;
}

namespace detail {

// Subsets of {0..n} of a fixed size in lexicographic order, as bitmasks.
struct SubsetIndex {
  std::vector<unsigned> masks;
  std::vector<int> index_of_mask;

  SubsetIndex(int ground, int size) : index_of_mask(1u << ground, -1) {
    for (unsigned mask = 0; mask < (1u << ground); ++mask)
      if (__builtin_popcount(mask) == size) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
      for (unsigned bit = 0; bit < 32; ++bit) {
        const bool ia = a & (1u << bit), ib = b & (1u << bit);
        if (ia != ib) return ia;
      }
      return false;
    });
    for (std::size_t i = 0; i < masks.size(); ++i) index_of_mask[masks[i]] = static_cast<int>(i);
  }
};

}  // namespace detail

// Koszul flattening of a cubic, of shape
// binom(n+1,a+1)(n+1) x binom(n+1,a)(n+1).
template <class Field>
Mat<Field> koszul_flattening(const Field& F, const SymTensor<Field>& p, int a) {
  if (p.d != 3) throw WaringError(ErrorCode::kInvalidInput, "koszul_flattening: requires a cubic");
  const int n = p.n;
  if (a < 1 || a > n)
    throw WaringError(ErrorCode::kInvalidInput,
                      "koszul_flattening: wedge degree " + std::to_string(a) + " outside [1, " + std::to_string(n) + "]");
  const int m = n + 1;
  const detail::SubsetIndex src(m, a), dst(m, a + 1);
  const MonomialBasis cubic(m, 3);
  // Symmetric tensor entries T_jkl with p(x) = sum T_jkl x_j x_k x_l.
  std::vector<typename Field::Element> t(static_cast<std::size_t>(m) * m * m, F.zero());
  Exponents alpha(m, 0);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l) {
        std::fill(alpha.begin(), alpha.end(), 0);
        ++alpha[j];
        ++alpha[k];
        ++alpha[l];
        const auto& c = p.coeffs[cubic.index_of(alpha)];
        if (!F.is_zero(c))
          t[(static_cast<std::size_t>(j) * m + k) * m + l] =
              F.div(c, F.from_int(static_cast<std::int64_t>(multinomial(alpha))));
      }
  Mat<Field> out(dst.masks.size() * m, src.masks.size() * m, F.zero());
  for (std::size_t s = 0; s < src.masks.size(); ++s) {
    const unsigned mask = src.masks[s];
    for (int j = 0; j < m; ++j) {
      const std::size_t col = s * m + j;
      for (int k = 0; k < m; ++k) {
        if (mask & (1u << k)) continue;
        // e_S ^ e_k = (-1)^#{s in S : s > k} e_(S+k)
        const bool negative = __builtin_popcount(mask >> (k + 1)) % 2 == 1;
        const std::size_t row_block = static_cast<std::size_t>(dst.index_of_mask[mask | (1u << k)]) * m;
        for (int l = 0; l < m; ++l) {
          const auto& v = t[(static_cast<std::size_t>(j) * m + k) * m + l];
          if (F.is_zero(v)) continue;
          out(row_block + l, col) = negative ? F.neg(v) : v;
        }
      }
    }
  }
  return out;
}

enum class FlatteningKind { kCatalecticant, kKoszul };

const char* to_string(FlatteningKind kind);

// Which flattening, with its parameter: k for catalecticants, the wedge
// degree a for Koszul flattenings.
struct FlatteningSpec {
  FlatteningKind kind = FlatteningKind::kCatalecticant;
  int param = 1;
};

// max(1, floor(n/2)).
int default_koszul_degree(int n);

// Rank of the flattening of a single power l^d.
std::size_t rank_per_term(const FlatteningSpec& spec, int n);

template <class Field>
Mat<Field> flatten(const Field& F, const FlatteningSpec& spec, const SymTensor<Field>& p) {
  return spec.kind == FlatteningKind::kCatalecticant ? catalecticant(F, p, spec.param)
                                                      : koszul_flattening(F, p, spec.param);
}

struct DeterminantalTangent {
  std::size_t flattening_rows = 0;
  std::size_t flattening_cols = 0;
  std::size_t flattening_rank = 0;
  std::size_t expected_flattening_rank = 0;  // r * rank_per_term
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  std::size_t tangent_dim = 0;               // dim {q : L M(q) R = 0}
  std::size_t expected_tangent_dim = 0;      // r(n+1)
  bool pass = false;
};

// Functionals q -> (L M(q) R)_(ij), one column per monomial of degree d.
template <class Field>
Mat<Field> determinantal_functionals(const Field& F, const FlatteningSpec& spec, int n, int d,
                                     const std::vector<Vec<Field>>& left,
                                     const std::vector<Vec<Field>>& right) {
  const MonomialBasis full(n + 1, d);
  const std::size_t nl = left.size(), nr = right.size();
  Mat<Field> out(full.size(), nl * nr, F.zero());
  if (nl == 0 || nr == 0) return out;
  for (std::size_t a = 0; a < full.size(); ++a) {
    auto unit = SymTensor<Field>::zero(F, n, d);
    unit.coeffs[a] = F.one();
    const auto m = flatten(F, spec, unit);
    // W = L * M(e_a), kept on the columns where M(e_a) is nonzero
    std::map<std::size_t, Vec<Field>> w;
    for (std::size_t s = 0; s < m.rows(); ++s)
      for (std::size_t t = 0; t < m.cols(); ++t) {
        const auto& v = m(s, t);
        if (F.is_zero(v)) continue;
        auto& column = w.try_emplace(t, Vec<Field>(nl, F.zero())).first->second;
        for (std::size_t i = 0; i < nl; ++i)
          if (!F.is_zero(left[i][s])) column[i] = F.add(column[i], F.mul(left[i][s], v));
      }
    auto row = out.row(a);
    for (const auto& [t, column] : w)
      for (std::size_t i = 0; i < nl; ++i) {
        if (F.is_zero(column[i])) continue;
        for (std::size_t j = 0; j < nr; ++j)
          if (!F.is_zero(right[j][t])) row[i * nr + j] = F.add(row[i * nr + j], F.mul(column[i], right[j][t]));
      }
  }
  return out;
}

// Dimension of the tangent space at p to {q : rank M(q) <= rank M(p)}.
template <class Field>
DeterminantalTangent determinantal_tangent_dimension(const Field& F, const FlatteningSpec& spec,
                                                     const SymTensor<Field>& p, std::size_t r) {
  const auto m = flatten(F, spec, p);
  DeterminantalTangent out;
  out.flattening_rows = m.rows();
  out.flattening_cols = m.cols();
  out.flattening_rank = rank(F, m);
  out.expected_flattening_rank = r * rank_per_term(spec, p.n);
  const auto left = complement_of_column_space(F, m);
  const auto right = kernel_basis(F, m);
  out.left_dim = left.size();
  out.right_dim = right.size();
  const std::size_t dim = binomial(p.n + p.d, p.d);
  const auto functionals = determinantal_functionals(F, spec, p.n, p.d, left, right);
  out.tangent_dim = dim - (left.empty() || right.empty() ? 0 : rank(F, functionals));
  out.expected_tangent_dim = r * static_cast<std::size_t>(p.n + 1);
  out.pass = out.tangent_dim == out.expected_tangent_dim;
  return out;
}

}  // namespace waring
