#pragma once

// Certification of specific identifiability for a given Waring decomposition.
//
// Stages:
//   S1  rank of the span of the tangent spaces must be r(n+1)
//   S2  flattening rank: middle catalecticant (d >= 4) or Koszul (d == 3)
//   S3  smoothness: normal space N (d >= 4) or determinantal tangent (d == 3)
//   S4  linear equations of the span, ell of them
//   S5  stacked Hessian rank n at every point of the decomposition
//
// S1 failures stop the pipeline. A failed smoothness test (S2/S3) leaves the
// point unproven but S4/S5 still run; a positive-dimensional contact locus is
// reported in preference to a smoothness failure since it does not depend on
// the reach of the flattening.

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "waring/errors.hpp"
#include "waring/flattenings.hpp"
#include "waring/linalg.hpp"
#include "waring/polyring.hpp"
#include "waring/veronese.hpp"

namespace waring {

enum class Status { kIdentifiable, kInconclusive };
enum class Stage { kS1, kS2, kS3, kS5, kOk };
enum class Reason { kNone, kSpanDeficient, kFlatteningRankDeficient, kNormalDimExcess, kContactPositiveDim };

const char* to_string(Status s);
const char* to_string(Stage s);
const char* to_string(Reason r);
Status parse_status(const std::string& s);
Stage parse_stage(const std::string& s);
Reason parse_reason(const std::string& s);

struct CertReport {
  Status status = Status::kInconclusive;
  Stage stage = Stage::kS1;
  Reason reason = Reason::kNone;

  int n = 0;
  int d = 0;
  std::size_t r = 0;
  std::string field;
  bool exact = false;  // computed over the rationals

  // S1; the span matrix has r(n+1) rows and binom(n+d,d) columns
  std::size_t span_rows = 0;
  std::size_t span_cols = 0;
  std::size_t rank_span = 0;

  // S2
  std::string flattening;
  int flattening_param = 0;
  std::optional<std::size_t> flattening_rank;
  std::optional<std::size_t> expected_flattening_rank;

  // S3
  std::optional<std::size_t> normal_dim;
  std::optional<std::size_t> expected_normal_dim;
  std::optional<std::size_t> tangent_dim;
  std::optional<std::size_t> expected_tangent_dim;
  std::optional<bool> smooth;

  // S4, S5
  std::optional<std::size_t> ell;
  std::size_t hessian_rows = 0;
  std::size_t hessian_cols = 0;
  std::vector<std::size_t> hessian_ranks;
  // left kernel of H is spanned by the point's linear form (only meaningful at rank n)
  std::vector<bool> hessian_kernel_is_point;

  std::vector<std::string> notes;
  std::vector<std::pair<std::string, double>> timings_ms;

  bool operator==(const CertReport&) const = default;
};

// Ranks and verdict only; timings and notes excluded.
bool same_outcome(const CertReport& a, const CertReport& b);

struct CertifyOptions {
  std::optional<int> koszul_a;  // wedge degree for cubics; default max(1, n/2)
};

struct RankBounds {
  int n = 0;
  int d = 0;
  std::uint64_t ambient_dim = 0;            // binom(n+d,d)
  std::uint64_t generic_rank = 0;           // ceil(binom(n+d,d)/(n+1))
  std::uint64_t ik_bound = 0;               // binom(n+delta-1, delta-1)
  std::uint64_t kruskal_generic_bound = 0;  // floor((d(n+1) - d + 1)/2)

  // r < binom(n+d,d)/(n+1).
  bool is_subgeneric(std::uint64_t r) const { return r * static_cast<std::uint64_t>(n + 1) < ambient_dim; }
};

RankBounds bounds(int n, int d);

namespace detail {

class StageTimer {
 public:
  explicit StageTimer(std::vector<std::pair<std::string, double>>& sink, std::string name)
      : sink_(sink), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    sink_.emplace_back(name_, std::chrono::duration<double, std::milli>(elapsed).count());
  }

 private:
  std::vector<std::pair<std::string, double>>& sink_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

template <class Field>
CertReport certify(const Field& F, const WaringInput<Field>& w, const CertifyOptions& options = {}) {
  validate(F, w);
  if (w.d < 3) throw WaringError(ErrorCode::kInvalidInput, "certify requires d >= 3");
  const RankBounds b = bounds(w.n, w.d);
  if (!b.is_subgeneric(w.r()))
    throw WaringError(ErrorCode::kSupergenericRank,
                      "r = " + std::to_string(w.r()) + " is not below binom(n+d,d)/(n+1) = " +
                          std::to_string(b.ambient_dim) + "/" + std::to_string(w.n + 1));

  CertReport rep;
  rep.n = w.n;
  rep.d = w.d;
  rep.r = w.r();
  rep.field = F.label();
  rep.exact = Field::kIsRational;
  const std::size_t m = static_cast<std::size_t>(w.n + 1);

  // S1
  TangentSpan<Field> span;
  {
    detail::StageTimer timer(rep.timings_ms, "S1");
    span = build_span(F, w);
  }
  rep.span_rows = span.matrix.rows();
  rep.span_cols = span.matrix.cols();
  rep.rank_span = span.rank;
  if (span.rank != w.r() * m) {
    rep.stage = Stage::kS1;
    rep.reason = Reason::kSpanDeficient;
    return rep;
  }

  // S2, S3
  std::optional<std::pair<Stage, Reason>> smoothness_failure;
  {
    detail::StageTimer timer(rep.timings_ms, "S2-S3");
    const auto p = represented_tensor(F, w);
    FlatteningSpec spec;
    if (w.d == 3) {
      spec = {FlatteningKind::kKoszul, options.koszul_a.value_or(default_koszul_degree(w.n))};
    } else {
      spec = {FlatteningKind::kCatalecticant, w.d / 2};
    }
    rep.flattening = to_string(spec.kind);
    rep.flattening_param = spec.param;
    const auto tangent = determinantal_tangent_dimension(F, spec, p, w.r());
    rep.flattening_rank = tangent.flattening_rank;
    rep.expected_flattening_rank = tangent.expected_flattening_rank;
    rep.tangent_dim = tangent.tangent_dim;
    rep.expected_tangent_dim = tangent.expected_tangent_dim;
    if (w.d == 3) {
      if (tangent.flattening_rank != tangent.expected_flattening_rank)
        rep.notes.push_back("koszul rank " + std::to_string(tangent.flattening_rank) + " differs from expected " +
                            std::to_string(tangent.expected_flattening_rank) +
                            "; smoothness decided by the determinantal tangent test");
      if (!tangent.pass) smoothness_failure = {Stage::kS3, Reason::kNormalDimExcess};
    } else if (tangent.flattening_rank != w.r()) {
      smoothness_failure = {Stage::kS2, Reason::kFlatteningRankDeficient};
    } else {
      const auto normal = normal_space_dimension(F, p, w.r());
      rep.normal_dim = normal.dimension;
      rep.expected_normal_dim = normal.expected;
      if (normal.dimension + tangent.tangent_dim != b.ambient_dim)
        rep.notes.push_back("normal space and determinantal tangent disagree");
      if (!normal.pass) smoothness_failure = {Stage::kS3, Reason::kNormalDimExcess};
    }
    rep.smooth = !smoothness_failure.has_value();
    if (smoothness_failure) rep.notes.push_back("smoothness of p could not be certified");
  }

  // S4, S5
  bool contact_ok = true;
  {
    detail::StageTimer timer(rep.timings_ms, "S4-S5");
    const auto eqs = contact_equations(F, span);
    rep.ell = eqs.ell();
    for (const auto& t : w.terms) {
      const auto h = stacked_hessian(F, eqs, t.form);
      rep.hessian_rows = h.rows();
      rep.hessian_cols = h.cols();
      const std::size_t hr = rank(F, h);
      rep.hessian_ranks.push_back(hr);
      const auto left = complement_of_column_space(F, h);
      rep.hessian_kernel_is_point.push_back(left.size() == 1 && proportional(F, left[0], t.form));
      if (hr != static_cast<std::size_t>(w.n)) contact_ok = false;
    }
  }

  if (!contact_ok) {
    rep.stage = Stage::kS5;
    rep.reason = Reason::kContactPositiveDim;
  } else if (smoothness_failure) {
    rep.stage = smoothness_failure->first;
    rep.reason = smoothness_failure->second;
  } else {
    rep.status = Status::kIdentifiable;
    rep.stage = Stage::kOk;
    rep.notes.push_back(Field::kIsRational ? "exact"
                                           : "identifiable modulo the sampled prime " + F.label().substr(6));
  }
  return rep;
}

// Largest k such that every k of the forms are linearly independent,
// found by checking every subset.
template <class Field>
std::size_t kruskal_krank(const Field& F, const std::vector<LinearForm<Field>>& forms) {
  if (forms.empty()) return 0;
  const std::size_t dim = forms.front().size();
  const std::size_t top = std::min(forms.size(), dim);
  std::size_t k = 0;
  for (std::size_t size = 1; size <= top; ++size) {
    // Enumerate size-subsets with an index vector.
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    bool all_independent = true;
    while (all_independent) {
      Mat<Field> sub(size, dim);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < dim; ++j) sub(i, j) = forms[pick[i]][j];
      if (rank(F, sub) != size) all_independent = false;
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == forms.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!all_independent) break;
    k = size;
  }
  return k;
}

struct KruskalResult {
  std::size_t krank = 0;
  std::size_t bound = 0;  // floor((d k - d + 1) / 2)
  bool pass = false;      // r <= bound
};

std::size_t kruskal_bound(int d, std::size_t krank);

template <class Field>
KruskalResult kruskal_check(const Field& F, const WaringInput<Field>& w) {
  std::vector<LinearForm<Field>> forms;
  for (const auto& t : w.terms) forms.push_back(t.form);
  KruskalResult out;
  out.krank = kruskal_krank(F, forms);
  out.bound = kruskal_bound(w.d, out.krank);
  out.pass = w.r() <= out.bound;
  return out;
}

}  // namespace waring
