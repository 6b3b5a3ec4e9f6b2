#include "waring/criteria.hpp"

#include <stdexcept>

namespace waring {

const char* to_string(Status s) { return s == Status::kIdentifiable ? "IDENTIFIABLE" : "INCONCLUSIVE"; }

const char* to_string(Stage s) {
  switch (s) {
    case Stage::kS1: return "S1";
    case Stage::kS2: return "S2";
    case Stage::kS3: return "S3";
    case Stage::kS5: return "S5";
    case Stage::kOk: return "OK";
  }
  return "?";
}

const char* to_string(Reason r) {
  switch (r) {
    case Reason::kNone: return "NONE";
    case Reason::kSpanDeficient: return "SPAN_DEFICIENT";
    case Reason::kFlatteningRankDeficient: return "FLATTENING_RANK_DEFICIENT";
    case Reason::kNormalDimExcess: return "NORMAL_DIM_EXCESS";
    case Reason::kContactPositiveDim: return "CONTACT_POSITIVE_DIM";
  }
  return "?";
}

Status parse_status(const std::string& s) {
  if (s == "IDENTIFIABLE") return Status::kIdentifiable;
  if (s == "INCONCLUSIVE") return Status::kInconclusive;
  throw std::invalid_argument("unknown status '" + s + "'");
}

Stage parse_stage(const std::string& s) {
  for (auto st : {Stage::kS1, Stage::kS2, Stage::kS3, Stage::kS5, Stage::kOk})
    if (s == to_string(st)) return st;
  throw std::invalid_argument("unknown stage '" + s + "'");
}

Reason parse_reason(const std::string& s) {
  for (auto r : {Reason::kNone, Reason::kSpanDeficient, Reason::kFlatteningRankDeficient, Reason::kNormalDimExcess,
                 Reason::kContactPositiveDim})
    if (s == to_string(r)) return r;
  throw std::invalid_argument("unknown reason '" + s + "'");
}

bool same_outcome(const CertReport& a, const CertReport& b) {
  return a.status == b.status && a.stage == b.stage && a.reason == b.reason && a.rank_span == b.rank_span &&
         a.flattening_rank == b.flattening_rank && a.normal_dim == b.normal_dim && a.tangent_dim == b.tangent_dim &&
         a.ell == b.ell && a.hessian_ranks == b.hessian_ranks;
}

RankBounds bounds(int n, int d) {
  if (d < 3) throw WaringError(ErrorCode::kInvalidInput, "bounds require d >= 3");
  if (n < 1) throw WaringError(ErrorCode::kInvalidInput, "bounds require n >= 1");
  RankBounds b;
  b.n = n;
  b.d = d;
  b.ambient_dim = binomial(n + d, d);
  const std::uint64_t m = static_cast<std::uint64_t>(n + 1);
  b.generic_rank = (b.ambient_dim + m - 1) / m;
  const int delta = d / 2;
  b.ik_bound = binomial(n + delta - 1, delta - 1);
  b.kruskal_generic_bound = kruskal_bound(d, m);
  return b;
}

std::size_t kruskal_bound(int d, std::size_t krank) {
  const std::int64_t v = static_cast<std::int64_t>(d) * static_cast<std::int64_t>(krank) - d + 1;
  return v <= 0 ? 0 : static_cast<std::size_t>(v / 2);
}

}  // namespace waring
