#include "waring/cubics.hpp"

#include <algorithm>
#include <sstream>

#include "waring/errors.hpp"
#include "waring/scan.hpp"
#include "waring/veronese.hpp"

namespace waring {

void validate(const CubicSystemSpec& spec) {
  if (spec.n < 1) throw WaringError(ErrorCode::kInvalidInput, "n must be at least 1");
  if (spec.degree < 1) throw WaringError(ErrorCode::kInvalidInput, "degree must be at least 1");
  for (std::size_t i = 0; i < spec.subspaces.size(); ++i) {
    const auto& s = spec.subspaces[i];
    if (!s.coordinates.empty()) {
      for (int c : s.coordinates)
        if (c < 0 || c > spec.n)
          throw WaringError(ErrorCode::kInvalidInput,
                            "subspace " + std::to_string(i) + " uses variable " + std::to_string(c) + " outside 0.." +
                                std::to_string(spec.n));
      auto sorted = s.coordinates;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw WaringError(ErrorCode::kInvalidInput, "subspace " + std::to_string(i) + " repeats a variable");
      if (s.codim != 0 && s.codim != static_cast<int>(s.coordinates.size()))
        throw WaringError(ErrorCode::kInvalidInput, "subspace " + std::to_string(i) + " codim disagrees with its variables");
    } else if (s.codim < 1 || s.codim > spec.n) {
      throw WaringError(ErrorCode::kInvalidInput, "subspace " + std::to_string(i) + " has codimension " +
                                                      std::to_string(s.codim) + " outside 1.." + std::to_string(spec.n));
    }
  }
  for (std::size_t i = 0; i < spec.double_points.size(); ++i) {
    const auto& on = spec.double_points[i].on;
    if (on && (*on < 0 || *on >= static_cast<int>(spec.subspaces.size())))
      throw WaringError(ErrorCode::kInvalidInput, "point " + std::to_string(i) + " refers to a missing subspace");
  }
}

RealizedSystem realize(const PrimeField& F, const CubicSystemSpec& spec) {
  validate(spec);
  auto rng = trial_rng(spec.seed, 0);
  const std::size_t m = static_cast<std::size_t>(spec.n + 1);
  RealizedSystem out;
  for (const auto& s : spec.subspaces) {
    if (!s.coordinates.empty()) {
      Mat<PrimeField> basis(m, m - s.coordinates.size(), F.zero());
      std::size_t col = 0;
      for (std::size_t j = 0; j < m; ++j)
        if (std::find(s.coordinates.begin(), s.coordinates.end(), static_cast<int>(j)) == s.coordinates.end())
          basis(j, col++) = F.one();
      out.subspace_bases.push_back(std::move(basis));
    } else {
      const std::size_t dim = m - static_cast<std::size_t>(s.codim);
      Mat<PrimeField> basis(m, dim);
      do {
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < dim; ++j) basis(i, j) = random_vector(F, 1, rng)[0];
      } while (rank(F, basis) != dim);
      out.subspace_bases.push_back(std::move(basis));
    }
  }
  for (const auto& p : spec.double_points) {
    if (!p.on) {
      out.points.push_back(random_vector(F, m, rng));
      continue;
    }
    const auto& basis = out.subspace_bases[*p.on];
    Vec<PrimeField> point;
    do {
      point = apply(F, basis, random_vector(F, basis.cols(), rng));
    } while (is_zero_vector(F, point));
    out.points.push_back(std::move(point));
  }
  return out;
}

Mat<PrimeField> restriction_conditions(const PrimeField& F, const Mat<PrimeField>& basis, int degree) {
  const int n = static_cast<int>(basis.rows()) - 1;
  const int k = static_cast<int>(basis.cols()) - 1;
  const MonomialBasis ambient(n + 1, degree), restricted(k + 1, degree);
  // x_i restricted to the subspace is the linear form (row i of basis) in y
  std::vector<SymTensor<PrimeField>> coordinate(n + 1);
  for (int i = 0; i <= n; ++i) {
    coordinate[i] = SymTensor<PrimeField>{k, 1, Vec<PrimeField>(k + 1)};
    for (int j = 0; j <= k; ++j) coordinate[i].coeffs[j] = basis(i, j);
  }
  Mat<PrimeField> rows(restricted.size(), ambient.size(), F.zero());
  for (std::size_t a = 0; a < ambient.size(); ++a) {
    SymTensor<PrimeField> image{k, 0, {F.one()}};
    for (int i = 0; i <= n; ++i)
      for (int e = 0; e < ambient[a][i]; ++e) image = multiply(F, image, coordinate[i]);
    for (std::size_t b = 0; b < restricted.size(); ++b) rows(b, a) = image.coeffs[b];
  }
  return rows;
}

Mat<PrimeField> assemble_conditions(const PrimeField& F, const CubicSystemSpec& spec, const RealizedSystem& realized) {
  const MonomialBasis forms(spec.n + 1, spec.degree);
  Mat<PrimeField> conditions(0, forms.size());
  for (std::size_t i = 0; i < spec.subspaces.size(); ++i)
    if (spec.subspaces[i].contained)
      conditions.append_rows(restriction_conditions(F, realized.subspace_bases[i], spec.degree));
  // d/dx_j x^alpha at p = alpha_j p^(alpha - e_j)
  for (const auto& p : realized.points) {
    Mat<PrimeField> gradient(spec.n + 1, forms.size(), F.zero());
    for (std::size_t a = 0; a < forms.size(); ++a) {
      const auto& alpha = forms[a];
      for (int j = 0; j <= spec.n; ++j) {
        if (alpha[j] == 0) continue;
        auto v = F.from_int(alpha[j]);
        for (int i = 0; i <= spec.n; ++i) v = F.mul(v, F.pow(p[i], alpha[i] - (i == j ? 1 : 0)));
        gradient(j, a) = v;
      }
    }
    conditions.append_rows(gradient);
  }
  return conditions;
}

SystemBasis system_dimension(const CubicSystemSpec& spec) {
  const PrimeField F(spec.prime);
  SystemBasis out;
  out.realized = realize(F, spec);
  const auto conditions = assemble_conditions(F, spec, out.realized);
  const auto kernel = kernel_basis(F, conditions);
  out.dimension = kernel.size();
  for (const auto& k : kernel) out.forms.push_back(SymTensor<PrimeField>{spec.n, spec.degree, k});
  return out;
}

SingularCheck singular_locus_zero_dim_at(const PrimeField& F, const std::vector<SymTensor<PrimeField>>& basis,
                                         const Vec<PrimeField>& point) {
  SingularCheck out;
  if (basis.empty()) return out;
  out.rank = rank(F, stacked_hessian_of(F, basis, point));
  out.zero_dimensional = out.rank == static_cast<std::size_t>(basis.front().n);
  return out;
}

// ---------------------------------------------------------------------------

std::size_t cubic_generic_rank(int n) {
  const std::uint64_t m = static_cast<std::uint64_t>(n + 1);
  return static_cast<std::size_t>((binomial(n + 3, 3) + m - 1) / m);
}

namespace {

SubspaceSpec general(int codim, bool contained = true) { return {codim, {}, contained}; }

void add_points(CubicSystemSpec& spec, std::optional<int> on, int count) {
  for (int i = 0; i < count; ++i) spec.double_points.push_back({on});
}

struct Expectation {
  std::optional<std::size_t> dim2;
  std::size_t dim3 = 0;
  // points whose singular locus is checked, with the expected verdict
  std::vector<std::size_t> checked_points;
  bool zero_dimensional = true;
  std::optional<std::size_t> rank;
};

std::vector<std::size_t> indices_from(std::size_t first, std::size_t last) {
  std::vector<std::size_t> out;
  for (std::size_t i = first; i < last; ++i) out.push_back(i);
  return out;
}

// Builds the configuration (degree 3) and its expected values.
CubicSystemSpec build(const std::string& name, int n, Expectation& ex) {
  CubicSystemSpec s;
  s.n = n;
  if (name == "proprep") {
    // three codim-3 subspaces, 3+3+2 double points on them
    s.subspaces = {general(3), general(3), general(3)};
    add_points(s, 0, 3);
    add_points(s, 1, 3);
    add_points(s, 2, 2);
    ex.dim2 = 0;
    ex.dim3 = 3;
  } else if (name == "proprep2") {
    s.subspaces = {general(3), general(3)};
    add_points(s, 0, n - 2);
    add_points(s, 1, n - 2);
    add_points(s, std::nullopt, 2);
    ex.dim2 = 0;
    ex.dim3 = static_cast<std::size_t>(n + 1);
    ex.checked_points = indices_from(2 * (n - 2), 2 * (n - 2) + 2);
  } else if (name == "proprep3") {
    s.subspaces = {general(3)};
    add_points(s, 0, n * (n - 1) / 6);
    add_points(s, std::nullopt, n);
    ex.dim3 = static_cast<std::size_t>(n + 1);
    ex.checked_points = indices_from(n * (n - 1) / 6, n * (n - 1) / 6 + n);
  } else if (name == "codim433") {
    s.subspaces = {general(4), general(3), general(3)};
    add_points(s, 0, 3);
    add_points(s, 1, 4);
    add_points(s, 2, 4);
    ex.dim3 = 0;
  } else if (name == "codim433-2") {
    s.subspaces = {general(4), general(3)};
    add_points(s, 0, n - 3);
    add_points(s, 1, (4 * n - 10) / 3);
    add_points(s, std::nullopt, 4);
    ex.dim3 = 0;
  } else if (name == "codim433-3") {
    // points on L force containment; not imposed separately
    s.subspaces = {general(4, false)};
    add_points(s, 0, (n - 1) * (n - 2) / 6);
    add_points(s, std::nullopt, (4 * n + 2) / 3);
    ex.dim3 = 0;
  } else if (name == "codim4") {
    s.subspaces = {general(4), general(4), general(3)};
    add_points(s, 0, 4);
    add_points(s, 1, 4);
    add_points(s, 2, 5);
    ex.dim3 = 1;
  } else if (name == "codim4-pencil") {
    const int on_each = (4 * n - 14) / 3;
    s.subspaces = {general(4), general(4)};
    add_points(s, 0, on_each);
    add_points(s, 1, on_each);
    add_points(s, std::nullopt, 5);
    ex.dim3 = static_cast<std::size_t>((n + 1) / 3);
    ex.checked_points = indices_from(2 * on_each, 2 * on_each + 5);
  } else if (name == "codim4-3") {
    const int on_l = (n - 1) * (n - 2) / 6;
    s.subspaces = {general(4)};
    add_points(s, 0, on_l);
    add_points(s, std::nullopt, (4 * n + 1) / 3);
    ex.dim3 = static_cast<std::size_t>((n + 1) / 3);
    ex.checked_points = indices_from(on_l, on_l + (4 * n + 1) / 3);
  } else if (name == "ah" || name == "cubiche") {
    const int points = static_cast<int>(cubic_generic_rank(n)) - 1;
    add_points(s, std::nullopt, points);
    ex.dim3 = n % 3 == 2 ? static_cast<std::size_t>((n + 1) / 3) : static_cast<std::size_t>(n + 1);
    if (name == "cubiche") {
      ex.checked_points = indices_from(0, points);
      ex.zero_dimensional = n != 5;
      if (n == 5) ex.rank = 4;
    }
  } else {
    find_cubic_case(name);  // throws with the list of valid names
  }
  return s;
}

}  // namespace

const CubicCase& find_cubic_case(const std::string& name) {
  for (const auto& c : cubic_cases())
    if (c.name == name) return c;
  std::string valid;
  for (const auto& c : cubic_cases()) valid += (valid.empty() ? "" : ", ") + c.name;
  throw WaringError(ErrorCode::kUnknownCase, "unknown case '" + name + "'; valid cases: " + valid);
}


const std::vector<CubicCase>& cubic_cases() {
  static const std::vector<CubicCase> cases = {
      {"proprep", "three codim-3 subspaces with 3,3,2 double points: dim 0 (quadrics), 3 (cubics)", {6, 7, 8}},
      {"proprep2", "two codim-3 subspaces with n-2 points each and 2 general points: dim n+1", {5, 6, 7}},
      {"proprep3", "codim-3 subspace with n(n-1)/6 points and n general points: dim n+1", {6, 7, 9, 10}},
      {"codim433", "subspaces of codim 4,3,3 with 3,4,4 double points: empty", {6, 7, 8, 9}},
      {"codim433-2", "codim 4 and 3 subspaces with n-3 and (4n-10)/3 points plus 4 general: empty", {7, 10}},
      {"codim433-3", "(n-1)(n-2)/6 points on a codim-4 subspace and (4n+2)/3 general: empty", {7, 10}},
      {"codim4", "subspaces of codim 4,4,3 with 4,4,5 double points: dim 1", {8, 9, 10}},
      {"codim4-pencil", "two codim-4 subspaces with (4n-14)/3 points each and 5 general: dim (n+1)/3", {8, 11}},
      {"codim4-3", "codim-4 subspace with (n-1)(n-2)/6 points and (4n+1)/3 general: dim (n+1)/3", {8, 11}},
      {"ah", "k_n - 1 general double points: dim n+1, or (n+1)/3 when n = 2 mod 3", {2, 3, 4, 5, 6, 7, 8}},
      {"cubiche", "k_n - 1 general double points: common singular locus is the points, except n = 5",
       {2, 3, 4, 5, 6, 7, 8}},
  };
  return cases;
}

CubicSystemSpec case_spec(const std::string& name, int n, int degree, std::uint64_t seed, std::uint64_t prime) {
  const auto& c = find_cubic_case(name);
  if (std::find(c.valid_n.begin(), c.valid_n.end(), n) == c.valid_n.end()) {
    std::string valid;
    for (int v : c.valid_n) valid += (valid.empty() ? "" : ", ") + std::to_string(v);
    throw WaringError(ErrorCode::kInvalidInput,
                      "case '" + name + "' is not defined for n = " + std::to_string(n) + "; valid n: " + valid);
  }
  Expectation ex;
  auto spec = build(name, n, ex);
  spec.degree = degree;
  spec.seed = seed;
  spec.prime = prime;
  return spec;
}

CaseResult run_case(const std::string& name, int n, std::uint64_t seed, std::uint64_t prime) {
  Expectation ex;
  case_spec(name, n, 3, seed, prime);  // validates name and n
  build(name, n, ex);
  CaseResult out;
  out.name = name;
  out.n = n;
  out.expected_dim2 = ex.dim2;
  out.expected_dim3 = ex.dim3;
  bool match = true;
  if (ex.dim2) {
    out.dim2 = system_dimension(case_spec(name, n, 2, seed, prime)).dimension;
    match = match && out.dim2 == ex.dim2;
  }
  const auto cubic = system_dimension(case_spec(name, n, 3, seed, prime));
  out.dim3 = cubic.dimension;
  match = match && out.dim3 == ex.dim3;
  const PrimeField F(prime);
  for (std::size_t i : ex.checked_points) {
    const auto check = singular_locus_zero_dim_at(F, cubic.forms, cubic.realized.points[i]);
    PointCheck pc{i, check.rank, check.zero_dimensional, ex.zero_dimensional, ex.rank};
    match = match && pc.zero_dimensional == pc.expected_zero_dimensional && (!pc.expected_rank || pc.rank == *pc.expected_rank);
    out.singular.push_back(pc);
  }
  out.match = match;
  return out;
}

std::string format_case(const CaseResult& r) {
  std::ostringstream os;
  if (r.dim2) os << "dim(2)=" << *r.dim2 << ' ';
  os << "dim(3)=" << r.dim3 << " expected(";
  if (r.expected_dim2) os << *r.expected_dim2 << ',';
  os << r.expected_dim3 << ')';
  if (!r.singular.empty()) {
    std::size_t zero_dim = 0;
    std::vector<std::size_t> ranks;
    for (const auto& s : r.singular) {
      if (s.zero_dimensional) ++zero_dim;
      if (std::find(ranks.begin(), ranks.end(), s.rank) == ranks.end()) ranks.push_back(s.rank);
    }
    os << " singular-locus 0-dim at " << zero_dim << '/' << r.singular.size() << " points (hessian rank";
    for (auto k : ranks) os << ' ' << k;
    os << ", expected " << (r.singular.front().expected_zero_dimensional ? "0-dim" : "positive-dim") << ')';
  }
  os << (r.match ? " MATCH" : " MISMATCH");
  return os.str();
}

}  // namespace waring
