#include "waring/polyring.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace waring {

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    // result * num / i is exact at every step
    const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(i));
    const std::uint64_t r = result / g, den = static_cast<std::uint64_t>(i) / g;
    if (r > std::numeric_limits<std::uint64_t>::max() / num)
      throw std::overflow_error("binomial coefficient overflows 64 bits");
    result = r * (num / den);
  }
  return result;
}

std::uint64_t multinomial(const std::vector<int>& alpha) {
  std::uint64_t result = 1;
  std::int64_t partial = 0;
  for (int a : alpha) {
    partial += a;
    const std::uint64_t b = binomial(partial, a);
    if (b != 0 && result > std::numeric_limits<std::uint64_t>::max() / b)
      throw std::overflow_error("multinomial coefficient overflows 64 bits");
    result *= b;
  }
  return result;
}

std::uint64_t binomial_product(const std::vector<int>& alpha, const std::vector<int>& beta) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) result *= binomial(alpha[i], beta[i]);
  return result;
}

namespace {

void compositions(int vars, int degree, Exponents& current, int pos, std::vector<Exponents>& out) {
  if (pos == vars - 1) {
    current[pos] = degree;
    out.push_back(current);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    current[pos] = e;
    compositions(vars, degree - e, current, pos + 1, out);
  }
}

bool colex_less(const Exponents& a, const Exponents& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

MonomialBasis::MonomialBasis(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
  if (num_vars < 1) throw std::invalid_argument("MonomialBasis: need at least one variable");
  if (degree < 0) throw std::invalid_argument("MonomialBasis: negative degree");
  Exponents current(num_vars, 0);
  compositions(num_vars, degree, current, 0, monomials_);
  std::sort(monomials_.begin(), monomials_.end(), colex_less);
}

std::size_t MonomialBasis::index_of(const Exponents& alpha) const {
  if (static_cast<int>(alpha.size()) != num_vars_)
    throw std::invalid_argument("index_of: exponent vector has wrong length");
  int remaining = degree_;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("index_of: negative exponent");
    remaining -= a;
  }
  if (remaining != 0) throw std::invalid_argument("index_of: wrong total degree");
  // Count the monomials preceding alpha: for each variable k (last first),
  // those agreeing above k with a smaller exponent at k.
  std::uint64_t index = 0;
  int budget = degree_;
  for (int k = num_vars_ - 1; k >= 1; --k) {
    index += binomial(budget + k, k) - binomial(budget - alpha[k] + k, k);
    budget -= alpha[k];
  }
  return static_cast<std::size_t>(index);
}

std::size_t monomial_rank(const Exponents& alpha, int n, int d) {
  return MonomialBasis(n + 1, d).index_of(alpha);
}

Exponents monomial_unrank(std::size_t index, int n, int d) {
  const MonomialBasis basis(n + 1, d);
  if (index >= basis.size())
    throw std::out_of_range("monomial_unrank: index " + std::to_string(index) + " out of range");
  return basis[index];
}

std::string monomial_to_string(const Exponents& alpha) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!first) os << '*';
    os << 'x' << i;
    if (alpha[i] > 1) os << '^' << alpha[i];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

}  // namespace waring
