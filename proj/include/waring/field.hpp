#pragma once

// Exact scalar fields. Every matrix routine in the library is templated on a
// field object that owns the arithmetic; elements are plain values, so a prime
// field element and a rational can never end up in the same matrix.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace waring {

// Residues modulo an odd prime p < 2^32. Elements are kept reduced in [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;

  // 2^31 - 1, the default modulus used across the tools.
  static constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

  explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
    if (p < 3 || p >= (1ULL << 32) || !is_prime(p))
      throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                  " is not an odd prime below 2^32");
  }

  std::uint64_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }

  Element from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += static_cast<std::int64_t>(p_);
    return static_cast<Element>(m);
  }

  Element from_rational(const mpq_class& q) const {
    mpz_class num = q.get_num() % p_;
    mpz_class den = q.get_den() % p_;
    if (num < 0) num += p_;
    if (den == 0)
      throw std::domain_error("denominator " + q.get_den().get_str() +
                              " vanishes modulo " + std::to_string(p_));
    return mul(static_cast<Element>(num.get_ui()),
               inv(static_cast<Element>(den.get_ui())));
  }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }

  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("PrimeField: division by zero");
    return pow(a, p_ - 2);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element pow(Element a, std::uint64_t e) const {
    Element r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }

  std::string to_string(Element a) const { return std::to_string(a); }
  std::string label() const { return "prime:" + std::to_string(p_); }
  static constexpr bool kIsRational = false;

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2)
      if (n % f == 0) return false;
    return true;
  }

 private:
  std::uint64_t p_;
};

// Arbitrary precision rationals (GMP). Elements are kept canonical.
class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
  Element from_rational(const mpq_class& q) const { return q; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw std::domain_error("RationalField: division by zero");
    return Element(1) / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const {
    Element r(1);
    while (e) {
      if (e & 1) r *= a;
      a *= a;
      e >>= 1;
    }
    return r;
  }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string label() const { return "rational"; }
  static constexpr bool kIsRational = true;
};

}  // namespace waring
