#pragma once

#include <memory>
#include <string>
#include <vector>

#include "artin/rational.hpp"

namespace artin {

/// Coefficients of the M-th cyclotomic polynomial, constant term first.
/// Obtained by dividing t^M - 1 by Phi_d for every proper divisor d of M.
std::vector<Integer> cyclotomic_polynomial(unsigned order);

/// Euler's phi(M) = deg Phi_M.
unsigned euler_phi(unsigned order);

/// The field Q(zeta_M) = Q[t]/Phi_M(t). Elements are coordinate vectors of
/// length phi(M) over the power basis 1, zeta, ..., zeta^(phi(M)-1).
class CyclotomicField {
 public:
  using Element = std::vector<Rational>;
  static constexpr bool kIsField = true;

  explicit CyclotomicField(unsigned order = 1);

  unsigned order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return modulus_.size() - 1; }
  /// Phi_M over Q, constant term first (monic).
  const std::vector<Rational>& modulus() const noexcept { return modulus_; }

  Element zero() const { return Element(degree(), Rational(0)); }
  Element one() const { return from_rational(Rational(1)); }
  Element from_int(long v) const { return from_rational(Rational(v)); }
  Element from_rational(const Rational& r) const;
  /// zeta_M^k for any integer k.
  Element zeta(long k) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  /// Extended Euclid against Phi_M. Throws DomainError on zero.
  Element inverse(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inverse(b)); }
  Element pow(const Element& a, long k) const;

  bool is_zero(const Element& a) const;
  bool is_one(const Element& a) const;
  bool is_negative(const Element&) const { return false; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  /// Polynomial in "zeta", e.g. "1/2 - zeta^2".
  std::string format(const Element& a) const;
  std::string name() const { return "QQ(zeta_" + std::to_string(order_) + ")"; }

  friend bool operator==(const CyclotomicField& a, const CyclotomicField& b) {
    return a.order_ == b.order_;
  }

 private:
  Element reduce(std::vector<Rational> coeffs) const;

  unsigned order_ = 1;
  std::vector<Rational> modulus_;
};

}  // namespace artin
