#pragma once

#include <cstdint>
#include <string>

#include "artin/errors.hpp"
#include "artin/rational.hpp"

namespace artin {

// Coefficient domains. Each is a small value type carrying whatever context
// its elements need; LaurentPoly routes all coefficient arithmetic through it.

struct IntegerRing {
  using Element = Integer;
  static constexpr bool kIsField = false;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const { return v; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  bool is_zero(const Element& a) const { return a == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool is_negative(const Element& a) const { return a < 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  /// Only the units +-1 are invertible.
  Element inverse(const Element& a) const {
    if (a == 1 || a == -1) return a;
    throw DomainError("integer " + a.get_str() + " is not a unit");
  }
  std::string format(const Element& a) const { return a.get_str(); }
  std::string name() const { return "ZZ"; }

  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

struct RationalField {
  using Element = Rational;
  static constexpr bool kIsField = true;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const { return v; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inverse(const Element& a) const {
    if (a == 0) throw DomainError("division by zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return a * inverse(b); }
  bool is_zero(const Element& a) const { return a == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool is_negative(const Element& a) const { return a < 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string format(const Element& a) const { return a.get_str(); }
  std::string name() const { return "QQ"; }

  Element from_rational(const Rational& r) const { return r; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Z/pZ for a prime p < 2^31.
class PrimeField {
 public:
  using Element = std::uint64_t;
  static constexpr bool kIsField = true;

  explicit PrimeField(std::uint64_t p = 2);

  std::uint64_t characteristic() const noexcept { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1 % p_; }
  Element from_int(long v) const;
  Element add(Element a, Element b) const { return (a + b) % p_; }
  Element sub(Element a, Element b) const { return (a + p_ - b) % p_; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }
  Element neg(Element a) const { return (p_ - a) % p_; }
  Element inverse(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inverse(b)); }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool is_negative(Element) const { return false; }
  bool equal(Element a, Element b) const { return a == b; }
  std::string format(Element a) const { return std::to_string(a); }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  /// Reduces p/q; throws DomainError when p divides q.
  Element from_rational(const Rational& r) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace artin
