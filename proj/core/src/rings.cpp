#include "artin/rings.hpp"

namespace artin {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 31)) {
    throw DomainError("GF(p) needs a prime p < 2^31, got " + std::to_string(p));
  }
}

PrimeField::Element PrimeField::from_int(long v) const {
  const auto m = static_cast<long>(p_);
  long r = v % m;
  if (r < 0) r += m;
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::inverse(Element a) const {
  if (a % p_ == 0) throw DomainError("division by zero in " + name());
  // Fermat: a^(p-2).
  Element result = 1, base = a % p_;
  for (std::uint64_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

PrimeField::Element PrimeField::from_rational(const Rational& r) const {
  const Integer pz(static_cast<unsigned long>(p_));
  Integer num = r.get_num() % pz;
  if (num < 0) num += pz;
  Integer den = r.get_den() % pz;
  if (den == 0) {
    throw DomainError("denominator of " + r.get_str() + " vanishes in " + name());
  }
  return div(num.get_ui(), den.get_ui());
}

}  // namespace artin
