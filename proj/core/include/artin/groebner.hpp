#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "artin/laurent.hpp"
#include "artin/rings.hpp"

namespace artin {

enum class MonomialOrder { kGrevlex, kLex };

std::string to_string(MonomialOrder order);
/// Accepts "grevlex" and "lex"; throws ParseError otherwise.
MonomialOrder parse_monomial_order(std::string_view text);

/// True when a comes strictly before b in the order (a < b).
bool monomial_less(const Exponent& a, const Exponent& b, MonomialOrder order);

/// Multiplies by the smallest monomial that clears every negative exponent.
template <class Field>
LaurentPoly<Field> clear_negative_exponents(const LaurentPoly<Field>& p) {
  auto shift = p.min_exponents();
  for (auto& x : shift) x = x < 0 ? -x : 0;
  return p.shifted(shift);
}

/// Reduced Groebner basis (monic, sorted by increasing leading monomial) of
/// the polynomial ideal generated by gens. Laurent inputs are first moved
/// into the polynomial ring with clear_negative_exponents. The zero ideal
/// yields an empty basis.
template <class Field>
std::vector<LaurentPoly<Field>> buchberger(const std::vector<LaurentPoly<Field>>& gens,
                                           MonomialOrder order = MonomialOrder::kGrevlex);

/// Fully reduced remainder of p modulo the given polynomials.
template <class Field>
LaurentPoly<Field> normal_form(const LaurentPoly<Field>& p,
                               const std::vector<LaurentPoly<Field>>& divisors,
                               MonomialOrder order = MonomialOrder::kGrevlex);

/// Leading term of p in the given order.
template <class Field>
std::pair<Exponent, typename Field::Element> leading_term(const LaurentPoly<Field>& p,
                                                          MonomialOrder order);

/// Decides whether gens generate the unit ideal of the Laurent ring: the
/// polynomial ideal of the normalized generators plus 1 - T*x1*...*xn (T a
/// fresh variable) must have Groebner basis {1}.
template <class Field>
bool is_unit_ideal_laurent(const std::vector<LaurentPoly<Field>>& gens);

struct PrimeCheck {
  std::uint64_t prime;
  /// Empty when some coefficient has a denominator divisible by the prime.
  std::optional<bool> unit_ideal;
};

struct UnitIdealReport {
  bool rational = false;
  std::vector<PrimeCheck> primes;
};

inline const std::vector<std::uint64_t>& default_check_primes() {
  static const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11};
  return primes;
}

/// Whether the reduced Groebner basis of the polynomial ideal is {1}.
template <class Field>
bool is_unit_ideal_polynomial(const std::vector<LaurentPoly<Field>>& gens);

/// Runs the unit-ideal test (Laurent or polynomial) over QQ and over GF(p)
/// for each prime.
UnitIdealReport unit_ideal_report(const std::vector<LaurentPoly<RationalField>>& gens,
                                  bool laurent = true,
                                  const std::vector<std::uint64_t>& primes = default_check_primes());

/// Coefficientwise reduction QQ -> GF(p); throws DomainError when a
/// denominator vanishes mod p.
LaurentPoly<PrimeField> reduce_mod_prime(const LaurentPoly<RationalField>& p,
                                         const PrimeField& field);

}  // namespace artin
