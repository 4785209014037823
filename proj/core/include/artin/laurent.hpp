#pragma once

#include <algorithm>
#include <cstdlib>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/errors.hpp"
#include "artin/rings.hpp"

namespace artin {

/// Exponent vector of a Laurent monomial; entries may be negative.
using Exponent = std::vector<int>;

inline Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Exponent sub_exponents(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

/// Formats x^e*y^f; "" for the trivial monomial.
std::string format_monomial(const Exponent& e, const std::vector<std::string>& vars);

/// Sparse multivariate Laurent polynomial over Ring. Terms are kept in a map
/// ordered lexicographically by exponent, zero coefficients are never stored.
template <class Ring>
class LaurentPoly {
 public:
  using Coeff = typename Ring::Element;
  using TermMap = std::map<Exponent, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(Ring ring, std::vector<std::string> vars)
      : ring_(std::move(ring)), vars_(std::move(vars)) {}

  static LaurentPoly constant(Ring ring, std::vector<std::string> vars, const Coeff& c) {
    LaurentPoly p(std::move(ring), std::move(vars));
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
  }
  static LaurentPoly one(Ring ring, std::vector<std::string> vars) {
    auto c = ring.one();
    return constant(std::move(ring), std::move(vars), c);
  }
  static LaurentPoly monomial(Ring ring, std::vector<std::string> vars, Exponent e,
                              const Coeff& c) {
    LaurentPoly p(std::move(ring), std::move(vars));
    if (e.size() != p.vars_.size()) throw DomainError("exponent length mismatch");
    p.add_term(std::move(e), c);
    return p;
  }
  static LaurentPoly variable(Ring ring, std::vector<std::string> vars, std::size_t index,
                              int power = 1) {
    Exponent e(vars.size(), 0);
    e.at(index) = power;
    auto c = ring.one();
    return monomial(std::move(ring), std::move(vars), std::move(e), c);
  }

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of x^e (zero if absent).
  Coeff coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  void add_term(Exponent e, const Coeff& c) {
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, ring_.neg(c));
    return *this;
  }
  LaurentPoly operator-() const {
    LaurentPoly out(ring_, vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, ring_.neg(c));
    return out;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly out(a.ring_, a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), a.ring_.mul(ca, cb));
    }
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(const Coeff& c) const {
    LaurentPoly out(ring_, vars_);
    for (const auto& [e, x] : terms_) out.add_term(e, ring_.mul(x, c));
    return out;
  }
  /// Multiplication by the monomial x^shift (a unit).
  LaurentPoly shifted(const Exponent& shift) const {
    LaurentPoly out(ring_, vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(add_exponents(e, shift), c);
    return out;
  }

  /// Single term with an invertible coefficient.
  bool is_unit() const { return terms_.size() == 1 && is_invertible(terms_.begin()->second); }

  /// Non-negative powers of anything, negative powers of units.
  LaurentPoly pow(int k) const {
    if (k < 0) {
      if (!is_unit()) throw DomainError("negative power of a non-unit Laurent polynomial");
      const auto& [e, c] = *terms_.begin();
      Exponent ne(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
      return LaurentPoly::monomial(ring_, vars_, std::move(ne), ring_.inverse(c)).pow(-k);
    }
    LaurentPoly result = LaurentPoly::one(ring_, vars_);
    LaurentPoly base = *this;
    for (; k > 0; k >>= 1) {
      if (k & 1) result *= base;
      if (k > 1) base *= base;
    }
    return result;
  }

  /// Componentwise minimum exponent over all terms (zeros for the zero poly).
  Exponent min_exponents() const {
    Exponent m(vars_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }
  Exponent max_exponents() const {
    Exponent m(vars_.size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
      first = false;
    }
    return m;
  }

  /// Unit multiple with every minimum exponent zero: an honest polynomial
  /// generating the same Laurent ideal.
  LaurentPoly normalized_polynomial() const {
    auto m = min_exponents();
    for (auto& x : m) x = -x;
    return shifted(m);
  }

  /// Rewrites over another variable list; each variable must exist there.
  LaurentPoly with_vars(const std::vector<std::string>& target) const {
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(target.begin(), target.end(), vars_[i]);
      if (it == target.end()) throw DomainError("variable '" + vars_[i] + "' not in target list");
      pos[i] = static_cast<std::size_t>(it - target.begin());
    }
    LaurentPoly out(ring_, target);
    for (const auto& [e, c] : terms_) {
      Exponent ne(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] += e[i];
      out.add_term(std::move(ne), c);
    }
    return out;
  }

  /// Coefficientwise image under a ring map.
  template <class Ring2, class Fn>
  LaurentPoly<Ring2> map_coefficients(const Ring2& target, Fn fn) const {
    LaurentPoly<Ring2> out(target, vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
    return out;
  }

  /// Ring homomorphism sending variable i to images[i] (a monomial times a
  /// coefficient, invertible whenever a negative power occurs), with
  /// coefficients mapped through coeff_map.
  template <class Ring2, class Fn>
  LaurentPoly<Ring2> substitute(const std::vector<LaurentPoly<Ring2>>& images, Fn coeff_map) const {
    if (images.size() != vars_.size()) throw DomainError("substitution arity mismatch");
    if (images.empty()) throw DomainError("substitution needs a target variable list");
    const Ring2& target = images.front().ring();
    LaurentPoly<Ring2> out(target, images.front().vars());
    for (const auto& [e, c] : terms_) {
      auto term = LaurentPoly<Ring2>::constant(target, images.front().vars(), coeff_map(c));
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) term *= images[i].pow(e[i]);
      }
      out += term;
    }
    return out;
  }

  /// Evaluates at a point; negative exponents need invertible values.
  Coeff evaluate(const std::vector<Coeff>& point) const {
    if (point.size() != vars_.size()) throw DomainError("evaluation arity mismatch");
    Coeff sum = ring_.zero();
    for (const auto& [e, c] : terms_) {
      Coeff t = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        Coeff base = e[i] < 0 ? ring_.inverse(point[i]) : point[i];
        for (int k = 0; k < std::abs(e[i]); ++k) t = ring_.mul(t, base);
      }
      sum = ring_.add(sum, t);
    }
    return sum;
  }

  /// Lex-leading term (largest exponent).
  const std::pair<const Exponent, Coeff>& leading() const { return *terms_.rbegin(); }
  const std::pair<const Exponent, Coeff>& trailing() const { return *terms_.begin(); }

  /// Terms `c*x^e` in decreasing lex order joined by + and -; "0" if zero.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Coeff mag = c;
      bool negative = ring_.is_negative(c);
      if (negative) mag = ring_.neg(c);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      const std::string mono = format_monomial(e, vars_);
      std::string coeff = ring_.format(mag);
      if (coeff.find_first_of("+- ") != std::string::npos) coeff = "(" + coeff + ")";
      if (mono.empty()) {
        out += coeff;
      } else if (ring_.is_one(mag)) {
        out += mono;
      } else {
        out += coeff + "*" + mono;
      }
    }
    return out;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (e != it->first || !a.ring_.equal(c, it->second)) return false;
      ++it;
    }
    return true;
  }

 private:
  void check_compatible(const LaurentPoly& o) const {
    if (vars_ != o.vars_) throw DomainError("Laurent polynomials over different variables");
    if (!(ring_ == o.ring_)) throw DomainError("Laurent polynomials over different coefficient rings");
  }

  bool is_invertible(const Coeff& c) const {
    if constexpr (Ring::kIsField) {
      return !ring_.is_zero(c);
    } else {
      return ring_.is_one(c) || ring_.is_one(ring_.neg(c));
    }
  }

  Ring ring_{};
  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Exact quotient a / b in the Laurent ring over a field, or nullopt when b
/// does not divide a. Uses lex (a group order on Z^n); quotient exponents are
/// confined to the box min(a) - min(b) .. max(a) - max(b), which bounds the
/// loop.
template <class Field>
std::optional<LaurentPoly<Field>> divide_exact(const LaurentPoly<Field>& a,
                                               const LaurentPoly<Field>& b) {
  static_assert(Field::kIsField, "exact division needs a coefficient field");
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  LaurentPoly<Field> quotient(a.ring(), a.vars());
  if (a.is_zero()) return quotient;
  const auto lo = sub_exponents(a.min_exponents(), b.min_exponents());
  const auto hi = sub_exponents(a.max_exponents(), b.max_exponents());
  const auto& [lead_e, lead_c] = b.leading();
  const auto& ring = a.ring();
  LaurentPoly<Field> rem = a;
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading();
    auto t = sub_exponents(re, lead_e);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i] < lo[i] || t[i] > hi[i]) return std::nullopt;
    }
    auto c = ring.div(rc, lead_c);
    auto term = LaurentPoly<Field>::monomial(ring, a.vars(), t, c);
    quotient += term;
    rem -= term * b;
  }
  return quotient;
}

}  // namespace artin
