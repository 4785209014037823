#include "artin/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "artin/errors.hpp"

namespace artin {

namespace {

using QPoly = std::vector<Rational>;  // constant term first

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Long division by a nonzero divisor; returns {quotient, remainder}.
std::pair<QPoly, QPoly> divmod(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  if (b.empty()) throw DomainError("polynomial division by zero");
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  const std::size_t shift_max = a.size() - b.size();
  for (std::size_t s = shift_max + 1; s-- > 0;) {
    const Rational c = a[s + b.size() - 1] / lead;
    q[s] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= c * b[i];
  }
  trim(q);
  trim(a);
  return {q, a};
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::vector<Integer> compute_cyclotomic(unsigned order);

const std::vector<Integer>& cached_cyclotomic(unsigned order) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<Integer>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
  }
  auto value = compute_cyclotomic(order);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(order, std::move(value)).first->second;
}

std::vector<Integer> compute_cyclotomic(unsigned order) {
  QPoly p(order + 1, Rational(0));
  p[0] = -1;
  p[order] = 1;
  for (unsigned d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    const auto& phi = cached_cyclotomic(d);
    QPoly divisor(phi.begin(), phi.end());
    auto [q, r] = divmod(p, divisor);
    if (!r.empty()) throw DomainError("cyclotomic division left a remainder");
    p = std::move(q);
  }
  std::vector<Integer> out;
  for (const auto& c : p) {
    if (c.get_den() != 1) throw DomainError("non-integral cyclotomic coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned order) {
  if (order == 0) throw DomainError("cyclotomic order must be >= 1");
  return cached_cyclotomic(order);
}

unsigned euler_phi(unsigned order) {
  unsigned result = order;
  unsigned n = order;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicField::CyclotomicField(unsigned order) : order_(order) {
  const auto phi = cyclotomic_polynomial(order);
  modulus_.assign(phi.begin(), phi.end());
}

CyclotomicField::Element CyclotomicField::reduce(std::vector<Rational> coeffs) const {
  const std::size_t d = degree();
  // Phi_M is monic: fold high powers down.
  for (std::size_t k = coeffs.size(); k-- > d;) {
    const Rational c = coeffs[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= d; ++i) coeffs[k - d + i] -= c * modulus_[i];
  }
  coeffs.resize(d, Rational(0));
  return coeffs;
}

CyclotomicField::Element CyclotomicField::from_rational(const Rational& r) const {
  Element e = zero();
  if (degree() > 0) e[0] = r;
  return e;
}

CyclotomicField::Element CyclotomicField::zeta(long k) const {
  const long m = static_cast<long>(order_);
  long r = k % m;
  if (r < 0) r += m;
  std::vector<Rational> coeffs(static_cast<std::size_t>(r) + 1, Rational(0));
  coeffs[static_cast<std::size_t>(r)] = 1;
  return reduce(std::move(coeffs));
}

CyclotomicField::Element CyclotomicField::add(const Element& a, const Element& b) const {
  Element out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

CyclotomicField::Element CyclotomicField::sub(const Element& a, const Element& b) const {
  Element out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

CyclotomicField::Element CyclotomicField::neg(const Element& a) const {
  Element out = a;
  for (auto& c : out) c = -c;
  return out;
}

CyclotomicField::Element CyclotomicField::mul(const Element& a, const Element& b) const {
  std::vector<Rational> prod(a.size() + b.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  return reduce(std::move(prod));
}

CyclotomicField::Element CyclotomicField::inverse(const Element& a) const {
  if (is_zero(a)) throw DomainError("division by zero in " + name());
  // Invariant: s_i * a == r_i (mod Phi_M).
  QPoly r0 = modulus_, r1 = a;
  QPoly s0, s1{Rational(1)};
  trim(r1);
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant: Phi_M is irreducible.
  const Rational c = r1.at(0);
  for (auto& x : s1) x /= c;
  return reduce(std::move(s1));
}

CyclotomicField::Element CyclotomicField::pow(const Element& a, long k) const {
  Element base = k < 0 ? inverse(a) : a;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Element result = one();
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

bool CyclotomicField::is_zero(const Element& a) const {
  for (const auto& c : a) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicField::is_one(const Element& a) const { return a == one(); }

std::string CyclotomicField::format(const Element& a) const {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational& c = a[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string power = i == 0 ? "" : i == 1 ? "zeta" : "zeta^" + std::to_string(i);
    if (power.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += power;
    } else {
      out += mag.get_str() + "*" + power;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace artin
