#include "artin/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "artin/errors.hpp"

namespace artin {

namespace {

template <class Field>
struct Poly {
  using Coeff = typename Field::Element;
  // Terms in strictly decreasing monomial order.
  std::vector<std::pair<Exponent, Coeff>> terms;

  bool is_zero() const { return terms.empty(); }
  const Exponent& lm() const { return terms.front().first; }
  const Coeff& lc() const { return terms.front().second; }
};

template <class Field>
class Engine {
 public:
  using Coeff = typename Field::Element;
  using P = Poly<Field>;

  Engine(Field field, std::size_t nvars, MonomialOrder order)
      : field_(std::move(field)), nvars_(nvars), order_(order) {}

  bool less(const Exponent& a, const Exponent& b) const { return monomial_less(a, b, order_); }

  P from_laurent(const LaurentPoly<Field>& p) const {
    P out;
    for (const auto& [e, c] : p.terms()) out.terms.emplace_back(e, c);
    std::sort(out.terms.begin(), out.terms.end(),
              [&](const auto& a, const auto& b) { return less(b.first, a.first); });
    return out;
  }

  LaurentPoly<Field> to_laurent(const P& p, const std::vector<std::string>& vars) const {
    LaurentPoly<Field> out(field_, vars);
    for (const auto& [e, c] : p.terms) out.add_term(e, c);
    return out;
  }

  // a - c * x^shift * b
  P sub_mul(const P& a, const Coeff& c, const Exponent& shift, const P& b) const {
    P out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
      if (j == b.terms.size()) {
        out.terms.push_back(a.terms[i++]);
        continue;
      }
      Exponent be = add_exponents(b.terms[j].first, shift);
      const Coeff bc = field_.neg(field_.mul(c, b.terms[j].second));
      if (i == a.terms.size() || less(a.terms[i].first, be)) {
        out.terms.emplace_back(std::move(be), bc);
        ++j;
      } else if (less(be, a.terms[i].first)) {
        out.terms.push_back(a.terms[i++]);
      } else {
        const Coeff sum = field_.add(a.terms[i].second, bc);
        if (!field_.is_zero(sum)) out.terms.emplace_back(std::move(be), sum);
        ++i;
        ++j;
      }
    }
    return out;
  }

  P monic(P p) const {
    if (p.is_zero()) return p;
    const Coeff inv = field_.inverse(p.lc());
    for (auto& [e, c] : p.terms) c = field_.mul(c, inv);
    return p;
  }

  static bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) return false;
    }
    return true;
  }

  static Exponent lcm(const Exponent& a, const Exponent& b) {
    Exponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
  }

  static bool coprime(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > 0 && b[i] > 0) return false;
    }
    return true;
  }

  // Full reduction of p by the polynomials in `by` (indices into basis).
  P reduce(P p, const std::vector<P>& basis, const std::vector<bool>* active = nullptr) const {
    P rem;
    while (!p.is_zero()) {
      const auto& [e, c] = p.terms.front();
      bool reduced = false;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (active != nullptr && !(*active)[k]) continue;
        const P& g = basis[k];
        if (g.is_zero() || !divides(g.lm(), e)) continue;
        p = sub_mul(p, field_.div(c, g.lc()), sub_exponents(e, g.lm()), g);
        reduced = true;
        break;
      }
      if (!reduced) {
        rem.terms.push_back(p.terms.front());
        p.terms.erase(p.terms.begin());
      }
    }
    return rem;
  }

  P s_polynomial(const P& f, const P& g) const {
    const Exponent l = lcm(f.lm(), g.lm());
    P lhs = sub_mul(P{}, field_.neg(field_.inverse(f.lc())), sub_exponents(l, f.lm()), f);
    return sub_mul(lhs, field_.inverse(g.lc()), sub_exponents(l, g.lm()), g);
  }

  std::vector<P> run(std::vector<P> input) const {
    std::vector<P> basis;
    for (auto& p : input) {
      p = reduce(std::move(p), basis);
      if (!p.is_zero()) basis.push_back(monic(std::move(p)));
    }
    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
    }
    auto is_pending = [&](std::size_t a, std::size_t b) {
      return pending.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    while (!pending.empty()) {
      // Normal selection: smallest lcm of leading monomials.
      auto best = pending.begin();
      Exponent best_lcm = lcm(basis[best->first].lm(), basis[best->second].lm());
      for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
        Exponent l = lcm(basis[it->first].lm(), basis[it->second].lm());
        if (less(l, best_lcm)) {
          best = it;
          best_lcm = std::move(l);
        }
      }
      const auto [i, j] = *best;
      pending.erase(best);
      if (coprime(basis[i].lm(), basis[j].lm())) continue;
      bool chain = false;
      for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
        if (k == i || k == j) continue;
        chain = divides(basis[k].lm(), best_lcm) && !is_pending(i, k) && !is_pending(j, k);
      }
      if (chain) continue;
      P h = reduce(s_polynomial(basis[i], basis[j]), basis);
      if (h.is_zero()) continue;
      basis.push_back(monic(std::move(h)));
      const std::size_t n = basis.size() - 1;
      for (std::size_t k = 0; k < n; ++k) pending.emplace(k, n);
    }
    return interreduce(std::move(basis));
  }

  std::vector<P> interreduce(std::vector<P> basis) const {
    // Drop elements whose leading monomial is divisible by another's.
    std::vector<bool> keep(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
        if (i == j || !keep[j]) continue;
        if (divides(basis[j].lm(), basis[i].lm())) keep[i] = false;
      }
    }
    std::vector<P> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!keep[i]) continue;
      std::vector<bool> others = keep;
      others[i] = false;
      P tail;
      tail.terms.assign(basis[i].terms.begin() + 1, basis[i].terms.end());
      P reduced_tail = reduce(std::move(tail), basis, &others);
      P g;
      g.terms.push_back(basis[i].terms.front());
      g.terms.insert(g.terms.end(), reduced_tail.terms.begin(), reduced_tail.terms.end());
      out.push_back(monic(std::move(g)));
    }
    std::sort(out.begin(), out.end(), [&](const P& a, const P& b) { return less(a.lm(), b.lm()); });
    return out;
  }

 private:
  Field field_;
  std::size_t nvars_;
  MonomialOrder order_;
};

template <class Field>
void check_same_vars(const std::vector<LaurentPoly<Field>>& polys) {
  for (const auto& p : polys) {
    if (p.vars() != polys.front().vars()) {
      throw DomainError("generators use different variable lists");
    }
  }
}

}  // namespace

std::string to_string(MonomialOrder order) {
  return order == MonomialOrder::kGrevlex ? "grevlex" : "lex";
}

MonomialOrder parse_monomial_order(std::string_view text) {
  if (text == "grevlex") return MonomialOrder::kGrevlex;
  if (text == "lex") return MonomialOrder::kLex;
  throw ParseError("unknown monomial order '" + std::string(text) + "'");
}

bool monomial_less(const Exponent& a, const Exponent& b, MonomialOrder order) {
  if (order == MonomialOrder::kLex) return a < b;
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  // Equal degree: the smaller monomial has the larger exponent in the last
  // differing variable.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

template <class Field>
std::vector<LaurentPoly<Field>> buchberger(const std::vector<LaurentPoly<Field>>& gens,
                                           MonomialOrder order) {
  if (gens.empty()) return {};
  check_same_vars(gens);
  const auto& vars = gens.front().vars();
  Engine<Field> engine(gens.front().ring(), vars.size(), order);
  std::vector<Poly<Field>> input;
  for (const auto& g : gens) {
    if (!g.is_zero()) input.push_back(engine.from_laurent(clear_negative_exponents(g)));
  }
  std::vector<LaurentPoly<Field>> out;
  for (const auto& p : engine.run(std::move(input))) out.push_back(engine.to_laurent(p, vars));
  return out;
}

template <class Field>
LaurentPoly<Field> normal_form(const LaurentPoly<Field>& p,
                               const std::vector<LaurentPoly<Field>>& divisors,
                               MonomialOrder order) {
  Engine<Field> engine(p.ring(), p.vars().size(), order);
  std::vector<Poly<Field>> basis;
  for (const auto& d : divisors) {
    if (d.vars() != p.vars()) throw DomainError("divisor uses a different variable list");
    basis.push_back(engine.from_laurent(d));
  }
  return engine.to_laurent(engine.reduce(engine.from_laurent(p), basis), p.vars());
}

template <class Field>
std::pair<Exponent, typename Field::Element> leading_term(const LaurentPoly<Field>& p,
                                                          MonomialOrder order) {
  if (p.is_zero()) throw DomainError("zero polynomial has no leading term");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it) {
    if (monomial_less(best->first, it->first, order)) best = it;
  }
  return {best->first, best->second};
}

template <class Field>
bool is_unit_ideal_laurent(const std::vector<LaurentPoly<Field>>& gens) {
  if (gens.empty()) return false;
  check_same_vars(gens);
  const auto& field = gens.front().ring();
  std::vector<std::string> vars = gens.front().vars();
  std::string fresh = "T";
  while (std::find(vars.begin(), vars.end(), fresh) != vars.end()) fresh += "_";
  std::vector<std::string> extended = vars;
  extended.push_back(fresh);
  std::vector<LaurentPoly<Field>> system;
  for (const auto& g : gens) system.push_back(clear_negative_exponents(g).with_vars(extended));
  auto saturation = LaurentPoly<Field>::one(field, extended);
  saturation.add_term(Exponent(extended.size(), 1), field.neg(field.one()));
  system.push_back(saturation);
  const auto basis = buchberger(system, MonomialOrder::kGrevlex);
  return basis.size() == 1 && basis.front() == LaurentPoly<Field>::one(field, extended);
}

template <class Field>
bool is_unit_ideal_polynomial(const std::vector<LaurentPoly<Field>>& gens) {
  if (gens.empty()) return false;
  const auto basis = buchberger(gens, MonomialOrder::kGrevlex);
  return basis.size() == 1 &&
         basis.front() == LaurentPoly<Field>::one(gens.front().ring(), gens.front().vars());
}

LaurentPoly<PrimeField> reduce_mod_prime(const LaurentPoly<RationalField>& p,
                                         const PrimeField& field) {
  return p.map_coefficients(field, [&](const Rational& c) { return field.from_rational(c); });
}

UnitIdealReport unit_ideal_report(const std::vector<LaurentPoly<RationalField>>& gens,
                                  bool laurent, const std::vector<std::uint64_t>& primes) {
  UnitIdealReport report;
  report.rational = laurent ? is_unit_ideal_laurent(gens) : is_unit_ideal_polynomial(gens);
  for (std::uint64_t p : primes) {
    const PrimeField field(p);
    PrimeCheck check{p, std::nullopt};
    try {
      std::vector<LaurentPoly<PrimeField>> reduced;
      for (const auto& g : gens) reduced.push_back(reduce_mod_prime(g, field));
      check.unit_ideal =
          laurent ? is_unit_ideal_laurent(reduced) : is_unit_ideal_polynomial(reduced);
    } catch (const DomainError&) {
      check.unit_ideal = std::nullopt;
    }
    report.primes.push_back(check);
  }
  return report;
}

template std::vector<LaurentPoly<RationalField>> buchberger(
    const std::vector<LaurentPoly<RationalField>>&, MonomialOrder);
template std::vector<LaurentPoly<PrimeField>> buchberger(const std::vector<LaurentPoly<PrimeField>>&,
                                                         MonomialOrder);
template LaurentPoly<RationalField> normal_form(const LaurentPoly<RationalField>&,
                                                const std::vector<LaurentPoly<RationalField>>&,
                                                MonomialOrder);
template LaurentPoly<PrimeField> normal_form(const LaurentPoly<PrimeField>&,
                                             const std::vector<LaurentPoly<PrimeField>>&,
                                             MonomialOrder);
template std::pair<Exponent, Rational> leading_term(const LaurentPoly<RationalField>&,
                                                    MonomialOrder);
template std::pair<Exponent, std::uint64_t> leading_term(const LaurentPoly<PrimeField>&,
                                                         MonomialOrder);
template bool is_unit_ideal_laurent(const std::vector<LaurentPoly<RationalField>>&);
template bool is_unit_ideal_laurent(const std::vector<LaurentPoly<PrimeField>>&);
template bool is_unit_ideal_polynomial(const std::vector<LaurentPoly<RationalField>>&);
template bool is_unit_ideal_polynomial(const std::vector<LaurentPoly<PrimeField>>&);

}  // namespace artin
