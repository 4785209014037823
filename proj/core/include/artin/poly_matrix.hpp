#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "artin/errors.hpp"
#include "artin/laurent.hpp"

namespace artin {

/// Dense matrix of Laurent polynomials over a coefficient field.
template <class Field>
struct PolyMatrix {
  using Poly = LaurentPoly<Field>;

  Field field{};
  std::vector<std::string> vars;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Poly> entries;  // row-major

  PolyMatrix() = default;
  PolyMatrix(Field f, std::vector<std::string> v, std::size_t r, std::size_t c)
      : field(std::move(f)), vars(std::move(v)), rows(r), cols(c), entries(r * c, Poly(field, vars)) {}

  Poly& at(std::size_t r, std::size_t c) { return entries.at(r * cols + c); }
  const Poly& at(std::size_t r, std::size_t c) const { return entries.at(r * cols + c); }
};

/// Rank over the fraction field of the Laurent ring, by fraction-free
/// (Bareiss) elimination. Every division performed is exact.
template <class Field>
std::size_t matrix_rank(const PolyMatrix<Field>& m) {
  using Poly = LaurentPoly<Field>;
  std::vector<std::vector<Poly>> a(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) a[r].push_back(m.at(r, c));
  }
  Poly prev = Poly::one(m.field, m.vars);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      for (std::size_t k = c + 1; k < m.cols; ++k) {
        Poly num = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
        auto q = divide_exact(num, prev);
        if (!q) throw DomainError("fraction-free elimination produced an inexact division");
        a[r][k] = std::move(*q);
      }
      a[r][c] = Poly(m.field, m.vars);
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace artin
