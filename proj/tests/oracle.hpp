#pragma once

// Independent reference computations: dense matrices, no criteria, no
// sparsity. Slow and obviously correct.

#include <map>
#include <vector>

#include "dalg/dpoly.hpp"

namespace dalg::testing {

inline void all_monomials(const std::vector<VarId>& vars, std::size_t pos, std::uint32_t left,
                          std::vector<Monomial::Factor>& cur, std::vector<Monomial>& out) {
  if (pos == vars.size()) {
    if (left == 0) out.push_back(Monomial::from_factors(cur));
    return;
  }
  for (std::uint32_t e = 0; e <= left; ++e) {
    if (e > 0) cur.emplace_back(vars[pos], e);
    all_monomials(vars, pos + 1, left - e, cur, out);
    if (e > 0) cur.pop_back();
  }
}

inline std::vector<Monomial> all_monomials(const std::vector<VarId>& vars, std::uint32_t k) {
  std::vector<Monomial> out;
  std::vector<Monomial::Factor> cur;
  all_monomials(vars, 0, k, cur, out);
  return out;
}

template <class F>
std::size_t dense_rank(std::vector<std::vector<F>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && is_zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || is_zero(m[r][c])) continue;
      const F f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Dense row space of all m * g in degree k, as rows over the degree-k
// monomials.
inline std::vector<std::vector<Coeff>> dense_layer(const std::vector<DPoly>& gens, const std::vector<VarId>& vars,
                                                   std::uint32_t k, std::vector<Monomial>* columns = nullptr) {
  const auto cols = all_monomials(vars, k);
  std::map<Monomial, std::size_t, GrevlexGreater> index;
  for (std::size_t c = 0; c < cols.size(); ++c) index[cols[c]] = c;
  std::vector<std::vector<Coeff>> rows;
  for (const auto& g : gens) {
    const std::uint32_t d = g.total_degree();
    if (d > k) continue;
    for (const auto& m : all_monomials(vars, k - d)) {
      std::vector<Coeff> row(cols.size());
      for (const auto& t : g.terms()) row[index.at(m * t.mono)] = t.coef;
      rows.push_back(std::move(row));
    }
  }
  if (columns) *columns = cols;
  return rows;
}

inline Integer oracle_hf(const std::vector<DPoly>& gens, const std::vector<VarId>& vars, std::uint32_t k) {
  const auto rows = dense_layer(gens, vars, k);
  const auto total = all_monomials(vars, k).size();
  return Integer(static_cast<unsigned long>(total - dense_rank(rows)));
}

// Sylvester determinant by cofactor expansion along the first row.
inline DPoly cofactor_det(const std::vector<std::vector<DPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return DPoly(Coeff(1));
  if (n == 1) return m[0][0];
  DPoly det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero_poly()) continue;
    std::vector<std::vector<DPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<DPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const DPoly term = m[0][c] * cofactor_det(minor);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

}  // namespace dalg::testing
