#pragma once

#include <string>
#include <vector>

#include "dalg/eliminate.hpp"

namespace dalg {

/// Moves x out of the coefficients into the monomials (variable kXVar).
/// Requires every coefficient to be polynomial in x.
DPoly lift_x(const DPoly& p);
/// Inverse of lift_x.
DPoly lower_x(const DPoly& p);

/// Sylvester matrix of p and q in v: deg_v q rows of p's coefficients,
/// then deg_v p rows of q's, highest power first. Entries are free of v;
/// inputs and entries use the lifted convention (x as a variable).
std::vector<std::vector<DPoly>> sylvester_matrix(const DPoly& p, const DPoly& q, VarId v);

/// Determinant by fraction-free (Bareiss) elimination with row swaps.
DPoly bareiss_determinant(std::vector<std::vector<DPoly>> m);

/// Res_v(p, q) for v a jet variable or x. Inputs and output keep x inside
/// the coefficients. Both inputs need positive degree in v.
DPoly resultant(const DPoly& p, const DPoly& q, VarId v);

struct BoundCheck {
  std::string name;  // "d_y2", "d_x", "d", "order"
  std::uint32_t value = 0;
  Integer bound;
  bool ok() const { return Integer(value) <= bound; }
};

struct ResultantElimination {
  Annihilator annihilator;
  /// Resultant before normalization.
  DPoly resultant;
  std::vector<BoundCheck> bounds;
  bool bounds_ok() const;
};

/// f satisfies P(x, g, f, ..., f^(r)) = 0 with P in y1 (for g) and y2 (for
/// f); Qg in x and y1 is the minimal polynomial of g. Returns
/// Res_y1(P, Qg). Throws HypothesisViolation when the resultant vanishes.
ResultantElimination elim_algebraic(const DPoly& p, const DPoly& qg);

/// g'/g = u/v with coprime polynomials u, v in x; P in y1 (order 0) and y2.
/// Returns Res_y1(P, v * P'|_{y1' = y1 u / v}).
ResultantElimination elim_hyperexp(const DPoly& p, const Coeff& u, const Coeff& v);

/// P in one family with coefficients in C[x]: P' when it is free of x,
/// else Res_x(P, P').
ResultantElimination elim_x(const DPoly& p);

/// Primitive part of P in `top`, made squarefree in `top`, normalized.
DPoly prepare_primitive_separable(const DPoly& p, VarId top);

}  // namespace dalg
