#pragma once

#include <map>

#include "dalg/sparse_poly.hpp"

namespace dalg {

/// Incremental row echelon form of polynomials viewed as coefficient
/// vectors over their monomials. Pivots are leading monomials; inserted
/// rows are top-reduced until their leading monomial is new.
template <class F>
class RowEchelon {
 public:
  /// Returns false when p reduces to zero (already in the span).
  bool insert(SparsePoly<F> p) {
    while (!p.is_zero_poly()) {
      auto it = pivots_.find(p.leading_monomial());
      if (it == pivots_.end()) {
        const Monomial lm = p.leading_monomial();
        pivots_.emplace(lm, p.monic());
        return true;
      }
      p -= it->second.scaled(p.leading_coef());
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<Monomial, SparsePoly<F>, GrevlexGreater> pivots_;
};

}  // namespace dalg
