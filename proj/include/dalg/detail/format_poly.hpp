#pragma once

#include <string>
#include <utility>

namespace dalg {

/// Coefficient printers return {negative, magnitude}; an empty magnitude
/// stands for the unit 1.
template <class F, class CoefFmt>
std::string format_poly(const SparsePoly<F>& p, CoefFmt coef_fmt, const NameFn& names) {
  if (p.is_zero_poly()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    auto [negative, magnitude] = coef_fmt(t.coef);
    std::string mono;
    for (const auto& [v, e] : t.mono.factors()) {
      if (!mono.empty()) mono += "*";
      mono += names(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string body;
    if (mono.empty()) {
      body = magnitude.empty() ? "1" : magnitude;
    } else {
      body = magnitude.empty() ? mono : magnitude + "*" + mono;
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

}  // namespace dalg
