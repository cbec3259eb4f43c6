#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "dalg/sparse_poly.hpp"

namespace dalg {

// Variable ids realize the global order s < x < c_1 < ... < c_m < y_1 < y_1'
// < ... < y_2 < ... < z < z' < ...
inline constexpr VarId kSVar = 0;
inline constexpr VarId kXVar = 1;
inline constexpr VarId kParamBase = 2;
inline constexpr VarId kJetBase = VarId{1} << 24;
inline constexpr std::uint32_t kMaxOrder = 4095;
inline constexpr std::uint32_t kZFamily = 4095;

inline VarId param_var(std::uint32_t k) { return kParamBase + k; }
inline bool is_param_var(VarId v) { return v >= kParamBase && v < kJetBase; }
inline bool is_jet_var(VarId v) { return v >= kJetBase; }

/// Unknown-function family: y_i (index >= 1) or z.
struct Family {
  std::uint32_t index = 1;  // kZFamily for z

  static Family y(std::uint32_t i) { return Family{i}; }
  static Family z() { return Family{kZFamily}; }
  bool is_z() const { return index == kZFamily; }
  std::string name() const { return is_z() ? "z" : "y" + std::to_string(index); }

  auto operator<=>(const Family&) const = default;
};

/// Jet variable f^(order) of a family.
struct JetVar {
  Family family;
  std::uint32_t order = 0;

  VarId id() const { return kJetBase + (family.index << 12U) + order; }
  static JetVar from_id(VarId v) {
    const std::uint32_t off = v - kJetBase;
    return JetVar{Family{off >> 12U}, off & 0xFFFU};
  }
  JetVar next() const { return JetVar{family, order + 1}; }

  auto operator<=>(const JetVar&) const = default;
};

inline VarId jet(Family f, std::uint32_t order) { return JetVar{f, order}.id(); }
inline VarId yvar(std::uint32_t i, std::uint32_t order = 0) { return jet(Family::y(i), order); }
inline VarId zvar(std::uint32_t order = 0) { return jet(Family::z(), order); }

/// Name of a jet variable: y1, y1', y1'', y1''', y1^(4), z'.
inline std::string jet_name(VarId v) {
  const JetVar j = JetVar::from_id(v);
  std::string n = j.family.name();
  if (j.order <= 3) return n + std::string(j.order, '\'');
  return n + "^(" + std::to_string(j.order) + ")";
}

}  // namespace dalg
