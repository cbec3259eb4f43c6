#include "dalg/dpoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace dalg {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool is_reserved(std::string_view s) {
  if (s == "s" || s == "x" || s == "i" || s == "z" || s == "y") return true;
  if (s.size() > 1 && s[0] == 'y' &&
      std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return true;
  return false;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::pair<bool, std::string> format_coeff(const Coeff& c, const NameFn& names) {
  if (c.is_rational()) {
    const bool neg = sgn(c.rational()) < 0;
    Rational mag = neg ? Rational(-c.rational()) : c.rational();
    return {neg, mag == 1 ? std::string() : mag.get_str()};
  }
  if (c.is_constant()) {
    const GaussRat g = c.constant();
    if (sgn(g.re()) == 0 && sgn(g.im()) < 0) return {true, to_string(-g)};
    return {false, to_string(g)};
  }
  const BasePoly num = c.numerator();
  if (c.is_polynomial() && num.size() == 1) {
    std::string s = format_base_poly(num, names);
    if (s[0] == '-') return {true, s.substr(1)};
    return {false, s};
  }
  return {false, c.to_string(names)};
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldDesc

FieldDesc FieldDesc::parse(std::string_view text) {
  text = trim(text);
  FieldDesc f;
  std::size_t pos = 0;
  if (text.substr(0, 2) == "Qi") {
    f.gaussian = true;
    pos = 2;
  } else if (text.substr(0, 1) == "Q") {
    pos = 1;
  } else {
    throw ParseError("field must start with Q or Qi", 0);
  }
  std::string_view rest = trim(text.substr(pos));
  if (rest.empty()) return f;
  if (rest.front() != '(' || rest.back() != ')') throw ParseError("expected '(params;x)' after field name", pos);
  rest = rest.substr(1, rest.size() - 2);
  const auto semi = rest.find(';');
  if (semi == std::string_view::npos) throw ParseError("missing ';' in field descriptor", pos);
  std::string_view plist = rest.substr(0, semi);
  const std::string_view xpart = trim(rest.substr(semi + 1));
  if (xpart == "x") {
    f.has_x = true;
  } else if (!xpart.empty()) {
    throw ParseError("only 'x' may follow ';' in a field descriptor", pos);
  }
  while (!trim(plist).empty()) {
    const auto comma = plist.find(',');
    std::string_view name = trim(plist.substr(0, comma));
    f.params.emplace_back(name);
    if (comma == std::string_view::npos) break;
    plist = plist.substr(comma + 1);
  }
  f.validate();
  return f;
}

std::string FieldDesc::to_string() const {
  std::string s = gaussian ? "Qi" : "Q";
  if (params.empty() && !has_x) return s;
  s += "(";
  for (std::size_t k = 0; k < params.size(); ++k) s += (k ? "," : "") + params[k];
  s += ";";
  if (has_x) s += "x";
  return s + ")";
}

void FieldDesc::validate() const {
  std::set<std::string> seen;
  for (const auto& p : params) {
    if (!is_identifier(p)) throw DomainError("invalid parameter name '" + p + "'");
    if (is_reserved(p)) throw DomainError("parameter name '" + p + "' is reserved");
    if (!seen.insert(p).second) throw DomainError("duplicate parameter name '" + p + "'");
  }
}

std::optional<std::uint32_t> FieldDesc::param_index(std::string_view name) const {
  for (std::size_t k = 0; k < params.size(); ++k)
    if (params[k] == name) return static_cast<std::uint32_t>(k);
  return std::nullopt;
}

std::string FieldDesc::var_name(VarId v) const {
  if (v == kSVar) return "s";
  if (v == kXVar) return "x";
  if (is_param_var(v)) {
    const std::uint32_t k = v - kParamBase;
    return k < params.size() ? params[k] : "c" + std::to_string(k + 1);
  }
  return jet_name(v);
}

bool FieldDesc::admits(const Coeff& c) const {
  if (c.is_rational()) return true;
  auto ok_poly = [&](const BasePoly& p) {
    for (const auto& t : p.terms()) {
      if (!gaussian && !t.coef.is_real()) return false;
      for (const auto& [v, e] : t.mono.factors()) {
        if (v == kXVar && !has_x) return false;
        if (is_param_var(v) && v - kParamBase >= params.size()) return false;
        if (v != kXVar && !is_param_var(v)) return false;
      }
    }
    return true;
  };
  return ok_poly(c.numerator()) && ok_poly(c.denominator());
}

std::string to_string(const DPoly& p, const FieldDesc& field) {
  const NameFn names = field.names();
  return format_poly(p, [&](const Coeff& c) { return format_coeff(c, names); }, names);
}

// ---------------------------------------------------------------------------
// Derivations

namespace {

template <class VarDerivative>
DPoly derive_with(const DPoly& p, VarDerivative var_derivative) {
  std::vector<DPoly::Term> out;
  for (const auto& t : p.terms()) {
    Coeff dc = t.coef.derivative();
    if (!dc.is_zero()) out.push_back({t.mono, std::move(dc)});
    for (const auto& [v, e] : t.mono.factors()) {
      const DPoly dv = var_derivative(v);
      if (dv.is_zero_poly()) continue;
      const Monomial rest = t.mono / Monomial::var(v);
      const Coeff factor = t.coef * Coeff(static_cast<long>(e));
      for (const auto& u : dv.terms()) out.push_back({rest * u.mono, factor * u.coef});
    }
  }
  return DPoly::from_terms(std::move(out));
}

DPoly standard_var_derivative(VarId v) {
  if (is_jet_var(v)) return dvar(JetVar::from_id(v).next().id());
  if (v == kXVar) return DPoly(Coeff(1));
  return {};
}

}  // namespace

DPoly derive(const DPoly& p) { return derive_with(p, standard_var_derivative); }

DPoly derive(const DPoly& p, std::uint32_t times) {
  DPoly r = p;
  for (std::uint32_t k = 0; k < times; ++k) r = derive(r);
  return r;
}

DPoly derive_chain(const DPoly& p, Family outer, Family inner) {
  const DPoly inner_prime = dvar(jet(inner, 1));
  return derive_with(p, [&](VarId v) {
    if (is_jet_var(v)) {
      const JetVar j = JetVar::from_id(v);
      if (j.family == outer) return inner_prime * dvar(j.next().id());
    }
    return standard_var_derivative(v);
  });
}

// ---------------------------------------------------------------------------
// Homogenization

DPoly homogenize(const DPoly& p) {
  if (p.is_zero_poly()) throw DomainError("cannot homogenize the zero polynomial");
  if (p.contains_var(kSVar)) throw DomainError("homogenize: input already contains s");
  const std::uint32_t d = jet_degree(p);
  std::vector<DPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    const std::uint32_t td = t.mono.degree_if(is_jet_var);
    out.push_back({t.mono * Monomial::var(kSVar, d - td), t.coef});
  }
  return DPoly::from_terms(std::move(out));
}

DPoly dehomogenize(const DPoly& p) {
  std::vector<DPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.mono.without(kSVar), t.coef});
  return DPoly::from_terms(std::move(out));
}

// ---------------------------------------------------------------------------
// Degrees

std::uint32_t jet_degree(const DPoly& p) { return p.total_degree_if(is_jet_var); }

std::uint32_t family_degree(const DPoly& p, Family f) {
  return p.total_degree_if([f](VarId v) { return is_jet_var(v) && JetVar::from_id(v).family == f; });
}

std::uint32_t order_in(const DPoly& p, Family f) {
  std::uint32_t r = 0;
  for (const auto& t : p.terms())
    for (const auto& [v, e] : t.mono.factors())
      if (is_jet_var(v) && JetVar::from_id(v).family == f) r = std::max(r, JetVar::from_id(v).order);
  return r;
}

std::set<Family> families(const DPoly& p) {
  std::set<Family> out;
  for (VarId v : p.variables())
    if (is_jet_var(v)) out.insert(JetVar::from_id(v).family);
  return out;
}

DegreeProfile degree_profile(const DPoly& p) {
  if (p.is_zero_poly()) throw DomainError("degree profile of the zero polynomial");
  DegreeProfile prof;
  prof.total_degree = jet_degree(p);
  for (VarId v : p.variables()) prof.degree_in[v] = p.degree(v);
  for (Family f : families(p)) prof.order[f] = order_in(p, f);
  return prof;
}

bool has_rational_coefficients(const DPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.coef.is_rational(); });
}

SparsePoly<Rational> to_rational(const DPoly& p) {
  if (!has_rational_coefficients(p)) throw DomainError("polynomial has non-rational coefficients");
  return p.map_coefficients<Rational>([](const Coeff& c) { return c.rational(); });
}

DPoly from_rational(const SparsePoly<Rational>& p) {
  return p.map_coefficients<Coeff>([](const Rational& c) { return Coeff(c); });
}

DPoly substitute(const DPoly& p, const std::map<VarId, DPoly>& bindings) {
  for (const auto& [v, val] : bindings)
    for (const auto& [w, unused] : bindings)
      if (val.contains_var(w))
        throw DomainError("substitute: binding value contains a bound variable (no iterated substitution)");
  return p.substitute(bindings);
}

// ---------------------------------------------------------------------------
// Systems

SystemSpec::SystemSpec(FieldDesc field, std::vector<DPoly> generators, std::optional<Family> target,
                       DerivationMode mode)
    : field_(std::move(field)), generators_(std::move(generators)), target_(target), mode_(mode) {
  field_.validate();
  for (const auto& g : generators_) {
    if (g.is_zero_poly()) throw DomainError("system generators must be nonzero");
    for (const auto& t : g.terms()) {
      if (!field_.admits(t.coef)) throw DomainError("generator coefficient lies outside the field " + field_.to_string());
      for (const auto& [v, e] : t.mono.factors())
        if (!is_jet_var(v)) throw DomainError("system generators may only contain jet variables");
    }
    for (Family f : families(g)) orders_[f] = std::max(orders_[f], order_in(g, f));
  }
  if (target_ && !orders_.count(*target_))
    throw DomainError("target " + target_->name() + " does not occur in the system");
}

std::uint32_t SystemSpec::order(Family f) const {
  auto it = orders_.find(f);
  return it == orders_.end() ? 0 : it->second;
}

std::uint32_t SystemSpec::order_sum() const {
  std::uint32_t r = 0;
  for (const auto& [f, o] : orders_) r += o;
  return r;
}

Integer SystemSpec::degree_product() const {
  Integer d = 1;
  for (const auto& g : generators_) d *= jet_degree(g);
  return d;
}

DPoly SystemSpec::derive(const DPoly& p) const {
  return mode_ == DerivationMode::kChain ? derive_chain(p) : dalg::derive(p);
}

SystemSpec prolong(const SystemSpec& s, std::uint32_t m) {
  std::vector<DPoly> gens;
  gens.reserve(s.generators().size() * (m + 1));
  for (const auto& g : s.generators()) {
    DPoly cur = g;
    gens.push_back(cur);
    for (std::uint32_t k = 1; k <= m; ++k) {
      cur = s.derive(cur);
      gens.push_back(cur);
    }
  }
  return SystemSpec(s.field(), std::move(gens), s.target(), s.mode());
}

std::vector<VarId> ring_variables(const SystemSpec& s) {
  std::vector<VarId> vars{kSVar};
  for (const auto& [f, r] : s.orders())
    for (std::uint32_t j = 0; j <= r; ++j) vars.push_back(jet(f, j));
  return vars;
}

}  // namespace dalg
