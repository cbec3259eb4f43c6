#include "dalg/parse.hpp"

#include <cctype>
#include <sstream>

#include "dalg/errors.hpp"

namespace dalg {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class Parser {
 public:
  Parser(std::string_view text, const FieldDesc& field) : text_(text), field_(field) {}

  DPoly run() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    DPoly p = expr();
    skip_ws();
    if (!at_end()) {
      const char c = text_[pos_];
      if (is_ident_start(c) || is_digit(c) || c == '(')
        throw ParseError("implicit multiplication is not allowed; use '*'", pos_);
      throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  DPoly expr() {
    DPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  DPoly term() {
    DPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const DPoly d = unary();
        if (!d.is_constant()) throw ParseError("division is only allowed by field elements", at);
        const Coeff c = d.constant_value();
        if (c.is_zero()) throw ParseError("division by zero", at);
        acc = acc.scaled(Coeff(1) / c);
      } else {
        return acc;
      }
    }
  }

  DPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  DPoly power() {
    DPoly base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::uint32_t e = 0;
      if (peek() == '(') {
        ++pos_;
        skip_ws();
        e = integer("exponent");
        skip_ws();
        if (!accept(')')) throw ParseError("expected ')' after exponent", pos_);
      } else {
        e = integer("exponent");
      }
      base = base.pow(e);
    }
    return base;
  }

  std::uint32_t integer(const char* what) {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected integer ") + what, start);
    if (pos_ - start > 6) throw ParseError(std::string(what) + " too large", start);
    return static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  DPoly atom() {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = peek();
    if (c == '(') {
      ++pos_;
      DPoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (is_digit(c)) {
      while (!at_end() && is_digit(text_[pos_])) ++pos_;
      return DPoly(Coeff(Rational(Integer(std::string(text_.substr(start, pos_ - start))))));
    }
    if (is_ident_start(c)) {
      while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
      return name(text_.substr(start, pos_ - start), start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  DPoly name(std::string_view id, std::size_t start) {
    if (id == "s") return dvar(kSVar);
    if (id == "x") {
      if (!field_.has_x) throw ParseError("x is not part of the field " + field_.to_string(), start);
      return DPoly(Coeff::variable(kXVar));
    }
    if (id == "i") {
      if (!field_.gaussian) throw ParseError("i requires the field Qi", start);
      return DPoly(Coeff::imaginary_unit());
    }
    if (auto k = field_.param_index(id)) return DPoly(Coeff::variable(param_var(*k)));
    if (id == "z") return dvar(jet(Family::z(), jet_order()));
    if (id[0] == 'y') {
      std::uint32_t index = 1;
      if (id.size() > 1) {
        for (char d : id.substr(1))
          if (!is_digit(d)) throw ParseError("unknown variable '" + std::string(id) + "'", start);
        if (id.size() > 5 || id[1] == '0') throw ParseError("bad family index in '" + std::string(id) + "'", start);
        index = static_cast<std::uint32_t>(std::stoul(std::string(id.substr(1))));
        if (index >= kZFamily) throw ParseError("family index too large", start);
      }
      return dvar(jet(Family::y(index), jet_order()));
    }
    throw ParseError("unknown variable '" + std::string(id) + "'", start);
  }

  // Postfix apostrophes or ^(j) directly after a jet name.
  std::uint32_t jet_order() {
    std::uint32_t order = 0;
    while (peek() == '\'') {
      ++order;
      ++pos_;
    }
    if (order == 0 && peek() == '^' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '(') {
      pos_ += 2;
      skip_ws();
      order = integer("derivative order");
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')' after derivative order", pos_);
      ++pos_;
    }
    if (order > kMaxOrder) throw ParseError("derivative order too large", pos_);
    return order;
  }

  std::string_view text_;
  const FieldDesc& field_;
  std::size_t pos_ = 0;
};

}  // namespace

DPoly parse(std::string_view text, const FieldDesc& field) { return Parser(text, field).run(); }

Coeff parse_coeff(std::string_view text, const FieldDesc& field) {
  const DPoly p = parse(text, field);
  if (!p.is_constant()) throw ParseError("expected a field element, got '" + std::string(text) + "'", ParseError::npos);
  return p.constant_value();
}

Family parse_family(std::string_view text) {
  text = trim(text);
  if (text == "z") return Family::z();
  if (text == "y") return Family::y(1);
  if (text.size() > 1 && text[0] == 'y') {
    std::uint32_t index = 0;
    for (char d : text.substr(1)) {
      if (!is_digit(d)) throw ParseError("bad family name '" + std::string(text) + "'", 0);
      index = index * 10 + static_cast<std::uint32_t>(d - '0');
      if (index >= kZFamily) throw ParseError("family index too large", 0);
    }
    if (index == 0) throw ParseError("family indices start at 1", 0);
    return Family::y(index);
  }
  throw ParseError("bad family name '" + std::string(text) + "'", 0);
}

SystemFile parse_system(std::istream& in) {
  SystemFile out;
  std::vector<std::pair<std::string, std::size_t>> lines;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v = line;
    if (auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (v.empty()) continue;
    if (v.substr(0, 6) == "field:") {
      out.field = FieldDesc::parse(v.substr(6));
    } else if (v.substr(0, 7) == "target:") {
      out.target = parse_family(v.substr(7));
    } else {
      lines.emplace_back(std::string(v), lineno);
    }
  }
  for (const auto& [text, no] : lines) {
    try {
      out.generators.push_back(parse(text, out.field));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(no) + ": " + e.what(), e.position());
    }
  }
  if (out.generators.empty()) throw ParseError("system file contains no generators", ParseError::npos);
  return out;
}

SystemFile parse_system_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_system(in);
}

std::vector<WitnessSpec> parse_witness_library(std::istream& in) {
  std::vector<WitnessSpec> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view v = line;
    if (auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (v.empty()) continue;
    std::vector<std::string_view> parts;
    for (;;) {
      const auto bar = v.find('|');
      parts.push_back(trim(v.substr(0, bar)));
      if (bar == std::string_view::npos) break;
      v = v.substr(bar + 1);
    }
    const std::string where = "witness line " + std::to_string(lineno) + ": ";
    if (parts.size() != 4 && parts.size() != 5)
      throw ParseError(where + "expected 'name | field | equation | initial jets [| point]'", ParseError::npos);
    WitnessSpec w;
    w.name = std::string(parts[0]);
    try {
      w.field = FieldDesc::parse(parts[1]);
      w.equation = parse(parts[2], w.field);
      const auto fams = families(w.equation);
      if (fams.size() != 1) throw ParseError("the equation must involve exactly one family", ParseError::npos);
      w.family = *fams.begin();
      std::string_view inits = parts[3];
      while (!trim(inits).empty()) {
        const auto comma = inits.find(',');
        w.initial.push_back(parse_coeff(trim(inits.substr(0, comma)), w.field));
        if (comma == std::string_view::npos) break;
        inits = inits.substr(comma + 1);
      }
      w.point = parts.size() == 5 ? parse_coeff(parts[4], w.field) : Coeff(0);
    } catch (const ParseError& e) {
      throw ParseError(where + e.what(), e.position());
    } catch (const DomainError& e) {
      throw ParseError(where + e.what(), ParseError::npos);
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace dalg
