#include "hyperjac/tower_text.hpp"

#include <cctype>

namespace hyperjac {

std::string to_text(const SymbolicTower& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mask, coeff] : x.coefficients()) {
    if (!first) out += " + ";
    first = false;
    out += "(" + coeff.to_string() + ")";
    for (int k = 0; k < x.basis()->count(); ++k)
      if (mask & (SymbolicTower::Mask(1) << k)) out += "*" + x.basis()->names[k];
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const SymbolicBasisPtr& basis, std::string_view text)
      : basis_(basis),
        nvars_(basis->one.nvars()),
        text_(text) {}

  SymbolicTower parse() {
    SymbolicTower v = expression();
    skip_space();
    if (pos_ != text_.size())
      throw error("unexpected trailing input in tower expression: " +
                  std::string(text_.substr(pos_)));
    return v;
  }

 private:
  SymbolicTower expression() {
    SymbolicTower acc = term();
    for (;;) {
      skip_space();
      if (consume('+'))
        acc = acc + term();
      else if (consume('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  SymbolicTower term() {
    SymbolicTower acc = factor();
    for (;;) {
      skip_space();
      if (consume('*'))
        acc = acc * factor();
      else if (consume('/'))
        acc = acc * factor().inverse();
      else
        return acc;
    }
  }

  SymbolicTower factor() {
    SymbolicTower base = atom();
    skip_space();
    if (consume('^')) {
      skip_space();
      unsigned e = 0;
      if (pos_ >= text_.size() || !std::isdigit(text_[pos_]))
        throw error("expected exponent after ^");
      while (pos_ < text_.size() && std::isdigit(text_[pos_]))
        e = e * 10 + static_cast<unsigned>(text_[pos_++] - '0');
      return base.pow(e);
    }
    return base;
  }

  SymbolicTower atom() {
    skip_space();
    if (consume('(')) {
      SymbolicTower v = expression();
      skip_space();
      if (!consume(')')) throw error("missing ) in tower expression");
      return v;
    }
    if (consume('-')) return -factor();
    if (pos_ < text_.size() && std::isdigit(text_[pos_])) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(text_[pos_]))
        digits += text_[pos_++];
      return SymbolicTower::from_base(
          basis_, RationalFunction::constant(nvars_, Rat(Int(digits))));
    }
    if (pos_ < text_.size() && std::isalpha(text_[pos_])) {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(text_[pos_]) || text_[pos_] == '_'))
        name += text_[pos_++];
      if (name.size() >= 2 && name[0] == 'a') {
        const int idx = std::stoi(name.substr(1));
        if (idx >= 1 && idx <= nvars_)
          return SymbolicTower::from_base(
              basis_, RationalFunction::variable(nvars_, idx - 1));
      }
      for (int k = 0; k < basis_->count(); ++k)
        if (basis_->names[k] == name)
          return SymbolicTower::radical(basis_, k);
      throw error("unknown symbol in tower expression: " + name);
    }
    throw error("cannot parse tower expression at position " +
                std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(text_[pos_])) ++pos_;
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SymbolicBasisPtr basis_;
  int nvars_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SymbolicTower parse_tower(const SymbolicBasisPtr& basis, std::string_view text) {
  return Parser(basis, text).parse();
}

}  // namespace hyperjac
