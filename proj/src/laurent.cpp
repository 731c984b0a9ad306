#include "knotproj/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace knotproj {

LaurentPoly::LaurentPoly(Coefficient constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(Coefficient coefficient, int exponent) {
  LaurentPoly out;
  out.add_term(exponent, coefficient);
  return out;
}

LaurentPoly::Coefficient LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, Coefficient coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  LaurentPoly product;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) product.add_term(e1 + e2, c1 * c2);
  }
  *this = std::move(product);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(-e, c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << ' ';
    out << e << ':' << c;
    first = false;
  }
  return out.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text) {
  LaurentPoly out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const auto colon = token.find(':');
    if (colon == std::string::npos) {
      if (token == "0") continue;
      throw std::invalid_argument("bad polynomial term '" + token + "'");
    }
    std::size_t used = 0;
    const int exponent = std::stoi(token.substr(0, colon), &used);
    const auto coefficient = std::stoll(token.substr(colon + 1));
    out.add_term(exponent, coefficient);
  }
  return out;
}

}  // namespace knotproj
