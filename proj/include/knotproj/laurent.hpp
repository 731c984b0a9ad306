#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace knotproj {

// Laurent polynomial in one variable with exact integer coefficients. Zero
// coefficients are never stored.
class LaurentPoly {
 public:
  using Coefficient = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(Coefficient constant);  // NOLINT: implicit from integers
  static LaurentPoly monomial(Coefficient coefficient, int exponent);

  const std::map<int, Coefficient>& terms() const noexcept { return terms_; }
  Coefficient coefficient(int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
    return lhs += rhs;
  }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
    return lhs -= rhs;
  }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out = lhs;
    return out *= rhs;
  }
  LaurentPoly operator-() const;

  LaurentPoly pow(unsigned exponent) const;
  // Substitutes x -> x^-1.
  LaurentPoly mirrored() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // "exp:coef" pairs in increasing exponent order, space separated; "0" for
  // the zero polynomial.
  std::string to_string() const;
  // Inverse of to_string.
  static LaurentPoly parse(const std::string& text);

 private:
  void add_term(int exponent, Coefficient coefficient);

  std::map<int, Coefficient> terms_;
};

}  // namespace knotproj
