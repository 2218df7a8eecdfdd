#ifndef RINV_RATIONAL_FUNCTION_HPP
#define RINV_RATIONAL_FUNCTION_HPP

#include <string>
#include <vector>

#include "rinv/polynomial.hpp"

namespace rinv {

// Quotient of polynomials in canonical form: gcd(num, den) = 1, both with
// integer coefficients whose contents are coprime, and den's leading
// coefficient (internal order) positive. Canonicalizing twice is the
// identity, so equality is structural.
class RationalFunction {
 public:
  RationalFunction() = default;

  static RationalFunction from_parts(Polynomial num, Polynomial den);
  static RationalFunction from_poly(Polynomial p);
  static RationalFunction constant(VarTablePtr table, BigRational c);
  static RationalFunction variable(VarTablePtr table, const std::string& name);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const VarTablePtr& table() const { return num_.table(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  BigRational constant_value() const;
  bool is_polynomial() const { return den_.is_constant(); }
  // DomainMismatch when the denominator is not constant.
  Polynomial as_polynomial() const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& g) const;
  RationalFunction operator-(const RationalFunction& g) const;
  RationalFunction operator*(const RationalFunction& g) const;
  RationalFunction operator/(const RationalFunction& g) const;
  RationalFunction& operator+=(const RationalFunction& g) { return *this = *this + g; }
  RationalFunction& operator-=(const RationalFunction& g) { return *this = *this - g; }
  RationalFunction& operator*=(const RationalFunction& g) { return *this = *this * g; }

  RationalFunction inverse() const;
  RationalFunction pow(int k) const;

  RationalFunction derivative(size_t var) const;
  RationalFunction derivative(const std::string& name) const;

  // DivisionByZero when the denominator vanishes at the point.
  BigRational eval(const std::vector<BigRational>& point) const;

  RationalFunction transplanted(const VarTablePtr& to) const;

  // Forgets the scalar: numerator and denominator each integer-primitive
  // with positive leading coefficient. f and c*f agree on this form.
  RationalFunction scale_normalized() const;

  // Sign convention for printing: negative iff num's leading coefficient
  // (internal order) is negative.
  bool display_negative() const;

  std::string str() const;
  // str() of the absolute value, parenthesized enough to be used as a
  // multiplicative factor.
  std::string coefficient_str() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

enum class RatOp { Add, Sub, Mul, Div };
RationalFunction rational_arith(RatOp op, const RationalFunction& f,
                                const RationalFunction& g);

RationalFunction partial_derivative(const RationalFunction& f, const std::string& var);

// f with variable i replaced by images[i]; images share one table, which
// becomes the result's table. Computed over a common denominator so only
// one canonicalization happens.
RationalFunction substitute(const Polynomial& f,
                            const std::vector<RationalFunction>& images);
RationalFunction substitute(const RationalFunction& f,
                            const std::vector<RationalFunction>& images);

}  // namespace rinv

#endif
