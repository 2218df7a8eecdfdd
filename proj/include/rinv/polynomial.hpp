#ifndef RINV_POLYNOMIAL_HPP
#define RINV_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "rinv/monomial.hpp"
#include "rinv/order.hpp"
#include "rinv/rational.hpp"
#include "rinv/vartable.hpp"

namespace rinv {

// Degrevlex over the full table in declaration order (first declared
// variable ranks highest). This is the canonical storage/printing order.
inline int internal_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (size_t i = a.size(); i-- > 0;)
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
  return 0;
}

// Multivariate polynomial over Q. Terms are kept in strictly descending
// internal degrevlex order with no zero coefficients.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    BigRational coeff;
  };

  Polynomial() = default;

  static Polynomial zero(VarTablePtr table);
  static Polynomial constant(VarTablePtr table, BigRational c);
  static Polynomial variable(VarTablePtr table, size_t var);
  static Polynomial variable(VarTablePtr table, const std::string& name);
  static Polynomial monomial(VarTablePtr table, Monomial m, BigRational c);
  // Sorts, merges and drops zeros.
  static Polynomial from_terms(VarTablePtr table, std::vector<Term> terms);

  const VarTablePtr& table() const { return table_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  // 0 for the zero polynomial.
  BigRational constant_value() const;
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one();
  }

  // Leading data under the internal order.
  const Term& leading_term() const { return terms_.front(); }
  // Leading term under an arbitrary order (linear scan).
  const Term& leading_term(const MonomialOrder& order) const;

  uint64_t total_degree() const;
  uint32_t degree_in(size_t var) const;
  bool uses_var(size_t var) const { return degree_in(var) > 0; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial scaled(const BigRational& c) const;
  Polynomial times_monomial(const Monomial& m, const BigRational& c) const;
  Polynomial pow(uint32_t k) const;

  // Exact division; throws NotDivisible when g does not divide f.
  Polynomial exact_div(const Polynomial& g) const;
  // nullopt-style probe used by gcd internals.
  bool try_exact_div(const Polynomial& g, Polynomial* quotient) const;

  Polynomial derivative(size_t var) const;
  Polynomial derivative(const std::string& name) const;

  BigRational eval(const std::vector<BigRational>& point) const;

  // Positive rational c with f = c * (integer-primitive polynomial);
  // 0 for the zero polynomial.
  BigRational content() const;
  // f / content(): integer coefficients with overall content 1 (sign kept).
  Polynomial primitive_part() const;
  // Integer-primitive and positive leading coefficient (internal order).
  Polynomial normalized_primitive() const;

  // gcd of all monomials (the largest monomial dividing every term).
  Monomial monomial_content() const;

  // Same polynomial over a table that contains (at least) the variables
  // actually used, matched by name.
  Polynomial transplanted(const VarTablePtr& to) const;

  std::string str() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  VarTablePtr table_;
  std::vector<Term> terms_;
};

void require_same_table(const Polynomial& a, const Polynomial& b);

// Arithmetic on operation selectors, mirroring the toolkit surface.
enum class PolyOp { Add, Sub, Mul, Pow, ExactDiv };
Polynomial poly_arith(PolyOp op, const Polynomial& f, const Polynomial& g);
Polynomial poly_arith(PolyOp op, const Polynomial& f, uint32_t exponent);

// Integer-primitive gcd with positive leading coefficient under the
// internal order. gcd(f, 0) = normalized f; gcd(0, 0) is UndefinedGcd.
Polynomial multivariate_gcd(const Polynomial& f, const Polynomial& g);

// Product of the distinct irreducible factors (char 0), normalized
// integer-primitive with positive leading coefficient.
Polynomial squarefree_part(const Polynomial& f);

// Pseudo-remainder of f by g viewed as univariate in `var`.
Polynomial pseudo_rem(const Polynomial& f, const Polynomial& g, size_t var);

// Coefficient of var^k with f viewed as univariate in `var`.
Polynomial coeff_in_var(const Polynomial& f, size_t var, uint32_t k);

// Resultant of f and g with respect to `var` (subresultant PRS).
Polynomial resultant(const Polynomial& f, const Polynomial& g, size_t var);

}  // namespace rinv

#endif
