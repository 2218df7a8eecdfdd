#ifndef RINV_KZ_HPP
#define RINV_KZ_HPP

#include <optional>
#include <string>
#include <vector>

#include "rinv/ideal.hpp"
#include "rinv/order.hpp"
#include "rinv/rational_function.hpp"

namespace rinv {

// Element of K(z)[Z]: monomials over the "active" variables Z, coefficients
// rational functions in the remaining (base) variables. Terms are stored in
// descending internal degrevlex order of the active monomials.
class KzPolynomial {
 public:
  struct Term {
    Monomial mono;  // exponents only on active variables
    RationalFunction coeff;
  };

  KzPolynomial() = default;

  // Splits a polynomial in K[z, Z] by its Z-monomials.
  static KzPolynomial from_polynomial(const Polynomial& p,
                                      const std::vector<size_t>& active_vars);
  static KzPolynomial from_terms(VarTablePtr table, std::vector<size_t> active_vars,
                                 std::vector<Term> terms);
  static KzPolynomial zero(VarTablePtr table, std::vector<size_t> active_vars);

  const VarTablePtr& table() const { return table_; }
  const std::vector<size_t>& active_vars() const { return active_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  const Term& leading_term(const MonomialOrder& order) const;
  // Coefficient of the given active monomial (zero if absent).
  RationalFunction coefficient_of(const Monomial& m) const;

  KzPolynomial operator+(const KzPolynomial& g) const;
  KzPolynomial operator-(const KzPolynomial& g) const;
  KzPolynomial scaled(const RationalFunction& c) const;
  KzPolynomial times_monomial(const Monomial& m, const RationalFunction& c) const;

  // Substitutes active variables by the given rational functions (indexed
  // by table position; inactive entries are ignored) and evaluates.
  RationalFunction substitute_active(const std::vector<RationalFunction>& images) const;

  // Terms ordered descending by `order` (defaults to storage order).
  std::string str() const;
  std::string str(const MonomialOrder& order) const;

  friend bool operator==(const KzPolynomial& a, const KzPolynomial& b);
  friend bool operator!=(const KzPolynomial& a, const KzPolynomial& b) { return !(a == b); }

 private:
  VarTablePtr table_;
  std::vector<size_t> active_;
  std::vector<Term> terms_;
};

// Reduced Groebner basis over the fraction field K(z), z = base variables.
// Elements are monic, pairwise reduced, sorted ascending by leading term.
class KzBasis {
 public:
  KzBasis(MonomialOrder order, std::vector<size_t> active_vars,
          std::vector<KzPolynomial> elements)
      : order_(std::move(order)),
        active_(std::move(active_vars)),
        elements_(std::move(elements)) {}

  const MonomialOrder& order() const { return order_; }
  const std::vector<size_t>& active_vars() const { return active_; }
  const std::vector<KzPolynomial>& elements() const { return elements_; }
  bool reduced() const { return true; }
  bool is_trivial() const;  // basis == {1}

  std::string str() const;

 private:
  MonomialOrder order_;
  std::vector<size_t> active_;
  std::vector<KzPolynomial> elements_;
};

// Buchberger over K(z)[Z]. Generators are given in K[z, Z] (or already in
// K(z)[Z] via KzPolynomial) and interpreted in the fraction field. The
// order must rank exactly the active variables.
KzBasis kz_buchberger_reduced(const Ideal& gens, const std::vector<size_t>& active_vars,
                              const MonomialOrder& order);
KzBasis kz_buchberger_reduced(const std::vector<KzPolynomial>& gens,
                              const std::vector<size_t>& active_vars,
                              const MonomialOrder& order);

// Exact remainder: f - nf is in the ideal, no term of nf is divisible by a
// basis leading term; divisors are tried in listed basis order.
KzPolynomial kz_normal_form(const KzPolynomial& f, const KzBasis& basis);
KzPolynomial kz_normal_form(const Polynomial& f, const KzBasis& basis);

// Computes the basis of the ideal with `drop` (a subset of active vars)
// eliminated, under `kept_order` ranking the remaining active variables.
KzBasis kz_eliminate(const Ideal& gens, const std::vector<size_t>& active_vars,
                     const std::vector<size_t>& drop, const MonomialOrder& kept_order);

struct QuotientInfo {
  bool finite = false;
  size_t dimension = 0;                      // valid when finite
  std::vector<Monomial> standard_monomials;  // ascending under the basis order
};

// Finite iff every active variable has a pure-power leading term.
QuotientInfo quotient_dimension(const KzBasis& basis);

}  // namespace rinv

#endif
