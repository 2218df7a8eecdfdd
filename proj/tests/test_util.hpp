#ifndef RINV_TEST_UTIL_HPP
#define RINV_TEST_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "rinv/parse.hpp"
#include "rinv/polynomial.hpp"
#include "rinv/rational_function.hpp"
#include "rinv/vartable.hpp"

namespace rinv::test {

inline VarTablePtr table_of(const std::vector<std::string>& names,
                            VarRole role = VarRole::Source) {
  std::vector<std::pair<std::string, VarRole>> vars;
  for (const auto& n : names) vars.emplace_back(n, role);
  return VarTable::make(std::move(vars));
}

inline Polynomial P(const std::string& text, const VarTablePtr& t) {
  return parse_polynomial(text, t);
}

inline RationalFunction R(const std::string& text, const VarTablePtr& t) {
  return parse_expression(text, t);
}

class Rng {
 public:
  explicit Rng(uint32_t seed) : gen_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
  }

  BigRational rational(long lo = -9, long hi = 9, long max_den = 5) {
    long d = integer(1, max_den);
    return BigRational(integer(lo, hi), d);
  }

  BigRational nonzero_rational() {
    while (true) {
      BigRational q = rational();
      if (!q.is_zero()) return q;
    }
  }

  Polynomial poly(const VarTablePtr& t, int max_terms = 4, uint32_t max_exp = 3,
                  long coeff_range = 6) {
    std::vector<Polynomial::Term> terms;
    int nt = static_cast<int>(integer(1, max_terms));
    for (int i = 0; i < nt; ++i) {
      Monomial m(t->size());
      for (size_t v = 0; v < t->size(); ++v)
        m.set_exp(v, static_cast<uint32_t>(integer(0, max_exp)));
      terms.push_back({std::move(m), BigRational(integer(-coeff_range, coeff_range))});
    }
    return Polynomial::from_terms(t, std::move(terms));
  }

  Polynomial nonzero_poly(const VarTablePtr& t, int max_terms = 4,
                          uint32_t max_exp = 3) {
    while (true) {
      Polynomial p = poly(t, max_terms, max_exp);
      if (!p.is_zero()) return p;
    }
  }

  RationalFunction ratfun(const VarTablePtr& t) {
    return RationalFunction::from_parts(poly(t, 3, 2), nonzero_poly(t, 2, 2));
  }

 private:
  std::mt19937 gen_;
};

}  // namespace rinv::test

#endif
