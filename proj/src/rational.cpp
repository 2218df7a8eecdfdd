#include "rinv/rational.hpp"

#include <ostream>

#include "rinv/errors.hpp"

namespace rinv {

BigRational::BigRational(long n, long d) {
  if (d == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

BigRational BigRational::from_string(std::string_view s) {
  mpq_class v;
  if (v.set_str(std::string(s), 10) != 0)
    fail(Errc::SyntaxError, "malformed rational literal '" + std::string(s) + "'");
  if (v.get_den() == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
  v.canonicalize();
  return BigRational(std::move(v));
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) fail(Errc::DivisionByZero, "division of rationals by zero");
  v_ /= o.v_;
  return *this;
}

BigRational BigRational::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  return BigRational(mpq_class(1) / v_);
}

std::string BigRational::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) {
  return os << q.str();
}

BigRational integer_gcd(const BigRational& a, const BigRational& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
  return BigRational(mpq_class(g));
}

BigRational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return BigRational(mpq_class(b));
}

}  // namespace rinv
