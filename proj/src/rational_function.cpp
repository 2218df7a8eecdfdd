#include "rinv/rational_function.hpp"

#include <map>

#include "rinv/errors.hpp"

namespace rinv {

RationalFunction RationalFunction::from_parts(Polynomial num, Polynomial den) {
  require_same_table(num, den);
  if (den.is_zero()) fail(Errc::DivisionByZero, "rational function with zero denominator");
  RationalFunction r;
  if (num.is_zero()) {
    r.num_ = Polynomial::zero(num.table());
    r.den_ = Polynomial::constant(num.table(), BigRational(1));
    return r;
  }
  if (!den.is_constant()) {
    Polynomial g = multivariate_gcd(num, den);
    if (!g.is_one()) {
      num = num.exact_div(g);
      den = den.exact_div(g);
    }
  }
  BigRational cn = num.content();
  BigRational cd = den.content();
  Polynomial pn = num.primitive_part();
  Polynomial pd = den.primitive_part();
  BigRational scale = cn / cd;  // canonical: positive denominator
  mpz_class p = scale.numerator(), q = scale.denominator();
  r.num_ = pn.scaled(BigRational(mpq_class(p)));
  r.den_ = pd.scaled(BigRational(mpq_class(q)));
  if (r.den_.leading_term().coeff.sign() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RationalFunction RationalFunction::from_poly(Polynomial p) {
  auto table = p.table();
  return from_parts(std::move(p), Polynomial::constant(table, BigRational(1)));
}

RationalFunction RationalFunction::constant(VarTablePtr table, BigRational c) {
  return from_poly(Polynomial::constant(std::move(table), std::move(c)));
}

RationalFunction RationalFunction::variable(VarTablePtr table, const std::string& name) {
  return from_poly(Polynomial::variable(std::move(table), name));
}

BigRational RationalFunction::constant_value() const {
  if (!is_constant()) fail(Errc::DomainMismatch, "rational function is not constant");
  if (num_.is_zero()) return BigRational(0);
  return num_.constant_value() / den_.constant_value();
}

Polynomial RationalFunction::as_polynomial() const {
  if (!den_.is_constant())
    fail(Errc::DomainMismatch, "rational function is not a polynomial");
  if (den_.is_one()) return num_;
  return num_.scaled(den_.constant_value().inverse());
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& g) const {
  return from_parts(num_ * g.den_ + g.num_ * den_, den_ * g.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& g) const {
  return from_parts(num_ * g.den_ - g.num_ * den_, den_ * g.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& g) const {
  return from_parts(num_ * g.num_, den_ * g.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& g) const {
  if (g.is_zero()) fail(Errc::DivisionByZero, "division by the zero rational function");
  return from_parts(num_ * g.den_, den_ * g.num_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of the zero rational function");
  return from_parts(den_, num_);
}

RationalFunction RationalFunction::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  return from_parts(num_.pow(static_cast<uint32_t>(k)),
                    den_.pow(static_cast<uint32_t>(k)));
}

RationalFunction RationalFunction::derivative(size_t var) const {
  return from_parts(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                    den_ * den_);
}

RationalFunction RationalFunction::derivative(const std::string& name) const {
  return derivative(num_.table()->index_of(name));
}

BigRational RationalFunction::eval(const std::vector<BigRational>& point) const {
  BigRational d = den_.eval(point);
  if (d.is_zero()) fail(Errc::DivisionByZero, "denominator vanishes at the point");
  return num_.eval(point) / d;
}

RationalFunction RationalFunction::transplanted(const VarTablePtr& to) const {
  RationalFunction r;
  r.num_ = num_.transplanted(to);
  r.den_ = den_.transplanted(to);
  return r;
}

RationalFunction RationalFunction::scale_normalized() const {
  if (is_zero()) return *this;
  return from_parts(num_.normalized_primitive(), den_.normalized_primitive());
}

bool RationalFunction::display_negative() const {
  return !num_.is_zero() && num_.leading_term().coeff.sign() < 0;
}

namespace {

bool is_simple_factor(const Polynomial& p) {
  if (p.term_count() != 1) return false;
  const auto& t = p.terms()[0];
  if (t.mono.is_one()) return true;  // plain integer
  if (!t.coeff.is_one() && t.coeff != BigRational(-1)) return false;
  size_t used = 0;
  for (size_t i = 0; i < t.mono.size(); ++i)
    if (t.mono.exp(i) > 0) ++used;
  return used == 1;
}

}  // namespace

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  std::string ns = num_.term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
  std::string ds = is_simple_factor(den_) ? den_.str() : "(" + den_.str() + ")";
  return ns + "/" + ds;
}

std::string RationalFunction::coefficient_str() const {
  RationalFunction a = display_negative() ? -*this : *this;
  if (a.is_constant()) {
    BigRational v = a.constant_value();
    return v.str();
  }
  if (a.den_.is_one() && a.num_.term_count() == 1) {
    // single monomial like 3*x^2 works unparenthesized as a factor
    return a.num_.str();
  }
  return "(" + a.str() + ")";
}

RationalFunction rational_arith(RatOp op, const RationalFunction& f,
                                const RationalFunction& g) {
  switch (op) {
    case RatOp::Add: return f + g;
    case RatOp::Sub: return f - g;
    case RatOp::Mul: return f * g;
    case RatOp::Div: return f / g;
  }
  fail(Errc::DomainMismatch, "unknown operation");
}

RationalFunction partial_derivative(const RationalFunction& f, const std::string& var) {
  return f.derivative(var);
}

RationalFunction substitute(const Polynomial& f,
                            const std::vector<RationalFunction>& images) {
  if (images.size() != f.table()->size())
    fail(Errc::DomainMismatch, "substitution needs one image per variable");
  VarTablePtr target;
  for (const auto& im : images)
    if (im.table()) {
      if (!target) target = im.table();
      else if (!target->same_as(*im.table()))
        fail(Errc::DomainMismatch, "substitution images over different tables");
    }
  if (!target) fail(Errc::DomainMismatch, "substitution needs at least one image");

  if (f.is_zero()) return RationalFunction::from_poly(Polynomial::zero(target));

  // Common denominator prod_i den_i^{D_i}; each term contributes
  // coeff * prod num_i^{e_i} * den_i^{D_i - e_i}.
  size_t n = f.table()->size();
  std::vector<uint32_t> maxdeg(n, 0);
  for (const auto& t : f.terms())
    for (size_t i = 0; i < n; ++i)
      maxdeg[i] = std::max(maxdeg[i], t.mono.exp(i));

  std::vector<std::vector<Polynomial>> num_pows(n), den_pows(n);
  Polynomial common_den = Polynomial::constant(target, BigRational(1));
  for (size_t i = 0; i < n; ++i) {
    if (maxdeg[i] == 0) continue;
    num_pows[i].resize(maxdeg[i] + 1);
    den_pows[i].resize(maxdeg[i] + 1);
    num_pows[i][0] = Polynomial::constant(target, BigRational(1));
    den_pows[i][0] = Polynomial::constant(target, BigRational(1));
    for (uint32_t k = 1; k <= maxdeg[i]; ++k) {
      num_pows[i][k] = num_pows[i][k - 1] * images[i].num();
      den_pows[i][k] = den_pows[i][k - 1] * images[i].den();
    }
    common_den = common_den * den_pows[i][maxdeg[i]];
  }

  Polynomial acc = Polynomial::zero(target);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (size_t i = 0; i < n; ++i) {
      if (maxdeg[i] == 0) continue;
      uint32_t e = t.mono.exp(i);
      if (e > 0) prod = prod * num_pows[i][e];
      if (maxdeg[i] > e) prod = prod * den_pows[i][maxdeg[i] - e];
    }
    acc = acc + prod;
  }
  return RationalFunction::from_parts(std::move(acc), std::move(common_den));
}

RationalFunction substitute(const RationalFunction& f,
                            const std::vector<RationalFunction>& images) {
  RationalFunction dn = substitute(f.den(), images);
  if (dn.is_zero())
    fail(Errc::DivisionByZero, "denominator vanishes identically under substitution");
  return substitute(f.num(), images) / dn;
}

}  // namespace rinv
