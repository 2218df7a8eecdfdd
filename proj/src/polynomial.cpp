#include "rinv/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rinv/errors.hpp"

namespace rinv {

void require_same_table(const Polynomial& a, const Polynomial& b) {
  if (!a.table() || !b.table() || !a.table()->same_as(*b.table()))
    fail(Errc::DomainMismatch, "polynomials over different variable tables");
}

Polynomial Polynomial::zero(VarTablePtr table) {
  Polynomial p;
  p.table_ = std::move(table);
  return p;
}

Polynomial Polynomial::constant(VarTablePtr table, BigRational c) {
  Polynomial p;
  p.table_ = std::move(table);
  if (!c.is_zero())
    p.terms_.push_back({Monomial(p.table_->size()), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(VarTablePtr table, size_t var) {
  Polynomial p;
  p.table_ = std::move(table);
  Monomial m(p.table_->size());
  m.set_exp(var, 1);
  p.terms_.push_back({std::move(m), BigRational(1)});
  return p;
}

Polynomial Polynomial::variable(VarTablePtr table, const std::string& name) {
  size_t i = table->index_of(name);
  return variable(std::move(table), i);
}

Polynomial Polynomial::monomial(VarTablePtr table, Monomial m, BigRational c) {
  Polynomial p;
  p.table_ = std::move(table);
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(VarTablePtr table, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return internal_cmp(a.mono, b.mono) > 0;
  });
  Polynomial p;
  p.table_ = std::move(table);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

BigRational Polynomial::constant_value() const {
  if (is_zero()) return BigRational(0);
  if (!is_constant()) fail(Errc::DomainMismatch, "polynomial is not constant");
  return terms_[0].coeff;
}

const Polynomial::Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) fail(Errc::DomainMismatch, "leading term of zero");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (order.greater(t.mono, best->mono)) best = &t;
  return *best;
}

uint64_t Polynomial::total_degree() const {
  uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

uint32_t Polynomial::degree_in(size_t var) const {
  uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exp(var));
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  require_same_table(*this, g);
  Polynomial out;
  out.table_ = table_;
  out.terms_.reserve(terms_.size() + g.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    int c = internal_cmp(terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(g.terms_[j++]);
    } else {
      BigRational s = terms_[i].coeff + g.terms_[j].coeff;
      if (!s.is_zero()) out.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) out.terms_.push_back(g.terms_[j]);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  return *this + (-g);
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_same_table(*this, g);
  if (is_zero() || g.is_zero()) return zero(table_);
  if (g.terms_.size() == 1)
    return times_monomial(g.terms_[0].mono, g.terms_[0].coeff);
  if (terms_.size() == 1)
    return g.times_monomial(terms_[0].mono, terms_[0].coeff);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : g.terms_)
      prods.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return from_terms(table_, std::move(prods));
}

Polynomial Polynomial::scaled(const BigRational& c) const {
  if (c.is_zero()) return zero(table_);
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const BigRational& c) const {
  if (c.is_zero()) return zero(table_);
  Polynomial p(*this);
  for (auto& t : p.terms_) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return p;
}

Polynomial Polynomial::pow(uint32_t k) const {
  Polynomial r = constant(table_, BigRational(1));
  Polynomial base(*this);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool Polynomial::try_exact_div(const Polynomial& g, Polynomial* quotient) const {
  require_same_table(*this, g);
  if (g.is_zero()) return false;
  std::vector<Term> q;
  Polynomial r(*this);
  const Term& glt = g.terms_.front();
  while (!r.is_zero()) {
    const Term& rlt = r.terms_.front();
    if (!glt.mono.divides(rlt.mono)) return false;
    Term t{rlt.mono / glt.mono, rlt.coeff / glt.coeff};
    r = r - g.times_monomial(t.mono, t.coeff);
    q.push_back(std::move(t));
  }
  if (quotient) *quotient = from_terms(table_, std::move(q));
  return true;
}

Polynomial Polynomial::exact_div(const Polynomial& g) const {
  Polynomial q;
  if (!try_exact_div(g, &q))
    fail(Errc::NotDivisible, "exact division has a nonzero remainder");
  return q;
}

Polynomial Polynomial::derivative(size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    uint32_t e = t.mono.exp(var);
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set_exp(var, e - 1);
    out.push_back({std::move(m), t.coeff * BigRational(static_cast<long>(e))});
  }
  return from_terms(table_, std::move(out));
}

Polynomial Polynomial::derivative(const std::string& name) const {
  return derivative(table_->index_of(name));
}

BigRational Polynomial::eval(const std::vector<BigRational>& point) const {
  if (point.size() != table_->size())
    fail(Errc::DomainMismatch, "evaluation point has wrong dimension");
  BigRational sum(0);
  for (const auto& t : terms_) {
    mpq_class v = t.coeff.raw();
    for (size_t i = 0; i < point.size(); ++i) {
      uint32_t e = t.mono.exp(i);
      if (e == 0) continue;
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), point[i].numerator().get_mpz_t(), e);
      mpz_pow_ui(den.get_mpz_t(), point[i].denominator().get_mpz_t(), e);
      v *= mpq_class(num, den);
    }
    v.canonicalize();
    sum += BigRational(std::move(v));
  }
  return sum;
}

BigRational Polynomial::content() const {
  if (is_zero()) return BigRational(0);
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.denominator().get_mpz_t());
  }
  return BigRational(mpq_class(num_gcd, den_lcm));
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return *this;
  return scaled(content().inverse());
}

Polynomial Polynomial::normalized_primitive() const {
  if (is_zero()) return *this;
  Polynomial p = primitive_part();
  if (p.terms_.front().coeff.sign() < 0) p = -p;
  return p;
}

Monomial Polynomial::monomial_content() const {
  if (is_zero()) return Monomial(table_->size());
  Monomial g = terms_[0].mono;
  for (const auto& t : terms_) {
    g = g.gcd(t.mono);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial Polynomial::transplanted(const VarTablePtr& to) const {
  if (table_->same_as(*to)) {
    Polynomial p(*this);
    p.table_ = to;
    return p;
  }
  std::vector<std::optional<size_t>> map(table_->size());
  for (size_t i = 0; i < table_->size(); ++i) map[i] = to->find(table_->name(i));
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial m(to->size());
    for (size_t i = 0; i < table_->size(); ++i) {
      uint32_t e = t.mono.exp(i);
      if (e == 0) continue;
      if (!map[i])
        fail(Errc::DomainMismatch,
             "variable '" + table_->name(i) + "' missing from target table");
      m.set_exp(*map[i], e);
    }
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(to, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!a.table_ || !b.table_) return a.is_zero() && b.is_zero();
  if (!a.table_->same_as(*b.table_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono) return false;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

namespace {

void append_monomial(std::string& out, const VarTable& table, const Monomial& m) {
  bool first = true;
  for (size_t i = 0; i < m.size(); ++i) {
    uint32_t e = m.exp(i);
    if (e == 0) continue;
    if (!first) out += "*";
    first = false;
    out += table.name(i);
    if (e > 1) {
      out += "^";
      out += std::to_string(e);
    }
  }
}

}  // namespace

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    BigRational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) c = -c;
    }
    if (t.mono.is_one()) {
      out += c.str();
    } else {
      if (!c.is_one()) {
        out += c.str();
        out += "*";
      }
      append_monomial(out, *table_, t.mono);
    }
    first = false;
  }
  return out;
}

Polynomial poly_arith(PolyOp op, const Polynomial& f, const Polynomial& g) {
  switch (op) {
    case PolyOp::Add: return f + g;
    case PolyOp::Sub: return f - g;
    case PolyOp::Mul: return f * g;
    case PolyOp::ExactDiv: return f.exact_div(g);
    case PolyOp::Pow: fail(Errc::DomainMismatch, "pow takes an integer exponent");
  }
  fail(Errc::DomainMismatch, "unknown operation");
}

Polynomial poly_arith(PolyOp op, const Polynomial& f, uint32_t exponent) {
  if (op != PolyOp::Pow) fail(Errc::DomainMismatch, "integer operand only valid for pow");
  return f.pow(exponent);
}

Polynomial coeff_in_var(const Polynomial& f, size_t var, uint32_t k) {
  std::vector<Polynomial::Term> out;
  for (const auto& t : f.terms()) {
    if (t.mono.exp(var) != k) continue;
    Monomial m = t.mono;
    m.set_exp(var, 0);
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(f.table(), std::move(out));
}

Polynomial pseudo_rem(const Polynomial& f, const Polynomial& g, size_t var) {
  require_same_table(f, g);
  if (g.is_zero()) fail(Errc::DivisionByZero, "pseudo-remainder by zero");
  uint32_t dg = g.degree_in(var);
  Polynomial lc_g = coeff_in_var(g, var, dg);
  Polynomial r = f;
  uint32_t dr = r.degree_in(var);
  while (!r.is_zero() && dr >= dg && dg > 0) {
    Polynomial lc_r = coeff_in_var(r, var, dr);
    Monomial shift(f.table()->size());
    shift.set_exp(var, dr - dg);
    r = r * lc_g - g.times_monomial(shift, BigRational(1)) * lc_r;
    uint32_t nd = r.degree_in(var);
    if (!r.is_zero() && nd >= dr && nd >= dg)
      fail(Errc::DomainMismatch, "pseudo-division failed to reduce degree");
    dr = nd;
  }
  if (dg == 0) return Polynomial::zero(f.table());
  return r;
}

namespace {

// Highest-ranked variable (smallest index) appearing in f or g.
std::optional<size_t> pick_main_var(const Polynomial& f, const Polynomial& g) {
  size_t n = f.table()->size();
  for (size_t v = 0; v < n; ++v)
    if (f.degree_in(v) > 0 || g.degree_in(v) > 0) return v;
  return std::nullopt;
}

// gcd of integer-primitive inputs, result integer-primitive positive-LC.
Polynomial gcd_primitive(Polynomial f, Polynomial g);

// Content of f seen as univariate in `var`: gcd of its coefficients.
Polynomial univar_content(const Polynomial& f, size_t var) {
  uint32_t d = f.degree_in(var);
  Polynomial c = Polynomial::zero(f.table());
  for (uint32_t k = 0; k <= d; ++k) {
    Polynomial ck = coeff_in_var(f, var, k);
    if (ck.is_zero()) continue;
    c = c.is_zero() ? ck.normalized_primitive() : gcd_primitive(c, ck.normalized_primitive());
    if (c.is_one()) break;
  }
  return c;
}

Polynomial gcd_primitive(Polynomial f, Polynomial g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.is_constant() || g.is_constant())
    return Polynomial::constant(f.table(), BigRational(1));
  if (f == g) return f;

  // Monomial content comes out first.
  Monomial mf = f.monomial_content();
  Monomial mg = g.monomial_content();
  Monomial mshare = mf.gcd(mg);
  if (!mf.is_one()) f = f.exact_div(Polynomial::monomial(f.table(), mf, BigRational(1)));
  if (!mg.is_one()) g = g.exact_div(Polynomial::monomial(g.table(), mg, BigRational(1)));
  Polynomial shared = Polynomial::monomial(f.table(), mshare, BigRational(1));

  auto main = pick_main_var(f, g);
  if (!main) return shared;
  size_t v = *main;

  if (f.degree_in(v) == 0 || g.degree_in(v) == 0) {
    // One side is free of the top variable; gcd lives in its content.
    Polynomial& free_side = f.degree_in(v) == 0 ? f : g;
    Polynomial& other = f.degree_in(v) == 0 ? g : f;
    return shared * gcd_primitive(free_side, univar_content(other, v));
  }

  Polynomial cf = univar_content(f, v);
  Polynomial cg = univar_content(g, v);
  Polynomial ppf = f.exact_div(cf).normalized_primitive();
  Polynomial ppg = g.exact_div(cg).normalized_primitive();
  Polynomial cont = gcd_primitive(cf, cg);

  if (ppf.degree_in(v) < ppg.degree_in(v)) std::swap(ppf, ppg);

  // Cheap win: direct divisibility.
  if (ppf.try_exact_div(ppg, nullptr))
    return (shared * cont * ppg).normalized_primitive();

  // Primitive PRS.
  Polynomial a = ppf, b = ppg;
  while (!b.is_zero() && b.degree_in(v) > 0) {
    Polynomial r = pseudo_rem(a, b, v);
    a = b;
    b = r.is_zero() ? r : r.normalized_primitive();
    if (!b.is_zero() && b.degree_in(v) > 0) {
      Polynomial bc = univar_content(b, v);
      if (!bc.is_one()) b = b.exact_div(bc).normalized_primitive();
    }
  }
  if (b.is_zero()) {
    Polynomial ca = univar_content(a, v);
    if (!ca.is_one()) a = a.exact_div(ca);
    return (shared * cont * a).normalized_primitive();
  }
  // Nonzero constant-in-v remainder: primitive parts are coprime.
  return (shared * cont).normalized_primitive();
}

}  // namespace

Polynomial multivariate_gcd(const Polynomial& f, const Polynomial& g) {
  require_same_table(f, g);
  if (f.is_zero() && g.is_zero())
    fail(Errc::UndefinedGcd, "gcd(0, 0) is undefined");
  if (f.is_zero()) return g.normalized_primitive();
  if (g.is_zero()) return f.normalized_primitive();
  return gcd_primitive(f.normalized_primitive(), g.normalized_primitive())
      .normalized_primitive();
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  Polynomial p = f.normalized_primitive();
  if (p.is_constant()) return Polynomial::constant(f.table(), BigRational(1));
  Polynomial g = Polynomial::zero(f.table());
  for (size_t v = 0; v < f.table()->size(); ++v) {
    if (p.degree_in(v) == 0) continue;
    Polynomial dv = p.derivative(v);
    if (dv.is_zero()) continue;
    g = g.is_zero() ? multivariate_gcd(p, dv) : multivariate_gcd(g, dv);
    if (g.is_constant()) return p;
  }
  if (g.is_zero() || g.is_constant()) return p;
  return p.exact_div(g).normalized_primitive();
}

Polynomial resultant(const Polynomial& f, const Polynomial& g, size_t var) {
  require_same_table(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial::zero(f.table());
  // Subresultant PRS keeping track of the scalar corrections is overkill
  // here; the callers only need the resultant up to a nonzero constant
  // factor times spurious content (it is squarefree-reduced afterwards).
  Polynomial a = f, b = g;
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  while (b.degree_in(var) > 0) {
    Polynomial r = pseudo_rem(a, b, var);
    if (r.is_zero()) return Polynomial::zero(f.table());
    a = b;
    b = r.normalized_primitive();
  }
  return b;
}

}  // namespace rinv
