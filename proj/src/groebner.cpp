#include "rinv/groebner.hpp"

#include <algorithm>

#include "engine.hpp"
#include "rinv/errors.hpp"

namespace rinv {

Ideal Ideal::make(VarTablePtr table, std::vector<Polynomial> gens) {
  for (const auto& g : gens) {
    if (g.is_zero()) fail(Errc::DomainMismatch, "ideal generator is zero");
    if (!g.table()->same_as(*table))
      fail(Errc::DomainMismatch, "ideal generators over different tables");
  }
  return Ideal{std::move(table), std::move(gens)};
}

std::string Ideal::str() const {
  std::string out = "{ ";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ", ";
    out += gens[i].str();
  }
  return out + (gens.empty() ? "}" : " }");
}

namespace {

// Integer coefficients (field Q cleared of denominators).
struct IntOps {
  using C = BigRational;
  bool is_zero(const C& c) const { return c.is_zero(); }
  C one() const { return BigRational(1); }
  C add(const C& a, const C& b) const { return a + b; }
  C sub(const C& a, const C& b) const { return a - b; }
  C mul(const C& a, const C& b) const { return a * b; }
  C neg(const C& a) const { return -a; }
  C gcd(const C& a, const C& b) const { return integer_gcd(a, b); }
  C exact_div(const C& a, const C& b) const { return a / b; }

  template <class Term>
  void strip_content(std::vector<Term>& p) const {
    if (p.empty()) return;
    mpz_class g = 0, l = 1;
    for (const auto& t : p) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.numerator().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.denominator().get_mpz_t());
    }
    BigRational scale(mpq_class(l, g));  // canonicalized
    if (p.front().c.sign() < 0) scale = -scale;
    for (auto& t : p) t.c *= scale;
  }
};

using QEngine = engine::Engine<IntOps>;

QEngine::TP to_tp(const Polynomial& p, const QEngine& eng) {
  std::vector<QEngine::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) terms.push_back({t.mono, t.coeff});
  return eng.sorted(std::move(terms));
}

Polynomial from_tp(const QEngine::TP& tp, const VarTablePtr& table) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(tp.size());
  for (const auto& t : tp) terms.push_back({t.m, t.c});
  return Polynomial::from_terms(table, std::move(terms));
}

}  // namespace

bool GroebnerBasis::is_trivial() const {
  return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
}

std::string GroebnerBasis::str() const {
  std::string out = "{ ";
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ", ";
    out += elements_[i].str();
  }
  return out + (elements_.empty() ? "}" : " }");
}

GroebnerBasis buchberger_reduced(const Ideal& ideal, const MonomialOrder& order) {
  if (!ideal.table || !order.table()->same_as(*ideal.table))
    fail(Errc::DomainMismatch, "order and ideal over different tables");
  QEngine eng(order);
  std::vector<QEngine::TP> gens;
  for (const auto& g : ideal.gens) gens.push_back(to_tp(g, eng));
  std::vector<QEngine::TP> red = eng.reduced_basis(std::move(gens));
  std::vector<Polynomial> elems;
  for (auto& tp : red) {
    // monic in the coefficient field Q
    BigRational lc = tp.front().c;
    for (auto& t : tp) t.c /= lc;
    elems.push_back(from_tp(tp, ideal.table));
  }
  return GroebnerBasis(order, std::move(elems));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (!f.table()->same_as(*basis.order().table()))
    fail(Errc::DomainMismatch, "polynomial and basis over different tables");
  QEngine eng(basis.order());
  std::vector<QEngine::TP> b;
  for (const auto& e : basis.elements()) b.push_back(to_tp(e, eng));
  BigRational multiplier;
  QEngine::TP r =
      eng.normal_form(to_tp(f, eng), b, /*value_mode=*/true, &multiplier);
  Polynomial out = from_tp(r, f.table());
  return out.scaled(multiplier.inverse());
}

Ideal eliminate_indices(const Ideal& ideal, const std::vector<size_t>& drop,
                        const MonomialOrder* retained_hint) {
  std::vector<size_t> retained;
  for (size_t i = 0; i < ideal.table->size(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) retained.push_back(i);

  MonomialOrder kept = retained_hint
                           ? retained_hint->restricted_to(retained)
                           : MonomialOrder::degrevlex_indices(ideal.table, retained);
  if (drop.empty()) {
    GroebnerBasis gb = buchberger_reduced(ideal, kept);
    return Ideal::make(ideal.table, gb.elements());
  }
  MonomialOrder block = MonomialOrder::product(
      MonomialOrder::degrevlex_indices(ideal.table, drop), kept);
  GroebnerBasis gb = buchberger_reduced(ideal, block);
  std::vector<Polynomial> kept_elems;
  for (const auto& e : gb.elements()) {
    bool free_of_drop = true;
    for (size_t v : drop)
      if (e.degree_in(v) > 0) {
        free_of_drop = false;
        break;
      }
    if (free_of_drop) kept_elems.push_back(e);
  }
  return Ideal::make(ideal.table, std::move(kept_elems));
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop,
                const MonomialOrder* retained_hint) {
  std::vector<size_t> idx;
  for (const auto& n : drop) idx.push_back(ideal.table->index_of(n));
  return eliminate_indices(ideal, idx, retained_hint);
}

}  // namespace rinv
