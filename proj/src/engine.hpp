// Shared Buchberger engine. Works fraction-free over the coefficient ring
// supplied by Ops: integers (coefficient field Q) or polynomials in the
// base variables (coefficient field K(z)). Reductions multiply through by
// leading coefficients; content stripping keeps growth in check. The pair
// queue uses the normal strategy with Buchberger's product and chain
// criteria, with deterministic tie-breaking throughout.
#ifndef RINV_SRC_ENGINE_HPP
#define RINV_SRC_ENGINE_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "rinv/errors.hpp"
#include "rinv/order.hpp"

namespace rinv::engine {

template <class Ops>
class Engine {
 public:
  using C = typename Ops::C;
  struct Term {
    Monomial m;
    C c;
  };
  using TP = std::vector<Term>;  // strictly descending under ord_

  explicit Engine(const MonomialOrder& ord, Ops ops = Ops())
      : ord_(ord), ops_(std::move(ops)) {}

  const MonomialOrder& ord() const { return ord_; }

  TP sorted(std::vector<Term> terms) const {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord_.greater(a.m, b.m); });
    TP out;
    for (auto& t : terms) {
      if (!out.empty() && out.back().m == t.m) {
        out.back().c = ops_.add(out.back().c, t.c);
        if (ops_.is_zero(out.back().c)) out.pop_back();
      } else if (!ops_.is_zero(t.c)) {
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  // a_scale * p - b_scale * shift * g; both scales nonzero.
  TP combine(const TP& p, const C& a_scale, const TP& g, const C& b_scale,
             const Monomial& shift) const {
    TP out;
    out.reserve(p.size() + g.size());
    size_t i = 0, j = 0;
    while (i < p.size() && j < g.size()) {
      Monomial mg = g[j].m * shift;
      int cmp = ord_.compare(p[i].m, mg);
      if (cmp > 0) {
        out.push_back({p[i].m, ops_.mul(p[i].c, a_scale)});
        ++i;
      } else if (cmp < 0) {
        out.push_back({std::move(mg), ops_.neg(ops_.mul(g[j].c, b_scale))});
        ++j;
      } else {
        C v = ops_.sub(ops_.mul(p[i].c, a_scale), ops_.mul(g[j].c, b_scale));
        if (!ops_.is_zero(v)) out.push_back({std::move(mg), std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < p.size(); ++i) out.push_back({p[i].m, ops_.mul(p[i].c, a_scale)});
    for (; j < g.size(); ++j)
      out.push_back({g[j].m * shift, ops_.neg(ops_.mul(g[j].c, b_scale))});
    return out;
  }

  void scale_in_place(TP& p, const C& u) const {
    for (auto& t : p) t.c = ops_.mul(t.c, u);
  }

  // Removes the common content and normalizes the sign (basis elements are
  // only defined up to units of the coefficient field).
  void strip(TP& p) const { ops_.strip_content(p); }

  // Full normal form. In value mode the exact K-linear remainder is
  // returned via the accumulated multiplier:   multiplier * f = (ideal
  // member) + remainder. In completion mode the result is stripped.
  TP normal_form(TP p, const std::vector<TP>& basis, bool value_mode,
                 C* multiplier_out) const {
    C multiplier = ops_.one();
    TP work = std::move(p);
    size_t frozen = 0;  // prefix of `work` already irreducible
    while (frozen < work.size()) {
      bool reduced = false;
      for (const auto& b : basis) {
        if (b.empty()) continue;
        if (!b.front().m.divides(work[frozen].m)) continue;
        const C& cb = b.front().c;
        const C& cp = work[frozen].c;
        C d = ops_.gcd(cp, cb);
        C u = ops_.exact_div(cb, d);
        C v = ops_.exact_div(cp, d);
        Monomial shift = work[frozen].m / b.front().m;
        // scale the already-frozen prefix to stay consistent
        TP frozen_part(work.begin(), work.begin() + frozen);
        TP active_part(work.begin() + frozen, work.end());
        scale_in_place(frozen_part, u);
        TP next = combine(active_part, u, b, v, shift);
        work = std::move(frozen_part);
        work.insert(work.end(), next.begin(), next.end());
        if (value_mode) multiplier = ops_.mul(multiplier, u);
        if (!value_mode && frozen == 0) strip(work);
        reduced = true;
        break;
      }
      if (!reduced) ++frozen;
    }
    if (!value_mode && !work.empty()) strip(work);
    if (multiplier_out) *multiplier_out = multiplier;
    return work;
  }

  TP s_polynomial(const TP& f, const TP& g) const {
    const Monomial lcm = f.front().m.lcm(g.front().m);
    C d = ops_.gcd(f.front().c, g.front().c);
    C uf = ops_.exact_div(g.front().c, d);
    C ug = ops_.exact_div(f.front().c, d);
    return combine_shifted(f, uf, lcm / f.front().m, g, ug, lcm / g.front().m);
  }

  // uf * sf * f - ug * sg * g
  TP combine_shifted(const TP& f, const C& uf, const Monomial& sf, const TP& g,
                     const C& ug, const Monomial& sg) const {
    TP fs;
    fs.reserve(f.size());
    for (const auto& t : f) fs.push_back({t.m * sf, t.c});
    return combine(fs, uf, g, ug, sg);
  }

  std::vector<TP> reduced_basis(std::vector<TP> gens) const {
    std::vector<TP> basis;
    for (auto& g : gens) {
      if (g.empty()) continue;
      strip(g);
      basis.push_back(std::move(g));
    }

    struct Pair {
      uint64_t deg;
      size_t i, j;
      Monomial lcm;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
      if (a.deg != b.deg) return a.deg < b.deg;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    };
    std::vector<Pair> queue;
    std::set<std::pair<size_t, size_t>> done;
    auto push_pairs_for = [&](size_t n) {
      for (size_t i = 0; i < n; ++i) {
        Monomial l = basis[i].front().m.lcm(basis[n].front().m);
        queue.push_back({l.degree(), i, n, std::move(l)});
      }
    };
    for (size_t n = 1; n < basis.size(); ++n) push_pairs_for(n);

    while (!queue.empty()) {
      auto it = std::min_element(queue.begin(), queue.end(), pair_less);
      Pair pr = std::move(*it);
      queue.erase(it);
      done.insert({pr.i, pr.j});

      const Monomial& mi = basis[pr.i].front().m;
      const Monomial& mj = basis[pr.j].front().m;
      // product criterion
      if (mi.coprime_with(mj)) continue;
      // chain criterion
      bool skip = false;
      for (size_t k = 0; k < basis.size() && !skip; ++k) {
        if (k == pr.i || k == pr.j) continue;
        if (!basis[k].front().m.divides(pr.lcm)) continue;
        auto key = [](size_t a, size_t b) {
          return std::make_pair(std::min(a, b), std::max(a, b));
        };
        if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) skip = true;
      }
      if (skip) continue;

      TP s = s_polynomial(basis[pr.i], basis[pr.j]);
      TP r = normal_form(std::move(s), basis, /*value_mode=*/false, nullptr);
      if (!r.empty()) {
        basis.push_back(std::move(r));
        push_pairs_for(basis.size() - 1);
      }
    }

    // Minimalize: keep elements with minimal leading terms.
    std::vector<size_t> idx(basis.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      int c = ord_.compare(basis[a].front().m, basis[b].front().m);
      if (c != 0) return c < 0;
      return a < b;
    });
    std::vector<TP> minimal;
    for (size_t id : idx) {
      bool divisible = false;
      for (const auto& k : minimal)
        if (k.front().m.divides(basis[id].front().m)) {
          divisible = true;
          break;
        }
      if (!divisible) minimal.push_back(basis[id]);
    }

    // Tail-reduce each element against the others.
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<TP> others;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      minimal[i] = normal_form(std::move(minimal[i]), others, false, nullptr);
    }
    // Ascending by leading term.
    std::sort(minimal.begin(), minimal.end(), [&](const TP& a, const TP& b) {
      return ord_.less(a.front().m, b.front().m);
    });
    return minimal;
  }

 private:
  const MonomialOrder& ord_;
  Ops ops_;
};

}  // namespace rinv::engine

#endif
