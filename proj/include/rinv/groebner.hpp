#ifndef RINV_GROEBNER_HPP
#define RINV_GROEBNER_HPP

#include <string>
#include <vector>

#include "rinv/ideal.hpp"
#include "rinv/order.hpp"

namespace rinv {

// Reduced Groebner basis over Q: monic elements, no term divisible by
// another element's leading term, sorted ascending by leading term.
// Unique for (ideal, order).
class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<Polynomial> elements)
      : order_(std::move(order)), elements_(std::move(elements)) {}

  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  bool reduced() const { return true; }
  bool is_trivial() const;

  std::string str() const;

 private:
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
};

GroebnerBasis buchberger_reduced(const Ideal& ideal, const MonomialOrder& order);

// Deterministic remainder; divisors tried in listed basis order.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

// Generators of I ∩ K[vars \ drop], computed with a block order ranking
// `drop` above the rest. The result is the reduced Groebner basis of the
// intersection for `retained_hint` (default: degrevlex on the retained
// variables in declaration order).
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop,
                const MonomialOrder* retained_hint = nullptr);
Ideal eliminate_indices(const Ideal& ideal, const std::vector<size_t>& drop,
                        const MonomialOrder* retained_hint = nullptr);

}  // namespace rinv

#endif
