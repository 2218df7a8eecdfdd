#ifndef RINV_IDEAL_HPP
#define RINV_IDEAL_HPP

#include <vector>

#include "rinv/polynomial.hpp"

namespace rinv {

// Generator list; zero generators are rejected, the empty list is the
// zero ideal.
struct Ideal {
  VarTablePtr table;
  std::vector<Polynomial> gens;

  static Ideal make(VarTablePtr table, std::vector<Polynomial> gens);
  bool is_zero() const { return gens.empty(); }
  std::string str() const;
};

}  // namespace rinv

#endif
