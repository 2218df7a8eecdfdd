#ifndef RINV_ORDER_HPP
#define RINV_ORDER_HPP

#include <string>
#include <vector>

#include "rinv/monomial.hpp"
#include "rinv/vartable.hpp"

namespace rinv {

// Term order over a subset of a VarTable. Exponents of unranked variables
// are invisible to the comparison (they belong to the coefficient field).
//
// Orders are built from segments compared left to right; each segment is
// lex or degrevlex over its own variable list (highest first). The public
// descriptor forms are lex(...), degrevlex(...), block([drop],[keep])
// (two degrevlex segments); products of arbitrary orders only arise
// internally for elimination.
class MonomialOrder {
 public:
  struct Segment {
    enum Kind { Lex, Degrevlex };
    Kind kind;
    std::vector<size_t> vars;  // highest-ranked first
  };

  static MonomialOrder lex(const VarTablePtr& table,
                           const std::vector<std::string>& names_high_first);
  static MonomialOrder degrevlex(const VarTablePtr& table,
                                 const std::vector<std::string>& names_high_first);
  static MonomialOrder block(const VarTablePtr& table,
                             const std::vector<std::string>& drop,
                             const std::vector<std::string>& keep);
  // Canonical printing order: degrevlex over the whole table,
  // declaration order (first declared = highest).
  static MonomialOrder internal(const VarTablePtr& table);
  // Degrevlex over the given indices (declaration order preserved).
  static MonomialOrder degrevlex_indices(const VarTablePtr& table,
                                         std::vector<size_t> vars);
  static MonomialOrder lex_indices(const VarTablePtr& table,
                                   std::vector<size_t> vars);
  // high >> low (all comparisons in `high` decided first).
  static MonomialOrder product(const MonomialOrder& high, const MonomialOrder& low);

  // Parses the descriptor syntax, e.g. "lex(b>a>y>x>Y>X)",
  // "degrevlex(x>y)", "block([a,b],[x,y,X,Y])".
  static MonomialOrder parse(const std::string& descriptor, const VarTablePtr& table);

  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  const VarTablePtr& table() const { return table_; }
  const std::vector<Segment>& segments() const { return segments_; }
  // All ranked variables, highest first.
  std::vector<size_t> ranked_vars() const;

  // Same order restricted to the given variable subset.
  MonomialOrder restricted_to(const std::vector<size_t>& vars) const;

  std::string descriptor() const;

  bool same_as(const MonomialOrder& other) const;

 private:
  MonomialOrder(VarTablePtr table, std::vector<Segment> segments);
  VarTablePtr table_;
  std::vector<Segment> segments_;
};

}  // namespace rinv

#endif
