#include "rinv/order.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rinv/errors.hpp"

namespace rinv {

namespace {

std::vector<size_t> resolve(const VarTablePtr& table,
                            const std::vector<std::string>& names) {
  std::vector<size_t> out;
  std::set<size_t> seen;
  for (const auto& n : names) {
    size_t i = table->index_of(n);
    if (!seen.insert(i).second)
      fail(Errc::DomainMismatch, "variable '" + n + "' ranked twice");
    out.push_back(i);
  }
  return out;
}

}  // namespace

MonomialOrder::MonomialOrder(VarTablePtr table, std::vector<Segment> segments)
    : table_(std::move(table)), segments_(std::move(segments)) {}

MonomialOrder MonomialOrder::lex(const VarTablePtr& table,
                                 const std::vector<std::string>& names) {
  return MonomialOrder(table, {Segment{Segment::Lex, resolve(table, names)}});
}

MonomialOrder MonomialOrder::degrevlex(const VarTablePtr& table,
                                       const std::vector<std::string>& names) {
  return MonomialOrder(table, {Segment{Segment::Degrevlex, resolve(table, names)}});
}

MonomialOrder MonomialOrder::block(const VarTablePtr& table,
                                   const std::vector<std::string>& drop,
                                   const std::vector<std::string>& keep) {
  return MonomialOrder(table, {Segment{Segment::Degrevlex, resolve(table, drop)},
                               Segment{Segment::Degrevlex, resolve(table, keep)}});
}

MonomialOrder MonomialOrder::internal(const VarTablePtr& table) {
  std::vector<size_t> all(table->size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  return MonomialOrder(table, {Segment{Segment::Degrevlex, std::move(all)}});
}

MonomialOrder MonomialOrder::degrevlex_indices(const VarTablePtr& table,
                                               std::vector<size_t> vars) {
  return MonomialOrder(table, {Segment{Segment::Degrevlex, std::move(vars)}});
}

MonomialOrder MonomialOrder::lex_indices(const VarTablePtr& table,
                                         std::vector<size_t> vars) {
  return MonomialOrder(table, {Segment{Segment::Lex, std::move(vars)}});
}

MonomialOrder MonomialOrder::product(const MonomialOrder& high,
                                     const MonomialOrder& low) {
  if (!high.table_->same_as(*low.table_))
    fail(Errc::DomainMismatch, "order product over different tables");
  std::vector<Segment> segs = high.segments_;
  segs.insert(segs.end(), low.segments_.begin(), low.segments_.end());
  return MonomialOrder(high.table_, std::move(segs));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& seg : segments_) {
    if (seg.kind == Segment::Lex) {
      for (size_t v : seg.vars) {
        if (a.exp(v) != b.exp(v)) return a.exp(v) > b.exp(v) ? 1 : -1;
      }
    } else {
      uint64_t da = 0, db = 0;
      for (size_t v : seg.vars) {
        da += a.exp(v);
        db += b.exp(v);
      }
      if (da != db) return da > db ? 1 : -1;
      for (auto it = seg.vars.rbegin(); it != seg.vars.rend(); ++it) {
        uint32_t ea = a.exp(*it), eb = b.exp(*it);
        if (ea != eb) return ea < eb ? 1 : -1;
      }
    }
  }
  return 0;
}

std::vector<size_t> MonomialOrder::ranked_vars() const {
  std::vector<size_t> out;
  for (const auto& seg : segments_)
    out.insert(out.end(), seg.vars.begin(), seg.vars.end());
  return out;
}

MonomialOrder MonomialOrder::restricted_to(const std::vector<size_t>& vars) const {
  std::set<size_t> keep(vars.begin(), vars.end());
  std::vector<Segment> segs;
  for (const auto& seg : segments_) {
    Segment s{seg.kind, {}};
    for (size_t v : seg.vars)
      if (keep.count(v)) s.vars.push_back(v);
    if (!s.vars.empty()) segs.push_back(std::move(s));
  }
  if (segs.empty()) fail(Errc::DomainMismatch, "order restriction is empty");
  return MonomialOrder(table_, std::move(segs));
}

std::string MonomialOrder::descriptor() const {
  auto names = [&](const std::vector<size_t>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) {
      if (i) s += ">";
      s += table_->name(vs[i]);
    }
    return s;
  };
  auto bracket = [&](const std::vector<size_t>& vs) {
    std::string s = "[";
    for (size_t i = 0; i < vs.size(); ++i) {
      if (i) s += ",";
      s += table_->name(vs[i]);
    }
    return s + "]";
  };
  if (segments_.size() == 1) {
    const auto& s = segments_[0];
    return std::string(s.kind == Segment::Lex ? "lex(" : "degrevlex(") +
           names(s.vars) + ")";
  }
  bool all_drl = true;
  for (const auto& s : segments_)
    if (s.kind != Segment::Degrevlex) all_drl = false;
  if (all_drl) {
    std::string out = "block(";
    for (size_t i = 0; i < segments_.size(); ++i) {
      if (i) out += ",";
      out += bracket(segments_[i].vars);
    }
    return out + ")";
  }
  std::string out;
  for (size_t i = 0; i < segments_.size(); ++i) {
    if (i) out += " >> ";
    out += std::string(segments_[i].kind == Segment::Lex ? "lex(" : "degrevlex(") +
           names(segments_[i].vars) + ")";
  }
  return out;
}

bool MonomialOrder::same_as(const MonomialOrder& other) const {
  if (!table_->same_as(*other.table_)) return false;
  if (segments_.size() != other.segments_.size()) return false;
  for (size_t i = 0; i < segments_.size(); ++i) {
    if (segments_[i].kind != other.segments_[i].kind) return false;
    if (segments_[i].vars != other.segments_[i].vars) return false;
  }
  return true;
}

namespace {

// Splits "a>b>c" or "a,b,c" into identifiers.
std::vector<std::string> split_names(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  for (const auto& n : out)
    if (n.empty()) fail(Errc::SyntaxError, "empty name in order descriptor");
  return out;
}

}  // namespace

MonomialOrder MonomialOrder::parse(const std::string& descriptor,
                                   const VarTablePtr& table) {
  std::string s;
  for (char c : descriptor)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  auto body = [&](const std::string& head) -> std::string {
    if (s.size() < head.size() + 2 || s.compare(0, head.size(), head) != 0 ||
        s[head.size()] != '(' || s.back() != ')')
      return "";
    return s.substr(head.size() + 1, s.size() - head.size() - 2);
  };
  if (auto b = body("lex"); !b.empty()) return lex(table, split_names(b, '>'));
  if (auto b = body("degrevlex"); !b.empty())
    return degrevlex(table, split_names(b, '>'));
  if (auto b = body("block"); !b.empty()) {
    // block([a,b],[x,y]) with any number of bracketed groups >= 2
    std::vector<Segment> segs;
    size_t i = 0;
    std::vector<std::vector<std::string>> groups;
    while (i < b.size()) {
      if (b[i] != '[') fail(Errc::SyntaxError, "expected '[' in block order");
      size_t j = b.find(']', i);
      if (j == std::string::npos) fail(Errc::SyntaxError, "unbalanced '[' in block order");
      groups.push_back(split_names(b.substr(i + 1, j - i - 1), ','));
      i = j + 1;
      if (i < b.size()) {
        if (b[i] != ',') fail(Errc::SyntaxError, "expected ',' between block groups");
        ++i;
      }
    }
    if (groups.size() < 2) fail(Errc::SyntaxError, "block order needs at least two groups");
    for (auto& g : groups)
      segs.push_back(Segment{Segment::Degrevlex, resolve(table, g)});
    return MonomialOrder(table, std::move(segs));
  }
  fail(Errc::SyntaxError, "unrecognized order descriptor '" + descriptor + "'");
}

}  // namespace rinv
