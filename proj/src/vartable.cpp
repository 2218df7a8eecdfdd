#include "rinv/vartable.hpp"

#include <set>

#include "rinv/errors.hpp"

namespace rinv {

const char* var_role_name(VarRole r) {
  switch (r) {
    case VarRole::GroupParam: return "group-param";
    case VarRole::Auxiliary: return "auxiliary";
    case VarRole::Source: return "source";
    case VarRole::Target: return "target";
    case VarRole::Jet: return "jet";
    case VarRole::CurveParam: return "curve-param";
    case VarRole::SignatureCoord: return "signature-coord";
  }
  return "?";
}

std::shared_ptr<const VarTable> VarTable::make(
    std::vector<std::pair<std::string, VarRole>> vars) {
  auto t = std::shared_ptr<VarTable>(new VarTable());
  std::set<std::string> seen;
  for (auto& [name, role] : vars) {
    if (name.empty()) fail(Errc::DomainMismatch, "empty variable name");
    if (!seen.insert(name).second)
      fail(Errc::DomainMismatch, "duplicate variable '" + name + "'");
    t->names_.push_back(name);
    t->roles_.push_back(role);
  }
  return t;
}

std::optional<size_t> VarTable::find(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

size_t VarTable::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) fail(Errc::DomainMismatch, "unknown variable '" + std::string(name) + "'");
  return *i;
}

std::vector<size_t> VarTable::indices_with_role(VarRole r) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < roles_.size(); ++i)
    if (roles_[i] == r) out.push_back(i);
  return out;
}

bool VarTable::same_as(const VarTable& other) const {
  if (this == &other) return true;
  return names_ == other.names_ && roles_ == other.roles_;
}

}  // namespace rinv
