#ifndef RINV_VARTABLE_HPP
#define RINV_VARTABLE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rinv {

enum class VarRole {
  GroupParam,
  Auxiliary,      // the inverted-denominator variable mu
  Source,         // z coordinates
  Target,         // Z coordinates (including prolonged jet targets)
  Jet,            // source jet variables y^(k)
  CurveParam,     // t / p
  SignatureCoord, // T1, T2
};

const char* var_role_name(VarRole r);

// Immutable ordered list of distinct variable names with roles. The
// declaration order doubles as the ranking of the internal degrevlex
// order used for canonical printing (first declared = highest).
class VarTable {
 public:
  static std::shared_ptr<const VarTable> make(
      std::vector<std::pair<std::string, VarRole>> vars);

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_[i]; }
  VarRole role(size_t i) const { return roles_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<size_t> find(std::string_view name) const;
  // find() or DomainMismatch.
  size_t index_of(std::string_view name) const;

  std::vector<size_t> indices_with_role(VarRole r) const;

  bool same_as(const VarTable& other) const;

 private:
  VarTable() = default;
  std::vector<std::string> names_;
  std::vector<VarRole> roles_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

}  // namespace rinv

#endif
