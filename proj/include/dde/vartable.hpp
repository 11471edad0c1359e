#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace dde {

// Raised on misuse of the algebra API: mixed variable tables, unknown
// variables, non-square determinant inputs and the like.
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Immutable ordered list of variable names. The index order is the global
// tie-break order for monomial comparisons and never changes after creation.
class VarTable {
 public:
  static std::shared_ptr<const VarTable> make(std::vector<std::string> names);

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  bool has(const std::string& name) const { return index_.count(name) != 0; }
  size_t index_of(const std::string& name) const;

  // New table with `extra` prepended or appended; names must stay unique.
  std::shared_ptr<const VarTable> extended_front(const std::vector<std::string>& extra) const;
  std::shared_ptr<const VarTable> extended_back(const std::vector<std::string>& extra) const;

  bool same_as(const VarTable& o) const;

 private:
  explicit VarTable(std::vector<std::string> names);

  std::vector<std::string> names_;
  std::unordered_map<std::string, size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

}  // namespace dde
