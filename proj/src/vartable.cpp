#include "dde/vartable.hpp"

namespace dde {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw StructuralError("VarTable: empty variable name");
    auto [it, fresh] = index_.emplace(names_[i], i);
    (void)it;
    if (!fresh) throw StructuralError("VarTable: duplicate variable '" + names_[i] + "'");
  }
}

std::shared_ptr<const VarTable> VarTable::make(std::vector<std::string> names) {
  return std::shared_ptr<const VarTable>(new VarTable(std::move(names)));
}

size_t VarTable::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw StructuralError("VarTable: unknown variable '" + name + "'");
  return it->second;
}

std::shared_ptr<const VarTable> VarTable::extended_front(const std::vector<std::string>& extra) const {
  std::vector<std::string> names = extra;
  names.insert(names.end(), names_.begin(), names_.end());
  return make(std::move(names));
}

std::shared_ptr<const VarTable> VarTable::extended_back(const std::vector<std::string>& extra) const {
  std::vector<std::string> names = names_;
  names.insert(names.end(), extra.begin(), extra.end());
  return make(std::move(names));
}

bool VarTable::same_as(const VarTable& o) const {
  return this == &o || names_ == o.names_;
}

}  // namespace dde
