#pragma once

#include <cstdint>
#include <vector>

#include "dde/vartable.hpp"

namespace dde {

using Exponent = uint32_t;

// Exponent vector indexed by a VarTable. Length always equals the table size.
using Monomial = std::vector<Exponent>;

inline Exponent total_degree(const Monomial& m) {
  Exponent d = 0;
  for (Exponent e : m) d += e;
  return d;
}

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

// Quotient a/b; requires b | a.
inline Monomial monomial_div(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (size_t i = 0; i < r.size(); ++i)
    if (b[i] > r[i]) r[i] = b[i];
  return r;
}

inline bool monomial_is_one(const Monomial& m) {
  for (Exponent e : m)
    if (e) return false;
  return true;
}

inline bool monomials_coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

// Total order on monomials: plain degrevlex over the whole table, or a block
// order (degrevlex inside each block, earlier blocks dominate). A monomial
// containing a variable of an earlier block ranks above any monomial using
// only later blocks.
class MonomialOrder {
 public:
  // Degrevlex over all n variables of the table.
  static MonomialOrder degrevlex(size_t nvars);
  // Block order; `blocks` is a partition of [0, nvars) into priority groups.
  static MonomialOrder block(size_t nvars, std::vector<std::vector<size_t>> blocks);

  // -1 if a < b, 0 if equal, +1 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  size_t nvars() const { return nvars_; }
  size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<size_t>>& blocks() const { return blocks_; }

  bool same_as(const MonomialOrder& o) const { return nvars_ == o.nvars_ && blocks_ == o.blocks_; }

 private:
  MonomialOrder(size_t nvars, std::vector<std::vector<size_t>> blocks);

  size_t nvars_ = 0;
  std::vector<std::vector<size_t>> blocks_;  // each sorted ascending by index
};

}  // namespace dde
