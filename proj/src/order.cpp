#include "dde/order.hpp"

#include <algorithm>

namespace dde {

MonomialOrder::MonomialOrder(size_t nvars, std::vector<std::vector<size_t>> blocks)
    : nvars_(nvars), blocks_(std::move(blocks)) {
  std::vector<char> seen(nvars_, 0);
  size_t total = 0;
  for (auto& blk : blocks_) {
    if (blk.empty()) throw StructuralError("MonomialOrder: empty block");
    std::sort(blk.begin(), blk.end());
    for (size_t v : blk) {
      if (v >= nvars_ || seen[v]) throw StructuralError("MonomialOrder: blocks must partition the variables");
      seen[v] = 1;
      ++total;
    }
  }
  if (total != nvars_) throw StructuralError("MonomialOrder: blocks must cover all variables");
}

MonomialOrder MonomialOrder::degrevlex(size_t nvars) {
  std::vector<size_t> all(nvars);
  for (size_t i = 0; i < nvars; ++i) all[i] = i;
  return MonomialOrder(nvars, {std::move(all)});
}

MonomialOrder MonomialOrder::block(size_t nvars, std::vector<std::vector<size_t>> blocks) {
  return MonomialOrder(nvars, std::move(blocks));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& blk : blocks_) {
    long da = 0, db = 0;
    for (size_t v : blk) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da < db ? -1 : 1;
    // degrevlex tie-break inside the block: scan from the last variable;
    // the first differing exponent decides, smaller exponent ranks higher.
    for (size_t i = blk.size(); i-- > 0;) {
      size_t v = blk[i];
      if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    }
  }
  return 0;
}

}  // namespace dde
