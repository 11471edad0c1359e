#include "dde/resultant_elim.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>

#include "dde/division.hpp"
#include "dde/resultant.hpp"

namespace dde {

namespace {

bool contains(const std::vector<size_t>& v, size_t x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Strip the factors excluded by the saturation polynomial: integer content,
// powers of t, powers of duplicated u's, (u_i - a) and (u_i - u_j).
MultiPoly strip_sat_factors(MultiPoly p, const ResultantElimOptions& opts) {
  if (p.is_zero()) return p;
  const auto table = p.table();
  const auto& order = p.order();
  auto strip_var_power = [&](MultiPoly q, size_t v) {
    Exponent e = std::numeric_limits<Exponent>::max();
    for (const auto& t : q.terms()) e = std::min(e, t.mono[v]);
    if (e == 0 || q.is_zero()) return q;
    std::vector<MultiPoly::Term> ts = q.terms();
    for (auto& t : ts) t.mono[v] -= e;
    return MultiPoly::from_terms(table, std::move(ts), order);
  };
  if (opts.t_var) p = strip_var_power(std::move(p), *opts.t_var);
  for (size_t u : opts.u_family) p = strip_var_power(std::move(p), u);
  for (size_t u : opts.u_family) {
    MultiPoly lin = MultiPoly::variable(table, u, 1, order) - MultiPoly::constant(table, opts.catalytic_a, order);
    p = divide_out_all(std::move(p), lin).first;
  }
  for (size_t i = 0; i < opts.u_family.size(); ++i)
    for (size_t j = i + 1; j < opts.u_family.size(); ++j) {
      MultiPoly diff =
          MultiPoly::variable(table, opts.u_family[i], 1, order) - MultiPoly::variable(table, opts.u_family[j], 1, order);
      p = divide_out_all(std::move(p), diff).first;
    }
  return p.is_zero() ? p : p.normalized();
}

struct PolyLess {
  bool operator()(const MultiPoly& a, const MultiPoly& b) const {
    if (a.total_deg() != b.total_deg()) return a.total_deg() < b.total_deg();
    if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
    return a.order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
  }
};

void add_unique(std::vector<MultiPoly>& set, MultiPoly p) {
  if (p.is_zero() || p.is_constant()) return;
  for (const auto& q : set)
    if (q == p) return;
  set.push_back(std::move(p));
}

}  // namespace

std::vector<MultiPoly> iterated_resultant_eliminate_all(std::vector<MultiPoly> gens,
                                                        const std::vector<size_t>& eliminate_order,
                                                        const std::set<size_t>& keep,
                                                        const ResultantElimOptions& opts) {
  if (gens.empty()) throw StructuralError("iterated_resultant_eliminate: no generators");
  const auto table = gens[0].table();
  const auto order = gens[0].order();

  std::vector<MultiPoly> work;
  for (auto& g : gens) add_unique(work, strip_sat_factors(g.normalized(), opts));

  auto log = [&](const std::string& msg) {
    if (opts.trace) *opts.trace << "reselim: " << msg << "\n";
  };

  for (size_t stage = 0; stage < eliminate_order.size(); ++stage) {
    size_t v = eliminate_order[stage];

    // Divided-difference augmentation: a copy-local polynomial in u_i alone
    // also vanishes at every other kernel root, so its (u_i - u_j) divided
    // differences vanish on the saturated solution set.
    if (contains(opts.u_family, v)) {
      std::vector<MultiPoly> extra;
      for (const auto& p : work) {
        if (!p.involves(v)) continue;
        bool copy_local = true;
        for (size_t w : eliminate_order) {
          if (w == v || opts.shared_vars.count(w)) continue;
          if (p.involves(w)) copy_local = false;
        }
        if (!copy_local) continue;
        for (size_t uj : opts.u_family) {
          if (uj == v) continue;
          std::map<size_t, MultiPoly> ren{{v, MultiPoly::variable(table, uj, 1, order)}};
          MultiPoly q = p.substitute(ren, table, order);
          if (q == p) continue;
          MultiPoly diff = MultiPoly::variable(table, v, 1, order) - MultiPoly::variable(table, uj, 1, order);
          auto dd = exact_divide(p - q, diff);
          if (!dd) throw StructuralError("iterated_resultant_eliminate: divided difference not exact");
          add_unique(extra, strip_sat_factors(std::move(*dd), opts));
        }
      }
      for (auto& e : extra) add_unique(work, std::move(e));
      if (!extra.empty()) log("augmented " + std::to_string(extra.size()) + " divided differences for " + table->name(v));
    }

    std::vector<MultiPoly> involved, rest;
    for (auto& p : work) (p.involves(v) ? involved : rest).push_back(std::move(p));
    work = std::move(rest);
    if (involved.empty()) continue;
    if (involved.size() == 1) {
      log("dropping lone polynomial in " + table->name(v));
      continue;
    }
    std::sort(involved.begin(), involved.end(), PolyLess{});

    std::vector<MultiPoly> produced;
    for (size_t pi = 0; pi < involved.size() && produced.empty(); ++pi) {
      const MultiPoly& pivot = involved[pi];
      size_t partners = 0;
      for (size_t qi = 0; qi < involved.size() && partners < opts.max_partners; ++qi) {
        if (qi == pi) continue;
        MultiPoly r = resultant(pivot, involved[qi], v);
        ++partners;
        if (r.is_zero()) continue;
        r = strip_sat_factors(std::move(r), opts);
        if (r.is_zero() || r.is_constant()) continue;
        if (r.term_count() > opts.max_terms) {
          log("dropping oversized resultant (" + std::to_string(r.term_count()) + " terms)");
          continue;
        }
        add_unique(produced, std::move(r));
      }
    }
    if (produced.empty())
      throw DegeneracyError("iterated_resultant_eliminate: all resultants vanished eliminating '" + table->name(v) +
                            "' (common component)");
    log("eliminated " + table->name(v) + ": " + std::to_string(produced.size()) + " polynomial(s)");
    for (auto& p : produced) add_unique(work, std::move(p));
  }

  std::vector<MultiPoly> candidates;
  for (const auto& p : work) {
    bool pure = true;
    for (size_t w = 0; w < table->size() && pure; ++w)
      if (!keep.count(w) && p.involves(w)) pure = false;
    if (pure) add_unique(candidates, p);
  }
  std::sort(candidates.begin(), candidates.end(), PolyLess{});
  return candidates;
}

MultiPoly iterated_resultant_eliminate(std::vector<MultiPoly> gens, const std::vector<size_t>& eliminate_order,
                                       const std::set<size_t>& keep, const ResultantElimOptions& opts) {
  auto cands = iterated_resultant_eliminate_all(std::move(gens), eliminate_order, keep, opts);
  if (cands.empty())
    throw DegeneracyError("iterated_resultant_eliminate: nothing survived in the kept variables");
  return cands.front();
}

}  // namespace dde
