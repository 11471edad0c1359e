#include "dde/ideal.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "dde/division.hpp"

namespace dde {

IdealPresentation IdealPresentation::make(VarTablePtr table, MonomialOrder order, std::vector<MultiPoly> gens) {
  IdealPresentation p;
  p.table = std::move(table);
  p.order = std::move(order);
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    MultiPoly h = g.with_order(p.order).normalized();
    bool dup = false;
    for (const auto& e : p.gens)
      if (e == h) dup = true;
    if (!dup) p.gens.push_back(std::move(h));
  }
  return p;
}

IdealPresentation IdealPresentation::with_order(MonomialOrder new_order) const {
  return make(table, std::move(new_order), gens);
}

namespace {

using Clock = std::chrono::steady_clock;

struct BasisEntry {
  MultiPoly p;
  Exponent sugar = 0;
  bool redundant = false;  // lm divisible by a newer lm; skipped for new pairs
};

struct Pair {
  size_t i, j;
  Monomial lcm;
  Exponent sugar;
  Exponent lcm_deg;
};

bool pair_before(const Pair& a, const Pair& b) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

// Scale-free full reduction: the result is a Q*-multiple of the normal form,
// kept with integer coefficients throughout. `sugar` is tracked through the
// reduction steps.
MultiPoly reduce_modulo(MultiPoly h, const std::vector<BasisEntry>& basis, Exponent* sugar) {
  if (h.is_zero()) return h;
  h = h.normalized();  // keep the integer-coefficient invariant
  size_t frozen = 0;   // leading terms already known irreducible
  while (frozen < h.term_count()) {
    const Monomial& mono = h.terms()[frozen].mono;
    const BasisEntry* red = nullptr;
    for (const auto& e : basis) {
      if (monomial_divides(e.p.leading_monomial(), mono)) {
        red = &e;
        break;
      }
    }
    if (!red) {
      ++frozen;
      continue;
    }
    const Rational& alpha = h.terms()[frozen].coeff;
    const Rational& beta = red->p.leading_coeff();
    Integer d = Integer::gcd(alpha.numerator(), beta.numerator());
    Rational ha(Integer::divexact(beta.numerator(), d));
    Rational ga(Integer::divexact(alpha.numerator(), d));
    Monomial mu = monomial_div(mono, red->p.leading_monomial());
    if (sugar) *sugar = std::max(*sugar, red->sugar + total_degree(mu));
    h = MultiPoly::linear_combine(ha, h, -ga, mu, red->p);
  }
  return h;
}

struct Engine {
  const IdealPresentation& input;
  const GBOptions& opts;
  std::vector<BasisEntry> basis;
  std::vector<Pair> pairs;
  GBStats stats;
  Clock::time_point t0 = Clock::now();

  bool out_of_budget() const {
    if (stats.pairs_processed >= opts.budget.max_pairs) return true;
    if (basis.size() >= opts.budget.max_basis) return true;
    if (std::chrono::duration<double>(Clock::now() - t0).count() >= opts.budget.max_seconds) return true;
    return false;
  }

  MultiPoly strip_divide_out(MultiPoly p) const {
    if (opts.divide_out.empty() || p.is_zero()) return p;
    bool changed = true;
    while (changed && !p.is_constant()) {
      changed = false;
      for (const auto& d : opts.divide_out) {
        auto [q, mult] = divide_out_all(std::move(p), d);
        p = std::move(q);
        if (mult > 0) changed = true;
      }
    }
    return p.is_zero() ? p : p.normalized();
  }

  // Gebauer-Moeller update: prune old pairs via the chain criterion, build
  // the new pair set against h, drop coprime-lcm pairs.
  void update_pairs(size_t h_idx) {
    const Monomial& hlm = basis[h_idx].p.leading_monomial();
    std::vector<Pair> kept;
    kept.reserve(pairs.size());
    for (auto& pr : pairs) {
      const Monomial& l = pr.lcm;
      if (monomial_divides(hlm, l)) {
        Monomial li = monomial_lcm(basis[pr.i].p.leading_monomial(), hlm);
        Monomial lj = monomial_lcm(basis[pr.j].p.leading_monomial(), hlm);
        if (li != l && lj != l) continue;  // chain criterion: pair superseded
      }
      kept.push_back(std::move(pr));
    }
    pairs = std::move(kept);

    struct Cand {
      size_t g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (size_t g = 0; g < h_idx; ++g) {
      if (basis[g].redundant) continue;
      const Monomial& glm = basis[g].p.leading_monomial();
      cands.push_back({g, monomial_lcm(glm, hlm), monomials_coprime(glm, hlm)});
    }
    // M criterion: drop candidates whose lcm is a proper multiple of another
    // candidate's lcm; among equal lcms keep the first.
    for (size_t a = 0; a < cands.size(); ++a) {
      if (!cands[a].keep) continue;
      for (size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].keep) continue;
        if (monomial_divides(cands[b].lcm, cands[a].lcm)) {
          if (cands[b].lcm == cands[a].lcm && b > a) continue;
          cands[a].keep = false;
          break;
        }
      }
    }
    for (auto& c : cands) {
      if (!c.keep || c.coprime) continue;  // Buchberger's first criterion
      Pair pr;
      pr.i = c.g;
      pr.j = h_idx;
      pr.lcm = std::move(c.lcm);
      pr.lcm_deg = total_degree(pr.lcm);
      Exponent si = basis[pr.i].sugar + pr.lcm_deg - total_degree(basis[pr.i].p.leading_monomial());
      Exponent sj = basis[pr.j].sugar + pr.lcm_deg - total_degree(basis[pr.j].p.leading_monomial());
      pr.sugar = std::max(si, sj);
      pairs.push_back(std::move(pr));
    }

    for (size_t g = 0; g < h_idx; ++g)
      if (!basis[g].redundant && monomial_divides(hlm, basis[g].p.leading_monomial())) basis[g].redundant = true;
  }

  void add_basis_element(MultiPoly h, Exponent sugar) {
    h = h.normalized();
    stats.max_term_count = std::max(stats.max_term_count, h.term_count());
    basis.push_back({std::move(h), sugar, false});
    update_pairs(basis.size() - 1);
    if (opts.trace) {
      *opts.trace << "gb: basis=" << basis.size() << " pairs=" << pairs.size()
                  << " processed=" << stats.pairs_processed << "\n";
    }
  }

  MultiPoly spoly(const Pair& pr) const {
    const MultiPoly& f = basis[pr.i].p;
    const MultiPoly& g = basis[pr.j].p;
    Monomial mf = monomial_div(pr.lcm, f.leading_monomial());
    Monomial mg = monomial_div(pr.lcm, g.leading_monomial());
    Integer d = Integer::gcd(f.leading_coeff().numerator(), g.leading_coeff().numerator());
    Rational cf(Integer::divexact(g.leading_coeff().numerator(), d));
    Rational cg(Integer::divexact(f.leading_coeff().numerator(), d));
    return f.mul_monomial(mf, cf) - g.mul_monomial(mg, cg);
  }

  GBResult run() {
    for (const auto& g : input.gens) {
      Exponent sugar = g.total_deg();
      MultiPoly h = reduce_modulo(strip_divide_out(g), basis, &sugar);
      h = strip_divide_out(std::move(h));
      if (!h.is_zero()) add_basis_element(std::move(h), sugar);
    }
    GBStatus status = GBStatus::ok;
    while (!pairs.empty()) {
      if (out_of_budget()) {
        status = GBStatus::budget_exhausted;
        break;
      }
      size_t best = 0;
      for (size_t i = 1; i < pairs.size(); ++i)
        if (pair_before(pairs[i], pairs[best])) best = i;
      Pair pr = std::move(pairs[best]);
      pairs.erase(pairs.begin() + static_cast<long>(best));
      ++stats.pairs_processed;
      Exponent sugar = pr.sugar;
      MultiPoly h = reduce_modulo(spoly(pr), basis, &sugar);
      h = strip_divide_out(std::move(h));
      if (h.is_zero()) {
        ++stats.reductions_to_zero;
        continue;
      }
      add_basis_element(std::move(h), sugar);
    }
    stats.basis_size = basis.size();
    stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();

    GBResult res;
    res.status = status;
    res.stats = stats;
    res.basis.pres.table = input.table;
    res.basis.pres.order = input.order;
    if (status == GBStatus::ok) {
      res.basis.pres.gens = interreduce();
      res.basis.minimal_reduced = true;
    } else {
      for (const auto& e : basis)
        if (!e.redundant) res.basis.pres.gens.push_back(e.p);
    }
    return res;
  }

  // Minimalize + tail-reduce: the unique reduced basis.
  std::vector<MultiPoly> interreduce() {
    std::vector<MultiPoly> mins;
    for (size_t i = 0; i < basis.size(); ++i) {
      bool covered = false;
      for (size_t j = 0; j < basis.size() && !covered; ++j) {
        if (i == j) continue;
        const Monomial &mi = basis[i].p.leading_monomial(), &mj = basis[j].p.leading_monomial();
        if (monomial_divides(mj, mi) && (mi != mj || j < i)) covered = true;
      }
      if (!covered) mins.push_back(basis[i].p);
    }
    std::vector<MultiPoly> out;
    for (size_t i = 0; i < mins.size(); ++i) {
      std::vector<MultiPoly> others;
      for (size_t j = 0; j < mins.size(); ++j)
        if (j != i) others.push_back(mins[j]);
      MultiPoly r = normal_form(mins[i], others, input.order).normalized();
      if (!r.is_zero()) out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const MultiPoly& a, const MultiPoly& b) {
      return input.order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return out;
  }
};

}  // namespace

GBResult buchberger(const IdealPresentation& gens, const GBOptions& opts) {
  if (!gens.table) throw StructuralError("buchberger: empty presentation");
  Engine eng{gens, opts, {}, {}, {}};
  return eng.run();
}

GBResult saturate(const IdealPresentation& gens, const MultiPoly& g, const GBOptions& opts) {
  if (g.is_zero()) throw StructuralError("saturate: zero saturating polynomial");
  std::string mname = "m";
  while (gens.table->has(mname)) mname += "_";
  VarTablePtr ext = gens.table->extended_front({mname});
  std::vector<std::vector<size_t>> blocks{{0}, {}};
  for (size_t v = 1; v < ext->size(); ++v) blocks[1].push_back(v);
  MonomialOrder order = MonomialOrder::block(ext->size(), blocks);

  std::vector<MultiPoly> lifted;
  for (const auto& p : gens.gens) lifted.push_back(p.on_table(ext, order));
  MultiPoly mg = g.on_table(ext, order) * MultiPoly::variable(ext, 0, 1, order) -
                 MultiPoly::constant(ext, Rational(1), order);
  lifted.push_back(std::move(mg));

  GBResult r = buchberger(IdealPresentation::make(ext, order, std::move(lifted)), opts);
  GBResult out;
  out.status = r.status;
  out.stats = r.stats;
  std::vector<MultiPoly> kept;
  for (const auto& p : r.basis.pres.gens)
    if (!p.involves(0)) kept.push_back(p.on_table(gens.table, gens.order));
  out.basis.pres = IdealPresentation::make(gens.table, gens.order, std::move(kept));
  out.basis.minimal_reduced = r.basis.minimal_reduced;
  return out;
}

GBResult eliminate(const IdealPresentation& gens, const std::set<size_t>& keep, const GBOptions& opts) {
  std::vector<size_t> elim_block, keep_block;
  for (size_t v = 0; v < gens.table->size(); ++v) {
    if (keep.count(v))
      keep_block.push_back(v);
    else
      elim_block.push_back(v);
  }
  if (keep_block.empty()) throw StructuralError("eliminate: nothing kept");
  MonomialOrder order = elim_block.empty()
                            ? MonomialOrder::degrevlex(gens.table->size())
                            : MonomialOrder::block(gens.table->size(), {elim_block, keep_block});
  GBResult r = buchberger(gens.with_order(order), opts);
  GBResult out;
  out.status = r.status;
  out.stats = r.stats;
  std::vector<MultiPoly> kept = elimination_part(r.basis, keep);
  out.basis.pres = IdealPresentation::make(gens.table, order, std::move(kept));
  out.basis.minimal_reduced = r.basis.minimal_reduced;
  return out;
}

std::vector<MultiPoly> elimination_part(const GroebnerBasis& gb, const std::set<size_t>& keep) {
  std::vector<MultiPoly> out;
  for (const auto& p : gb.pres.gens) {
    bool pure = true;
    for (size_t v = 0; v < gb.pres.table->size() && pure; ++v)
      if (!keep.count(v) && p.involves(v)) pure = false;
    if (pure) out.push_back(p);
  }
  return out;
}

bool is_zero_dimensional(const GroebnerBasis& gb, const std::set<size_t>& params) {
  const auto& table = gb.pres.table;
  // Unit ideal (an element of K[params] alone) has an empty variety.
  for (const auto& p : gb.pres.gens) {
    bool param_only = true;
    for (size_t v = 0; v < table->size() && param_only; ++v)
      if (!params.count(v) && p.involves(v)) param_only = false;
    if (param_only) return true;
  }
  for (size_t v = 0; v < table->size(); ++v) {
    if (params.count(v)) continue;
    bool pinned = false;
    for (const auto& p : gb.pres.gens) {
      const Monomial& lm = p.leading_monomial();
      if (lm[v] == 0) continue;
      bool pure = true;
      for (size_t w = 0; w < table->size() && pure; ++w)
        if (w != v && !params.count(w) && lm[w] != 0) pure = false;
      if (pure) {
        pinned = true;
        break;
      }
    }
    if (!pinned) return false;
  }
  return true;
}

}  // namespace dde
