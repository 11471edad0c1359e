#include "dde/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace dde {

MultiPoly MultiPoly::zero(VarTablePtr table) {
  auto n = table->size();
  return zero(std::move(table), MonomialOrder::degrevlex(n));
}

MultiPoly MultiPoly::zero(VarTablePtr table, MonomialOrder order) {
  if (order.nvars() != table->size()) throw StructuralError("MultiPoly: order does not match table");
  return MultiPoly(std::move(table), std::move(order), {});
}

MultiPoly MultiPoly::constant(VarTablePtr table, Rational c) {
  auto n = table->size();
  return constant(std::move(table), std::move(c), MonomialOrder::degrevlex(n));
}

MultiPoly MultiPoly::constant(VarTablePtr table, Rational c, MonomialOrder order) {
  MultiPoly p = zero(std::move(table), std::move(order));
  if (!c.is_zero()) p.terms_.push_back({Monomial(p.table_->size(), 0), std::move(c)});
  return p;
}

MultiPoly MultiPoly::variable(VarTablePtr table, size_t var, Exponent e) {
  auto n = table->size();
  return variable(std::move(table), var, e, MonomialOrder::degrevlex(n));
}

MultiPoly MultiPoly::variable(VarTablePtr table, size_t var, Exponent e, MonomialOrder order) {
  if (var >= table->size()) throw StructuralError("MultiPoly::variable: index out of range");
  Monomial m(table->size(), 0);
  m[var] = e;
  return monomial(std::move(table), std::move(m), Rational(1), std::move(order));
}

MultiPoly MultiPoly::monomial(VarTablePtr table, Monomial m, Rational c) {
  auto n = table->size();
  return monomial(std::move(table), std::move(m), std::move(c), MonomialOrder::degrevlex(n));
}

MultiPoly MultiPoly::monomial(VarTablePtr table, Monomial m, Rational c, MonomialOrder order) {
  MultiPoly p = zero(std::move(table), std::move(order));
  if (m.size() != p.table_->size()) throw StructuralError("MultiPoly::monomial: bad exponent vector length");
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

MultiPoly MultiPoly::from_terms(VarTablePtr table, std::vector<Term> terms, MonomialOrder order) {
  MultiPoly p = zero(std::move(table), std::move(order));
  for (auto& t : terms)
    if (t.mono.size() != p.table_->size()) throw StructuralError("MultiPoly::from_terms: bad exponent vector length");
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return p.order_.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

void MultiPoly::check_compatible(const MultiPoly& o, const char* op) const {
  if (!table_ || !o.table_) throw StructuralError(std::string("MultiPoly: uninitialized operand in ") + op);
  if (!table_->same_as(*o.table_)) throw StructuralError(std::string("MultiPoly: mismatched VarTable in ") + op);
  if (!order_.same_as(o.order_)) throw StructuralError(std::string("MultiPoly: mismatched order in ") + op);
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw StructuralError("MultiPoly: leading term of zero");
  return terms_.front().mono;
}

const Rational& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw StructuralError("MultiPoly: leading coefficient of zero");
  return terms_.front().coeff;
}

Rational MultiPoly::constant_coeff() const {
  if (terms_.empty()) return Rational(0);
  const Term& last = terms_.back();
  return monomial_is_one(last.mono) ? last.coeff : Rational(0);
}

Rational MultiPoly::coeff_of(const Monomial& m) const {
  for (const auto& t : terms_) {
    int c = order_.compare(t.mono, m);
    if (c == 0) return t.coeff;
    if (c < 0) break;
  }
  return Rational(0);
}

Exponent MultiPoly::total_deg() const {
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
  return d;
}

Exponent MultiPoly::degree_in(size_t var) const {
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

bool MultiPoly::involves(size_t var) const {
  for (const auto& t : terms_)
    if (t.mono[var]) return true;
  return false;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

static std::vector<MultiPoly::Term> merge_terms(const MonomialOrder& order, const std::vector<MultiPoly::Term>& a,
                                                const std::vector<MultiPoly::Term>& b, bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = order.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (subtract) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Rational s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (subtract) out.back().coeff = -out.back().coeff;
  }
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b, "add");
  return MultiPoly(a.table_, a.order_, merge_terms(a.order_, a.terms_, b.terms_, false));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b, "sub");
  return MultiPoly(a.table_, a.order_, merge_terms(a.order_, a.terms_, b.terms_, true));
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b, "mul");
  if (a.is_zero() || b.is_zero()) return MultiPoly::zero(a.table_, a.order_);
  std::vector<MultiPoly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) prods.push_back({monomial_mul(ta.mono, tb.mono), ta.coeff * tb.coeff});
  return MultiPoly::from_terms(a.table_, std::move(prods), a.order_);
}

MultiPoly MultiPoly::pow(Exponent e) const {
  MultiPoly r = constant(table_, Rational(1), order_);
  if (e == 0) return r;
  MultiPoly base(*this);
  while (true) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (!e) break;
    base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return zero(table_, order_);
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return zero(table_, order_);
  MultiPoly r(*this);
  for (auto& t : r.terms_) {
    t.mono = monomial_mul(t.mono, m);
    t.coeff *= c;
  }
  return r;
}

MultiPoly MultiPoly::linear_combine(const Rational& a, const MultiPoly& p, const Rational& b, const Monomial& m,
                                    const MultiPoly& g) {
  p.check_compatible(g, "linear_combine");
  std::vector<Term> shifted;
  shifted.reserve(g.terms_.size());
  for (const auto& t : g.terms_) shifted.push_back({monomial_mul(t.mono, m), t.coeff * b});
  std::vector<Term> lhs = p.terms_;
  if (!a.is_one())
    for (auto& t : lhs) t.coeff *= a;
  return MultiPoly(p.table_, p.order_, merge_terms(p.order_, lhs, shifted, false));
}

MultiPoly MultiPoly::derivative(size_t var) const {
  if (var >= table_->size()) throw StructuralError("MultiPoly::derivative: unknown variable");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Term d{t.mono, t.coeff * Rational(static_cast<long>(t.mono[var]))};
    d.mono[var] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(table_, std::move(out), order_);
}

MultiPoly MultiPoly::substitute(const std::map<size_t, MultiPoly>& bindings, VarTablePtr target,
                                const MonomialOrder& target_order) const {
  for (const auto& [v, p] : bindings) {
    if (v >= table_->size()) throw StructuralError("MultiPoly::substitute: unknown variable");
    if (!p.table()->same_as(*target) || !p.order().same_as(target_order))
      throw StructuralError("MultiPoly::substitute: binding target mismatch");
  }
  // Unbound variables map to their namesakes in the target table; only
  // variables that actually occur need a namesake.
  std::vector<std::optional<size_t>> pass(table_->size());
  for (size_t v = 0; v < table_->size(); ++v) {
    if (bindings.count(v)) continue;
    if (involves(v)) pass[v] = target->index_of(table_->name(v));
  }
  MultiPoly acc = zero(target, target_order);
  std::map<std::pair<size_t, Exponent>, MultiPoly> powers;
  auto power_of = [&](size_t v, Exponent e) -> const MultiPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, bindings.at(v).pow(e)).first;
    return it->second;
  };
  for (const auto& t : terms_) {
    Monomial passthrough(target->size(), 0);
    MultiPoly factor = constant(target, t.coeff, target_order);
    for (size_t v = 0; v < table_->size(); ++v) {
      if (!t.mono[v]) continue;
      if (pass[v])
        passthrough[*pass[v]] += t.mono[v];
      else
        factor = factor * power_of(v, t.mono[v]);
    }
    acc = acc + factor.mul_monomial(passthrough, Rational(1));
  }
  return acc;
}

MultiPoly MultiPoly::substitute(const std::map<size_t, MultiPoly>& bindings) const {
  if (bindings.empty()) return *this;
  const MultiPoly& first = bindings.begin()->second;
  return substitute(bindings, first.table(), first.order());
}

MultiPoly MultiPoly::with_order(MonomialOrder order) const {
  if (order.same_as(order_)) return *this;
  std::vector<Term> ts = terms_;
  return from_terms(table_, std::move(ts), std::move(order));
}

MultiPoly MultiPoly::on_table(VarTablePtr target) const {
  auto n = target->size();
  return on_table(std::move(target), MonomialOrder::degrevlex(n));
}

MultiPoly MultiPoly::on_table(VarTablePtr target, MonomialOrder order) const {
  std::vector<std::optional<size_t>> remap(table_->size());
  for (size_t v = 0; v < table_->size(); ++v)
    if (target->has(table_->name(v))) remap[v] = target->index_of(table_->name(v));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->size(), 0);
    for (size_t v = 0; v < table_->size(); ++v) {
      if (!t.mono[v]) continue;
      if (!remap[v])
        throw StructuralError("MultiPoly::on_table: variable '" + table_->name(v) + "' missing from target table");
      m[*remap[v]] += t.mono[v];
    }
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(std::move(target), std::move(out), std::move(order));
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return Rational(1);
  Integer num_gcd(0);
  Integer den_lcm(1);
  for (const auto& t : terms_) {
    num_gcd = Integer::gcd(num_gcd, t.coeff.numerator());
    Integer d = t.coeff.denominator();
    den_lcm = Integer::divexact(den_lcm * d, Integer::gcd(den_lcm, d));
  }
  Rational c(num_gcd, den_lcm);
  if (terms_.front().coeff.sign() < 0) c = -c;
  return c;
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  return scaled(content().inverse());
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b, "eq");
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      if (c.sign() < 0) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    }
    bool has_vars = !monomial_is_one(t.mono);
    if (!has_vars || !c.is_one()) {
      os << c.str();
      if (has_vars) os << "*";
    }
    bool firstv = true;
    for (size_t v = 0; v < table_->size(); ++v) {
      if (!t.mono[v]) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << table_->name(v);
      if (t.mono[v] > 1) os << "^" << t.mono[v];
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

namespace {

struct PolyLexer {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char get() {
    skip_ws();
    return s[i++];
  }
  std::string number() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == '/') {
      size_t save = i;
      ++i;
      size_t dstart = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == dstart) i = save;
    }
    return s.substr(start, i - start);
  }
  std::string ident() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    return s.substr(start, i - start);
  }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, VarTablePtr table) {
  auto n = table->size();
  return parse_poly(text, std::move(table), MonomialOrder::degrevlex(n));
}

MultiPoly parse_poly(const std::string& text, VarTablePtr table, MonomialOrder order) {
  PolyLexer lex{text};
  std::vector<MultiPoly::Term> terms;
  bool first = true;
  while (!lex.done()) {
    int sign = 1;
    char c = lex.peek();
    if (c == '+' || c == '-') {
      lex.get();
      if (c == '-') sign = -1;
    } else if (!first) {
      throw StructuralError("parse_poly: expected '+' or '-' near position " + std::to_string(lex.i));
    }
    first = false;
    // one term: factors joined by '*'
    Rational coeff(sign);
    Monomial mono(table->size(), 0);
    bool any_factor = false;
    while (true) {
      char p = lex.peek();
      if (std::isdigit(static_cast<unsigned char>(p))) {
        coeff *= Rational(lex.number());
        any_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_') {
        std::string name = lex.ident();
        size_t v = table->index_of(name);
        Exponent e = 1;
        if (lex.peek() == '^') {
          lex.get();
          std::string es = lex.number();
          if (es.empty()) throw StructuralError("parse_poly: missing exponent");
          e = static_cast<Exponent>(std::stoul(es));
        }
        mono[v] += e;
        any_factor = true;
      } else {
        throw StructuralError("parse_poly: unexpected character near position " + std::to_string(lex.i));
      }
      if (lex.peek() == '*') {
        lex.get();
        continue;
      }
      break;
    }
    if (!any_factor) throw StructuralError("parse_poly: empty term");
    terms.push_back({std::move(mono), std::move(coeff)});
  }
  return MultiPoly::from_terms(std::move(table), std::move(terms), std::move(order));
}

}  // namespace dde
