#include "ghostchar/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ghostchar {

namespace {

using Exps = std::vector<unsigned>;

struct Term {
  Exps e;
  Rational c;
};

// Terms kept in ascending order so the leading term sits at the back.
using DPoly = std::vector<Term>;

struct Ordering {
  MonomialOrder order;

  int compare(const Exps& a, const Exps& b) const {
    if (order == MonomialOrder::Lex) {
      for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return a[k] > b[k] ? 1 : -1;
      return 0;
    }
    unsigned da = 0, db = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      da += a[k];
      db += b[k];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t k = a.size(); k-- > 0;)
      if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
    return 0;
  }
  bool less(const Exps& a, const Exps& b) const { return compare(a, b) < 0; }
};

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Exps lcm(const Exps& a, const Exps& b) {
  Exps out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

Exps quotient(const Exps& a, const Exps& b) {
  Exps out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

bool coprime(const Exps& a, const Exps& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] && b[k]) return false;
  return true;
}

unsigned total(const Exps& a) {
  unsigned d = 0;
  for (unsigned x : a) d += x;
  return d;
}

// a - c * mono * b, both ascending.
DPoly sub_mul(const DPoly& a, const Rational& c, const Exps& mono, const DPoly& b,
              const Ordering& ord) {
  DPoly out;
  out.reserve(a.size() + b.size());
  std::size_t ia = 0, ib = 0;
  Exps shifted(mono.size());
  auto shifted_of = [&](std::size_t idx) {
    for (std::size_t k = 0; k < mono.size(); ++k) shifted[k] = b[idx].e[k] + mono[k];
    return shifted;
  };
  while (ia < a.size() || ib < b.size()) {
    if (ib == b.size()) {
      out.push_back(a[ia++]);
      continue;
    }
    const Exps& sb = shifted_of(ib);
    int cmp = ia == a.size() ? 1 : ord.compare(a[ia].e, sb);
    if (cmp < 0) {
      out.push_back(a[ia++]);
    } else if (cmp > 0) {
      out.push_back({sb, Rational(-c * b[ib].c)});
      ++ib;
    } else {
      Rational v = a[ia].c - c * b[ib].c;
      if (sgn(v) != 0) out.push_back({sb, std::move(v)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

void make_monic(DPoly& p) {
  if (p.empty()) return;
  Rational lc = p.back().c;
  for (auto& t : p) t.c /= lc;
}

struct Reducer {
  const Ordering& ord;
  const std::vector<DPoly>& basis;

  const DPoly* find_divisor(const Exps& e) const {
    for (const auto& g : basis)
      if (divides(g.back().e, e)) return &g;
    return nullptr;
  }

  DPoly full(DPoly h) const {
    DPoly rem;
    while (!h.empty()) {
      const Term& lt = h.back();
      if (const DPoly* g = find_divisor(lt.e)) {
        Rational c = lt.c / g->back().c;
        h = sub_mul(h, c, quotient(lt.e, g->back().e), *g, ord);
      } else {
        rem.push_back(std::move(h.back()));
        h.pop_back();
      }
    }
    std::reverse(rem.begin(), rem.end());
    return rem;
  }

  // Reduces only the leading term until no basis element divides it.
  DPoly top(DPoly h) const {
    while (!h.empty()) {
      const DPoly* g = find_divisor(h.back().e);
      if (!g) break;
      Rational c = h.back().c / g->back().c;
      h = sub_mul(h, c, quotient(h.back().e, g->back().e), *g, ord);
    }
    return h;
  }
};

}  // namespace

struct GroebnerBasis::Impl {
  std::vector<PairVar> vars;
  MonomialOrder order;
  std::vector<DPoly> basis;
  std::vector<MultiPoly> polys;

  DPoly to_dense(const MultiPoly& p) const {
    std::map<PairVar, std::size_t> index;
    for (std::size_t k = 0; k < vars.size(); ++k) index[vars[k]] = k;
    DPoly out;
    for (const auto& [mono, c] : p.terms()) {
      Exps e(vars.size(), 0);
      for (const auto& [v, x] : mono) {
        auto it = index.find(v);
        if (it == index.end())
          throw std::invalid_argument("variable " + v.to_string() + " not in the variable order");
        e[it->second] = x;
      }
      out.push_back({e, c});
    }
    Ordering ord{order};
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return ord.less(a.e, b.e); });
    return out;
  }

  MultiPoly to_multi(const DPoly& p) const {
    MultiPoly out;
    for (const auto& t : p) {
      MultiPoly term(t.c);
      for (std::size_t k = 0; k < vars.size(); ++k)
        if (t.e[k]) term = term * MultiPoly::variable(vars[k]).pow(t.e[k]);
      out += term;
    }
    return out;
  }
};

namespace {

struct Pair {
  std::size_t i, j;
  Exps lcm;
  unsigned degree;
};

}  // namespace

namespace {

// Minimal reduced basis from a Groebner basis, plus its primitive integer form.
void finish(GroebnerBasis::Impl& impl, const std::vector<DPoly>& g) {
  Ordering ord{impl.order};
  // Minimal basis, then interreduce.
  std::vector<DPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].empty()) continue;
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i || g[k].empty()) continue;
      if (divides(g[k].back().e, g[i].back().e) &&
          (g[k].back().e != g[i].back().e || k < i))
        redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<DPoly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    DPoly tail(minimal[i].begin(), minimal[i].end() - 1);
    DPoly reduced = Reducer{ord, others}.full(tail);
    reduced.push_back(minimal[i].back());
    std::sort(reduced.begin(), reduced.end(),
              [&](const Term& x, const Term& y) { return ord.less(x.e, y.e); });
    make_monic(reduced);
    minimal[i] = std::move(reduced);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const DPoly& x, const DPoly& y) {
    return ord.less(x.back().e, y.back().e);
  });
  impl.basis = std::move(minimal);
  for (const auto& p : impl.basis) {
    // Primitive integer multiple of the monic element, so the order's leading term stays positive.
    MultiPoly mp = impl.to_multi(p);
    MultiPoly c = mp.canonical();
    Rational ratio = c.terms().begin()->second / mp.terms().begin()->second;
    if (sgn(ratio) < 0) c = -c;
    impl.polys.push_back(c);
  }
}

}  // namespace

GroebnerBasis groebner_basis(const std::vector<MultiPoly>& system,
                             const std::vector<PairVar>& variables, MonomialOrder order) {
  auto impl = std::make_shared<GroebnerBasis::Impl>();
  impl->vars = variables;
  impl->order = order;
  Ordering ord{order};
  const DPoly unit{{Exps(variables.size(), 0), Rational(1)}};

  std::vector<DPoly> all;       // every polynomial ever added
  std::vector<std::size_t> g;   // indices of the current basis
  std::vector<Pair> pairs;
  std::vector<DPoly> current;   // reducer view of g

  auto lm = [&](std::size_t k) -> const Exps& { return all[k].back().e; };
  auto refresh = [&] {
    current.clear();
    for (std::size_t k : g) current.push_back(all[k]);
  };

  // Gebauer-Moeller update with the new element h.
  auto add = [&](DPoly p) {
    make_monic(p);
    const std::size_t h = all.size();
    all.push_back(std::move(p));
    const Exps& lh = lm(h);

    std::vector<Pair> fresh;
    for (std::size_t k : g) {
      Exps l = lcm(lh, lm(k));
      fresh.push_back({k, h, l, total(l)});
    }
    // A new pair survives if coprime or if no other remaining new pair has an lcm dividing its own.
    std::vector<Pair> kept;
    for (std::size_t u = 0; u < fresh.size(); ++u) {
      const Pair& c = fresh[u];
      bool keep = coprime(lh, lm(c.i));
      if (!keep) {
        keep = true;
        for (std::size_t v = u + 1; v < fresh.size() && keep; ++v)
          if (divides(fresh[v].lcm, c.lcm)) keep = false;
        for (const Pair& k : kept)
          if (keep && divides(k.lcm, c.lcm)) keep = false;
      }
      if (keep) kept.push_back(c);
    }
    std::vector<Pair> next;
    for (const Pair& pr : pairs) {
      bool drop = divides(lh, pr.lcm) && lcm(lm(pr.i), lh) != pr.lcm && lcm(lh, lm(pr.j)) != pr.lcm;
      if (!drop) next.push_back(pr);
    }
    for (const Pair& c : kept)
      if (!coprime(lh, lm(c.i))) next.push_back(c);
    pairs = std::move(next);

    std::vector<std::size_t> survivors;
    for (std::size_t k : g)
      if (!divides(lh, lm(k))) survivors.push_back(k);
    survivors.push_back(h);
    g = std::move(survivors);
    refresh();
  };

  bool is_unit = false;
  for (const auto& p : system) {
    DPoly d = Reducer{ord, current}.full(impl->to_dense(p));
    if (d.empty()) continue;
    if (total(d.back().e) == 0) {
      is_unit = true;
      break;
    }
    add(std::move(d));
  }

  while (!is_unit && !pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return ord.less(a.lcm, b.lcm);
    });
    Pair pr = *best;
    pairs.erase(best);
    const DPoly& a = all[pr.i];
    const DPoly& b = all[pr.j];
    DPoly s = sub_mul(DPoly{}, Rational(-1), quotient(pr.lcm, a.back().e), a, ord);
    s = sub_mul(s, Rational(1), quotient(pr.lcm, b.back().e), b, ord);
    s = Reducer{ord, current}.full(std::move(s));
    if (s.empty()) continue;
    if (total(s.back().e) == 0) {
      is_unit = true;
      break;
    }
    add(std::move(s));
  }

  if (is_unit) current.assign(1, unit);
  finish(*impl, current);
  return GroebnerBasis(impl);
}

namespace {

// Sparse vector in normal-form coordinates with a pivot and the target-order combination
// of monomials producing it.
struct EchelonRow {
  std::map<Exps, Rational> vec;
  Exps pivot;
  std::map<Exps, Rational> combo;
};

void axpy(std::map<Exps, Rational>& y, const Rational& c, const std::map<Exps, Rational>& x) {
  for (const auto& [e, v] : x) {
    Rational& slot = y[e];
    slot -= c * v;
    if (sgn(slot) == 0) y.erase(e);
  }
}

}  // namespace

GroebnerBasis convert_order(const GroebnerBasis& from, MonomialOrder target) {
  if (from.order() == target) return from;
  if (!from.is_zero_dimensional()) throw std::domain_error("order conversion requires a zero-dimensional ideal");
  auto impl = std::make_shared<GroebnerBasis::Impl>();
  impl->vars = from.variables();
  impl->order = target;
  const std::size_t n = impl->vars.size();
  if (from.is_unit_ideal()) {
    finish(*impl, {DPoly{{Exps(n, 0), Rational(1)}}});
    return GroebnerBasis(impl);
  }

  Ordering src{from.order()};
  Ordering dst{target};
  Reducer red{src, from.impl()->basis};
  auto dst_less = [&](const Exps& a, const Exps& b) { return dst.less(a, b); };
  std::set<Exps, decltype(dst_less)> candidates(dst_less);
  candidates.insert(Exps(n, 0));
  std::vector<Exps> leading;
  std::vector<DPoly> basis;
  std::vector<EchelonRow> rows;

  while (!candidates.empty()) {
    Exps m = *candidates.begin();
    candidates.erase(candidates.begin());
    if (std::any_of(leading.begin(), leading.end(), [&](const Exps& l) { return divides(l, m); })) continue;

    EchelonRow row;
    for (const auto& t : red.full(DPoly{{m, Rational(1)}})) row.vec[t.e] = t.c;
    row.combo[m] = 1;
    for (const auto& r : rows) {
      auto f = row.vec.find(r.pivot);
      if (f == row.vec.end()) continue;
      Rational c = f->second / r.vec.at(r.pivot);
      axpy(row.vec, c, r.vec);
      axpy(row.combo, c, r.combo);
    }
    if (row.vec.empty()) {
      DPoly p;
      for (const auto& [e, c] : row.combo) p.push_back({e, c});
      std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return dst.less(a.e, b.e); });
      basis.push_back(std::move(p));
      leading.push_back(m);
      continue;
    }
    row.pivot = row.vec.rbegin()->first;
    for (auto& r : rows) {
      auto f = r.vec.find(row.pivot);
      if (f == r.vec.end()) continue;
      Rational c = f->second / row.vec.at(row.pivot);
      axpy(r.vec, c, row.vec);
      axpy(r.combo, c, row.combo);
    }
    rows.push_back(std::move(row));
    for (std::size_t k = 0; k < n; ++k) {
      Exps next = m;
      ++next[k];
      candidates.insert(next);
    }
  }
  finish(*impl, basis);
  return GroebnerBasis(impl);
}

GroebnerBasis groebner_lex(const std::vector<MultiPoly>& system,
                           const std::vector<PairVar>& variables) {
  GroebnerBasis graded = groebner_basis(system, variables, MonomialOrder::GradedReverseLex);
  if (graded.is_zero_dimensional()) return convert_order(graded, MonomialOrder::Lex);
  return groebner_basis(system, variables, MonomialOrder::Lex);
}

std::vector<PairVar> variables_of(const std::vector<MultiPoly>& system) {
  std::set<PairVar> vars;
  for (const auto& p : system) {
    auto v = p.variables();
    vars.insert(v.begin(), v.end());
  }
  return {vars.begin(), vars.end()};
}

const std::vector<PairVar>& GroebnerBasis::variables() const { return impl_->vars; }
MonomialOrder GroebnerBasis::order() const { return impl_->order; }
const std::vector<MultiPoly>& GroebnerBasis::polynomials() const { return impl_->polys; }

bool GroebnerBasis::is_unit_ideal() const {
  return impl_->basis.size() == 1 && total(impl_->basis[0].back().e) == 0;
}

bool GroebnerBasis::is_zero_dimensional() const {
  if (is_unit_ideal()) return true;
  for (std::size_t v = 0; v < impl_->vars.size(); ++v) {
    bool found = false;
    for (const auto& g : impl_->basis) {
      const Exps& e = g.back().e;
      bool pure = e[v] > 0;
      for (std::size_t k = 0; k < e.size() && pure; ++k)
        if (k != v && e[k]) pure = false;
      if (pure) found = true;
    }
    if (!found) return false;
  }
  return true;
}

MultiPoly GroebnerBasis::normal_form(const MultiPoly& p) const {
  Ordering ord{impl_->order};
  return impl_->to_multi(Reducer{ord, impl_->basis}.full(impl_->to_dense(p)));
}

std::vector<Rational> GroebnerBasis::eliminant(const PairVar& v) const {
  if (!is_zero_dimensional()) throw std::domain_error("eliminant requires a zero-dimensional ideal");
  if (is_unit_ideal()) return {Rational(1)};
  auto it = std::find(impl_->vars.begin(), impl_->vars.end(), v);
  if (it == impl_->vars.end()) throw std::invalid_argument("unknown variable " + v.to_string());
  const std::size_t idx = static_cast<std::size_t>(it - impl_->vars.begin());
  Ordering ord{impl_->order};
  Reducer red{ord, impl_->basis};

  // Echelon rows: normal-form vector plus the combination of powers producing it.
  struct Row {
    std::map<Exps, Rational> vec;
    Exps pivot;
    std::vector<Rational> combo;
  };
  std::vector<Row> rows;
  DPoly power{{Exps(impl_->vars.size(), 0), Rational(1)}};
  power = red.full(power);
  for (std::size_t k = 0;; ++k) {
    std::map<Exps, Rational> vec;
    for (const auto& t : power) vec[t.e] = t.c;
    std::vector<Rational> combo(k + 1, Rational(0));
    combo[k] = 1;
    for (const auto& row : rows) {
      auto f = vec.find(row.pivot);
      if (f == vec.end()) continue;
      Rational c = f->second / row.vec.at(row.pivot);
      for (const auto& [e, x] : row.vec) {
        Rational& slot = vec[e];
        slot -= c * x;
        if (sgn(slot) == 0) vec.erase(e);
      }
      for (std::size_t m = 0; m < row.combo.size(); ++m) combo[m] -= c * row.combo[m];
    }
    if (vec.empty()) {
      Rational lc = combo.back();
      for (auto& c : combo) c /= lc;
      return combo;
    }
    Row row{vec, vec.rbegin()->first, combo};
    for (auto& r : rows) {
      r.combo.resize(k + 1, Rational(0));
      auto f = r.vec.find(row.pivot);
      if (f == r.vec.end()) continue;
      Rational c = f->second / row.vec.at(row.pivot);
      for (const auto& [e, x] : row.vec) {
        Rational& slot = r.vec[e];
        slot -= c * x;
        if (sgn(slot) == 0) r.vec.erase(e);
      }
      for (std::size_t m = 0; m <= k; ++m) r.combo[m] -= c * row.combo[m];
    }
    rows.push_back(std::move(row));
    Exps shift(impl_->vars.size(), 0);
    shift[idx] = 1;
    power = red.full(sub_mul(DPoly{}, Rational(-1), shift, power, ord));
  }
}

}  // namespace ghostchar
