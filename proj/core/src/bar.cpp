#include "cybar/bar.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cybar/error.hpp"

namespace cybar {

namespace {

/// All tuples of the given length over {0..radix-1}, lexicographic.
std::vector<Tuple> all_tuples(int length, int radix) {
  std::size_t total = 1;
  for (int k = 0; k < length; ++k) {
    total *= static_cast<std::size_t>(radix);
    if (total > simplex_cap()) throw CapExceeded(length, total, simplex_cap());
  }
  std::vector<Tuple> out;
  out.reserve(total);
  Tuple t(static_cast<std::size_t>(length), 0);
  if (radix == 0 && length > 0) return out;
  for (;;) {
    out.push_back(t);
    int k = length - 1;
    while (k >= 0 && ++t[static_cast<std::size_t>(k)] == radix) t[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
  }
  return out;
}

Tuple erase_at(Tuple t, int k) {
  t.erase(t.begin() + k);
  return t;
}

Tuple insert_at(Tuple t, int k, int value) {
  t.insert(t.begin() + k, value);
  return t;
}

Tuple concat(const Tuple& a, const Tuple& b) {
  Tuple out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// Bar-style faces shared by nerves: ends forgotten, middle multiplied.
template <class Mul>
Tuple bar_face(int n, int i, const Tuple& t, Mul&& mul) {
  if (i == 0) return erase_at(t, 0);
  if (i == n) return erase_at(t, n - 1);
  Tuple out = erase_at(t, i);
  out[static_cast<std::size_t>(i - 1)] = mul(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(i)]);
  return out;
}

std::string names_label(const Tuple& t, const std::vector<std::string>& names) { return tuple_label(t, names); }

}  // namespace

TupleModel nerve_model(MonoidPtr m, int truncation) {
  TupleModel model;
  model.truncation = truncation;
  model.elements = [m](int n) { return all_tuples(n, static_cast<int>(m->size())); };
  model.face = [m](int n, int i, const Tuple& t) {
    return bar_face(n, i, t, [&](int a, int b) { return m->mul(a, b); });
  };
  model.degeneracy = [m](int, int j, const Tuple& t) { return insert_at(t, j, m->unit()); };
  model.label = [m](int, const Tuple& t) { return names_label(t, m->names()); };
  model.basepoint = Tuple{};
  return model;
}

SetPtr nerve(MonoidPtr m, int truncation) { return Materialized(nerve_model(std::move(m), truncation)).set(); }

std::vector<Tuple> wedge_tuples(const OperationSituation& s, int p) {
  std::vector<int> inside, outside;
  for (int m = 0; m < static_cast<int>(s.carrier_size()); ++m) (s.in_image(m) ? inside : outside).push_back(m);
  const int ni = static_cast<int>(inside.size());
  std::vector<Tuple> out;
  for (const auto& code : all_tuples(p, ni)) {
    Tuple t;
    for (int c : code) t.push_back(inside[static_cast<std::size_t>(c)]);
    out.push_back(t);
  }
  if (p >= 1)
    for (const auto& code : all_tuples(p - 1, ni))
      for (int pos = 0; pos < p; ++pos)
        for (int o : outside) {
          Tuple t;
          for (int c : code) t.push_back(inside[static_cast<std::size_t>(c)]);
          out.push_back(insert_at(std::move(t), pos, o));
        }
  if (out.size() > simplex_cap()) throw CapExceeded(p, out.size(), simplex_cap());
  std::sort(out.begin(), out.end());
  return out;
}

bool is_wedge_tuple(const OperationSituation& s, const Tuple& t) {
  return std::count_if(t.begin(), t.end(), [&](int m) { return !s.in_image(m); }) <= 1;
}

Tuple wedge_face(const OperationSituation& s, int p, int i, const Tuple& t) {
  return bar_face(p, i, t, [&](int a, int b) { return s.star(a, b); });
}

Tuple wedge_degeneracy(const OperationSituation& s, int, int j, const Tuple& t) { return insert_at(t, j, s.basepoint()); }

TupleModel wedge_model(SituationPtr s, int truncation) {
  TupleModel model;
  model.truncation = truncation;
  model.elements = [s](int n) { return wedge_tuples(*s, n); };
  model.face = [s](int n, int i, const Tuple& t) { return wedge_face(*s, n, i, t); };
  model.degeneracy = [s](int n, int j, const Tuple& t) { return wedge_degeneracy(*s, n, j, t); };
  model.label = [s](int, const Tuple& t) { return names_label(t, s->action()->carrier); };
  model.basepoint = Tuple{};
  return model;
}

BisimplicialSet generalized_wedge(SituationPtr s, int horizontal, int vertical) {
  BiTupleModel model;
  model.horizontal = horizontal;
  model.vertical = vertical;
  model.elements = [s](int p, int) { return wedge_tuples(*s, p); };
  model.hface = [s](int p, int, int i, const Tuple& t) { return wedge_face(*s, p, i, t); };
  model.hdegeneracy = [s](int p, int, int j, const Tuple& t) { return wedge_degeneracy(*s, p, j, t); };
  model.vface = [](int, int, int, const Tuple& t) { return t; };
  model.vdegeneracy = [](int, int, int, const Tuple& t) { return t; };
  model.label = [s](int, int, const Tuple& t) { return names_label(t, s->action()->carrier); };
  model.basepoint = Tuple{};
  return tabulate(model);
}

BisimplicialSet pointed_wedge(SetPtr m, int horizontal) {
  if (!m->basepoint()) throw Error("the wedge of a simplicial set needs a basepoint");
  auto index = std::make_shared<SimplexIndex>(*m);
  std::vector<int> base;
  for (int q = 0; q <= m->truncation(); ++q) base.push_back((*index)(m->base_simplex(q)));
  auto simplex = [index](int q, int x) -> const Simplex& {
    return index->simplices[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)];
  };
  BiTupleModel model;
  model.horizontal = horizontal;
  model.vertical = m->truncation();
  model.elements = [index, base](int p, int q) {
    const int n = static_cast<int>(index->simplices[static_cast<std::size_t>(q)].size());
    const int b = base[static_cast<std::size_t>(q)];
    std::vector<Tuple> out;
    out.emplace_back(static_cast<std::size_t>(p), b);
    for (int pos = 0; pos < p; ++pos)
      for (int x = 0; x < n; ++x)
        if (x != b) {
          Tuple t(static_cast<std::size_t>(p), b);
          t[static_cast<std::size_t>(pos)] = x;
          out.push_back(std::move(t));
        }
    return out;
  };
  model.hface = [base](int p, int q, int i, const Tuple& t) {
    const int b = base[static_cast<std::size_t>(q)];
    return bar_face(p, i, t, [b](int x, int y) { return x == b ? y : x; });
  };
  model.hdegeneracy = [base](int, int q, int j, const Tuple& t) { return insert_at(t, j, base[static_cast<std::size_t>(q)]); };
  model.vface = [m, index, simplex](int, int q, int i, const Tuple& t) {
    Tuple out;
    for (int x : t) out.push_back((*index)(m->face(simplex(q, x), i)));
    return out;
  };
  model.vdegeneracy = [index, simplex](int, int q, int j, const Tuple& t) {
    Tuple out;
    for (int x : t) out.push_back((*index)(degenerate(simplex(q, x), j)));
    return out;
  };
  model.label = [m, simplex](int, int q, const Tuple& t) {
    if (t.empty()) return std::string("<>");
    std::string out;
    for (std::size_t k = 0; k < t.size(); ++k) out += (k ? "/" : "") + m->label(simplex(q, t[k]));
    return out;
  };
  model.basepoint = Tuple{};
  return tabulate(model);
}

std::vector<Tuple> composable_tuples(const DiscreteMonoid& m, const std::vector<int>& submonoid, int p) {
  const std::unordered_set<int> sub(submonoid.begin(), submonoid.end());
  std::vector<Tuple> out;
  for (const auto& t : all_tuples(p, static_cast<int>(m.size()))) {
    bool defined = true;
    int running = p > 0 ? t[0] : m.unit();
    for (int k = 1; k < p && defined; ++k) {
      const int next = t[static_cast<std::size_t>(k)];
      if (sub.count(running) || sub.count(next))
        running = m.mul(running, next);
      else
        defined = false;
    }
    if (defined) out.push_back(t);
  }
  return out;
}

PartialMonoidReport partial_monoid_discrepancy(const MonoidPtr& m, const MonoidPtr& submonoid, int p) {
  const auto s = builtin::submonoid_situation(submonoid, m);
  std::vector<int> sub;
  for (const auto& name : submonoid->names()) sub.push_back(*m->find(name));
  const auto composable = composable_tuples(*m, sub, p);
  const auto wedge = wedge_tuples(s, p);
  PartialMonoidReport r;
  r.degree = p;
  r.composable = composable.size();
  r.wedge = wedge.size();
  const std::set<Tuple> w(wedge.begin(), wedge.end());
  const std::set<Tuple> c(composable.begin(), composable.end());
  for (const auto& t : composable)
    if (!w.count(t)) r.only_composable.push_back(t);
  for (const auto& t : wedge)
    if (!c.count(t)) r.only_wedge.push_back(t);
  return r;
}

TupleModel cyclic_bar_model(ActionPtr action, int truncation) {
  TupleModel model;
  model.truncation = truncation;
  model.elements = [action](int n) {
    std::vector<Tuple> out;
    const int nx = static_cast<int>(action->size());
    for (const auto& g : all_tuples(n, static_cast<int>(action->monoid->size())))
      for (int x = 0; x < nx; ++x) out.push_back(insert_at(g, n, x));
    if (out.size() > simplex_cap()) throw CapExceeded(n, out.size(), simplex_cap());
    return out;
  };
  model.face = [action](int n, int i, const Tuple& t) {
    const auto& G = *action->monoid;
    const int x = t[static_cast<std::size_t>(n)];
    if (i == 0) {
      Tuple out(t.begin() + 1, t.end());
      out.back() = action->act_right(x, t[0]);
      return out;
    }
    if (i == n) {
      Tuple out(t.begin(), t.end() - 1);
      out.back() = action->act_left(t[static_cast<std::size_t>(n - 1)], x);
      return out;
    }
    Tuple out = erase_at(t, i);
    out[static_cast<std::size_t>(i - 1)] = G.mul(t[static_cast<std::size_t>(i - 1)], t[static_cast<std::size_t>(i)]);
    return out;
  };
  model.degeneracy = [action](int, int j, const Tuple& t) { return insert_at(t, j, action->monoid->unit()); };
  model.label = [action](int n, const Tuple& t) {
    const Tuple g(t.begin(), t.begin() + n);
    return names_label(g, action->monoid->names()) + ";" + action->carrier[static_cast<std::size_t>(t.back())];
  };
  return model;
}

SetPtr cyclic_bar(ActionPtr action, int truncation) {
  return Materialized(cyclic_bar_model(std::move(action), truncation)).set();
}

TwoSidedAction wedge_action(const GAugmentedSituation& a, int p) {
  const auto& s = *a.situation;
  const auto& B = *a.on_carrier;
  const auto tuples = wedge_tuples(s, p);
  std::unordered_map<Tuple, int, TupleHash> index;
  std::vector<std::string> carrier;
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    index.emplace(tuples[k], static_cast<int>(k));
    carrier.push_back(names_label(tuples[k], s.action()->carrier));
  }
  const auto ng = a.group->size();
  Table left(ng, std::vector<int>(tuples.size())), right(tuples.size(), std::vector<int>(ng));
  auto find = [&](const Tuple& t) {
    auto it = index.find(t);
    if (it == index.end())
      throw InvariantError("G does not preserve the wedge: " + names_label(t, s.action()->carrier));
    return it->second;
  };
  for (int g = 0; g < static_cast<int>(ng); ++g)
    for (std::size_t k = 0; k < tuples.size(); ++k) {
      Tuple l = tuples[k], r = tuples[k];
      for (auto& m : l) m = B.act_left(g, m);
      for (auto& m : r) m = B.act_right(m, g);
      left[static_cast<std::size_t>(g)][k] = find(l);
      right[k][static_cast<std::size_t>(g)] = find(r);
    }
  return check_action(a.group, std::move(carrier), std::move(left), std::move(right)).value();
}

TrisimplicialRef cyclic_bar_of_wedge(const GAugmentedSituation& a, int truncation) {
  using Degree = TrisimplicialRef::Degree;
  struct Data {
    ConstantSimplicialMonoid group;
    SituationPtr situation;
    ActionPtr on_carrier;
    std::vector<std::vector<Tuple>> wedges;
    std::vector<std::unordered_map<Tuple, int, TupleHash>> index;
  };
  auto d = std::make_shared<Data>();
  d->group = lift_constant(a.group, truncation);
  d->situation = a.situation;
  d->on_carrier = a.on_carrier;
  for (int p = 0; p <= truncation; ++p) {
    d->wedges.push_back(wedge_tuples(*a.situation, p));
    std::unordered_map<Tuple, int, TupleHash> idx;
    for (std::size_t k = 0; k < d->wedges.back().size(); ++k) idx.emplace(d->wedges.back()[k], static_cast<int>(k));
    d->index.push_back(std::move(idx));
  }
  // element (g_1..g_c; w) of tridegree (c, p, q) is encoded as
  // (sum g_k |G|^(c-k)) * |W_p| + index(w)
  auto decode = [d](Degree deg, int x) {
    const int ng = static_cast<int>(d->group.size(deg[2]));
    const int nw = static_cast<int>(d->wedges[static_cast<std::size_t>(deg[1])].size());
    Tuple g(static_cast<std::size_t>(deg[0]));
    int code = x / nw;
    for (int k = deg[0] - 1; k >= 0; --k) {
      g[static_cast<std::size_t>(k)] = code % ng;
      code /= ng;
    }
    return std::make_pair(g, d->wedges[static_cast<std::size_t>(deg[1])][static_cast<std::size_t>(x % nw)]);
  };
  auto encode = [d](Degree deg, const Tuple& g, const Tuple& w) {
    const int ng = static_cast<int>(d->group.size(deg[2]));
    const auto& idx = d->index.at(static_cast<std::size_t>(deg[1]));
    auto it = idx.find(w);
    if (it == idx.end()) throw InvariantError("cyclic bar of the wedge left the wedge");
    int code = 0;
    for (int v : g) code = code * ng + v;
    return code * static_cast<int>(d->wedges[static_cast<std::size_t>(deg[1])].size()) + it->second;
  };
  TrisimplicialRef t;
  t.truncation = {truncation, truncation, truncation};
  t.count = [d](Degree deg) {
    std::size_t n = d->wedges[static_cast<std::size_t>(deg[1])].size();
    for (int k = 0; k < deg[0]; ++k) n *= d->group.size(deg[2]);
    return n;
  };
  t.face = [d, decode, encode](int axis, Degree deg, int i, int x) {
    auto [g, w] = decode(deg, x);
    Degree next = deg;
    next[static_cast<std::size_t>(axis)] -= 1;
    if (axis == 2) {
      for (auto& v : g) v = d->group.face(deg[2], i, v);
      return encode(next, g, w);
    }
    if (axis == 1) return encode(next, g, wedge_face(*d->situation, deg[1], i, w));
    const int c = deg[0];
    const auto& B = *d->on_carrier;
    if (i == 0) {
      for (auto& m : w) m = B.act_right(m, g[0]);
      return encode(next, erase_at(g, 0), w);
    }
    if (i == c) {
      for (auto& m : w) m = B.act_left(g[static_cast<std::size_t>(c - 1)], m);
      return encode(next, erase_at(g, c - 1), w);
    }
    Tuple h = erase_at(g, i);
    h[static_cast<std::size_t>(i - 1)] = d->group.mul(deg[2], g[static_cast<std::size_t>(i - 1)], g[static_cast<std::size_t>(i)]);
    return encode(next, h, w);
  };
  t.degeneracy = [d, decode, encode](int axis, Degree deg, int j, int x) {
    auto [g, w] = decode(deg, x);
    Degree next = deg;
    next[static_cast<std::size_t>(axis)] += 1;
    if (axis == 2) {
      for (auto& v : g) v = d->group.degeneracy(deg[2], j, v);
      return encode(next, g, w);
    }
    if (axis == 1) return encode(next, g, wedge_degeneracy(*d->situation, deg[1], j, w));
    return encode(next, insert_at(g, j, d->group.monoid->unit()), w);
  };
  t.label = [d, decode](Degree deg, int x) {
    auto [g, w] = decode(deg, x);
    return names_label(g, d->group.monoid->names()) + ";" + names_label(w, d->situation->action()->carrier);
  };
  t.basepoint = 0;
  return t;
}

Comparison::Comparison(GAugmentedSituation augmented, int truncation)
    : augmented_(std::move(augmented)),
      semidirect_(share(semidirect_opsit(augmented_))),
      truncation_(truncation) {}

std::vector<Tuple> Comparison::elements(int n) const {
  std::vector<Tuple> out;
  const auto wedges = wedge_tuples(*augmented_.situation, n);
  const auto gs = all_tuples(n, static_cast<int>(augmented_.group->size()));
  if (gs.size() * wedges.size() > simplex_cap()) throw CapExceeded(n, gs.size() * wedges.size(), simplex_cap());
  for (const auto& g : gs)
    for (const auto& w : wedges) out.push_back(concat(g, w));
  return out;
}

std::string Comparison::label(int n, const Tuple& t) const {
  const Tuple g(t.begin(), t.begin() + n);
  const Tuple m(t.begin() + n, t.end());
  return names_label(g, augmented_.group->names()) + ";" + names_label(m, augmented_.situation->action()->carrier);
}

namespace {

struct Split {
  Tuple g;
  Tuple m;
};

Split split(int n, const Tuple& t) { return Split{Tuple(t.begin(), t.begin() + n), Tuple(t.begin() + n, t.end())}; }

}  // namespace

TupleModel Comparison::source_model() const {
  TupleModel model;
  model.truncation = truncation_;
  auto self = std::make_shared<const Comparison>(*this);
  model.elements = [self](int n) { return self->elements(n); };
  model.face = [self](int n, int i, const Tuple& t) {
    const auto& a = self->augmented_;
    const auto& G = *a.group;
    const auto& B = *a.on_carrier;
    auto [g, m] = split(n, t);
    if (i == 0) {
      Tuple mm;
      for (int k = 1; k < n; ++k) mm.push_back(B.act_right(m[static_cast<std::size_t>(k)], g[0]));
      return concat(erase_at(g, 0), mm);
    }
    if (i == n) {
      Tuple mm;
      for (int k = 0; k + 1 < n; ++k) mm.push_back(B.act_left(g[static_cast<std::size_t>(n - 1)], m[static_cast<std::size_t>(k)]));
      return concat(erase_at(g, n - 1), mm);
    }
    return concat(bar_face(n, i, g, [&](int x, int y) { return G.mul(x, y); }), wedge_face(*a.situation, n, i, m));
  };
  model.degeneracy = [self](int n, int j, const Tuple& t) {
    const auto& a = self->augmented_;
    auto [g, m] = split(n, t);
    return concat(insert_at(g, j, a.group->unit()), wedge_degeneracy(*a.situation, n, j, m));
  };
  model.label = [self](int n, const Tuple& t) { return self->label(n, t); };
  model.basepoint = Tuple{};
  return model;
}

TupleModel Comparison::intermediate_model() const {
  auto model = source_model();
  auto self = std::make_shared<const Comparison>(*this);
  model.face = [self](int n, int i, const Tuple& t) {
    const auto& a = self->augmented_;
    const auto& G = *a.group;
    const auto& B = *a.on_carrier;
    auto [g, m] = split(n, t);
    if (i == 0) return concat(erase_at(g, 0), erase_at(m, 0));
    if (i == n) {
      Tuple mm;
      for (int k = 0; k + 1 < n; ++k) mm.push_back(B.act_left(g[static_cast<std::size_t>(n - 1)], m[static_cast<std::size_t>(k)]));
      return concat(erase_at(g, n - 1), mm);
    }
    Tuple mm = erase_at(m, i);
    const auto I = static_cast<std::size_t>(i);
    mm[I - 1] = a.situation->star(B.act_right(m[I - 1], g[I]), m[I]);
    return concat(bar_face(n, i, g, [&](int x, int y) { return G.mul(x, y); }), mm);
  };
  return model;
}

TupleModel Comparison::target_model() const { return wedge_model(semidirect_, truncation_); }

Tuple Comparison::interleave(int n, const Tuple& t) const {
  auto [g, m] = split(n, t);
  const int nm = static_cast<int>(augmented_.situation->carrier_size());
  Tuple out;
  for (int k = 0; k < n; ++k) out.push_back(g[static_cast<std::size_t>(k)] * nm + m[static_cast<std::size_t>(k)]);
  return out;
}

Tuple Comparison::comparison_map(int n, const Tuple& t) const {
  const auto& G = *augmented_.group;
  const auto& B = *augmented_.on_carrier;
  auto [g, m] = split(n, t);
  Tuple out = g;
  for (int j = 0; j < n; ++j) {
    int before = G.unit();  // g_1 ... g_j
    for (int k = 0; k <= j; ++k) before = G.mul(before, g[static_cast<std::size_t>(k)]);
    int after = G.unit();  // g_j ... g_n
    for (int k = j; k < n; ++k) after = G.mul(after, g[static_cast<std::size_t>(k)]);
    out.push_back(B.act_left(after, B.act_right(m[static_cast<std::size_t>(j)], before)));
  }
  return interleave(n, out);
}

Tuple Comparison::right_shear_map(int n, const Tuple& t) const {
  const auto& G = *augmented_.group;
  const auto& B = *augmented_.on_carrier;
  auto [g, m] = split(n, t);
  int before = G.unit();
  for (int j = 0; j < n; ++j) {
    before = G.mul(before, g[static_cast<std::size_t>(j)]);
    m[static_cast<std::size_t>(j)] = B.act_right(m[static_cast<std::size_t>(j)], before);
  }
  return concat(g, m);
}

Tuple Comparison::left_shear_map(int n, const Tuple& t) const {
  const auto& G = *augmented_.group;
  const auto& B = *augmented_.on_carrier;
  auto [g, m] = split(n, t);
  int after = G.unit();
  for (int j = n - 1; j >= 0; --j) {
    after = G.mul(g[static_cast<std::size_t>(j)], after);
    m[static_cast<std::size_t>(j)] = B.act_left(after, m[static_cast<std::size_t>(j)]);
  }
  return interleave(n, concat(g, m));
}

Tuple Comparison::right_factor(int i, int n, const Tuple& t) const {
  const auto& B = *augmented_.on_carrier;
  auto [g, m] = split(n, t);
  for (int j = i - 1; j < n; ++j)
    m[static_cast<std::size_t>(j)] = B.act_right(m[static_cast<std::size_t>(j)], g[static_cast<std::size_t>(i - 1)]);
  return concat(g, m);
}

Tuple Comparison::left_factor(int i, int n, const Tuple& t) const {
  const auto& B = *augmented_.on_carrier;
  auto [g, m] = split(n, t);
  for (int j = 0; j < i; ++j)
    m[static_cast<std::size_t>(j)] = B.act_left(g[static_cast<std::size_t>(i - 1)], m[static_cast<std::size_t>(j)]);
  return concat(g, m);
}

namespace {

CheckRecord identity_record(const std::string& check, const std::string& instance, const IdentityReport& r) {
  CheckRecord rec{check, instance, r.degrees_checked, r.ok() ? Status::pass : Status::fail, "", ""};
  if (!r.ok()) {
    const auto& v = r.violations.front();
    rec.witness = v.identity + " in degree " + std::to_string(v.degree) + " at " + v.simplex;
  }
  return rec;
}

CheckRecord map_record(const std::string& check, const std::string& instance, int degrees, const MapReport& r) {
  CheckRecord rec{check, instance, degrees, r.ok() ? Status::pass : Status::fail, "", ""};
  if (!r.ok()) {
    const auto& v = r.violations.front();
    rec.witness = v.identity + " in degree " + std::to_string(v.degree) + " at " + v.simplex;
  }
  return rec;
}

}  // namespace

std::vector<CheckRecord> verify_comparison(const Comparison& c, const std::string& instance) {
  const int N = c.truncation();
  const auto source = c.source_model();
  const auto middle = c.intermediate_model();
  const auto target = c.target_model();
  std::vector<CheckRecord> out;
  out.push_back(identity_record("identities of the cyclic bar of the wedge", instance, validate_identities(source)));
  out.push_back(identity_record("identities of the intermediate object", instance, validate_identities(middle)));
  out.push_back(identity_record("identities of the semidirect wedge", instance, validate_identities(target)));

  auto fn = [&c](Tuple (Comparison::*f)(int, const Tuple&) const) {
    return TupleFunction([&c, f](int n, const Tuple& t) { return (c.*f)(n, t); });
  };
  const auto full = fn(&Comparison::comparison_map);
  const auto right = fn(&Comparison::right_shear_map);
  const auto left = fn(&Comparison::left_shear_map);
  out.push_back(map_record("comparison map is simplicial", instance, N, validate_tuple_map(source, target, full)));
  out.push_back(map_record("right shear map is simplicial", instance, N, validate_tuple_map(source, middle, right)));
  out.push_back(map_record("left shear map is simplicial", instance, N, validate_tuple_map(middle, target, left)));

  CheckRecord composite{"comparison map = left shear after right shear", instance, N, Status::pass, "", ""};
  CheckRecord rights{"right shear = r_1 then ... then r_n", instance, N, Status::pass, "", ""};
  CheckRecord lefts{"left shear = l_n then ... then l_1", instance, N, Status::pass, "", ""};
  CheckRecord factor_bij{"every shear factor is bijective", instance, N, Status::pass, "", ""};
  for (int n = 0; n <= N; ++n) {
    const auto elems = c.elements(n);
    for (const auto& t : elems) {
      if (composite.status == Status::pass && full(n, t) != left(n, right(n, t))) {
        composite.status = Status::fail;
        composite.witness = c.label(n, t);
      }
      Tuple r = t;
      for (int i = 1; i <= n; ++i) r = c.right_factor(i, n, r);
      if (rights.status == Status::pass && r != right(n, t)) {
        rights.status = Status::fail;
        rights.witness = c.label(n, t);
      }
      Tuple l = t;
      for (int i = n; i >= 1; --i) l = c.left_factor(i, n, l);
      if (lefts.status == Status::pass && c.interleave(n, l) != left(n, t)) {
        lefts.status = Status::fail;
        lefts.witness = c.label(n, t);
      }
    }
    for (int i = 1; i <= n && factor_bij.status == Status::pass; ++i)
      for (bool is_right : {true, false}) {
        std::unordered_set<Tuple, TupleHash> images;
        for (const auto& t : elems) images.insert(is_right ? c.right_factor(i, n, t) : c.left_factor(i, n, t));
        if (images.size() != elems.size()) {
          factor_bij.status = Status::fail;
          factor_bij.witness = std::string(is_right ? "r_" : "l_") + std::to_string(i) + " in degree " + std::to_string(n);
          break;
        }
      }
  }
  const bool group = c.augmented().group->is_group();
  if (!group && factor_bij.status == Status::fail) {
    factor_bij.status = Status::flagged;
    factor_bij.note = "acting monoid is not a group";
  }
  out.push_back(composite);
  out.push_back(rights);
  out.push_back(lefts);
  out.push_back(factor_bij);

  const auto bij = check_degreewise_bijection(source, target, full);
  CheckRecord iso{"comparison map is a degreewise bijection", instance, N, bij.bijective ? Status::pass : Status::fail,
                  bij.bijective ? "" : "degree " + std::to_string(bij.degree) + ": " + bij.witness, ""};
  if (!bij.bijective && !group) {
    iso.status = Status::flagged;
    iso.note = "acting monoid is not a group; only a weak equivalence can be expected";
  }
  out.push_back(iso);
  return out;
}

TupleModel intermediate_T(const GAugmentedSituation& a, int truncation) {
  Comparison c(a, truncation);
  auto model = c.intermediate_model();
  const auto report = validate_identities(model);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw InvariantError("intermediate object violates " + v.identity + " at " + v.simplex);
  }
  return model;
}

int shear(const TwoSidedAction& a, Side side, int pair) {
  const int nx = static_cast<int>(a.size());
  const int g = pair / nx;
  const int x = pair % nx;
  return g * nx + (side == Side::left ? a.act_left(g, x) : a.act_right(x, g));
}

ShearReport shear_report(const TwoSidedAction& a, Side side) {
  const int nx = static_cast<int>(a.size());
  const int total = nx * static_cast<int>(a.monoid->size());
  ShearReport r;
  std::vector<int> preimage(static_cast<std::size_t>(total), -1);
  auto pair_name = [&](int p) {
    return "(" + a.monoid->name(p / nx) + "," + a.carrier[static_cast<std::size_t>(p % nx)] + ")";
  };
  for (int p = 0; p < total; ++p) {
    const int y = shear(a, side, p);
    auto& slot = preimage[static_cast<std::size_t>(y)];
    if (slot >= 0) {
      if (r.injective) r.witness = pair_name(slot) + " and " + pair_name(p) + " both map to " + pair_name(y);
      r.injective = false;
    } else {
      slot = p;
    }
  }
  for (int y = 0; y < total; ++y)
    if (preimage[static_cast<std::size_t>(y)] < 0) {
      if (r.surjective && r.injective) r.witness = pair_name(y) + " is not hit";
      r.surjective = false;
    }
  return r;
}

std::optional<AxiomViolation> check_situation_map(const SituationMap& f) {
  const auto& S = *f.source;
  const auto& T = *f.target;
  if (auto bad = check_monoid_map(MonoidMap{S.monoid(), T.monoid(), f.on_monoid})) return bad;
  if (f.on_carrier.size() != S.carrier_size()) return AxiomViolation{"carrier map totality", {}};
  for (int m : f.on_carrier)
    if (m < 0 || m >= static_cast<int>(T.carrier_size())) return AxiomViolation{"carrier map totality", {}};
  auto fm = [&](int m) { return f.on_carrier[static_cast<std::size_t>(m)]; };
  auto fh = [&](int h) { return f.on_monoid[static_cast<std::size_t>(h)]; };
  for (int h = 0; h < static_cast<int>(S.monoid()->size()); ++h) {
    if (fm(S.iota()[static_cast<std::size_t>(h)]) != T.iota()[static_cast<std::size_t>(fh(h))])
      return AxiomViolation{"compatible with the embeddings", {S.monoid()->name(h)}};
    for (int m = 0; m < static_cast<int>(S.carrier_size()); ++m) {
      if (fm(S.action()->act_left(h, m)) != T.action()->act_left(fh(h), fm(m)))
        return AxiomViolation{"left equivariant", {S.monoid()->name(h), S.carrier_name(m)}};
      if (fm(S.action()->act_right(m, h)) != T.action()->act_right(fm(m), fh(h)))
        return AxiomViolation{"right equivariant", {S.carrier_name(m), S.monoid()->name(h)}};
    }
  }
  return std::nullopt;
}

CheckRecord naturality_check(const Comparison& from, const Comparison& to, const MonoidMap& a, const SituationMap& f) {
  const int N = std::min(from.truncation(), to.truncation());
  CheckRecord rec{"comparison map is natural", from.augmented().group->title() + " -> " + to.augmented().group->title(),
                  N, Status::pass, "", ""};
  auto fail = [&](std::string witness) {
    rec.status = Status::fail;
    rec.witness = std::move(witness);
    return rec;
  };
  if (auto bad = check_monoid_map(a)) return fail("acting monoids: " + bad->to_string());
  if (auto bad = check_situation_map(f)) return fail("situations: " + bad->to_string());
  const auto& A1 = from.augmented();
  const auto& A2 = to.augmented();
  auto fm = [&](int m) { return f.on_carrier[static_cast<std::size_t>(m)]; };
  auto fh = [&](int h) { return f.on_monoid[static_cast<std::size_t>(h)]; };
  for (int g = 0; g < static_cast<int>(A1.group->size()); ++g) {
    for (int m = 0; m < static_cast<int>(A1.situation->carrier_size()); ++m)
      if (fm(A1.on_carrier->act_left(g, m)) != A2.on_carrier->act_left(a(g), fm(m)) ||
          fm(A1.on_carrier->act_right(m, g)) != A2.on_carrier->act_right(fm(m), a(g)))
        return fail("carrier map not equivariant at (" + A1.group->name(g) + "," + A1.situation->carrier_name(m) + ")");
    for (int h = 0; h < static_cast<int>(A1.situation->monoid()->size()); ++h)
      if (fh(A1.on_monoid->act_left(g, h)) != A2.on_monoid->act_left(a(g), fh(h)) ||
          fh(A1.on_monoid->act_right(h, g)) != A2.on_monoid->act_right(fh(h), a(g)))
        return fail("monoid map not equivariant at (" + A1.group->name(g) + "," + A1.situation->monoid()->name(h) + ")");
  }
  const int nm1 = static_cast<int>(A1.situation->carrier_size());
  const int nm2 = static_cast<int>(A2.situation->carrier_size());
  for (int n = 0; n <= N; ++n)
    for (const auto& t : from.elements(n)) {
      Tuple image = t;
      for (int k = 0; k < n; ++k) image[static_cast<std::size_t>(k)] = a(t[static_cast<std::size_t>(k)]);
      for (int k = n; k < 2 * n; ++k) image[static_cast<std::size_t>(k)] = fm(t[static_cast<std::size_t>(k)]);
      const Tuple lhs = to.comparison_map(n, image);
      Tuple rhs = from.comparison_map(n, t);
      for (auto& p : rhs) p = a(p / nm1) * nm2 + fm(p % nm1);
      if (lhs != rhs) return fail(from.label(n, t));
    }
  return rec;
}

}  // namespace cybar
