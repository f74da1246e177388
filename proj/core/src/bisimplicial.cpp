#include "cybar/bisimplicial.hpp"

#include <algorithm>
#include <map>

#include "cybar/error.hpp"

namespace cybar {

SimplexIndex::SimplexIndex(const SimplicialSet& x) {
  const auto levels = static_cast<std::size_t>(x.truncation() + 1);
  simplices.resize(levels);
  position.resize(levels);
  for (int n = 0; n <= x.truncation(); ++n) {
    auto& list = simplices[static_cast<std::size_t>(n)];
    list = x.simplices(n);
    for (std::size_t k = 0; k < list.size(); ++k) position[static_cast<std::size_t>(n)].emplace(list[k], static_cast<int>(k));
  }
}

int SimplexIndex::operator()(const Simplex& s) const { return position.at(static_cast<std::size_t>(s.degree())).at(s); }

BisimplicialSet BisimplicialSet::tabulate(int horizontal, int vertical, const Ops& ops) {
  if (horizontal < 0 || vertical < 0) throw TruncationError("negative bisimplicial truncation");
  BisimplicialSet b;
  b.horizontal_ = horizontal;
  b.vertical_ = vertical;
  b.cells_.resize(static_cast<std::size_t>((horizontal + 1) * (vertical + 1)));
  std::size_t seen = 0;
  for (int p = 0; p <= horizontal; ++p)
    for (int q = 0; q <= vertical; ++q) {
      auto& c = b.cells_[static_cast<std::size_t>(p * (vertical + 1) + q)];
      const auto count = ops.count(p, q);
      seen += count;
      if (seen > simplex_cap()) throw CapExceeded(std::max(p, q), seen, simplex_cap());
      c.labels.reserve(count);
      for (std::size_t x = 0; x < count; ++x) c.labels.push_back(ops.label(p, q, static_cast<int>(x)));
      auto fill = [&](std::vector<std::vector<int>>& table, int operators, auto&& fn) {
        table.assign(static_cast<std::size_t>(operators), std::vector<int>(count));
        for (int i = 0; i < operators; ++i)
          for (std::size_t x = 0; x < count; ++x) table[static_cast<std::size_t>(i)][x] = fn(p, q, i, static_cast<int>(x));
      };
      if (p >= 1) fill(c.hface, p + 1, ops.hface);
      if (p + 1 <= horizontal) fill(c.hdeg, p + 1, ops.hdegeneracy);
      if (q >= 1) fill(c.vface, q + 1, ops.vface);
      if (q + 1 <= vertical) fill(c.vdeg, q + 1, ops.vdegeneracy);
    }
  return b;
}

const BisimplicialSet::Cell& BisimplicialSet::cell(int p, int q) const {
  if (p < 0 || q < 0 || p > horizontal_ || q > vertical_) throw TruncationError("bidegree outside the truncation");
  return cells_[static_cast<std::size_t>(p * (vertical_ + 1) + q)];
}

std::size_t BisimplicialSet::size(int p, int q) const { return cell(p, q).labels.size(); }

int BisimplicialSet::hface(int p, int q, int i, int x) const {
  return cell(p, q).hface.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(x));
}
int BisimplicialSet::hdegeneracy(int p, int q, int j, int x) const {
  return cell(p, q).hdeg.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(x));
}
int BisimplicialSet::vface(int p, int q, int i, int x) const {
  return cell(p, q).vface.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(x));
}
int BisimplicialSet::vdegeneracy(int p, int q, int j, int x) const {
  return cell(p, q).vdeg.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(x));
}
const std::string& BisimplicialSet::label(int p, int q, int x) const {
  return cell(p, q).labels.at(static_cast<std::size_t>(x));
}

void BisimplicialSet::set_hface(int p, int q, int i, int x, int value) {
  cells_.at(static_cast<std::size_t>(p * (vertical_ + 1) + q)).hface.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(x)) =
      value;
}

BisimplicialSet tabulate(const BiTupleModel& model) {
  const int P = model.horizontal;
  const int Q = model.vertical;
  std::vector<std::vector<std::vector<Tuple>>> elems(static_cast<std::size_t>(P + 1));
  std::vector<std::vector<std::unordered_map<Tuple, int, TupleHash>>> index(static_cast<std::size_t>(P + 1));
  std::size_t seen = 0;
  for (int p = 0; p <= P; ++p) {
    elems[static_cast<std::size_t>(p)].resize(static_cast<std::size_t>(Q + 1));
    index[static_cast<std::size_t>(p)].resize(static_cast<std::size_t>(Q + 1));
    for (int q = 0; q <= Q; ++q) {
      auto& list = elems[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      list = model.elements(p, q);
      seen += list.size();
      if (seen > simplex_cap()) throw CapExceeded(std::max(p, q), seen, simplex_cap());
      auto& idx = index[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      for (std::size_t k = 0; k < list.size(); ++k) idx.emplace(list[k], static_cast<int>(k));
    }
  }
  auto at = [&](int p, int q, int x) -> const Tuple& {
    return elems[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)][static_cast<std::size_t>(x)];
  };
  auto find = [&](int p, int q, const Tuple& t) {
    const auto& idx = index[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    auto it = idx.find(t);
    if (it == idx.end())
      throw InvariantError("structure map leaves the bisimplicial set at bidegree (" + std::to_string(p) + "," +
                           std::to_string(q) + ")");
    return it->second;
  };
  BisimplicialSet::Ops ops;
  ops.count = [&](int p, int q) { return elems[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].size(); };
  ops.hface = [&](int p, int q, int i, int x) { return find(p - 1, q, model.hface(p, q, i, at(p, q, x))); };
  ops.hdegeneracy = [&](int p, int q, int j, int x) { return find(p + 1, q, model.hdegeneracy(p, q, j, at(p, q, x))); };
  ops.vface = [&](int p, int q, int i, int x) { return find(p, q - 1, model.vface(p, q, i, at(p, q, x))); };
  ops.vdegeneracy = [&](int p, int q, int j, int x) { return find(p, q + 1, model.vdegeneracy(p, q, j, at(p, q, x))); };
  ops.label = [&](int p, int q, int x) { return model.label(p, q, at(p, q, x)); };
  auto out = BisimplicialSet::tabulate(P, Q, ops);
  if (model.basepoint) out.set_basepoint(find(0, 0, *model.basepoint));
  return out;
}

namespace {

std::vector<int> iota_list(std::size_t n) {
  std::vector<int> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<int>(k);
  return out;
}

}  // namespace

IdentityReport validate_identities(const BisimplicialSet& b) {
  IdentityReport report;
  const int P = b.horizontal_truncation();
  const int Q = b.vertical_truncation();
  for (int q = 0; q <= Q; ++q)
    report.merge(check_simplicial_identities(
        P, [&](int p) { return iota_list(b.size(p, q)); }, [&](int p, int i, int x) { return b.hface(p, q, i, x); },
        [&](int p, int j, int x) { return b.hdegeneracy(p, q, j, x); },
        [&](int p, int x) { return b.label(p, q, x); }, "h:"));
  for (int p = 0; p <= P; ++p)
    report.merge(check_simplicial_identities(
        Q, [&](int q) { return iota_list(b.size(p, q)); }, [&](int q, int i, int x) { return b.vface(p, q, i, x); },
        [&](int q, int j, int x) { return b.vdegeneracy(p, q, j, x); },
        [&](int q, int x) { return b.label(p, q, x); }, "v:"));
  auto fail = [&](std::string what, int p, int q, int x) {
    report.violations.push_back(Violation{"hv:" + std::move(what), p + q, b.label(p, q, x)});
  };
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Q; ++q)
      for (std::size_t xs = 0; xs < b.size(p, q); ++xs) {
        const int x = static_cast<int>(xs);
        for (int i = 0; p >= 1 && i <= p; ++i)
          for (int j = 0; q >= 1 && j <= q; ++j)
            if (b.hface(p, q - 1, i, b.vface(p, q, j, x)) != b.vface(p - 1, q, j, b.hface(p, q, i, x)))
              fail("d" + std::to_string(i) + "d" + std::to_string(j), p, q, x);
        for (int i = 0; p >= 1 && i <= p; ++i)
          for (int j = 0; q + 1 <= Q && j <= q; ++j)
            if (b.hface(p, q + 1, i, b.vdegeneracy(p, q, j, x)) != b.vdegeneracy(p - 1, q, j, b.hface(p, q, i, x)))
              fail("d" + std::to_string(i) + "s" + std::to_string(j), p, q, x);
        for (int i = 0; p + 1 <= P && i <= p; ++i)
          for (int j = 0; q >= 1 && j <= q; ++j)
            if (b.vface(p + 1, q, j, b.hdegeneracy(p, q, i, x)) != b.hdegeneracy(p, q - 1, i, b.vface(p, q, j, x)))
              fail("s" + std::to_string(i) + "d" + std::to_string(j), p, q, x);
        for (int i = 0; p + 1 <= P && i <= p; ++i)
          for (int j = 0; q + 1 <= Q && j <= q; ++j)
            if (b.vdegeneracy(p + 1, q, j, b.hdegeneracy(p, q, i, x)) !=
                b.hdegeneracy(p, q + 1, i, b.vdegeneracy(p, q, j, x)))
              fail("s" + std::to_string(i) + "s" + std::to_string(j), p, q, x);
      }
  report.degrees_checked = std::min(P, Q);
  return report;
}

TupleModel diagonal_model(BisetPtr b) {
  TupleModel m;
  m.truncation = std::min(b->horizontal_truncation(), b->vertical_truncation());
  m.elements = [b](int n) {
    std::vector<Tuple> out;
    for (std::size_t x = 0; x < b->size(n, n); ++x) out.push_back(Tuple{static_cast<int>(x)});
    return out;
  };
  m.face = [b](int n, int i, const Tuple& t) { return Tuple{b->hface(n, n - 1, i, b->vface(n, n, i, t[0]))}; };
  m.degeneracy = [b](int n, int j, const Tuple& t) {
    return Tuple{b->hdegeneracy(n, n + 1, j, b->vdegeneracy(n, n, j, t[0]))};
  };
  m.label = [b](int n, const Tuple& t) { return b->label(n, n, t[0]); };
  if (b->basepoint()) m.basepoint = Tuple{*b->basepoint()};
  return m;
}

SimplicialSet diagonal(BisetPtr b) {
  Materialized mat(diagonal_model(std::move(b)));
  return mat.set()->with_truncation(mat.set()->truncation());
}

TupleModel row_model(BisetPtr b, int p) {
  TupleModel m;
  m.truncation = b->vertical_truncation();
  m.elements = [b, p](int q) {
    std::vector<Tuple> out;
    for (std::size_t x = 0; x < b->size(p, q); ++x) out.push_back(Tuple{static_cast<int>(x)});
    return out;
  };
  m.face = [b, p](int q, int i, const Tuple& t) { return Tuple{b->vface(p, q, i, t[0])}; };
  m.degeneracy = [b, p](int q, int j, const Tuple& t) { return Tuple{b->vdegeneracy(p, q, j, t[0])}; };
  m.label = [b, p](int q, const Tuple& t) { return b->label(p, q, t[0]); };
  return m;
}

BisimplicialSet external_product(SetPtr x, SetPtr y) {
  auto xi = std::make_shared<SimplexIndex>(*x);
  auto yi = std::make_shared<SimplexIndex>(*y);
  auto ny = [yi](int q) { return static_cast<int>(yi->simplices[static_cast<std::size_t>(q)].size()); };
  auto sx = [xi](int p, int a) -> const Simplex& { return xi->simplices[static_cast<std::size_t>(p)][static_cast<std::size_t>(a)]; };
  auto sy = [yi](int q, int b) -> const Simplex& { return yi->simplices[static_cast<std::size_t>(q)][static_cast<std::size_t>(b)]; };
  BisimplicialSet::Ops ops;
  ops.count = [&](int p, int q) { return xi->simplices[static_cast<std::size_t>(p)].size() * static_cast<std::size_t>(ny(q)); };
  ops.hface = [&](int p, int q, int i, int e) {
    return (*xi)(x->face(sx(p, e / ny(q)), i)) * ny(q) + e % ny(q);
  };
  ops.hdegeneracy = [&](int p, int q, int j, int e) { return (*xi)(degenerate(sx(p, e / ny(q)), j)) * ny(q) + e % ny(q); };
  ops.vface = [&](int, int q, int i, int e) { return (e / ny(q)) * ny(q - 1) + (*yi)(y->face(sy(q, e % ny(q)), i)); };
  ops.vdegeneracy = [&](int, int q, int j, int e) {
    return (e / ny(q)) * ny(q + 1) + (*yi)(degenerate(sy(q, e % ny(q)), j));
  };
  ops.label = [&](int p, int q, int e) { return "(" + x->label(sx(p, e / ny(q))) + ";" + y->label(sy(q, e % ny(q))) + ")"; };
  auto out = BisimplicialSet::tabulate(x->truncation(), y->truncation(), ops);
  if (x->basepoint() && y->basepoint())
    out.set_basepoint((*xi)(x->base_simplex(0)) * ny(0) + (*yi)(y->base_simplex(0)));
  return out;
}

BisimplicialSet external_smash(SetPtr x, SetPtr y) {
  if (!x->basepoint() || !y->basepoint()) throw Error("external smash needs pointed simplicial sets");
  SimplexIndex xi(*x);
  SimplexIndex yi(*y);
  const int P = x->truncation();
  const int Q = y->truncation();
  // Element 0 of every bidegree is the basepoint; the rest are pairs away
  // from the basepoint in both coordinates.
  std::vector<std::vector<std::vector<std::pair<int, int>>>> pairs(static_cast<std::size_t>(P + 1),
                                                                   std::vector<std::vector<std::pair<int, int>>>(static_cast<std::size_t>(Q + 1)));
  std::vector<std::vector<std::map<std::pair<int, int>, int>>> index(static_cast<std::size_t>(P + 1),
                                                                     std::vector<std::map<std::pair<int, int>, int>>(static_cast<std::size_t>(Q + 1)));
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Q; ++q) {
      auto& list = pairs[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
      list.emplace_back(-1, -1);
      for (std::size_t a = 0; a < xi.simplices[static_cast<std::size_t>(p)].size(); ++a) {
        const auto& sa = xi.simplices[static_cast<std::size_t>(p)][a];
        if (x->is_base(Simplex{sa.base_degree, sa.id, {}})) continue;
        for (std::size_t c = 0; c < yi.simplices[static_cast<std::size_t>(q)].size(); ++c) {
          const auto& sc = yi.simplices[static_cast<std::size_t>(q)][c];
          if (y->is_base(Simplex{sc.base_degree, sc.id, {}})) continue;
          index[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].emplace(std::make_pair(static_cast<int>(a), static_cast<int>(c)),
                                                                                  static_cast<int>(list.size()));
          list.emplace_back(static_cast<int>(a), static_cast<int>(c));
        }
      }
    }
  auto lookup = [&](int p, int q, const Simplex& a, const Simplex& c) {
    if (x->is_base(Simplex{a.base_degree, a.id, {}}) || y->is_base(Simplex{c.base_degree, c.id, {}})) return 0;
    return index[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].at({xi(a), yi(c)});
  };
  auto elem = [&](int p, int q, int e) { return pairs[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)][static_cast<std::size_t>(e)]; };
  auto sa = [&](int p, int a) { return xi.simplices[static_cast<std::size_t>(p)][static_cast<std::size_t>(a)]; };
  auto sc = [&](int q, int c) { return yi.simplices[static_cast<std::size_t>(q)][static_cast<std::size_t>(c)]; };
  BisimplicialSet::Ops ops;
  ops.count = [&](int p, int q) { return pairs[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].size(); };
  ops.hface = [&](int p, int q, int i, int e) {
    if (e == 0) return 0;
    auto [a, c] = elem(p, q, e);
    return lookup(p - 1, q, x->face(sa(p, a), i), sc(q, c));
  };
  ops.hdegeneracy = [&](int p, int q, int j, int e) {
    if (e == 0) return 0;
    auto [a, c] = elem(p, q, e);
    return lookup(p + 1, q, degenerate(sa(p, a), j), sc(q, c));
  };
  ops.vface = [&](int p, int q, int i, int e) {
    if (e == 0) return 0;
    auto [a, c] = elem(p, q, e);
    return lookup(p, q - 1, sa(p, a), y->face(sc(q, c), i));
  };
  ops.vdegeneracy = [&](int p, int q, int j, int e) {
    if (e == 0) return 0;
    auto [a, c] = elem(p, q, e);
    return lookup(p, q + 1, sa(p, a), degenerate(sc(q, c), j));
  };
  ops.label = [&](int p, int q, int e) -> std::string {
    if (e == 0) return "*";
    auto [a, c] = elem(p, q, e);
    return "(" + x->label(sa(p, a)) + "^" + y->label(sc(q, c)) + ")";
  };
  auto out = BisimplicialSet::tabulate(P, Q, ops);
  out.set_basepoint(0);
  return out;
}

BisimplicialSet constant_horizontal(SetPtr x, int horizontal) {
  SimplexIndex xi(*x);
  auto sx = [&](int q, int e) { return xi.simplices[static_cast<std::size_t>(q)][static_cast<std::size_t>(e)]; };
  BisimplicialSet::Ops ops;
  ops.count = [&](int, int q) { return xi.simplices[static_cast<std::size_t>(q)].size(); };
  ops.hface = [](int, int, int, int e) { return e; };
  ops.hdegeneracy = [](int, int, int, int e) { return e; };
  ops.vface = [&](int, int q, int i, int e) { return xi(x->face(sx(q, e), i)); };
  ops.vdegeneracy = [&](int, int q, int j, int e) { return xi(degenerate(sx(q, e), j)); };
  ops.label = [&](int, int q, int e) { return x->label(sx(q, e)); };
  auto out = BisimplicialSet::tabulate(horizontal, x->truncation(), ops);
  if (x->basepoint()) out.set_basepoint(xi(x->base_simplex(0)));
  return out;
}

MapReport validate_map(const BisimplicialMap& f) {
  MapReport report;
  const auto& s = *f.source;
  const auto& t = *f.target;
  const int P = std::min(s.horizontal_truncation(), t.horizontal_truncation());
  const int Q = std::min(s.vertical_truncation(), t.vertical_truncation());
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Q; ++q)
      for (std::size_t xs = 0; xs < s.size(p, q); ++xs) {
        const int x = static_cast<int>(xs);
        const int fx = f.apply(p, q, x);
        auto fail = [&](const std::string& what) { report.violations.push_back(Violation{what, p + q, s.label(p, q, x)}); };
        for (int i = 0; p >= 1 && i <= p; ++i)
          if (f.apply(p - 1, q, s.hface(p, q, i, x)) != t.hface(p, q, i, fx)) fail("f h:d" + std::to_string(i));
        for (int i = 0; q >= 1 && i <= q; ++i)
          if (f.apply(p, q - 1, s.vface(p, q, i, x)) != t.vface(p, q, i, fx)) fail("f v:d" + std::to_string(i));
        for (int j = 0; p + 1 <= P && j <= p; ++j)
          if (f.apply(p + 1, q, s.hdegeneracy(p, q, j, x)) != t.hdegeneracy(p, q, j, fx)) fail("f h:s" + std::to_string(j));
        for (int j = 0; q + 1 <= Q && j <= q; ++j)
          if (f.apply(p, q + 1, s.vdegeneracy(p, q, j, x)) != t.vdegeneracy(p, q, j, fx)) fail("f v:s" + std::to_string(j));
      }
  return report;
}

TupleFunction diagonal_function(const BisimplicialMap& f) {
  return [f](int n, const Tuple& t) { return Tuple{f.apply(n, n, t[0])}; };
}

TupleFunction row_function(const BisimplicialMap& f, int p) {
  return [f, p](int q, const Tuple& t) { return Tuple{f.apply(p, q, t[0])}; };
}

IdentityReport validate_identities(const TrisimplicialRef& t) {
  using Degree = TrisimplicialRef::Degree;
  IdentityReport report;
  const auto& T = t.truncation;
  // simplicial identities along each axis, other two degrees fixed
  for (int axis = 0; axis < 3; ++axis) {
    const int u = (axis + 1) % 3;
    const int w = (axis + 2) % 3;
    for (int du = 0; du <= T[static_cast<std::size_t>(u)]; ++du)
      for (int dw = 0; dw <= T[static_cast<std::size_t>(w)]; ++dw) {
        auto deg = [&](int n) {
          Degree d{};
          d[static_cast<std::size_t>(axis)] = n;
          d[static_cast<std::size_t>(u)] = du;
          d[static_cast<std::size_t>(w)] = dw;
          return d;
        };
        report.merge(check_simplicial_identities(
            T[static_cast<std::size_t>(axis)], [&](int n) { return iota_list(t.count(deg(n))); },
            [&](int n, int i, int x) { return t.face(axis, deg(n), i, x); },
            [&](int n, int j, int x) { return t.degeneracy(axis, deg(n), j, x); },
            [&](int n, int x) { return t.label(deg(n), x); }, t.axis_names[static_cast<std::size_t>(axis)] + ":"));
      }
  }
  // pairwise commutation of structure maps from different axes
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const auto A = static_cast<std::size_t>(a);
      const auto B = static_cast<std::size_t>(b);
      for (int d0 = 0; d0 <= T[0]; ++d0)
        for (int d1 = 0; d1 <= T[1]; ++d1)
          for (int d2 = 0; d2 <= T[2]; ++d2) {
            const Degree d{d0, d1, d2};
            for (std::size_t xs = 0; xs < t.count(d); ++xs) {
              const int x = static_cast<int>(xs);
              auto shifted = [&](int da, int db) {
                Degree r = d;
                r[A] += da;
                r[B] += db;
                return r;
              };
              auto fail = [&](const std::string& what) {
                report.violations.push_back(
                    Violation{t.axis_names[A] + "/" + t.axis_names[B] + ":" + what, d0 + d1 + d2, t.label(d, x)});
              };
              for (int i = 0; d[A] >= 1 && i <= d[A]; ++i)
                for (int j = 0; d[B] >= 1 && j <= d[B]; ++j)
                  if (t.face(a, shifted(0, -1), i, t.face(b, d, j, x)) != t.face(b, shifted(-1, 0), j, t.face(a, d, i, x)))
                    fail("d" + std::to_string(i) + "d" + std::to_string(j));
              for (int i = 0; d[A] + 1 <= T[A] && i <= d[A]; ++i)
                for (int j = 0; d[B] + 1 <= T[B] && j <= d[B]; ++j)
                  if (t.degeneracy(a, shifted(0, 1), i, t.degeneracy(b, d, j, x)) !=
                      t.degeneracy(b, shifted(1, 0), j, t.degeneracy(a, d, i, x)))
                    fail("s" + std::to_string(i) + "s" + std::to_string(j));
              for (int i = 0; d[A] >= 1 && i <= d[A]; ++i)
                for (int j = 0; d[B] + 1 <= T[B] && j <= d[B]; ++j)
                  if (t.face(a, shifted(0, 1), i, t.degeneracy(b, d, j, x)) !=
                      t.degeneracy(b, shifted(-1, 0), j, t.face(a, d, i, x)))
                    fail("d" + std::to_string(i) + "s" + std::to_string(j));
              for (int i = 0; d[A] + 1 <= T[A] && i <= d[A]; ++i)
                for (int j = 0; d[B] >= 1 && j <= d[B]; ++j)
                  if (t.degeneracy(a, shifted(0, -1), i, t.face(b, d, j, x)) !=
                      t.face(b, shifted(1, 0), j, t.degeneracy(a, d, i, x)))
                    fail("s" + std::to_string(i) + "d" + std::to_string(j));
            }
          }
    }
  report.degrees_checked = std::min({T[0], T[1], T[2]});
  return report;
}

BisimplicialSet partial_diagonal(const TrisimplicialRef& t, std::pair<int, int> axes) {
  using Degree = TrisimplicialRef::Degree;
  const auto [a, b] = axes;
  if (a == b) throw Error("partial diagonal needs two distinct axes");
  if (a < 0 || b < 0 || a > 2 || b > 2) throw Error("axis index out of range");
  const int c = 3 - a - b;
  const auto A = static_cast<std::size_t>(a);
  const auto B = static_cast<std::size_t>(b);
  const auto C = static_cast<std::size_t>(c);
  auto deg = [=](int n, int m) {
    Degree d{};
    d[A] = n;
    d[B] = n;
    d[C] = m;
    return d;
  };
  BisimplicialSet::Ops ops;
  ops.count = [&](int n, int m) { return t.count(deg(n, m)); };
  ops.hface = [&](int n, int m, int i, int x) {
    Degree mid = deg(n, m);
    mid[B] = n - 1;
    return t.face(a, mid, i, t.face(b, deg(n, m), i, x));
  };
  ops.hdegeneracy = [&](int n, int m, int j, int x) {
    Degree mid = deg(n, m);
    mid[B] = n + 1;
    return t.degeneracy(a, mid, j, t.degeneracy(b, deg(n, m), j, x));
  };
  ops.vface = [&](int n, int m, int i, int x) { return t.face(c, deg(n, m), i, x); };
  ops.vdegeneracy = [&](int n, int m, int j, int x) { return t.degeneracy(c, deg(n, m), j, x); };
  ops.label = [&](int n, int m, int x) { return t.label(deg(n, m), x); };
  auto out = BisimplicialSet::tabulate(std::min(t.truncation[A], t.truncation[B]), t.truncation[C], ops);
  if (t.basepoint) out.set_basepoint(*t.basepoint);
  return out;
}

TupleModel triple_diagonal_model(const TrisimplicialRef& t) {
  using Degree = TrisimplicialRef::Degree;
  TupleModel m;
  m.truncation = std::min({t.truncation[0], t.truncation[1], t.truncation[2]});
  m.elements = [t](int n) {
    std::vector<Tuple> out;
    for (std::size_t x = 0; x < t.count(Degree{n, n, n}); ++x) out.push_back(Tuple{static_cast<int>(x)});
    return out;
  };
  m.face = [t](int n, int i, const Tuple& e) {
    int x = t.face(2, Degree{n, n, n}, i, e[0]);
    x = t.face(1, Degree{n, n, n - 1}, i, x);
    return Tuple{t.face(0, Degree{n, n - 1, n - 1}, i, x)};
  };
  m.degeneracy = [t](int n, int j, const Tuple& e) {
    int x = t.degeneracy(2, Degree{n, n, n}, j, e[0]);
    x = t.degeneracy(1, Degree{n, n, n + 1}, j, x);
    return Tuple{t.degeneracy(0, Degree{n, n + 1, n + 1}, j, x)};
  };
  m.label = [t](int n, const Tuple& e) { return t.label(Degree{n, n, n}, e[0]); };
  if (t.basepoint) m.basepoint = Tuple{*t.basepoint};
  return m;
}

TrisimplicialRef external_triple(SetPtr x, SetPtr y, SetPtr z) {
  using Degree = TrisimplicialRef::Degree;
  struct Data {
    SetPtr sets[3];
    SimplexIndex index[3];
  };
  auto data = std::make_shared<Data>(Data{{x, y, z}, {SimplexIndex(*x), SimplexIndex(*y), SimplexIndex(*z)}});
  auto sizes = [data](Degree d) {
    std::array<int, 3> s{};
    for (std::size_t k = 0; k < 3; ++k)
      s[k] = static_cast<int>(data->index[k].simplices[static_cast<std::size_t>(d[k])].size());
    return s;
  };
  auto split = [sizes](Degree d, int e) {
    auto s = sizes(d);
    return std::array<int, 3>{e / (s[1] * s[2]), (e / s[2]) % s[1], e % s[2]};
  };
  auto join = [sizes](Degree d, std::array<int, 3> c) {
    auto s = sizes(d);
    return (c[0] * s[1] + c[1]) * s[2] + c[2];
  };
  TrisimplicialRef t;
  t.truncation = {x->truncation(), y->truncation(), z->truncation()};
  t.axis_names = {"x", "y", "z"};
  t.count = [sizes](Degree d) {
    auto s = sizes(d);
    return static_cast<std::size_t>(s[0]) * static_cast<std::size_t>(s[1]) * static_cast<std::size_t>(s[2]);
  };
  auto op = [data, split, join](bool is_face) {
    return [data, split, join, is_face](int axis, Degree d, int i, int e) {
      auto c = split(d, e);
      const auto A = static_cast<std::size_t>(axis);
      const auto& s = data->index[A].simplices[static_cast<std::size_t>(d[A])][static_cast<std::size_t>(c[A])];
      const Simplex r = is_face ? data->sets[A]->face(s, i) : degenerate(s, i);
      Degree nd = d;
      nd[A] += is_face ? -1 : 1;
      c[A] = data->index[A](r);
      return join(nd, c);
    };
  };
  t.face = op(true);
  t.degeneracy = op(false);
  t.label = [data, split](Degree d, int e) {
    auto c = split(d, e);
    std::string out = "(";
    for (std::size_t k = 0; k < 3; ++k) {
      if (k) out += ";";
      out += data->sets[k]->label(data->index[k].simplices[static_cast<std::size_t>(d[k])][static_cast<std::size_t>(c[k])]);
    }
    return out + ")";
  };
  return t;
}

}  // namespace cybar
