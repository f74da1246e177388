#include "cybar/algebra.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

namespace cybar {

std::string AxiomViolation::to_string() const {
  std::string out = axiom + ": (";
  for (std::size_t k = 0; k < witness.size(); ++k) {
    if (k) out += ", ";
    out += witness[k];
  }
  return out + ")";
}

std::optional<int> DiscreteMonoid::find(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k)
    if (names_[k] == name) return static_cast<int>(k);
  return std::nullopt;
}

std::optional<int> DiscreteMonoid::inverse(int a) const {
  for (int b = 0; b < static_cast<int>(size()); ++b)
    if (mul(a, b) == unit_ && mul(b, a) == unit_) return b;
  return std::nullopt;
}

bool DiscreteMonoid::is_group() const {
  for (int a = 0; a < static_cast<int>(size()); ++a)
    if (!inverse(a)) return false;
  return true;
}

std::optional<std::pair<int, int>> DiscreteMonoid::noncommuting_pair() const {
  for (int a = 0; a < static_cast<int>(size()); ++a)
    for (int b = a + 1; b < static_cast<int>(size()); ++b)
      if (mul(a, b) != mul(b, a)) return std::make_pair(a, b);
  return std::nullopt;
}

bool DiscreteMonoid::commutative() const { return !noncommuting_pair(); }

Checked<DiscreteMonoid> monoid_from_table(std::string title, std::vector<std::string> roster, int unit, Table table) {
  const int n = static_cast<int>(roster.size());
  if (n == 0) return AxiomViolation{"nonempty roster", {}};
  {
    std::unordered_set<std::string> seen;
    for (const auto& r : roster)
      if (!seen.insert(r).second) return AxiomViolation{"distinct names", {r}};
  }
  if (unit < 0 || unit >= n) return AxiomViolation{"unit in roster", {std::to_string(unit)}};
  if (table.size() != roster.size()) return AxiomViolation{"totality", {"rows"}};
  for (int a = 0; a < n; ++a) {
    const auto& row = table[static_cast<std::size_t>(a)];
    if (row.size() != roster.size()) return AxiomViolation{"totality", {roster[static_cast<std::size_t>(a)]}};
    for (int b = 0; b < n; ++b)
      if (row[static_cast<std::size_t>(b)] < 0 || row[static_cast<std::size_t>(b)] >= n)
        return AxiomViolation{"totality", {roster[static_cast<std::size_t>(a)], roster[static_cast<std::size_t>(b)]}};
  }
  auto mul = [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  auto nm = [&](int a) { return roster[static_cast<std::size_t>(a)]; };
  for (int a = 0; a < n; ++a) {
    if (mul(unit, a) != a) return AxiomViolation{"left unit", {nm(a)}};
    if (mul(a, unit) != a) return AxiomViolation{"right unit", {nm(a)}};
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return AxiomViolation{"associativity", {nm(a), nm(b), nm(c)}};
  DiscreteMonoid m;
  m.title_ = std::move(title);
  m.names_ = std::move(roster);
  m.unit_ = unit;
  m.table_ = std::move(table);
  return m;
}

std::optional<AxiomViolation> check_monoid_map(const MonoidMap& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (f.map.size() != s.size()) return AxiomViolation{"totality", {}};
  for (int x : f.map)
    if (x < 0 || x >= static_cast<int>(t.size())) return AxiomViolation{"totality", {std::to_string(x)}};
  if (f(s.unit()) != t.unit()) return AxiomViolation{"unit preserved", {s.name(s.unit())}};
  for (int a = 0; a < static_cast<int>(s.size()); ++a)
    for (int b = 0; b < static_cast<int>(s.size()); ++b)
      if (f(s.mul(a, b)) != t.mul(f(a), f(b))) return AxiomViolation{"multiplicative", {s.name(a), s.name(b)}};
  return std::nullopt;
}

Checked<TwoSidedAction> check_action(MonoidPtr monoid, std::vector<std::string> carrier, Table left, Table right) {
  const int ng = static_cast<int>(monoid->size());
  const int nx = static_cast<int>(carrier.size());
  if (left.size() != static_cast<std::size_t>(ng)) return AxiomViolation{"left totality", {}};
  for (const auto& row : left) {
    if (row.size() != static_cast<std::size_t>(nx)) return AxiomViolation{"left totality", {}};
    for (int v : row)
      if (v < 0 || v >= nx) return AxiomViolation{"left totality", {std::to_string(v)}};
  }
  if (right.size() != static_cast<std::size_t>(nx)) return AxiomViolation{"right totality", {}};
  for (const auto& row : right) {
    if (row.size() != static_cast<std::size_t>(ng)) return AxiomViolation{"right totality", {}};
    for (int v : row)
      if (v < 0 || v >= nx) return AxiomViolation{"right totality", {std::to_string(v)}};
  }
  TwoSidedAction a{std::move(monoid), std::move(carrier), std::move(left), std::move(right)};
  const auto& G = *a.monoid;
  auto gx = [&](int g) { return G.name(g); };
  auto xx = [&](int x) { return a.carrier[static_cast<std::size_t>(x)]; };
  for (int x = 0; x < nx; ++x) {
    if (a.act_left(G.unit(), x) != x) return AxiomViolation{"left unit", {xx(x)}};
    if (a.act_right(x, G.unit()) != x) return AxiomViolation{"right unit", {xx(x)}};
  }
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h)
      for (int x = 0; x < nx; ++x) {
        if (a.act_left(g, a.act_left(h, x)) != a.act_left(G.mul(g, h), x))
          return AxiomViolation{"left associativity", {gx(g), gx(h), xx(x)}};
        if (a.act_right(a.act_right(x, g), h) != a.act_right(x, G.mul(g, h)))
          return AxiomViolation{"right associativity", {xx(x), gx(g), gx(h)}};
      }
  for (int g = 0; g < ng; ++g)
    for (int x = 0; x < nx; ++x)
      for (int h = 0; h < ng; ++h)
        if (a.act_right(a.act_left(g, x), h) != a.act_left(g, a.act_right(x, h)))
          return AxiomViolation{"compatibility", {gx(g), xx(x), gx(h)}};
  return a;
}

std::optional<int> OperationSituation::preimage(int m) const {
  const int h = preimage_.at(static_cast<std::size_t>(m));
  if (h < 0) return std::nullopt;
  return h;
}

int OperationSituation::star(int m, int m2) const {
  const auto h = preimage(m);
  const auto h2 = preimage(m2);
  if (h && h2) return iota_[static_cast<std::size_t>(monoid()->mul(*h, *h2))];
  if (h) return action_->act_left(*h, m2);
  if (h2) return action_->act_right(m, *h2);
  throw InvariantError("product of two elements outside the image of H: " + carrier_name(m) + ", " +
                       carrier_name(m2));
}

Checked<OperationSituation> make_situation(ActionPtr action, std::vector<int> iota) {
  const auto& H = *action->monoid;
  const int nh = static_cast<int>(H.size());
  const int nm = static_cast<int>(action->size());
  if (iota.size() != H.size()) return AxiomViolation{"embedding totality", {}};
  std::vector<int> preimage(static_cast<std::size_t>(nm), -1);
  for (int h = 0; h < nh; ++h) {
    const int m = iota[static_cast<std::size_t>(h)];
    if (m < 0 || m >= nm) return AxiomViolation{"embedding totality", {H.name(h)}};
    if (preimage[static_cast<std::size_t>(m)] >= 0)
      return AxiomViolation{"embedding injective", {H.name(preimage[static_cast<std::size_t>(m)]), H.name(h)}};
    preimage[static_cast<std::size_t>(m)] = h;
  }
  for (int h = 0; h < nh; ++h)
    for (int k = 0; k < nh; ++k) {
      const int prod = iota[static_cast<std::size_t>(H.mul(h, k))];
      if (action->act_left(h, iota[static_cast<std::size_t>(k)]) != prod)
        return AxiomViolation{"embedding left equivariant", {H.name(h), H.name(k)}};
      if (action->act_right(iota[static_cast<std::size_t>(h)], k) != prod)
        return AxiomViolation{"embedding right equivariant", {H.name(h), H.name(k)}};
    }
  OperationSituation s;
  s.action_ = std::move(action);
  s.iota_ = std::move(iota);
  s.preimage_ = std::move(preimage);
  return s;
}

Checked<GAugmentedSituation> augment(SituationPtr situation, MonoidPtr group, ActionPtr on_monoid,
                                     ActionPtr on_carrier) {
  const auto& S = *situation;
  const auto& H = *S.monoid();
  const auto& G = *group;
  if (on_monoid->monoid.get() != group.get() || on_carrier->monoid.get() != group.get())
    return AxiomViolation{"acting monoid", {G.title()}};
  if (on_monoid->size() != H.size()) return AxiomViolation{"action on H has the wrong carrier", {}};
  if (on_carrier->size() != S.carrier_size()) return AxiomViolation{"action on M has the wrong carrier", {}};
  if (auto c = check_action(group, on_monoid->carrier, on_monoid->left, on_monoid->right); !c)
    return AxiomViolation{"G on H: " + c.violation().axiom, c.violation().witness};
  if (auto c = check_action(group, on_carrier->carrier, on_carrier->left, on_carrier->right); !c)
    return AxiomViolation{"G on M: " + c.violation().axiom, c.violation().witness};
  const int ng = static_cast<int>(G.size());
  const int nh = static_cast<int>(H.size());
  const int nm = static_cast<int>(S.carrier_size());
  const auto& A = *on_monoid;
  const auto& B = *on_carrier;
  const auto& HM = *S.action();
  for (int g = 0; g < ng; ++g) {
    if (A.act_left(g, H.unit()) != H.unit()) return AxiomViolation{"G on H fixes the unit (left)", {G.name(g)}};
    if (A.act_right(H.unit(), g) != H.unit()) return AxiomViolation{"G on H fixes the unit (right)", {G.name(g)}};
    for (int h = 0; h < nh; ++h) {
      for (int k = 0; k < nh; ++k) {
        if (A.act_left(g, H.mul(h, k)) != H.mul(A.act_left(g, h), A.act_left(g, k)))
          return AxiomViolation{"G on H distributive (left)", {G.name(g), H.name(h), H.name(k)}};
        if (A.act_right(H.mul(h, k), g) != H.mul(A.act_right(h, g), A.act_right(k, g)))
          return AxiomViolation{"G on H distributive (right)", {H.name(h), H.name(k), G.name(g)}};
      }
      const int ih = S.iota()[static_cast<std::size_t>(h)];
      if (B.act_left(g, ih) != S.iota()[static_cast<std::size_t>(A.act_left(g, h))])
        return AxiomViolation{"embedding G-equivariant (left)", {G.name(g), H.name(h)}};
      if (B.act_right(ih, g) != S.iota()[static_cast<std::size_t>(A.act_right(h, g))])
        return AxiomViolation{"embedding G-equivariant (right)", {H.name(h), G.name(g)}};
      for (int m = 0; m < nm; ++m) {
        const auto& mn = S.carrier_name(m);
        if (B.act_left(g, HM.act_left(h, m)) != HM.act_left(A.act_left(g, h), B.act_left(g, m)))
          return AxiomViolation{"G distributes over H.M (left)", {G.name(g), H.name(h), mn}};
        if (B.act_left(g, HM.act_right(m, h)) != HM.act_right(B.act_left(g, m), A.act_left(g, h)))
          return AxiomViolation{"G distributes over M.H (left)", {G.name(g), mn, H.name(h)}};
        if (B.act_right(HM.act_left(h, m), g) != HM.act_left(A.act_right(h, g), B.act_right(m, g)))
          return AxiomViolation{"G distributes over H.M (right)", {H.name(h), mn, G.name(g)}};
        if (B.act_right(HM.act_right(m, h), g) != HM.act_right(B.act_right(m, g), A.act_right(h, g)))
          return AxiomViolation{"G distributes over M.H (right)", {mn, H.name(h), G.name(g)}};
      }
    }
  }
  return GAugmentedSituation{std::move(situation), std::move(group), std::move(on_monoid), std::move(on_carrier)};
}

namespace {

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

}  // namespace

Checked<DiscreteMonoid> semidirect_monoid(const MonoidPtr& group, const MonoidPtr& h, const TwoSidedAction& on_monoid) {
  const auto& G = *group;
  const auto& H = *h;
  if (on_monoid.monoid.get() != group.get()) return AxiomViolation{"acting monoid", {G.title()}};
  if (on_monoid.size() != H.size()) return AxiomViolation{"action carrier is H", {}};
  if (auto c = check_action(group, on_monoid.carrier, on_monoid.left, on_monoid.right); !c) return c.violation();
  const int ng = static_cast<int>(G.size());
  const int nh = static_cast<int>(H.size());
  for (int g = 0; g < ng; ++g) {
    if (on_monoid.act_left(g, H.unit()) != H.unit()) return AxiomViolation{"G on H fixes the unit (left)", {G.name(g)}};
    if (on_monoid.act_right(H.unit(), g) != H.unit())
      return AxiomViolation{"G on H fixes the unit (right)", {G.name(g)}};
    for (int a = 0; a < nh; ++a)
      for (int b = 0; b < nh; ++b) {
        if (on_monoid.act_left(g, H.mul(a, b)) != H.mul(on_monoid.act_left(g, a), on_monoid.act_left(g, b)))
          return AxiomViolation{"G on H distributive (left)", {G.name(g), H.name(a), H.name(b)}};
        if (on_monoid.act_right(H.mul(a, b), g) != H.mul(on_monoid.act_right(a, g), on_monoid.act_right(b, g)))
          return AxiomViolation{"G on H distributive (right)", {H.name(a), H.name(b), G.name(g)}};
      }
  }
  std::vector<std::string> names;
  for (int g = 0; g < ng; ++g)
    for (int a = 0; a < nh; ++a) names.push_back(pair_name(G.name(g), H.name(a)));
  Table table(names.size(), std::vector<int>(names.size()));
  for (int g = 0; g < ng; ++g)
    for (int a = 0; a < nh; ++a)
      for (int g2 = 0; g2 < ng; ++g2)
        for (int b = 0; b < nh; ++b) {
          const int first = G.mul(g, g2);
          const int second = H.mul(on_monoid.act_right(a, g2), on_monoid.act_left(g, b));
          table[static_cast<std::size_t>(g * nh + a)][static_cast<std::size_t>(g2 * nh + b)] = first * nh + second;
        }
  auto result = monoid_from_table(G.title() + " x| " + H.title(), std::move(names), G.unit() * nh + H.unit(),
                                  std::move(table));
  if (!result) throw InvariantError("semidirect product is not a monoid: " + result.violation().to_string());
  return result;
}

OperationSituation semidirect_opsit(const GAugmentedSituation& a) {
  const auto& S = *a.situation;
  const auto& G = *a.group;
  const auto H = S.monoid();
  const int ng = static_cast<int>(G.size());
  const int nh = static_cast<int>(H->size());
  const int nm = static_cast<int>(S.carrier_size());
  auto product = share(semidirect_monoid(a.group, H, *a.on_monoid).value());
  const auto& HM = *S.action();
  const auto& on_h = *a.on_monoid;
  const auto& on_m = *a.on_carrier;
  std::vector<std::string> carrier;
  for (int g = 0; g < ng; ++g)
    for (int m = 0; m < nm; ++m) carrier.push_back(pair_name(G.name(g), S.carrier_name(m)));
  const std::size_t np = product->size();
  Table left(np, std::vector<int>(carrier.size()));
  Table right(carrier.size(), std::vector<int>(np));
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < nh; ++h)
      for (int gh = 0; gh < ng; ++gh)
        for (int m = 0; m < nm; ++m) {
          const auto p = static_cast<std::size_t>(g * nh + h);
          const auto x = static_cast<std::size_t>(gh * nm + m);
          // (g,h).(gh,m) = (g gh, (h.gh).(g.m))
          left[p][x] = G.mul(g, gh) * nm + HM.act_left(on_h.act_right(h, gh), on_m.act_left(g, m));
          // (gh,m).(g,h) = (gh g, (m.g).(gh.h))
          right[x][p] = G.mul(gh, g) * nm + HM.act_right(on_m.act_right(m, g), on_h.act_left(gh, h));
        }
  auto action = check_action(product, std::move(carrier), std::move(left), std::move(right));
  if (!action) throw InvariantError("semidirect operation situation: " + action.violation().to_string());
  std::vector<int> iota;
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < nh; ++h) iota.push_back(g * nm + S.iota()[static_cast<std::size_t>(h)]);
  auto result = make_situation(share(std::move(action).value()), std::move(iota));
  if (!result) throw InvariantError("semidirect operation situation: " + result.violation().to_string());
  return std::move(result).value();
}

ConstantSimplicialMonoid lift_constant(MonoidPtr m, int truncation) { return ConstantSimplicialMonoid{std::move(m), truncation}; }

namespace builtin {

namespace {

MonoidPtr build(std::string title, std::vector<std::string> names, int unit, Table table) {
  return share(monoid_from_table(std::move(title), std::move(names), unit, std::move(table)).value());
}

}  // namespace

MonoidPtr cyclic(int n) {
  if (n < 1) throw Error("cyclic group order must be positive");
  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) names.push_back(k == 0 ? "1" : k == 1 ? "a" : "a" + std::to_string(k));
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return build("Z/" + std::to_string(n), std::move(names), 0, std::move(t));
}

MonoidPtr symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& q : perms) names.push_back({static_cast<char>('1' + q[0]), static_cast<char>('1' + q[1]), static_cast<char>('1' + q[2])});
  Table t(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(i)])];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return build("S3", std::move(names), 0, std::move(t));
}

MonoidPtr trivial() { return build("1", {"1"}, 0, {{0}}); }

MonoidPtr zero_monoid() { return build("{1,x,0}", {"1", "x", "0"}, 0, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}); }

MonoidPtr submonoid(const MonoidPtr& m, const std::vector<std::string>& elements) {
  std::vector<int> members;
  for (const auto& e : elements) {
    auto k = m->find(e);
    if (!k) throw Error("unknown element " + e + " of " + m->title());
    members.push_back(*k);
  }
  auto index = [&](int x) -> int {
    auto it = std::find(members.begin(), members.end(), x);
    if (it == members.end()) throw Error("subset of " + m->title() + " is not closed under multiplication");
    return static_cast<int>(it - members.begin());
  };
  Table t(members.size(), std::vector<int>(members.size()));
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = 0; b < members.size(); ++b) t[a][b] = index(m->mul(members[a], members[b]));
  std::string title = "{";
  for (std::size_t k = 0; k < elements.size(); ++k) title += (k ? "," : "") + elements[k];
  return build(title + "}", elements, index(m->unit()), std::move(t));
}

TwoSidedAction translation(const MonoidPtr& g) {
  const auto n = g->size();
  Table left(n, std::vector<int>(n)), right(n, std::vector<int>(n));
  for (int a = 0; a < static_cast<int>(n); ++a)
    for (int x = 0; x < static_cast<int>(n); ++x) {
      left[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)] = g->mul(a, x);
      right[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)] = g->mul(x, a);
    }
  return check_action(g, g->names(), std::move(left), std::move(right)).value();
}

TwoSidedAction pointed_translation(const MonoidPtr& g) {
  const auto n = g->size();
  auto carrier = g->names();
  carrier.push_back("+");
  Table left(n, std::vector<int>(n + 1)), right(n + 1, std::vector<int>(n));
  for (int a = 0; a < static_cast<int>(n); ++a) {
    for (int x = 0; x < static_cast<int>(n); ++x) {
      left[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)] = g->mul(a, x);
      right[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)] = g->mul(x, a);
    }
    left[static_cast<std::size_t>(a)][n] = static_cast<int>(n);
    right[n][static_cast<std::size_t>(a)] = static_cast<int>(n);
  }
  return check_action(g, std::move(carrier), std::move(left), std::move(right)).value();
}

TwoSidedAction trivial_action(const MonoidPtr& g, std::vector<std::string> carrier) {
  const auto n = g->size();
  const auto k = carrier.size();
  Table left(n, std::vector<int>(k)), right(k, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < k; ++x) {
      left[a][x] = static_cast<int>(x);
      right[x][a] = static_cast<int>(x);
    }
  return check_action(g, std::move(carrier), std::move(left), std::move(right)).value();
}

TwoSidedAction restricted_translation(const MonoidPtr& sub, const MonoidPtr& m) {
  const auto ns = sub->size();
  const auto nm = m->size();
  Table left(ns, std::vector<int>(nm)), right(nm, std::vector<int>(ns));
  for (int a = 0; a < static_cast<int>(ns); ++a) {
    const int am = *m->find(sub->name(a));
    for (int x = 0; x < static_cast<int>(nm); ++x) {
      left[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)] = m->mul(am, x);
      right[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)] = m->mul(x, am);
    }
  }
  return check_action(sub, m->names(), std::move(left), std::move(right)).value();
}

OperationSituation self_situation(const MonoidPtr& h) {
  std::vector<int> iota(h->size());
  std::iota(iota.begin(), iota.end(), 0);
  return make_situation(share(translation(h)), std::move(iota)).value();
}

OperationSituation pointed_situation(std::vector<std::string> carrier, int basepoint) {
  return make_situation(share(trivial_action(trivial(), std::move(carrier))), {basepoint}).value();
}

OperationSituation submonoid_situation(const MonoidPtr& sub, const MonoidPtr& m) {
  std::vector<int> iota;
  for (const auto& name : sub->names()) iota.push_back(*m->find(name));
  return make_situation(share(restricted_translation(sub, m)), std::move(iota)).value();
}

GAugmentedSituation translation_instance(const MonoidPtr& g) {
  auto carrier = pointed_translation(g);
  auto situation = share(pointed_situation(carrier.carrier, static_cast<int>(g->size())));
  auto on_h = share(trivial_action(g, {"1"}));
  return augment(std::move(situation), g, std::move(on_h), share(std::move(carrier))).value();
}

}  // namespace builtin

}  // namespace cybar
