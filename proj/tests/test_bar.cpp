#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "cybar/bar.hpp"
#include "cybar/constructions.hpp"
#include "cybar/error.hpp"
#include "cybar/homology.hpp"

using namespace cybar;

namespace {

const TupleFunction identity_fn = [](int, const Tuple& t) { return t; };

/// H_n of the periodic resolution of Z over Z[Z/n] tensored down to Z:
/// Z <-0- Z <-n- Z <-0- Z <-n- ...
std::string periodic_oracle(int order, int degree) {
  if (degree == 0) return "Z";
  return degree % 2 == 1 ? "Z/" + std::to_string(order) : "0";
}

std::size_t conjugacy_classes(const DiscreteMonoid& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::size_t count = 0;
  for (int x = 0; x < n; ++x) {
    if (cls[static_cast<std::size_t>(x)] >= 0) continue;
    for (int h = 0; h < n; ++h) cls[static_cast<std::size_t>(g.mul(g.mul(h, x), *g.inverse(h)))] = static_cast<int>(count);
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("nerve of Z/2 has one nondegenerate simplex per degree", "[bar]") {
  const auto x = nerve(builtin::cyclic(2), 4);
  for (int n = 0; n <= 4; ++n) CHECK(x->size(n) == 1);
  CHECK(validate_identities(nerve_model(builtin::cyclic(2), 4)).ok());
  CHECK(x->simplex_count(3) == 8);
}

TEST_CASE("nerve of the trivial monoid is a point", "[bar]") {
  const auto x = nerve(builtin::trivial(), 3);
  for (int n = 0; n <= 3; ++n) CHECK(x->size(n) == (n == 0 ? 1u : 0u));
}

TEST_CASE("group homology of cyclic groups matches the periodic resolution", "[bar]") {
  for (int order : {2, 3, 4}) {
    const auto chains = normalized_chains(*nerve(builtin::cyclic(order), 4));
    for (int q = 0; q <= 3; ++q) {
      INFO("Z/" << order << " degree " << q);
      const auto h = homology(chains, q);
      CHECK(h.reliable);
      CHECK(h.to_string() == periodic_oracle(order, q));
    }
  }
}

TEST_CASE("wedge rosters", "[bar]") {
  const auto z4 = builtin::cyclic(4);
  const auto sub = builtin::submonoid(z4, {"1", "a2"});
  const auto s = builtin::submonoid_situation(sub, z4);
  CHECK(wedge_tuples(s, 0).size() == 1);
  CHECK(wedge_tuples(s, 1).size() == 4);
  CHECK(wedge_tuples(s, 2).size() == 12);

  const auto zero = builtin::zero_monoid();
  const auto self = builtin::self_situation(zero);
  CHECK(wedge_tuples(self, 3).size() == 27);
  CHECK(validate_identities(wedge_model(share(s), 4)).ok());
}

TEST_CASE("the wedge of H over H is the nerve of H", "[bar]") {
  for (const auto& h : {builtin::cyclic(2), builtin::cyclic(3), builtin::zero_monoid()}) {
    INFO(h->title());
    const auto wedge = wedge_model(share(builtin::self_situation(h)), 4);
    const auto bar = nerve_model(h, 4);
    CHECK(validate_identities(wedge).ok());
    CHECK(validate_tuple_map(bar, wedge, identity_fn).ok());
    CHECK(check_degreewise_bijection(bar, wedge, identity_fn).bijective);
  }
}

TEST_CASE("generalized wedge is constant vertically", "[bar]") {
  const auto s = share(builtin::self_situation(builtin::cyclic(2)));
  const auto b = generalized_wedge(s, 3, 2);
  CHECK(validate_identities(b).ok());
  for (int q = 0; q <= 2; ++q) CHECK(b.size(2, q) == 4);
}

TEST_CASE("partial monoid counterexample", "[bar]") {
  const auto m = builtin::zero_monoid();
  const auto a = builtin::submonoid(m, {"1", "0"});
  const int x = *m->find("x");
  const int zero = *m->find("0");
  const Tuple witness{x, zero, x};
  const auto report = partial_monoid_discrepancy(m, a, 3);
  CHECK(std::count(report.only_composable.begin(), report.only_composable.end(), witness) == 1);
  CHECK(report.only_wedge.empty());
  CHECK_FALSE(is_wedge_tuple(builtin::submonoid_situation(a, m), witness));

  const auto p1 = partial_monoid_discrepancy(m, a, 1);
  CHECK(p1.composable == 3);
  CHECK(p1.wedge == 3);
  const std::vector<int> all{0, 1, 2};
  CHECK(composable_tuples(*m, all, 3).size() == 27);
}

TEST_CASE("cyclic bar over a point is the nerve", "[bar]") {
  const auto g = builtin::symmetric3();
  const auto pt = share(builtin::trivial_action(g, {"*"}));
  const auto cy = cyclic_bar_model(pt, 3);
  const auto bar = nerve_model(g, 3);
  const TupleFunction drop = [](int, const Tuple& t) { return Tuple(t.begin(), t.end() - 1); };
  CHECK(validate_identities(cy).ok());
  CHECK(validate_tuple_map(cy, bar, drop).ok());
  CHECK(check_degreewise_bijection(cy, bar, drop).bijective);
}

TEST_CASE("components of the cyclic bar are conjugacy classes", "[bar]") {
  for (const auto& g : {builtin::cyclic(2), builtin::cyclic(4), builtin::symmetric3()}) {
    INFO(g->title());
    const auto x = cyclic_bar(share(builtin::translation(g)), 2);
    CHECK(validate_identities(*x).ok());
    CHECK(pi0(*x) == conjugacy_classes(*g));
  }
  CHECK(pi0(*cyclic_bar(share(builtin::translation(builtin::symmetric3())), 1)) == 3);
}

TEST_CASE("G acts coordinatewise on the wedge", "[bar]") {
  const auto a = builtin::translation_instance(builtin::cyclic(2));
  const auto act = wedge_action(a, 2);
  CHECK(act.size() == wedge_tuples(*a.situation, 2).size());
  const int g = *a.group->find("a");
  for (std::size_t k = 0; k < act.size(); ++k) {
    Tuple t = wedge_tuples(*a.situation, 2)[k];
    for (auto& m : t) m = a.on_carrier->act_left(g, m);
    CHECK(wedge_tuples(*a.situation, 2)[static_cast<std::size_t>(act.act_left(g, static_cast<int>(k)))] == t);
  }
}

TEST_CASE("trivial G-action on the wedge is trivial", "[bar]") {
  const auto h = builtin::cyclic(3);
  const auto g = builtin::cyclic(2);
  const auto s = share(builtin::self_situation(h));
  const auto aug = augment(s, g, share(builtin::trivial_action(g, h->names())),
                           share(builtin::trivial_action(g, s->action()->carrier)))
                       .value();
  const auto act = wedge_action(aug, 2);
  for (int x = 0; x < static_cast<int>(act.size()); ++x) {
    CHECK(act.act_left(1, x) == x);
    CHECK(act.act_right(x, 1) == x);
  }
}

TEST_CASE("comparison maps for translation instances", "[bar]") {
  for (const auto& g : {builtin::cyclic(2), builtin::cyclic(3), builtin::cyclic(4), builtin::symmetric3()}) {
    INFO(g->title());
    const Comparison c(builtin::translation_instance(g), g->size() == 6 ? 3 : 4);
    for (const auto& r : verify_comparison(c, g->title())) {
      INFO(r.check << " " << r.witness);
      CHECK(r.status == Status::pass);
    }
  }
}

TEST_CASE("comparison map in degree one", "[bar]") {
  const auto g = builtin::symmetric3();
  const Comparison c(builtin::translation_instance(g), 1);
  const auto& B = *c.augmented().on_carrier;
  const int nm = static_cast<int>(B.size());
  for (int x = 0; x < 6; ++x)
    for (int m = 0; m < nm; ++m) {
      const int expected = B.act_left(x, B.act_right(m, x));
      CHECK(c.comparison_map(1, Tuple{x, m}) == Tuple{x * nm + expected});
    }
}

TEST_CASE("right factors are shear maps of the wedge action", "[bar]") {
  const auto aug = builtin::translation_instance(builtin::symmetric3());
  const Comparison c(aug, 3);
  const int n = 3;
  for (int i = 1; i <= n; ++i) {
    const auto tails = wedge_tuples(*aug.situation, n - i + 1);
    const auto act = wedge_action(aug, n - i + 1);
    for (const auto& t : c.elements(n)) {
      const auto r = c.right_factor(i, n, t);
      const Tuple tail(t.begin() + n + i - 1, t.end());
      const int k = static_cast<int>(std::find(tails.begin(), tails.end(), tail) - tails.begin());
      const int g = t[static_cast<std::size_t>(i - 1)];
      const int sheared = shear(act, Side::right, g * static_cast<int>(act.size()) + k);
      CHECK(Tuple(r.begin() + n + i - 1, r.end()) == tails[static_cast<std::size_t>(sheared % static_cast<int>(act.size()))]);
    }
  }
}

TEST_CASE("intermediate object satisfies the simplicial identities", "[bar]") {
  for (const auto& g : {builtin::cyclic(2), builtin::cyclic(3), builtin::symmetric3()})
    CHECK_NOTHROW(intermediate_T(builtin::translation_instance(g), 3));
}

TEST_CASE("intermediate object for trivial G is the wedge", "[bar]") {
  const auto s = share(builtin::self_situation(builtin::cyclic(3)));
  const auto g = builtin::trivial();
  const auto aug = augment(s, g, share(builtin::trivial_action(g, s->monoid()->names())),
                           share(builtin::trivial_action(g, s->action()->carrier)))
                       .value();
  const auto t = intermediate_T(aug, 3);
  const auto wedge = wedge_model(s, 3);
  const TupleFunction drop = [](int n, const Tuple& x) { return Tuple(x.begin() + n, x.end()); };
  CHECK(validate_tuple_map(t, wedge, drop).ok());
  CHECK(check_degreewise_bijection(t, wedge, drop).bijective);
}

TEST_CASE("comparison map is a homology isomorphism", "[bar]") {
  const Comparison c(builtin::translation_instance(builtin::cyclic(2)), 3);
  const Materialized source(c.source_model());
  const Materialized target(c.target_model());
  const auto f = realize_map(source, target,
                             [&c](int n, const Tuple& t) { return c.comparison_map(n, t); });
  CHECK(cone_acyclic_through(chain_map(f), 2));
}

TEST_CASE("shear dichotomy", "[bar]") {
  for (const auto& g : {builtin::cyclic(3), builtin::symmetric3()}) {
    const auto r = shear_report(builtin::translation(g), Side::left);
    CHECK(r.bijective());
    CHECK(shear_report(builtin::translation(g), Side::right).bijective());
  }
  const auto zero = builtin::zero_monoid();
  const auto t = builtin::translation(zero);
  const int x = *zero->find("x");
  std::multiset<int> images;
  for (int m = 0; m < 3; ++m) images.insert(shear(t, Side::left, x * 3 + m) % 3);
  CHECK(images == std::multiset<int>{x, *zero->find("0"), *zero->find("0")});
  const auto r = shear_report(t, Side::left);
  CHECK_FALSE(r.injective);
  CHECK_FALSE(r.witness.empty());

  const auto triv = builtin::trivial_action(builtin::cyclic(3), {"p", "q"});
  for (int p = 0; p < 6; ++p) CHECK(shear(triv, Side::left, p) == p);
}

TEST_CASE("comparison for a monoid that is not a group is flagged, not failed", "[bar]") {
  const auto m = builtin::zero_monoid();
  const auto aug = builtin::translation_instance(m);
  const Comparison c(aug, 2);
  for (const auto& r : verify_comparison(c, "zero")) {
    INFO(r.check);
    CHECK(r.status != Status::fail);
  }
}

TEST_CASE("naturality of the comparison map", "[bar]") {
  const auto z2 = builtin::cyclic(2);
  const auto z4 = builtin::cyclic(4);
  const auto a2 = builtin::translation_instance(z2);
  const Comparison c2(a2, 3);
  std::vector<int> id_m(a2.situation->carrier_size());
  std::iota(id_m.begin(), id_m.end(), 0);
  const MonoidMap id_g{z2, z2, {0, 1}};
  const SituationMap id_s{a2.situation, a2.situation, {0}, id_m};
  CHECK(naturality_check(c2, c2, id_g, id_s).status == Status::pass);

  // Z/2 -> Z/4, a -> a2, acting on Z/4 plus a fixed basepoint
  const auto a4 = builtin::translation_instance(z4);
  const auto sub = builtin::submonoid(z4, {"1", "a2"});
  const auto restricted = share(check_action(sub, a4.on_carrier->carrier,
                                             Table{a4.on_carrier->left[0], a4.on_carrier->left[2]},
                                             [&] {
                                               Table t;
                                               for (const auto& row : a4.on_carrier->right) t.push_back({row[0], row[2]});
                                               return t;
                                             }())
                                    .value());
  const auto aug = augment(a4.situation, sub, share(builtin::trivial_action(sub, {"1"})), restricted).value();
  const Comparison from(aug, 3);
  const Comparison to(a4, 3);
  std::vector<int> id4(a4.situation->carrier_size());
  std::iota(id4.begin(), id4.end(), 0);
  const MonoidMap inclusion{sub, z4, {0, 2}};
  const SituationMap f{a4.situation, a4.situation, {0}, id4};
  const auto rec = naturality_check(from, to, inclusion, f);
  INFO(rec.witness);
  CHECK(rec.status == Status::pass);

  const MonoidMap wrong{sub, z4, {0, 0}};
  CHECK(naturality_check(from, to, wrong, f).status == Status::fail);
}

TEST_CASE("suspension via the wedge of a pointed simplicial set", "[bar]") {
  const SetPtr circle = std::make_shared<SimplicialSet>(simplicial_circle(4));
  const SetPtr two = std::make_shared<SimplicialSet>(wedge(circle, circle));
  const SetPtr rp = std::make_shared<SimplicialSet>(nerve(builtin::cyclic(2), 3)->skeleton(3).with_truncation(4));
  for (const auto& m : {circle, two, rp}) {
    const auto b = std::make_shared<BisimplicialSet>(pointed_wedge(m, 4));
    REQUIRE(validate_identities(*b).ok());
    const auto chains = normalized_chains(diagonal(b));
    const auto base = normalized_chains(*m);
    for (int q = 0; q + 1 <= 3; ++q) CHECK(reduced_homology(chains, q + 1).to_string() == reduced_homology(base, q).to_string());
    CHECK(reduced_homology(chains, 0).trivial());
  }
  const auto s = std::make_shared<BisimplicialSet>(pointed_wedge(circle, 4));
  CHECK(homological_connectivity(diagonal(s)).value == 1);
}

TEST_CASE("partial diagonal of the cyclic bar of the wedge", "[bar]") {
  const auto aug = builtin::translation_instance(builtin::cyclic(2));
  const auto t = cyclic_bar_of_wedge(aug, 3);
  CHECK(validate_identities(t).ok());
  const auto b = partial_diagonal(t, {0, 2});
  CHECK(validate_identities(b).ok());
  for (int p = 0; p <= 3; ++p)
    CHECK(b.size(2, p) == 4 * wedge_tuples(*aug.situation, p).size());

  const Comparison c(aug, 3);
  const auto diag = triple_diagonal_model(t);
  for (int n = 0; n <= 3; ++n) CHECK(diag.elements(n).size() == c.elements(n).size());
  const auto cyc = Materialized(diag).set();
  const auto src = Materialized(c.source_model()).set();
  for (int q = 0; q <= 2; ++q)
    CHECK(homology(normalized_chains(*cyc), q).to_string() == homology(normalized_chains(*src), q).to_string());
}
