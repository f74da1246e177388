#include <catch_amalgamated.hpp>

#include "cybar/bisimplicial.hpp"
#include "cybar/constructions.hpp"
#include "cybar/error.hpp"
#include "cybar/identities.hpp"
#include "cybar/serialization.hpp"

using namespace cybar;

namespace {

std::vector<std::size_t> nondegenerate_counts(const SimplicialSet& x) {
  std::vector<std::size_t> out;
  for (int n = 0; n <= x.truncation(); ++n) out.push_back(x.size(n));
  return out;
}

}  // namespace

TEST_CASE("degeneracy words stay canonical") {
  CHECK(apply_degeneracy({}, 0) == Word{0});
  CHECK(apply_degeneracy({0}, 0) == Word{1, 0});
  CHECK(apply_degeneracy({1}, 0) == Word{2, 0});
  CHECK(apply_degeneracy({1, 0}, 3) == Word{3, 1, 0});
  CHECK(is_canonical_word({3, 1, 0}));
  CHECK_FALSE(is_canonical_word({0, 1}));
}

TEST_CASE("standard simplices") {
  CHECK(nondegenerate_counts(std_simplex(1, 1)) == std::vector<std::size_t>{2, 1});
  CHECK(nondegenerate_counts(std_simplex(2, 2)) == std::vector<std::size_t>{3, 3, 1});
  const auto pt = point(4);
  for (int n = 0; n <= 4; ++n) CHECK(pt.simplex_count(n) == 1);
  CHECK_THROWS_AS(std_simplex(3, 2), TruncationError);
  for (int n = 0; n <= 3; ++n) CHECK(validate_identities(std_simplex(n, 4)).ok());
}

TEST_CASE("simplicial circle") {
  const auto s1 = simplicial_circle(3);
  CHECK(nondegenerate_counts(s1) == std::vector<std::size_t>{1, 1, 0, 0});
  CHECK(pi0(s1) == 1);
  CHECK(validate_identities(s1).ok());
  CHECK(s1.simplex_count(2) == 3);
}

TEST_CASE("product of intervals has two nondegenerate triangles") {
  auto d1 = share(std_simplex(1, 3));
  auto p = product(d1, d1);
  CHECK(p.set->size(2) == 2);
  CHECK(p.set->size(3) == 0);
  CHECK(validate_identities(*p.set).ok());
  CHECK(validate_map(p.first).ok());
  CHECK(validate_map(p.second).ok());
}

TEST_CASE("product with a point") {
  auto s1 = share(simplicial_circle(3));
  auto p = product(s1, share(point(3)));
  CHECK(nondegenerate_counts(*p.set) == nondegenerate_counts(*s1));
}

TEST_CASE("quotient of the interval by its boundary") {
  auto d1 = share(std_simplex(1, 3));
  auto q = quotient(d1, [](int degree, int) { return degree == 0; });
  CHECK(nondegenerate_counts(*q.set) == nondegenerate_counts(simplicial_circle(3)));
  CHECK(validate_map(q.projection).ok());
}

TEST_CASE("wedge, smash and disjoint union") {
  auto s1 = share(simplicial_circle(3));
  const auto w = wedge(s1, s1);
  CHECK(nondegenerate_counts(w) == std::vector<std::size_t>{1, 2, 0, 0});
  CHECK(validate_identities(w).ok());
  const auto sm = smash(s1, s1);
  CHECK(validate_identities(sm).ok());
  CHECK(sm.size(0) == 1);
  CHECK(sm.size(1) == 1);
  CHECK(sm.size(2) == 2);
  const auto du = disjoint_union(s1, s1);
  CHECK(pi0(du) == 2);
}

TEST_CASE("pushout of the boundary inclusion along a collapse") {
  auto d1 = share(std_simplex(1, 3));
  auto boundary = share(from_complex({{0}, {1}}, 3));
  auto pt = share(point(3));
  auto f = inclusion_by_name(boundary, d1);
  auto g = constant_map(boundary, pt);
  auto po = pushout(f, g);
  CHECK(nondegenerate_counts(*po.set) == std::vector<std::size_t>{1, 1, 0, 0});
  CHECK(validate_map(po.from_b).ok());
  CHECK(validate_map(po.from_c).ok());
  auto id = SimplicialMap::identity(boundary);
  CHECK_THROWS(pushout(g, id));
}

TEST_CASE("pushout along the identity") {
  auto x = share(from_complex({{0, 1}, {1, 2}}, 3));
  auto c = share(simplicial_circle(3));
  auto id = SimplicialMap::identity(x);
  auto g = constant_map(x, c);
  auto po = pushout(id, g);
  CHECK(nondegenerate_counts(*po.set) == nondegenerate_counts(*c));
}

TEST_CASE("a corrupted face table is caught") {
  auto x = from_complex({{0, 1, 2}}, 3);
  CHECK(validate_identities(x).ok());
  const auto triangle = *x.find(2, "0.1.2");
  const auto edge = *x.find(1, "0.1");
  x.set_face(2, triangle, 0, Simplex{1, edge, {}});
  const auto report = validate_identities(x);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().identity == "d0d1");
}

TEST_CASE("diagonal of an external product is the product") {
  auto s1 = share(simplicial_circle(3));
  auto d1 = share(std_simplex(1, 3));
  auto b = std::make_shared<const BisimplicialSet>(external_product(d1, s1));
  CHECK(validate_identities(*b).ok());
  const auto diag = diagonal(b);
  const auto prod = product(d1, s1);
  CHECK(nondegenerate_counts(diag) == nondegenerate_counts(*prod.set));
  CHECK(validate_identities(diag).ok());
}

TEST_CASE("external smash and constant bisimplicial sets") {
  auto s1 = share(simplicial_circle(3));
  auto b = std::make_shared<const BisimplicialSet>(external_smash(s1, s1));
  CHECK(validate_identities(*b).ok());
  auto c = std::make_shared<const BisimplicialSet>(constant_horizontal(s1, 3));
  CHECK(validate_identities(*c).ok());
  CHECK(nondegenerate_counts(diagonal(c)) == nondegenerate_counts(*s1));
}

TEST_CASE("trisimplicial diagonals") {
  auto d1 = share(std_simplex(1, 2));
  auto s1 = share(simplicial_circle(2));
  auto t = external_triple(d1, s1, d1);
  CHECK(validate_identities(t).ok());
  auto b = std::make_shared<const BisimplicialSet>(partial_diagonal(t, {0, 1}));
  CHECK(validate_identities(*b).ok());
  Materialized full(triple_diagonal_model(t));
  const auto two_step = diagonal(b);
  CHECK(nondegenerate_counts(*full.set()) == nondegenerate_counts(two_step));
  CHECK_THROWS(partial_diagonal(t, {1, 1}));
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(simplicial_circle(3)) == 0);
  CHECK(euler_characteristic(std_simplex(2, 3)) == 1);
}

TEST_CASE("text format round trip is byte stable", "[serialization]") {
  const SetPtr circle = std::make_shared<SimplicialSet>(simplicial_circle(3));
  const std::vector<SimplicialSet> samples{simplicial_circle(3), minimal_sphere(2, 3), std_simplex(2, 3),
                                           from_complex({{0, 1, 2}, {2, 3}}, 3), wedge(circle, circle), point(2)};
  for (const auto& x : samples) {
    const auto text = write_sset(x);
    const auto back = read_sset(text);
    CHECK(write_sset(back) == text);
    CHECK(back.basepoint() == x.basepoint());
    for (int n = 0; n <= x.truncation(); ++n) CHECK(back.simplex_count(n) == x.simplex_count(n));
  }
  CHECK(write_sset(simplicial_circle(1)) == "sset N=1\nbase *\ndeg 0: *\ndeg 1: e\nd 0 e = |*\nd 1 e = |*\n");
}

TEST_CASE("text format errors carry line numbers", "[serialization]") {
  try {
    (void)read_sset("sset N=1\ndeg 0: *\ndeg 1: e\nd 0 e = |*\nd 1 e = |v\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }
  CHECK_THROWS_AS(read_sset("sset N=1\ndeg 0: *\ndeg 1: e\nd 0 e = |*\n"), ParseError);
  CHECK_THROWS_AS(read_sset("deg 0: *\n"), ParseError);
  CHECK_THROWS_AS(read_sset("sset N=2\ndeg 0: *\ndeg 1:\ndeg 2: s\nd 0 s = 0,1|*\nd 1 s = 1,0|*\nd 2 s = 1,0|*\n"), ParseError);
}
