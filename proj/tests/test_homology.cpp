#include <catch_amalgamated.hpp>

#include <random>

#include "cybar/constructions.hpp"
#include "cybar/error.hpp"
#include "cybar/homology.hpp"
#include "snf_oracle.hpp"

using namespace cybar;
using namespace cybar::testing;

namespace {

HomologyGroup group(std::size_t betti, std::vector<long> torsion = {}) {
  HomologyGroup h;
  h.betti = betti;
  for (long t : torsion) h.torsion.emplace_back(t);
  return h;
}

std::vector<std::string> table(const SimplicialSet& x, int upto, bool reduced = false) {
  std::vector<std::string> out;
  for (const auto& row : homology_table(x, upto, reduced)) out.push_back(row.group.to_string());
  return out;
}

}  // namespace

TEST_CASE("Smith normal form on fixed matrices") {
  IntMatrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 4;
  a(1, 0) = 6;
  a(1, 1) = 8;
  const auto s = smith_normal_form(a);
  CHECK(s.rank == 2);
  CHECK(s.factors == std::vector<mpz_class>{2, 4});
  CHECK(smith_normal_form(IntMatrix(3, 4)).rank == 0);
  const auto id = smith_normal_form(IntMatrix::identity(5));
  CHECK(id.rank == 5);
  CHECK(id.factors == std::vector<mpz_class>(5, 1));
}

TEST_CASE("Smith normal form survives 64-bit overflow") {
  IntMatrix a(3, 3);
  const std::int64_t big = 3'000'000'000'000'000'000;
  a(0, 0) = big;
  a(0, 1) = big - 1;
  a(1, 0) = big - 7;
  a(1, 1) = big + 11;
  a(2, 2) = 6;
  const auto s = smith_normal_form(a);
  CHECK(s.rank == 3);
  CHECK(s.factors == reference_snf(a));
}

TEST_CASE("Smith normal form agrees with the reference on random matrices") {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_matrix(rng);
    const auto s = smith_normal_form(a);
    const auto expected = reference_snf(a);
    REQUIRE(s.factors == expected);
    for (std::size_t k = 1; k < s.factors.size(); ++k) REQUIRE(s.factors[k] % s.factors[k - 1] == 0);
    if (a.rows() <= 5 && a.cols() <= 5) {
      mpz_class product = 1;
      for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
        if (k <= s.rank) product *= s.factors[k - 1];
        REQUIRE(determinantal_divisor(a, k) == (k <= s.rank ? product : 0));
      }
    }
  }
}

TEST_CASE("normalized chains") {
  const auto s1 = normalized_chains(simplicial_circle(3));
  CHECK(s1.boundary[1].rows() == 1);
  CHECK(s1.boundary[1].cols() == 1);
  CHECK(s1.boundary[1](0, 0) == 0);
  const auto pt = normalized_chains(point(3));
  for (int n = 1; n <= 3; ++n) CHECK(pt.dim(n) == 0);
  CHECK(boundary_defects(normalized_chains(std_simplex(3, 4))).empty());
}

TEST_CASE("homology of standard objects") {
  auto s1 = share(simplicial_circle(3));
  CHECK(table(*s1, 2) == std::vector<std::string>{"Z", "Z", "0"});
  CHECK(reduced_homology(normalized_chains(*s1), 0).trivial());
  CHECK(homology(normalized_chains(*s1), 1) == group(1));

  const auto torus = product(s1, s1);
  CHECK(table(*torus.set, 2) == std::vector<std::string>{"Z", "Z^2", "Z"});
  CHECK(table(smash(s1, s1), 2, true) == std::vector<std::string>{"0", "0", "Z"});
  CHECK(table(wedge(s1, s1), 2) == std::vector<std::string>{"Z", "Z^2", "0"});
  CHECK(table(std_simplex(3, 4), 3) == std::vector<std::string>{"Z", "0", "0", "0"});
}

TEST_CASE("homology beyond the truncation is flagged") {
  const auto c = normalized_chains(simplicial_circle(2));
  CHECK(homology(c, 1).reliable);
  CHECK_FALSE(homology(c, 2).reliable);
  CHECK_THROWS_AS(homology(c, 3), TruncationError);
}

TEST_CASE("pushouts by homology") {
  auto d1 = share(std_simplex(1, 3));
  auto boundary = share(from_complex({{0}, {1}}, 3));
  auto pt = share(point(3));
  const auto circle = pushout(inclusion_by_name(boundary, d1), constant_map(boundary, pt));
  CHECK(homology(normalized_chains(*circle.set), 1) == group(1));

  auto cone_b = share(cone(*boundary, 3));
  const auto suspension = pushout(inclusion_by_name(boundary, cone_b), inclusion_by_name(boundary, cone_b));
  CHECK(table(*suspension.set, 2) == std::vector<std::string>{"Z", "Z", "0"});
}

TEST_CASE("H_0 counts components") {
  auto s1 = share(simplicial_circle(3));
  const auto two = disjoint_union(s1, s1);
  CHECK(homology(normalized_chains(two), 0).betti == pi0(two));
}

TEST_CASE("Euler characteristic matches Betti numbers") {
  auto s1 = share(simplicial_circle(4));
  for (const auto& x : {*product(s1, s1).set, wedge(s1, s1), std_simplex(2, 4), smash(s1, s1)}) {
    long alternating = 0;
    for (const auto& row : homology_table(x, 3)) alternating += (row.degree % 2 ? -1 : 1) * static_cast<long>(row.group.betti);
    CHECK(alternating == euler_characteristic(x.with_truncation(3)));
  }
}

TEST_CASE("chain maps and cones") {
  auto s1 = share(simplicial_circle(3));
  auto pt = share(point(3));
  const auto id = chain_map(SimplicialMap::identity(s1));
  for (int n = 0; n <= 3; ++n) CHECK(id.components[static_cast<std::size_t>(n)] == IntMatrix::identity(id.source.dim(n)));
  CHECK_FALSE(map_homological_connectivity(id).exact);

  const auto collapse = chain_map(constant_map(s1, pt));
  CHECK(collapse.components[1].is_zero());
  const auto cone = mapping_cone(collapse);
  CHECK(boundary_defects(cone).empty());
  CHECK(homology(cone, 2) == group(1));
  const auto conn = map_homological_connectivity(collapse);
  CHECK(conn.exact);
  CHECK(conn.value == 1);
  CHECK(cone_acyclic_through(collapse, 1));
  CHECK_FALSE(cone_acyclic_through(collapse, 2));
}

TEST_CASE("chain maps are functorial") {
  auto x = share(from_complex({{0, 1, 2}}, 3));
  auto b = share(from_complex({{0, 1}, {1, 2}}, 3));
  auto c = share(simplicial_circle(3));
  const auto f = inclusion_by_name(b, x);
  const auto g = constant_map(x, c);
  const auto composite = chain_map(compose(g, f));
  const auto product_of = compose(chain_map(g), chain_map(f));
  CHECK(composite.components == product_of.components);
}

TEST_CASE("homological connectivity") {
  CHECK(homological_connectivity(simplicial_circle(3)).value == 0);
  CHECK(homological_connectivity(simplicial_circle(3)).exact);
  const auto pt = homological_connectivity(point(3));
  CHECK_FALSE(pt.exact);
  CHECK(pt.to_string() == ">= 2");
}
