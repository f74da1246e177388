#include <catch_amalgamated.hpp>

#include <random>

#include "cybar/constructions.hpp"
#include "cybar/error.hpp"
#include "cybar/loopgroup.hpp"

using namespace cybar;

namespace {

/// Cancels one randomly chosen adjacent inverse pair at a time.
std::vector<Letter> reduce_randomly(std::vector<Letter> w, std::mt19937& rng) {
  for (;;) {
    std::vector<std::size_t> spots;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k].generator == w[k + 1].generator && w[k].exponent == -w[k + 1].exponent) spots.push_back(k);
    if (spots.empty()) return w;
    const auto k = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(k), w.begin() + static_cast<std::ptrdiff_t>(k) + 2);
  }
}

const std::vector<std::string> ab{"a", "b"};

}  // namespace

TEST_CASE("word arithmetic", "[loopgroup]") {
  const auto a = parse_word("a", ab);
  const auto b = parse_word("b", ab);
  CHECK((a * a.inverse()).empty());
  CHECK((a * b).inverse() == b.inverse() * a.inverse());
  CHECK(parse_word("a b b^-1 a", ab).to_string(ab) == "a a");
  CHECK(parse_word("1", ab).to_string(ab) == "1");
  CHECK((a * b).inverse().to_string(ab) == "b^-1 a^-1");
  CHECK_THROWS_AS(parse_word("c", ab), ParseError);
}

TEST_CASE("word reduction is confluent and idempotent", "[loopgroup]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> w;
    const int length = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int k = 0; k < length; ++k)
      w.push_back(Letter{std::uniform_int_distribution<int>(0, 1)(rng), std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1});
    const auto r = reduce(w);
    CHECK(reduce(r) == r);
    CHECK(reduce_randomly(w, rng) == r);
    const GroupWord x(w);
    const GroupWord y(reduce_randomly(w, rng));
    CHECK(((x * y) * x) == (x * (y * x)));
  }
}

TEST_CASE("loop group rosters", "[loopgroup]") {
  const auto sphere = kan_loop_group(minimal_sphere(2, 4), 3);
  CHECK(sphere.generators(0).empty());
  REQUIRE(sphere.generators(1).size() == 1);
  CHECK(sphere.generators(1)[0] == "<sigma>");

  const auto circle = simplicial_circle(4);
  const auto loops = kan_loop_group(circle, 3);
  REQUIRE(loops.generators(0).size() == 1);
  CHECK(loops.generators(0)[0] == "<e>");
  for (int n = 0; n <= 3; ++n) CHECK(loops.generators(n).size() == circle.simplex_count(n + 1) - circle.simplex_count(n));

  const auto pt = kan_loop_group(point(3), 2);
  for (int n = 0; n <= 2; ++n) CHECK(pt.generators(n).empty());

  CHECK_THROWS_AS(kan_loop_group(std_simplex(1, 3), 2), Error);
  CHECK_THROWS_AS(kan_loop_group(circle, 4), TruncationError);
}

TEST_CASE("loop group structure maps", "[loopgroup]") {
  const auto loops = kan_loop_group(simplicial_circle(4), 3);
  const auto& names1 = loops.generators(1);
  const auto& names0 = loops.generators(0);
  const auto e = parse_word("<e>", names0);
  CHECK(loops.degeneracy(0, 0, e).to_string(names1) == "<s1(e)>");
  CHECK(loops.face(1, 0, loops.degeneracy(0, 0, e)) == e);
  CHECK(loops.face(1, 1, loops.degeneracy(0, 0, e)) == e);
  CHECK(loops.face(1, 0, GroupWord()).empty());
  CHECK_FALSE(loops.description.empty());
}

TEST_CASE("sampled identities hold on loop groups", "[loopgroup]") {
  for (const auto& x : {minimal_sphere(2, 4), simplicial_circle(4), minimal_sphere(3, 4)}) {
    const auto report = sample_identity_check(kan_loop_group(x, 3), 1000, 11);
    INFO((report.ok() ? "" : report.violations.front()));
    CHECK(report.ok());
    CHECK(report.samples == 1000);
  }
  const SetPtr circle = std::make_shared<SimplicialSet>(simplicial_circle(4));
  const auto report = sample_identity_check(kan_loop_group(wedge(circle, circle), 3), 1000, 3);
  CHECK(report.ok());
  CHECK(report.header.find("not certified") != std::string::npos);
}

TEST_CASE("a corrupted loop group face is caught", "[loopgroup]") {
  auto loops = kan_loop_group(simplicial_circle(4), 3);
  loops.set_face(1, 0, 0, GroupWord());
  const auto report = sample_identity_check(loops, 1000, 5);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().find("d0") != std::string::npos);
}

TEST_CASE("sampling is deterministic", "[loopgroup]") {
  auto loops = kan_loop_group(simplicial_circle(4), 3);
  loops.set_face(2, 1, 0, GroupWord::generator(0));
  const auto a = sample_identity_check(loops, 200, 9);
  const auto b = sample_identity_check(loops, 200, 9);
  CHECK(a.violations == b.violations);
}
