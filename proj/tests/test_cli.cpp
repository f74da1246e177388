#include <catch_amalgamated.hpp>

#include "cybar/cli/scenario.hpp"
#include "cybar/error.hpp"

using namespace cybar;
using namespace cybar::cli;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    (void)parse_scenario(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string error_text(const std::string& text) {
  try {
    (void)parse_scenario(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

const std::string mixed =
    "seed 5\n"
    "monoid Z2 = cyclic 2\n"
    "monoid S3 = symmetric 3\n"
    "augment T = translation Z2\n"
    "space S1 = circle\n"
    "homology nerve(Z2) upto 4\n"
    "verify comparison T P=3\n"
    "verify loopgroup suspension(S1) samples=300\n"
    "verify pi0 S3\n"
    "build S1\n";

}  // namespace

TEST_CASE("minimal scenario parses", "[cli]") {
  const auto s = parse_scenario("monoid Z2: elems 1,a; unit 1; mul a*a=1\nhomology nerve(Z2) upto 4\n");
  REQUIRE(s.jobs.size() == 1);
  CHECK(s.jobs[0].kind == JobKind::homology);
  CHECK(s.monoids.at("Z2")->size() == 2);
  const auto r = run(s);
  REQUIRE(r.size() == 1);
  CHECK(r[0].table.at(3).group.to_string() == "Z/2");
  CHECK(exit_code(r) == 0);
}

TEST_CASE("parse errors carry the line and the name", "[cli]") {
  CHECK(error_line("monoid Z2 = cyclic 2\n\nhomology nerve(Z3) upto 2\n") == 3);
  CHECK(error_text("monoid Z2 = cyclic 2\n\nhomology nerve(Z3) upto 2\n").find("Z3") != std::string::npos);
  CHECK(error_line("trunc 4\naugment T = translation G\n") == 2);
  CHECK(error_line("monoid M: elems 1,a; unit 1\n") == 1);
  CHECK(error_text("monoid M: elems 1,a,b; unit 1; mul a*a=b a*b=a b*a=a b*b=a\n").find("associativity") != std::string::npos);
  CHECK(error_line("monoid Z2 = cyclic 2\nset X: p,q\naction Z2 on X: left a.p=q a.q=p; right p.a=p q.a=p\n") == 3);
  CHECK(error_line("frobnicate\n") == 1);
  CHECK(error_line("verify identities nowhere\n") == 1);
}

TEST_CASE("actions, situations and augmentations from text", "[cli]") {
  const auto s = parse_scenario(
      "monoid Z2 = cyclic 2\n"
      "set X: p,q,*\n"
      "action Z2 on X: left a.p=q a.q=p a.*=*; right p.a=q q.a=p *.a=*\n"
      "monoid H = trivial\n"
      "action H on X as HX:\n"
      "situation S: monoid H; action HX; iota 1=*\n"
      "action Z2 on H as GH:\n"
      "augment A: situation S; group Z2; on-monoid GH; on-carrier X\n"
      "verify comparison A P=3\n");
  CHECK(s.actions.at("X")->size() == 3);
  const auto r = run(s);
  CHECK(r[0].status() == Status::pass);
}

TEST_CASE("partial monoid counterexample scenario", "[cli]") {
  const auto s = parse_scenario(
      "monoid M: elems 1,x,0; unit 1; mul x*x=0 x*0=0 0*x=0 0*0=0\n"
      "monoid A = submonoid M: 1,0\n"
      "counterexample partial-monoid M=M A=A p=3\n");
  const auto r = run(s);
  REQUIRE(r.size() == 1);
  CHECK(r[0].status() == Status::pass);
  CHECK(r[0].records[0].witness == "(x,0,x)");
}

TEST_CASE("corrupted face scenario fails with a witness", "[cli]") {
  const auto r = run(parse_scenario("space T = simplex 2\ncorrupt T: deg 2 d 0 012 = |01\nverify identities T\n"));
  CHECK(r[0].status() == Status::fail);
  CHECK(r[0].records[0].witness.starts_with("d0d1"));
  CHECK(exit_code(r) == 1);
}

TEST_CASE("exceeding the simplex cap is flagged", "[cli]") {
  const auto s = parse_scenario("cap 50\nmonoid S3 = symmetric 3\nhomology nerve(S3) upto 3\n");
  const auto r = run(s);
  CHECK(r[0].status() == Status::flagged);
  CHECK(r[0].records[0].witness.find("degree") != std::string::npos);
  CHECK(exit_code(r) == 0);
}

TEST_CASE("job selection by kind", "[cli]") {
  RunOptions o;
  o.only = JobKind::homology;
  CHECK(run(parse_scenario(mixed), o).size() == 1);
}

TEST_CASE("reports are deterministic", "[cli]") {
  const auto s = parse_scenario(mixed);
  const auto a = emit_records(run(s));
  const auto b = emit_records(run(parse_scenario(mixed)));
  RunOptions parallel;
  parallel.parallel = 4;
  const auto c = emit_records(run(s, parallel));
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.find("\"seconds\"") == std::string::npos);
  CHECK(emit_text(run(s)).find("job(s), 0 failed") != std::string::npos);
}

TEST_CASE("built-in scenarios meet their expectations", "[cli]") {
  for (const auto& b : builtin_scenarios()) {
    INFO(b.name);
    const auto r = run(parse_scenario(b.text));
    Status worst = Status::pass;
    for (const auto& j : r)
      if (j.status() == Status::fail || (j.status() == Status::flagged && worst == Status::pass)) worst = j.status();
    CHECK(worst == b.expected);
  }
}
