#pragma once

// Scenario files: named monoids, actions, situations, augmentations and
// spaces, followed by jobs. One statement per line, `#` starts a comment.
//
//   trunc 4
//   seed 7
//   monoid Z2: elems 1,a; unit 1; mul a*a=1
//   monoid S3 = symmetric 3
//   set X: p,q
//   action Z2 on X: left a.p=q a.q=p; right p.a=q q.a=p
//   situation S = submonoid A in M
//   augment T = translation Z2
//   space S1 = circle
//   homology nerve(Z2) upto 4
//   verify comparison T P=3
//   counterexample partial-monoid M=M A=A p=3

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cybar/algebra.hpp"
#include "cybar/homology.hpp"
#include "cybar/report.hpp"

namespace cybar::cli {

enum class JobKind { build, verify, homology, counterexample };

std::string to_string(JobKind k);

struct Job {
  JobKind kind = JobKind::verify;
  std::string text;
  std::size_t line = 0;
  std::vector<std::string> args;
};

struct SpaceRecipe {
  std::string kind;
  std::vector<std::string> args;
  std::size_t line = 0;
};

struct Corruption {
  int degree = 0;
  int face = 0;
  std::string simplex;
  std::string image;  // `<word>|<id>`
  std::size_t line = 0;
};

struct Scenario {
  int truncation = 4;
  std::uint64_t seed = 1;
  std::size_t cap = 1'000'000;

  std::map<std::string, MonoidPtr> monoids;
  std::map<std::string, std::vector<std::string>> sets;
  std::map<std::string, ActionPtr> actions;
  std::map<std::string, SituationPtr> situations;
  std::map<std::string, GAugmentedSituation> augmentations;
  std::map<std::string, SpaceRecipe> spaces;
  std::map<std::string, std::vector<Corruption>> corruptions;
  std::vector<Job> jobs;
};

/// Throws ParseError at the first syntax, reference or axiom error.
Scenario parse_scenario(std::string_view text);

struct JobResult {
  Job job;
  std::vector<CheckRecord> records;
  std::vector<HomologyRow> table;
  std::string artifact;
  double seconds = 0;

  Status status() const { return overall(records); }
};

struct RunOptions {
  std::optional<int> truncation;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> cap;
  unsigned parallel = 1;
  std::optional<JobKind> only;
};

/// Results come back in scenario order whatever the parallelism.
std::vector<JobResult> run(const Scenario& s, const RunOptions& options = {});

/// Human-readable report, timings included.
std::string emit_text(const std::vector<JobResult>& results);

/// One JSON object per line; deterministic for a fixed scenario and seed.
std::string emit_records(const std::vector<JobResult>& results);

/// 0 iff no job failed; flagged jobs do not fail the run.
int exit_code(const std::vector<JobResult>& results);

struct BuiltinScenario {
  std::string name;
  std::string text;
  Status expected;
};

/// Scenarios exercised by `cybar selftest`.
std::vector<BuiltinScenario> builtin_scenarios();

}  // namespace cybar::cli
