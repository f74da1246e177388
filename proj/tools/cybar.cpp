#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cybar/cli/scenario.hpp"
#include "cybar/error.hpp"

namespace {

using namespace cybar;
using namespace cybar::cli;

struct Flags {
  std::string file;
  std::optional<int> truncation;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> cap;
  std::string format = "text";
  unsigned parallel = 1;
};

RunOptions options(const Flags& f, std::optional<JobKind> only) {
  RunOptions o;
  o.truncation = f.truncation;
  o.seed = f.seed;
  o.cap = f.cap;
  o.parallel = f.parallel;
  o.only = only;
  return o;
}

void print(const std::vector<JobResult>& results, const std::string& format) {
  std::cout << (format == "records" ? emit_records(results) : emit_text(results));
}

int run_file(const Flags& f, std::optional<JobKind> only) {
  std::ifstream in(f.file);
  if (!in) {
    std::cerr << "cybar: cannot open " << f.file << '\n';
    return 2;
  }
  std::stringstream text;
  text << in.rdbuf();
  Scenario s;
  try {
    s = parse_scenario(text.str());
  } catch (const ParseError& e) {
    std::cerr << f.file << ": " << e.what() << '\n';
    return 2;
  }
  const auto results = run(s, options(f, only));
  print(results, f.format);
  return exit_code(results);
}

int selftest(const Flags& f) {
  int bad = 0;
  for (const auto& b : builtin_scenarios()) {
    const auto results = run(parse_scenario(b.text), options(f, std::nullopt));
    Status worst = Status::pass;
    for (const auto& r : results)
      if (r.status() == Status::fail || (r.status() == Status::flagged && worst == Status::pass)) worst = r.status();
    const bool ok = worst == b.expected;
    bad += !ok;
    if (f.format == "records") {
      print(results, f.format);
    } else {
      std::cout << (ok ? "ok   " : "FAIL ") << b.name << " (expected " << to_string(b.expected) << ", got "
                << to_string(worst) << ")\n";
    }
  }
  return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial bar constructions: build, verify and compute homology from scenario files"};
  app.require_subcommand(1);
  Flags flags;
  auto common = [&flags](CLI::App* sub, bool needs_file) {
    if (needs_file) sub->add_option("scenario", flags.file, "scenario file")->required()->check(CLI::ExistingFile);
    sub->add_option("--trunc", flags.truncation, "truncation level")->check(CLI::PositiveNumber);
    sub->add_option("--seed", flags.seed, "random seed");
    sub->add_option("--cap", flags.cap, "simplex count cap per construction");
    sub->add_option("--format", flags.format, "output format")->check(CLI::IsMember({"text", "records"}));
    sub->add_option("--jobs", flags.parallel, "parallel jobs")->check(CLI::PositiveNumber);
  };
  const std::vector<std::pair<std::string, JobKind>> kinds{{"build", JobKind::build},
                                                           {"verify", JobKind::verify},
                                                           {"homology", JobKind::homology},
                                                           {"counterexample", JobKind::counterexample}};
  std::vector<std::pair<CLI::App*, JobKind>> subs;
  for (const auto& [name, kind] : kinds) {
    auto* sub = app.add_subcommand(name, "run the " + name + " jobs of a scenario");
    common(sub, true);
    subs.emplace_back(sub, kind);
  }
  auto* all = app.add_subcommand("run", "run every job of a scenario");
  common(all, true);
  auto* self = app.add_subcommand("selftest", "run the built-in scenarios");
  common(self, false);
  CLI11_PARSE(app, argc, argv);

  try {
    if (self->parsed()) return selftest(flags);
    if (all->parsed()) return run_file(flags, std::nullopt);
    for (const auto& [sub, kind] : subs)
      if (sub->parsed()) return run_file(flags, kind);
  } catch (const Error& e) {
    std::cerr << "cybar: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
