#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "cybar/bar.hpp"
#include "cybar/bisimplicial.hpp"
#include "cybar/cli/scenario.hpp"
#include "cybar/constructions.hpp"
#include "cybar/error.hpp"
#include "cybar/identities.hpp"
#include "cybar/loopgroup.hpp"
#include "cybar/serialization.hpp"

namespace cybar::cli {

namespace {

std::vector<std::string> inline_args(const std::string& inside) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(inside);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

class Runner {
 public:
  Runner(const Scenario& s, int truncation, std::uint64_t seed) : s_(s), truncation_(truncation), seed_(seed) {}

  SetPtr space(const std::string& ref, int truncation) const {
    if (s_.spaces.count(ref)) return named(ref, truncation);
    SpaceRecipe r{ref, {}, 0};
    if (const auto open = ref.find('('); open != std::string::npos) {
      r.kind = ref.substr(0, open);
      r.args = inline_args(ref.substr(open + 1, ref.size() - open - 2));
    }
    return std::make_shared<SimplicialSet>(build(r, truncation));
  }

  JobResult execute(const Job& job) const {
    JobResult out;
    out.job = job;
    const auto start = std::chrono::steady_clock::now();
    try {
      switch (job.kind) {
        case JobKind::build: build_job(out); break;
        case JobKind::homology: homology_job(out); break;
        case JobKind::counterexample: counterexample_job(out); break;
        case JobKind::verify: verify_job(out); break;
      }
    } catch (const CapExceeded& e) {
      out.records.push_back(CheckRecord{to_string(job.kind), job.text, truncation_, Status::flagged, e.what(),
                                        "resource cap reached"});
    } catch (const TruncationError& e) {
      out.records.push_back(CheckRecord{to_string(job.kind), job.text, truncation_, Status::flagged, e.what(),
                                        "outside the truncation"});
    } catch (const Error& e) {
      out.records.push_back(CheckRecord{to_string(job.kind), job.text, truncation_, Status::fail, e.what(), ""});
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  }

 private:
  SetPtr named(const std::string& name, int truncation) const {
    auto x = build(s_.spaces.at(name), truncation);
    if (auto it = s_.corruptions.find(name); it != s_.corruptions.end())
      for (const auto& c : it->second) {
        const auto id = x.find(c.degree, c.simplex);
        if (!id) throw Error("corruption target '" + c.simplex + "' not found");
        const auto bar = c.image.find('|');
        Word word;
        std::istringstream in(c.image.substr(0, bar));
        std::string n;
        while (std::getline(in, n, ',')) word.push_back(std::stoi(n));
        const int base_degree = c.degree - 1 - static_cast<int>(word.size());
        const auto target = x.find(base_degree, c.image.substr(bar + 1));
        if (!target) throw Error("corruption image '" + c.image + "' not found");
        x.set_face(c.degree, *id, c.face, Simplex{base_degree, *target, word});
      }
    return std::make_shared<SimplicialSet>(std::move(x));
  }

  SimplicialSet build(const SpaceRecipe& r, int truncation) const {
    const auto& k = r.kind;
    auto arg = [&](std::size_t i) { return named(r.args.at(i), truncation); };
    if (k == "ref") return *named(r.args.at(0), truncation);
    if (k == "point") return point(truncation);
    if (k == "circle") return simplicial_circle(truncation);
    if (k == "sphere") return minimal_sphere(std::stoi(r.args.at(0)), truncation);
    if (k == "simplex") return std_simplex(std::stoi(r.args.at(0)), truncation);
    if (k == "nerve") return *nerve(s_.monoids.at(r.args.at(0)), truncation);
    if (k == "cyclic-bar") return *cyclic_bar(s_.actions.at(r.args.at(0)), truncation);
    if (k == "wedge") return wedge(arg(0), arg(1));
    if (k == "smash") return smash(arg(0), arg(1));
    if (k == "product") return *product(arg(0), arg(1)).set;
    if (k == "union") return disjoint_union(arg(0), arg(1));
    if (k == "suspension") return suspension(*arg(0), truncation);
    if (k == "skeleton") return arg(0)->skeleton(std::stoi(r.args.at(1)));
    if (k == "file") {
      std::ifstream in(r.args.at(0));
      if (!in) throw Error("cannot open '" + r.args.at(0) + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      return read_sset(buffer.str());
    }
    throw Error("unknown space kind '" + k + "'");
  }

  static SimplicialSet suspension(const SimplicialSet& x, int truncation) {
    const auto base = std::make_shared<SimplicialSet>(x);
    return diagonal(std::make_shared<BisimplicialSet>(pointed_wedge(base, truncation)));
  }

  long option(const Job& job, const std::string& key, long fallback) const {
    for (const auto& a : job.args)
      if (a.starts_with(key + "=")) return std::stol(a.substr(key.size() + 1));
    return fallback;
  }

  std::string option_name(const Job& job, const std::string& key) const {
    for (const auto& a : job.args)
      if (a.starts_with(key + "=")) return a.substr(key.size() + 1);
    return {};
  }

  static CheckRecord identities_record(const std::string& instance, const IdentityReport& r) {
    CheckRecord rec{"simplicial identities", instance, r.degrees_checked, r.ok() ? Status::pass : Status::fail, "", ""};
    if (!r.ok()) {
      const auto& v = r.violations.front();
      rec.witness = v.identity + " in degree " + std::to_string(v.degree) + " at " + v.simplex;
    }
    return rec;
  }

  void build_job(JobResult& out) const {
    const auto& ref = out.job.args[0];
    const auto x = space(ref, truncation_);
    auto rec = identities_record(ref, validate_identities(*x));
    std::string counts;
    for (int n = 0; n <= x->truncation(); ++n) counts += (n ? "," : "") + std::to_string(x->size(n));
    rec.note = "nondegenerate counts " + counts;
    out.records.push_back(rec);
    try {
      out.artifact = write_sset(*x);
    } catch (const Error& e) {
      out.records.push_back(CheckRecord{"serialization", ref, x->truncation(), Status::flagged, e.what(), ""});
    }
  }

  void homology_job(JobResult& out) const {
    const auto& ref = out.job.args[0];
    const int upto = std::stoi(out.job.args[2]);
    const bool reduced = out.job.args.size() == 4;
    const auto x = space(ref, std::max(truncation_, upto + 1));
    out.table = homology_table(*x, upto, reduced);
    CheckRecord rec{reduced ? "reduced homology" : "homology", ref, upto, Status::pass, "", ""};
    for (const auto& row : out.table)
      if (!row.group.reliable) {
        rec.status = Status::flagged;
        rec.note = "degree " + std::to_string(row.degree) + " is at the truncation level";
        break;
      }
    out.records.push_back(rec);
  }

  void counterexample_job(JobResult& out) const {
    const auto& m = s_.monoids.at(option_name(out.job, "M"));
    const auto& a = s_.monoids.at(option_name(out.job, "A"));
    const int p = static_cast<int>(option(out.job, "p", 3));
    const auto r = partial_monoid_discrepancy(m, a, p);
    CheckRecord rec{"composable tuples exceed the wedge", m->title() + " over " + a->title(), p, Status::pass, "", ""};
    rec.note = "composable " + std::to_string(r.composable) + ", wedge " + std::to_string(r.wedge) +
               "; composability is the left-to-right iterated product";
    if (r.only_composable.empty())
      rec.status = Status::fail;
    else
      rec.witness = "(" + tuple_label(r.only_composable.front(), m->names(), ',') + ")";
    out.records.push_back(rec);
  }

  void verify_job(JobResult& out) const {
    const auto& what = out.job.args[0];
    const auto& target = out.job.args[1];
    const int depth = static_cast<int>(option(out.job, "P", truncation_));
    if (what == "identities") {
      out.records.push_back(identities_record(target, validate_identities(*space(target, truncation_))));
    } else if (what == "comparison") {
      const Comparison c(s_.augmentations.at(target), depth);
      out.records = verify_comparison(c, target);
    } else if (what == "intermediate") {
      const Comparison c(s_.augmentations.at(target), depth);
      auto rec = identities_record(target, validate_identities(c.intermediate_model()));
      rec.check = "identities of the intermediate object";
      out.records.push_back(rec);
    } else if (what == "nerve-wedge") {
      const auto& h = s_.monoids.at(target);
      const auto wedge = wedge_model(share(builtin::self_situation(h)), depth);
      const auto bar = nerve_model(h, depth);
      const TupleFunction id = [](int, const Tuple& t) { return t; };
      const auto map = validate_tuple_map(bar, wedge, id);
      const auto bij = check_degreewise_bijection(bar, wedge, id);
      CheckRecord rec{"wedge of H over H is the nerve", target, depth,
                      map.ok() && bij.bijective ? Status::pass : Status::fail, "", ""};
      if (!map.ok()) rec.witness = map.violations.front().identity + " at " + map.violations.front().simplex;
      else if (!bij.bijective) rec.witness = bij.witness;
      out.records.push_back(rec);
    } else if (what == "suspension") {
      const int upto = static_cast<int>(option(out.job, "upto", truncation_ - 1));
      const auto x = space(target, upto + 1);
      const auto chains = normalized_chains(*x);
      const auto lifted = normalized_chains(suspension(*x, upto + 1));
      CheckRecord rec{"reduced homology shifts by one under the wedge", target, upto, Status::pass, "",
                      "homological surrogate for the suspension equivalence"};
      for (int q = 0; q + 1 <= upto; ++q) {
        const auto below = reduced_homology(chains, q);
        const auto above = reduced_homology(lifted, q + 1);
        out.table.push_back(HomologyRow{q + 1, above});
        if (below.to_string() != above.to_string() && rec.status == Status::pass) {
          rec.status = Status::fail;
          rec.witness = "degree " + std::to_string(q) + ": " + below.to_string() + " vs " + above.to_string();
        }
      }
      out.records.push_back(rec);
    } else if (what == "pi0") {
      const auto& g = s_.monoids.at(target);
      const auto x = cyclic_bar(share(builtin::translation(g)), 2);
      CheckRecord rec{"components of the cyclic bar are conjugacy classes", target, 2, Status::pass, "", ""};
      if (!g->is_group()) {
        rec.status = Status::flagged;
        rec.note = "not a group";
      } else {
        std::set<std::set<int>> classes;
        for (int a = 0; a < static_cast<int>(g->size()); ++a) {
          std::set<int> c;
          for (int h = 0; h < static_cast<int>(g->size()); ++h) c.insert(g->mul(g->mul(h, a), *g->inverse(h)));
          classes.insert(c);
        }
        const auto components = pi0(*x);
        rec.note = std::to_string(components) + " components";
        if (components != classes.size()) {
          rec.status = Status::fail;
          rec.witness = std::to_string(components) + " components, " + std::to_string(classes.size()) + " classes";
        }
      }
      out.records.push_back(rec);
    } else if (what == "shear") {
      const auto& a = s_.actions.at(target);
      const auto side = out.job.args[2] == "left" ? Side::left : Side::right;
      const auto r = shear_report(*a, side);
      CheckRecord rec{"shear map is bijective", target + " " + out.job.args[2], 0, Status::pass, r.witness, ""};
      if (!r.bijective()) {
        rec.status = a->monoid->is_group() ? Status::fail : Status::flagged;
        if (!a->monoid->is_group()) rec.note = "acting monoid is not a group";
      }
      out.records.push_back(rec);
    } else if (what == "loopgroup") {
      const auto samples = static_cast<std::size_t>(option(out.job, "samples", 1000));
      const auto g = kan_loop_group(*space(target, truncation_), truncation_ - 1);
      const auto r = sample_identity_check(g, samples, seed_ + out.job.line);
      CheckRecord rec{"loop group identities on sampled words", target, truncation_ - 1,
                      r.ok() ? Status::pass : Status::fail, r.ok() ? "" : r.violations.front(), r.header};
      out.records.push_back(rec);
    }
  }

  const Scenario& s_;
  int truncation_;
  std::uint64_t seed_;
};

}  // namespace

std::vector<JobResult> run(const Scenario& s, const RunOptions& options) {
  const int truncation = options.truncation.value_or(s.truncation);
  const auto seed = options.seed.value_or(s.seed);
  const auto cap = options.cap.value_or(s.cap);
  std::vector<const Job*> selected;
  for (const auto& j : s.jobs)
    if (!options.only || j.kind == *options.only) selected.push_back(&j);
  std::vector<JobResult> results(selected.size());
  const Runner runner(s, truncation, seed);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    const ScopedSimplexCap scoped(cap);
    for (std::size_t k; (k = next++) < selected.size();) results[k] = runner.execute(*selected[k]);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.parallel, static_cast<unsigned>(selected.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return results;
}

std::string emit_text(const std::vector<JobResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << '[' << to_string(r.status()) << "] line " << r.job.line << ": " << r.job.text << "  (" << std::fixed
        << std::setprecision(3) << r.seconds << " s)\n";
    for (const auto& c : r.records) {
      out << "    " << std::left << std::setw(8) << to_string(c.status) << c.check << " [" << c.instance;
      if (c.degrees_checked >= 0) out << ", degrees <= " << c.degrees_checked;
      out << "]\n";
      if (!c.witness.empty()) out << "        witness: " << c.witness << '\n';
      if (!c.note.empty()) out << "        note: " << c.note << '\n';
    }
    for (const auto& row : r.table)
      out << "    H_" << row.degree << " = " << row.group.to_string() << (row.group.reliable ? "" : "  (unreliable)") << '\n';
    if (!r.artifact.empty()) {
      std::istringstream lines(r.artifact);
      for (std::string l; std::getline(lines, l);) out << "    | " << l << '\n';
    }
  }
  std::size_t failed = 0, flagged = 0;
  for (const auto& r : results) {
    failed += r.status() == Status::fail;
    flagged += r.status() == Status::flagged;
  }
  out << results.size() << " job(s), " << failed << " failed, " << flagged << " flagged\n";
  return out.str();
}

std::string emit_records(const std::vector<JobResult>& results) {
  using nlohmann::ordered_json;
  std::ostringstream out;
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& r = results[k];
    ordered_json job{{"type", "job"},   {"index", k}, {"line", r.job.line}, {"kind", to_string(r.job.kind)},
                     {"job", r.job.text}, {"status", to_string(r.status())}};
    out << job.dump() << '\n';
    for (const auto& c : r.records) {
      ordered_json rec{{"type", "check"},    {"index", k},         {"check", c.check},
                       {"instance", c.instance}, {"degrees_checked", c.degrees_checked}, {"status", to_string(c.status)}};
      if (!c.witness.empty()) rec["witness"] = c.witness;
      if (!c.note.empty()) rec["note"] = c.note;
      out << rec.dump() << '\n';
    }
    for (const auto& row : r.table) {
      ordered_json torsion = ordered_json::array();
      for (const auto& t : row.group.torsion) torsion.push_back(t.get_str());
      ordered_json rec{{"type", "homology"}, {"index", k},          {"degree", row.degree},
                       {"betti", row.group.betti}, {"torsion", torsion}, {"reliable", row.group.reliable}};
      out << rec.dump() << '\n';
    }
    if (!r.artifact.empty()) out << ordered_json{{"type", "artifact"}, {"index", k}, {"sset", r.artifact}}.dump() << '\n';
  }
  return out.str();
}

int exit_code(const std::vector<JobResult>& results) {
  for (const auto& r : results)
    if (r.status() == Status::fail) return 1;
  return 0;
}

std::vector<BuiltinScenario> builtin_scenarios() {
  return {
      {"comparison", "monoid Z2 = cyclic 2\naugment T = translation Z2\nverify comparison T P=3\n", Status::pass},
      {"suspension",
       "space S1 = circle\nspace S = suspension S1\nhomology S upto 3 reduced\nverify suspension S1 upto=3\n",
       Status::pass},
      {"partial-monoid",
       "monoid M: elems 1,x,0; unit 1; mul x*x=0 x*0=0 0*x=0 0*0=0\nmonoid A = submonoid M: 1,0\n"
       "counterexample partial-monoid M=M A=A p=3\n",
       Status::pass},
      {"corrupted-face", "space T = simplex 2\ncorrupt T: deg 2 d 0 012 = |01\nverify identities T\n", Status::fail},
  };
}

}  // namespace cybar::cli
