#include "property_suites.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

#include "cybar/bar.hpp"
#include "cybar/bisimplicial.hpp"
#include "cybar/constructions.hpp"
#include "cybar/error.hpp"
#include "cybar/homology.hpp"

namespace cybar::testing {

namespace {

using Facets = std::vector<std::vector<int>>;

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::vector<int> simplex(int lo, int hi, int max_size) {
    std::set<int> vs;
    const int size = uniform(1, max_size);
    while (static_cast<int>(vs.size()) < size) vs.insert(uniform(lo, hi));
    return {vs.begin(), vs.end()};
  }

  Facets complex(int count) {
    Facets out{{0}};
    for (int k = 0; k < count; ++k) out.push_back(simplex(0, 5, 3));
    return out;
  }

  /// A face of one of the facets.
  std::vector<int> face_of(const Facets& f) {
    auto s = f[static_cast<std::size_t>(uniform(0, static_cast<int>(f.size()) - 1))];
    while (s.size() > 1 && coin(0.4)) s.erase(s.begin() + uniform(0, static_cast<int>(s.size()) - 1));
    return s;
  }

  /// Extra facets: mostly cones over existing faces with a fresh apex
  /// (homotopy equivalences), sometimes arbitrary simplices.
  Facets extension(const Facets& base, int count) {
    Facets out;
    for (int k = 0; k < count; ++k) {
      if (coin(0.75)) {
        auto s = face_of(base);
        s.push_back(fresh_++);
        out.push_back(s);
      } else {
        out.push_back(simplex(0, 7, 4));
      }
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
  int fresh_ = 100;
};

Facets join(Facets a, const Facets& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

SetPtr make(const Facets& f, int truncation) { return std::make_shared<SimplicialSet>(from_complex(f, truncation)); }

std::string describe(const Facets& f) {
  std::string out = "{";
  for (std::size_t k = 0; k < f.size(); ++k) {
    out += k ? " " : "";
    for (std::size_t v = 0; v < f[k].size(); ++v) out += (v ? "." : "") + std::to_string(f[k][v]);
  }
  return out + "}";
}

bool iso_through(const SimplicialMap& f, int k) { return cone_acyclic_through(chain_map(f), k); }

/// Element-by-label map between bisimplicial sets whose labels agree on the
/// common part.
BisimplicialMap map_by_label(const BisetPtr& source, const BisetPtr& target) {
  auto index = std::make_shared<std::vector<std::vector<std::unordered_map<std::string, int>>>>();
  const int P = std::min(source->horizontal_truncation(), target->horizontal_truncation());
  const int Q = std::min(source->vertical_truncation(), target->vertical_truncation());
  index->resize(static_cast<std::size_t>(P + 1), std::vector<std::unordered_map<std::string, int>>(static_cast<std::size_t>(Q + 1)));
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Q; ++q)
      for (std::size_t x = 0; x < target->size(p, q); ++x)
        (*index)[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)].emplace(target->label(p, q, static_cast<int>(x)),
                                                                                  static_cast<int>(x));
  return BisimplicialMap{source, target, [source, index](int p, int q, int x) {
                           const auto& m = (*index)[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
                           auto it = m.find(source->label(p, q, x));
                           if (it == m.end()) throw InvariantError("no counterpart for " + source->label(p, q, x));
                           return it->second;
                         }};
}

}  // namespace

SuiteResult gluing_suite(std::uint64_t seed, std::size_t wanted) {
  SuiteResult out;
  Generator gen(seed);
  constexpr int truncation = 4;
  for (std::size_t attempt = 0; out.tested < wanted && attempt < 50 * wanted; ++attempt) {
    const int k = gen.uniform(0, 2);
    const auto fb = gen.complex(gen.uniform(2, 4));
    Facets fa{{0}};
    for (int n = gen.uniform(1, 2); n > 0; --n) fa.push_back(gen.face_of(fb));
    const bool collapse = gen.coin(0.25);
    const auto fc = join(fa, Facets{gen.simplex(0, 7, 3), gen.simplex(0, 7, 2)});
    const auto ea = gen.coin(0.5) ? gen.extension(fa, 1) : Facets{};
    const auto eb = gen.extension(fb, gen.uniform(0, 2));
    const auto ec = gen.extension(fc, gen.uniform(0, 2));

    const auto a = make(fa, truncation), b = make(fb, truncation);
    const auto a2 = make(join(fa, ea), truncation), b2 = make(join(join(fb, ea), eb), truncation);
    const auto c = collapse ? std::make_shared<SimplicialSet>(point(truncation)) : make(fc, truncation);
    const auto c2 = collapse ? c : make(join(join(fc, ea), ec), truncation);

    const auto f = inclusion_by_name(a, b), f2 = inclusion_by_name(a2, b2);
    const auto g = collapse ? constant_map(a, c) : inclusion_by_name(a, c);
    const auto g2 = collapse ? constant_map(a2, c2) : inclusion_by_name(a2, c2);
    const auto on_a = inclusion_by_name(a, a2), on_b = inclusion_by_name(b, b2);
    const auto on_c = collapse ? SimplicialMap::identity(c) : inclusion_by_name(c, c2);

    if (!(iso_through(on_a, k) && iso_through(on_b, k) && iso_through(on_c, k))) {
      ++out.skipped;
      continue;
    }
    ++out.tested;
    const auto from = pushout(f, g);
    const auto to = pushout(f2, g2);
    const auto induced = induced_pushout_map(from, to, on_b, on_c);
    const auto instance = "B=" + describe(fb) + " A=" + describe(fa) + (collapse ? " C=pt" : " C=" + describe(fc)) +
                          " k=" + std::to_string(k);
    if (!validate_map(induced).ok())
      out.violations.push_back("induced map is not simplicial: " + instance);
    else if (!iso_through(induced, k))
      out.violations.push_back("induced map on pushouts not a homology isomorphism: " + instance);
    else if (!iso_through(induced, k + 1))
      ++out.sharp;
  }
  return out;
}

SuiteResult realization_suite(std::uint64_t seed, std::size_t wanted) {
  SuiteResult out;
  Generator gen(seed);
  constexpr int truncation = 3;
  for (std::size_t attempt = 0; out.tested < wanted && attempt < 50 * wanted; ++attempt) {
    const int k = gen.uniform(0, 2);
    const bool wedges = gen.coin(0.5);
    BisetPtr source, target;
    std::string instance;
    if (wedges) {
      const auto fm = gen.complex(gen.uniform(1, 3));
      const auto em = gen.extension(fm, gen.uniform(1, 2));
      source = std::make_shared<BisimplicialSet>(pointed_wedge(make(fm, truncation), truncation));
      target = std::make_shared<BisimplicialSet>(pointed_wedge(make(join(fm, em), truncation), truncation));
      instance = "wedge M=" + describe(fm) + " M'=" + describe(join(fm, em));
    } else {
      const auto fp = gen.complex(gen.uniform(1, 2));
      const auto fq = gen.complex(gen.uniform(1, 2));
      const auto ep = gen.coin(0.2) ? gen.extension(fp, 1) : Facets{};
      const auto eq = gen.extension(fq, gen.uniform(1, 2));
      source = std::make_shared<BisimplicialSet>(external_product(make(fp, truncation), make(fq, truncation)));
      target = std::make_shared<BisimplicialSet>(
          external_product(make(join(fp, ep), truncation), make(join(fq, eq), truncation)));
      instance = "product P=" + describe(fp) + " Q=" + describe(fq);
    }
    instance += " k=" + std::to_string(k);
    const auto f = map_by_label(source, target);

    bool rows = true;
    for (int p = 0; p <= truncation && rows; ++p) {
      const Materialized s(row_model(source, p)), t(row_model(target, p));
      rows = iso_through(realize_map(s, t, row_function(f, p)), k);
    }
    if (!rows) {
      ++out.skipped;
      continue;
    }
    ++out.tested;
    if (!validate_map(f).ok()) {
      out.violations.push_back("not a map of bisimplicial sets: " + instance);
      continue;
    }
    const Materialized s(diagonal_model(source)), t(diagonal_model(target));
    const auto diag = realize_map(s, t, diagonal_function(f));
    if (!iso_through(diag, k))
      out.violations.push_back("diagonal not a homology isomorphism: " + instance);
    else if (k + 2 <= truncation && !iso_through(diag, k + 1))
      ++out.sharp;
  }
  return out;
}

}  // namespace cybar::testing
