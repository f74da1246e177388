#include "cybar/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cybar/error.hpp"

namespace cybar {

namespace {

thread_local std::size_t active_cap = kDefaultSimplexCap;

Simplex apply_word_inner_first(Simplex r, const Word& outer_first) {
  for (auto it = outer_first.rbegin(); it != outer_first.rend(); ++it) r = degenerate(std::move(r), *it);
  return r;
}

// Strictly decreasing subsets of {0, ..., n-1} of the given size.
void decreasing_subsets(int n, int size, Word& prefix, std::vector<Word>& out) {
  if (static_cast<int>(prefix.size()) == size) {
    out.push_back(prefix);
    return;
  }
  int remaining = size - static_cast<int>(prefix.size());
  int upper = prefix.empty() ? n - 1 : prefix.back() - 1;
  for (int j = upper; j >= remaining - 1; --j) {
    prefix.push_back(j);
    decreasing_subsets(n, size, prefix, out);
    prefix.pop_back();
  }
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

std::size_t simplex_cap() noexcept { return active_cap; }

ScopedSimplexCap::ScopedSimplexCap(std::size_t cap) : previous_(active_cap) { active_cap = cap; }
ScopedSimplexCap::~ScopedSimplexCap() { active_cap = previous_; }

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = std::hash<int>{}(s.base_degree) * 1000003u ^ std::hash<int>{}(s.id);
  for (int j : s.degeneracies) h = h * 31u + static_cast<std::size_t>(j) + 7u;
  return h;
}

bool is_canonical_word(const Word& w) noexcept {
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p] <= w[p + 1]) return false;
  return w.empty() || w.back() >= 0;
}

Word apply_degeneracy(Word w, int j) {
  // s_j s_i = s_{i+1} s_j for j <= i: every leading index >= j moves up by one.
  std::size_t p = 0;
  while (p < w.size() && w[p] >= j) {
    ++w[p];
    ++p;
  }
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(p), j);
  return w;
}

Simplex degenerate(Simplex s, int j) {
  if (j < 0 || j > s.degree()) throw Error("degeneracy index out of range");
  s.degeneracies = apply_degeneracy(std::move(s.degeneracies), j);
  return s;
}

Simplex degenerate_vertex(int vertex, int degree) {
  Simplex s{0, vertex, {}};
  for (int k = degree - 1; k >= 0; --k) s.degeneracies.push_back(k);
  return s;
}

SimplicialSet::SimplicialSet(int truncation)
    : truncation_(truncation),
      rosters_(static_cast<std::size_t>(std::max(truncation, -1) + 1)),
      by_name_(rosters_.size()) {
  if (truncation < 0) throw TruncationError("negative truncation level");
}

void SimplicialSet::check_simplex(const Simplex& s) const {
  if (!is_canonical_word(s.degeneracies)) throw InvariantError("degeneracy word is not strictly decreasing");
  if (s.base_degree < 0 || s.base_degree > truncation_ || s.id < 0 ||
      static_cast<std::size_t>(s.id) >= rosters_[static_cast<std::size_t>(s.base_degree)].size())
    throw InvariantError("face refers to an unknown nondegenerate simplex");
  for (std::size_t p = 0; p < s.degeneracies.size(); ++p) {
    // s_{i_m} needs i_m <= degree of its argument.
    int argument_degree = s.base_degree + static_cast<int>(s.degeneracies.size() - p - 1);
    if (s.degeneracies[p] > argument_degree) throw InvariantError("degeneracy index exceeds degree");
  }
}

int SimplicialSet::add(int degree, std::string name, std::vector<Simplex> faces) {
  if (degree < 0 || degree > truncation_) throw TruncationError("degree " + std::to_string(degree) + " above truncation");
  if (static_cast<int>(faces.size()) != (degree == 0 ? 0 : degree + 1))
    throw InvariantError("wrong number of faces for " + name);
  for (const auto& f : faces) {
    if (f.degree() != degree - 1) throw InvariantError("face of wrong degree for " + name);
    check_simplex(f);
  }
  auto& roster = rosters_[static_cast<std::size_t>(degree)];
  auto& names = by_name_[static_cast<std::size_t>(degree)];
  if (names.count(name)) throw InvariantError("duplicate simplex name " + name);
  int id = static_cast<int>(roster.size());
  names.emplace(name, id);
  roster.push_back(Entry{std::move(name), std::move(faces)});
  return id;
}

void SimplicialSet::set_face(int degree, int id, int i, Simplex face) {
  check_simplex(face);
  rosters_.at(static_cast<std::size_t>(degree)).at(static_cast<std::size_t>(id)).faces.at(static_cast<std::size_t>(i)) =
      std::move(face);
}

std::size_t SimplicialSet::size(int degree) const noexcept {
  if (degree < 0 || degree > truncation_) return 0;
  return rosters_[static_cast<std::size_t>(degree)].size();
}

const std::string& SimplicialSet::name(int degree, int id) const {
  return rosters_.at(static_cast<std::size_t>(degree)).at(static_cast<std::size_t>(id)).name;
}

std::optional<int> SimplicialSet::find(int degree, std::string_view name) const {
  if (degree < 0 || degree > truncation_) return std::nullopt;
  const auto& names = by_name_[static_cast<std::size_t>(degree)];
  auto it = names.find(std::string(name));
  if (it == names.end()) return std::nullopt;
  return it->second;
}

int SimplicialSet::top_degree() const noexcept {
  for (int n = truncation_; n >= 0; --n)
    if (!rosters_[static_cast<std::size_t>(n)].empty()) return n;
  return -1;
}

Simplex SimplicialSet::nondegenerate(int degree, int id) const {
  if (static_cast<std::size_t>(id) >= size(degree)) throw Error("no such nondegenerate simplex");
  return Simplex{degree, id, {}};
}

const Simplex& SimplicialSet::stored_face(int degree, int id, int i) const {
  return rosters_.at(static_cast<std::size_t>(degree)).at(static_cast<std::size_t>(id)).faces.at(static_cast<std::size_t>(i));
}

Simplex SimplicialSet::face(const Simplex& s, int i) const {
  const int n = s.degree();
  if (n == 0 || i < 0 || i > n) throw Error("face index out of range");
  Word outer;
  int cur = i;
  const Word& w = s.degeneracies;
  for (std::size_t p = 0; p < w.size(); ++p) {
    const int j = w[p];
    if (cur < j) {
      outer.push_back(j - 1);
    } else if (cur == j || cur == j + 1) {
      Simplex rest{s.base_degree, s.id, Word(w.begin() + static_cast<std::ptrdiff_t>(p) + 1, w.end())};
      return apply_word_inner_first(std::move(rest), outer);
    } else {
      outer.push_back(j);
      --cur;
    }
  }
  return apply_word_inner_first(stored_face(s.base_degree, s.id, cur), outer);
}

std::vector<Simplex> SimplicialSet::simplices(int degree) const {
  std::vector<Simplex> out;
  if (degree < 0 || degree > truncation_) return out;
  for (int k = 0; k <= degree; ++k) {
    const auto count = size(k);
    if (count == 0) continue;
    std::vector<Word> words;
    Word prefix;
    decreasing_subsets(degree, degree - k, prefix, words);
    for (std::size_t id = 0; id < count; ++id)
      for (const auto& w : words) out.push_back(Simplex{k, static_cast<int>(id), w});
  }
  return out;
}

std::size_t SimplicialSet::simplex_count(int degree) const {
  std::size_t total = 0;
  if (degree < 0 || degree > truncation_) return 0;
  for (int k = 0; k <= degree; ++k) total += size(k) * binomial(degree, k);
  return total;
}

std::string SimplicialSet::label(const Simplex& s) const {
  if (!s.degenerate()) return name(s.base_degree, s.id);
  std::string out;
  for (int j : s.degeneracies) out += "s" + std::to_string(j);
  return out + "(" + name(s.base_degree, s.id) + ")";
}

void SimplicialSet::set_basepoint(int vertex) {
  if (static_cast<std::size_t>(vertex) >= size(0)) throw Error("basepoint is not a vertex");
  basepoint_ = vertex;
}

Simplex SimplicialSet::base_simplex(int degree) const {
  if (!basepoint_) throw Error("simplicial set is not pointed");
  return degenerate_vertex(*basepoint_, degree);
}

bool SimplicialSet::is_base(const Simplex& s) const noexcept {
  return basepoint_ && s.base_degree == 0 && s.id == *basepoint_;
}

SimplicialSet SimplicialSet::with_truncation(int truncation) const {
  SimplicialSet out(truncation);
  for (int n = 0; n <= std::min(truncation, truncation_); ++n) {
    out.rosters_[static_cast<std::size_t>(n)] = rosters_[static_cast<std::size_t>(n)];
    out.by_name_[static_cast<std::size_t>(n)] = by_name_[static_cast<std::size_t>(n)];
  }
  out.basepoint_ = basepoint_;
  return out;
}

SimplicialSet SimplicialSet::skeleton(int degree) const {
  SimplicialSet out = with_truncation(truncation_);
  for (int n = std::max(degree + 1, 0); n <= truncation_; ++n) {
    out.rosters_[static_cast<std::size_t>(n)].clear();
    out.by_name_[static_cast<std::size_t>(n)].clear();
  }
  return out;
}

SimplicialMap::SimplicialMap(SetPtr source, SetPtr target) : source_(std::move(source)), target_(std::move(target)) {
  images_.resize(static_cast<std::size_t>(source_->truncation() + 1));
  for (int n = 0; n <= source_->truncation(); ++n) images_[static_cast<std::size_t>(n)].resize(source_->size(n));
}

void SimplicialMap::set(int degree, int id, Simplex image) {
  if (image.degree() != degree) throw InvariantError("simplicial map must preserve degree");
  images_.at(static_cast<std::size_t>(degree)).at(static_cast<std::size_t>(id)) = std::move(image);
}

const Simplex& SimplicialMap::image(int degree, int id) const {
  const auto& slot = images_.at(static_cast<std::size_t>(degree)).at(static_cast<std::size_t>(id));
  if (!slot) throw Error("simplicial map is undefined on " + source_->name(degree, id));
  return *slot;
}

Simplex SimplicialMap::operator()(const Simplex& s) const {
  return apply_word_inner_first(image(s.base_degree, s.id), s.degeneracies);
}

SimplicialMap SimplicialMap::identity(SetPtr set) {
  SimplicialMap f(set, set);
  for (int n = 0; n <= set->truncation(); ++n)
    for (std::size_t id = 0; id < set->size(n); ++id) f.set(n, static_cast<int>(id), Simplex{n, static_cast<int>(id), {}});
  return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.target_ptr() != g.source_ptr() && &f.target() != &g.source())
    throw Error("composition of maps with mismatched objects");
  SimplicialMap out(f.source_ptr(), g.target_ptr());
  for (int n = 0; n <= f.source().truncation(); ++n)
    for (std::size_t id = 0; id < f.source().size(n); ++id) {
      if (n > g.source().truncation()) continue;
      out.set(n, static_cast<int>(id), g(f.image(n, static_cast<int>(id))));
    }
  return out;
}

std::size_t pi0(const SimplicialSet& x) {
  std::vector<std::size_t> parent(x.size(0));
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = parent.size();
  for (std::size_t e = 0; e < x.size(1); ++e) {
    auto a = root(static_cast<std::size_t>(x.stored_face(1, static_cast<int>(e), 0).id));
    auto b = root(static_cast<std::size_t>(x.stored_face(1, static_cast<int>(e), 1).id));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

long euler_characteristic(const SimplicialSet& x) {
  long chi = 0;
  for (int n = 0; n <= x.truncation(); ++n) chi += (n % 2 == 0 ? 1L : -1L) * static_cast<long>(x.size(n));
  return chi;
}

}  // namespace cybar
