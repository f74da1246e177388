#include "cybar/loopgroup.hpp"

#include <random>
#include <sstream>
#include <unordered_map>

#include "cybar/error.hpp"

namespace cybar {

std::vector<Letter> reduce(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  for (const auto& l : letters) {
    if (l.exponent != 1 && l.exponent != -1) throw Error("word exponents must be +1 or -1");
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

GroupWord::GroupWord(const std::vector<Letter>& letters) : letters_(reduce(letters)) {}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(Letter{it->generator, -it->exponent});
  return out;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  for (const auto& l : b.letters_) {
    if (!out.letters_.empty() && out.letters_.back().generator == l.generator && out.letters_.back().exponent == -l.exponent)
      out.letters_.pop_back();
    else
      out.letters_.push_back(l);
  }
  return out;
}

std::string GroupWord::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ' ';
    out += names.at(static_cast<std::size_t>(letters_[k].generator));
    if (letters_[k].exponent < 0) out += "^-1";
  }
  return out;
}

GroupWord parse_word(const std::string& text, const std::vector<std::string>& names) {
  std::unordered_map<std::string, int> index;
  for (std::size_t k = 0; k < names.size(); ++k) index.emplace(names[k], static_cast<int>(k));
  std::istringstream in(text);
  std::vector<Letter> letters;
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    int exponent = 1;
    if (token.size() > 3 && token.ends_with("^-1")) {
      exponent = -1;
      token.resize(token.size() - 3);
    }
    auto it = index.find(token);
    if (it == index.end()) throw ParseError(1, "unknown generator '" + token + "'");
    letters.push_back(Letter{it->second, exponent});
  }
  return GroupWord(letters);
}

FreeSimplicialGroup::FreeSimplicialGroup(int truncation, std::vector<std::vector<std::string>> generators)
    : truncation_(truncation), generators_(std::move(generators)) {
  if (generators_.size() != static_cast<std::size_t>(truncation + 1))
    throw Error("generator rosters must cover degrees 0.." + std::to_string(truncation));
  faces_.resize(generators_.size());
  degeneracies_.resize(generators_.size());
  for (int n = 0; n <= truncation; ++n) {
    const auto count = generators_[static_cast<std::size_t>(n)].size();
    if (n > 0) faces_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1), std::vector<GroupWord>(count));
    if (n < truncation)
      degeneracies_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1), std::vector<GroupWord>(count));
  }
}

const std::vector<std::string>& FreeSimplicialGroup::generators(int degree) const {
  if (degree < 0 || degree > truncation_) throw TruncationError("degree " + std::to_string(degree) + " outside the loop group");
  return generators_[static_cast<std::size_t>(degree)];
}

const GroupWord& FreeSimplicialGroup::face_of_generator(int degree, int i, int g) const {
  return faces_.at(static_cast<std::size_t>(degree)).at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(g));
}

const GroupWord& FreeSimplicialGroup::degeneracy_of_generator(int degree, int j, int g) const {
  return degeneracies_.at(static_cast<std::size_t>(degree)).at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(g));
}

void FreeSimplicialGroup::set_face(int degree, int i, int g, GroupWord image) {
  faces_.at(static_cast<std::size_t>(degree)).at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(g)) = std::move(image);
}

void FreeSimplicialGroup::set_degeneracy(int degree, int j, int g, GroupWord image) {
  degeneracies_.at(static_cast<std::size_t>(degree)).at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(g)) =
      std::move(image);
}

namespace {

template <class Image>
GroupWord extend(const GroupWord& w, Image&& image) {
  GroupWord out;
  for (const auto& l : w.letters()) {
    const GroupWord& g = image(l.generator);
    out = out * (l.exponent > 0 ? g : g.inverse());
  }
  return out;
}

}  // namespace

GroupWord FreeSimplicialGroup::face(int degree, int i, const GroupWord& w) const {
  return extend(w, [&](int g) -> const GroupWord& { return face_of_generator(degree, i, g); });
}

GroupWord FreeSimplicialGroup::degeneracy(int degree, int j, const GroupWord& w) const {
  return extend(w, [&](int g) -> const GroupWord& { return degeneracy_of_generator(degree, j, g); });
}

namespace {

bool in_image_of_s0(const Simplex& s) { return !s.degeneracies.empty() && s.degeneracies.back() == 0; }

}  // namespace

FreeSimplicialGroup kan_loop_group(const SimplicialSet& x, int truncation) {
  if (x.size(0) != 1) throw Error("the Kan loop group needs a reduced simplicial set (one vertex)");
  if (truncation + 1 > x.truncation())
    throw TruncationError("loop group up to degree " + std::to_string(truncation) + " needs X up to degree " +
                          std::to_string(truncation + 1));
  std::vector<std::vector<Simplex>> roster;
  std::vector<std::unordered_map<Simplex, int, SimplexHash>> index;
  std::vector<std::vector<std::string>> names;
  for (int n = 0; n <= truncation; ++n) {
    std::vector<Simplex> gens;
    std::unordered_map<Simplex, int, SimplexHash> idx;
    std::vector<std::string> labels;
    for (const auto& s : x.simplices(n + 1))
      if (!in_image_of_s0(s)) {
        idx.emplace(s, static_cast<int>(gens.size()));
        gens.push_back(s);
        labels.push_back("<" + x.label(s) + ">");
      }
    roster.push_back(std::move(gens));
    index.push_back(std::move(idx));
    names.push_back(std::move(labels));
  }
  FreeSimplicialGroup g(truncation, names);
  g.description =
      "Kan loop group: d_0<x> = <d_1 x><d_0 x>^-1, d_i<x> = <d_{i+1} x> for i >= 1, s_i<x> = <s_{i+1} x>, "
      "<s_0 y> = 1; connectivity of the realization: not certified";
  auto bracket = [&](int degree, const Simplex& s) {
    if (in_image_of_s0(s)) return GroupWord();
    return GroupWord::generator(index[static_cast<std::size_t>(degree)].at(s));
  };
  for (int n = 0; n <= truncation; ++n) {
    const auto& gens = roster[static_cast<std::size_t>(n)];
    for (int k = 0; k < static_cast<int>(gens.size()); ++k) {
      const auto& s = gens[static_cast<std::size_t>(k)];
      if (n > 0) {
        g.set_face(n, 0, k, bracket(n - 1, x.face(s, 1)) * bracket(n - 1, x.face(s, 0)).inverse());
        for (int i = 1; i <= n; ++i) g.set_face(n, i, k, bracket(n - 1, x.face(s, i + 1)));
      }
      if (n < truncation)
        for (int j = 0; j <= n; ++j) g.set_degeneracy(n, j, k, bracket(n + 1, degenerate(s, j + 1)));
    }
  }
  return g;
}

LoopCheckReport sample_identity_check(const FreeSimplicialGroup& g, std::size_t samples, std::uint64_t seed) {
  LoopCheckReport report;
  report.header = g.description;
  std::mt19937_64 rng(seed);
  const int top = g.truncation();
  auto random_word = [&](int degree) {
    const auto count = g.generators(degree).size();
    std::vector<Letter> letters;
    if (count == 0) return GroupWord();
    const auto length = std::uniform_int_distribution<int>(0, 6)(rng);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(count) - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int k = 0; k < length; ++k) letters.push_back(Letter{pick(rng), sign(rng) ? 1 : -1});
    return GroupWord(letters);
  };
  auto fail = [&](const std::string& identity, int degree, const GroupWord& w) {
    report.violations.push_back(identity + " in degree " + std::to_string(degree) + " at " +
                                w.to_string(g.generators(degree)));
  };
  for (std::size_t k = 0; k < samples; ++k) {
    const int n = std::uniform_int_distribution<int>(0, top)(rng);
    const auto v = random_word(n);
    const auto w = random_word(n);
    ++report.samples;
    for (int i = 0; n > 0 && i <= n; ++i) {
      if (g.face(n, i, v * w) != g.face(n, i, v) * g.face(n, i, w)) fail("d" + std::to_string(i) + " product", n, v * w);
      if (g.face(n, i, v.inverse()) != g.face(n, i, v).inverse()) fail("d" + std::to_string(i) + " inverse", n, v);
      for (int j = i + 1; n > 1 && j <= n; ++j)
        if (g.face(n - 1, i, g.face(n, j, v)) != g.face(n - 1, j - 1, g.face(n, i, v)))
          fail("d" + std::to_string(i) + "d" + std::to_string(j), n, v);
    }
    if (n < top)
      for (int j = 0; j <= n; ++j) {
        const auto sv = g.degeneracy(n, j, v);
        if (g.degeneracy(n, j, v * w) != sv * g.degeneracy(n, j, w)) fail("s" + std::to_string(j) + " product", n, v * w);
        for (int i = 0; i <= n + 1; ++i) {
          const auto lhs = g.face(n + 1, i, sv);
          GroupWord rhs;
          if (i < j)
            rhs = g.degeneracy(n - 1, j - 1, g.face(n, i, v));
          else if (i == j || i == j + 1)
            rhs = v;
          else
            rhs = g.degeneracy(n - 1, j, g.face(n, i - 1, v));
          if (lhs != rhs) fail("d" + std::to_string(i) + "s" + std::to_string(j), n, v);
        }
        for (int i = 0; i <= j && n + 1 < top; ++i)
          if (g.degeneracy(n + 1, i, sv) != g.degeneracy(n + 1, j + 1, g.degeneracy(n, i, v)))
            fail("s" + std::to_string(i) + "s" + std::to_string(j), n, v);
      }
  }
  return report;
}

}  // namespace cybar
