#include "cybar/model.hpp"

#include <algorithm>
#include <unordered_set>

#include "cybar/error.hpp"

namespace cybar {

std::size_t TupleHash::operator()(const Tuple& t) const noexcept {
  std::size_t h = t.size();
  for (int v : t) h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

IdentityReport validate_identities(const TupleModel& m) {
  return check_simplicial_identities(m.truncation, m.elements, m.face, m.degeneracy, m.label);
}

Materialized::Materialized(TupleModel model) : model_(std::move(model)) {
  const int top = model_.truncation;
  SimplicialSet out(top);
  index_.resize(static_cast<std::size_t>(top + 1));
  tuples_.resize(static_cast<std::size_t>(top + 1));
  std::size_t seen = 0;
  for (int n = 0; n <= top; ++n) {
    const auto elements = model_.elements(n);
    seen += elements.size();
    if (seen > simplex_cap()) throw CapExceeded(n, seen, simplex_cap());
    for (const auto& t : elements) {
      if (!is_nondegenerate(n, t)) continue;
      std::vector<Simplex> faces;
      if (n > 0) {
        faces.reserve(static_cast<std::size_t>(n + 1));
        for (int i = 0; i <= n; ++i) faces.push_back(decompose(n - 1, model_.face(n, i, t)));
      }
      const int id = out.add(n, model_.label(n, t), std::move(faces));
      index_[static_cast<std::size_t>(n)].emplace(t, id);
      tuples_[static_cast<std::size_t>(n)].push_back(t);
    }
  }
  if (model_.basepoint) {
    auto id = id_of(0, *model_.basepoint);
    if (!id) throw InvariantError("basepoint is not a vertex of the model");
    out.set_basepoint(*id);
  }
  set_ = share(std::move(out));
}

bool Materialized::is_nondegenerate(int degree, const Tuple& t) const {
  for (int j = 0; j < degree; ++j)
    if (model_.degeneracy(degree - 1, j, model_.face(degree, j, t)) == t) return false;
  return true;
}

std::optional<int> Materialized::id_of(int degree, const Tuple& t) const {
  if (degree < 0 || degree >= static_cast<int>(index_.size())) return std::nullopt;
  const auto& idx = index_[static_cast<std::size_t>(degree)];
  auto it = idx.find(t);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

const Tuple& Materialized::tuple(int degree, int id) const {
  return tuples_.at(static_cast<std::size_t>(degree)).at(static_cast<std::size_t>(id));
}

Simplex Materialized::decompose(int degree, const Tuple& t) const {
  Word word;
  for (int j = degree - 1; j >= 0; --j)
    if (model_.degeneracy(degree - 1, j, model_.face(degree, j, t)) == t) word.push_back(j);
  Tuple base = t;
  int d = degree;
  for (int j : word) base = model_.face(d--, j, base);
  auto id = id_of(d, base);
  if (!id) throw InvariantError("element " + model_.label(degree, t) + " has no nondegenerate base in the roster");
  return Simplex{d, *id, std::move(word)};
}

MapReport validate_tuple_map(const TupleModel& source, const TupleModel& target, const TupleFunction& f) {
  MapReport report;
  for (int n = 0; n <= source.truncation; ++n) {
    for (const auto& x : source.elements(n)) {
      const auto fx = f(n, x);
      for (int i = 0; n > 0 && i <= n; ++i)
        if (f(n - 1, source.face(n, i, x)) != target.face(n, i, fx))
          report.violations.push_back(Violation{"f d" + std::to_string(i), n, source.label(n, x)});
      for (int j = 0; n + 1 <= source.truncation && j <= n; ++j)
        if (f(n + 1, source.degeneracy(n, j, x)) != target.degeneracy(n, j, fx))
          report.violations.push_back(Violation{"f s" + std::to_string(j), n, source.label(n, x)});
    }
  }
  return report;
}

BijectionReport check_degreewise_bijection(const TupleModel& source, const TupleModel& target,
                                           const TupleFunction& f) {
  BijectionReport report;
  for (int n = 0; n <= source.truncation; ++n) {
    std::unordered_map<Tuple, Tuple, TupleHash> preimage;
    for (const auto& x : source.elements(n)) {
      auto fx = f(n, x);
      auto [it, fresh] = preimage.emplace(fx, x);
      if (!fresh) {
        report.bijective = false;
        report.degree = n;
        report.witness = source.label(n, it->second) + " and " + source.label(n, x) + " both map to " +
                         target.label(n, fx);
        return report;
      }
    }
    for (const auto& y : target.elements(n)) {
      if (!preimage.count(y)) {
        report.bijective = false;
        report.degree = n;
        report.witness = target.label(n, y) + " has no preimage";
        return report;
      }
    }
    if (preimage.size() != target.elements(n).size()) {
      report.bijective = false;
      report.degree = n;
      report.witness = "image leaves the target roster";
      return report;
    }
  }
  return report;
}

SimplicialMap realize_map(const Materialized& source, const Materialized& target, const TupleFunction& f) {
  SimplicialMap out(source.set(), target.set());
  const int top = std::min(source.set()->truncation(), target.set()->truncation());
  for (int n = 0; n <= top; ++n)
    for (std::size_t id = 0; id < source.set()->size(n); ++id)
      out.set(n, static_cast<int>(id), target.decompose(n, f(n, source.tuple(n, static_cast<int>(id)))));
  return out;
}

std::string tuple_label(const Tuple& t, const std::vector<std::string>& names, char separator) {
  if (t.empty()) return "<>";
  std::string out;
  for (std::size_t p = 0; p < t.size(); ++p) {
    if (p) out += separator;
    out += names.at(static_cast<std::size_t>(t[p]));
  }
  return out;
}

}  // namespace cybar
