#pragma once

// Finite truncated simplicial sets in Eilenberg-Zilber canonical form.
//
// A simplex is stored as s_{i_k} ... s_{i_1} x with x nondegenerate and
// i_k > ... > i_1; only the nondegenerate simplices and their faces are
// materialized. Faces and degeneracies of degenerate simplices are computed
// by rewriting with the simplicial identities.

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cybar {

/// Degeneracy word, outermost operator first, strictly decreasing.
using Word = std::vector<int>;

struct Simplex {
  int base_degree = 0;
  int id = 0;
  Word degeneracies;

  int degree() const noexcept { return base_degree + static_cast<int>(degeneracies.size()); }
  bool degenerate() const noexcept { return !degeneracies.empty(); }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

bool is_canonical_word(const Word& w) noexcept;

/// Canonical form of s_j applied to the word `w`.
Word apply_degeneracy(Word w, int j);

/// s_j s.
Simplex degenerate(Simplex s, int j);

/// s_{n-1} ... s_0 applied to the vertex `vertex`.
Simplex degenerate_vertex(int vertex, int degree);

class SimplicialSet {
 public:
  explicit SimplicialSet(int truncation);

  int truncation() const noexcept { return truncation_; }

  /// Registers a nondegenerate simplex. `faces` must hold degree + 1 entries
  /// (none in degree 0), each of degree `degree - 1`. Returns the new id.
  int add(int degree, std::string name, std::vector<Simplex> faces = {});

  /// Overwrites a stored face; used to build deliberately broken fixtures.
  void set_face(int degree, int id, int i, Simplex face);

  std::size_t size(int degree) const noexcept;
  const std::string& name(int degree, int id) const;
  std::optional<int> find(int degree, std::string_view name) const;

  /// Highest degree that holds a nondegenerate simplex, -1 when empty.
  int top_degree() const noexcept;

  Simplex nondegenerate(int degree, int id) const;
  const Simplex& stored_face(int degree, int id, int i) const;

  /// d_i s, computed from the canonical form.
  Simplex face(const Simplex& s, int i) const;

  /// Every simplex of the given degree, degenerate ones included.
  std::vector<Simplex> simplices(int degree) const;
  std::size_t simplex_count(int degree) const;

  std::string label(const Simplex& s) const;

  void set_basepoint(int vertex);
  std::optional<int> basepoint() const noexcept { return basepoint_; }
  /// The basepoint degenerated up to `degree`. Requires a basepoint.
  Simplex base_simplex(int degree) const;
  bool is_base(const Simplex& s) const noexcept;

  /// Same nondegenerate simplices, different truncation level. Raising the
  /// level treats the set as its own skeleton (no new nondegenerate
  /// simplices); lowering it drops the rosters above the new level.
  SimplicialSet with_truncation(int truncation) const;

  /// Nondegenerate simplices up to `degree` only, same truncation level.
  SimplicialSet skeleton(int degree) const;

 private:
  struct Entry {
    std::string name;
    std::vector<Simplex> faces;
  };

  void check_simplex(const Simplex& s) const;

  int truncation_;
  std::vector<std::vector<Entry>> rosters_;
  std::vector<std::unordered_map<std::string, int>> by_name_;
  std::optional<int> basepoint_;
};

using SetPtr = std::shared_ptr<const SimplicialSet>;

/// A simplicial map given on nondegenerate simplices and extended to
/// degenerate ones by f(s_I x) = s_I f(x).
class SimplicialMap {
 public:
  SimplicialMap(SetPtr source, SetPtr target);

  void set(int degree, int id, Simplex image);
  Simplex operator()(const Simplex& s) const;
  const Simplex& image(int degree, int id) const;

  const SimplicialSet& source() const noexcept { return *source_; }
  const SimplicialSet& target() const noexcept { return *target_; }
  const SetPtr& source_ptr() const noexcept { return source_; }
  const SetPtr& target_ptr() const noexcept { return target_; }

  static SimplicialMap identity(SetPtr set);

 private:
  SetPtr source_;
  SetPtr target_;
  std::vector<std::vector<std::optional<Simplex>>> images_;
};

/// g after f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Number of components of the 1-skeleton.
std::size_t pi0(const SimplicialSet& x);

/// Alternating sum of nondegenerate counts up to the truncation level.
long euler_characteristic(const SimplicialSet& x);

inline SetPtr share(SimplicialSet x) { return std::make_shared<const SimplicialSet>(std::move(x)); }

}  // namespace cybar
