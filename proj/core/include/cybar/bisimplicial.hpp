#pragma once

// Bisimplicial sets stored explicitly (every element of every bidegree),
// diagonals, and the three-axis objects arising from the cyclic bar
// construction of a generalized wedge.

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cybar/identities.hpp"
#include "cybar/model.hpp"
#include "cybar/simplicial.hpp"

namespace cybar {

class BisimplicialSet {
 public:
  /// Functional description used to tabulate a bisimplicial set. Bidegree
  /// (p, q): p is the horizontal direction, q the vertical one.
  struct Ops {
    std::function<std::size_t(int p, int q)> count;
    std::function<int(int p, int q, int i, int x)> hface;
    std::function<int(int p, int q, int j, int x)> hdegeneracy;
    std::function<int(int p, int q, int i, int x)> vface;
    std::function<int(int p, int q, int j, int x)> vdegeneracy;
    std::function<std::string(int p, int q, int x)> label;
  };

  static BisimplicialSet tabulate(int horizontal, int vertical, const Ops& ops);

  int horizontal_truncation() const noexcept { return horizontal_; }
  int vertical_truncation() const noexcept { return vertical_; }

  std::size_t size(int p, int q) const;
  int hface(int p, int q, int i, int x) const;
  int hdegeneracy(int p, int q, int j, int x) const;
  int vface(int p, int q, int i, int x) const;
  int vdegeneracy(int p, int q, int j, int x) const;
  const std::string& label(int p, int q, int x) const;

  void set_basepoint(int x) { basepoint_ = x; }
  std::optional<int> basepoint() const noexcept { return basepoint_; }

  /// Overwrites a stored horizontal face; for broken fixtures.
  void set_hface(int p, int q, int i, int x, int value);

 private:
  struct Cell {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> hface, hdeg, vface, vdeg;  // [operator][element]
  };
  const Cell& cell(int p, int q) const;

  int horizontal_ = 0;
  int vertical_ = 0;
  std::vector<Cell> cells_;
  std::optional<int> basepoint_;
};

using BisetPtr = std::shared_ptr<const BisimplicialSet>;

/// Bisimplicial set described on integer tuples, tabulated by enumeration.
struct BiTupleModel {
  int horizontal = 0;
  int vertical = 0;
  std::function<std::vector<Tuple>(int p, int q)> elements;
  std::function<Tuple(int p, int q, int i, const Tuple&)> hface;
  std::function<Tuple(int p, int q, int j, const Tuple&)> hdegeneracy;
  std::function<Tuple(int p, int q, int i, const Tuple&)> vface;
  std::function<Tuple(int p, int q, int j, const Tuple&)> vdegeneracy;
  std::function<std::string(int p, int q, const Tuple&)> label;
  std::optional<Tuple> basepoint;  // an element of bidegree (0, 0)
};

/// Enumerates the model; throws InvariantError if a structure map leaves the
/// enumerated elements.
BisimplicialSet tabulate(const BiTupleModel& model);

/// Both directions satisfy the simplicial identities and every horizontal
/// operator commutes with every vertical one.
IdentityReport validate_identities(const BisimplicialSet& b);

/// Degree n is bidegree (n, n) with d_i = d_i^h d_i^v and s_i = s_i^h s_i^v.
TupleModel diagonal_model(BisetPtr b);
SimplicialSet diagonal(BisetPtr b);

/// Row p: the vertical simplicial set q -> B_{p,q}.
TupleModel row_model(BisetPtr b, int p);

/// (p, q) -> X_p x Y_q.
BisimplicialSet external_product(SetPtr x, SetPtr y);
/// (p, q) -> X_p smash Y_q.
BisimplicialSet external_smash(SetPtr x, SetPtr y);
/// (p, q) -> X_q, identity structure maps horizontally.
BisimplicialSet constant_horizontal(SetPtr x, int horizontal);

/// Map of bisimplicial sets given bidegreewise on element indices.
struct BisimplicialMap {
  BisetPtr source;
  BisetPtr target;
  std::function<int(int p, int q, int x)> apply;
};

MapReport validate_map(const BisimplicialMap& f);
TupleFunction diagonal_function(const BisimplicialMap& f);
TupleFunction row_function(const BisimplicialMap& f, int p);

/// Element listing of a canonical-form simplicial set, shared by the
/// explicit constructions.
struct SimplexIndex {
  std::vector<std::vector<Simplex>> simplices;
  std::vector<std::unordered_map<Simplex, int, SimplexHash>> position;
  explicit SimplexIndex(const SimplicialSet& x);
  int operator()(const Simplex& s) const;
};

/// Three commuting simplicial directions, evaluated on demand.
struct TrisimplicialRef {
  using Degree = std::array<int, 3>;
  Degree truncation{};
  std::array<std::string, 3> axis_names{"cyclic-bar", "wedge", "internal"};
  std::function<std::size_t(Degree)> count;
  std::function<int(int axis, Degree, int i, int x)> face;
  std::function<int(int axis, Degree, int j, int x)> degeneracy;
  std::function<std::string(Degree, int x)> label;
  std::optional<int> basepoint;
};

IdentityReport validate_identities(const TrisimplicialRef& t);

/// Diagonalizes the two named axes into the horizontal direction; the third
/// axis becomes the vertical direction.
BisimplicialSet partial_diagonal(const TrisimplicialRef& t, std::pair<int, int> axes);

/// Degree n is tridegree (n, n, n).
TupleModel triple_diagonal_model(const TrisimplicialRef& t);

/// (a, b, c) -> X_a x Y_b x Z_c.
TrisimplicialRef external_triple(SetPtr x, SetPtr y, SetPtr z);

}  // namespace cybar
