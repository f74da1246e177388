#pragma once

// Simplicial sets given concretely: every element of every degree is an
// integer tuple and the structure maps are functions on tuples. This is how
// nerves, cyclic bar constructions, generalized wedges and diagonals are
// described; `Materialized` converts such a model into canonical form.

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cybar/identities.hpp"
#include "cybar/simplicial.hpp"

namespace cybar {

using Tuple = std::vector<int>;

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept;
};

struct TupleModel {
  int truncation = 0;
  std::function<std::vector<Tuple>(int)> elements;
  std::function<Tuple(int degree, int i, const Tuple&)> face;
  std::function<Tuple(int degree, int j, const Tuple&)> degeneracy;
  /// Must be injective per degree; used as the simplex name.
  std::function<std::string(int degree, const Tuple&)> label;
  std::optional<Tuple> basepoint;
};

IdentityReport validate_identities(const TupleModel& model);

class Materialized {
 public:
  /// Enumerates the model under the active simplex cap.
  explicit Materialized(TupleModel model);

  const SetPtr& set() const noexcept { return set_; }
  const TupleModel& model() const noexcept { return model_; }

  std::optional<int> id_of(int degree, const Tuple& t) const;
  const Tuple& tuple(int degree, int id) const;

  /// Canonical form of an arbitrary element: the index set of its
  /// degeneracy word is {j : t in image(s_j)}.
  Simplex decompose(int degree, const Tuple& t) const;

  bool is_nondegenerate(int degree, const Tuple& t) const;

 private:
  TupleModel model_;
  SetPtr set_;
  std::vector<std::unordered_map<Tuple, int, TupleHash>> index_;
  std::vector<std::vector<Tuple>> tuples_;
};

using TupleFunction = std::function<Tuple(int degree, const Tuple&)>;

/// f d_i = d_i f and f s_j = s_j f on every element up to the truncation of
/// the source model.
MapReport validate_tuple_map(const TupleModel& source, const TupleModel& target, const TupleFunction& f);

struct BijectionReport {
  bool bijective = true;
  int degree = -1;
  std::string witness;  // two colliding elements, or an element missed
};

/// Checks that f maps the degree-n elements of `source` bijectively onto those
/// of `target` for every n up to the source truncation.
BijectionReport check_degreewise_bijection(const TupleModel& source, const TupleModel& target,
                                           const TupleFunction& f);

/// Canonical-form simplicial map induced by a tuple function.
SimplicialMap realize_map(const Materialized& source, const Materialized& target, const TupleFunction& f);

std::string tuple_label(const Tuple& t, const std::vector<std::string>& names, char separator = '/');

}  // namespace cybar
