#pragma once

// Bar-type constructions on finite monoids and operation situations: the
// nerve, the generalized wedge, the cyclic bar construction, and the
// comparison between the cyclic bar construction of a generalized wedge and
// the generalized wedge of a semidirect product, factored through an
// intermediate simplicial set by two families of shear maps.
//
// Tuple layouts (degree n):
//   nerve                       (g_1, ..., g_n)
//   generalized wedge           (m_1, ..., m_n), at most one m_j outside H
//   cyclic bar                  (g_1, ..., g_n, x)
//   comparison source / middle  (g_1, ..., g_n, m_1, ..., m_n)
//   comparison target           wedge tuples of the semidirect situation,
//                               pair (g, m) encoded as g * |M| + m

#include <optional>
#include <string>
#include <vector>

#include "cybar/algebra.hpp"
#include "cybar/bisimplicial.hpp"
#include "cybar/model.hpp"
#include "cybar/report.hpp"
#include "cybar/simplicial.hpp"

namespace cybar {

TupleModel nerve_model(MonoidPtr m, int truncation);
SetPtr nerve(MonoidPtr m, int truncation);

/// Degree-p tuples of M with at most one coordinate outside the image of H.
std::vector<Tuple> wedge_tuples(const OperationSituation& s, int p);
bool is_wedge_tuple(const OperationSituation& s, const Tuple& t);

/// Face d_i and degeneracy s_j of a degree-p wedge tuple.
Tuple wedge_face(const OperationSituation& s, int p, int i, const Tuple& t);
Tuple wedge_degeneracy(const OperationSituation& s, int p, int j, const Tuple& t);

TupleModel wedge_model(SituationPtr s, int truncation);

/// Discrete situations: wedge direction horizontal, vertical direction
/// constant up to `vertical`.
BisimplicialSet generalized_wedge(SituationPtr s, int horizontal, int vertical);

/// The wedge of * < M for a pointed simplicial set M: bidegree (p, q) holds
/// the p-tuples of q-simplices with at most one away from the basepoint.
BisimplicialSet pointed_wedge(SetPtr m, int horizontal);

/// p-tuples whose left-to-right iterated product is defined when a product
/// xy counts as defined iff x or y lies in the submonoid.
std::vector<Tuple> composable_tuples(const DiscreteMonoid& m, const std::vector<int>& submonoid, int p);

struct PartialMonoidReport {
  int degree = 0;
  std::size_t composable = 0;
  std::size_t wedge = 0;
  /// Composable tuples that are not wedge tuples.
  std::vector<Tuple> only_composable;
  /// Wedge tuples that are not composable; expected empty.
  std::vector<Tuple> only_wedge;
};

PartialMonoidReport partial_monoid_discrepancy(const MonoidPtr& m, const MonoidPtr& submonoid, int p);

TupleModel cyclic_bar_model(ActionPtr action, int truncation);
SetPtr cyclic_bar(ActionPtr action, int truncation);

/// Coordinatewise G-action on the degree-p wedge tuples; throws
/// InvariantError if some tuple leaves the wedge.
TwoSidedAction wedge_action(const GAugmentedSituation& a, int p);

/// Cyclic bar construction of G on the generalized wedge, as a trisimplicial
/// set with axes (cyclic-bar, wedge, internal); discrete inputs are lifted
/// to constant simplicial objects in the internal direction.
TrisimplicialRef cyclic_bar_of_wedge(const GAugmentedSituation& a, int truncation);

/// The comparison data for one augmented situation up to a truncation.
class Comparison {
 public:
  Comparison(GAugmentedSituation augmented, int truncation);

  const GAugmentedSituation& augmented() const noexcept { return augmented_; }
  const SituationPtr& semidirect() const noexcept { return semidirect_; }
  int truncation() const noexcept { return truncation_; }

  /// Diagonal of the cyclic bar construction of G on the wedge.
  TupleModel source_model() const;
  /// Same elements, faces twisted by the right and left G-actions.
  TupleModel intermediate_model() const;
  /// Wedge of the semidirect situation.
  TupleModel target_model() const;

  /// (g; m) -> (g_j, g_j...g_n m_j g_1...g_j)_j, source to target.
  Tuple comparison_map(int n, const Tuple& t) const;
  /// m_j -> m_j g_1...g_j, source to intermediate.
  Tuple right_shear_map(int n, const Tuple& t) const;
  /// m_j -> g_j...g_n m_j, intermediate to target.
  Tuple left_shear_map(int n, const Tuple& t) const;

  /// m_j -> m_j g_i for j >= i, within one degree (1 <= i <= n).
  Tuple right_factor(int i, int n, const Tuple& t) const;
  /// m_j -> g_i m_j for j <= i, within one degree.
  Tuple left_factor(int i, int n, const Tuple& t) const;

  /// Pairs (g_j, m_j) encoded in the semidirect carrier.
  Tuple interleave(int n, const Tuple& t) const;

  std::string label(int n, const Tuple& t) const;
  std::vector<Tuple> elements(int n) const;

 private:
  GAugmentedSituation augmented_;
  SituationPtr semidirect_;
  int truncation_;
};

/// Every check of the comparison on one instance: identities of the three
/// objects, the three maps being simplicial, both factorizations into shear
/// factors, the composite, and degreewise bijectivity.
std::vector<CheckRecord> verify_comparison(const Comparison& c, const std::string& instance);

/// Identities of the intermediate object; throws InvariantError on failure.
TupleModel intermediate_T(const GAugmentedSituation& a, int truncation);

enum class Side { left, right };

struct ShearReport {
  bool injective = true;
  bool surjective = true;
  std::string witness;
  bool bijective() const noexcept { return injective && surjective; }
};

/// (g, x) -> (g, g x) for Side::left, (g, x) -> (g, x g) for Side::right,
/// on G x X with the pair encoded as g * |X| + x.
int shear(const TwoSidedAction& a, Side side, int pair);
ShearReport shear_report(const TwoSidedAction& a, Side side);

/// Compatible maps of augmented situations along a monoid map of the acting
/// monoids.
struct SituationMap {
  SituationPtr source;
  SituationPtr target;
  std::vector<int> on_monoid;
  std::vector<int> on_carrier;
};

std::optional<AxiomViolation> check_situation_map(const SituationMap& f);

/// Naturality of the comparison map along (a, f): checks that f is
/// compatible with the G-actions through a, then compares both composites on
/// every source element up to the smaller truncation.
CheckRecord naturality_check(const Comparison& from, const Comparison& to, const MonoidMap& a,
                             const SituationMap& f);

}  // namespace cybar
