#pragma once

// Finite monoids, two-sided compatible actions, operation situations H < M
// (H acting on M from both sides, together with an embedding of H into M) and
// the semidirect products built from them. Axiom checks are exhaustive and
// report their first violation as data.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cybar/error.hpp"

namespace cybar {

struct AxiomViolation {
  std::string axiom;                 // e.g. "associativity", "left unit"
  std::vector<std::string> witness;  // offending elements, by name
  std::string to_string() const;
};

/// A validated value or the first violated axiom.
template <class T>
class Checked {
 public:
  Checked(T value) : state_(std::move(value)) {}                // NOLINT(google-explicit-constructor)
  Checked(AxiomViolation bad) : state_(std::move(bad)) {}       // NOLINT(google-explicit-constructor)

  bool ok() const noexcept { return std::holds_alternative<T>(state_); }
  explicit operator bool() const noexcept { return ok(); }

  /// Throws InvariantError carrying the violation when not ok.
  const T& value() const& {
    if (!ok()) throw InvariantError(std::get<AxiomViolation>(state_).to_string());
    return std::get<T>(state_);
  }
  T&& value() && {
    if (!ok()) throw InvariantError(std::get<AxiomViolation>(state_).to_string());
    return std::get<T>(std::move(state_));
  }
  const AxiomViolation& violation() const { return std::get<AxiomViolation>(state_); }

 private:
  std::variant<T, AxiomViolation> state_;
};

using Table = std::vector<std::vector<int>>;

class DiscreteMonoid {
 public:
  const std::string& title() const noexcept { return title_; }
  std::size_t size() const noexcept { return names_.size(); }
  int unit() const noexcept { return unit_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  const std::string& name(int a) const { return names_.at(static_cast<std::size_t>(a)); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<int> find(std::string_view name) const;

  std::optional<int> inverse(int a) const;
  bool is_group() const;
  bool commutative() const;
  /// A pair that does not commute, if any.
  std::optional<std::pair<int, int>> noncommuting_pair() const;

  friend Checked<DiscreteMonoid> monoid_from_table(std::string title, std::vector<std::string> roster, int unit,
                                                  Table table);

 private:
  DiscreteMonoid() = default;
  std::string title_;
  std::vector<std::string> names_;
  int unit_ = 0;
  Table table_;
};

using MonoidPtr = std::shared_ptr<const DiscreteMonoid>;

/// Checks totality, the two-sided unit law and associativity, in that order.
Checked<DiscreteMonoid> monoid_from_table(std::string title, std::vector<std::string> roster, int unit, Table table);

inline MonoidPtr share(DiscreteMonoid m) { return std::make_shared<const DiscreteMonoid>(std::move(m)); }

struct MonoidMap {
  MonoidPtr source;
  MonoidPtr target;
  std::vector<int> map;
  int operator()(int a) const { return map.at(static_cast<std::size_t>(a)); }
};

std::optional<AxiomViolation> check_monoid_map(const MonoidMap& f);

/// G acting on a finite set X from the left (left[g][x]) and from the right
/// (right[x][g]).
struct TwoSidedAction {
  MonoidPtr monoid;
  std::vector<std::string> carrier;
  Table left;
  Table right;

  std::size_t size() const noexcept { return carrier.size(); }
  int act_left(int g, int x) const { return left[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)]; }
  int act_right(int x, int g) const { return right[static_cast<std::size_t>(x)][static_cast<std::size_t>(g)]; }
};

using ActionPtr = std::shared_ptr<const TwoSidedAction>;

/// Associativity and unit on each side, then (g.x).g' = g.(x.g').
Checked<TwoSidedAction> check_action(MonoidPtr monoid, std::vector<std::string> carrier, Table left, Table right);

inline ActionPtr share(TwoSidedAction a) { return std::make_shared<const TwoSidedAction>(std::move(a)); }

/// H acting on M from both sides with an injective, H-equivariant embedding
/// iota: H -> M. The basepoint of M is iota(1).
class OperationSituation {
 public:
  const MonoidPtr& monoid() const noexcept { return action_->monoid; }
  const ActionPtr& action() const noexcept { return action_; }
  const std::vector<int>& iota() const noexcept { return iota_; }

  std::size_t carrier_size() const noexcept { return action_->size(); }
  const std::string& carrier_name(int m) const { return action_->carrier.at(static_cast<std::size_t>(m)); }
  int basepoint() const { return iota_[static_cast<std::size_t>(monoid()->unit())]; }

  /// h with iota(h) = m, if m lies in the image of H.
  std::optional<int> preimage(int m) const;
  bool in_image(int m) const { return preimage(m).has_value(); }

  /// The product of two carrier elements of which at least one lies in the
  /// image of H: multiplication in H, or the action of H on M. Throws
  /// InvariantError when neither lies in the image.
  int star(int m, int m2) const;

  friend Checked<OperationSituation> make_situation(ActionPtr action, std::vector<int> iota);

 private:
  OperationSituation() = default;
  ActionPtr action_;
  std::vector<int> iota_;
  std::vector<int> preimage_;
};

using SituationPtr = std::shared_ptr<const OperationSituation>;

/// Checks that iota is injective and intertwines the multiplication of H with
/// both actions on M.
Checked<OperationSituation> make_situation(ActionPtr action, std::vector<int> iota);

inline SituationPtr share(OperationSituation s) { return std::make_shared<const OperationSituation>(std::move(s)); }

/// A second monoid G acting compatibly on H < M.
struct GAugmentedSituation {
  SituationPtr situation;
  MonoidPtr group;
  ActionPtr on_monoid;   // G on the underlying set of H
  ActionPtr on_carrier;  // G on M
};

/// Both actions valid; G acts on H by monoid maps from each side; G
/// distributes over the H-action on M; iota is G-equivariant.
Checked<GAugmentedSituation> augment(SituationPtr situation, MonoidPtr group, ActionPtr on_monoid,
                                     ActionPtr on_carrier);

/// G x H with (g,h)(g',h') = (gg', (h.g')(g.h')); element (g,h) has index
/// g * |H| + h. Preconditions are returned as a violation; failure of the
/// result to be associative throws InvariantError.
Checked<DiscreteMonoid> semidirect_monoid(const MonoidPtr& group, const MonoidPtr& h, const TwoSidedAction& on_monoid);

/// (G x| H) < (G x M), carrier element (g,m) has index g * |M| + m. Throws
/// InvariantError if the result fails re-validation.
OperationSituation semidirect_opsit(const GAugmentedSituation& a);

/// Constant simplicial monoid: the same monoid in every degree up to the
/// truncation, all structure maps identities.
struct ConstantSimplicialMonoid {
  MonoidPtr monoid;
  int truncation = 0;
  std::size_t size(int) const { return monoid->size(); }
  int face(int, int, int x) const { return x; }
  int degeneracy(int, int, int x) const { return x; }
  int mul(int, int a, int b) const { return monoid->mul(a, b); }
};

ConstantSimplicialMonoid lift_constant(MonoidPtr m, int truncation);

namespace builtin {

/// Z/n written multiplicatively: 1, a, a2, ...
MonoidPtr cyclic(int n);
/// Permutations of {1,2,3} in one-line notation, composed as functions.
MonoidPtr symmetric3();
MonoidPtr trivial();
/// {1, x, 0} with x x = 0 and 0 absorbing.
MonoidPtr zero_monoid();
/// The submonoid on the named elements; throws if not closed.
MonoidPtr submonoid(const MonoidPtr& m, const std::vector<std::string>& elements);

/// G on itself by left and right multiplication.
TwoSidedAction translation(const MonoidPtr& g);
/// G on its underlying set with an added fixed point "+", acting by
/// translation elsewhere.
TwoSidedAction pointed_translation(const MonoidPtr& g);
TwoSidedAction trivial_action(const MonoidPtr& g, std::vector<std::string> carrier);
/// Restriction of the translation action of M to a submonoid.
TwoSidedAction restricted_translation(const MonoidPtr& sub, const MonoidPtr& m);

/// H < H with iota the identity.
OperationSituation self_situation(const MonoidPtr& h);
/// * < M for a pointed finite set, trivial action.
OperationSituation pointed_situation(std::vector<std::string> carrier, int basepoint);
/// A < M for a submonoid A of M acting by multiplication.
OperationSituation submonoid_situation(const MonoidPtr& sub, const MonoidPtr& m);
/// G acting on * < G_+ by translation; the instance behind the comparison map.
GAugmentedSituation translation_instance(const MonoidPtr& g);

}  // namespace builtin

}  // namespace cybar
