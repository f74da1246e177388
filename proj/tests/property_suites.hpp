#pragma once

// Generated instances for the homological gluing and realization properties,
// shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <string>
#include <vector>

namespace cybar::testing {

struct SuiteResult {
  std::size_t tested = 0;   // instances whose hypotheses held
  std::size_t skipped = 0;  // generated instances whose hypotheses failed
  std::size_t sharp = 0;    // tested instances whose map fails one degree higher
  std::vector<std::string> violations;
};

/// Pushout squares B <- A -> C with A -> B injective and comparison maps into
/// a second square; whenever all three comparison maps are homology
/// isomorphisms through degree k, so must be the induced map on pushouts.
SuiteResult gluing_suite(std::uint64_t seed, std::size_t wanted);

/// Maps of bisimplicial sets (external products and wedges of pointed
/// sets); whenever every row is a homology isomorphism through degree k, so
/// must be the map of diagonals.
SuiteResult realization_suite(std::uint64_t seed, std::size_t wanted);

}  // namespace cybar::testing
