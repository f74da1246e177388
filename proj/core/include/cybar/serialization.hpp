#pragma once

// Text format for finite simplicial sets:
//
//   sset N=2
//   base *
//   deg 0: *
//   deg 1: e
//   d 0 e = |*
//   d 1 e = |*
//
// Face lines follow the `deg` line of the simplex they belong to. A face is a
// decreasing degeneracy word (comma separated, possibly empty) applied to a
// named nondegenerate simplex.

#include <string>
#include <string_view>

#include "cybar/simplicial.hpp"

namespace cybar {

std::string write_sset(const SimplicialSet& x);

/// Throws ParseError with the offending line.
SimplicialSet read_sset(std::string_view text);

}  // namespace cybar
