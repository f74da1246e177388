#pragma once

// Standard simplicial sets and the categorical constructions on them.

#include <functional>
#include <vector>

#include "cybar/simplicial.hpp"

namespace cybar {

/// Delta^n truncated at `truncation`; throws TruncationError if n exceeds it.
SimplicialSet std_simplex(int n, int truncation);

/// Delta^0.
SimplicialSet point(int truncation);

/// Delta^1 / boundary: vertex "*" and edge "e" with both faces at "*".
SimplicialSet simplicial_circle(int truncation);

/// Delta^n / boundary with one vertex and one nondegenerate n-simplex.
SimplicialSet minimal_sphere(int n, int truncation);

/// Ordered simplicial complex on vertices 0..k given by its facets.
SimplicialSet from_complex(const std::vector<std::vector<int>>& facets, int truncation);

/// Join with a new apex vertex "c"; pointed at the apex.
SimplicialSet cone(const SimplicialSet& x, int truncation);

struct Product {
  SetPtr set;
  SimplicialMap first;
  SimplicialMap second;
};

/// Degreewise product; nondegenerate simplices are the pairs whose
/// degeneracy index sets are disjoint.
Product product(SetPtr x, SetPtr y);

struct Quotient {
  SetPtr set;
  SimplicialMap projection;
};

/// X / A for the subset A of nondegenerate simplices selected by `in_a`.
/// A must be closed under faces; it collapses onto the new basepoint "*".
Quotient quotient(SetPtr x, const std::function<bool(int degree, int id)>& in_a);

struct Pushout {
  SetPtr set;
  SimplicialMap from_b;
  SimplicialMap from_c;
};

/// B u_A C for f: A -> B degreewise injective and any g: A -> C.
Pushout pushout(const SimplicialMap& f, const SimplicialMap& g);

/// Map between pushouts induced by maps on the B and C corners. The squares
/// over the A corner are assumed to commute; validate_map detects when they
/// do not.
SimplicialMap induced_pushout_map(const Pushout& from, const Pushout& to, const SimplicialMap& on_b,
                                  const SimplicialMap& on_c);

/// One-point union along the basepoints.
SimplicialSet wedge(SetPtr x, SetPtr y);

/// X x Y / (X v Y).
SimplicialSet smash(SetPtr x, SetPtr y);

SimplicialSet disjoint_union(SetPtr x, SetPtr y);

/// Map sending every simplex with a name also present in `x` (same degree)
/// to that simplex. Throws if some simplex of `a` has no counterpart.
SimplicialMap inclusion_by_name(SetPtr a, SetPtr x);

/// Everything to the (degenerated) vertex `vertex` of `target`.
SimplicialMap constant_map(SetPtr source, SetPtr target, int vertex = 0);

/// True when f sends nondegenerate simplices to pairwise distinct
/// nondegenerate simplices, i.e. f is injective in every degree.
bool degreewise_injective(const SimplicialMap& f);

}  // namespace cybar
