#pragma once

// Exhaustive verification of the simplicial identities
//   d_i d_j = d_{j-1} d_i            (i < j)
//   d_i s_j = s_{j-1} d_i            (i < j)
//   d_i s_j = id                     (i = j, j + 1)
//   d_i s_j = s_j d_{i-1}            (i > j + 1)
//   s_i s_j = s_{j+1} s_i            (i <= j)
// over every element of degree <= truncation. Violations are data.

#include <string>
#include <vector>

#include "cybar/simplicial.hpp"

namespace cybar {

struct Violation {
  std::string identity;  // e.g. "d0d1", "d2s0", "s0s1", "h:d0d1", "hv:d0d1"
  int degree = 0;
  std::string simplex;
};

struct IdentityReport {
  std::vector<Violation> violations;
  int degrees_checked = -1;
  bool ok() const noexcept { return violations.empty(); }
  void merge(IdentityReport other);
};

/// `elements(n)` lists the degree-n elements, `face(n, i, x)` and
/// `degeneracy(n, j, x)` act on a degree-n element, `label(n, x)` names it.
template <class Elements, class Face, class Degeneracy, class Label>
IdentityReport check_simplicial_identities(int truncation, Elements&& elements, Face&& face, Degeneracy&& degeneracy,
                                           Label&& label, const std::string& prefix = "") {
  IdentityReport report;
  report.degrees_checked = truncation;
  auto fail = [&](std::string identity, int n, const auto& x) {
    report.violations.push_back(Violation{prefix + std::move(identity), n, label(n, x)});
  };
  for (int n = 0; n <= truncation; ++n) {
    for (const auto& x : elements(n)) {
      if (n >= 2) {
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (!(face(n - 1, i, face(n, j, x)) == face(n - 1, j - 1, face(n, i, x))))
              fail("d" + std::to_string(i) + "d" + std::to_string(j), n, x);
      }
      if (n + 1 <= truncation) {
        for (int j = 0; j <= n; ++j) {
          const auto sx = degeneracy(n, j, x);
          for (int i = 0; i <= n + 1; ++i) {
            bool good;
            if (i == j || i == j + 1) {
              good = face(n + 1, i, sx) == x;
            } else if (i < j) {
              good = face(n + 1, i, sx) == degeneracy(n - 1, j - 1, face(n, i, x));
            } else {
              good = face(n + 1, i, sx) == degeneracy(n - 1, j, face(n, i - 1, x));
            }
            if (!good) fail("d" + std::to_string(i) + "s" + std::to_string(j), n, x);
          }
        }
      }
      if (n + 2 <= truncation) {
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            if (!(degeneracy(n + 1, i, degeneracy(n, j, x)) == degeneracy(n + 1, j + 1, degeneracy(n, i, x))))
              fail("s" + std::to_string(i) + "s" + std::to_string(j), n, x);
      }
    }
  }
  return report;
}

/// Identities of a canonical-form simplicial set, checked on all simplices.
IdentityReport validate_identities(const SimplicialSet& x);

struct MapReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// f d_i = d_i f on every simplex up to the smaller truncation level, and
/// degree preservation on nondegenerate simplices.
MapReport validate_map(const SimplicialMap& f);

}  // namespace cybar
