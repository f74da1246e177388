#include "cybar/identities.hpp"

#include <algorithm>

namespace cybar {

void IdentityReport::merge(IdentityReport other) {
  for (auto& v : other.violations) violations.push_back(std::move(v));
  degrees_checked = std::max(degrees_checked, other.degrees_checked);
}

IdentityReport validate_identities(const SimplicialSet& x) {
  return check_simplicial_identities(
      x.truncation(), [&](int n) { return x.simplices(n); },
      [&](int, int i, const Simplex& s) { return x.face(s, i); },
      [&](int, int j, const Simplex& s) { return degenerate(s, j); },
      [&](int, const Simplex& s) { return x.label(s); });
}

MapReport validate_map(const SimplicialMap& f) {
  MapReport report;
  const auto& src = f.source();
  const auto& tgt = f.target();
  const int top = std::min(src.truncation(), tgt.truncation());
  for (int n = 0; n <= top; ++n) {
    for (std::size_t id = 0; id < src.size(n); ++id) {
      if (f.image(n, static_cast<int>(id)).degree() != n)
        report.violations.push_back(Violation{"degree", n, src.name(n, static_cast<int>(id))});
    }
    if (n == 0) continue;
    for (const auto& s : src.simplices(n)) {
      const auto fs = f(s);
      for (int i = 0; i <= n; ++i)
        if (!(f(src.face(s, i)) == tgt.face(fs, i)))
          report.violations.push_back(Violation{"f d" + std::to_string(i), n, src.label(s)});
    }
  }
  return report;
}

}  // namespace cybar
