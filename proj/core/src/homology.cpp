#include "cybar/homology.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "cybar/error.hpp"

namespace cybar {

bool IntMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvariantError("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        std::int64_t p = 0;
        if (__builtin_mul_overflow(x, b(k, c), &p) || __builtin_add_overflow(out(r, c), p, &out(r, c)))
          throw InvariantError("integer overflow in matrix product");
      }
    }
  return out;
}

namespace {

struct Overflow {};

std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t p = 0;
  std::int64_t r = 0;
  if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  return r;
}
mpz_class sub_mul(const mpz_class& a, const mpz_class& q, const mpz_class& b) { return a - q * b; }

std::int64_t magnitude(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return a < 0 ? -a : a;
}
mpz_class magnitude(const mpz_class& a) { return abs(a); }

/// Diagonalizes by unimodular row and column operations, pivoting on the
/// entry of least absolute value. Returns the nonzero diagonal, unsorted.
template <class T>
std::vector<mpz_class> diagonalize(std::vector<T> m, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t r, std::size_t c) -> T& { return m[r * cols + c]; };
  std::vector<mpz_class> diagonal;
  const std::size_t limit = std::min(rows, cols);
  for (std::size_t t = 0; t < limit; ++t) {
    // least nonzero entry of the remaining block
    std::size_t pr = rows;
    std::size_t pc = cols;
    T best{};
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (at(r, c) != 0 && (pr == rows || magnitude(at(r, c)) < best)) {
          best = magnitude(at(r, c));
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    auto bring_to_pivot = [&](std::size_t r, std::size_t c) {
      if (r != t)
        for (std::size_t k = 0; k < cols; ++k) std::swap(at(r, k), at(t, k));
      if (c != t)
        for (std::size_t k = 0; k < rows; ++k) std::swap(at(k, c), at(k, t));
    };
    bring_to_pivot(pr, pc);
    for (;;) {
      bool clear = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (at(r, t) == 0) continue;
        const T q = at(r, t) / at(t, t);
        for (std::size_t k = t; k < cols; ++k)
          if (at(t, k) != 0) at(r, k) = sub_mul(at(r, k), q, at(t, k));
        if (at(r, t) != 0) clear = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (at(t, c) == 0) continue;
        const T q = at(t, c) / at(t, t);
        for (std::size_t k = t; k < rows; ++k)
          if (at(k, t) != 0) at(k, c) = sub_mul(at(k, c), q, at(k, t));
        if (at(t, c) != 0) clear = false;
      }
      if (clear) break;
      // a remainder is now smaller than the pivot; move it there
      std::size_t nr = t;
      std::size_t nc = t;
      T small = magnitude(at(t, t));
      for (std::size_t r = t + 1; r < rows; ++r)
        if (at(r, t) != 0 && magnitude(at(r, t)) < small) {
          small = magnitude(at(r, t));
          nr = r;
          nc = t;
        }
      for (std::size_t c = t + 1; c < cols; ++c)
        if (at(t, c) != 0 && magnitude(at(t, c)) < small) {
          small = magnitude(at(t, c));
          nr = t;
          nc = c;
        }
      bring_to_pivot(nr, nc);
    }
    const T& p = at(t, t);
    if constexpr (std::is_same_v<T, mpz_class>) {
      diagonal.push_back(magnitude(p));
    } else {
      diagonal.emplace_back(static_cast<long>(magnitude(p)));
    }
  }
  return diagonal;
}

/// Turns a diagonal into invariant factors d_1 | d_2 | ...
std::vector<mpz_class> invariant_factors(std::vector<mpz_class> d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      mpz_class g;
      mpz_class l;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      d[i] = g;
      d[j] = l;
    }
  return d;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  std::vector<mpz_class> diagonal;
  std::vector<std::int64_t> fast(a.rows() * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) fast[r * a.cols() + c] = a(r, c);
  try {
    diagonal = diagonalize(std::move(fast), a.rows(), a.cols());
  } catch (const Overflow&) {
    std::vector<mpz_class> big(a.rows() * a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) big[r * a.cols() + c] = static_cast<long>(a(r, c));
    diagonal = diagonalize(std::move(big), a.rows(), a.cols());
  }
  SmithForm out;
  out.rank = diagonal.size();
  out.factors = invariant_factors(std::move(diagonal));
  return out;
}

ChainComplex normalized_chains(const SimplicialSet& x) {
  ChainComplex c;
  c.truncation = x.truncation();
  for (int n = 0; n <= x.truncation(); ++n) c.dims.push_back(x.size(n));
  c.boundary.emplace_back(0, c.dims[0]);
  for (int n = 1; n <= x.truncation(); ++n) {
    IntMatrix d(c.dims[static_cast<std::size_t>(n - 1)], c.dims[static_cast<std::size_t>(n)]);
    for (std::size_t id = 0; id < c.dims[static_cast<std::size_t>(n)]; ++id)
      for (int i = 0; i <= n; ++i) {
        const auto& f = x.stored_face(n, static_cast<int>(id), i);
        if (!f.degenerate()) d(static_cast<std::size_t>(f.id), id) += (i % 2 == 0) ? 1 : -1;
      }
    c.boundary.push_back(std::move(d));
  }
  return c;
}

std::vector<int> boundary_defects(const ChainComplex& c) {
  std::vector<int> out;
  for (int n = 2; n <= c.truncation; ++n)
    if (!multiply(c.boundary[static_cast<std::size_t>(n - 1)], c.boundary[static_cast<std::size_t>(n)]).is_zero())
      out.push_back(n);
  return out;
}

std::string HomologyGroup::to_string() const {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (betti == 1) append("Z");
  if (betti > 1) append("Z^" + std::to_string(betti));
  for (const auto& t : torsion) append("Z/" + t.get_str());
  return out.empty() ? "0" : out;
}

namespace {

HomologyGroup assemble(const ChainComplex& c, int n, const SmithForm& in, const SmithForm* out) {
  HomologyGroup h;
  const std::size_t cycles = c.dim(n) - in.rank;
  h.reliable = out != nullptr;
  const std::size_t boundaries = out ? out->rank : 0;
  h.betti = cycles - boundaries;
  if (out)
    for (const auto& f : out->factors)
      if (f > 1) h.torsion.push_back(f);
  return h;
}

void reduce(HomologyGroup& h, int n) {
  if (n == 0 && h.betti > 0) --h.betti;
}

}  // namespace

HomologyGroup homology(const ChainComplex& c, int n) {
  if (n < 0 || n > c.truncation) throw TruncationError("homology degree " + std::to_string(n) + " beyond truncation");
  const auto in = smith_normal_form(c.boundary[static_cast<std::size_t>(n)]);
  if (n + 1 > c.truncation) return assemble(c, n, in, nullptr);
  const auto out = smith_normal_form(c.boundary[static_cast<std::size_t>(n + 1)]);
  return assemble(c, n, in, &out);
}

HomologyGroup reduced_homology(const ChainComplex& c, int n) {
  auto h = homology(c, n);
  reduce(h, n);
  return h;
}

std::vector<HomologyRow> homology_table(const SimplicialSet& x, int upto, bool reduced) {
  const auto c = normalized_chains(x);
  upto = std::min(upto, c.truncation);
  std::vector<SmithForm> forms;
  for (int n = 0; n <= std::min(upto + 1, c.truncation); ++n)
    forms.push_back(smith_normal_form(c.boundary[static_cast<std::size_t>(n)]));
  std::vector<HomologyRow> rows;
  for (int n = 0; n <= upto; ++n) {
    const auto next = static_cast<std::size_t>(n + 1);
    auto h = assemble(c, n, forms[static_cast<std::size_t>(n)], next < forms.size() ? &forms[next] : nullptr);
    if (reduced) reduce(h, n);
    rows.push_back(HomologyRow{n, std::move(h)});
  }
  return rows;
}

ChainMap chain_map(const SimplicialMap& f) {
  ChainMap m;
  m.source = normalized_chains(f.source());
  m.target = normalized_chains(f.target());
  const int top = std::min(m.source.truncation, m.target.truncation);
  for (int n = 0; n <= top; ++n) {
    IntMatrix a(m.target.dim(n), m.source.dim(n));
    for (std::size_t id = 0; id < m.source.dim(n); ++id) {
      const auto& y = f.image(n, static_cast<int>(id));
      if (!y.degenerate()) a(static_cast<std::size_t>(y.id), id) += 1;
    }
    m.components.push_back(std::move(a));
  }
  for (int n = 1; n <= top; ++n) {
    const auto N = static_cast<std::size_t>(n);
    if (multiply(m.target.boundary[N], m.components[N]) != multiply(m.components[N - 1], m.source.boundary[N]))
      throw InvariantError("chain map does not commute with the boundary in degree " + std::to_string(n));
  }
  return m;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  ChainMap out;
  out.source = f.source;
  out.target = g.target;
  const auto top = std::min(f.components.size(), g.components.size());
  for (std::size_t n = 0; n < top; ++n) out.components.push_back(multiply(g.components[n], f.components[n]));
  return out;
}

ChainComplex mapping_cone(const ChainMap& f) {
  const auto& S = f.source;
  const auto& T = f.target;
  ChainComplex c;
  c.truncation = std::min({T.truncation, S.truncation + 1, static_cast<int>(f.components.size())});
  for (int n = 0; n <= c.truncation; ++n) c.dims.push_back(T.dim(n) + S.dim(n - 1));
  c.boundary.emplace_back(0, c.dims[0]);
  for (int n = 1; n <= c.truncation; ++n) {
    const auto N = static_cast<std::size_t>(n);
    const std::size_t t_in = T.dim(n), t_out = T.dim(n - 1), s_in = S.dim(n - 1), s_out = S.dim(n - 2);
    IntMatrix d(t_out + s_out, t_in + s_in);
    const auto& dt = T.boundary[N];
    for (std::size_t r = 0; r < t_out; ++r)
      for (std::size_t k = 0; k < t_in; ++k) d(r, k) = dt(r, k);
    const auto& fm = f.components[N - 1];
    for (std::size_t r = 0; r < t_out; ++r)
      for (std::size_t k = 0; k < s_in; ++k) d(r, t_in + k) = fm(r, k);
    if (n >= 2) {
      const auto& ds = S.boundary[N - 1];
      for (std::size_t r = 0; r < s_out; ++r)
        for (std::size_t k = 0; k < s_in; ++k) d(t_out + r, t_in + k) = -ds(r, k);
    }
    c.boundary.push_back(std::move(d));
  }
  return c;
}

std::string Connectivity::to_string() const { return exact ? std::to_string(value) : ">= " + std::to_string(value); }

namespace {

Connectivity first_nonzero(const ChainComplex& c, bool reduced) {
  std::vector<SmithForm> forms;
  for (int n = 0; n <= c.truncation; ++n) forms.push_back(smith_normal_form(c.boundary[static_cast<std::size_t>(n)]));
  for (int q = 0; q + 1 <= c.truncation; ++q) {
    auto h = assemble(c, q, forms[static_cast<std::size_t>(q)], &forms[static_cast<std::size_t>(q + 1)]);
    if (reduced) reduce(h, q);
    if (!h.trivial()) return Connectivity{q - 1, true};
  }
  return Connectivity{c.truncation - 1, false};
}

}  // namespace

Connectivity map_homological_connectivity(const ChainMap& f) { return first_nonzero(mapping_cone(f), false); }

Connectivity homological_connectivity(const SimplicialSet& x) { return first_nonzero(normalized_chains(x), true); }

bool cone_acyclic_through(const ChainMap& f, int k) {
  const auto c = mapping_cone(f);
  if (k + 1 > c.truncation)
    throw TruncationError("cone homology through degree " + std::to_string(k) + " needs truncation " +
                          std::to_string(k + 1));
  const auto conn = first_nonzero(c, false);
  return !conn.exact || conn.value >= k;
}

}  // namespace cybar
