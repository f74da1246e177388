#pragma once

// Integral homology of truncated simplicial sets through normalized chains and
// the Smith normal form. Every answer carries the range of degrees in which
// the truncation makes it trustworthy.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cybar/simplicial.hpp"

namespace cybar {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const noexcept;

  static IntMatrix identity(std::size_t n);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Product; throws InvariantError on a shape mismatch or int64 overflow.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

struct SmithForm {
  std::vector<mpz_class> factors;  // d_1 | d_2 | ... | d_rank, all positive
  std::size_t rank = 0;
};

/// Exact Smith normal form. Runs on 64-bit entries and restarts with GMP
/// integers the first time an operation would overflow.
SmithForm smith_normal_form(const IntMatrix& a);

struct ChainComplex {
  int truncation = 0;
  /// boundary[n] is d_n : C_n -> C_{n-1} (boundary[0] has zero rows).
  std::vector<IntMatrix> boundary;
  std::vector<std::size_t> dims;

  std::size_t dim(int n) const { return n < 0 || n > truncation ? 0 : dims[static_cast<std::size_t>(n)]; }
};

/// Basis: nondegenerate simplices; faces landing on degenerate simplices
/// contribute nothing.
ChainComplex normalized_chains(const SimplicialSet& x);

/// Degrees n with d_{n-1} d_n != 0; empty for a valid complex.
std::vector<int> boundary_defects(const ChainComplex& c);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<mpz_class> torsion;
  /// False when d_{n+1} lies beyond the truncation.
  bool reliable = true;

  bool trivial() const noexcept { return betti == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/2 + Z/4", ...
  std::string to_string() const;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

HomologyGroup homology(const ChainComplex& c, int n);
HomologyGroup reduced_homology(const ChainComplex& c, int n);

struct HomologyRow {
  int degree = 0;
  HomologyGroup group;
};

/// Rows for degrees 0..upto, reduced or not.
std::vector<HomologyRow> homology_table(const SimplicialSet& x, int upto, bool reduced = false);

struct ChainMap {
  ChainComplex source;
  ChainComplex target;
  /// components[n] : C_n(source) -> C_n(target).
  std::vector<IntMatrix> components;
};

/// Matrices of f on nondegenerate bases. Throws InvariantError if they do not
/// commute with the boundaries.
ChainMap chain_map(const SimplicialMap& f);

/// g after f, degreewise matrix products.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Cone_n = C_n(target) + C_{n-1}(source), d(t, s) = (dt + f s, -ds).
ChainComplex mapping_cone(const ChainMap& f);

/// Homological connectivity. `exact` is false when no nonzero group was seen
/// below the reliability bound; `value` is then the bound.
struct Connectivity {
  int value = 0;
  bool exact = true;
  std::string to_string() const;
};

/// (least q with H_q(cone f) != 0) - 1.
Connectivity map_homological_connectivity(const ChainMap& f);

/// (least q with reduced H_q(X) != 0) - 1.
Connectivity homological_connectivity(const SimplicialSet& x);

/// Cone of f has vanishing homology in every degree <= k. Throws
/// TruncationError when k is not below the reliability bound.
bool cone_acyclic_through(const ChainMap& f, int k);

}  // namespace cybar
