// troplb/matrix.hpp - exact linear algebra over Q and Z.
//
// Matrices are row-major vectors of rows. Functions that accept an empty
// matrix take the column count explicitly.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "troplb/arith.hpp"

namespace troplb {

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
RatMatrix rref(RatMatrix m, std::size_t ncols, std::vector<std::size_t>* pivots = nullptr);

/// Some solution of A x = b with every free variable set to zero, or nullopt.
std::optional<RatVec> solve_rational(const RatMatrix& a, const RatVec& b, std::size_t ncols);

/// Basis of {x in Q^n : A x = 0}, scaled to primitive integer vectors.
IntMatrix rational_kernel(const RatMatrix& a, std::size_t ncols);

struct HermiteForm {
  IntMatrix h;  // row-style Hermite normal form of the input
  IntMatrix u;  // unimodular, u * input = h
  std::size_t rank = 0;
};

/// Row Hermite normal form: echelon, positive pivots, entries above each
/// pivot reduced into [0, pivot).
HermiteForm hermite(const IntMatrix& a, std::size_t ncols);

/// Nonzero rows of the Hermite form: the canonical basis of the row lattice.
IntMatrix lattice_basis(const IntMatrix& rows, std::size_t ncols);

/// Canonical basis of the saturated lattice {x in Z^n : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t ncols);

/// Some integral solution of A x = b, or nullopt if none exists.
std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b, std::size_t ncols);

/// Canonical representative of x + L, where `hnf` is a Hermite basis of L.
IntVec reduce_mod_lattice(IntVec x, const IntMatrix& hnf);

/// True iff x lies in the lattice spanned by the rows of `basis`.
bool in_lattice(const IntVec& x, const IntMatrix& basis, std::size_t ncols);

/// Nonzero elementary divisors d_1 | d_2 | ... of A.
std::vector<Int> smith_diagonal(const IntMatrix& a, std::size_t ncols);

/// Calls `fn` with each k-subset of {0, ..., n-1} in lexicographic order.
/// Enumeration stops early if `fn` returns false.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& fn);

}  // namespace troplb
