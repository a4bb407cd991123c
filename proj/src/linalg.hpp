#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace vyb {

using RatVector = std::vector<Rat>;

// Dense matrix of exact rationals. Desk scale: hundreds of rows, tens of
// columns; plain Gaussian elimination is plenty.
struct RatMatrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<RatVector> a;

  RatMatrix() = default;
  RatMatrix(size_t r, size_t c) : rows(r), cols(c), a(r, RatVector(c, Rat(0))) {}

  RatVector& operator[](size_t i) { return a[i]; }
  const RatVector& operator[](size_t i) const { return a[i]; }
  void add_row(RatVector row);
};

// In-place reduced row echelon form; returns the pivot column indices.
std::vector<size_t> rref(RatMatrix& m);

// Scale to a primitive integer vector: clear denominators, divide by the gcd
// of the numerators, make the first nonzero entry positive.
RatVector primitive_scale(RatVector v);

// Canonical kernel basis: one vector per free column of the RREF, entry at
// that free column positive, zeros in all other free columns, primitive
// integer form, ordered by free-column index.
std::vector<RatVector> kernel_basis(RatMatrix m);

// Canonical basis of the row space: RREF rows in primitive integer form.
std::vector<RatVector> rowspace_basis(RatMatrix m);

// Exact span membership; returns the coefficient vector when v lies in the
// span of the (not necessarily independent) given vectors.
std::optional<RatVector> in_span(const RatVector& v, const std::vector<RatVector>& basis);

size_t rank(RatMatrix m);

}  // namespace vyb
