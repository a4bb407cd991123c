#include "linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace vyb {

void RatMatrix::add_row(RatVector row) {
  if (rows == 0 && cols == 0) cols = row.size();
  if (row.size() != cols) throw std::invalid_argument("row length mismatch");
  a.push_back(std::move(row));
  ++rows;
}

std::vector<size_t> rref(RatMatrix& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t pr = r;
    while (pr < m.rows && m[pr][c] == 0) ++pr;
    if (pr == m.rows) continue;
    std::swap(m.a[pr], m.a[r]);
    Rat pv = m[r][c];
    for (size_t j = c; j < m.cols; ++j) m[r][j] /= pv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < m.cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RatVector primitive_scale(RatVector v) {
  Int den = 1;
  for (const Rat& x : v) den = lcm(den, denominator(x));
  Int g = 0;
  for (const Rat& x : v) g = gcd(g, numerator(x) * (den / denominator(x)));
  if (g == 0) return v;  // zero vector
  int sign = 0;
  for (const Rat& x : v) {
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  }
  Rat factor(den * sign, g);
  for (Rat& x : v) x *= factor;
  return v;
}

std::vector<RatVector> kernel_basis(RatMatrix m) {
  size_t cols = m.cols;
  std::vector<size_t> piv = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : piv) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    RatVector v(cols, Rat(0));
    v[fc] = 1;
    for (size_t ri = 0; ri < piv.size(); ++ri) v[piv[ri]] = -m[ri][fc];
    basis.push_back(primitive_scale(std::move(v)));
  }
  return basis;
}

std::vector<RatVector> rowspace_basis(RatMatrix m) {
  std::vector<size_t> piv = rref(m);
  std::vector<RatVector> basis;
  for (size_t i = 0; i < piv.size(); ++i) basis.push_back(primitive_scale(m.a[i]));
  return basis;
}

std::optional<RatVector> in_span(const RatVector& v, const std::vector<RatVector>& basis) {
  if (basis.empty()) {
    for (const Rat& x : v)
      if (x != 0) return std::nullopt;
    return RatVector{};
  }
  size_t dim = v.size();
  for (const RatVector& b : basis)
    if (b.size() != dim) throw std::invalid_argument("dimension mismatch in in_span");
  // Solve basis^T c = v by eliminating the augmented (dim x (k+1)) system.
  RatMatrix m(dim, basis.size() + 1);
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < basis.size(); ++j) m[i][j] = basis[j][i];
    m[i][basis.size()] = v[i];
  }
  std::vector<size_t> piv = rref(m);
  RatVector coeff(basis.size(), Rat(0));
  for (size_t ri = 0; ri < piv.size(); ++ri) {
    if (piv[ri] == basis.size()) return std::nullopt;  // inconsistent
    coeff[piv[ri]] = m[ri][basis.size()];
  }
  return coeff;
}

size_t rank(RatMatrix m) { return rref(m).size(); }

}  // namespace vyb
