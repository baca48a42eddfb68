#ifndef INTCHEB_LINALG_HPP
#define INTCHEB_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "intcheb/errors.hpp"
#include "intcheb/scalar.hpp"

namespace intcheb {

using RMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = b exactly by Gaussian elimination; throws on a singular matrix.
inline std::vector<Rational> solve_exact(RMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n)
    throw DomainError("solve_exact: dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0)
      ++piv;
    if (piv == n)
      throw DegenerateError("singular linear system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (sgn(a[row][col]) == 0)
        continue;
      const Rational f = a[row][col] * inv;
      for (std::size_t k = col; k < n; ++k)
        a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k)
      acc -= a[i][k] * x[k];
    x[i] = acc / a[i][i];
  }
  return x;
}

/// Exact inverse by Gauss-Jordan elimination.
inline RMatrix inverse_exact(RMatrix a) {
  const std::size_t n = a.size();
  RMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0)
      ++piv;
    if (piv == n)
      throw DegenerateError("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational d = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= d;
      inv[col][k] /= d;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || sgn(a[row][col]) == 0)
        continue;
      const Rational f = a[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        a[row][k] -= f * a[col][k];
        inv[row][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

/// A = L D L^T for a symmetric positive definite A; L unit lower triangular.
struct LdlFactor {
  RMatrix l;
  std::vector<Rational> d;
};

inline LdlFactor ldl_exact(const RMatrix& a) {
  const std::size_t n = a.size();
  LdlFactor f{RMatrix(n, std::vector<Rational>(n, Rational(0))), std::vector<Rational>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    Rational dj = a[j][j];
    for (std::size_t k = 0; k < j; ++k)
      dj -= f.l[j][k] * f.l[j][k] * f.d[k];
    if (sgn(dj) <= 0)
      throw DegenerateError("matrix is not positive definite");
    f.d[j] = dj;
    f.l[j][j] = 1;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational v = a[i][j];
      for (std::size_t k = 0; k < j; ++k)
        v -= f.l[i][k] * f.l[j][k] * f.d[k];
      f.l[i][j] = v / dj;
    }
  }
  return f;
}

} // namespace intcheb

#endif // INTCHEB_LINALG_HPP
