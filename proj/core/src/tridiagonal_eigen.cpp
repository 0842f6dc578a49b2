// SPDX-License-Identifier: MIT

// Implicit-shift QL for the symmetric tridiagonal eigenproblem with
// accumulated eigenvectors. O(N^2) per sweep, a handful of sweeps per
// eigenvalue; ample for chains up to a few thousand sites.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "pstchain/errors.hpp"
#include "pstchain/spinchain.hpp"

namespace pstchain {

namespace {

// One QL sweep with Wilkinson shift on the unreduced block [low, high],
// rotations accumulated into v.
void ql_sweep(std::vector<double>& d, std::vector<double>& e, Matrix& v, int low, int high) {
  const int n = static_cast<int>(d.size());

  double g = (d[low + 1] - d[low]) / (2.0 * e[low]);
  double r = std::hypot(g, 1.0);
  g = d[high] - d[low] + e[low] / (g + std::copysign(r, g));

  double s = 1.0;
  double c = 1.0;
  double p = 0.0;
  for (int i = high - 1; i >= low; --i) {
    double f = s * e[i];
    const double b = c * e[i];
    r = std::hypot(f, g);
    e[i + 1] = r;
    if (r == 0.0) {
      // Underflow split: the block decouples here; give up on this sweep.
      d[i + 1] -= p;
      e[high] = 0.0;
      return;
    }
    s = f / r;
    c = g / r;
    g = d[i + 1] - p;
    r = (d[i] - g) * s + 2.0 * c * b;
    p = s * r;
    d[i + 1] = g + p;
    g = c * r - b;

    for (int k = 0; k < n; ++k) {
      f = v(k, i + 1);
      v(k, i + 1) = s * v(k, i) + c * f;
      v(k, i) = c * v(k, i) - s * f;
    }
  }
  d[low] -= p;
  e[low] = g;
  e[high] = 0.0;
}

}  // namespace

double SpinChain::jacobi_norm() const {
  const int n = sites();
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = std::abs(fields[i]);
    if (i > 0) row += std::abs(couplings[i - 1]);
    if (i < n - 1) row += std::abs(couplings[i]);
    norm = std::max(norm, row);
  }
  return norm;
}

SpectralDecomposition eigensystem(const SpinChain& chain, const EigenOptions& options) {
  const int n = chain.sites();
  if (n < 1 || chain.order() != n - 1)
    throw DomainError("eigensystem: chain must have N couplings and N+1 fields");

  std::vector<double> d = chain.fields;
  std::vector<double> e = chain.couplings;
  e.push_back(0.0);
  Matrix v = Matrix::identity(n);

  const double threshold = options.deflation_tolerance * chain.jacobi_norm();

  for (int l = 0; l < n; ++l) {
    int iterations = 0;
    for (;;) {
      int m = l;
      while (m < n - 1 && std::abs(e[m]) > threshold) ++m;
      if (m == l) break;
      if (++iterations > options.max_iterations)
        throw ConvergenceError("eigensystem: eigenvalue " + std::to_string(l) +
                               " did not converge within the iteration budget");
      ql_sweep(d, e, v, l, m);
    }
    e[l] = 0.0;
  }

  // Ascending eigenvalues, columns permuted along, site-0 component positive.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return d[a] < d[b]; });

  SpectralDecomposition result;
  result.eigenvalues.resize(n);
  result.vectors = Matrix(n, n);
  for (int s = 0; s < n; ++s) {
    result.eigenvalues[s] = d[perm[s]];
    const double sign = v(0, perm[s]) < 0.0 ? -1.0 : 1.0;
    for (int k = 0; k < n; ++k) result.vectors(k, s) = sign * v(k, perm[s]);
  }
  return result;
}

std::vector<double> SpectralDecomposition::first_component_weights() const {
  std::vector<double> w(eigenvalues.size());
  for (int s = 0; s < sites(); ++s) w[s] = vectors(0, s) * vectors(0, s);
  return w;
}

}  // namespace pstchain
