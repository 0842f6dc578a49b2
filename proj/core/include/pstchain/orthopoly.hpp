// SPDX-License-Identifier: MIT
#pragma once

// Monic orthogonal polynomials attached to a three-term recurrence:
// pointwise evaluation, the value tableau on a grid, discrete orthogonality
// verification, the Christoffel transform (spectral level removal), and the
// inverse problem (spectrum + weights -> recurrence) via a discrete
// Stieltjes procedure.

#include <cstdlib>
#include <vector>

#include "pstchain/errors.hpp"
#include "pstchain/m1hahn.hpp"
#include "pstchain/rational.hpp"
#include "pstchain/types.hpp"

namespace pstchain {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  using std::abs;
  return abs(x);
}

/// P_0(x) .. P_{N+1}(x) by the forward recurrence
/// P_{n+1}(x) = (x - b_n) P_n(x) - u_n P_{n-1}(x), P_{-1} = 0, P_0 = 1.
/// P_{N+1} is the characteristic polynomial of the associated Jacobi matrix.
template <typename Scalar>
std::vector<Scalar> evaluate_monic_sequence(const RecurrenceData<Scalar>& rec, const Scalar& x) {
  const int n_top = rec.order();
  std::vector<Scalar> p(n_top + 2);
  p[0] = Scalar(1);
  for (int n = 0; n <= n_top; ++n) {
    const Scalar prev = n > 0 ? p[n - 1] : Scalar(0);
    p[n + 1] = (x - rec.b[n]) * p[n] - rec.u[n] * prev;
  }
  return p;
}

/// Values P_n(x_s) for n = 0..N+1 over a sequence of grid points.
/// Row 0 is all ones; row N+1 vanishes when the points are the eigenvalues.
template <typename Scalar>
struct PolynomialTableau {
  int rows = 0;  // N+2
  int cols = 0;  // number of grid points
  std::vector<Scalar> values;  // row-major

  const Scalar& at(int n, int s) const {
    return values[static_cast<std::size_t>(n) * cols + s];
  }
  Scalar& at(int n, int s) { return values[static_cast<std::size_t>(n) * cols + s]; }
};

template <typename Scalar>
PolynomialTableau<Scalar> polynomial_tableau(const RecurrenceData<Scalar>& rec,
                                             const std::vector<Scalar>& points) {
  PolynomialTableau<Scalar> tableau;
  tableau.rows = rec.order() + 2;
  tableau.cols = static_cast<int>(points.size());
  tableau.values.resize(static_cast<std::size_t>(tableau.rows) * tableau.cols);
  for (int s = 0; s < tableau.cols; ++s) {
    const auto column = evaluate_monic_sequence(rec, points[s]);
    for (int n = 0; n < tableau.rows; ++n) tableau.at(n, s) = column[n];
  }
  return tableau;
}

/// P'_{N+1}(x_s) = prod_{t != s} (x_s - x_t) for a simple spectrum.
template <typename Scalar>
Scalar characteristic_derivative(const std::vector<Scalar>& spectrum, int s) {
  if (s < 0 || s >= static_cast<int>(spectrum.size()))
    throw DomainError("characteristic_derivative: index out of range");
  for (std::size_t k = 1; k < spectrum.size(); ++k)
    if (!(spectrum[k - 1] < spectrum[k]))
      throw DegenerateSpectrumError("characteristic_derivative: spectrum must be strictly increasing");
  Scalar prod(1);
  for (int t = 0; t < static_cast<int>(spectrum.size()); ++t)
    if (t != s) prod *= spectrum[s] - spectrum[t];
  return prod;
}

/// Maximum relative deviation of the weighted Gram matrix of R_0..R_N from
/// its target kappa_0 * h_n * delta_{nm}. Entry (n, m) is scaled by
/// kappa_0 * max(h_n, h_m), which reduces to the diagonal target on the
/// diagonal. Exact inputs give exactly zero.
template <typename Scalar>
Scalar verify_orthogonality(const RecurrenceData<Scalar>& rec, const BannaiItoGrid<Scalar>& grid,
                            const WeightTable<Scalar>& weights) {
  const int n_top = rec.order();
  if (static_cast<int>(grid.y.size()) != n_top + 1 ||
      static_cast<int>(weights.w.size()) != n_top + 1)
    throw DomainError("verify_orthogonality: inconsistent sizes");

  const auto tableau = polynomial_tableau(rec, grid.y);
  std::vector<Scalar> h(n_top + 1);
  h[0] = Scalar(1);
  for (int n = 1; n <= n_top; ++n) h[n] = h[n - 1] * rec.u[n];

  Scalar worst(0);
  for (int n = 0; n <= n_top; ++n) {
    for (int m = n; m <= n_top; ++m) {
      Scalar gram(0);
      for (int s = 0; s <= n_top; ++s) gram += weights.w[s] * tableau.at(n, s) * tableau.at(m, s);
      const Scalar target = n == m ? Scalar(weights.kappa0 * h[n]) : Scalar(0);
      const Scalar scale = weights.kappa0 * (h[n] < h[m] ? h[m] : h[n]);
      const Scalar deviation = abs_value(Scalar(gram - target));
      const Scalar residual = deviation / abs_value(scale);
      if (residual > worst) worst = residual;
    }
  }
  return worst;
}

/// Which extreme eigenvalue the Christoffel transform removes.
enum class RemovalSide { Smallest, Largest };

/// Result of removing one extreme spectral level: the kernel coefficients
/// K_n = P_{n+1}(x*)/P_n(x*) and the recurrence data of the shortened chain
///   u~_n = u_n K_n / K_{n-1},   b~_n = b_{n+1} + K_{n+1} - K_n.
template <typename Scalar>
struct ChristoffelData {
  std::vector<Scalar> k;  // K_0 .. K_N; K_N = 0 when x* is the removed eigenvalue
  Scalar removed_level;
  RecurrenceData<Scalar> transformed;  // order N-1
};

template <typename Scalar>
ChristoffelData<Scalar> christoffel_transform(const RecurrenceData<Scalar>& rec,
                                              const std::vector<Scalar>& spectrum,
                                              RemovalSide side) {
  rec.validate();
  const int n_top = rec.order();
  if (static_cast<int>(spectrum.size()) != n_top + 1)
    throw DomainError("christoffel_transform: spectrum size must be N+1");
  if (n_top < 1) throw DomainError("christoffel_transform: nothing left to remove");
  for (std::size_t s = 1; s < spectrum.size(); ++s)
    if (!(spectrum[s - 1] < spectrum[s]))
      throw DegenerateSpectrumError("christoffel_transform: spectrum must be strictly increasing");

  ChristoffelData<Scalar> data;
  data.removed_level = side == RemovalSide::Largest ? spectrum.back() : spectrum.front();

  const auto p = evaluate_monic_sequence(rec, data.removed_level);
  data.k.resize(n_top + 1);
  for (int n = 0; n <= n_top; ++n) {
    if (p[n] == Scalar(0))
      throw SingularTransformError("christoffel_transform: P_n vanishes at the removed level");
    data.k[n] = p[n + 1] / p[n];
  }

  data.transformed.b.resize(n_top);
  data.transformed.u.assign(n_top + 1, Scalar(0));
  for (int n = 0; n < n_top; ++n)
    data.transformed.b[n] = rec.b[n + 1] + data.k[n + 1] - data.k[n];
  for (int n = 1; n < n_top; ++n)
    data.transformed.u[n] = rec.u[n] * data.k[n] / data.k[n - 1];
  return data;
}

/// Index-based entry point; only the extreme levels are removable.
template <typename Scalar>
ChristoffelData<Scalar> christoffel_transform_at(const RecurrenceData<Scalar>& rec,
                                                 const std::vector<Scalar>& spectrum, int index) {
  if (index == 0) return christoffel_transform(rec, spectrum, RemovalSide::Smallest);
  if (index == static_cast<int>(spectrum.size()) - 1)
    return christoffel_transform(rec, spectrum, RemovalSide::Largest);
  throw UnsupportedRemovalError(
      "christoffel_transform: interior level removal is unsupported (positivity of the "
      "transformed coefficients is not guaranteed)");
}

/// Closed form of the Christoffel kernel coefficients on the mirror-symmetric
/// odd-N chain (alpha = beta): K_n = 2 [N-n]_{alpha/2}, i.e. 2(N+alpha-n) for
/// even n and 2(N-n) for odd n.
template <typename Scalar>
Scalar christoffel_k_closed_form(int order, const Scalar& alpha, int n) {
  if (order < 1 || order % 2 == 0)
    throw DomainError("christoffel_k_closed_form: order must be odd");
  if (n < 0 || n > order) throw DomainError("christoffel_k_closed_form: n out of range");
  const Scalar half_alpha = alpha / 2;
  return 2 * mu_number(order - n, half_alpha);
}

/// Recurrence data of the monic orthogonal polynomials of the discrete
/// measure sum_s weights[s] delta(x - nodes[s]), by successive monic
/// orthogonalization in the polynomial basis:
///   b_n = <x P_n, P_n> / <P_n, P_n>,  u_{n+1} = <P_{n+1}, P_{n+1}> / <P_n, P_n>.
/// The output is normalization-invariant, so the weights only need to be
/// positive. Nodes must be strictly increasing.
RecurrenceData<double> stieltjes_reconstruct(const std::vector<double>& nodes,
                                             const std::vector<double>& weights);

}  // namespace pstchain
