// SPDX-License-Identifier: MIT
#pragma once

// One-excitation sector of the XX chain: the Jacobi matrix built from
// recurrence data, mirror symmetry, its spectral decomposition (implicit-
// shift QL on the symmetric tridiagonal form), spectral weights, and
// transfer amplitudes via the spectral sum. The full 2^(N+1)-dimensional
// Hamiltonian is never materialized.

#include <complex>
#include <vector>

#include "pstchain/errors.hpp"
#include "pstchain/types.hpp"

namespace pstchain {

/// Dense column-major-agnostic little matrix; just enough for eigenvectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/// XX chain in the one-excitation sector: couplings J_1..J_N > 0 between
/// neighboring sites and magnetic fields b_0..b_N on the sites. The implied
/// boundary couplings J_0 = J_{N+1} = 0 are not stored.
struct SpinChain {
  std::vector<double> couplings;  // J_1 .. J_N
  std::vector<double> fields;     // b_0 .. b_N

  int order() const { return static_cast<int>(couplings.size()); }  // N
  int sites() const { return static_cast<int>(fields.size()); }     // N+1

  /// Infinity norm of the Jacobi matrix (max row sum).
  double jacobi_norm() const;
};

/// J_n = sqrt(u_n); requires every interior u_n > 0.
SpinChain build_jacobi(const RecurrenceData<double>& rec);
SpinChain build_jacobi(const RecurrenceData<Rational>& rec);

/// Mirror symmetry J_{N-n+1} = J_n, b_{N-n} = b_n within relative tolerance:
/// couplings against tol * max J, fields against tol * (1 + max |b|).
bool is_mirror_symmetric(const SpinChain& chain, double tol = 1e-10);

struct EigenOptions {
  double deflation_tolerance = 1e-14;  // an off-diagonal below this * ||J||_inf is zero
  int max_iterations = 50;             // QL sweeps per eigenvalue before giving up
};

/// Full spectral decomposition of the Jacobi matrix. Column s of `vectors`
/// is the unit eigenvector of eigenvalues[s] (ascending), with the sign
/// fixed so that the site-0 component is positive.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  Matrix vectors;

  int sites() const { return static_cast<int>(eigenvalues.size()); }

  /// V_{0,s}^2: the spectral measure of the site-0 basis vector.
  std::vector<double> first_component_weights() const;
};

/// Implicit-shift QL on the symmetric tridiagonal matrix, accumulating the
/// rotations into the eigenvector matrix. Throws ConvergenceError past the
/// iteration budget.
SpectralDecomposition eigensystem(const SpinChain& chain, const EigenOptions& options = {});

/// Normalized 1/|P'_{N+1}(x_s)| over an ascending simple spectrum. For a
/// mirror-symmetric chain this equals the true spectral measure V_{0,s}^2
/// of site 0; the two routes cross-validate (and differ otherwise).
std::vector<double> spectral_weights(const std::vector<double>& ascending_eigenvalues);
std::vector<double> spectral_weights(const SpinChain& chain, const EigenOptions& options = {});

/// Transfer amplitude A(t) = (e_N | e^{itJ} | e_0) = sum_s e^{i t x_s} V_{N,s} V_{0,s}.
std::complex<double> transfer_amplitude(const SpectralDecomposition& eigen, double t);
std::complex<double> transfer_amplitude(const SpinChain& chain, double t,
                                        const EigenOptions& options = {});

/// All components of e^{itJ} |e_source): entry l is (e_l | e^{itJ} | e_source).
std::vector<std::complex<double>> evolve_basis_state(const SpectralDecomposition& eigen,
                                                     int source_site, double t);

/// Transfer amplitudes sampled on a uniform time grid.
struct FidelityTrace {
  std::vector<double> times;
  std::vector<std::complex<double>> amplitudes;
};

}  // namespace pstchain
