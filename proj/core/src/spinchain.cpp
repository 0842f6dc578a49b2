// SPDX-License-Identifier: MIT

#include "pstchain/spinchain.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "pstchain/errors.hpp"
#include "pstchain/orthopoly.hpp"
#include "pstchain/types.hpp"

namespace pstchain {

SpinChain build_jacobi(const RecurrenceData<double>& rec) {
  rec.validate();
  const int n_top = rec.order();
  SpinChain chain;
  chain.fields = rec.b;
  chain.couplings.reserve(n_top);
  for (int n = 1; n <= n_top; ++n) {
    if (!(rec.u[n] > 0.0))
      throw NonPositiveCouplingError("build_jacobi: u_" + std::to_string(n) +
                                     " <= 0, no real coupling exists");
    chain.couplings.push_back(std::sqrt(rec.u[n]));
  }
  return chain;
}

SpinChain build_jacobi(const RecurrenceData<Rational>& rec) { return build_jacobi(to_real(rec)); }

bool is_mirror_symmetric(const SpinChain& chain, double tol) {
  const int n_top = chain.order();
  double max_coupling = 0.0;
  for (double j : chain.couplings) max_coupling = std::max(max_coupling, std::abs(j));
  double max_field = 0.0;
  for (double b : chain.fields) max_field = std::max(max_field, std::abs(b));

  // J_{N-n+1} vs J_n; couplings[l] stores J_{l+1}.
  for (int n = 1; n <= n_top; ++n)
    if (std::abs(chain.couplings[n_top - n] - chain.couplings[n - 1]) > tol * max_coupling)
      return false;
  for (int n = 0; n <= n_top; ++n)
    if (std::abs(chain.fields[n_top - n] - chain.fields[n]) > tol * (1.0 + max_field))
      return false;
  return true;
}

std::vector<double> spectral_weights(const std::vector<double>& ascending_eigenvalues) {
  const int n = static_cast<int>(ascending_eigenvalues.size());
  if (n == 0) throw DomainError("spectral_weights: empty spectrum");
  std::vector<double> w(n);
  double total = 0.0;
  for (int s = 0; s < n; ++s) {
    w[s] = 1.0 / std::abs(characteristic_derivative(ascending_eigenvalues, s));
    total += w[s];
  }
  for (double& x : w) x /= total;
  return w;
}

std::vector<double> spectral_weights(const SpinChain& chain, const EigenOptions& options) {
  return spectral_weights(eigensystem(chain, options).eigenvalues);
}

namespace {

std::complex<double> unit_phase(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

std::complex<double> transfer_amplitude(const SpectralDecomposition& eigen, double t) {
  const int n = eigen.sites();
  std::complex<double> amplitude(0.0, 0.0);
  for (int s = 0; s < n; ++s) {
    amplitude += eigen.vectors(n - 1, s) * eigen.vectors(0, s) *
                 unit_phase(t * eigen.eigenvalues[s]);
  }
  return amplitude;
}

std::complex<double> transfer_amplitude(const SpinChain& chain, double t,
                                        const EigenOptions& options) {
  return transfer_amplitude(eigensystem(chain, options), t);
}

std::vector<std::complex<double>> evolve_basis_state(const SpectralDecomposition& eigen,
                                                     int source_site, double t) {
  const int n = eigen.sites();
  if (source_site < 0 || source_site >= n)
    throw DomainError("evolve_basis_state: source site out of range");
  std::vector<std::complex<double>> state(n, std::complex<double>(0.0, 0.0));
  for (int s = 0; s < n; ++s) {
    const std::complex<double> phase =
        eigen.vectors(source_site, s) * unit_phase(t * eigen.eigenvalues[s]);
    for (int k = 0; k < n; ++k) state[k] += phase * eigen.vectors(k, s);
  }
  return state;
}

}  // namespace pstchain
