// SPDX-License-Identifier: MIT
#pragma once

// Closed-form data of the dual -1 Hahn polynomials R_n(x; alpha, beta, N):
// recurrence coefficients for both parities of N, the Bannai-Ito spectral
// grid, the discrete orthogonality weights and their normalization, and the
// positivity conditions that make all of it a legitimate spin chain.
//
// Everything is templated on the scalar so the same formulas run exactly
// (Rational) or in floating point (double, for irrational parameters).

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "pstchain/errors.hpp"
#include "pstchain/rational.hpp"
#include "pstchain/types.hpp"

namespace pstchain {

/// Input triple (N, alpha, beta) of a dual -1 Hahn chain. A chain of order N
/// has N+1 sites. The parity-dependent auxiliaries xi, eta and the subgrid
/// separation delta are derived on demand so they can never drift out of
/// sync with alpha and beta.
template <typename Scalar>
struct BasicChainParameters {
  int order;  // N >= 1, number of sites minus one
  Scalar alpha;
  Scalar beta;

  BasicChainParameters(int order_, Scalar alpha_, Scalar beta_)
      : order(order_), alpha(std::move(alpha_)), beta(std::move(beta_)) {
    if (order < 1) throw DomainError("chain order N must be at least 1");
  }

  Parity parity() const { return parity_of(order); }

  /// xi = (beta-N-1)/2 for even N, alpha/2 for odd N.
  Scalar xi() const {
    if (parity() == Parity::Even) return (beta - Scalar(order + 1)) / 2;
    return alpha / 2;
  }

  /// eta = (alpha-N-1)/2 for even N, beta/2 for odd N.
  Scalar eta() const {
    if (parity() == Parity::Even) return (alpha - Scalar(order + 1)) / 2;
    return beta / 2;
  }

  /// Margins of alpha and beta over the positivity threshold (N resp. -1).
  Scalar epsilon1() const {
    if (parity() == Parity::Even) return alpha - Scalar(order);
    return alpha + Scalar(1);
  }
  Scalar epsilon2() const {
    if (parity() == Parity::Even) return beta - Scalar(order);
    return beta + Scalar(1);
  }

  /// delta = epsilon1 + epsilon2; the two step-4 subgrids of the spectrum
  /// are separated by a gap of length 2*delta.
  Scalar delta() const {
    const Scalar first = epsilon1();
    const Scalar second = epsilon2();
    return first + second;
  }
};

using ChainParameters = BasicChainParameters<Rational>;
using RealChainParameters = BasicChainParameters<double>;

inline RealChainParameters to_real(const ChainParameters& p) {
  return RealChainParameters(p.order, to_double(p.alpha), to_double(p.beta));
}

/// mu-number [n]_mu = n + mu*(1 - (-1)^n): n for even n, n + 2*mu for odd n.
template <typename Scalar>
Scalar mu_number(int n, const Scalar& mu) {
  if (n < 0) throw DomainError("mu_number: index must be nonnegative");
  return n % 2 == 0 ? Scalar(n) : Scalar(n) + 2 * mu;
}

/// Shifted factorial (a)_s = a (a+1) ... (a+s-1), with (a)_0 = 1.
template <typename Scalar>
Scalar pochhammer(const Scalar& a, int s) {
  if (s < 0) throw DomainError("pochhammer: length must be nonnegative");
  Scalar prod(1);
  for (int k = 0; k < s; ++k) prod *= a + Scalar(k);
  return prod;
}

/// Pass/fail report of the positivity conditions, naming every violated
/// inequality. Positivity guarantees u_n > 0 (real couplings) and w_s > 0.
struct PositivityReport {
  bool pass = true;
  std::vector<std::string> violations;

  std::string describe() const {
    if (pass) return "positivity conditions hold";
    std::string out = "positivity violated: ";
    for (std::size_t i = 0; i < violations.size(); ++i) {
      if (i) out += "; ";
      out += violations[i];
    }
    return out;
  }
};

/// N even requires alpha > N and beta > N; N odd requires alpha > -1 and
/// beta > -1. (The mirror branch alpha < -N, beta < -N is not used.)
template <typename Scalar>
PositivityReport positivity_check(const BasicChainParameters<Scalar>& p) {
  PositivityReport report;
  const bool even = p.parity() == Parity::Even;
  const Scalar bound = even ? Scalar(p.order) : Scalar(-1);
  const std::string bound_text = even ? std::to_string(p.order) : "-1";
  if (!(p.alpha > bound)) {
    report.pass = false;
    report.violations.push_back("alpha <= " + bound_text + " (need alpha > " + bound_text +
                                " for N " + to_string(p.parity()) + ")");
  }
  if (!(p.beta > bound)) {
    report.pass = false;
    report.violations.push_back("beta <= " + bound_text + " (need beta > " + bound_text +
                                " for N " + to_string(p.parity()) + ")");
  }
  return report;
}

/// Recurrence coefficients from the explicit parity case split.
///
/// N even:  u_n = 4n(alpha-n)                 n even
///          u_n = 4(N-n+1)(n+beta-N-1)        n odd
///          b_n = 2N+1-alpha-beta             n even
///          b_n = -2N-3+alpha+beta            n odd
/// N odd:   u_n = 4n(N+1-n)                   n even
///          u_n = 4(alpha+n)(beta+N+1-n)      n odd
///          b_n = -1-alpha+beta               n even
///          b_n = -1+alpha-beta               n odd
template <typename Scalar>
RecurrenceData<Scalar> recurrence_coefficients(const BasicChainParameters<Scalar>& p) {
  const int n_top = p.order;
  RecurrenceData<Scalar> rec;
  rec.b.resize(n_top + 1);
  rec.u.assign(n_top + 2, Scalar(0));

  if (p.parity() == Parity::Even) {
    const Scalar b_even = Scalar(2 * n_top + 1) - p.alpha - p.beta;
    const Scalar b_odd = p.alpha + p.beta - Scalar(2 * n_top + 3);
    for (int n = 0; n <= n_top; ++n) rec.b[n] = n % 2 == 0 ? b_even : b_odd;
    for (int n = 1; n <= n_top; ++n) {
      if (n % 2 == 0)
        rec.u[n] = Scalar(4 * n) * (p.alpha - Scalar(n));
      else
        rec.u[n] = Scalar(4 * (n_top - n + 1)) * (Scalar(n) + p.beta - Scalar(n_top + 1));
    }
  } else {
    const Scalar b_even = Scalar(-1) - p.alpha + p.beta;
    const Scalar b_odd = Scalar(-1) + p.alpha - p.beta;
    for (int n = 0; n <= n_top; ++n) rec.b[n] = n % 2 == 0 ? b_even : b_odd;
    for (int n = 1; n <= n_top; ++n) {
      if (n % 2 == 0)
        rec.u[n] = Scalar(4 * n) * Scalar(n_top + 1 - n);
      else
        rec.u[n] = 4 * (p.alpha + Scalar(n)) * (p.beta + Scalar(n_top + 1 - n));
    }
  }
  return rec;
}

/// Same coefficients through the compact mu-number form
///   u_n = 4 [n]_xi [N-n+1]_eta,
///   b_n = 2([n]_xi + [N-n]_eta) + 1-alpha-beta          (N even)
///   b_n = 2([n]_xi + [N-n]_eta) - 2N-1-alpha-beta       (N odd)
/// Agrees with recurrence_coefficients() identically; kept as an
/// independently evaluated route for cross-checking.
template <typename Scalar>
RecurrenceData<Scalar> recurrence_coefficients_mu_form(const BasicChainParameters<Scalar>& p) {
  const int n_top = p.order;
  const Scalar xi = p.xi();
  const Scalar eta = p.eta();
  const Scalar tail_base(p.parity() == Parity::Even ? 1 : -2 * n_top - 1);
  const Scalar tail = tail_base - p.alpha - p.beta;

  RecurrenceData<Scalar> rec;
  rec.b.resize(n_top + 1);
  rec.u.assign(n_top + 2, Scalar(0));
  for (int n = 0; n <= n_top; ++n)
    rec.b[n] = 2 * (mu_number(n, xi) + mu_number(n_top - n, eta)) + tail;
  for (int n = 1; n <= n_top; ++n)
    rec.u[n] = 4 * mu_number(n, xi) * mu_number(n_top - n + 1, eta);
  return rec;
}

/// Bannai-Ito grid y_s in its natural (BI) labeling plus the permutation to
/// ascending spectral order. x_k = y[sort_permutation[k]] is strictly
/// increasing.
template <typename Scalar>
struct BannaiItoGrid {
  std::vector<Scalar> y;              // indexed by BI label s = 0..N
  std::vector<int> sort_permutation;  // ascending index -> BI label

  std::vector<Scalar> ascending() const {
    std::vector<Scalar> x;
    x.reserve(y.size());
    for (int s : sort_permutation) x.push_back(y[s]);
    return x;
  }
};

/// N even: y_s = -alpha-beta+2s+1 (s even), alpha+beta-2s-1 (s odd).
/// N odd:  y_s =  alpha+beta+2s+1 (s even), -alpha-beta-2s-1 (s odd).
/// Throws DegenerateSpectrumError when two points coincide (impossible under
/// positivity, possible outside it).
template <typename Scalar>
BannaiItoGrid<Scalar> bi_grid(const BasicChainParameters<Scalar>& p) {
  const Scalar gamma = p.alpha + p.beta;
  BannaiItoGrid<Scalar> grid;
  grid.y.resize(p.order + 1);
  for (int s = 0; s <= p.order; ++s) {
    const Scalar offset(2 * s + 1);
    Scalar value;
    if (p.parity() == Parity::Even)
      value = offset - gamma;
    else
      value = offset + gamma;
    if (s % 2 != 0) value = -value;
    grid.y[s] = value;
  }

  grid.sort_permutation.resize(grid.y.size());
  std::iota(grid.sort_permutation.begin(), grid.sort_permutation.end(), 0);
  std::sort(grid.sort_permutation.begin(), grid.sort_permutation.end(),
            [&](int a, int b) { return grid.y[a] < grid.y[b]; });
  for (std::size_t k = 1; k < grid.sort_permutation.size(); ++k) {
    if (!(grid.y[grid.sort_permutation[k - 1]] < grid.y[grid.sort_permutation[k]]))
      throw DegenerateSpectrumError("Bannai-Ito grid has coincident points");
  }
  return grid;
}

/// Discrete orthogonality weights in BI labeling plus the normalization
/// kappa_0 = sum_s w_s. w_0 = 1 always (every Pochhammer factor is empty).
template <typename Scalar>
struct WeightTable {
  std::vector<Scalar> w;  // indexed by BI label s = 0..N
  Scalar kappa0;
};

template <typename Scalar>
WeightTable<Scalar> closed_form_weights(const BasicChainParameters<Scalar>& p) {
  const auto report = positivity_check(p);
  if (!report.pass) throw PositivityError(report.describe());

  const int n_top = p.order;
  const Scalar a2 = p.alpha / 2;
  const Scalar b2 = p.beta / 2;
  const Scalar one(1);
  WeightTable<Scalar> table;
  table.w.resize(n_top + 1);

  if (p.parity() == Parity::Even) {
    const int half = n_top / 2;
    const Scalar top(-half);                            // -N/2
    const Scalar base_alpha = one - a2;                 // 1 - alpha/2
    const Scalar base_both = one - a2 - b2;             // 1 - alpha/2 - beta/2
    const Scalar base_beta = one - b2;                  // 1 - beta/2
    const Scalar base_tail = Scalar(half + 1) - a2 - b2;  // N/2 + 1 - alpha/2 - beta/2
    for (int s = 0; s <= n_top; ++s) {
      const int k = s / 2;
      const Scalar sign = k % 2 == 0 ? Scalar(1) : Scalar(-1);
      const Scalar shared = pochhammer(base_alpha, k) * pochhammer(base_both, k) /
                            (pochhammer(one, k) * pochhammer(base_beta, k));
      if (s % 2 == 0)
        table.w[s] = sign * pochhammer(top, k) * shared / pochhammer(base_tail, k);
      else
        table.w[s] = sign * pochhammer(top, k + 1) * shared / pochhammer(base_tail, k + 1);
    }
    table.kappa0 = pochhammer(base_both, half) / pochhammer(base_beta, half);
  } else {
    const int half = (n_top + 1) / 2;
    const Scalar top(-(half - 1));                      // -(N-1)/2
    const Scalar base_alpha = one / 2 + a2;             // 1/2 + alpha/2
    const Scalar base_both = one + a2 + b2;             // 1 + alpha/2 + beta/2
    const Scalar base_beta = one / 2 + b2;              // 1/2 + beta/2
    const Scalar base_tail = Scalar(n_top + 3) / 2 + a2 + b2;  // N/2 + 3/2 + (alpha+beta)/2
    for (int s = 0; s <= n_top; ++s) {
      const int k = s / 2;
      const Scalar sign = k % 2 == 0 ? Scalar(1) : Scalar(-1);
      const Scalar shared = pochhammer(top, k) * pochhammer(base_both, k) /
                            (pochhammer(one, k) * pochhammer(base_tail, k));
      if (s % 2 == 0)
        table.w[s] = sign * shared * pochhammer(base_alpha, k) / pochhammer(base_beta, k);
      else
        table.w[s] = sign * shared * pochhammer(base_alpha, k + 1) / pochhammer(base_beta, k + 1);
    }
    const Scalar kappa_den = (p.beta + one) / 2;
    table.kappa0 = pochhammer(base_both, half) / pochhammer(kappa_den, half);
  }
  return table;
}

}  // namespace pstchain
