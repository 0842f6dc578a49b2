// SPDX-License-Identifier: MIT

#include "pstchain/pst.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "pstchain/errors.hpp"
#include "pstchain/orthopoly.hpp"

namespace pstchain {

std::string to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::MirrorViolation: return "mirror-violation";
    case FailureReason::SpacingViolation: return "spacing-violation";
    case FailureReason::Degenerate: return "degenerate";
  }
  return "unknown";
}

SpacingCertificate spacing_certificate(const std::vector<Rational>& ascending_spectrum) {
  const int points = static_cast<int>(ascending_spectrum.size());
  if (points < 2) throw DomainError("spacing_certificate: need at least two spectral points");
  for (int s = 1; s < points; ++s)
    if (!(ascending_spectrum[s - 1] < ascending_spectrum[s]))
      throw DegenerateSpectrumError("spacing_certificate: spectrum must be strictly increasing");

  std::vector<Rational> spacing(points - 1);
  for (int s = 0; s + 1 < points; ++s)
    spacing[s] = ascending_spectrum[s + 1] - ascending_spectrum[s];

  SpacingCertificate cert;

  // M_s / M_0 = d_s / d_0 in lowest terms; odd multipliers force both the
  // numerator and the denominator of every reduced ratio to be odd.
  std::vector<Integer> num(points - 1);
  std::vector<Integer> den(points - 1);
  for (int s = 0; s + 1 < points; ++s) {
    const Rational ratio = spacing[s] / spacing[0];
    num[s] = numerator(ratio);
    den[s] = denominator(ratio);
    if (is_even(num[s]) || is_even(den[s])) {
      cert.odd_spacing = false;
      cert.violation_index = s;
      return cert;
    }
  }

  Integer common_den(1);
  for (const Integer& d : den) common_den = boost::multiprecision::lcm(common_den, d);
  cert.multipliers.resize(points - 1);
  for (int s = 0; s + 1 < points; ++s) cert.multipliers[s] = num[s] * (common_den / den[s]);
  Integer shared(0);
  for (const Integer& m : cert.multipliers) shared = boost::multiprecision::gcd(shared, m);
  for (Integer& m : cert.multipliers) m /= shared;  // gcd is odd, multipliers stay odd

  cert.odd_spacing = true;
  cert.t_over_pi = Rational(cert.multipliers[0]) / spacing[0];
  return cert;
}

PSTCertificate certify_pst(const ChainParameters& p, const CertifyOptions& options) {
  const auto report = positivity_check(p);
  if (!report.pass) throw PositivityError(report.describe());

  // Mirror symmetry u_{N-n+1} = u_n, b_{N-n} = b_n, decided exactly.
  const auto rec = recurrence_coefficients(p);
  PSTCertificate cert;
  cert.mirror = true;
  for (int n = 0; n <= p.order && cert.mirror; ++n) {
    if (rec.b[p.order - n] != rec.b[n]) cert.mirror = false;
    if (n >= 1 && rec.u[p.order - n + 1] != rec.u[n]) cert.mirror = false;
  }

  const auto grid = bi_grid(p);
  const auto spacing = spacing_certificate(grid.ascending());

  if (spacing.odd_spacing) {
    cert.t_over_pi = spacing.t_over_pi;
    cert.multipliers = spacing.multipliers;
    // Numeric cross-check at T, recorded for inspection.
    const auto chain = build_jacobi(rec);
    const auto eigen = eigensystem(chain, options.eigen);
    const double t = std::numbers::pi * to_double(cert.t_over_pi);
    const auto amplitude = transfer_amplitude(eigen, t);
    cert.amplitude_at_t = std::abs(amplitude);
    cert.phase = std::arg(amplitude);
  }

  cert.passed = cert.mirror && spacing.odd_spacing;
  if (!cert.passed)
    cert.failure = cert.mirror ? FailureReason::SpacingViolation : FailureReason::MirrorViolation;
  return cert;
}

namespace {

long long gcd_ll(long long a, long long b) {
  while (b != 0) {
    const long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace

DesignResult design_chain(const DesignRequest& request, const CertifyOptions& options) {
  if (request.order < 1)
    throw InvalidDesignError("design: chain order N must be at least 1");
  if (parity_of(request.order) != request.parity)
    throw InvalidDesignError("design: N = " + std::to_string(request.order) + " is not " +
                             to_string(request.parity));
  if (request.m1 < 1 || request.m2 < 1)
    throw InvalidDesignError("design: M1 and M2 must be positive");

  Rational alpha;
  Rational expected_t_over_pi;
  if (request.parity == Parity::Odd) {
    if (request.m1 % 2 == 0 || request.m2 % 2 != 0)
      throw InvalidDesignError(
          "design: odd-N chains require M2 even and M1 odd (alpha = M2/M1); got M1 = " +
          std::to_string(request.m1) + ", M2 = " + std::to_string(request.m2));
    if (request.m2 <= request.m1)
      throw InvalidDesignError("design: odd-N chains require M2 > M1");
    if (gcd_ll(request.m1, request.m2) != 1)
      throw InvalidDesignError("design: M1 and M2 must be coprime");
    alpha = Rational(request.m2, request.m1);
    // A single gap (N = 1) has minimal multiplier 1 instead of M1 + M2.
    expected_t_over_pi = request.order >= 3 ? Rational(request.m1, 4)
                                            : Rational(request.m1, 4 * (request.m1 + request.m2));
  } else {
    if (request.m1 % 2 == 0 || request.m2 % 2 == 0)
      throw InvalidDesignError(
          "design: even-N chains require M1 and M2 both odd (alpha = N + M1/M2); got M1 = " +
          std::to_string(request.m1) + ", M2 = " + std::to_string(request.m2));
    if (gcd_ll(request.m1, request.m2) != 1)
      throw InvalidDesignError("design: M1 and M2 must be coprime");
    alpha = Rational(request.order) + Rational(request.m1, request.m2);
    expected_t_over_pi = Rational(request.m2, 4);
  }

  DesignResult result{ChainParameters(request.order, alpha, alpha),
                      PSTCertificate{}};
  result.certificate = certify_pst(result.parameters, options);
  if (!result.certificate.passed)
    throw Error("design: internal error, designed chain failed certification");
  if (result.certificate.t_over_pi != expected_t_over_pi)
    throw Error("design: internal error, certified period differs from the design target");
  return result;
}

FidelityTrace fidelity_trace(const SpinChain& chain, double t_max, int samples,
                             const EigenOptions& options) {
  if (samples < 2) throw DomainError("fidelity_trace: need at least two samples");
  if (!(t_max > 0.0)) throw DomainError("fidelity_trace: t_max must be positive");

  const auto eigen = eigensystem(chain, options);
  FidelityTrace trace;
  trace.times.reserve(samples);
  trace.amplitudes.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    const double t = t_max * static_cast<double>(k) / static_cast<double>(samples - 1);
    trace.times.push_back(t);
    trace.amplitudes.push_back(transfer_amplitude(eigen, t));
  }
  return trace;
}

ChristoffelLinkReport verify_christoffel_link(int order, const Rational& alpha) {
  if (order < 3 || order % 2 == 0)
    throw DomainError("christoffel link: order must be odd and at least 3");
  const ChainParameters odd_params(order, alpha, alpha);
  const auto report = positivity_check(odd_params);
  if (!report.pass) throw PositivityError(report.describe());

  const auto rec = recurrence_coefficients(odd_params);
  const auto ascending = bi_grid(odd_params).ascending();
  const auto pipeline = christoffel_transform(rec, ascending, RemovalSide::Largest);

  ChristoffelLinkReport link{pipeline.k,
                             pipeline.transformed,
                             ChainParameters(order - 1, Rational(order) + alpha,
                                             Rational(order) + alpha),
                             Rational(0),
                             Rational(0)};

  const auto track = [&link](const Rational& deviation) {
    const Rational magnitude = deviation < 0 ? Rational(-deviation) : deviation;
    if (magnitude > link.max_residual) link.max_residual = magnitude;
  };

  // Pipeline kernel against the closed form K_n = 2 [N-n]_{alpha/2}.
  for (int n = 0; n <= order; ++n)
    track(pipeline.k[n] - christoffel_k_closed_form(order, alpha, n));

  // Transformed coefficients against their closed forms
  // u~_n = 4 [n]_{alpha/2} [N-n]_{alpha/2}, b~_n = -3 - 2 (-1)^n alpha.
  const Rational half_alpha = alpha / 2;
  for (int n = 1; n < order; ++n)
    track(pipeline.transformed.u[n] -
          4 * mu_number(n, half_alpha) * mu_number(order - n, half_alpha));
  for (int n = 0; n < order; ++n) {
    const Rational closed_b = Rational(-3) + (n % 2 == 0 ? -2 * alpha : 2 * alpha);
    track(pipeline.transformed.b[n] - closed_b);
  }

  // Even-family comparison: off-diagonal matches outright, diagonal up to a
  // constant shift (measured, then required to be constant).
  const auto even_rec = recurrence_coefficients(link.even_partner);
  link.diagonal_shift = pipeline.transformed.b[0] - even_rec.b[0];
  for (int n = 1; n < order; ++n) track(pipeline.transformed.u[n] - even_rec.u[n]);
  for (int n = 0; n < order; ++n)
    track(pipeline.transformed.b[n] - even_rec.b[n] - link.diagonal_shift);

  return link;
}

}  // namespace pstchain
