// SPDX-License-Identifier: MIT
#pragma once

// Perfect state transfer certification and design. Certification is exact:
// mirror symmetry is tested on rational recurrence coefficients and the
// odd-spacing condition on the rational Bannai-Ito grid. Floating-point
// eigenvalues and amplitudes serve only as recorded cross-checks, because
// oddness of the spacing multipliers is undecidable in floating point.

#include <optional>
#include <string>
#include <vector>

#include "pstchain/m1hahn.hpp"
#include "pstchain/orthopoly.hpp"
#include "pstchain/rational.hpp"
#include "pstchain/spinchain.hpp"

namespace pstchain {

enum class FailureReason { MirrorViolation, SpacingViolation, Degenerate };

std::string to_string(FailureReason reason);

/// Outcome of the odd-spacing test x_{s+1} - x_s = (pi/T) M_s on an exact
/// spectrum. When it holds, T is minimal (the multipliers are coprime) and
/// every odd multiple of T works as well.
struct SpacingCertificate {
  bool odd_spacing = false;
  Rational t_over_pi;               // meaningful when odd_spacing
  std::vector<Integer> multipliers; // M_s, positive odd, gcd 1
  int violation_index = -1;         // offending spacing ratio otherwise
};

/// Computes the spacing certificate: reduce d_s/d_0 to lowest terms a_s/b_s;
/// any even a_s or b_s rules out odd multipliers; otherwise scale by
/// L = lcm(b_s), divide by the common gcd, and read off T/pi = M_0/d_0.
SpacingCertificate spacing_certificate(const std::vector<Rational>& ascending_spectrum);

/// Full PST certificate. `passed` is decided exactly; `amplitude_at_t` and
/// `phase` are the measured |A(T)| and arg A(T), recorded whenever the
/// spacing condition produced a T (even if mirror symmetry failed).
struct PSTCertificate {
  bool passed = false;
  bool mirror = false;
  Rational t_over_pi;                // T as an exact rational multiple of pi
  std::vector<Integer> multipliers;  // odd M_s, one per consecutive spacing
  std::optional<double> amplitude_at_t;
  std::optional<double> phase;
  std::optional<FailureReason> failure;
};

struct CertifyOptions {
  EigenOptions eigen;
};

/// Certifies the chain with parameters p: exact mirror check on (u, b),
/// exact spacing check on the sorted BI grid, then the numeric |A(T)| and
/// phase cross-check. Requires positivity; propagates grid degeneracy.
PSTCertificate certify_pst(const ChainParameters& p, const CertifyOptions& options = {});

/// Request to build a PST chain of the given parity from two integers:
/// odd N:  alpha = beta = M2/M1 with M1 odd, M2 even, M2 > M1, coprime;
/// even N: alpha = beta = N + M1/M2 with M1, M2 odd and coprime.
struct DesignRequest {
  Parity parity = Parity::Odd;
  int order = 1;  // N
  long long m1 = 1;
  long long m2 = 2;
};

struct DesignResult {
  ChainParameters parameters;
  PSTCertificate certificate;
};

/// Validates the request, builds the parameters, certifies, and cross-checks
/// the certified period against the expected T/pi (M1/4 for odd N >= 3,
/// M2/4 for even N). Throws InvalidDesignError citing the violated
/// restriction on bad requests.
DesignResult design_chain(const DesignRequest& request, const CertifyOptions& options = {});

/// Uniform sampling of A(t) on [0, t_max] with `samples` >= 2 points.
FidelityTrace fidelity_trace(const SpinChain& chain, double t_max, int samples,
                             const EigenOptions& options = {});

/// Exact verification that Christoffel removal of the largest eigenvalue
/// maps the odd-N mirror chain onto the even family of order N-1 with
/// parameter N+alpha, up to a constant diagonal shift.
struct ChristoffelLinkReport {
  std::vector<Rational> kernel;              // pipeline K_n, n = 0..N
  RecurrenceData<Rational> transformed;      // pipeline u~, b~ (order N-1)
  ChainParameters even_partner;              // (N-1, N+alpha, N+alpha)
  Rational diagonal_shift;                   // measured constant b~ - b_even
  Rational max_residual;                     // worst deviation across all checks
};

/// Requires odd N >= 3 and alpha = beta inside the positivity domain.
/// The residual covers the closed-form kernel, the closed-form transformed
/// coefficients, and the shifted even-family comparison; it is exactly zero
/// when the identities hold.
ChristoffelLinkReport verify_christoffel_link(int order, const Rational& alpha);

}  // namespace pstchain
