// SPDX-License-Identifier: MIT

// Acceptance suite: one self-contained check per release criterion, each
// printed as a single pass/fail line. Exit status is the number of failures.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "pstchain/chain_io.hpp"
#include "pstchain/m1hahn.hpp"
#include "pstchain/orthopoly.hpp"
#include "pstchain/pst.hpp"
#include "pstchain/spinchain.hpp"

using namespace pstchain;

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& what) {
  if (!condition) throw CheckFailure(what);
}

SpinChain chain_for(const ChainParameters& p) {
  return build_jacobi(recurrence_coefficients(p));
}

const std::vector<DesignRequest>& family_sweep() {
  static const std::vector<DesignRequest> sweep = [] {
    std::vector<DesignRequest> requests;
    for (int order : {3, 7, 15, 31})
      for (auto [m1, m2] : {std::pair{1, 2}, std::pair{3, 4}, std::pair{1, 4}})
        requests.push_back({Parity::Odd, order, m1, m2});
    for (int order : {2, 10, 30})
      for (auto [m1, m2] : {std::pair{1, 1}, std::pair{3, 1}, std::pair{1, 3}})
        requests.push_back({Parity::Even, order, m1, m2});
    return requests;
  }();
  return sweep;
}

ChainParameters random_positive_parameters(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(1, 40);
  std::uniform_int_distribution<int> den(1, 9);
  const Rational bound = order % 2 == 0 ? Rational(order) : Rational(-1);
  const Rational alpha = bound + Rational(num(rng), den(rng));
  const Rational beta = bound + Rational(num(rng), den(rng));
  return ChainParameters(order, alpha, beta);
}

// 1. Two-site analytic chain.
void criterion_two_site() {
  const ChainParameters p(1, Rational(2), Rational(2));
  const auto chain = chain_for(p);
  require(chain.couplings.size() == 1 && std::abs(chain.couplings[0] - 6.0) <= 1e-12,
          "coupling is not 6");
  const auto eigen = eigensystem(chain);
  require(std::abs(eigen.eigenvalues[0] + 7.0) <= 1e-12 &&
              std::abs(eigen.eigenvalues[1] - 5.0) <= 1e-12,
          "eigenvalues differ from {-7, 5}");
  const auto weights = spectral_weights(chain);
  require(std::abs(weights[0] - 0.5) <= 1e-12 && std::abs(weights[1] - 0.5) <= 1e-12,
          "weights differ from {1/2, 1/2}");
  const double amp = std::abs(transfer_amplitude(eigen, std::numbers::pi / 12.0));
  require(std::abs(amp - 1.0) <= 1e-12, "|A(pi/12)| != 1");
}

// 2. Krawtchouk chain from the (even, 1, 1) design.
void criterion_krawtchouk() {
  const auto design = design_chain({Parity::Even, 2, 1, 1});
  require(design.parameters.alpha == Rational(3) && design.parameters.beta == Rational(3),
          "design did not give alpha = beta = 3");
  const auto rec = recurrence_coefficients(design.parameters);
  for (const auto& b : rec.b) require(b == Rational(-1), "b_n != -1 exactly");

  const auto eigen = eigensystem(build_jacobi(rec));
  const std::vector<double> expected{-5.0, -1.0, 3.0};
  for (int s = 0; s < 3; ++s)
    require(std::abs(eigen.eigenvalues[s] - expected[s]) <= 1e-12,
            "eigenvalues differ from {-5, -1, 3}");

  require(design.certificate.t_over_pi == Rational(1, 4), "T != pi/4");
  const double amp = std::abs(transfer_amplitude(eigen, std::numbers::pi / 4.0));
  require(amp >= 1.0 - 1e-12, "|A(pi/4)| < 1 - 1e-12");
}

// 3. Family soundness sweep.
void criterion_family_soundness() {
  for (const auto& request : family_sweep()) {
    const auto design = design_chain(request);
    require(design.certificate.passed, "certificate failed");
    require(design.certificate.amplitude_at_t.has_value() &&
                *design.certificate.amplitude_at_t >= 1.0 - 1e-9,
            "measured |A(T)| < 1 - 1e-9 for N = " + std::to_string(request.order));
  }
}

// 4. Grid-spectrum agreement over random draws.
void criterion_grid_spectrum() {
  std::mt19937 rng(20260401);
  std::uniform_int_distribution<int> order_draw(1, 31);
  for (int draw = 0; draw < 50; ++draw) {
    const int order = draw == 0 ? 31 : draw == 1 ? 30 : order_draw(rng);
    const auto p = random_positive_parameters(rng, order);
    const auto x = to_real(bi_grid(p).ascending());
    const auto eigen = eigensystem(chain_for(p));
    double scale = 1.0;
    for (double v : x) scale = std::max(scale, std::abs(v));
    for (std::size_t s = 0; s < x.size(); ++s)
      require(std::abs(eigen.eigenvalues[s] - x[s]) <= 1e-10 * scale,
              "eigenvalue differs from the BI grid at N = " + std::to_string(order));
  }
}

// 5. Orthogonality residuals: floating 1e-8 for N <= 20, exact 0 for N <= 10.
void criterion_orthogonality() {
  std::mt19937 rng(555);
  std::uniform_int_distribution<int> order_draw(1, 20);
  for (int draw = 0; draw < 20; ++draw) {
    const int order = draw == 0 ? 20 : draw == 1 ? 19 : order_draw(rng);
    const auto p = random_positive_parameters(rng, order);
    const auto real = to_real(p);
    const double residual = verify_orthogonality(recurrence_coefficients(real), bi_grid(real),
                                                 closed_form_weights(real));
    require(residual <= 1e-8, "floating Gram residual above 1e-8 at N = " + std::to_string(order));
  }
  for (int order = 1; order <= 10; ++order) {
    const auto p = random_positive_parameters(rng, order);
    const Rational residual =
        verify_orthogonality(recurrence_coefficients(p), bi_grid(p), closed_form_weights(p));
    require(residual == 0, "exact Gram residual nonzero at N = " + std::to_string(order));
  }
}

// 6. Weight equivalence (condition (ii) <=> (ii')).
void criterion_weight_equivalence() {
  for (const auto& request : family_sweep()) {
    const auto design = design_chain(request);
    const auto grid = bi_grid(design.parameters);
    const auto table = closed_form_weights(design.parameters);
    const auto candidate = spectral_weights(to_real(grid.ascending()));
    for (int s = 0; s <= design.parameters.order; ++s) {
      const double closed = to_double(table.w[grid.sort_permutation[s]] / table.kappa0);
      require(std::abs(closed - candidate[s]) <= 1e-10,
              "closed-form and 1/|P'| weights differ on a mirror chain");
    }
  }

  // A chain with alpha != beta must be detected as unequal.
  const ChainParameters skew(3, Rational(2), Rational(4));
  const auto grid = bi_grid(skew);
  const auto table = closed_form_weights(skew);
  const auto candidate = spectral_weights(to_real(grid.ascending()));
  double worst = 0.0;
  for (int s = 0; s <= skew.order; ++s) {
    const double closed = to_double(table.w[grid.sort_permutation[s]] / table.kappa0);
    worst = std::max(worst, std::abs(closed - candidate[s]));
  }
  require(worst > 1e-3, "alpha != beta chain not detected by the weight comparison");
}

// 7. Christoffel link, exact plus spectral check.
void criterion_christoffel() {
  for (int order : {3, 5, 11, 21}) {
    const auto link = verify_christoffel_link(order, Rational(2));
    require(link.max_residual == 0, "exact Christoffel residual nonzero at N = " + std::to_string(order));

    const ChainParameters p(order, Rational(2), Rational(2));
    const auto spectrum = bi_grid(p).ascending();
    const auto data = christoffel_transform(recurrence_coefficients(p), spectrum, RemovalSide::Largest);
    const auto eigen = eigensystem(build_jacobi(data.transformed));
    double scale = 1.0;
    for (const auto& v : spectrum) scale = std::max(scale, std::abs(to_double(v)));
    for (int s = 0; s < order; ++s)
      require(std::abs(eigen.eigenvalues[s] - to_double(spectrum[s])) <= 1e-10 * scale,
              "transformed spectrum is not the original minus its largest point");
  }
}

// 8. Stieltjes reconstruction round trip across both families.
void criterion_reconstruction() {
  for (int order = 1; order <= 20; ++order) {
    const ChainParameters p(order, order % 2 == 0 ? Rational(order + 1) : Rational(2),
                            order % 2 == 0 ? Rational(order + 1) : Rational(2));
    const auto rec = to_real(recurrence_coefficients(p));
    const auto eigen = eigensystem(build_jacobi(rec));
    const auto weights = spectral_weights(eigen.eigenvalues);
    const auto rebuilt = stieltjes_reconstruct(eigen.eigenvalues, weights);

    double max_b = 0.0;
    for (double b : rec.b) max_b = std::max(max_b, std::abs(b));
    double max_u = 0.0;
    for (double u : rec.u) max_u = std::max(max_u, std::abs(u));
    for (int n = 0; n <= order; ++n)
      require(std::abs(rebuilt.b[n] - rec.b[n]) <= 1e-8 * (1.0 + max_b),
              "reconstructed b differs at N = " + std::to_string(order));
    for (int n = 1; n <= order; ++n)
      require(std::abs(rebuilt.u[n] - rec.u[n]) <= 1e-8 * max_u,
              "reconstructed u differs at N = " + std::to_string(order));
  }
}

// 9. Negative controls.
void criterion_negative_controls() {
  const auto half = certify_pst(ChainParameters(3, Rational(1, 2), Rational(1, 2)));
  require(!half.passed && half.failure && *half.failure == FailureReason::SpacingViolation,
          "alpha = beta = 1/2 not rejected as a spacing violation");

  const auto skew = certify_pst(ChainParameters(3, Rational(2), Rational(4)));
  require(!skew.passed && skew.failure && *skew.failure == FailureReason::MirrorViolation,
          "alpha = 2, beta = 4 not rejected as a mirror violation");

  bool rejected = false;
  try {
    design_chain({Parity::Odd, 3, 1, 3});  // M2 odd
  } catch (const InvalidDesignError&) {
    rejected = true;
  }
  require(rejected, "odd-N design with M2 odd was not rejected");
}

// 10. Unitarity and full mirror inversion for every certified sweep chain.
void criterion_mirror_inversion() {
  std::mt19937 rng(8080);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  for (const auto& request : family_sweep()) {
    const auto design = design_chain(request);
    const auto eigen = eigensystem(chain_for(design.parameters));
    const int n = eigen.sites();

    const double t_random = time(rng);
    for (int l = 0; l < n; ++l) {
      const auto column = evolve_basis_state(eigen, l, t_random);
      double total = 0.0;
      for (const auto& a : column) total += std::norm(a);
      require(std::abs(total - 1.0) <= 1e-12, "evolution column norm differs from 1");
    }

    const double t = std::numbers::pi * to_double(design.certificate.t_over_pi);
    const auto reference = evolve_basis_state(eigen, 0, t);
    const std::complex<double> phase = reference[n - 1];
    require(std::abs(std::abs(phase) - 1.0) <= 1e-9, "|A(T)| != 1 at the transfer time");
    for (int l = 0; l < n; ++l) {
      const auto state = evolve_basis_state(eigen, l, t);
      for (int k = 0; k < n; ++k) {
        const std::complex<double> expected =
            k == n - 1 - l ? phase : std::complex<double>(0.0, 0.0);
        require(std::abs(state[k] - expected) <= 1e-9,
                "mirror inversion violated at N = " + std::to_string(request.order));
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria{
      {"1. two-site analytic chain (N=1, alpha=beta=2)", criterion_two_site},
      {"2. Krawtchouk chain (N=2, M1=M2=1)", criterion_krawtchouk},
      {"3. family soundness sweep (odd and even designs)", criterion_family_soundness},
      {"4. grid-spectrum agreement (50 random draws, N <= 31)", criterion_grid_spectrum},
      {"5. orthogonality residuals (floating N <= 20, exact N <= 10)", criterion_orthogonality},
      {"6. weight equivalence (ii) <=> (ii')", criterion_weight_equivalence},
      {"7. Christoffel link (N in {3,5,11,21}, alpha = 2)", criterion_christoffel},
      {"8. reconstruction round trip (N <= 20, both families)", criterion_reconstruction},
      {"9. negative controls", criterion_negative_controls},
      {"10. unitarity and full mirror inversion", criterion_mirror_inversion},
  };

  int failures = 0;
  for (const auto& [label, run] : criteria) {
    try {
      run();
      std::printf("[PASS] %s\n", label.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("[FAIL] %s: %s\n", label.c_str(), e.what());
    }
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}
