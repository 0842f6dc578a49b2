// SPDX-License-Identifier: MIT

#include "pstchain/orthopoly.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "pstchain/spinchain.hpp"
#include "test_helpers.hpp"

using namespace pstchain;
using pstchain_tests::random_positive_parameters;

TEST_SUITE_BEGIN("orthopoly");

TEST_CASE("monic sequence: P_0 = 1, P_1 = x - b_0, eigenvalue root") {
  const auto rec = recurrence_coefficients(ChainParameters(1, Rational(2), Rational(2)));
  const auto at5 = evaluate_monic_sequence(rec, Rational(5));
  REQUIRE(at5.size() == 3);
  CHECK(at5[0] == 1);
  CHECK(at5[1] == 6);   // P_1(x) = x + 1 at x = 5
  CHECK(at5[2] == 0);   // 5 is an eigenvalue: P_2(x) = (x+1)^2 - 36

  const auto at0 = evaluate_monic_sequence(rec, Rational(0));
  CHECK(at0[1] == 1);
}

TEST_CASE("tableau rows: ones on top, characteristic zeros at the bottom") {
  const ChainParameters p(5, Rational(3, 2), Rational(3, 2));
  const auto rec = recurrence_coefficients(p);
  const auto grid = bi_grid(p);
  const auto tableau = polynomial_tableau(rec, grid.y);
  REQUIRE(tableau.rows == p.order + 2);
  for (int s = 0; s <= p.order; ++s) {
    CHECK(tableau.at(0, s) == 1);
    CHECK(tableau.at(p.order + 1, s) == 0);  // exact arithmetic: exact zeros
  }
}

TEST_CASE("floating tableau: characteristic row vanishes within the degree scaling") {
  std::mt19937 rng(8091);
  for (int order = 1; order <= 20; ++order) {
    const auto real = to_real(random_positive_parameters(rng, order));
    const auto rec = recurrence_coefficients(real);
    const auto grid = bi_grid(real);
    const auto tableau = polynomial_tableau(rec, grid.y);
    double reach = 1.0;
    for (double y : grid.y) reach = std::max(reach, std::abs(y));
    const double scale = std::pow(reach, order + 1);
    for (int s = 0; s <= order; ++s)
      CHECK(std::abs(tableau.at(order + 1, s)) <= 1e-9 * scale);
  }
}

TEST_CASE("characteristic derivative") {
  const std::vector<Rational> two{-7, 5};
  CHECK(characteristic_derivative(two, 1) == 12);
  CHECK(characteristic_derivative(two, 0) == -12);
  CHECK(characteristic_derivative(std::vector<Rational>{Rational(42)}, 0) == 1);
  CHECK_THROWS_AS(characteristic_derivative(std::vector<Rational>{1, 1}, 0),
                  DegenerateSpectrumError);
  CHECK_THROWS_AS(characteristic_derivative(two, 5), DomainError);
}

TEST_CASE("orthogonality: exact Gram matrix of the Krawtchouk chain") {
  const ChainParameters p(2, Rational(3), Rational(3));
  const auto rec = recurrence_coefficients(p);
  const auto grid = bi_grid(p);
  const auto weights = closed_form_weights(p);

  // Independent desk oracle: diagonal kappa_0 * h_n = [4, 32, 256].
  const auto tableau = polynomial_tableau(rec, grid.y);
  const std::vector<Rational> expected_diagonal{4, 32, 256};
  for (int n = 0; n <= 2; ++n) {
    Rational diag(0);
    for (int s = 0; s <= 2; ++s) diag += weights.w[s] * tableau.at(n, s) * tableau.at(n, s);
    CHECK(diag == expected_diagonal[n]);
  }

  CHECK(verify_orthogonality(rec, grid, weights) == 0);
}

TEST_CASE("orthogonality: exact residual vanishes, floating residual is tiny") {
  const ChainParameters p(3, Rational(2), Rational(2));
  CHECK(verify_orthogonality(recurrence_coefficients(p), bi_grid(p), closed_form_weights(p)) == 0);

  const auto real = to_real(p);
  const double residual =
      verify_orthogonality(recurrence_coefficients(real), bi_grid(real), closed_form_weights(real));
  CHECK(residual <= 1e-12);
}

TEST_CASE("orthogonality: random draws, exact and floating paths") {
  std::mt19937 rng(5150);
  for (int order = 1; order <= 10; ++order) {
    const auto p = random_positive_parameters(rng, order);
    CHECK(verify_orthogonality(recurrence_coefficients(p), bi_grid(p), closed_form_weights(p)) ==
          0);
    const auto real = to_real(p);
    CHECK(verify_orthogonality(recurrence_coefficients(real), bi_grid(real),
                               closed_form_weights(real)) <= 1e-10);
  }
}

TEST_CASE("Christoffel transform: frozen desk values for N=3, alpha=2") {
  const ChainParameters p(3, Rational(2), Rational(2));
  const auto rec = recurrence_coefficients(p);
  const auto spectrum = bi_grid(p).ascending();

  const auto data = christoffel_transform(rec, spectrum, RemovalSide::Largest);
  CHECK(data.removed_level == 9);
  CHECK(data.k == std::vector<Rational>{10, 4, 6, 0});  // K_N = 0: removed point is a root
  CHECK(data.transformed.u == std::vector<Rational>{0, 24, 24, 0});
  CHECK(data.transformed.b == std::vector<Rational>{-7, 1, -7});

  // Closed form K_n = 2 [N-n]_{alpha/2} matches the ratio definition.
  for (int n = 0; n <= 3; ++n)
    CHECK(data.k[n] == christoffel_k_closed_form(3, Rational(2), n));

  // The transformed chain's spectrum is the original minus its largest point.
  const auto eigen = eigensystem(build_jacobi(data.transformed));
  const std::vector<Rational> expected{-11, -7, 5};
  REQUIRE(eigen.eigenvalues.size() == 3);
  for (int s = 0; s < 3; ++s)
    CHECK(eigen.eigenvalues[s] == doctest::Approx(to_double(expected[s])).epsilon(1e-12));
}

TEST_CASE("Christoffel transform: smallest-level removal keeps positivity") {
  const ChainParameters p(5, Rational(4), Rational(4));
  const auto rec = recurrence_coefficients(p);
  const auto spectrum = bi_grid(p).ascending();
  const auto data = christoffel_transform(rec, spectrum, RemovalSide::Smallest);
  for (int n = 1; n < p.order; ++n) CHECK(data.transformed.u[n] > 0);
}

TEST_CASE("Christoffel transform error paths") {
  const ChainParameters p(3, Rational(2), Rational(2));
  const auto rec = recurrence_coefficients(p);
  const auto spectrum = bi_grid(p).ascending();

  CHECK_THROWS_AS(christoffel_transform_at(rec, spectrum, 1), UnsupportedRemovalError);
  CHECK_THROWS_AS(christoffel_transform_at(rec, spectrum, 2), UnsupportedRemovalError);

  // Removing a point where P_1 vanishes: N=1 chain has P_1(x) = x + 1.
  const auto small = recurrence_coefficients(ChainParameters(1, Rational(2), Rational(2)));
  CHECK_THROWS_AS(christoffel_transform(small, std::vector<Rational>{-1, 5}, RemovalSide::Smallest),
                  SingularTransformError);
}

TEST_CASE("closed-form K_n domain") {
  CHECK(christoffel_k_closed_form(3, Rational(2), 0) == 10);
  CHECK(christoffel_k_closed_form(3, Rational(2), 1) == 4);
  CHECK(christoffel_k_closed_form(7, Rational(5, 3), 7) == 0);
  CHECK_THROWS_AS(christoffel_k_closed_form(4, Rational(2), 0), DomainError);
  CHECK_THROWS_AS(christoffel_k_closed_form(3, Rational(2), 5), DomainError);
}

TEST_CASE("Stieltjes reconstruction: two- and three-point desk oracles") {
  const auto two = stieltjes_reconstruct({-7.0, 5.0}, {0.5, 0.5});
  REQUIRE(two.b.size() == 2);
  CHECK(two.b[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(two.b[1] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(two.u[1] == doctest::Approx(36.0).epsilon(1e-14));

  const auto point = stieltjes_reconstruct({2.5}, {1.0});
  CHECK(point.b == std::vector<double>{2.5});

  const auto three = stieltjes_reconstruct({-5.0, -1.0, 3.0}, {0.25, 0.5, 0.25});
  CHECK(three.b[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(three.b[1] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(three.b[2] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(three.u[1] == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(three.u[2] == doctest::Approx(8.0).epsilon(1e-14));
}

TEST_CASE("Stieltjes reconstruction: error paths") {
  CHECK_THROWS_AS(stieltjes_reconstruct({0.0, 1.0}, {0.5}), DomainError);
  CHECK_THROWS_AS(stieltjes_reconstruct({1.0, 1.0}, {0.5, 0.5}), DomainError);
  CHECK_THROWS_AS(stieltjes_reconstruct({0.0, 1.0}, {1.0, 0.0}), DomainError);

  // 21 nodes crammed into a 1e-8 interval: <P_n, P_n> underflows.
  std::vector<double> nodes;
  std::vector<double> weights;
  for (int s = 0; s <= 20; ++s) {
    nodes.push_back(1.0 + 1e-8 * s / 20.0);
    weights.push_back(1.0 / 21.0);
  }
  CHECK_THROWS_AS(stieltjes_reconstruct(nodes, weights), IllConditionedMeasureError);
}

TEST_CASE("Stieltjes round trip reproduces the chain recurrence, N <= 20") {
  std::mt19937 rng(777);
  for (int order = 1; order <= 20; ++order) {
    // Mirror chains: the 1/|P'| weights are the true spectral measure there.
    const auto draw = random_positive_parameters(rng, order);
    const ChainParameters p(order, draw.alpha, draw.alpha);
    const auto rec = to_real(recurrence_coefficients(p));
    const auto grid = to_real(bi_grid(p).ascending());
    const auto weights = spectral_weights(build_jacobi(rec));

    const auto rebuilt = stieltjes_reconstruct(grid, weights);

    double max_b = 0.0;
    for (double b : rec.b) max_b = std::max(max_b, std::abs(b));
    double max_u = 0.0;
    for (double u : rec.u) max_u = std::max(max_u, std::abs(u));

    for (int n = 0; n <= order; ++n)
      CHECK(std::abs(rebuilt.b[n] - rec.b[n]) <= 1e-8 * (1.0 + max_b));
    for (int n = 1; n <= order; ++n)
      CHECK(std::abs(rebuilt.u[n] - rec.u[n]) <= 1e-8 * max_u);
  }
}

TEST_CASE("weight reconstruction identity on mirror chains") {
  // Normalized closed-form weights (ascending order) equal normalized
  // 1/|P'_{N+1}(x_s)|; frozen exact values for N=3, alpha=2.
  const ChainParameters p(3, Rational(2), Rational(2));
  const auto grid = bi_grid(p);
  const auto table = closed_form_weights(p);
  const std::vector<Rational> expected{Rational(3, 16), Rational(5, 16), Rational(5, 16),
                                       Rational(3, 16)};
  const auto x = grid.ascending();
  for (int k = 0; k <= 3; ++k) {
    const Rational closed = table.w[grid.sort_permutation[k]] / table.kappa0;
    CHECK(closed == expected[k]);
    Rational derivative = characteristic_derivative(x, k);
    if (derivative < 0) derivative = -derivative;
    // Exact cross-check of the product route: sum of 1/|P'| is 1/240.
    CHECK(Rational(1) / derivative == expected[k] * Rational(1, 240));
  }

  std::mt19937 rng(31337);
  for (int order = 1; order <= 14; ++order) {
    const auto draw = random_positive_parameters(rng, order);
    const ChainParameters mirror(order, draw.alpha, draw.alpha);
    const auto g = bi_grid(mirror);
    const auto w = closed_form_weights(mirror);
    const auto ascending = to_real(g.ascending());
    const auto candidate = spectral_weights(ascending);
    for (int k = 0; k <= order; ++k) {
      const double closed = to_double(w.w[g.sort_permutation[k]] / w.kappa0);
      CHECK(std::abs(closed - candidate[k]) <= 1e-10);
    }
  }
}

TEST_SUITE_END();
