// SPDX-License-Identifier: MIT

#include "pstchain/orthopoly.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "pstchain/errors.hpp"

namespace pstchain {

RecurrenceData<double> stieltjes_reconstruct(const std::vector<double>& nodes,
                                             const std::vector<double>& weights) {
  const int points = static_cast<int>(nodes.size());
  if (points == 0 || weights.size() != nodes.size())
    throw DomainError("stieltjes_reconstruct: need equally many nodes and weights");
  for (int s = 1; s < points; ++s)
    if (!(nodes[s - 1] < nodes[s]))
      throw DomainError("stieltjes_reconstruct: nodes must be strictly increasing");
  for (double w : weights)
    if (!(w > 0.0)) throw DomainError("stieltjes_reconstruct: weights must be positive");

  const int n_top = points - 1;  // N: highest degree with positive norm
  RecurrenceData<double> rec;
  rec.b.resize(n_top + 1);
  rec.u.assign(n_top + 2, 0.0);

  std::vector<double> p_prev(points, 0.0);  // P_{n-1} on the nodes
  std::vector<double> p_cur(points, 1.0);   // P_n on the nodes
  double norm_cur = 0.0;                    // <P_n, P_n>
  for (int s = 0; s < points; ++s) norm_cur += weights[s];

  for (int n = 0; n <= n_top; ++n) {
    double moment = 0.0;  // <x P_n, P_n>
    for (int s = 0; s < points; ++s) moment += weights[s] * nodes[s] * p_cur[s] * p_cur[s];
    rec.b[n] = moment / norm_cur;

    if (n == n_top) break;  // u_{N+1} stays 0: P_{N+1} vanishes on the nodes

    double norm_next = 0.0;
    for (int s = 0; s < points; ++s) {
      const double next = (nodes[s] - rec.b[n]) * p_cur[s] - rec.u[n] * p_prev[s];
      p_prev[s] = p_cur[s];
      p_cur[s] = next;
      norm_next += weights[s] * next * next;
    }
    if (!(norm_next > 0.0) || !std::isfinite(norm_next) || norm_next < 1e-290)
      throw IllConditionedMeasureError(
          "stieltjes_reconstruct: <P_n, P_n> lost positivity at degree " + std::to_string(n + 1));
    rec.u[n + 1] = norm_next / norm_cur;
    norm_cur = norm_next;
  }
  return rec;
}

}  // namespace pstchain
