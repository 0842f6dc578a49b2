// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "pstchain/errors.hpp"
#include "pstchain/rational.hpp"

namespace pstchain {

enum class Parity { Even, Odd };

inline Parity parity_of(int n) { return n % 2 == 0 ? Parity::Even : Parity::Odd; }

inline std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

/// Three-term recurrence data of a finite family of monic orthogonal
/// polynomials: P_{n+1}(x) + b_n P_n(x) + u_n P_{n-1}(x) = x P_n(x).
///
/// For a chain of order N (N+1 sites) the diagonal b has N+1 entries and u
/// has N+2 entries with u_0 = u_{N+1} = 0 stored explicitly, so the boundary
/// condition is a checkable invariant rather than a convention.
template <typename Scalar>
struct RecurrenceData {
  std::vector<Scalar> b;  // b_0 .. b_N
  std::vector<Scalar> u;  // u_0 = 0, u_1 .. u_N, u_{N+1} = 0

  int order() const { return static_cast<int>(b.size()) - 1; }

  /// h_n = u_1 u_2 ... u_n (h_0 = 1), the squared norms up to kappa_0.
  Scalar h(int n) const {
    Scalar prod(1);
    for (int k = 1; k <= n; ++k) prod *= u[static_cast<std::size_t>(k)];
    return prod;
  }

  void validate() const {
    if (b.empty() || u.size() != b.size() + 1)
      throw DomainError("recurrence data: u must have exactly one more entry than b");
    if (u.front() != Scalar(0) || u.back() != Scalar(0))
      throw DomainError("recurrence data: u_0 and u_{N+1} must be zero");
  }
};

inline RecurrenceData<double> to_real(const RecurrenceData<Rational>& rec) {
  RecurrenceData<double> out;
  out.b.reserve(rec.b.size());
  out.u.reserve(rec.u.size());
  for (const auto& v : rec.b) out.b.push_back(to_double(v));
  for (const auto& v : rec.u) out.u.push_back(to_double(v));
  return out;
}

inline std::vector<double> to_real(const std::vector<Rational>& values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_double(v));
  return out;
}

}  // namespace pstchain
