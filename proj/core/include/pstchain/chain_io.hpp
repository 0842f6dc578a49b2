// SPDX-License-Identifier: MIT
#pragma once

// Serialization of chain documents (JSON, schemaVersion 1) and fidelity
// traces (CSV). Rationals are serialized as {"num": p, "den": q} integer
// pairs, never as decimal strings, so certification exactness survives a
// round trip. Emission is byte-stable: fixed key order, floating values
// with 17 significant digits.

#include <optional>
#include <string>
#include <vector>

#include "pstchain/m1hahn.hpp"
#include "pstchain/pst.hpp"
#include "pstchain/spinchain.hpp"

namespace pstchain {

inline constexpr int kChainSchemaVersion = 1;

/// On-disk description of a dual -1 Hahn chain. The rational arrays are the
/// exact recurrence data; couplings/fields are their floating realization
/// (couplings[l]^2 == u[l+1]). The u array holds the interior u_1..u_N.
struct ChainDocument {
  int schema_version = kChainSchemaVersion;
  int order = 1;  // N
  Rational alpha;
  Rational beta;
  std::vector<Rational> b;        // N+1 entries
  std::vector<Rational> u;        // N entries (interior)
  std::vector<double> couplings;  // N entries
  std::vector<double> fields;     // N+1 entries
  std::optional<PSTCertificate> certificate;

  ChainParameters parameters() const { return ChainParameters(order, alpha, beta); }
  SpinChain chain() const { return SpinChain{couplings, fields}; }
};

/// Builds the canonical document for the given parameters (closed-form
/// recurrence data and couplings), with an optional embedded certificate.
ChainDocument make_chain_document(const ChainParameters& parameters,
                                  std::optional<PSTCertificate> certificate = std::nullopt);

std::string to_json(const ChainDocument& document);
std::string to_json(const PSTCertificate& certificate, const std::string& indent = "");

/// Parses and validates a chain document: schema version, array sizes,
/// parity string, consistency of couplings with u, and exact agreement of
/// the stored b, u with the closed forms for (N, alpha, beta).
ChainDocument parse_chain_document(const std::string& text);

/// CSV with header "t,reA,imA,absA", one row per sample.
std::string to_csv(const FidelityTrace& trace);

/// 17-significant-digit decimal rendering that round-trips doubles.
std::string format_double(double value);

/// {"num": p, "den": q} fragment used across all JSON documents.
std::string rational_to_json(const Rational& value);

}  // namespace pstchain
