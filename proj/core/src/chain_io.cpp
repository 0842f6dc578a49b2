// SPDX-License-Identifier: MIT

#include "pstchain/chain_io.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "pstchain/errors.hpp"

namespace pstchain {

std::string rational_to_json(const Rational& value) {
  return "{\"num\": " + numerator(value).str() + ", \"den\": " + denominator(value).str() + "}";
}

namespace {

// Hand-rolled emitter: nlohmann prints doubles in shortest-round-trip form,
// but the documents promise 17 significant digits and a fixed key order so
// output bytes are stable across runs and toolchains.

std::string rational_json(const Rational& q) { return rational_to_json(q); }

template <typename Seq, typename Render>
std::string array_json(const Seq& seq, Render render) {
  std::string out = "[";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ", ";
    out += render(seq[i]);
  }
  return out + "]";
}

std::string certificate_json(const PSTCertificate& cert, const std::string& indent) {
  std::string out = "{\n";
  const std::string inner = indent + "  ";
  out += inner + "\"passed\": " + (cert.passed ? "true" : "false") + ",\n";
  out += inner + "\"mirror\": " + (cert.mirror ? "true" : "false");
  if (!cert.multipliers.empty()) {
    out += ",\n" + inner + "\"T_over_pi\": " + rational_json(cert.t_over_pi);
    out += ",\n" + inner + "\"M\": " +
           array_json(cert.multipliers, [](const Integer& m) { return m.str(); });
  }
  if (cert.amplitude_at_t)
    out += ",\n" + inner + "\"amplitudeAtT\": " + format_double(*cert.amplitude_at_t);
  if (cert.phase) out += ",\n" + inner + "\"phase\": " + format_double(*cert.phase);
  if (cert.failure)
    out += ",\n" + inner + "\"failureReason\": \"" + to_string(*cert.failure) + "\"";
  out += "\n" + indent + "}";
  return out;
}

using nlohmann::json;

// TODO: accept num/den beyond int64 (the writer already emits arbitrary
// precision; designs need M2 > ~4e8 before any u_n overflows 64 bits).
Rational rational_from_json(const json& j, const std::string& what) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") ||
      !j.at("num").is_number_integer() || !j.at("den").is_number_integer())
    throw FormatError(what + ": expected {\"num\": p, \"den\": q} with integer entries");
  const long long num = j.at("num").get<long long>();
  const long long den = j.at("den").get<long long>();
  if (den <= 0) throw FormatError(what + ": denominator must be positive");
  return Rational(Integer(num), Integer(den));
}

std::vector<Rational> rational_array_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw FormatError(what + ": expected an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& entry : j) out.push_back(rational_from_json(entry, what));
  return out;
}

std::vector<double> double_array_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw FormatError(what + ": expected an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_number()) throw FormatError(what + ": expected numbers");
    out.push_back(entry.get<double>());
  }
  return out;
}

PSTCertificate certificate_from_json(const json& j) {
  PSTCertificate cert;
  if (!j.is_object()) throw FormatError("certificate: expected an object");
  cert.passed = j.at("passed").get<bool>();
  cert.mirror = j.at("mirror").get<bool>();
  if (j.contains("T_over_pi")) cert.t_over_pi = rational_from_json(j.at("T_over_pi"), "T_over_pi");
  if (j.contains("M")) {
    for (const auto& entry : j.at("M")) {
      if (!entry.is_number_integer()) throw FormatError("certificate M: expected integers");
      cert.multipliers.emplace_back(entry.get<long long>());
    }
  }
  if (j.contains("amplitudeAtT")) cert.amplitude_at_t = j.at("amplitudeAtT").get<double>();
  if (j.contains("phase")) cert.phase = j.at("phase").get<double>();
  if (j.contains("failureReason")) {
    const std::string reason = j.at("failureReason").get<std::string>();
    if (reason == "mirror-violation") cert.failure = FailureReason::MirrorViolation;
    else if (reason == "spacing-violation") cert.failure = FailureReason::SpacingViolation;
    else if (reason == "degenerate") cert.failure = FailureReason::Degenerate;
    else throw FormatError("certificate: unknown failureReason \"" + reason + "\"");
  }
  return cert;
}

ChainDocument parse_chain_document_fields(const json& j) {
  if (!j.is_object()) throw FormatError("chain document: expected a JSON object");
  for (const char* key : {"schemaVersion", "N", "parity", "alpha", "beta", "b", "u",
                          "couplings", "fields"})
    if (!j.contains(key)) throw FormatError(std::string("chain document: missing \"") + key + "\"");

  ChainDocument doc;
  doc.schema_version = j.at("schemaVersion").get<int>();
  if (doc.schema_version != kChainSchemaVersion)
    throw FormatError("chain document: unsupported schemaVersion " +
                      std::to_string(doc.schema_version));
  doc.order = j.at("N").get<int>();
  if (doc.order < 1) throw FormatError("chain document: N must be at least 1");
  if (j.at("parity").get<std::string>() != to_string(parity_of(doc.order)))
    throw FormatError("chain document: parity does not match N");

  doc.alpha = rational_from_json(j.at("alpha"), "alpha");
  doc.beta = rational_from_json(j.at("beta"), "beta");
  doc.b = rational_array_from_json(j.at("b"), "b");
  doc.u = rational_array_from_json(j.at("u"), "u");
  doc.couplings = double_array_from_json(j.at("couplings"), "couplings");
  doc.fields = double_array_from_json(j.at("fields"), "fields");

  const std::size_t sites = static_cast<std::size_t>(doc.order) + 1;
  if (doc.b.size() != sites || doc.fields.size() != sites)
    throw FormatError("chain document: b and fields must have N+1 entries");
  if (doc.u.size() != sites - 1 || doc.couplings.size() != sites - 1)
    throw FormatError("chain document: u and couplings must have N entries");

  for (std::size_t l = 0; l < doc.couplings.size(); ++l) {
    const double u = to_double(doc.u[l]);
    if (std::abs(doc.couplings[l] * doc.couplings[l] - u) > 1e-12 * std::max(1.0, std::abs(u)))
      throw FormatError("chain document: couplings[" + std::to_string(l) +
                        "]^2 does not match u");
  }
  for (std::size_t l = 0; l < doc.fields.size(); ++l) {
    const double b = to_double(doc.b[l]);
    if (std::abs(doc.fields[l] - b) > 1e-12 * (1.0 + std::abs(b)))
      throw FormatError("chain document: fields[" + std::to_string(l) + "] does not match b");
  }

  // Documents are canonical: the stored rational data must be exactly the
  // closed forms generated by (N, alpha, beta).
  const auto rec = recurrence_coefficients(doc.parameters());
  for (std::size_t n = 0; n < doc.b.size(); ++n)
    if (doc.b[n] != rec.b[n])
      throw FormatError("chain document: b does not match the closed form for (N, alpha, beta)");
  for (std::size_t n = 0; n < doc.u.size(); ++n)
    if (doc.u[n] != rec.u[n + 1])
      throw FormatError("chain document: u does not match the closed form for (N, alpha, beta)");

  if (j.contains("certificate")) doc.certificate = certificate_from_json(j.at("certificate"));
  return doc;
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

ChainDocument make_chain_document(const ChainParameters& parameters,
                                  std::optional<PSTCertificate> certificate) {
  const auto rec = recurrence_coefficients(parameters);
  const auto chain = build_jacobi(rec);

  ChainDocument doc;
  doc.order = parameters.order;
  doc.alpha = parameters.alpha;
  doc.beta = parameters.beta;
  doc.b = rec.b;
  doc.u.assign(rec.u.begin() + 1, rec.u.end() - 1);
  doc.couplings = chain.couplings;
  doc.fields = chain.fields;
  doc.certificate = std::move(certificate);
  return doc;
}

std::string to_json(const PSTCertificate& certificate, const std::string& indent) {
  return certificate_json(certificate, indent);
}

std::string to_json(const ChainDocument& doc) {
  std::string out = "{\n";
  out += "  \"schemaVersion\": " + std::to_string(doc.schema_version) + ",\n";
  out += "  \"N\": " + std::to_string(doc.order) + ",\n";
  out += "  \"parity\": \"" + to_string(parity_of(doc.order)) + "\",\n";
  out += "  \"alpha\": " + rational_json(doc.alpha) + ",\n";
  out += "  \"beta\": " + rational_json(doc.beta) + ",\n";
  out += "  \"b\": " + array_json(doc.b, rational_json) + ",\n";
  out += "  \"u\": " + array_json(doc.u, rational_json) + ",\n";
  out += "  \"couplings\": " + array_json(doc.couplings, format_double) + ",\n";
  out += "  \"fields\": " + array_json(doc.fields, format_double);
  if (doc.certificate) out += ",\n  \"certificate\": " + certificate_json(*doc.certificate, "  ");
  out += "\n}\n";
  return out;
}

ChainDocument parse_chain_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("chain document is not valid JSON: ") + e.what());
  }
  try {
    return parse_chain_document_fields(j);
  } catch (const json::exception& e) {
    throw FormatError(std::string("chain document: ") + e.what());
  }
}

std::string to_csv(const FidelityTrace& trace) {
  std::string out = "t,reA,imA,absA\n";
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    const auto& a = trace.amplitudes[k];
    out += format_double(trace.times[k]) + "," + format_double(a.real()) + "," +
           format_double(a.imag()) + "," + format_double(std::abs(a)) + "\n";
  }
  return out;
}

}  // namespace pstchain
