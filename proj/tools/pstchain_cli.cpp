// SPDX-License-Identifier: MIT

// pstchain command line: design, certify, evolve, transform, reconstruct and
// weights subcommands over JSON chain documents and CSV traces.
//
// Exit codes: 0 success / certificate passed, 1 certificate (or round trip)
// failed, 2 usage or domain error, 3 I/O failure.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "pstchain/chain_io.hpp"
#include "pstchain/m1hahn.hpp"
#include "pstchain/orthopoly.hpp"
#include "pstchain/pst.hpp"
#include "pstchain/spinchain.hpp"

namespace {

using namespace pstchain;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open \"" + path + "\" for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed while reading \"" + path + "\"");
  return buffer.str();
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open \"" + path + "\" for writing");
  out << bytes;
  if (!out) throw IoError("failed while writing \"" + path + "\"");
}

/// Common source options: a chain document file, or explicit (N, alpha, beta).
struct ChainSource {
  std::string file;
  int order = 0;
  std::string alpha;
  std::string beta;
  CLI::Option* order_opt = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", file, "chain document (JSON)");
    order_opt = cmd->add_option("--N", order, "chain order N (number of sites minus one)");
    cmd->add_option("--alpha", alpha, "exact rational alpha, e.g. 2 or 7/3");
    cmd->add_option("--beta", beta, "exact rational beta, e.g. 2 or 7/3");
  }

  ChainDocument load() const {
    const bool has_order = order_opt != nullptr && order_opt->count() > 0;
    if (!file.empty()) {
      if (has_order || !alpha.empty() || !beta.empty())
        throw FormatError("give either a chain file or --N/--alpha/--beta, not both");
      return parse_chain_document(read_file(file));
    }
    if (!has_order || alpha.empty() || beta.empty())
      throw FormatError("no chain given: pass a chain file or all of --N, --alpha, --beta");
    return make_chain_document(
        ChainParameters(order, parse_rational(alpha), parse_rational(beta)));
  }
};

struct EigenFlags {
  double deflation_tolerance = EigenOptions{}.deflation_tolerance;
  int max_iterations = EigenOptions{}.max_iterations;

  void attach(CLI::App* cmd) {
    cmd->add_option("--eig-tol", deflation_tolerance,
                    "off-diagonal deflation tolerance, scaled by ||J||");
    cmd->add_option("--eig-max-iter", max_iterations, "QL iteration cap per eigenvalue");
  }

  CertifyOptions certify_options() const {
    CertifyOptions options;
    options.eigen = EigenOptions{deflation_tolerance, max_iterations};
    return options;
  }
};

int run_design(const std::string& parity_text, int order, long long m1, long long m2,
               const EigenFlags& eigen, const std::string& out) {
  DesignRequest request;
  request.parity = parity_text == "odd" ? Parity::Odd : Parity::Even;
  request.order = order;
  request.m1 = m1;
  request.m2 = m2;
  const auto result = design_chain(request, eigen.certify_options());
  write_output(out, to_json(make_chain_document(result.parameters, result.certificate)));
  return 0;
}

int parse_order(const std::string& text) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw FormatError("not an integer: \"" + text + "\"");
    return value;
  } catch (const std::logic_error&) {
    throw FormatError("not an integer: \"" + text + "\"");
  }
}

int run_certify(const ChainSource& source, const std::string& sweep, const EigenFlags& eigen,
                const std::string& out) {
  if (!sweep.empty()) {
    // Independent evaluations, merged in canonical (N, alpha, beta) order so
    // the output does not depend on evaluation order.
    std::vector<ChainParameters> entries;
    std::stringstream list(sweep);
    std::string item;
    while (std::getline(list, item, ',')) {
      const auto first = item.find(':');
      const auto second = item.find(':', first + 1);
      if (first == std::string::npos || second == std::string::npos)
        throw FormatError("sweep entries must look like N:alpha:beta, got \"" + item + "\"");
      entries.emplace_back(parse_order(item.substr(0, first)),
                           parse_rational(item.substr(first + 1, second - first - 1)),
                           parse_rational(item.substr(second + 1)));
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
      return std::tuple(a.order, a.alpha, a.beta) < std::tuple(b.order, b.alpha, b.beta);
    });

    bool all_passed = true;
    std::string body = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto cert = certify_pst(entries[i], eigen.certify_options());
      all_passed = all_passed && cert.passed;
      if (i) body += ",";
      body += "\n  {\"N\": " + std::to_string(entries[i].order) +
              ", \"alpha\": " + rational_to_json(entries[i].alpha) +
              ", \"beta\": " + rational_to_json(entries[i].beta) +
              ", \"certificate\": " + to_json(cert, "  ") + "}";
    }
    body += "\n]\n";
    write_output(out, body);
    return all_passed ? 0 : 1;
  }

  const auto doc = source.load();
  const auto cert = certify_pst(doc.parameters(), eigen.certify_options());
  write_output(out, to_json(make_chain_document(doc.parameters(), cert)));
  return cert.passed ? 0 : 1;
}

int run_evolve(const ChainSource& source, bool has_t_max, double t_max,
               const std::string& t_max_pi, int samples, const EigenFlags& eigen,
               const std::string& out) {
  if (has_t_max && !t_max_pi.empty())
    throw FormatError("give either --tmax or --tmax-pi, not both");
  if (!has_t_max && t_max_pi.empty())
    throw FormatError("no time horizon: pass --tmax or --tmax-pi");
  const double horizon =
      has_t_max ? t_max : std::numbers::pi * to_double(parse_rational(t_max_pi));

  const auto doc = source.load();
  EigenOptions options{eigen.deflation_tolerance, eigen.max_iterations};
  write_output(out, to_csv(fidelity_trace(doc.chain(), horizon, samples, options)));
  return 0;
}

int run_transform(const ChainSource& source, const std::string& remove, const EigenFlags& eigen,
                  const std::string& out) {
  if (remove != "top")
    throw FormatError(
        "only --remove top maps onto the even dual -1 Hahn family; removing the bottom level "
        "yields its reflection, which has no closed-form document");
  const auto doc = source.load();
  if (parity_of(doc.order) != Parity::Odd || doc.alpha != doc.beta)
    throw DomainError("transform requires an odd-order chain with alpha = beta");

  const auto link = verify_christoffel_link(doc.order, doc.alpha);
  if (link.max_residual != 0)
    throw Error("internal error: Christoffel pipeline disagrees with the closed forms");

  const auto cert = certify_pst(link.even_partner, eigen.certify_options());
  std::cerr << "removed level " << format_rational(bi_grid(doc.parameters()).ascending().back())
            << ", even partner N = " << link.even_partner.order << ", alpha = beta = "
            << format_rational(link.even_partner.alpha) << ", diagonal shift "
            << format_rational(link.diagonal_shift) << "\n";
  write_output(out, to_json(make_chain_document(link.even_partner, cert)));
  return 0;
}

int run_reconstruct(const ChainSource& source, double tolerance, const EigenFlags& eigen,
                    const std::string& out) {
  const auto doc = source.load();
  const auto rec = to_real(recurrence_coefficients(doc.parameters()));
  EigenOptions options{eigen.deflation_tolerance, eigen.max_iterations};
  const auto eigensys = eigensystem(doc.chain(), options);
  const auto rebuilt = stieltjes_reconstruct(eigensys.eigenvalues,
                                             spectral_weights(eigensys.eigenvalues));

  double max_b = 0.0;
  for (double b : rec.b) max_b = std::max(max_b, std::abs(b));
  double max_u = 0.0;
  for (double u : rec.u) max_u = std::max(max_u, std::abs(u));
  double diff_b = 0.0;
  for (std::size_t n = 0; n < rec.b.size(); ++n)
    diff_b = std::max(diff_b, std::abs(rebuilt.b[n] - rec.b[n]) / (1.0 + max_b));
  double diff_u = 0.0;
  for (std::size_t n = 1; n + 1 < rec.u.size(); ++n)
    diff_u = std::max(diff_u, std::abs(rebuilt.u[n] - rec.u[n]) / max_u);
  const bool pass = diff_b <= tolerance && diff_u <= tolerance;

  std::string body = "{\n";
  body += "  \"schemaVersion\": 1,\n";
  body += "  \"N\": " + std::to_string(doc.order) + ",\n";
  body += "  \"alpha\": " + rational_to_json(doc.alpha) + ",\n";
  body += "  \"beta\": " + rational_to_json(doc.beta) + ",\n";
  body += "  \"maxRelDiffB\": " + format_double(diff_b) + ",\n";
  body += "  \"maxRelDiffU\": " + format_double(diff_u) + ",\n";
  body += "  \"tolerance\": " + format_double(tolerance) + ",\n";
  body += std::string("  \"pass\": ") + (pass ? "true" : "false") + "\n";
  body += "}\n";
  write_output(out, body);
  return pass ? 0 : 1;
}

int run_weights(const ChainSource& source, const std::string& out) {
  const auto doc = source.load();
  const auto p = doc.parameters();
  const auto grid = bi_grid(p);
  const auto table = closed_form_weights(p);

  std::string body = "{\n";
  body += "  \"schemaVersion\": 1,\n";
  body += "  \"N\": " + std::to_string(p.order) + ",\n";
  body += "  \"alpha\": " + rational_to_json(p.alpha) + ",\n";
  body += "  \"beta\": " + rational_to_json(p.beta) + ",\n";
  body += "  \"kappa0\": " + rational_to_json(table.kappa0) + ",\n";

  body += "  \"weights\": [";
  for (std::size_t s = 0; s < table.w.size(); ++s)
    body += (s ? ", " : "") + rational_to_json(table.w[s]);
  body += "],\n";

  body += "  \"ascendingOrder\": [";
  for (std::size_t k = 0; k < grid.sort_permutation.size(); ++k)
    body += (k ? ", " : "") + std::to_string(grid.sort_permutation[k]);
  body += "],\n";

  body += "  \"normalizedAscending\": [";
  for (std::size_t k = 0; k < grid.sort_permutation.size(); ++k) {
    const Rational normalized = table.w[grid.sort_permutation[k]] / table.kappa0;
    body += (k ? ", " : "") + rational_to_json(normalized);
  }
  body += "]\n}\n";
  write_output(out, body);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "XX spin chains with perfect state transfer built from dual -1 Hahn polynomial data"};
  app.require_subcommand(1);

  // design
  auto* design = app.add_subcommand("design", "Construct a certified PST chain from (parity, N, M1, M2)");
  std::string parity;
  int design_order = 0;
  long long m1 = 0, m2 = 0;
  std::string design_out = "-";
  EigenFlags design_eigen;
  design->add_option("--parity", parity, "chain parity (odd|even)")
      ->required()
      ->check(CLI::IsMember({"odd", "even"}));
  design->add_option("--N", design_order, "chain order N")->required();
  design->add_option("--M1", m1, "first spacing integer")->required();
  design->add_option("--M2", m2, "second spacing integer")->required();
  design->add_option("--out", design_out, "output path (default stdout)");
  design_eigen.attach(design);

  // certify
  auto* certify = app.add_subcommand("certify", "Certify the PST conditions exactly");
  ChainSource certify_source;
  std::string sweep;
  std::string certify_out = "-";
  EigenFlags certify_eigen;
  certify_source.attach(certify);
  certify->add_option("--sweep", sweep,
                      "comma-separated N:alpha:beta triples, certified independently");
  certify->add_option("--out", certify_out, "output path (default stdout)");
  certify_eigen.attach(certify);

  // evolve
  auto* evolve = app.add_subcommand("evolve", "Sample the transfer amplitude on a time grid (CSV)");
  ChainSource evolve_source;
  double t_max = 0.0;
  std::string t_max_pi;
  int samples = 0;
  std::string evolve_out = "-";
  EigenFlags evolve_eigen;
  evolve_source.attach(evolve);
  evolve->add_option("--tmax", t_max, "time horizon");
  evolve->add_option("--tmax-pi", t_max_pi, "time horizon as a rational multiple of pi");
  evolve->add_option("--samples", samples, "number of samples (>= 2)")->required();
  evolve->add_option("--out", evolve_out, "output path (default stdout)");
  evolve_eigen.attach(evolve);

  // transform
  auto* transform = app.add_subcommand(
      "transform", "Christoffel-remove the top level of an odd chain, emitting its even partner");
  ChainSource transform_source;
  std::string remove = "top";
  std::string transform_out = "-";
  EigenFlags transform_eigen;
  transform_source.attach(transform);
  transform->add_option("--remove", remove, "which extreme level to remove (top)")
      ->check(CLI::IsMember({"top", "bottom"}));
  transform->add_option("--out", transform_out, "output path (default stdout)");
  transform_eigen.attach(transform);

  // reconstruct
  auto* reconstruct = app.add_subcommand(
      "reconstruct", "Rebuild the recurrence from spectrum + weights and compare (round trip)");
  ChainSource reconstruct_source;
  double tolerance = 1e-8;
  std::string reconstruct_out = "-";
  EigenFlags reconstruct_eigen;
  reconstruct_source.attach(reconstruct);
  reconstruct->add_option("--tol", tolerance, "relative agreement tolerance (default 1e-8)");
  reconstruct->add_option("--out", reconstruct_out, "output path (default stdout)");
  reconstruct_eigen.attach(reconstruct);

  // weights
  auto* weights = app.add_subcommand("weights", "Print the closed-form orthogonality weights");
  ChainSource weights_source;
  std::string weights_out = "-";
  weights_source.attach(weights);
  weights->add_option("--out", weights_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(design))
      return run_design(parity, design_order, m1, m2, design_eigen, design_out);
    if (app.got_subcommand(certify))
      return run_certify(certify_source, sweep, certify_eigen, certify_out);
    if (app.got_subcommand(evolve))
      return run_evolve(evolve_source, evolve->count("--tmax") > 0, t_max, t_max_pi, samples,
                        evolve_eigen, evolve_out);
    if (app.got_subcommand(transform))
      return run_transform(transform_source, remove, transform_eigen, transform_out);
    if (app.got_subcommand(reconstruct))
      return run_reconstruct(reconstruct_source, tolerance, reconstruct_eigen, reconstruct_out);
    if (app.got_subcommand(weights)) return run_weights(weights_source, weights_out);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
