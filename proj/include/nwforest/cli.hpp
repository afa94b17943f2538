#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage or parse error,
// 2 infeasible input or failed verification.

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "nwforest/decompose.hpp"
#include "nwforest/graph.hpp"
#include "nwforest/io.hpp"
#include "nwforest/oracle.hpp"
#include "nwforest/preassign.hpp"

namespace nwf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("cannot write '" + path + "'");
  os << text;
}

// Writes to `path` when given, else to `out`.
inline void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (path) write_file(*path, text);
  else out << text;
}

/// Parses "id:slot,id:slot,...". Slots must be exactly 1..s; returns the
/// edge ids ordered by slot.
inline std::vector<EdgeId> parse_pins(const std::string& text) {
  std::vector<std::pair<std::size_t, EdgeId>> by_slot;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("preassign entry '" + item + "' is not id:slot");
    try {
      std::size_t used = 0;
      const EdgeId id = std::stoull(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(item);
      const std::string slot_text = item.substr(colon + 1);
      const std::size_t slot = std::stoull(slot_text, &used);
      if (used != slot_text.size()) throw std::invalid_argument(item);
      by_slot.emplace_back(slot, id);
    } catch (const std::logic_error&) {
      throw UsageError("preassign entry '" + item + "' is not id:slot");
    }
  }
  std::sort(by_slot.begin(), by_slot.end());
  std::vector<EdgeId> pins;
  for (std::size_t k = 0; k < by_slot.size(); ++k) {
    if (by_slot[k].first != k + 1) throw UsageError("preassign slots must be exactly 1..s");
    pins.push_back(by_slot[k].second);
  }
  return pins;
}

/// Runs one subcommand; `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition multigraph edges into forests, or certify that it cannot be done."};
  app.name("nwforest");
  app.require_subcommand(1);

  std::size_t forests = 0;
  std::string input;
  std::optional<std::string> out_path;
  std::optional<std::string> dot_path;
  std::optional<std::string> cert_out;
  std::optional<std::string> pin_spec;
  std::optional<std::string> assignment_path;
  std::optional<std::string> certificate_path;
  std::size_t max_n = 20;

  auto* decompose_cmd = app.add_subcommand("decompose", "Split edges into R forests or print a violating set");
  decompose_cmd->add_option("--forests", forests, "Number of forests R")->required();
  decompose_cmd->add_option("--preassign", pin_spec, "Pins 'id:slot,...' with slots 1..s");
  decompose_cmd->add_option("--out", out_path, "Assignment or certificate file (default stdout)");
  decompose_cmd->add_option("--dot", dot_path, "Also write a Graphviz rendering");
  decompose_cmd->add_option("input", input, "Edge list file")->required();

  auto* arboricity_cmd = app.add_subcommand("arboricity", "Compute the minimum number of forests");
  arboricity_cmd->add_option("--out", out_path, "Write the optimal assignment");
  arboricity_cmd->add_option("--cert-out", cert_out, "Write the certificate for one forest fewer");
  arboricity_cmd->add_option("input", input, "Edge list file")->required();

  auto* check_cmd = app.add_subcommand("check", "Brute-force the sparsity condition over all vertex subsets");
  check_cmd->add_option("--forests", forests, "Number of forests R")->required();
  check_cmd->add_option("--max-n", max_n, "Largest vertex count to enumerate")->capture_default_str();
  check_cmd->add_option("input", input, "Edge list file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check an assignment or a certificate file");
  verify_cmd->add_option("--forests", forests, "Number of forests R")->required();
  auto* assignment_opt = verify_cmd->add_option("--assignment", assignment_path, "Assignment file");
  auto* certificate_opt = verify_cmd->add_option("--certificate", certificate_path, "Certificate file");
  assignment_opt->excludes(certificate_opt);
  verify_cmd->add_option("input", input, "Edge list file")->required();

  auto* dot_cmd = app.add_subcommand("export-dot", "Render an assignment as Graphviz DOT");
  dot_cmd->add_option("--assignment", assignment_path, "Assignment file")->required();
  dot_cmd->add_option("--out", out_path, "DOT output file (default stdout)");
  dot_cmd->add_option("input", input, "Edge list file")->required();

  std::vector<const char*> argv{"nwforest"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Graph g = parse_graph(read_file(input));

    if (*decompose_cmd) {
      std::vector<EdgeId> pins = pin_spec ? parse_pins(*pin_spec) : std::vector<EdgeId>{};
      if (pins.size() > forests) throw UsageError("more preassigned edges than forests");
      for (EdgeId e : pins) {
        if (e >= g.num_edges()) throw UsageError("preassigned edge " + std::to_string(e) + " does not exist");
      }
      DecomposeResult result = decompose(g, forests);
      if (auto* cert = std::get_if<Certificate>(&result)) {
        emit(out_path, write_certificate(g, forests, *cert), out);
        return kExitInfeasible;
      }
      Decomposition d = std::move(std::get<Decomposition>(result));
      if (!pins.empty()) d = preassign(g, std::move(d), pins);
      emit(out_path, write_assignment(d), out);
      if (dot_path) write_file(*dot_path, export_dot(g, d));
      return kExitOk;
    }

    if (*arboricity_cmd) {
      ArboricityResult result;
      try {
        result = arboricity(g);
      } catch (const UnboundedArboricity& e) {
        err << "arboricity unbounded: " << e.what() << '\n';
        return kExitInfeasible;
      }
      out << "arboricity " << result.forests << '\n';
      if (out_path) write_file(*out_path, write_assignment(result.decomposition));
      if (cert_out && result.lower_certificate) {
        write_file(*cert_out, write_certificate(g, result.forests - 1, *result.lower_certificate));
      }
      return kExitOk;
    }

    if (*check_cmd) {
      const ConditionReport report = check_condition(g, forests, max_n);
      if (report.satisfied) {
        out << "satisfied r=" << forests << '\n';
        return kExitOk;
      }
      out << write_certificate(g, forests, Certificate{report.violator});
      out << "excess=" << report.excess << '\n';
      return kExitInfeasible;
    }

    if (*verify_cmd) {
      if (certificate_path) {
        const CertificateRecord rec = parse_certificate(read_file(*certificate_path));
        const bool valid = rec.forests == forests && verify_certificate(g, forests, rec.vertices) &&
                           rec.edge_count == restriction_edge_count(g, rec.vertices) &&
                           rec.bound == forests * (rec.vertices.size() - 1);
        out << (valid ? "valid certificate\n" : "invalid certificate\n");
        return valid ? kExitOk : kExitInfeasible;
      }
      if (!assignment_path) throw UsageError("verify needs --assignment or --certificate");
      const Decomposition d = parse_assignment(read_file(*assignment_path));
      if (d.forests() != forests) {
        out << "invalid: assignment declares r=" << d.forests() << ", expected " << forests << '\n';
        return kExitInfeasible;
      }
      if (!verify_decomposition(g, d)) {
        out << "invalid\n";
        return kExitInfeasible;
      }
      out << "valid\n";
      return kExitOk;
    }

    if (*dot_cmd) {
      const Decomposition d = parse_assignment(read_file(*assignment_path));
      if (d.num_edges() != g.num_edges()) throw UsageError("assignment does not match the graph's edge count");
      emit(out_path, export_dot(g, d), out);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nwf::cli
