#ifndef ORBITCLASS_CLI_HPP
#define ORBITCLASS_CLI_HPP

// Command routing for the `orbitclass` tool. Kept in a header so tests can
// drive it with in-memory streams.
//
//   classify --group SL:5 --prime 5 [--format text|json]
//   table [--format text|csv|json]           (ORBITCLASS_SAMPLE_RANGE, default 2..9)
//   verify-appendix [--type E8] [--prime 5] [--format text|json]
//   snf --matrix "[[1,1,0],[1,0,1],[0,1,1]]" [--format text|json]
//   roots --type E8 [--basis] [--format text|json]
//
// Exit status: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbitclass/chevalley.hpp"
#include "orbitclass/classifier.hpp"
#include "orbitclass/error.hpp"
#include "orbitclass/intlinalg.hpp"
#include "orbitclass/root_datum.hpp"
#include "orbitclass/root_system.hpp"
#include "orbitclass/serialize.hpp"
#include "orbitclass/verifier.hpp"

namespace orbitclass {

enum class ExitCode : int { Ok = 0, VerificationFailed = 1, Usage = 2 };

struct CliConfig {
  std::string command;
  std::string group_spec;
  std::string type;
  std::string matrix;
  std::optional<std::int64_t> prime;
  std::string format = "text";
  std::string output;
  bool basis = false;
};

namespace detail {

inline SampleRange sample_range_from_env() {
  const char* env = std::getenv("ORBITCLASS_SAMPLE_RANGE");
  if (env == nullptr || *env == '\0') return {};
  return parse_sample_range(env);
}

inline void require_format(const CliConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw InvalidArgument("format '" + cfg.format + "' is not supported by " + cfg.command);
}

inline int run_classify(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  if (cfg.group_spec.empty()) throw InvalidArgument("classify needs --group");
  if (!cfg.prime) throw InvalidArgument("classify needs --prime");
  const ClassificationReport r = classify(parse_group(cfg.group_spec), *cfg.prime);
  if (cfg.format == "json") {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << to_text(r);
  }
  return 0;
}

inline int run_table(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "csv", "json"});
  const auto rows = intro_table(sample_range_from_env());
  if (cfg.format == "csv") {
    out << intro_table_csv(rows);
  } else if (cfg.format == "json") {
    out << to_json(rows).dump(2) << '\n';
  } else {
    out << intro_table_text(rows);
    out << "note: SO_{2n} is sampled from n = 4; SO_4 and SO_6 have root systems of type A.\n";
  }
  return 0;
}

inline int run_verify_appendix(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  std::vector<SweepCell> cells;
  if (!cfg.type.empty()) {
    const auto types = parse_root_system_types(cfg.type);
    if (types.size() != 1) throw InvalidArgument("--type must name a simple type");
    if (cfg.prime) {
      require_prime(*cfg.prime);
      cells.push_back({types.front(), *cfg.prime});
    } else {
      for (int b : bad_primes(types.front())) cells.push_back({types.front(), b});
      if (cells.empty()) cells.push_back({types.front(), 2});
    }
  } else {
    for (const auto& c : appendix_sweep_cells())
      if (!cfg.prime || c.p == *cfg.prime) cells.push_back(c);
    if (cfg.prime) require_prime(*cfg.prime);
  }
  const auto reports = appendix_sweep(cells);
  if (cfg.format == "json") {
    out << to_json(reports).dump(2) << '\n';
  } else {
    out << appendix_text(reports);
  }
  for (const auto& r : reports)
    if (r.applicable() && !r.passed()) return 1;
  return 0;
}

inline int run_snf(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  if (cfg.matrix.empty()) throw InvalidArgument("snf needs --matrix");
  const IntMatrix m = parse_matrix_literal(cfg.matrix);
  const auto d = invariant_factors(m);
  if (cfg.format == "json") {
    Json j;
    j["matrix"] = m.to_string();
    j["d"] = integers_to_json(d);
    j["torsion_cokernel_order"] = integer_to_json(torsion_cokernel_order(m));
    out << j.dump(2) << '\n';
  } else {
    out << "d = [";
    for (std::size_t i = 0; i < d.size(); ++i) out << (i ? ", " : "") << d[i];
    out << "]\n";
  }
  return 0;
}

inline int run_roots(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"text", "json"});
  if (cfg.type.empty()) throw InvalidArgument("roots needs --type");
  const auto types = parse_root_system_types(cfg.type);
  const RootSystem rs(types);
  const auto layers = layers_by_height(rs);
  std::optional<GradedNilAlgebra> alg;
  if (cfg.basis) {
    if (types.size() != 1) throw InvalidArgument("--basis needs a simple type");
    alg.emplace(graded_algebra(types.front()));
  }

  if (cfg.format == "json") {
    Json j;
    j["type"] = rs.label();
    j["rank"] = rs.rank();
    j["positive_roots"] = rs.positive_roots().size();
    j["cartan_determinant"] = integer_to_json(cartan_determinant(rs));
    j["layers"] = Json::array();
    for (const auto& [h, roots] : layers) {
      Json l;
      l["height"] = h;
      l["dim"] = roots.size();
      if (alg) {
        l["basis"] = Json::array();
        for (const auto& v : alg->layer(h).basis) l["basis"].push_back(alg->format(v));
      }
      j["layers"].push_back(std::move(l));
    }
    out << j.dump(2) << '\n';
    return 0;
  }

  out << rs.label() << ": rank " << rs.rank() << ", " << rs.positive_roots().size()
      << " positive roots, det(Cartan) = " << cartan_determinant(rs) << '\n';
  out << "layer dims:";
  for (const auto& [h, roots] : layers) out << ' ' << roots.size();
  out << '\n';
  if (alg) {
    for (const auto& layer : alg->layers()) {
      out << "n_" << layer.height << ":\n";
      for (const auto& v : layer.basis) out << "  " << alg->format(v) << '\n';
    }
  }
  return 0;
}

}  // namespace detail

/// Parses argv and runs one command. Output goes to `out` (or --output),
/// diagnostics to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Classify split reductive groups over local fields and verify the "
               "bracket-matrix computations behind the classification.",
               "orbitclass"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub, const std::string& choices) {
    sub->add_option("--format", cfg.format, "Output format: " + choices);
    sub->add_option("--output", cfg.output, "Write output to this file instead of stdout");
  };

  auto* classify_cmd = app.add_subcommand("classify", "Verdicts on statements (1)-(8)");
  classify_cmd->add_option("--group", cfg.group_spec, "Group spec, e.g. SL:5 or SL:2xPGL:3xT:1")
      ->required();
  classify_cmd->add_option("--prime", cfg.prime, "Residue characteristic p")->required();
  add_format(classify_cmd, "text|json");

  auto* table_cmd = app.add_subcommand("table", "Reproduce the nine-row classification table");
  add_format(table_cmd, "text|csv|json");

  auto* verify_cmd =
      app.add_subcommand("verify-appendix", "Check the ad(X) cokernel claims at bad primes");
  verify_cmd->add_option("--type", cfg.type, "Simple type, e.g. E8");
  verify_cmd->add_option("--prime", cfg.prime, "Restrict to this prime");
  add_format(verify_cmd, "text|json");

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf_cmd->add_option("--matrix", cfg.matrix, "Matrix literal, e.g. \"[[1,1,0],[1,0,1]]\"")
      ->required();
  add_format(snf_cmd, "text|json");

  auto* roots_cmd = app.add_subcommand("roots", "Positive roots by height");
  roots_cmd->add_option("--type", cfg.type, "Type string, e.g. E8 or A3xB2")->required();
  roots_cmd->add_flag("--basis", cfg.basis, "Print the graded basis of n (simple types)");
  add_format(roots_cmd, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "orbitclass: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Usage);
  }

  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();

  std::ostringstream buffer;
  int code = 0;
  try {
    if (cfg.prime && !is_prime(*cfg.prime)) throw InvalidArgument(std::to_string(*cfg.prime) + " is not a prime");
    if (cfg.command == "classify") code = detail::run_classify(cfg, buffer);
    else if (cfg.command == "table") code = detail::run_table(cfg, buffer);
    else if (cfg.command == "verify-appendix") code = detail::run_verify_appendix(cfg, buffer);
    else if (cfg.command == "snf") code = detail::run_snf(cfg, buffer);
    else if (cfg.command == "roots") code = detail::run_roots(cfg, buffer);
  } catch (const ParseError& e) {
    err << "orbitclass " << cfg.command << ": parse error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Usage);
  } catch (const InvalidArgument& e) {
    err << "orbitclass " << cfg.command << ": " << e.what() << '\n';
    return static_cast<int>(ExitCode::Usage);
  } catch (const VerificationError& e) {
    err << "orbitclass " << cfg.command << ": internal check failed: " << e.what() << '\n';
    return static_cast<int>(ExitCode::VerificationFailed);
  }

  if (!cfg.output.empty()) {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "orbitclass: cannot open " << cfg.output << " for writing\n";
      return static_cast<int>(ExitCode::Usage);
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace orbitclass

#endif  // ORBITCLASS_CLI_HPP
