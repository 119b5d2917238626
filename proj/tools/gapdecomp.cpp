// Copyright 2026 The gapdecomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gapdecomp/cli.hpp"

namespace cli = gapdecomp::cli;

int main(int argc, char** argv) {
  CLI::App app{"gapdecomp: arity gap analysis and decompositions of finite functions"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  bool meta = false;
  std::optional<std::string> out;
  app.add_flag("--json", as_json, "Print the report as JSON");
  app.add_flag("--meta", meta, "Wrap JSON output with a metadata envelope");
  app.add_option("--out", out, "Output file for tables or phi maps");

  std::string table;
  auto* analyze = app.add_subcommand("analyze", "Essential variables, gap, symmetry, oddsupp");
  analyze->add_option("table", table, "Table file")->required();

  std::string mode;
  std::optional<std::size_t> k;
  auto* decompose = app.add_subcommand("decompose", "Taylor or Boolean-group decompositions");
  decompose->add_option("table", table, "Table file")->required();
  decompose->add_option("--mode", mode, "taylor | odd | even | fitilde")->required();
  decompose->add_option("--k", k, "Target arity for taylor mode");

  std::string target;
  auto* classify = app.add_subcommand("classify", "Classify gap-2 functions");
  classify->add_option("table", table, "Table file")->required();
  classify->add_option("--target", target, "boolean | z3")->required();

  long max_m = 20;
  auto* identities = app.add_subcommand("identities", "Check the binomial identities");
  identities->add_option("--max-m", max_m, "Largest m to check");

  cli::WitnessOptions wo;
  auto* witness = app.add_subcommand("witness", "Build and verify a lower-bound witness");
  witness->add_option("--kind", wo.kind, "tightness | hamming | large-alphabet")->required();
  witness->add_option("--n", wo.n, "Arity");
  witness->add_option("--group", wo.group, "Codomain group, e.g. Z3 or Z2xZ4");
  witness->add_option("--b", wo.b, "Group element, comma separated residues");
  witness->add_option("--ell", wo.ell, "tightness: alphabet {0..ell}");
  witness->add_option("--e", wo.e, "tightness: exponent");
  witness->add_option("--domain", wo.domain, "Alphabet size");

  cli::BuildOptions bo;
  std::optional<std::string> phi_path;
  auto* build = app.add_subcommand("build", "Write a table from a parametric family");
  build->add_option("--kind", bo.kind, "z3 | parity | theta")->required();
  build->add_option("--n", bo.n, "Arity")->required();
  build->add_option("--params", bo.params, "z3: a,b,c,d");
  build->add_option("--group", bo.group, "parity: codomain group");
  build->add_option("--phi", phi_path, "theta: phi file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitParse;
  }

  std::optional<std::filesystem::path> out_path;
  if (out) out_path = *out;

  cli::Report report;
  if (*analyze) {
    report = cli::cmd_analyze(table);
  } else if (*decompose) {
    report = cli::cmd_decompose(table, mode, k, out_path);
  } else if (*classify) {
    report = cli::cmd_classify(table, target);
  } else if (*identities) {
    report = cli::cmd_identities(max_m);
  } else if (*witness) {
    report = cli::cmd_witness(wo, out_path);
  } else {
    if (phi_path) bo.phi = *phi_path;
    report = cli::cmd_build(bo, out_path);
  }

  if (as_json || meta) {
    std::cout << report.json(meta);
  } else {
    (report.exit_code == cli::kExitOk ? std::cout : std::cerr) << report.text;
  }
  return report.exit_code;
}
