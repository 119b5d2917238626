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

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace gapdecomp::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,  // a requested check did not pass
  kExitParse = 2,
  kExitPrecondition = 3,
  kExitInternal = 4,
};

// Result of one command. `payload` is the stable, key-sorted JSON report;
// `text` is the human-readable rendering of the same content.
struct Report {
  nlohmann::json payload;
  std::string text;
  int exit_code = kExitOk;

  // Pretty JSON; with `meta`, wrapped as {"meta": ..., "report": payload}.
  std::string json(bool meta) const;
};

Report cmd_analyze(const std::filesystem::path& table);

// mode: "taylor" (needs k), "odd", "even" or "fitilde". The phi file of the
// Boolean modes is written to `out` when given.
Report cmd_decompose(const std::filesystem::path& table, const std::string& mode,
                     std::optional<std::size_t> k,
                     const std::optional<std::filesystem::path>& out);

// target: "boolean" or "z3".
Report cmd_classify(const std::filesystem::path& table, const std::string& target);

Report cmd_identities(long max_m);

struct WitnessOptions {
  std::string kind;  // tightness | hamming | large-alphabet
  std::size_t n = 0;
  std::string group = "Z3";
  std::string b = "1";
  std::uint32_t ell = 2;    // tightness: A = {0..ell}
  unsigned e = 1;           // tightness: exponent 2^e
  std::uint32_t domain = 0; // hamming / large-alphabet alphabet size
};

// Writes the witness table to `out` and the sidecar to `out` + ".witness".
Report cmd_witness(const WitnessOptions& options,
                   const std::optional<std::filesystem::path>& out);

struct BuildOptions {
  std::string kind;  // z3 | parity | theta
  std::size_t n = 0;
  std::string params;  // z3: "a,b,c,d"
  std::uint32_t domain = 2;
  std::string group = "Z2";
  std::optional<std::filesystem::path> phi;  // theta
};

// Writes a generated table to `out` (the report carries it otherwise).
Report cmd_build(const BuildOptions& options,
                 const std::optional<std::filesystem::path>& out);

// SHA-256 of a file's bytes, lowercase hex.
std::string file_digest(const std::filesystem::path& path);

}  // namespace gapdecomp::cli
