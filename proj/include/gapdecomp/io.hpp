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

#include <filesystem>
#include <string>
#include <string_view>

#include "gapdecomp/funcspace.hpp"
#include "gapdecomp/oddsupp.hpp"
#include "gapdecomp/witnesses.hpp"

namespace gapdecomp {

// Function-table text format:
//
//   domain=<a_size>
//   arity=<n>
//   group=<group>
//   <a_size^n whitespace-separated element texts in index order>
//
// Lines starting with '#' are comments. Errors carry 1-based line numbers.
FnTable parse_table(std::string_view text);
std::string format_table(const FnTable& f);
FnTable read_table_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Phi text format:
//
//   phi domain=<pnprime:n|full> a=<a_size> group=<group>
//   {i,j,...} -> <element>
//
// one line per key in (size, mask) order, "{}" for the empty set.
PhiMap parse_phi(std::string_view text);
std::string format_phi(const PhiMap& phi);

// key=value block stating (I, a, expected, claimed_k) of a witness.
std::string format_witness_sidecar(const WitnessBundle& w);

// "1,0,2" <-> tuple.
std::string format_tuple(std::span<const Letter> x);

}  // namespace gapdecomp
