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

#include "gapdecomp/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "gapdecomp/errors.hpp"

namespace gapdecomp {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// Non-empty, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find('\n', pos);
    if (next == std::string_view::npos) next = text.size();
    ++number;
    std::string line = trim(text.substr(pos, next - pos));
    if (!line.empty() && line.front() != '#') out.push_back({number, line});
    pos = next + 1;
  }
  return out;
}

std::uint64_t parse_count(std::string_view value, const char* key,
                          std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
    throw ParseError(std::string("bad ") + key + " value '" +
                         std::string(value) + "'",
                     line);
  }
  return v;
}

std::string header_value(const Line& line, std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (line.text.rfind(prefix, 0) != 0) {
    throw ParseError("expected '" + prefix + "...'", line.number);
  }
  return trim(std::string_view(line.text).substr(prefix.size()));
}

AbelianGroup parse_group_at(std::string_view spec, std::size_t line) {
  try {
    return AbelianGroup::parse(spec);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

GroupElement parse_element_at(const AbelianGroup& group, std::string_view text,
                              std::size_t line) {
  try {
    return group.parse_element(text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

FnTable parse_table(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() < 3) {
    throw ParseError("table needs domain=, arity= and group= header lines",
                     lines.empty() ? 0 : lines.back().number);
  }
  const auto a_size = parse_count(header_value(lines[0], "domain"), "domain",
                                  lines[0].number);
  const auto arity = parse_count(header_value(lines[1], "arity"), "arity",
                                 lines[1].number);
  const AbelianGroup group =
      parse_group_at(header_value(lines[2], "group"), lines[2].number);
  if (a_size < 2 || a_size > 0xffff) {
    throw ParseError("domain must be at least 2", lines[0].number);
  }
  std::size_t expected = 0;
  try {
    expected = FnTable::table_size(static_cast<std::uint32_t>(a_size), arity);
  } catch (const Error& e) {
    throw ParseError(e.what(), lines[1].number);
  }

  std::vector<GroupElement> values;
  values.reserve(expected);
  for (std::size_t l = 3; l < lines.size(); ++l) {
    std::istringstream tokens(lines[l].text);
    std::string token;
    while (tokens >> token) {
      if (values.size() == expected) {
        throw ParseError("more than " + std::to_string(expected) + " values",
                         lines[l].number);
      }
      values.push_back(parse_element_at(group, token, lines[l].number));
    }
  }
  if (values.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " values, found " +
                         std::to_string(values.size()),
                     lines.back().number);
  }
  return FnTable(static_cast<std::uint32_t>(a_size), arity, group,
                 std::move(values));
}

std::string format_table(const FnTable& f) {
  std::ostringstream os;
  os << "domain=" << f.a_size() << "\n"
     << "arity=" << f.arity() << "\n"
     << "group=" << f.group().to_string() << "\n";
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    os << f.group().format(f.at(idx));
    const bool row_end = f.arity() == 0 || (idx + 1) % f.a_size() == 0;
    os << (row_end ? '\n' : ' ');
  }
  return os.str();
}

FnTable read_table_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_table(buffer.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

PhiMap parse_phi(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty phi file", 0);

  std::istringstream header(lines[0].text);
  std::string word;
  header >> word;
  if (word != "phi") throw ParseError("expected 'phi' header", lines[0].number);
  std::string domain, a_text, group_text;
  while (header >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) {
      throw ParseError("bad header field '" + word + "'", lines[0].number);
    }
    const auto key = word.substr(0, eq);
    const auto value = word.substr(eq + 1);
    if (key == "domain") {
      domain = value;
    } else if (key == "a") {
      a_text = value;
    } else if (key == "group") {
      group_text = value;
    } else {
      throw ParseError("unknown header field '" + key + "'", lines[0].number);
    }
  }
  if (domain.empty() || a_text.empty() || group_text.empty()) {
    throw ParseError("phi header needs domain=, a= and group=", lines[0].number);
  }
  const auto a_size = parse_count(a_text, "a", lines[0].number);
  const AbelianGroup group = parse_group_at(group_text, lines[0].number);
  if (a_size < 2 || a_size > kMaxPhiAlphabet) {
    throw ParseError("unsupported alphabet size", lines[0].number);
  }

  PhiMap phi = [&] {
    if (domain == "full") {
      return PhiMap::full_paired(static_cast<std::uint32_t>(a_size), group);
    }
    if (domain.rfind("pnprime:", 0) == 0) {
      const auto n = parse_count(std::string_view(domain).substr(8), "n",
                                 lines[0].number);
      if (n == 0) throw ParseError("n must be positive", lines[0].number);
      return PhiMap::pn_prime(static_cast<std::uint32_t>(a_size), n, group);
    }
    throw ParseError("unknown phi domain '" + domain + "'", lines[0].number);
  }();

  std::vector<bool> given(std::size_t{1} << a_size, false);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto& line = lines[l];
    const auto arrow = line.text.find("->");
    if (arrow == std::string::npos) {
      throw ParseError("expected '{...} -> <element>'", line.number);
    }
    const std::string key = trim(std::string_view(line.text).substr(0, arrow));
    const std::string value = trim(std::string_view(line.text).substr(arrow + 2));
    if (key.size() < 2 || key.front() != '{' || key.back() != '}') {
      throw ParseError("bad subset '" + key + "'", line.number);
    }
    std::uint32_t mask = 0;
    const std::string_view inner = std::string_view(key).substr(1, key.size() - 2);
    std::size_t pos = 0;
    while (!inner.empty() && pos <= inner.size()) {
      auto next = inner.find(',', pos);
      if (next == std::string_view::npos) next = inner.size();
      const auto letter = parse_count(trim(inner.substr(pos, next - pos)),
                                      "letter", line.number);
      if (letter >= a_size) {
        throw ParseError("letter " + std::to_string(letter) +
                             " outside the alphabet",
                         line.number);
      }
      mask |= 1u << letter;
      pos = next + 1;
    }
    const SubsetA s(mask);
    if (!phi.has(s)) {
      throw ParseError("subset " + s.to_string() + " is not a key of phi",
                       line.number);
    }
    if (given[mask]) {
      throw ParseError("duplicate key " + s.to_string(), line.number);
    }
    const GroupElement v = parse_element_at(group, value, line.number);
    if (phi.domain() == PhiDomain::kFullPaired && given[mask ^ 1u] &&
        phi.at(SubsetA(mask ^ 1u)) != v) {
      throw ParseError("pairing violated: phi" + s.to_string() +
                           " != phi" + SubsetA(mask ^ 1u).to_string(),
                       line.number);
    }
    phi.set(s, v);
    given[mask] = true;
  }
  for (auto s : phi.keys()) {
    if (!given[s.mask()]) {
      throw ParseError("missing key " + s.to_string(), lines.back().number);
    }
  }
  return phi;
}

std::string format_phi(const PhiMap& phi) {
  std::ostringstream os;
  os << "phi domain=";
  if (phi.domain() == PhiDomain::kFullPaired) {
    os << "full";
  } else {
    os << "pnprime:" << phi.arity();
  }
  os << " a=" << phi.a_size() << " group=" << phi.group().to_string() << "\n";
  for (auto s : phi.keys()) {
    os << s.to_string() << " -> " << phi.group().format(phi.at(s)) << "\n";
  }
  return os.str();
}

std::string format_tuple(std::span<const Letter> x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(x[i]);
  }
  return out;
}

std::string format_witness_sidecar(const WitnessBundle& w) {
  std::ostringstream os;
  os << "kind=" << to_string(w.kind) << "\n"
     << "vars=" << w.vars.to_string() << "\n"
     << "params=" << format_tuple(w.params) << "\n"
     << "expected=" << w.table.group().format(w.expected) << "\n"
     << "claimed_k=" << w.refuted_k << "\n";
  return os.str();
}

}  // namespace gapdecomp
