// Copyright 2026 The hamwb Authors
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

#include "hamwb/manifest.hpp"

#include <charconv>
#include <cstdio>
#include <set>

#include "hamwb/error.hpp"

namespace hamwb {

namespace {

std::string_view trim(std::string_view s) {
  const std::size_t first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const std::size_t last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> items;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = s.find(',', pos);
    const std::string_view item =
        trim(s.substr(pos, comma == std::string_view::npos ? s.npos : comma - pos));
    if (!item.empty()) items.push_back(item);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return items;
}

template <class T>
T parse_number(std::string_view token, int line, std::string_view key) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "bad value '" + std::string(token) + "' for '" +
                               std::string(key) + "'");
  }
  return value;
}

std::vector<int> parse_orders(std::string_view value, int line) {
  std::vector<int> orders;
  for (std::string_view item : split_list(value)) {
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      orders.push_back(parse_number<int>(item, line, "n"));
      continue;
    }
    const int lo = parse_number<int>(trim(item.substr(0, dots)), line, "n");
    const int hi = parse_number<int>(trim(item.substr(dots + 2)), line, "n");
    if (lo > hi) throw ParseError(line, "empty order range");
    for (int n = lo; n <= hi; ++n) orders.push_back(n);
  }
  if (orders.empty()) throw ParseError(line, "'n' needs at least one order");
  return orders;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

std::string_view campaign_name(Campaign c) {
  switch (c) {
    case Campaign::verify_conjecture1: return "verify-conjecture1";
    case Campaign::verify_theorem5: return "verify-theorem5";
    case Campaign::verify_meyniel: return "verify-meyniel";
    case Campaign::lemma2_sweep: return "lemma2-sweep";
    case Campaign::oracle_diff: return "oracle-diff";
  }
  return "unknown";
}

std::optional<Campaign> parse_campaign(std::string_view name) {
  for (Campaign c : {Campaign::verify_conjecture1, Campaign::verify_theorem5,
                     Campaign::verify_meyniel, Campaign::lemma2_sweep,
                     Campaign::oracle_diff}) {
    if (campaign_name(c) == name) return c;
  }
  return std::nullopt;
}

void apply_default_filters(RunManifest& m) {
  switch (m.campaign) {
    case Campaign::verify_conjecture1:
    case Campaign::verify_theorem5:
      m.filters = {Condition::conjecture1};
      m.connectivity = 2;
      break;
    case Campaign::verify_meyniel:
      m.filters = {Condition::meyniel};
      m.connectivity = 1;
      break;
    case Campaign::lemma2_sweep:
    case Campaign::oracle_diff:
      m.filters.clear();
      m.connectivity = 0;
      break;
  }
}

RunManifest parse_manifest(std::string_view text) {
  RunManifest m;
  std::set<std::string, std::less<>> seen;
  bool have_campaign = false;
  bool have_generator = false;
  bool have_filters = false;
  bool have_connectivity = false;

  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(number, "expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(std::string(key)).second) {
      throw ParseError(number, "duplicate key '" + std::string(key) + "'");
    }

    if (key == "campaign") {
      const auto c = parse_campaign(value);
      if (!c) throw ParseError(number, "unknown campaign '" + std::string(value) + "'");
      m.campaign = *c;
      have_campaign = true;
    } else if (key == "generator") {
      const auto g = parse_generator(value);
      if (!g) throw ParseError(number, "unknown generator '" + std::string(value) + "'");
      m.generator.kind = *g;
      have_generator = true;
    } else if (key == "n") {
      m.generator.orders = parse_orders(value, number);
    } else if (key == "p") {
      for (std::string_view item : split_list(value)) {
        m.generator.probabilities.push_back(parse_number<double>(item, number, key));
      }
    } else if (key == "seed") {
      m.generator.seed = parse_number<std::uint64_t>(value, number, key);
    } else if (key == "allow_small") {
      if (value != "true" && value != "false" && value != "1" && value != "0") {
        throw ParseError(number, "allow_small must be true or false");
      }
      m.generator.allow_small_tightness = value == "true" || value == "1";
    } else if (key == "first") {
      m.first = parse_number<std::uint64_t>(value, number, key);
    } else if (key == "filters") {
      have_filters = true;
      if (value != "none") {
        for (std::string_view item : split_list(value)) {
          const auto c = parse_condition(item);
          if (!c || *c == Condition::claim2) {
            throw ParseError(number, "unusable filter '" + std::string(item) + "'");
          }
          m.filters.push_back(*c);
        }
      }
    } else if (key == "connectivity") {
      m.connectivity = parse_number<int>(value, number, key);
      if (m.connectivity < 0) throw ParseError(number, "connectivity must be >= 0");
      have_connectivity = true;
    } else if (key == "max_instances") {
      m.budget.max_instances = parse_number<std::uint64_t>(value, number, key);
      if (m.budget.max_instances == 0) {
        throw ParseError(number, "max_instances must be positive");
      }
    } else if (key == "max_seconds") {
      m.budget.max_seconds = parse_number<double>(value, number, key);
      if (!(m.budget.max_seconds > 0)) {
        throw ParseError(number, "max_seconds must be positive");
      }
    } else if (key == "output") {
      m.output = std::string(value);
    } else {
      throw ParseError(number, "unknown key '" + std::string(key) + "'");
    }
  }

  if (!have_campaign) throw ParseError(0, "manifest lacks 'campaign'");
  if (!have_generator) throw ParseError(0, "manifest lacks 'generator'");
  if (!have_filters && !have_connectivity) {
    apply_default_filters(m);
  }
  try {
    validate(m.generator);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  if (m.generator.kind == GeneratorKind::random && m.budget.max_instances == 0) {
    throw ParseError(0, "random generator needs max_instances");
  }
  return m;
}

std::string serialize_manifest(const RunManifest& m) {
  std::string out;
  out += "campaign = " + std::string(campaign_name(m.campaign)) + "\n";
  out += "generator = " + std::string(generator_name(m.generator.kind)) + "\n";
  std::string orders;
  for (int n : m.generator.orders) {
    if (!orders.empty()) orders += ",";
    orders += std::to_string(n);
  }
  out += "n = " + orders + "\n";
  if (!m.generator.probabilities.empty()) {
    std::string probs;
    for (double p : m.generator.probabilities) {
      if (!probs.empty()) probs += ",";
      probs += format_double(p);
    }
    out += "p = " + probs + "\n";
  }
  out += "seed = " + std::to_string(m.generator.seed) + "\n";
  if (m.generator.allow_small_tightness) out += "allow_small = true\n";
  out += "first = " + std::to_string(m.first) + "\n";
  std::string filters;
  for (Condition c : m.filters) {
    if (!filters.empty()) filters += ",";
    filters += condition_name(c);
  }
  out += "filters = " + (filters.empty() ? std::string("none") : filters) + "\n";
  out += "connectivity = " + std::to_string(m.connectivity) + "\n";
  if (m.budget.max_instances > 0) {
    out += "max_instances = " + std::to_string(m.budget.max_instances) + "\n";
  }
  if (m.budget.max_seconds > 0) {
    out += "max_seconds = " + format_double(m.budget.max_seconds) + "\n";
  }
  if (!m.output.empty()) out += "output = " + m.output + "\n";
  return out;
}

}  // namespace hamwb
