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

// hamwb: command-line front end for the digraph Hamiltonicity workbench.
//
// Exit codes: 0 holds / found, 1 fails / not found, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamwb/campaign.hpp"
#include "hamwb/conditions.hpp"
#include "hamwb/error.hpp"
#include "hamwb/generators.hpp"
#include "hamwb/hamilton.hpp"
#include "hamwb/insertion.hpp"
#include "hamwb/io.hpp"
#include "hamwb/manifest.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

hamwb::Digraph load_digraph(const std::string& path) {
  return hamwb::parse_digraph(read_input(path));
}

ordered_json to_json(const hamwb::ConditionReport& r) {
  ordered_json j;
  j["condition"] = hamwb::condition_name(r.condition);
  j["holds"] = r.holds();
  j["bound"] = r.bound;
  if (r.violation) {
    j["witness"] = hamwb::format_vertices(r.violation->vertices);
    j["sum"] = r.violation->sum;
    if (r.violation->clause != 0) j["clause"] = r.violation->clause;
  }
  return j;
}

ordered_json to_json(std::string_view target, const hamwb::SearchOutcome& o) {
  ordered_json j;
  j["target"] = target;
  j["found"] = o.found.has_value();
  j["optimum"] = o.optimum;
  j["witness"] = o.found ? hamwb::format_vertices(o.found->vertices) : "";
  j["explored"] = o.explored;
  j["method"] = hamwb::method_name(o.method);
  return j;
}

struct CheckArgs {
  std::string file;
  std::vector<std::string> conditions;
};

int run_check(const CheckArgs& args) {
  const hamwb::Digraph d = load_digraph(args.file);
  std::vector<hamwb::Condition> conds;
  for (const std::string& name : args.conditions) {
    const auto c = hamwb::parse_condition(name);
    if (!c) {
      std::cerr << "unknown condition '" << name << "'\n";
      return kInputError;
    }
    conds.push_back(*c);
  }
  bool all = true;
  for (hamwb::Condition c : conds) {
    const hamwb::ConditionReport r = hamwb::check_condition(d, c);
    std::cout << to_json(r).dump() << "\n";
    all = all && r.holds();
  }
  return all ? kOk : kFail;
}

struct FindArgs {
  std::string file;
  std::string target;
  std::string set;
};

int run_find(const FindArgs& args) {
  const hamwb::Digraph d = load_digraph(args.file);
  if (args.target == "pancyclic") {
    const hamwb::PancyclicReport r = hamwb::pancyclic(d);
    ordered_json j;
    j["target"] = "pancyclic";
    j["pancyclic"] = r.pancyclic;
    j["missing"] = r.missing;
    std::cout << j.dump() << "\n";
    return r.pancyclic ? kOk : kFail;
  }
  hamwb::SearchOutcome o;
  if (args.target == "cycle") {
    o = hamwb::hamilton_cycle(d);
  } else if (args.target == "path") {
    o = hamwb::hamilton_path(d);
  } else if (args.target == "longest") {
    o = hamwb::longest_cycle(d);
  } else if (args.target == "cyclable") {
    if (args.set.empty()) {
      std::cerr << "cyclable needs --set\n";
      return kInputError;
    }
    const std::vector<hamwb::Vertex> members = hamwb::parse_vertex_list(args.set);
    for (hamwb::Vertex v : members) {
      if (v >= d.order()) {
        std::cerr << "vertex " << v << " outside the digraph\n";
        return kInputError;
      }
    }
    o = hamwb::cyclable(d, hamwb::VertexSet::of(members));
  } else {
    std::cerr << "unknown target '" << args.target << "'\n";
    return kInputError;
  }
  std::cout << to_json(args.target, o).dump() << "\n";
  return o.found ? kOk : kFail;
}

struct VerifyArgs {
  std::string manifest;
  int jobs = 1;
  std::string output;
};

int run_verify(const VerifyArgs& args) {
  const hamwb::RunManifest m = hamwb::parse_manifest(read_input(args.manifest));
  const hamwb::CampaignReport report = hamwb::run_campaign(m, args.jobs);
  const std::string text = hamwb::render_report(report);
  const std::string path = args.output.empty() ? m.output : args.output;
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
  }
  std::cerr << hamwb::campaign_name(m.campaign) << ": scanned "
            << report.scanned << ", filtered " << report.filtered
            << ", violating " << report.violating() << " in "
            << report.wall_seconds << " s"
            << (report.complete ? "" : " (incomplete)") << "\n";
  return report.violating() == 0 && report.complete ? kOk : kFail;
}

struct GenArgs {
  std::string kind;
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  std::string format = "arc-list";
  bool allow_small = false;
};

int run_gen(const GenArgs& args) {
  if (args.format != "arc-list" && args.format != "matrix") {
    std::cerr << "unknown format '" << args.format << "'\n";
    return kInputError;
  }
  hamwb::Digraph d;
  if (args.kind == "tightness") {
    d = hamwb::tightness_example(args.n, args.allow_small);
  } else if (args.kind == "random") {
    d = hamwb::random_digraph(args.n, args.p, args.seed);
  } else if (args.kind == "exhaustive") {
    if (args.n > hamwb::kMaxExhaustiveOrder) {
      std::cerr << "exhaustive mode supports n <= "
                << hamwb::kMaxExhaustiveOrder << "\n";
      return kInputError;
    }
    if (args.index >= hamwb::labeled_count(args.n)) {
      std::cerr << "index outside the labelled space\n";
      return kInputError;
    }
    d = hamwb::labeled_digraph(args.n, args.index);
  } else {
    std::cerr << "unknown kind '" << args.kind << "'\n";
    return kInputError;
  }
  std::cout << hamwb::serialize_digraph(
      d, args.format == "matrix" ? hamwb::TextFormat::matrix
                                 : hamwb::TextFormat::arc_list);
  return kOk;
}

struct ExtendArgs {
  std::string file;
  std::string cycle;
  bool check = false;
};

int run_extend(const ExtendArgs& args) {
  const hamwb::Digraph d = load_digraph(args.file);
  hamwb::VertexSequence start;
  if (!args.cycle.empty()) {
    start = hamwb::make_cycle(d, hamwb::parse_vertex_list(args.cycle));
  } else {
    auto c = hamwb::shortest_cycle(d);
    if (!c) {
      std::cerr << "digraph has no cycle\n";
      return kInputError;
    }
    start = std::move(*c);
  }
  const hamwb::ExtensionTrace trace = hamwb::extend_cycle(d, start);

  ordered_json first;
  first["record"] = "start";
  first["cycle"] = hamwb::format_vertices(start.vertices);
  first["length"] = start.size();
  std::cout << first.dump() << "\n";
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    const hamwb::ExtensionRound& r = trace.rounds[i];
    ordered_json j;
    j["record"] = "round";
    j["round"] = i + 1;
    j["entry"] = r.c_path.entry_vertex();
    j["exit"] = r.c_path.exit_vertex();
    j["span"] = r.c_path.span;
    j["interior"] = hamwb::format_vertices(r.c_path.interior);
    j["rerouted"] = hamwb::format_vertices(r.rerouted);
    j["length"] = r.length;
    std::cout << j.dump() << "\n";
  }
  ordered_json last;
  last["record"] = "final";
  last["rounds"] = trace.rounds.size();
  last["length"] = trace.cycle.size();
  last["cycle"] = hamwb::format_vertices(trace.cycle.vertices);
  int code = kOk;
  if (args.check) {
    const int optimum = hamwb::longest_cycle(d).optimum;
    const bool within = static_cast<int>(trace.cycle.size()) <= optimum;
    last["optimum"] = optimum;
    last["within_optimum"] = within;
    if (!within) code = kFail;
  }
  std::cout << last.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digraph Hamiltonicity workbench"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate degree conditions");
  check_cmd->add_option("file", check.file, "Digraph file ('-' for stdin)")
      ->required();
  check_cmd->add_option("--cond", check.conditions, "Condition name(s)")
      ->required();

  FindArgs find;
  auto* find_cmd = app.add_subcommand("find", "Run an exact search");
  find_cmd->add_option("file", find.file, "Digraph file ('-' for stdin)")
      ->required();
  find_cmd->add_option("--target", find.target,
                       "cycle | path | longest | pancyclic | cyclable")
      ->required();
  find_cmd->add_option("--set", find.set, "Comma-separated vertex set");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification campaign");
  verify_cmd->add_option("--manifest", verify.manifest, "Manifest file")
      ->required();
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--output", verify.output,
                         "Report path, overriding the manifest");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a digraph");
  gen_cmd->add_option("--kind", gen.kind, "tightness | random | exhaustive")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Order")->required();
  gen_cmd->add_option("--p", gen.p, "Arc probability (random)");
  gen_cmd->add_option("--seed", gen.seed, "Seed (random)");
  gen_cmd->add_option("--index", gen.index, "Labelled index (exhaustive)");
  gen_cmd->add_option("--format", gen.format, "arc-list | matrix")
      ->check(CLI::IsMember({"arc-list", "matrix"}));
  gen_cmd->add_flag("--allow-small", gen.allow_small,
                    "Permit tightness orders 5 and 7");

  ExtendArgs extend;
  auto* extend_cmd = app.add_subcommand("extend", "Grow a cycle via C-paths");
  extend_cmd->add_option("file", extend.file, "Digraph file ('-' for stdin)")
      ->required();
  extend_cmd->add_option("--cycle", extend.cycle, "Initial cycle v,v,...");
  extend_cmd->add_flag("--check", extend.check,
                       "Compare the result with the exact optimum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check_cmd) return run_check(check);
    if (*find_cmd) return run_find(find);
    if (*verify_cmd) return run_verify(verify);
    if (*gen_cmd) return run_gen(gen);
    if (*extend_cmd) return run_extend(extend);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
