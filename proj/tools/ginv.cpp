// Copyright 2026 The ginv Authors
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


// Command-line front end; all logic lives in commands.hpp.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

bool read_source(const std::string& path, std::string& text, std::string& error) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path);
  if (!in) {
    error = "cannot open " + path;
    return false;
  }
  text.assign(std::istreambuf_iterator<char>(in), {});
  return true;
}

int emit(const ginv::cli::CommandOutcome& outcome) {
  std::cout << outcome.payload;
  std::cerr << outcome.diagnostic;
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace ginv::cli;
  CLI::App app{"Inverses of bipartite graphs with a unique perfect matching"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string path;
  AnalyzeOptions analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "Decide invertibility and report the structure");
  analyze->add_option("path", path, "Graph file, or - for standard input")->required();
  analyze->add_flag("--all-pairs", analyze_opts.all_pairs, "Classify every vertex pair");

  std::string format = "dg";
  auto* invert = app.add_subcommand("invert", "Emit the inverse graph");
  invert->add_option("path", path, "Graph file, or - for standard input")->required();
  invert->add_option("--format", format, "Output format")->check(CLI::IsMember({"dg", "dot", "json"}));

  auto* generate = app.add_subcommand("generate", "Generate graphs");
  generate->require_subcommand(1);
  GenerateOptions gen;
  std::vector<int> t_parts, p_parts;
  std::vector<std::size_t> choice_list;
  std::uint64_t seed = 0;
  std::string gen_format = "json";
  auto* unicyclic = generate->add_subcommand("unicyclic", "Build a connected unicyclic digraph");
  unicyclic->add_option("--M", gen.m, "Number of vertices")->required();
  unicyclic->add_option("--N", gen.n, "Cycle length")->required();
  unicyclic->add_option("--v", gen.v, "Cycle starts at vertex v+1")->required();
  auto* t_opt = unicyclic->add_option("--T", t_parts, "Degree partition t_1,...,t_M")->delimiter(',');
  auto* p_opt = unicyclic->add_option("--P", p_parts, "Motzkin partition p_1,...,p_N")->delimiter(',');
  auto* seed_opt = unicyclic->add_option("--seed", seed, "Seed for random parameters and choices");
  auto* choices_opt = unicyclic->add_option("--choices", choice_list, "Explicit choice indices")->delimiter(',');
  unicyclic->add_flag("--invertible-only", gen.invertible_only, "Only produce invertible digraphs");
  unicyclic->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({"dg", "dot", "json"}));
  seed_opt->excludes(choices_opt);

  auto* enumerate = app.add_subcommand("enumerate", "Stream combinatorial families as JSON lines");
  enumerate->require_subcommand(1);
  int motzkin_n = 0;
  auto* motzkin = enumerate->add_subcommand("motzkin", "Motzkin partitions of N");
  motzkin->add_option("--N", motzkin_n, "Partition size")->required();
  int digraph_n = 0, max_mult = 1;
  bool classify = false;
  auto* digraphs = enumerate->add_subcommand("digraphs", "All digraphs on n vertices");
  digraphs->add_option("--n", digraph_n, "Vertex count")->required();
  digraphs->add_option("--max-mult", max_mult, "Largest arc multiplicity");
  digraphs->add_flag("--classify", classify, "Attach invertibility verdicts and a census");

  auto* verify = app.add_subcommand("verify", "Cross-check against the brute-force oracle");
  VerifyOptions verify_opts;
  std::vector<int> exhaustive;
  auto* path_opt = verify->add_option("path", path, "Graph file, or - for standard input");
  auto* exhaustive_opt = verify->add_option("--exhaustive", exhaustive, "n maxMult")->expected(2);
  verify->add_option("--jobs", verify_opts.jobs, "Worker threads");
  verify->add_flag("--mutate-decide", verify_opts.mutate_decide)->group("");
  path_opt->excludes(exhaustive_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::string text, error;
  auto load = [&]() {
    if (!read_source(path, text, error)) {
      std::cerr << error << "\n";
      return false;
    }
    return true;
  };

  if (analyze->parsed()) return load() ? emit(run_analyze(text, analyze_opts)) : 1;
  if (invert->parsed()) return load() ? emit(run_invert(text, *parse_format(format))) : 1;
  if (unicyclic->parsed()) {
    if (*t_opt) gen.t = t_parts;
    if (*p_opt) gen.p = p_parts;
    if (*seed_opt) gen.seed = seed;
    if (*choices_opt) gen.choices = choice_list;
    gen.format = *parse_format(gen_format);
    return emit(run_generate_unicyclic(gen));
  }
  if (motzkin->parsed()) return emit(run_enumerate_motzkin(motzkin_n));
  if (digraphs->parsed()) return emit(run_enumerate_digraphs(digraph_n, max_mult, classify));
  if (verify->parsed()) {
    if (*exhaustive_opt) return emit(run_verify_exhaustive(exhaustive[0], exhaustive[1], verify_opts));
    if (!*path_opt) {
      std::cerr << "verify needs a path or --exhaustive n maxMult\n";
      return 1;
    }
    return load() ? emit(run_verify(text, verify_opts)) : 1;
  }
  return 1;
}
