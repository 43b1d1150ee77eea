/* Copyright 2026 The lyubeznik Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// lyu COMMAND INPUT [i j] [flags]
//
// INPUT is a job file (see data/ and include/lyubeznik/job.hpp), or '-' for
// stdin. Exit codes: 0 ok, 1 internal error or failed check under --strict,
// 2 not F-pure, 3 budget exceeded, 4 bad input.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "lyubeznik/job.hpp"

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw lyu::InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lyubeznik numbers of F-pure graded rings over F_p"};
  app.set_version_flag("--version", "lyu 1.0.0");

  std::string command, input;
  std::vector<std::size_t> args;
  lyu::JobFlags flags;
  std::string format = "text";
  std::uint64_t budget = 0;
  double time_limit = 0;
  std::vector<std::string> with;
  bool print_job = false, timestamp = false;

  app.add_option("command", command, "fpure | table | projective | sdim | splitting-prime | "
                                     "compatible | ncm | raw-ext | oracle")
      ->required()
      ->check(CLI::IsMember(lyu::known_commands()));
  app.add_option("input", input, "job file, '-' for stdin")->required();
  app.add_option("args", args, "i j for raw-ext");
  app.add_option("--e-max", flags.e_max, "Frobenius depth for splitting ideals")
      ->check(CLI::Range(1u, 10u))
      ->capture_default_str();
  app.add_flag("--strict", flags.strict, "compute forced-zero cells too; nonzero exit on a failed check");
  app.add_flag("--fast", flags.fast, "skip cells the vanishing theorem forces to zero");
  app.add_flag("--no-minimalize", flags.no_minimalize, "keep non-minimal resolutions");
  app.add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--budget", budget, "S-pair cap per Groebner computation")->check(CLI::PositiveNumber);
  app.add_option("--time-limit", time_limit, "seconds before Groebner work is abandoned (exit 3)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--assert-cm", flags.assert_cm, "Proj(S/I) is Cohen-Macaulay (enables projective checks)");
  app.add_flag("--assert-equidim", flags.assert_equidim, "S/I is equidimensional");
  app.add_flag("--verify", flags.verify, "assert engine invariants while computing");
  app.add_option("--threads", flags.threads, "cells computed in parallel")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--with", with, "generators of the second ideal for 'compatible'")->delimiter(',');
  app.add_option("--checkpoint", flags.checkpoint, "resumable per-cell ledger (JSON lines)");
  app.add_flag("--print-job", print_job, "echo the parsed job in input syntax and exit");
  app.add_flag("--timestamp", timestamp, "add a 'timestamp' field to JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version exit 0; any usage error is an input error.
    const int code = app.exit(e);
    return code == 0 ? lyu::exit_code::kOk : lyu::exit_code::kParse;
  }

  flags.format = format == "json" ? lyu::OutputFormat::kJson : lyu::OutputFormat::kText;
  if (budget) flags.budget = budget;
  if (time_limit > 0) flags.time_limit = time_limit;
  flags.compatible_with = with;

  lyu::JobSpec spec;
  try {
    spec = lyu::parse_input(read_all(input));
  } catch (const lyu::Error& e) {
    std::cerr << input << ": " << e.what() << "\n";
    return lyu::exit_code::kParse;
  }
  spec.command = command;
  spec.command_args = args;
  spec.flags = flags;
  if (command == "raw-ext" && args.size() != 2) {
    std::cerr << "raw-ext needs two indices i j\n";
    return lyu::exit_code::kParse;
  }
  if (command != "raw-ext" && !args.empty()) {
    std::cerr << command << " takes no positional indices\n";
    return lyu::exit_code::kParse;
  }
  if (print_job) {
    std::cout << lyu::print_input(spec);
    return lyu::exit_code::kOk;
  }

  lyu::RunResult r;
  try {
    r = lyu::run(spec);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return lyu::exit_code::kFailed;
  }
  if (flags.format == lyu::OutputFormat::kJson) {
    if (timestamp) r.doc["timestamp"] = utc_timestamp();
    r.doc["exit_code"] = r.exit_code;
    std::cout << r.doc.dump(2) << "\n";
  } else {
    (r.exit_code == lyu::exit_code::kOk || r.exit_code == lyu::exit_code::kBudget ? std::cout : std::cerr)
        << r.text;
  }
  return r.exit_code;
}
