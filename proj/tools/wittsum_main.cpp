/*
 * Copyright 2026 The wittsum Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end: one subcommand per pipeline stage.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "wittsum/errors.hpp"
#include "wittsum/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitArithmetic = 3;
constexpr int kExitBudget = 4;

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wittsum::ValidationError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const wittsum::RunReport& report, const std::string& out_dir, const std::string& report_name) {
  std::cout << report.json;
  if (out_dir.empty()) return;
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  auto write = [&](const std::string& name, const std::string& contents) {
    std::ofstream out(fs::path(out_dir) / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + name + " in " + out_dir);
    out << contents;
  };
  write(report_name, report.json);
  for (const auto& [name, contents] : report.files) write(name, contents);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact exponential sums, L-functions and polygons for Witt-vector characters"};
  app.require_subcommand(1);

  unsigned threads = 0;
  std::uint64_t budget = 0;
  std::string out_dir;
  bool timing = false;
  app.add_option("--threads", threads, "Worker threads (0 = all cores)")->envname("WITTSUM_THREADS");
  app.add_option("--budget", budget, "Largest number of points per sum (overrides the input)")
      ->envname("WITTSUM_BUDGET");
  app.add_option("--out-dir", out_dir, "Directory for the JSON report and CSV exports")->envname("WITTSUM_OUT_DIR");
  app.add_flag("--timing", timing, "Include wall-clock timings in the output");

  std::string input = "-";
  unsigned max_k = 1;
  unsigned buffer = 0;
  std::string hodge_scale = "1", hodge_offset = "0";
  bool per_q = false;
  bool no_dual_path = false;

  const std::vector<std::string> spec_commands{"validate", "degree", "sums", "lfun",
                                               "newton",   "hodge",  "compare", "report"};
  std::map<std::string, CLI::App*> subs;
  for (const auto& name : spec_commands) {
    CLI::App* sub = app.add_subcommand(name, "Run the '" + name + "' stage on an input document");
    sub->add_option("input", input, "Input JSON document ('-' for stdin)");
    subs[name] = sub;
  }
  subs["sums"]->add_option("--max-k", max_k, "Compute S_f(1..max_k)")->check(CLI::PositiveNumber);
  for (const char* name : {"lfun", "newton", "compare", "report"}) {
    subs[name]->add_option("--buffer", buffer, "Vanishing coefficients required beyond the degree");
  }
  for (const char* name : {"hodge", "compare", "report"}) {
    subs[name]->add_option("--hodge-scale", hodge_scale, "Hodge slope scale factor (num/den)");
    subs[name]->add_option("--hodge-offset", hodge_offset, "Hodge slope index offset (num/den)");
  }
  for (const char* name : {"newton", "hodge", "compare", "report"}) {
    subs[name]->add_flag("--per-q", per_q, "Normalize heights so that v(q) = 1");
  }
  subs["report"]->add_flag("--no-dual-path", no_dual_path, "Skip the Witt-vector recomputation of each sum");

  CLI::App* cohom = app.add_subcommand("cohom", "Reduce partial fractions modulo the image of D");
  cohom->add_option("input", input, "Reduction job JSON document ('-' for stdin)");

  std::vector<std::uint32_t> primes{3, 5, 7};
  unsigned max_truncation = 2, max_index = 50;
  CLI::App* battery = app.add_subcommand("ah-battery", "Check the Artin-Hasse valuation estimates");
  battery->add_option("--primes", primes, "Primes to test")->delimiter(',');
  battery->add_option("--max-k", max_truncation, "Largest truncation level (capped at p - 1)");
  battery->add_option("--max-index", max_index, "Largest coefficient index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    wittsum::RunReport report;
    std::string report_name = "report.json";
    if (cohom->parsed()) {
      report = wittsum::run_cohomology(read_input(input));
      report_name = "cohom.json";
    } else if (battery->parsed()) {
      report = wittsum::run_ah_battery_report({primes, max_truncation, max_index});
      report_name = "ah_battery.json";
    } else {
      const CLI::App* sub = app.get_subcommands().front();
      const wittsum::Command command = wittsum::parse_command(sub->get_name());
      const wittsum::SumSpec spec = wittsum::parse_spec(read_input(input));
      wittsum::RunOptions options;
      options.threads = threads;
      if (budget > 0) options.budget_points = budget;
      options.max_k = max_k;
      if (buffer > 0) options.buffer = buffer;
      options.hodge.scale = wittsum::parse_rational(hodge_scale);
      options.hodge.offset = wittsum::parse_rational(hodge_offset);
      options.normalize_by_a = per_q;
      options.dual_path = !no_dual_path;
      options.timing = timing;
      report = wittsum::run(command, spec, options);
    }
    emit(report, out_dir, report_name);
    return report.passed ? kExitOk : kExitArithmetic;
  } catch (const wittsum::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const wittsum::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const wittsum::ArithmeticError& e) {
    std::cerr << "arithmetic inconsistency: " << e.what() << "\n";
    return kExitArithmetic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
