// Copyright 2026 The Yulkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial vs OpenMP-parallel suite throughput. Also confirms both runners
// report the same failures.
//
//   yulkit_bench [--n N] [--threads T]

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "yul/testgen.hpp"

int main(int argc, char** argv) {
  CLI::App app{"suite runner benchmark", "yulkit_bench"};
  std::size_t n = 200;
  int threads = 0;
  std::vector<std::string> suites = {"static-soundness", "dead-code", "renamevar", "fuel-monotonicity"};
  app.add_option("--n", n, "cases per suite");
  app.add_option("--threads", threads, "OpenMP threads (default: runtime choice)");
  app.add_option("--suite", suites, "suites to time");
  CLI11_PARSE(app, argc, argv);
  if (threads > 0) omp_set_num_threads(threads);

  yul::SuiteOptions opt;
  opt.n = n;
  std::printf("threads=%d n=%zu\n", omp_get_max_threads(), n);
  std::printf("%-20s %10s %10s %8s %s\n", "suite", "serial s", "parallel s", "speedup", "agree");
  bool ok = true;
  for (const std::string& name : suites) {
    auto t0 = std::chrono::steady_clock::now();
    yul::SuiteReport serial = yul::RunSuiteSerial(name, opt);
    auto t1 = std::chrono::steady_clock::now();
    yul::SuiteReport parallel = yul::RunSuite(name, opt);
    auto t2 = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(t1 - t0).count();
    double p = std::chrono::duration<double>(t2 - t1).count();
    bool agree = serial.failures == parallel.failures && serial.cases_run == parallel.cases_run;
    ok = ok && agree;
    std::printf("%-20s %10.3f %10.3f %8.2f %s\n", name.c_str(), s, p, p > 0 ? s / p : 0.0, agree ? "yes" : "NO");
  }
  return ok ? 0 : 1;
}
