// Copyright 2026 The Authors.
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

#include "cli.h"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "pqnmc/errors.h"
#include "pqnmc/run_record.h"
#include "pqnmc/search.h"
#include "verify.h"

namespace pqnmc::cli {
namespace {

struct Common {
  int f = 0;
  std::uint32_t q = 2;
  int n = 2;
  std::uint64_t seed = 0;
  int fixed_colors = 0;  // 0 = method default
  std::string tie = "lex";
  std::string format = "json";
  bool raw = false;
  int threads = 0;
  bool no_timing = false;
};

void AddCommon(CLI::App* cmd, Common& c, bool need_f) {
  if (need_f) {
    cmd->add_option("--f", c.f, "number of messages")
        ->required()
        ->check(CLI::Range(2, kMaxVertices));
  }
  cmd->add_option("--q", c.q, "field size (prime)")->capture_default_str();
  cmd->add_option("--n", c.n, "number of databases")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", c.seed)->capture_default_str();
  cmd->add_option("--fixed-colors", c.fixed_colors)->check(CLI::PositiveNumber);
  cmd->add_option("--tie", c.tie)->check(CLI::IsMember({"lex", "random"}));
  cmd->add_option("--threads", c.threads)->check(CLI::PositiveNumber);
  cmd->add_flag("--no-timing", c.no_timing, "report wall_time_ms as 0");
}

int ResolveThreads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("PQC_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SearchConfig MakeConfig(Method method, const Common& c) {
  SearchConfig config;
  config.method = method;
  config.params.f = c.f;
  config.params.n = c.n;
  config.params.field = FieldSpec(c.q);
  config.params.Validate();
  config.seed = c.seed;
  config.tie_policy =
      c.tie == "random" ? TiePolicy::kSeededRandom : TiePolicy::kLexicographic;
  config.threads = ResolveThreads(c.threads);
  if (c.fixed_colors > 0) {
    config.fixed_colors = c.fixed_colors;
  } else if (method == Method::kDirectedRandom) {
    config.fixed_colors = 2;
  } else if (method == Method::kEEc && c.f > 10) {
    config.fixed_colors = 2;
  }
  return config;
}

struct Timed {
  SearchResult result;
  std::int64_t ms = 0;
};

Timed RunTimed(const SearchConfig& config, bool no_timing) {
  auto start = std::chrono::steady_clock::now();
  Timed t{RunSearch(config), 0};
  if (!no_timing) {
    t.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
               .count();
  }
  return t;
}

RunRecord MakeRecord(const SearchConfig& config, const Timed& t, bool raw) {
  RunRecord r;
  r.f = config.params.f;
  r.q = config.params.field.q();
  r.n = config.params.n;
  r.method = MethodName(config.method);
  r.seed = config.seed;
  r.fixed_colors = config.fixed_colors;
  r.budget = config.budget;
  r.order = t.result.best.order;
  r.bound = FormatBound(t.result.best.bound);
  r.cond_entropies = t.result.best.cond_entropies;
  r.wall_time_ms = t.ms;
  if (raw) r.bound_hex = FormatHex(t.result.best.bound);
  return r;
}

const char kCsvHeader[] = "f,method,bound,evaluations,wall_time_ms\n";

void Emit(std::ostream& out, const std::string& format, const RunRecord& r,
          std::uint64_t evaluations) {
  if (format == "json") {
    out << SerializeRecord(r);
  } else if (format == "csv") {
    out << kCsvHeader << r.f << ',' << r.method << ',' << r.bound << ','
        << evaluations << ',' << r.wall_time_ms << '\n';
  } else {
    out << "method       " << r.method << '\n'
        << "f q n        " << r.f << ' ' << r.q << ' ' << r.n << '\n'
        << "bound        " << r.bound << '\n';
    if (r.bound_hex) out << "bound_hex    " << *r.bound_hex << '\n';
    out << "evaluations  " << evaluations << '\n'
        << "order        " << FormatOrder(r.order) << '\n';
  }
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

bool ParseRange(const std::string& text, int& lo, int& hi) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    lo = hi = std::atoi(text.c_str());
  } else {
    lo = std::atoi(text.substr(0, dots).c_str());
    hi = std::atoi(text.substr(dots + 2).c_str());
  }
  return lo >= 2 && hi <= kMaxVertices && lo <= hi;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capacity outer bounds for private quadratic monomial computation"};
  app.require_subcommand(1);

  Common oc;
  std::string order_method;
  auto* order = app.add_subcommand("order", "run a deterministic ordering method");
  order->add_option("--method", order_method)
      ->required()
      ->check(CLI::IsMember({"ec", "e-ec", "ldf", "ebg"}));
  AddCommon(order, oc, true);
  order->add_option("--format", oc.format)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  order->add_flag("--raw", oc.raw, "also print the bound as a hex float");

  Common sc;
  std::string search_method;
  std::uint64_t budget = 100000;
  bool force = false;
  auto* search = app.add_subcommand("search", "exhaustive or directed random search");
  search->add_option("--method", search_method)
      ->required()
      ->check(CLI::IsMember({"exhaustive", "random"}));
  AddCommon(search, sc, true);
  search->add_option("--budget", budget)->check(CLI::PositiveNumber)->capture_default_str();
  search->add_flag("--force", force, "lift the exhaustive size guard (f <= 7)");
  search->add_option("--format", sc.format)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  search->add_flag("--raw", sc.raw);

  Common tc;
  std::string range;
  std::string methods = "ec,e-ec,ldf,ebg";
  std::string out_path;
  bool long_form = false;
  std::uint64_t table_budget = 100000;
  auto* table = app.add_subcommand("table", "bounds of several methods over a range of f");
  table->add_option("--f-range", range, "A..B")->required();
  AddCommon(table, tc, false);
  table->add_option("--methods", methods)->capture_default_str();
  table->add_option("--budget", table_budget, "draws for the random method");
  table->add_option("--out", out_path);
  table->add_flag("--long", long_form, "one row per (f, method) with evaluations");

  std::string suite;
  int verify_f = 6;
  std::uint64_t verify_seed = 0;
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"entropy", "graph", "coloring", "remarks", "paths"}));
  verify->add_option("--f", verify_f)->check(CLI::Range(2, kMaxVertices))->capture_default_str();
  verify->add_option("--seed", verify_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (order->parsed()) {
      SearchConfig config = MakeConfig(ParseMethod(order_method), oc);
      Timed t = RunTimed(config, oc.no_timing);
      Emit(out, oc.format, MakeRecord(config, t, oc.raw), t.result.evaluations);
      return kOk;
    }
    if (search->parsed()) {
      SearchConfig config = MakeConfig(ParseMethod(search_method), sc);
      config.budget = budget;
      config.force = force;
      Timed t = RunTimed(config, sc.no_timing);
      if (config.method == Method::kDirectedRandom) {
        err << "random search: " << t.result.evaluations << " draws, "
            << t.result.partial_evaluations << " abandoned early\n";
      }
      Emit(out, sc.format, MakeRecord(config, t, sc.raw), t.result.evaluations);
      return kOk;
    }
    if (table->parsed()) {
      int lo = 0, hi = 0;
      if (!ParseRange(range, lo, hi)) {
        err << "table: --f-range must look like A..B with 2 <= A <= B <= "
            << kMaxVertices << "\n";
        return kUsage;
      }
      std::vector<Method> list;
      for (const std::string& name : SplitList(methods)) {
        try {
          list.push_back(ParseMethod(name));
        } catch (const Error&) {
          err << "table: unknown method '" << name << "'\n";
          return kUsage;
        }
      }
      if (list.empty()) {
        err << "table: --methods is empty\n";
        return kUsage;
      }
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
          err << "table: cannot open " << out_path << "\n";
          return kUsage;
        }
      }
      std::ostream& sink = out_path.empty() ? out : file;
      if (long_form) {
        sink << kCsvHeader;
      } else {
        sink << 'f';
        for (Method m : list) sink << ',' << MethodName(m);
        sink << '\n';
      }
      for (int f = lo; f <= hi; ++f) {
        Common c = tc;
        c.f = f;
        auto cache = std::make_shared<EntropyCache>(f);
        if (!long_form) sink << f;
        for (Method m : list) {
          SearchConfig config = MakeConfig(m, c);
          config.budget = table_budget;
          config.cache = cache;
          Timed t = RunTimed(config, c.no_timing);
          if (long_form) {
            sink << f << ',' << MethodName(m) << ',' << FormatBound(t.result.best.bound)
                 << ',' << t.result.evaluations << ',' << t.ms << '\n';
          } else {
            sink << ',' << FormatBound(t.result.best.bound);
          }
          sink.flush();
        }
        if (!long_form) sink << '\n';
      }
      return kOk;
    }
    if (verify->parsed()) {
      bool all = true;
      for (const Check& c : RunSuite(suite, verify_f, verify_seed)) {
        out << (c.passed ? "PASS  " : "FAIL  ") << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << '\n';
        all = all && c.passed;
      }
      out << (all ? "all checks passed" : "some checks failed") << '\n';
      return all ? kOk : kVerifyFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return IsGuardViolation(e.code()) ? kGuard : kUsage;
  }
  return kUsage;
}

}  // namespace pqnmc::cli
