// gdom: distance-k domination numbers of generalized de Bruijn and Kautz
// digraphs.
//
//   gdom gamma    debruijn 40 3 3
//   gdom gamma    --family kautz -n 9 -d 2 -k 1 --format table
//   gdom sweep    --family debruijn -n 2..60 -d 2..5 -k 1..4 --format csv
//   gdom verify   --family kautz -n 7 -d 2 -k 2 --set "{0,1}"
//   gdom problems --problem P4_1 -n 2..60 -d 2..5 -k 1..4
//   gdom export   --family debruijn -n 6 -d 3 --format dot

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "gdom/commands.hpp"

namespace {

struct Args {
  std::string family;
  std::string n;
  std::string d;
  std::string k;
  std::string format;
  std::string set;
  std::string problem;
  std::string config;
  std::string out;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> ceiling;
  std::optional<unsigned> jobs;
  bool timing = false;
  // positional fallbacks: <family> <n> <d> [<k>] [<set>]
  std::vector<std::string> positional;
};

// Fill family/n/d/k/set from positionals where the flag was not given.
void merge_positionals(Args& a, bool with_k, bool with_set) {
  std::vector<std::string*> slots{&a.family, &a.n, &a.d};
  if (with_k) slots.push_back(&a.k);
  if (with_set) slots.push_back(&a.set);
  std::size_t next = 0;
  for (const std::string& value : a.positional) {
    while (next < slots.size() && !slots[next]->empty()) ++next;
    if (next == slots.size()) throw std::invalid_argument("unexpected argument '" + value + "'");
    *slots[next++] = value;
  }
}

void require(const std::string& value, const char* what) {
  if (value.empty()) throw std::invalid_argument(std::string("missing ") + what);
}

gdom::RunOptions run_options(const Args& a) {
  gdom::RunOptions opt;
  opt.jobs = std::max(1U, std::thread::hardware_concurrency());
  if (!a.config.empty()) gdom::apply_config(opt, a.config);
  if (a.budget) opt.classify.oracle_budget = *a.budget;
  if (a.ceiling) opt.classify.oracle_ceiling = *a.ceiling;
  if (a.jobs) opt.jobs = std::max(1U, *a.jobs);
  if (a.timing) opt.timing = true;
  return opt;
}

void emit(const Args& a, const std::string& text) {
  if (a.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(a.out);
  if (!f) throw std::invalid_argument("cannot write '" + a.out + "'");
  f << text;
}

void add_common(CLI::App* cmd, Args& a, bool with_k) {
  cmd->add_option("--family", a.family, "debruijn | kautz");
  cmd->add_option("-n", a.n, "vertex count (value or range a..b)");
  cmd->add_option("-d", a.d, "degree (value or range a..b)");
  if (with_k) cmd->add_option("-k", a.k, "radius (value or range a..b)");
  cmd->add_option("--format", a.format, "json | csv | table | dot | edges");
  cmd->add_option("--out", a.out, "write output to a file instead of stdout");
  cmd->add_option("args", a.positional, "positional form: family n d [k] [set]");
}

void add_oracle(CLI::App* cmd, Args& a) {
  cmd->add_option("--oracle-budget", a.budget, "branch-and-bound node budget per search (0 disables)");
  cmd->add_option("--oracle-ceiling", a.ceiling, "largest n the oracle will attempt");
  cmd->add_option("--config", a.config, "JSON config with oracle_budget, oracle_ceiling, jobs, timing");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-k domination in generalized de Bruijn and Kautz digraphs"};
  app.require_subcommand(1);
  Args a;

  auto* gamma = app.add_subcommand("gamma", "gamma_k of one instance");
  add_common(gamma, a, true);
  add_oracle(gamma, a);

  auto* sweep = app.add_subcommand("sweep", "classify every instance of a parameter grid");
  add_common(sweep, a, true);
  add_oracle(sweep, a);
  sweep->add_option("--jobs", a.jobs, "worker threads");
  sweep->add_flag("--timing", a.timing, "fill the ms column with wall time");

  auto* verify = app.add_subcommand("verify", "check a candidate distance-k dominating set");
  add_common(verify, a, true);
  verify->add_option("--set", a.set, "set literal, e.g. {0,1}");

  auto* problems = app.add_subcommand("problems", "oracle search for counterexamples to the open problems");
  add_common(problems, a, true);
  add_oracle(problems, a);
  problems->add_option("--problem", a.problem, "P4_1 | P4_2")->required();

  auto* exporter = app.add_subcommand("export", "write the digraph as an edge list or DOT");
  add_common(exporter, a, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : gdom::kExitUsage;
  }

  try {
    if (gamma->parsed()) {
      merge_positionals(a, true, false);
      require(a.family, "family");
      require(a.n, "n");
      require(a.d, "d");
      require(a.k, "k");
      const auto out = gdom::cmd_gamma(gdom::parse_family(a.family), gdom::parse_u64(a.n), gdom::parse_u64(a.d),
                                       gdom::parse_u64(a.k), run_options(a),
                                       gdom::parse_format(a.format.empty() ? "json" : a.format));
      emit(a, out.text);
      return out.exit_code;
    }
    if (sweep->parsed()) {
      merge_positionals(a, true, false);
      require(a.family, "family");
      require(a.n, "n");
      require(a.d, "d");
      require(a.k, "k");
      const auto rows = gdom::run_sweep(gdom::parse_family(a.family), gdom::parse_range(a.n),
                                        gdom::parse_range(a.d), gdom::parse_range(a.k), run_options(a));
      emit(a, gdom::render_sweep(rows, gdom::parse_format(a.format.empty() ? "csv" : a.format)));
      return gdom::kExitOk;
    }
    if (verify->parsed()) {
      merge_positionals(a, true, true);
      require(a.family, "family");
      require(a.n, "n");
      require(a.d, "d");
      require(a.k, "k");
      const auto out = gdom::cmd_verify(gdom::parse_family(a.family), gdom::parse_u64(a.n), gdom::parse_u64(a.d),
                                        gdom::parse_u64(a.k), gdom::parse_set_literal(a.set),
                                        gdom::parse_format(a.format.empty() ? "json" : a.format));
      emit(a, out.text);
      return out.exit_code;
    }
    if (problems->parsed()) {
      if (!a.positional.empty()) throw std::invalid_argument("problems takes flags only (-n, -d, -k ranges)");
      require(a.n, "n");
      require(a.d, "d");
      require(a.k, "k");
      const auto rep = gdom::run_problems(gdom::parse_problem(a.problem), gdom::parse_range(a.n),
                                          gdom::parse_range(a.d), gdom::parse_range(a.k), run_options(a));
      emit(a, gdom::render_problems(rep, gdom::parse_format(a.format.empty() ? "json" : a.format)));
      return gdom::kExitOk;
    }
    if (exporter->parsed()) {
      merge_positionals(a, false, false);
      require(a.family, "family");
      require(a.n, "n");
      require(a.d, "d");
      const auto out = gdom::cmd_export(gdom::parse_family(a.family), gdom::parse_u64(a.n), gdom::parse_u64(a.d),
                                        gdom::parse_format(a.format.empty() ? "edges" : a.format));
      emit(a, out.text);
      return out.exit_code;
    }
  } catch (const gdom::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return gdom::kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return gdom::kExitUsage;
  }
  return gdom::kExitUsage;
}
