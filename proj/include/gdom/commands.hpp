#pragma once

// The work behind each CLI subcommand, kept out of main() so the test suites
// drive exactly the code the binary runs.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"

#include "gdom/construct.hpp"
#include "gdom/digraph.hpp"
#include "gdom/domination.hpp"
#include "gdom/oracle.hpp"
#include "gdom/report.hpp"

namespace gdom {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,      // verify: set does not dominate
  kExitUsage = 2,
  kExitBracketOnly = 3,
  kExitInconclusive = 4,
  kExitInternal = 5,
};

enum class OutputFormat { Json, Csv, Table, Dot, Edges };

inline OutputFormat parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "table") return OutputFormat::Table;
  if (s == "dot") return OutputFormat::Dot;
  if (s == "edges" || s == "edge-list") return OutputFormat::Edges;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

struct CommandOutput {
  std::string text;
  int exit_code = kExitOk;
};

struct Range {
  std::uint64_t lo;
  std::uint64_t hi;
};

inline std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("not a non-negative integer: '" + std::string(s) + "'");
  return v;
}

/// "7" or "2..60".
inline Range parse_range(std::string_view s) {
  const auto dots = s.find("..");
  if (dots == std::string_view::npos) {
    const std::uint64_t v = parse_u64(s);
    return {v, v};
  }
  Range r{parse_u64(s.substr(0, dots)), parse_u64(s.substr(dots + 2))};
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + std::string(s) + "'");
  return r;
}

/// Set literal such as "{0,1}", "[3, 4]", "5 6 7" or "" (empty).
inline std::vector<Vertex> parse_set_literal(std::string_view s) {
  std::vector<Vertex> out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) out.push_back(parse_u64(token));
    token.clear();
  };
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      token.push_back(c);
    } else if (c == ',' || c == ' ' || c == ';' || c == '{' || c == '}' || c == '[' || c == ']' || c == '\t') {
      flush();
    } else {
      throw std::invalid_argument("malformed set literal '" + std::string(s) + "'");
    }
  }
  flush();
  return out;
}

struct RunOptions {
  ClassifyOptions classify;
  unsigned jobs = 1;
  bool timing = false;
};

/// Optional JSON config: {"oracle_budget": N, "oracle_ceiling": N, "jobs": N, "timing": bool}.
inline void apply_config(RunOptions& opt, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  const auto j = nlohmann::json::parse(in);
  if (j.contains("oracle_budget")) opt.classify.oracle_budget = j.at("oracle_budget").get<std::uint64_t>();
  if (j.contains("oracle_ceiling")) opt.classify.oracle_ceiling = j.at("oracle_ceiling").get<std::uint64_t>();
  if (j.contains("jobs")) opt.jobs = std::max(1U, j.at("jobs").get<unsigned>());
  if (j.contains("timing")) opt.timing = j.at("timing").get<bool>();
}

// ---------------------------------------------------------------------------
// gamma

inline int exit_code_for(const GammaResult& r) {
  if (r.exact()) return kExitOk;
  return r.method == Method::Inconclusive ? kExitInconclusive : kExitBracketOnly;
}

inline CommandOutput cmd_gamma(Family family, std::uint64_t n, std::uint64_t d, std::uint64_t k,
                               const RunOptions& opt, OutputFormat format = OutputFormat::Json) {
  if (k < 1) throw std::invalid_argument("radius k must be at least 1");
  const GammaResult r = classify(GeneralizedDigraph(family, n, d), k, opt.classify);
  const Json j = to_json(r);
  return {format == OutputFormat::Table ? render_table(j) : j.dump() + "\n", exit_code_for(r)};
}

// ---------------------------------------------------------------------------
// sweep

struct SweepRow {
  Family family;
  std::uint64_t n, d, k;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  std::optional<std::uint64_t> gamma{};
  std::string method{};
  std::optional<std::vector<Vertex>> witness{};
  std::optional<double> ms{};
  std::string error{};  // non-empty when the instance failed; method is then "Error"
};

inline SweepRow sweep_row(Family family, std::uint64_t n, std::uint64_t d, std::uint64_t k, const RunOptions& opt) {
  SweepRow row{family, n, d, k};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const GammaResult r = classify(GeneralizedDigraph(family, n, d), k, opt.classify);
    row.lower = r.bounds.lower;
    row.upper = r.bounds.upper();
    row.gamma = r.gamma;
    row.method = std::string(to_string(r.method));
    if (r.witness) row.witness = r.witness->members();
  } catch (const std::exception& e) {
    row.method = "Error";
    row.error = e.what();
  }
  if (opt.timing)
    row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

/// One row per valid (n, d, k), in lexicographic (n, d, k) order whatever the
/// number of workers.
inline std::vector<SweepRow> run_sweep(Family family, Range n, Range d, Range k, const RunOptions& opt) {
  if (k.lo < 1) throw std::invalid_argument("sweep: k range must start at 1 or above");
  if (d.lo < 2) throw std::invalid_argument("sweep: d range must start at 2 or above");
  struct Instance {
    std::uint64_t n, d, k;
  };
  std::vector<Instance> work;
  for (std::uint64_t nn = n.lo; nn <= n.hi; ++nn)
    for (std::uint64_t dd = d.lo; dd <= d.hi; ++dd)
      for (std::uint64_t kk = k.lo; kk <= k.hi; ++kk)
        if (nn >= dd) work.push_back({nn, dd, kk});

  std::vector<SweepRow> rows(work.size(), SweepRow{family, 0, 0, 0});
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < work.size();)
      rows[i] = sweep_row(family, work[i].n, work[i].d, work[i].k, opt);
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(opt.jobs, static_cast<unsigned>(work.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return rows;
}

inline constexpr std::string_view kSweepCsvHeader = "family,n,d,k,lower,upper,gamma,method,witness,ms";

inline std::string csv_line(const SweepRow& r) {
  std::ostringstream os;
  os << to_string(r.family) << ',' << r.n << ',' << r.d << ',' << r.k << ',';
  if (r.method != "Error") os << r.lower << ',' << r.upper;
  else os << ',';
  os << ',';
  if (r.gamma) os << *r.gamma;
  os << ',' << r.method << ',';
  if (r.witness) {
    for (std::size_t i = 0; i < r.witness->size(); ++i) os << (i ? ";" : "") << (*r.witness)[i];
  }
  os << ',';
  if (r.ms) os << std::fixed << std::setprecision(3) << *r.ms;
  return os.str();
}

inline Json to_json(const SweepRow& r) {
  Json j{{"family", to_string(r.family)}, {"n", r.n}, {"d", r.d}, {"k", r.k}};
  if (r.method == "Error") {
    j["lower"] = nullptr;
    j["upper"] = nullptr;
  } else {
    j["lower"] = r.lower;
    j["upper"] = r.upper;
  }
  j["gamma"] = r.gamma ? Json(*r.gamma) : Json(nullptr);
  j["method"] = r.method;
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  j["ms"] = r.ms ? Json(*r.ms) : Json(nullptr);
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

inline std::string render_sweep(const std::vector<SweepRow>& rows, OutputFormat format) {
  std::string out;
  if (format == OutputFormat::Csv) {
    out += std::string(kSweepCsvHeader) + "\n";
    for (const auto& r : rows) out += csv_line(r) + "\n";
  } else {
    for (const auto& r : rows) out += to_json(r).dump() + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// verify

inline CommandOutput cmd_verify(Family family, std::uint64_t n, std::uint64_t d, std::uint64_t k,
                                const std::vector<Vertex>& members, OutputFormat format = OutputFormat::Json) {
  const GeneralizedDigraph g(family, n, d);
  for (Vertex v : members)
    if (v >= n) throw std::invalid_argument("set member " + std::to_string(v) + " outside [0, n)");
  const DominationCertificate c = verify(g, VertexSet::from_members(n, members), k);
  const Json j = to_json(c);
  return {format == OutputFormat::Table ? render_table(j) : j.dump() + "\n", c.valid ? kExitOk : kExitInvalid};
}

// ---------------------------------------------------------------------------
// problems

enum class Problem { NecessityOfGcdCondition, KautzUpperWhenLowerFails };

inline std::string_view to_string(Problem p) {
  return p == Problem::NecessityOfGcdCondition ? "P4_1" : "P4_2";
}

inline Problem parse_problem(std::string_view s) {
  if (s == "P4_1" || s == "4.1" || s == "p4_1") return Problem::NecessityOfGcdCondition;
  if (s == "P4_2" || s == "4.2" || s == "p4_2") return Problem::KautzUpperWhenLowerFails;
  throw std::invalid_argument("unknown problem '" + std::string(s) + "' (expected P4_1|P4_2)");
}

enum class Verdict { Consistent, Counterexample, Inconclusive };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct ProblemRow {
  std::uint64_t n, d, k;
  std::uint64_t lower;
  std::uint64_t predicted;         // P4_1: L; P4_2: ceil(n / (d^(k-1) + d^k))
  std::optional<std::uint64_t> gamma;
  bool condition;                  // P4_1: gcd condition fires; P4_2: Kautz prefix condition fires
  bool applicable;                 // instance satisfies the problem's hypothesis
  Verdict verdict;
  std::optional<DominationCertificate> certificate;
};

struct ProblemReport {
  Problem problem;
  std::vector<ProblemRow> rows;
  std::size_t consistent = 0;
  std::size_t counterexamples = 0;
  std::size_t inconclusive = 0;
};

/// Check an open problem against the oracle over a grid of instances. A row is
/// a counterexample only with a verified certificate attached.
inline ProblemReport run_problems(Problem problem, Range n, Range d, Range k, const RunOptions& opt) {
  if (k.lo < 1 || d.lo < 2) throw std::invalid_argument("problems: need k >= 1 and d >= 2");
  ProblemReport rep{problem, {}, 0, 0, 0};
  const Family family = problem == Problem::NecessityOfGcdCondition ? Family::DeBruijn : Family::Kautz;
  for (std::uint64_t nn = n.lo; nn <= n.hi; ++nn)
    for (std::uint64_t dd = d.lo; dd <= d.hi; ++dd)
      for (std::uint64_t kk = k.lo; kk <= k.hi; ++kk) {
        if (nn < dd) continue;
        const GeneralizedDigraph g(family, nn, dd);
        const Bounds b = bounds(g, kk);
        ProblemRow row{nn, dd, kk, b.lower, 0, std::nullopt, false, false, Verdict::Inconclusive, std::nullopt};
        if (problem == Problem::NecessityOfGcdCondition) {
          row.predicted = b.lower;
          row.condition = check_thm23(nn, dd, kk).has_value();
        } else {
          row.predicted = *b.upper_kautz;
          row.condition = thm32_condition(nn, dd, kk);
        }

        std::optional<OracleResult> oracle;
        if (opt.classify.oracle_budget > 0 && nn <= opt.classify.oracle_ceiling) {
          const CoverageTable table(g, kk, opt.classify.oracle_ceiling);
          oracle = min_dominating(table, opt.classify.oracle_budget);
        }
        if (oracle && oracle->status == SearchStatus::Found) {
          row.gamma = oracle->gamma;
          bool violated = false;
          if (problem == Problem::NecessityOfGcdCondition) {
            row.applicable = oracle->gamma == b.lower;
            violated = row.applicable && !row.condition;
          } else {
            row.applicable = !row.condition;
            violated = row.applicable && oracle->gamma != row.predicted;
          }
          row.verdict = Verdict::Consistent;
          if (violated) {
            DominationCertificate cert = verify(g, *oracle->witness, kk);
            if (cert.valid && cert.set.size() == oracle->gamma) {
              row.certificate = std::move(cert);
              row.verdict = Verdict::Counterexample;
            } else {
              row.verdict = Verdict::Inconclusive;
            }
          }
        }
        switch (row.verdict) {
          case Verdict::Consistent: ++rep.consistent; break;
          case Verdict::Counterexample: ++rep.counterexamples; break;
          case Verdict::Inconclusive: ++rep.inconclusive; break;
        }
        rep.rows.push_back(std::move(row));
      }
  return rep;
}

inline Json to_json(const ProblemReport& rep) {
  Json j;
  j["problem"] = to_string(rep.problem);
  if (rep.problem == Problem::NecessityOfGcdCondition) {
    j["statement"] =
        "gamma_k(G_B(n,d)) = ceil(n / S(d,k)) only if gcd condition (i) or (ii) holds; "
        "counterexample = oracle gamma equals the lower bound while neither condition holds";
  } else {
    j["statement"] =
        "if G_K(n,d) fails the lower-bound prefix condition then gamma_k = ceil(n / (d^(k-1) + d^k)); "
        "the original statement's 'n \\ (d^(k-1) + d^k)' is read as ceiling division";
  }
  j["summary"] = {{"instances", rep.rows.size()},
                  {"consistent", rep.consistent},
                  {"counterexample", rep.counterexamples},
                  {"inconclusive", rep.inconclusive}};
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    Json row{{"n", r.n}, {"d", r.d}, {"k", r.k}, {"lower", r.lower}, {"predicted", r.predicted}};
    row["gamma"] = r.gamma ? Json(*r.gamma) : Json(nullptr);
    row["condition"] = r.condition;
    row["applicable"] = r.applicable;
    row["verdict"] = to_string(r.verdict);
    if (r.certificate) row["certificate"] = to_json(*r.certificate);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

inline std::string render_problems(const ProblemReport& rep, OutputFormat format) {
  if (format != OutputFormat::Csv) {
    const Json j = to_json(rep);
    return (format == OutputFormat::Table ? render_table(j) : j.dump(2)) + "\n";
  }
  std::ostringstream os;
  os << "# " << to_string(rep.problem) << " consistent=" << rep.consistent << " counterexample=" << rep.counterexamples
     << " inconclusive=" << rep.inconclusive << '\n';
  os << "n,d,k,lower,predicted,gamma,condition,applicable,verdict,certificate_set\n";
  for (const auto& r : rep.rows) {
    os << r.n << ',' << r.d << ',' << r.k << ',' << r.lower << ',' << r.predicted << ',';
    if (r.gamma) os << *r.gamma;
    os << ',' << (r.condition ? 1 : 0) << ',' << (r.applicable ? 1 : 0) << ',' << to_string(r.verdict) << ',';
    if (r.certificate) {
      const auto m = r.certificate->set.members();
      for (std::size_t i = 0; i < m.size(); ++i) os << (i ? ";" : "") << m[i];
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// export

inline CommandOutput cmd_export(Family family, std::uint64_t n, std::uint64_t d, OutputFormat format) {
  if (format != OutputFormat::Dot && format != OutputFormat::Edges)
    throw std::invalid_argument("export supports --format dot|edges");
  return {export_graph(GeneralizedDigraph(family, n, d),
                       format == OutputFormat::Dot ? ExportFormat::Dot : ExportFormat::EdgeList),
          kExitOk};
}

}  // namespace gdom
