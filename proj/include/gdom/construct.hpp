#pragma once

// Consecutive distance-k dominating sets from the closed-form constructions,
// the arithmetic sufficient conditions for gamma_k = ceil(n / S(d,k)), and the
// classification pipeline that combines them with the exact oracle.
//
// Every construction is checked before it is returned. A failed check is an
// InternalError, never a silent fallback.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gdom/digraph.hpp"
#include "gdom/domination.hpp"
#include "gdom/modular.hpp"
#include "gdom/oracle.hpp"

namespace gdom {

// Above this n constructions are certified by the closed-form route only.
inline constexpr std::uint64_t kSetVerifyLimit = std::uint64_t{1} << 16;
// Above this n results carry the witness as a run but not as a VertexSet.
inline constexpr std::uint64_t kWitnessSetLimit = std::uint64_t{1} << 22;

namespace detail {

struct Params {
  std::uint64_t n, d, k;
  WideInt sum;       // S(d, k)
  WideInt sum_prev;  // S(d, k-1)
  std::uint64_t lower;  // L = ceil(n / S)
  WideInt slack;     // S*L - n >= 0
};

inline Params params(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  if (d < 2 || n < d) throw std::invalid_argument("need d >= 2 and n >= d");
  if (k < 1) throw std::invalid_argument("radius k must be at least 1");
  Params p{n, d, k, geometric_sum(d, k), geometric_sum(d, k - 1), 0, 0};
  p.lower = ceil_div(WideInt{n}, p.sum).to_u64();
  p.slack = p.sum * WideInt{p.lower} - WideInt{n};
  return p;
}

inline ModInterval run_of(std::uint64_t start, std::uint64_t length, std::uint64_t n) {
  return {start % n, std::min(length, n), n};
}

inline void certify(const GeneralizedDigraph& g, const ModInterval& run, std::uint64_t k, std::string_view what) {
  const bool closed_form = verify_consecutive(g, run, k);
  bool ok = closed_form;
  if (g.n() <= kSetVerifyLimit) {
    const bool by_sets = verify(g, VertexSet::from_interval(run), k).valid;
    if (by_sets != closed_form)
      throw InternalError(std::string(what) + ": closed-form and set-expansion verification disagree on " +
                          describe(g));
    ok = by_sets;
  }
  if (!ok)
    throw InternalError(std::string(what) + ": constructed set [" + std::to_string(run.start()) + ", +" +
                        std::to_string(run.length()) + ") does not " + std::to_string(k) + "-dominate " +
                        describe(g));
}

}  // namespace detail

/// Vertex x with d*x in [x + L - (d-2), x + L] (mod n); h = x + L - d*x (mod n).
struct AnchorWitness {
  Vertex x;
  std::uint64_t h;
};

inline AnchorWitness find_anchor(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  const auto p = detail::params(n, d, k);
  for (Vertex x = 0; x < n; ++x) {
    const std::uint64_t lo = reduce(static_cast<__int128>(x) + p.lower - (static_cast<__int128>(d) - 2), n);
    const ModInterval window{lo, d - 1, n};
    const std::uint64_t dx = mul_mod(d % n, x, n);
    if (window.contains(dx)) return {x, sub_mod(add_mod(x, p.lower, n), dx, n)};
  }
  throw InternalError("no anchor vertex exists for G_B(" + std::to_string(n) + "," + std::to_string(d) + ")");
}

/// {x, ..., x + L} from the anchor x: a consecutive k-dominating set of size L + 1.
inline ModInterval build_thm21_set(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  const auto p = detail::params(n, d, k);
  const AnchorWitness a = find_anchor(n, d, k);
  ModInterval run = detail::run_of(a.x, p.lower + 1, n);
  detail::certify(GeneralizedDigraph(Family::DeBruijn, n, d), run, k, "two-value construction");
  return run;
}

struct CongruenceWitness {
  Vertex x;
  std::uint64_t h;
  ModInterval run;  // {x, ..., x + L - 1}
};

/// Smallest h (then smallest x) with (d-1)x ≡ L - h (mod n) and
/// S(d,k-1)*h <= S(d,k)*L - n. The run of L vertices from x is returned
/// certified.
inline std::optional<CongruenceWitness> thm22_witness(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  const auto p = detail::params(n, d, k);
  const std::uint64_t h_max = (p.slack / p.sum_prev).to_u64();
  for (std::uint64_t h = 0; h <= h_max; ++h) {
    const std::uint64_t rhs = reduce(static_cast<__int128>(p.lower) - static_cast<__int128>(h), n);
    const auto xs = solve_linear_congruence(static_cast<std::int64_t>(d - 1), static_cast<std::int64_t>(rhs), n);
    if (xs.empty()) continue;
    CongruenceWitness w{xs.front(), h, detail::run_of(xs.front(), p.lower, n)};
    detail::certify(GeneralizedDigraph(Family::DeBruijn, n, d), w.run, k, "congruence construction");
    return w;
  }
  return std::nullopt;
}

enum class GcdCondition { I, II };

inline std::string_view to_string(GcdCondition c) { return c == GcdCondition::I ? "i" : "ii"; }

// S | n and gcd(d-1, n) | n/S.
inline bool thm23_condition_i(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  const auto p = detail::params(n, d, k);
  const std::uint64_t r = std::gcd(d - 1, n);
  if (WideInt{n} % p.sum != WideInt{0}) return false;
  return (WideInt{n} / p.sum).to_u64() % r == 0;
}

// q = L mod gcd(d-1, n) with S(d,k-1)*q <= S*L - n.
inline bool thm23_condition_ii(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  const auto p = detail::params(n, d, k);
  const std::uint64_t r = std::gcd(d - 1, n);
  const std::uint64_t q = p.lower % r;
  return WideInt{q} * p.sum_prev <= p.slack;
}

inline std::optional<GcdCondition> check_thm23(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  std::optional<GcdCondition> tag;
  if (thm23_condition_i(n, d, k))
    tag = GcdCondition::I;
  else if (thm23_condition_ii(n, d, k))
    tag = GcdCondition::II;
  if (tag && !thm22_witness(n, d, k))
    throw InternalError("gcd condition (" + std::string(to_string(*tag)) +
                        ") holds but the congruence has no admissible solution");
  return tag;
}

/// n = p*S + q with p >= 1 and 1 <= q <= min(1 + 2*S(d,k-1), S - 1).
inline bool check_thm24(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  const auto p = detail::params(n, d, k);
  const WideInt whole = WideInt{n} / p.sum;
  const WideInt rem = WideInt{n} % p.sum;
  const WideInt cap = std::min(WideInt{1} + WideInt{2} * p.sum_prev, p.sum - WideInt{1});
  return whole >= WideInt{1} && rem >= WideInt{1} && rem <= cap;
}

/// {x, ..., x + L - 1} from the anchor x; certified. Call when check_thm24 holds.
inline ModInterval build_thm24_set(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  const auto p = detail::params(n, d, k);
  const AnchorWitness a = find_anchor(n, d, k);
  ModInterval run = detail::run_of(a.x, p.lower, n);
  detail::certify(GeneralizedDigraph(Family::DeBruijn, n, d), run, k, "residue-window construction");
  return run;
}

struct PowerWitness {
  std::uint64_t gamma;  // ceil(d^m / S(d,k))
  Vertex x;
  std::uint64_t h;
  ModInterval run;
  // Whether the power sum built from m = i*k + l (Euclidean division) is a
  // valid congruence solution. When it is not, x comes from the remainder
  // chain d^e = S*(d-1)*d^(e-k-1) + d^(e-k-1) instead.
  bool euclidean_form_holds;
};

namespace detail {

// sum_{t=1}^{terms} d^(m - t*(k+1)); nullopt if an exponent goes negative.
inline std::optional<std::uint64_t> power_sum(std::uint64_t d, std::uint64_t m, std::uint64_t k, std::uint64_t terms,
                                              std::uint64_t n) {
  std::uint64_t x = 0;
  for (std::uint64_t t = 1; t <= terms; ++t) {
    const __int128 e = static_cast<__int128>(m) - static_cast<__int128>(t) * (k + 1);
    if (e < 0) return std::nullopt;
    x = add_mod(x, checked_pow(d, static_cast<std::uint64_t>(e)).to_u64() % n, n);
  }
  return x;
}

}  // namespace detail

/// gamma_k of the de Bruijn digraph B(d, m) = G_B(d^m, d), with the
/// power-sum witness for the congruence at h = 1.
inline PowerWitness gamma_debruijn_power(std::uint64_t d, std::uint64_t m, std::uint64_t k) {
  if (m < 1) throw std::invalid_argument("exponent m must be at least 1");
  const WideInt big_n = checked_pow(d, m);
  if (big_n > WideInt{kMaxModulus}) throw RangeError("d^m too large");
  const std::uint64_t n = big_n.to_u64();
  const auto p = detail::params(n, d, k);
  const GeneralizedDigraph g(Family::DeBruijn, n, d);

  // The companion congruence route must agree.
  const auto general = thm22_witness(n, d, k);
  if (!general) throw InternalError("congruence construction fails on a de Bruijn digraph B(d,m)");

  if (m <= k) {
    if (p.lower != 1) throw InternalError("B(d,m) with m <= k must have lower bound 1");
    return {1, general->x, general->h, general->run, true};
  }

  auto satisfies = [&](std::uint64_t x) {
    // (d-1)x ≡ L - 1 (mod n), the h = 1 case; S(d,k-1) <= slack is its side condition.
    return mul_mod(d - 1, x, n) == reduce(static_cast<__int128>(p.lower) - 1, n) && p.sum_prev <= p.slack;
  };

  const std::uint64_t i = m / k;
  const std::uint64_t l = m % k;
  const auto stated = detail::power_sum(d, m, k, l < i ? i - 1 : i, n);
  const bool stated_ok = stated && satisfies(*stated) && verify_consecutive(g, detail::run_of(*stated, p.lower, n), k);

  const std::uint64_t chain_terms = (m - k + k) / (k + 1);  // ceil((m - k) / (k + 1))
  const auto chain = detail::power_sum(d, m, k, chain_terms, n);
  if (!chain || !satisfies(*chain)) throw InternalError("remainder-chain power sum fails the h = 1 congruence");

  const Vertex x = stated_ok ? *stated : *chain;
  ModInterval run = detail::run_of(x, p.lower, n);
  detail::certify(g, run, k, "de Bruijn power construction");
  return {p.lower, x, 1, run, stated_ok};
}

/// {0, ..., ceil(n / (d^k + d^(k-1))) - 1} in G_K(n, d); certified.
inline ModInterval build_thm31_set(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("radius k must be at least 1");
  const GeneralizedDigraph g(Family::Kautz, n, d);
  const std::uint64_t size = ceil_div(WideInt{n}, checked_pow(d, k) + checked_pow(d, k - 1)).to_u64();
  ModInterval run = detail::run_of(0, size, n);
  detail::certify(g, run, k, "Kautz prefix construction");
  return run;
}

// (d^(k-1) + d^k) L >= n, or d^(k-1) L >= ceil(n / (d+1)).
inline bool thm32_condition(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  const auto p = detail::params(n, d, k);
  const WideInt prev = checked_pow(d, k - 1);
  const WideInt lower{p.lower};
  if ((prev + checked_pow(d, k)) * lower >= WideInt{n}) return true;
  return prev * lower >= ceil_div(WideInt{n}, WideInt{d + 1});
}

/// {0, ..., L - 1} in G_K(n, d); certified. Call when thm32_condition holds.
inline ModInterval build_thm32_set(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  const auto p = detail::params(n, d, k);
  ModInterval run = detail::run_of(0, p.lower, n);
  detail::certify(GeneralizedDigraph(Family::Kautz, n, d), run, k, "Kautz lower-bound construction");
  return run;
}

inline bool check_thm32(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
  if (!thm32_condition(n, d, k)) return false;
  build_thm32_set(n, d, k);
  return true;
}

// ---------------------------------------------------------------------------
// Classification

enum class Method {
  Thm2_2,
  Cor2_2,
  Cor2_3,
  Thm2_3_i,
  Thm2_3_ii,
  Thm2_4,
  Thm3_2,
  Cor3_1,
  OracleExact,
  BracketOnly,
  Inconclusive,
};

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::Thm2_2: return "Thm2_2";
    case Method::Cor2_2: return "Cor2_2";
    case Method::Cor2_3: return "Cor2_3";
    case Method::Thm2_3_i: return "Thm2_3_i";
    case Method::Thm2_3_ii: return "Thm2_3_ii";
    case Method::Thm2_4: return "Thm2_4";
    case Method::Thm3_2: return "Thm3_2";
    case Method::Cor3_1: return "Cor3_1";
    case Method::OracleExact: return "OracleExact";
    case Method::BracketOnly: return "BracketOnly";
    case Method::Inconclusive: return "Inconclusive";
  }
  return "?";
}

// Which sufficient conditions hold for the instance. Fields that do not apply
// to the family stay empty.
struct ConditionReport {
  std::optional<bool> thm2_2;
  std::optional<bool> thm2_3_i;
  std::optional<bool> thm2_3_ii;
  std::optional<bool> thm2_4;
  std::optional<bool> thm3_2;
  std::optional<bool> cor3_1;

  bool any() const {
    for (const auto& c : {thm2_2, thm2_3_i, thm2_3_ii, thm2_4, thm3_2, cor3_1})
      if (c.value_or(false)) return true;
    return false;
  }
};

struct ClassifyOptions {
  std::uint64_t oracle_budget = kDefaultNodeBudget;  // 0 disables the oracle
  std::uint64_t oracle_ceiling = kDefaultOracleCeiling;
};

struct GammaResult {
  GeneralizedDigraph graph;
  std::uint64_t k;
  Bounds bounds;
  std::optional<std::uint64_t> gamma;
  std::uint64_t bracket_lo;
  std::uint64_t bracket_hi;
  Method method;
  // For exact results: a minimum set. Otherwise: the best upper-bound set.
  std::optional<ModInterval> witness_run;
  std::optional<VertexSet> witness;
  ConditionReport conditions;
  std::uint64_t oracle_nodes = 0;

  bool exact() const { return gamma.has_value(); }
};

namespace detail {

inline bool is_power_of(std::uint64_t n, std::uint64_t d, std::uint64_t& m) {
  m = 0;
  while (n % d == 0) {
    n /= d;
    ++m;
  }
  return n == 1 && m >= 1;
}

inline void attach(GammaResult& r, const ModInterval& run) {
  r.witness_run = run;
  if (r.graph.n() <= kWitnessSetLimit) r.witness = VertexSet::from_interval(run);
}

inline void set_exact(GammaResult& r, std::uint64_t gamma, Method m) {
  r.gamma = gamma;
  r.bracket_lo = r.bracket_hi = gamma;
  r.method = m;
}

inline bool oracle_enabled(const GeneralizedDigraph& g, const ClassifyOptions& opt) {
  return opt.oracle_budget > 0 && g.n() <= opt.oracle_ceiling;
}

inline GammaResult classify_debruijn(const GeneralizedDigraph& g, std::uint64_t k, const ClassifyOptions& opt) {
  const std::uint64_t n = g.n();
  const std::uint64_t d = g.d();
  GammaResult r{g, k, bounds(g, k), std::nullopt, 0, 0, Method::BracketOnly, std::nullopt, std::nullopt, {}, 0};
  const std::uint64_t L = r.bounds.lower;
  r.bracket_lo = L;
  r.bracket_hi = r.bounds.upper();

  const auto w22 = thm22_witness(n, d, k);
  r.conditions.thm2_2 = w22.has_value();
  r.conditions.thm2_3_i = thm23_condition_i(n, d, k);
  r.conditions.thm2_3_ii = thm23_condition_ii(n, d, k);
  r.conditions.thm2_4 = check_thm24(n, d, k);
  check_thm23(n, d, k);  // throws if a gcd condition holds without a congruence witness

  if (w22) {
    std::uint64_t m = 0;
    if (is_power_of(n, d, m)) {
      const PowerWitness pw = gamma_debruijn_power(d, m, k);
      attach(r, pw.run);
      set_exact(r, pw.gamma, Method::Cor2_3);
    } else {
      attach(r, w22->run);
      set_exact(r, L, WideInt{n} % geometric_sum(d, k) == WideInt{0} ? Method::Cor2_2 : Method::Thm2_2);
    }
    return r;
  }
  if (*r.conditions.thm2_3_i || *r.conditions.thm2_3_ii)
    throw InternalError("gcd condition fired without a congruence witness");
  if (*r.conditions.thm2_4) {
    attach(r, build_thm24_set(n, d, k));
    set_exact(r, L, Method::Thm2_4);
    return r;
  }

  const ModInterval upper_run = build_thm21_set(n, d, k);
  if (!oracle_enabled(g, opt)) {
    attach(r, upper_run);
    return r;
  }
  const CoverageTable table(g, k, opt.oracle_ceiling);
  SearchOutcome o = exists_dominating_of_size(table, L, opt.oracle_budget);
  r.oracle_nodes = o.nodes;
  switch (o.status) {
    case SearchStatus::Found:
      r.witness = std::move(o.witness);
      r.witness_run = is_consecutive_set(*r.witness);
      if (r.witness_run && r.witness_run->is_empty()) r.witness_run.reset();
      set_exact(r, L, Method::OracleExact);
      break;
    case SearchStatus::Absent:
      attach(r, upper_run);
      set_exact(r, upper_run.length(), Method::OracleExact);
      break;
    case SearchStatus::Inconclusive:
      attach(r, upper_run);
      r.method = Method::Inconclusive;
      break;
  }
  return r;
}

inline GammaResult classify_kautz(const GeneralizedDigraph& g, std::uint64_t k, const ClassifyOptions& opt) {
  const std::uint64_t n = g.n();
  const std::uint64_t d = g.d();
  GammaResult r{g, k, bounds(g, k), std::nullopt, 0, 0, Method::BracketOnly, std::nullopt, std::nullopt, {}, 0};
  const std::uint64_t L = r.bounds.lower;
  r.bracket_lo = L;
  r.bracket_hi = r.bounds.upper();

  r.conditions.cor3_1 = (k == 1);
  r.conditions.thm3_2 = thm32_condition(n, d, k);

  if (k == 1) {
    attach(r, build_thm31_set(n, d, k));
    set_exact(r, L, Method::Cor3_1);
    return r;
  }
  if (*r.conditions.thm3_2) {
    attach(r, build_thm32_set(n, d, k));
    set_exact(r, L, Method::Thm3_2);
    return r;
  }

  const ModInterval upper_run = build_thm31_set(n, d, k);
  if (!oracle_enabled(g, opt)) {
    attach(r, upper_run);
    return r;
  }
  const CoverageTable table(g, k, opt.oracle_ceiling);
  for (std::uint64_t s = L; s < upper_run.length(); ++s) {
    SearchOutcome o = exists_dominating_of_size(table, s, opt.oracle_budget);
    r.oracle_nodes += o.nodes;
    if (o.status == SearchStatus::Found) {
      r.witness = std::move(o.witness);
      r.witness_run = is_consecutive_set(*r.witness);
      set_exact(r, s, Method::OracleExact);
      return r;
    }
    if (o.status == SearchStatus::Inconclusive) {
      attach(r, upper_run);
      r.bracket_lo = s;
      r.method = Method::Inconclusive;
      return r;
    }
  }
  attach(r, upper_run);
  set_exact(r, upper_run.length(), Method::OracleExact);
  return r;
}

}  // namespace detail

/// gamma_k(G), or a bracket when neither a sufficient condition nor the oracle
/// settles it.
///
/// de Bruijn precedence: congruence witness (reported as Cor2_3 when n = d^m,
/// Cor2_2 when S | n, Thm2_2 otherwise), then the gcd conditions, then the
/// residue-window condition, then the oracle on size L, then a bracket
/// [L, L+1].
/// Kautz precedence: k = 1, then the lower-bound prefix condition, then the
/// oracle on sizes L .. U-1, then a bracket [L, U] with U = ceil(n/(d^k+d^(k-1))).
inline GammaResult classify(const GeneralizedDigraph& g, std::uint64_t k, const ClassifyOptions& opt = {}) {
  if (k < 1) throw std::invalid_argument("classify: radius k must be at least 1");
  GammaResult r = g.family() == Family::DeBruijn ? detail::classify_debruijn(g, k, opt)
                                                 : detail::classify_kautz(g, k, opt);
  if (r.exact() && r.witness) {
    if (r.witness->size() != *r.gamma) throw InternalError("witness size differs from gamma");
    if (!verify(g, *r.witness, k).valid) throw InternalError("classification witness does not dominate");
  }
  return r;
}

}  // namespace gdom
