#pragma once

// Exact minimum distance-k dominating sets for small instances, by
// branch-and-bound set cover over precomputed k-balls.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gdom/digraph.hpp"
#include "gdom/domination.hpp"

namespace gdom {

inline constexpr std::uint64_t kDefaultOracleCeiling = 5000;
inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// B_k(v) for every vertex v, as bitmaps, plus the inverse relation.
class CoverageTable {
 public:
  CoverageTable(const GeneralizedDigraph& g, std::uint64_t k, std::uint64_t ceiling = kDefaultOracleCeiling)
      : graph_(g), k_(k) {
    if (g.n() > ceiling)
      throw RangeError("coverage table refused: n = " + std::to_string(g.n()) + " exceeds ceiling " +
                       std::to_string(ceiling));
    const std::size_t n = static_cast<std::size_t>(g.n());
    words_ = (n + 63) / 64;
    bits_.assign(n * words_, 0);
    sizes_.resize(n);
    coverers_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      VertexSet covered = ball(g, VertexSet(g.n(), {v}), k).covered;
      auto src = covered.words();
      std::copy(src.begin(), src.end(), bits_.begin() + static_cast<std::ptrdiff_t>(v * words_));
      sizes_[v] = covered.size();
      covered.for_each([&](Vertex t) { coverers_[t].push_back(v); });
    }
    max_ball_ = *std::max_element(sizes_.begin(), sizes_.end());
  }

  const GeneralizedDigraph& graph() const { return graph_; }
  std::uint64_t radius() const { return k_; }
  std::uint64_t n() const { return graph_.n(); }
  std::size_t words() const { return words_; }

  std::span<const std::uint64_t> ball_words(Vertex v) const {
    return {bits_.data() + v * words_, words_};
  }
  bool covers(Vertex u, Vertex t) const { return ((ball_words(u)[t >> 6] >> (t & 63)) & 1U) != 0; }
  std::uint64_t ball_size(Vertex v) const { return sizes_[v]; }
  std::uint64_t max_ball_size() const { return max_ball_; }

  VertexSet ball_of(Vertex v) const {
    VertexSet s(n());
    for (Vertex t = 0; t < n(); ++t)
      if (covers(v, t)) s.insert(t);
    return s;
  }

  // Vertices whose k-ball contains t, ascending.
  const std::vector<Vertex>& coverers(Vertex t) const { return coverers_[t]; }

 private:
  GeneralizedDigraph graph_;
  std::uint64_t k_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::vector<Vertex>> coverers_;
  std::uint64_t max_ball_ = 0;
};

enum class SearchStatus { Found, Absent, Inconclusive };

struct SearchOutcome {
  SearchStatus status;
  std::optional<VertexSet> witness;
  std::uint64_t nodes = 0;
};

namespace detail {

class CoverSearch {
 public:
  CoverSearch(const CoverageTable& table, std::uint64_t budget)
      : t_(table), budget_(budget), forbidden_(table.n(), false) {}

  SearchOutcome run(std::uint64_t picks) {
    std::vector<std::uint64_t> covered(t_.words(), 0);
    bool found = budget_ > 0 && descend(covered, picks);
    SearchOutcome out{SearchStatus::Absent, std::nullopt, nodes_};
    if (found) {
      out.status = SearchStatus::Found;
      std::sort(chosen_.begin(), chosen_.end());
      out.witness = VertexSet::from_members(t_.n(), chosen_);
    } else if (exhausted_ || budget_ == 0) {
      out.status = SearchStatus::Inconclusive;
    }
    return out;
  }

 private:
  std::uint64_t popcount_or(const std::vector<std::uint64_t>& covered) const {
    std::uint64_t c = 0;
    for (std::uint64_t w : covered) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

  std::optional<Vertex> first_uncovered(const std::vector<std::uint64_t>& covered) const {
    const std::uint64_t n = t_.n();
    for (std::size_t i = 0; i < covered.size(); ++i) {
      std::uint64_t free = ~covered[i];
      if (free == 0) continue;
      const Vertex v = i * 64 + static_cast<std::size_t>(std::countr_zero(free));
      return v < n ? std::optional<Vertex>(v) : std::nullopt;
    }
    return std::nullopt;
  }

  // Largest number of still-uncovered vertices any allowed pick can add.
  std::uint64_t best_gain(const std::vector<std::uint64_t>& covered) const {
    std::uint64_t best = 0;
    for (Vertex u = 0; u < t_.n(); ++u) {
      if (forbidden_[u] || t_.ball_size(u) <= best) continue;
      auto ball = t_.ball_words(u);
      std::uint64_t gain = 0;
      for (std::size_t i = 0; i < covered.size(); ++i)
        gain += static_cast<std::uint64_t>(std::popcount(ball[i] & ~covered[i]));
      best = std::max(best, gain);
    }
    return best;
  }

  bool descend(const std::vector<std::uint64_t>& covered, std::uint64_t picks) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const auto target = first_uncovered(covered);
    if (!target) return true;
    if (picks == 0) return false;
    const std::uint64_t uncovered = t_.n() - popcount_or(covered);
    if (picks * best_gain(covered) < uncovered) return false;

    // Once a coverer has been tried for this target, sibling branches exclude
    // it: any cover containing it was already explored.
    std::vector<Vertex> excluded;
    bool found = false;
    std::vector<std::uint64_t> next(covered.size());
    for (Vertex u : t_.coverers(*target)) {
      if (forbidden_[u]) continue;
      auto ball = t_.ball_words(u);
      for (std::size_t i = 0; i < covered.size(); ++i) next[i] = covered[i] | ball[i];
      chosen_.push_back(u);
      if (descend(next, picks - 1)) {
        found = true;
        break;
      }
      chosen_.pop_back();
      if (exhausted_) break;
      forbidden_[u] = true;
      excluded.push_back(u);
    }
    for (Vertex u : excluded) forbidden_[u] = false;
    return found;
  }

  const CoverageTable& t_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<bool> forbidden_;
  std::vector<Vertex> chosen_;
};

}  // namespace detail

/// Decide whether some set of at most s vertices k-dominates the graph.
/// Absent is a proof of nonexistence; Inconclusive means the node budget ran
/// out first.
inline SearchOutcome exists_dominating_of_size(const CoverageTable& table, std::uint64_t s,
                                               std::uint64_t node_budget = kDefaultNodeBudget) {
  if (s < 1) throw std::invalid_argument("exists_dominating_of_size: s must be at least 1");
  detail::CoverSearch search(table, node_budget);
  SearchOutcome out = search.run(std::min(s, table.n()));
  if (out.status == SearchStatus::Found) {
    // Pad to exactly s with the smallest unused vertices.
    VertexSet& w = *out.witness;
    for (Vertex v = 0; w.size() < std::min(s, table.n()); ++v) w.insert(v);
    if (!verify(table.graph(), w, table.radius()).valid)
      throw InternalError("oracle returned a set that does not dominate");
  }
  return out;
}

struct OracleResult {
  SearchStatus status;  // Found: gamma and witness are exact
  std::uint64_t gamma;  // on Inconclusive: the smallest size not yet refuted
  std::optional<VertexSet> witness;
  std::uint64_t nodes = 0;
};

/// gamma_k by searching sizes upward from the counting lower bound.
inline OracleResult min_dominating(const CoverageTable& table, std::uint64_t node_budget = kDefaultNodeBudget,
                                   std::optional<std::uint64_t> start = std::nullopt) {
  const GeneralizedDigraph& g = table.graph();
  std::uint64_t s = start.value_or(table.radius() >= 1 ? bounds(g, table.radius()).lower : g.n());
  s = std::max<std::uint64_t>(s, 1);
  std::uint64_t nodes = 0;
  for (;; ++s) {
    SearchOutcome o = exists_dominating_of_size(table, s, node_budget);
    nodes += o.nodes;
    if (o.status == SearchStatus::Found) return {SearchStatus::Found, s, std::move(o.witness), nodes};
    if (o.status == SearchStatus::Inconclusive) return {SearchStatus::Inconclusive, s, std::nullopt, nodes};
  }
}

}  // namespace gdom
