#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gdom/digraph.hpp"
#include "gdom/modular.hpp"

namespace gdom {

struct DominationCertificate {
  GeneralizedDigraph graph;
  VertexSet set;
  std::uint64_t k;
  bool valid;
  VertexSet uncovered;
};

/// Check that every vertex lies within distance k of `set`.
inline DominationCertificate verify(const GeneralizedDigraph& g, const VertexSet& set, std::uint64_t k) {
  if (set.modulus() != g.n()) throw std::invalid_argument("verify: set modulus does not match n");
  Ball b = ball(g, set, k);
  VertexSet uncovered = b.covered.complement();
  const bool valid = uncovered.empty();
  return {g, set, k, valid, std::move(uncovered)};
}

/// Same question for a consecutive set, answered from the closed-form layers
/// O_0(D), ..., O_k(D). Never materializes a vertex set, so it runs at any n.
inline bool verify_consecutive(const GeneralizedDigraph& g, const ModInterval& run, std::uint64_t k) {
  if (run.modulus() != g.n()) throw std::invalid_argument("verify_consecutive: modulus mismatch");
  if (run.is_full()) return true;
  if (run.is_empty()) return false;
  std::vector<ModInterval> layers{run};
  // Layers repeat with period dividing n once lengths saturate; n steps is enough.
  const std::uint64_t depth = std::min<std::uint64_t>(k, g.n());
  for (std::uint64_t i = 0; i < depth; ++i) {
    layers.push_back(interval_out_neighborhood(g, layers.back()));
    if (layers.back().is_full()) return true;
  }
  return union_size(layers) == g.n();
}

struct Bounds {
  std::uint64_t lower;                        // ceil(n / S(d,k))
  std::uint64_t upper_naive;                  // ceil(n / d^k)
  std::optional<std::uint64_t> upper_debruijn;  // lower + 1
  std::optional<std::uint64_t> upper_kautz;     // ceil(n / (d^k + d^(k-1)))

  // Tightest applicable upper bound.
  std::uint64_t upper() const {
    std::uint64_t u = upper_naive;
    if (upper_debruijn) u = std::min(u, *upper_debruijn);
    if (upper_kautz) u = std::min(u, *upper_kautz);
    return u;
  }
};

inline Bounds bounds(const GeneralizedDigraph& g, std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("bounds: radius k must be at least 1");
  const WideInt n{g.n()};
  const WideInt dk = checked_pow(g.d(), k);
  Bounds b{};
  b.lower = ceil_div(n, geometric_sum(g.d(), k)).to_u64();
  b.upper_naive = ceil_div(n, dk).to_u64();
  if (g.family() == Family::DeBruijn) {
    b.upper_debruijn = b.lower + 1;
  } else {
    b.upper_kautz = ceil_div(n, dk + checked_pow(g.d(), k - 1)).to_u64();
  }
  return b;
}

/// The run formed by `set`, or nullopt when its members are not consecutive
/// modulo n. The empty set maps to the empty run.
inline std::optional<ModInterval> is_consecutive_set(const VertexSet& set) {
  const std::uint64_t n = set.modulus();
  if (set.empty()) return ModInterval::empty(n);
  if (set.is_full()) return ModInterval::full(n);
  std::optional<Vertex> start;
  bool several = false;
  set.for_each([&](Vertex v) {
    const Vertex prev = v == 0 ? n - 1 : v - 1;
    if (!set.contains(prev)) {
      if (start) several = true;
      start = v;
    }
  });
  if (several || !start) return std::nullopt;
  return ModInterval{*start, set.size(), n};
}

}  // namespace gdom
