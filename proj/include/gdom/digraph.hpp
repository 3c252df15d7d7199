#pragma once

// Implicit generalized de Bruijn and Kautz digraphs. Arcs are evaluated from
// the defining congruences; nothing is stored per vertex.
//
//   de Bruijn G_B(n, d):  x -> d*x + i      (mod n),  0 <= i <= d-1
//   Kautz     G_K(n, d):  x -> -d*x - i     (mod n),  1 <= i <= d

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gdom/modular.hpp"

namespace gdom {

enum class Family { DeBruijn, Kautz };

inline std::string_view to_string(Family f) {
  return f == Family::DeBruijn ? "debruijn" : "kautz";
}

inline Family parse_family(std::string_view s) {
  if (s == "debruijn" || s == "de-bruijn" || s == "B") return Family::DeBruijn;
  if (s == "kautz" || s == "K") return Family::Kautz;
  throw std::invalid_argument("unknown family '" + std::string(s) + "' (expected debruijn|kautz)");
}

class GeneralizedDigraph {
 public:
  GeneralizedDigraph(Family family, std::uint64_t n, std::uint64_t d) : family_(family), n_(n), d_(d) {
    if (d < 2) throw std::invalid_argument("degree d must be at least 2");
    if (n < d) throw std::invalid_argument("vertex count n must be at least d");
    if (n > kMaxModulus) throw RangeError("vertex count n is too large");
  }

  Family family() const { return family_; }
  std::uint64_t n() const { return n_; }
  std::uint64_t d() const { return d_; }

  // Target of the out-arc in slot `slot` (0-based, slot < d).
  Vertex arc_target(Vertex v, std::uint64_t slot) const {
    if (family_ == Family::DeBruijn) return add_mod(mul_mod(d_ % n_, v, n_), slot, n_);
    // -d*v - (slot + 1)
    return sub_mod(0, add_mod(mul_mod(d_ % n_, v, n_), slot + 1, n_), n_);
  }

  friend bool operator==(const GeneralizedDigraph&, const GeneralizedDigraph&) = default;

 private:
  Family family_;
  std::uint64_t n_;
  std::uint64_t d_;
};

inline std::string describe(const GeneralizedDigraph& g) {
  std::ostringstream os;
  os << (g.family() == Family::DeBruijn ? "G_B(" : "G_K(") << g.n() << "," << g.d() << ")";
  return os.str();
}

// Largest n for which VertexSet will allocate a dense bitmap.
inline constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 28;

/// Subset of {0, ..., n-1} backed by a bitmap, with a cached cardinality.
class VertexSet {
 public:
  explicit VertexSet(std::uint64_t modulus) : modulus_(modulus) {
    if (modulus == 0) throw std::invalid_argument("VertexSet: modulus must be positive");
    if (modulus > kDenseLimit) throw RangeError("VertexSet: n too large for a dense set");
    words_.assign(static_cast<std::size_t>((modulus + 63) / 64), 0);
  }

  VertexSet(std::uint64_t modulus, std::initializer_list<Vertex> members) : VertexSet(modulus) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet from_members(std::uint64_t modulus, const std::vector<Vertex>& members) {
    VertexSet s(modulus);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  static VertexSet from_interval(const ModInterval& run) {
    VertexSet s(run.modulus());
    s.insert_interval(run);
    return s;
  }

  static VertexSet all(std::uint64_t modulus) {
    return from_interval(ModInterval::full(modulus));
  }

  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool is_full() const { return count_ == modulus_; }

  bool contains(Vertex v) const {
    return v < modulus_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }

  void insert(Vertex v) {
    check(v);
    std::uint64_t& w = words_[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if ((w & bit) == 0) {
      w |= bit;
      ++count_;
    }
  }

  void erase(Vertex v) {
    check(v);
    std::uint64_t& w = words_[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if ((w & bit) != 0) {
      w &= ~bit;
      --count_;
    }
  }

  void insert_interval(const ModInterval& run) {
    if (run.modulus() != modulus_) throw std::invalid_argument("VertexSet: modulus mismatch");
    Vertex v = run.start();
    for (std::uint64_t i = 0; i < run.length(); ++i) {
      insert(v);
      if (++v == modulus_) v = 0;
    }
  }

  VertexSet& operator|=(const VertexSet& o) {
    same_modulus(o);
    count_ = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= o.words_[i];
      count_ += static_cast<std::uint64_t>(std::popcount(words_[i]));
    }
    return *this;
  }

  // Members of *this not in o.
  VertexSet minus(const VertexSet& o) const {
    same_modulus(o);
    VertexSet r(modulus_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      r.words_[i] = words_[i] & ~o.words_[i];
      r.count_ += static_cast<std::uint64_t>(std::popcount(r.words_[i]));
    }
    return r;
  }

  bool intersects(const VertexSet& o) const {
    same_modulus(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    same_modulus(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  VertexSet complement() const { return all(modulus_).minus(*this); }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1)
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count_));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.modulus_ == b.modulus_ && a.words_ == b.words_;
  }

 private:
  void check(Vertex v) const {
    if (v >= modulus_) throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, n)");
  }
  void same_modulus(const VertexSet& o) const {
    if (o.modulus_ != modulus_) throw std::invalid_argument("VertexSet: modulus mismatch");
  }

  std::uint64_t modulus_;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  s.for_each([&](Vertex v) {
    os << (first ? "" : ",") << v;
    first = false;
  });
  return os << '}';
}

/// O(v) as a run of d residues.
inline ModInterval out_neighbors(const GeneralizedDigraph& g, Vertex v) {
  if (v >= g.n()) throw std::out_of_range("out_neighbors: vertex outside [0, n)");
  const std::uint64_t n = g.n();
  if (g.d() >= n) return ModInterval::full(n);
  return {g.arc_target(v, g.family() == Family::DeBruijn ? 0 : g.d() - 1), g.d(), n};
}

/// O(D) for a run D. The Kautz map reverses orientation: the image of the last
/// element of D is the lowest part of the result.
inline ModInterval interval_out_neighborhood(const GeneralizedDigraph& g, const ModInterval& run) {
  const std::uint64_t n = g.n();
  if (run.modulus() != n) throw std::invalid_argument("interval_out_neighborhood: modulus mismatch");
  if (run.is_empty()) throw std::invalid_argument("interval_out_neighborhood: empty run");
  if (run.is_full()) return ModInterval::full(n);
  const unsigned __int128 len = static_cast<unsigned __int128>(g.d()) * run.length();
  if (len >= n) return ModInterval::full(n);
  const Vertex anchor = g.family() == Family::DeBruijn ? run.start() : run.last();
  const Vertex start = g.family() == Family::DeBruijn ? g.arc_target(anchor, 0) : g.arc_target(anchor, g.d() - 1);
  return {start, static_cast<std::uint64_t>(len), n};
}

/// O_i(D) for a run D, by folding the one-step image i times.
inline ModInterval ith_out_neighborhood_interval(const GeneralizedDigraph& g, ModInterval run, std::uint64_t i) {
  for (std::uint64_t step = 0; step < i && !run.is_full(); ++step) run = interval_out_neighborhood(g, run);
  return run;
}

/// O(S) = union of O(u) over u in S.
inline VertexSet set_out_neighborhood(const GeneralizedDigraph& g, const VertexSet& s) {
  if (s.modulus() != g.n()) throw std::invalid_argument("set_out_neighborhood: modulus mismatch");
  VertexSet out(g.n());
  s.for_each([&](Vertex u) {
    for (std::uint64_t slot = 0; slot < g.d(); ++slot) out.insert(g.arc_target(u, slot));
  });
  return out;
}

struct Ball {
  VertexSet center;
  std::uint64_t radius;
  VertexSet covered;  // O_0(center) ∪ ... ∪ O_radius(center)
};

/// Everything within directed distance k of S.
inline Ball ball(const GeneralizedDigraph& g, const VertexSet& s, std::uint64_t k) {
  Ball b{s, k, s};
  VertexSet layer = s;
  // No shortest path is longer than n - 1 arcs.
  const std::uint64_t depth = std::min<std::uint64_t>(k, g.n());
  for (std::uint64_t i = 0; i < depth && !b.covered.is_full() && !layer.empty(); ++i) {
    layer = set_out_neighborhood(g, layer);
    b.covered |= layer;
  }
  return b;
}

enum class ExportFormat { EdgeList, Dot };

inline constexpr std::uint64_t kExportArcLimit = 10'000'000;

/// Materialize the arc list. Arcs are emitted by source, then by slot; a target
/// repeated by two slots is written once.
inline std::string export_graph(const GeneralizedDigraph& g, ExportFormat format) {
  const unsigned __int128 slots = static_cast<unsigned __int128>(g.n()) * g.d();
  if (slots > kExportArcLimit)
    throw RangeError("refusing to export " + describe(g) + ": n*d exceeds " + std::to_string(kExportArcLimit));
  std::ostringstream os;
  if (format == ExportFormat::EdgeList) {
    os << "# " << to_string(g.family()) << ' ' << g.n() << ' ' << g.d() << '\n';
  } else {
    os << "digraph " << to_string(g.family()) << '_' << g.n() << '_' << g.d() << " {\n";
    for (Vertex v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
  }
  std::vector<Vertex> seen;
  for (Vertex v = 0; v < g.n(); ++v) {
    seen.clear();
    for (std::uint64_t slot = 0; slot < g.d(); ++slot) {
      const Vertex y = g.arc_target(v, slot);
      if (std::find(seen.begin(), seen.end(), y) != seen.end()) continue;
      seen.push_back(y);
      if (format == ExportFormat::EdgeList)
        os << v << '\t' << y << '\n';
      else
        os << "  " << v << " -> " << y << ";\n";
    }
  }
  if (format == ExportFormat::Dot) os << "}\n";
  return os.str();
}

}  // namespace gdom
