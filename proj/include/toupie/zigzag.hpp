#pragma once

// Algebraic Morse reduction of a based complex: zigzag path sums Gamma(x, y)
// over the Morse graph and the SDR data (p, i, h) and Morse differential
// they specialize to.
//
// The coefficient ring is a policy type with
//   using Elem; Elem zero(); Elem one(cell); bool is_zero(Elem);
//   Elem add(Elem, Elem); Elem mul(Elem, Elem); Elem neg(Elem);
//   std::optional<Elem> unit_inverse(Elem).
// one(x) is the identity acting on cell x.
// mul(a, b) is the weight of "a then b" along a path; for noncommutative
// rings this fixes how edge weights compose.

#include "toupie/error.hpp"
#include "toupie/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toupie {

template <class Ring>
class MorseReduction {
 public:
  using Elem = typename Ring::Elem;
  using Vec = std::map<std::size_t, Elem>;

  struct Cell {
    int degree = 0;
    std::vector<std::pair<std::size_t, Elem>> boundary;  // d(x) = sum c * z
    std::optional<std::size_t> partner;                  // matched cell
  };

  /// Throws Error(invalid_matching) if the matching is not an involution
  /// between adjacent degrees, a matched entry is not a unit, or the Morse
  /// graph has a cycle.
  MorseReduction(Ring ring, std::vector<Cell> cells)
      : ring_(std::move(ring)), cells_(std::move(cells)), reach_(cells_.size()) {
    validate();
  }

  const Ring& ring() const { return ring_; }
  std::size_t size() const { return cells_.size(); }
  const Cell& cell(std::size_t x) const { return cells_.at(x); }

  bool is_critical(std::size_t x) const { return !cells_.at(x).partner; }
  /// Matched with a cell one degree up.
  bool is_lower(std::size_t x) const {
    const auto& c = cells_.at(x);
    return c.partner && cells_[*c.partner].degree > c.degree;
  }
  bool is_upper(std::size_t x) const {
    return cells_.at(x).partner && !is_lower(x);
  }

  /// Entry of z in d(x).
  Elem entry(std::size_t x, std::size_t z) const {
    Elem out = ring_.zero();
    for (const auto& [y, c] : cells_.at(x).boundary)
      if (y == z) out = ring_.add(out, c);
    return out;
  }

  /// Gamma(x, y) for every y reachable from x, the trivial path included.
  const Vec& reach(std::size_t x) const {
    if (reach_[x]) return *reach_[x];
    Vec out;
    out.emplace(x, unit_of(x));
    for (const auto& [y, w] : edges(x))
      for (const auto& [z, g] : reach(y)) accumulate(out, z, ring_.mul(w, g));
    reach_[x] = std::move(out);
    return *reach_[x];
  }

  /// Gamma(x, y): weighted count of zigzag paths from x to y.
  Elem gamma(std::size_t x, std::size_t y) const {
    const Vec& r = reach(x);
    auto it = r.find(y);
    return it == r.end() ? ring_.zero() : it->second;
  }

  /// p(x): zigzag sums into critical cells of the same degree.
  Vec p(std::size_t x) const { return restrict(x, cells_.at(x).degree, true); }
  /// Zigzag sums into cells one degree up. The SDR homotopy is its negative.
  Vec gamma_up(std::size_t x) const {
    return restrict(x, cells_.at(x).degree + 1, false);
  }
  /// h(x) with id - ip = dh + hd.
  Vec h(std::size_t x) const {
    Vec out;
    for (const auto& [z, g] : gamma_up(x)) out.emplace(z, ring_.neg(g));
    return out;
  }
  /// i(x) for a critical x: zigzag sums into cells of the same degree.
  Vec i(std::size_t x) const { return restrict(x, cells_.at(x).degree, false); }
  /// Morse differential of a critical cell.
  Vec morse_differential(std::size_t x) const {
    return restrict(x, cells_.at(x).degree - 1, true);
  }

  /// d applied to a vector of cells.
  Vec d(const Vec& v) const {
    Vec out;
    for (const auto& [x, a] : v)
      for (const auto& [z, c] : cells_.at(x).boundary)
        accumulate(out, z, ring_.mul(a, c));
    return out;
  }

  void accumulate(Vec& v, std::size_t z, const Elem& c) const {
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = v.emplace(z, c);
    if (inserted) return;
    it->second = ring_.add(it->second, c);
    if (ring_.is_zero(it->second)) v.erase(it);
  }

 private:
  Elem unit_of(std::size_t x) const { return ring_.one(x); }

  /// Outgoing Morse-graph edges: thick ones along d except the matched
  /// entry, and a dotted one x -> x+ of weight -c^{-1} for a lower x.
  std::vector<std::pair<std::size_t, Elem>> edges(std::size_t x) const {
    std::vector<std::pair<std::size_t, Elem>> out;
    const Cell& c = cells_[x];
    for (const auto& [z, w] : c.boundary) {
      if (is_upper(x) && z == *c.partner) continue;
      if (!ring_.is_zero(w)) out.emplace_back(z, w);
    }
    if (is_lower(x)) {
      auto inv = ring_.unit_inverse(entry(*c.partner, x));
      out.emplace_back(*c.partner, ring_.neg(*inv));
    }
    return out;
  }

  Vec restrict(std::size_t x, int degree, bool critical_only) const {
    Vec out;
    for (const auto& [z, g] : reach(x))
      if (cells_[z].degree == degree && (!critical_only || is_critical(z)))
        out.emplace(z, g);
    return out;
  }

  void validate() const {
    const std::size_t n = cells_.size();
    for (std::size_t x = 0; x < n; ++x) {
      const Cell& c = cells_[x];
      for (const auto& [z, w] : c.boundary)
        if (z >= n) fail("boundary of cell " + std::to_string(x) + " leaves the complex");
      if (!c.partner) continue;
      const std::size_t y = *c.partner;
      if (y >= n || cells_[y].partner != x)
        fail("matching is not an involution at cell " + std::to_string(x));
      const int gap = cells_[y].degree - c.degree;
      if (gap != 1 && gap != -1)
        fail("matched cells " + std::to_string(x) + ", " + std::to_string(y) +
             " are not in adjacent degrees");
      if (gap == 1 && !ring_.unit_inverse(entry(y, x)))
        fail("matched entry d(" + std::to_string(y) + ")[" + std::to_string(x) +
             "] is not invertible");
    }
    // Kahn's algorithm on the Morse graph.
    std::vector<std::size_t> indeg(n, 0);
    std::vector<std::vector<std::pair<std::size_t, Elem>>> out(n);
    for (std::size_t x = 0; x < n; ++x) {
      out[x] = edges(x);
      for (const auto& [y, w] : out[x]) ++indeg[y];
    }
    std::vector<std::size_t> ready;
    for (std::size_t x = 0; x < n; ++x)
      if (indeg[x] == 0) ready.push_back(x);
    std::size_t seen = 0;
    while (!ready.empty()) {
      const std::size_t x = ready.back();
      ready.pop_back();
      ++seen;
      for (const auto& [y, w] : out[x])
        if (--indeg[y] == 0) ready.push_back(y);
    }
    if (seen != n) fail("Morse graph has a zigzag cycle");
  }

  [[noreturn]] static void fail(const std::string& what) {
    throw Error(Errc::invalid_matching, what);
  }

  Ring ring_;
  std::vector<Cell> cells_;
  mutable std::vector<std::optional<Vec>> reach_;
};

/// Q as a coefficient ring.
struct RationalRing {
  using Elem = Scalar;
  Elem zero() const { return 0; }
  Elem one(std::size_t) const { return 1; }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  std::optional<Elem> unit_inverse(const Elem& a) const {
    if (a == 0) return std::nullopt;
    return Elem(1 / a);
  }
};

}  // namespace toupie
