#pragma once

// Reduced bar complex B' of a toupie algebra, its Morse matching, the SDR
// maps (zigzag oracle and closed form) and the two-sided Anick resolution.

#include "toupie/chains.hpp"
#include "toupie/zigzag.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace toupie {

/// [w1|...|wn]; degree 0 is the vertex `base`.
struct BarWord {
  VertexId base = 0;
  Letters letters;

  static BarWord vertex(VertexId v) { return BarWord{v, {}}; }
  /// Nonempty, composable letters.
  static BarWord of(Letters letters);

  std::size_t degree() const { return letters.size(); }
  VertexId source() const { return base; }
  VertexId target() const {
    return letters.empty() ? base : letters.back().target();
  }
  Path path() const;

  auto operator<=>(const BarWord&) const = default;
  bool operator==(const BarWord&) const = default;
};

using BarVec = std::map<BarWord, Scalar>;

/// The bar word of a chain; a (-1)-chain is its vertex.
BarWord to_bar_word(const Chain& c);

void add_to(BarVec& v, const BarWord& w, const Scalar& c);
void add_to(BarVec& v, const BarVec& u, const Scalar& c = 1);

std::string format_word(const Quiver& q, const BarWord& w);
std::string format_vec(const Quiver& q, const BarVec& v);

/// sum_i (-1)^i [..|NF(a_i a_{i+1})|..], merged letters expanded linearly.
BarVec bar_differential(const ToupieAlgebra& algebra, const BarWord& w);

/// Every adjacent product of letters lies in the tip ideal.
bool is_attached(const ToupieAlgebra& algebra, const BarWord& w);

enum class CellKind { critical, lower, upper };

struct MatchInfo {
  CellKind kind = CellKind::critical;
  BarWord partner;           // meaningful unless critical
  std::size_t position = 0;  // letters in the longest chain prefix
};

/// The matching: with k letters in the longest chain prefix, a non-chain
/// splits letter k at its shortest chain-extending prefix (lower cell) or,
/// when no prefix extends, merges letters k-1 and k (upper cell).
MatchInfo morse_partner(const ChainIndex& chains, const BarWord& w);

class BarMorse {
 public:
  /// Enumerates every cell of B' (finite for toupie algebras) and validates
  /// the matching. Throws Error(bound_exceeded) past `max_cells`.
  explicit BarMorse(const ChainIndex& chains, std::size_t max_cells = 200000);

  const ChainIndex& chains() const { return *chains_; }
  const ToupieAlgebra& algebra() const { return chains_->algebra(); }
  const std::vector<BarWord>& cells() const { return cells_; }
  std::size_t index(const BarWord& w) const;
  std::size_t top_degree() const { return top_degree_; }
  const MorseReduction<RationalRing>& reduction() const { return reduction_; }
  CellKind kind(const BarWord& w) const;

  std::vector<BarWord> cells_of_degree(std::size_t n) const;
  std::vector<BarWord> critical_cells(std::size_t n) const;

  BarVec d(const BarVec& v) const;

  // Zigzag oracle.
  BarVec gamma_up(const BarWord& w) const;  // sum of Gamma into degree + 1
  BarVec h(const BarWord& w) const;         // -gamma_up
  BarVec p(const BarWord& w) const;
  BarVec i(const BarWord& w) const;  // w critical
  BarVec morse_differential(const BarWord& w) const;

  // Closed forms: iterated largest-chain-prefix splitting.
  BarVec closed_h(const BarWord& w) const;
  BarVec closed_p(const BarWord& w) const;
  BarVec closed_i(const BarWord& chain) const;
  /// closed_h restricted to attached terms; throws Error(invalid_input).
  BarVec attached_h(const BarWord& w) const;

 private:
  BarVec to_bar(const MorseReduction<RationalRing>::Vec& v) const;
  void closed_walk(const BarWord& w, BarVec* gamma_sum, BarVec* proj) const;

  const ChainIndex* chains_;
  std::vector<BarWord> cells_;
  std::map<BarWord, std::size_t> index_;
  std::size_t top_degree_ = 0;
  MorseReduction<RationalRing> reduction_;
};

/// Linear extension of a cellwise map.
BarVec apply_linear(const std::function<BarVec(const BarWord&)>& f,
                    const BarVec& v);

struct SdrMaps {
  std::function<BarVec(const BarWord&)> h, p, i;
};
SdrMaps oracle_maps(const BarMorse& m);
SdrMaps closed_maps(const BarMorse& m);

struct CheckReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // first few violations

  void fail(std::string what);
};

/// id - ip = dh + hd, pi = id, h^2 = 0, hi = 0, ph = 0 on every cell of
/// degree <= max_degree.
CheckReport verify_sdr(const BarMorse& m, const SdrMaps& maps,
                       std::size_t max_degree);
/// Closed forms against the zigzag oracle on every cell of degree <=
/// max_degree.
CheckReport compare_sdr(const BarMorse& m, std::size_t max_degree);

/// Elements of A (x) A^op, keyed by pairs of nontip basis indices.
using Bimod = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

/// A (x) A^op with (a1 (x) b1)(a2 (x) b2) = a1 a2 (x) b2 b1.
struct EnvelopingRing {
  using Elem = Bimod;
  const ToupieAlgebra* algebra = nullptr;
  std::vector<std::pair<std::size_t, std::size_t>> units;  // e_s, e_t per cell

  Elem zero() const { return {}; }
  Elem one(std::size_t cell) const { return {{units.at(cell), Scalar(1)}}; }
  bool is_zero(const Elem& a) const { return a.empty(); }
  Elem add(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  std::optional<Elem> unit_inverse(const Elem& a) const;
};

/// Two-sided bar resolution of A over A^e reduced along the same matching:
/// the Anick resolution, one free generator per chain.
class AnickResolution {
 public:
  explicit AnickResolution(const BarMorse& bar);

  const BarMorse& bar() const { return *bar_; }
  /// d_n on the generator of a chain, as A^e-coefficients on chains.
  std::map<BarWord, Bimod> differential(const BarWord& chain) const;
  /// Closed formula: d1 [x] = x (x) 1 - 1 (x) x; for a 1-chain with path w,
  /// sum over q in Supp(tip^-1(w)) and q = u x v (x an arrow) of c(q) u[x]v.
  std::map<BarWord, Bimod> closed_differential(const BarWord& chain) const;

  std::string format_bimod(const Bimod& c) const;

  CheckReport check_d_squared(std::size_t max_degree) const;
  /// The induced differential on Tor (apply eps (x) eps) vanishes.
  CheckReport check_minimal(std::size_t max_degree) const;
  /// Closed d1, d2 against the Morse differential.
  CheckReport check_low_degrees() const;
  /// Free generators in each homological degree 0..max_degree.
  std::vector<std::size_t> betti(std::size_t max_degree) const;

 private:
  const BarMorse* bar_;
  MorseReduction<EnvelopingRing> reduction_;
};

}  // namespace toupie
