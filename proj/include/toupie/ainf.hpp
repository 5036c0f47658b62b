#pragma once

// A-infinity coalgebra on Tor (chains) transferred from the bar diagonal,
// its closed form, the dual A-infinity algebra on Ext and Stasheff checks.
//
// Degrees: a bar word has degree = number of letters, so a chain of index r
// has degree r + 1. Delta_n has degree n - 2, m_n degree 2 - n.

#include "toupie/morse.hpp"

#include <map>
#include <string>
#include <vector>

namespace toupie {

using Tensor = std::vector<BarWord>;
using TensorVec = std::map<Tensor, Scalar>;

void add_to(TensorVec& v, const Tensor& t, const Scalar& c);
std::string format_tensor(const Quiver& q, const Tensor& t);
std::string format_tensor_vec(const Quiver& q, const TensorVec& v);

/// Sum over splittings into two nonempty words.
TensorVec delta_prime(const BarWord& w);

/// Transferred coproducts: Delta_n = p^{(x)n} Delta_n^bar i with
///   Delta_2^bar = Delta',
///   Delta_n^bar = sum_{s+t=n} (-1)^{s(t+1)} (F_s (x) F_t) Delta',
///   F_1 = id, F_s = Delta_s^bar H,
/// where H is the zigzag sum into the next degree. Koszul signs are taken
/// on elements.
class Transfer {
 public:
  explicit Transfer(const BarMorse& bar) : bar_(&bar) {}

  const BarMorse& bar() const { return *bar_; }
  const TensorVec& delta_bar(std::size_t n, const BarWord& w) const;
  TensorVec delta(std::size_t n, const BarWord& chain) const;

 private:
  TensorVec compute(std::size_t n, const BarWord& w) const;
  TensorVec f(std::size_t s, const BarWord& w) const;

  const BarMorse* bar_;
  mutable std::map<std::pair<std::size_t, BarWord>, TensorVec> memo_;
};

/// Closed form: for [a|w] with aw a non-monomial tip, sum of c(q) times the
/// arrows of q over support paths q of length n; otherwise the sum over
/// decompositions into n chains of (-1)^N, N = r_1 + sum_i (n - i) r_i.
TensorVec closed_delta(const ChainIndex& chains, std::size_t n, const Chain& c);

/// arity -> chain -> Delta_n(chain), for 2 <= n <= n_max.
struct CoalgebraTable {
  std::size_t n_max = 0;
  std::map<std::size_t, std::map<BarWord, TensorVec>> delta;

  const TensorVec& get(std::size_t n, const BarWord& chain) const;
};

CoalgebraTable closed_coalgebra(const ChainIndex& chains, std::size_t n_max);
CoalgebraTable transfer_coalgebra(const Transfer& transfer, std::size_t n_max);

/// Closed form against the transfer, chain by chain and arity by arity.
CheckReport compare_coalgebras(const Quiver& q, const CoalgebraTable& closed,
                               const CoalgebraTable& transfer);

/// (-1)^{N'} with N' = sum_{i >= 2} (|c_1| + ... + |c_{i-1}|) |f_i| when the
/// dual chains f match the word, 0 otherwise.
Scalar dual_pairing(const Tensor& duals, const Tensor& word);

/// Dual basis gamma^v is keyed by gamma. m[n][(f_1..f_n)] = m_n(f_1..f_n).
struct AlgebraTable {
  std::size_t n_max = 0;
  std::map<std::size_t, std::map<Tensor, BarVec>> m;

  BarVec product(const Tensor& f) const;
};

/// m_n(f) = (-1)^{n sum |f_i|} sum_gamma <f, Delta_n(gamma)> gamma^v.
AlgebraTable dualize(const CoalgebraTable& coalgebra);

/// Sign of the closed product formula for a decomposition with indices r:
/// (-1)^M, M = r_1 + sum (n + i + 1) r_i + sum_{i<j} r_i r_j + n(n+1)/2.
Scalar corollary_sign(const std::vector<int>& r);

/// Every monomial decomposable chain: the pipeline coefficient against
/// the closed product sign.
CheckReport check_corollary_signs(const ChainIndex& chains,
                                  const AlgebraTable& ext);

/// SI(n) on every composable tuple of dual chains, 3 <= n <= n_max.
CheckReport stasheff_algebra(const Quiver& q, const std::vector<BarWord>& chains,
                             const AlgebraTable& ext, std::size_t n_max);
/// SI(n)' on every chain, 3 <= n <= n_max.
CheckReport stasheff_coalgebra(const Quiver& q, const std::vector<BarWord>& chains,
                               const CoalgebraTable& tor, std::size_t n_max);

/// Chains of index >= 0 as bar words.
std::vector<BarWord> chain_words(const ChainIndex& chains);

}  // namespace toupie
