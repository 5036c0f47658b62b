#pragma once

// Ufnarovskii graph of the tip set and the Anick chains it encodes.

#include "toupie/rewriting.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace toupie {

/// Letters of a bar word: nontrivial nontip paths, consecutive ones
/// composable.
using Letters = std::vector<Path>;

struct UfGraph {
  std::set<Path> vertices;                     // Q0, Q1, proper right factors
  std::map<Path, std::vector<Path>> successors;  // sorted target lists

  bool has_edge(const Path& u, const Path& v) const;
  std::size_t edge_count() const;
};

/// Vertex set and edge rule: e -> x for arrows leaving e; u -> v when uv
/// contains a tip but uv with its last arrow removed does not.
UfGraph build_uf_graph(const ToupieAlgebra& algebra);

struct Chain {
  Letters letters;  // empty for a (-1)-chain
  Path path;        // underlying path; trivial for a (-1)-chain

  /// Chain index n: n + 1 letters.
  int index() const { return static_cast<int>(letters.size()) - 1; }
  /// Homological degree |c| = n + 1 in Tor.
  std::size_t degree() const { return letters.size(); }
  auto operator<=>(const Chain& other) const { return path <=> other.path; }
  bool operator==(const Chain& other) const { return path == other.path; }
};

struct ChainCheck {
  bool is_chain = false;
  std::size_t prefix = 0;  // letters in the longest chain prefix
  std::string reason;      // why the word fails, empty on success
};

struct Decomposition {
  std::vector<Chain> parts;
  std::vector<int> indices;  // r_i of each part
};

class ChainIndex {
 public:
  explicit ChainIndex(const ToupieAlgebra& algebra);

  const ToupieAlgebra& algebra() const { return *algebra_; }
  const UfGraph& graph() const { return graph_; }

  /// W^(n), sorted by underlying path. W^(-1) = Q0.
  const std::vector<Chain>& chains(int n) const;
  /// Largest n with W^(n) nonempty.
  int top_index() const { return static_cast<int>(by_index_.size()) - 2; }
  /// Every chain of index >= 0, sorted by (index, path).
  std::vector<Chain> all_chains() const;

  /// Letters of the longest chain prefix and whether the word is a chain.
  ChainCheck is_chain(const Letters& word) const;
  /// Number of letters in the longest chain prefix of `word`.
  std::size_t chain_prefix(const Letters& word) const;
  /// For a chain prefix ending in `last` (nullopt for the empty prefix),
  /// the shortest prefix of `next` extending it to a chain; nullopt if no
  /// proper-or-full prefix does.
  std::optional<Path> extension(const std::optional<Path>& last,
                                const Path& next) const;

  /// The chain whose underlying path is `p`, if one exists.
  std::optional<Chain> chain_of_path(const Path& p) const;

  /// True when the chain is [a|w] with aw the tip of a non-monomial relation.
  bool is_nonmonomial(const Chain& c) const;

  /// Ways to write the underlying path of `c` as a concatenation of `n`
  /// chains with r_1 + ... + r_n = r - 1 (degree bookkeeping of Delta_n).
  /// For n = 2 these are exactly the splittings of the letter word.
  std::vector<Decomposition> decompositions(const Chain& c, std::size_t n) const;

 private:
  const ToupieAlgebra* algebra_;
  UfGraph graph_;
  std::vector<std::vector<Chain>> by_index_;  // by_index_[n + 1] = W^(n)
};

}  // namespace toupie
