#include "toupie/chains.hpp"

#include <algorithm>
#include <functional>

namespace toupie {

bool UfGraph::has_edge(const Path& u, const Path& v) const {
  auto it = successors.find(u);
  if (it == successors.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), v);
}

std::size_t UfGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& [u, vs] : successors) n += vs.size();
  return n;
}

UfGraph build_uf_graph(const ToupieAlgebra& algebra) {
  const Quiver& q = algebra.quiver();
  const GroebnerData& g = algebra.groebner();
  UfGraph graph;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    graph.vertices.insert(Path::trivial(v));
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    graph.vertices.insert(Path::arrow(q, a));
  for (const Path& t : g.tips())
    for (std::size_t pos = 1; pos < t.length(); ++pos)
      graph.vertices.insert(t.suffix_from(pos));

  for (const Path& u : graph.vertices) {
    auto& out = graph.successors[u];
    if (u.is_trivial()) {
      for (ArrowId a : q.out_arrows(u.source())) out.push_back(Path::arrow(q, a));
    } else {
      for (const Path& v : graph.vertices) {
        if (v.is_trivial() || v.source() != u.target()) continue;
        Path uv = compose(u, v);
        if (g.in_tip_ideal(uv) && !g.in_tip_ideal(uv.prefix(uv.length() - 1)))
          out.push_back(v);
      }
    }
    std::sort(out.begin(), out.end());
  }
  return graph;
}

ChainIndex::ChainIndex(const ToupieAlgebra& algebra)
    : algebra_(&algebra), graph_(build_uf_graph(algebra)) {
  const Quiver& q = algebra.quiver();
  std::vector<Chain> level;
  for (VertexId v = 0; v < q.vertex_count(); ++v)
    level.push_back(Chain{{}, Path::trivial(v)});
  std::sort(level.begin(), level.end());
  by_index_.push_back(level);

  level.clear();
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    Path x = Path::arrow(q, a);
    level.push_back(Chain{{x}, x});
  }
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    by_index_.push_back(level);
    std::vector<Chain> next;
    for (const Chain& c : by_index_.back()) {
      auto it = graph_.successors.find(c.letters.back());
      if (it == graph_.successors.end()) continue;
      for (const Path& v : it->second) {
        Chain d = c;
        d.letters.push_back(v);
        d.path = compose(d.path, v);
        next.push_back(std::move(d));
      }
    }
    level = std::move(next);
  }
}

const std::vector<Chain>& ChainIndex::chains(int n) const {
  static const std::vector<Chain> empty;
  if (n < -1 || n + 1 >= static_cast<int>(by_index_.size())) return empty;
  return by_index_[n + 1];
}

std::vector<Chain> ChainIndex::all_chains() const {
  std::vector<Chain> out;
  for (std::size_t i = 1; i < by_index_.size(); ++i)
    out.insert(out.end(), by_index_[i].begin(), by_index_[i].end());
  return out;
}

std::optional<Path> ChainIndex::extension(const std::optional<Path>& last,
                                          const Path& next) const {
  if (next.is_trivial()) return std::nullopt;
  if (!last) return next.prefix(1);
  if (last->target() != next.source()) return std::nullopt;
  const GroebnerData& g = algebra_->groebner();
  for (std::size_t len = 1; len <= next.length(); ++len) {
    Path w = next.prefix(len);
    if (!g.in_tip_ideal(compose(*last, w))) continue;
    if (graph_.vertices.count(w) == 0) return std::nullopt;
    return w;
  }
  return std::nullopt;
}

std::size_t ChainIndex::chain_prefix(const Letters& word) const {
  std::optional<Path> last;
  std::size_t k = 0;
  for (const Path& letter : word) {
    auto ext = extension(last, letter);
    if (!ext || *ext != letter) break;
    last = letter;
    ++k;
  }
  return k;
}

ChainCheck ChainIndex::is_chain(const Letters& word) const {
  ChainCheck check;
  if (word.empty()) {
    check.reason = "empty word";
    return check;
  }
  const GroebnerData& g = algebra_->groebner();
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i].is_trivial() || !g.is_nontip(word[i])) {
      check.reason = "letter " + std::to_string(i) + " is not a nontrivial nontip";
      return check;
    }
    if (i > 0 && word[i - 1].target() != word[i].source()) {
      check.reason = "letters " + std::to_string(i - 1) + " and " +
                     std::to_string(i) + " do not compose";
      return check;
    }
  }
  check.prefix = chain_prefix(word);
  check.is_chain = check.prefix == word.size();
  if (!check.is_chain)
    check.reason = check.prefix == 0
                       ? "first letter is not an arrow"
                       : "no Uf-graph edge into letter " + std::to_string(check.prefix);
  return check;
}

std::optional<Chain> ChainIndex::chain_of_path(const Path& p) const {
  if (p.is_trivial()) return Chain{{}, p};
  Chain c{{}, p};
  std::optional<Path> last;
  std::size_t pos = 0;
  while (pos < p.length()) {
    auto ext = extension(last, p.suffix_from(pos));
    if (!ext) return std::nullopt;
    c.letters.push_back(*ext);
    pos += ext->length();
    last = ext;
  }
  return c;
}

bool ChainIndex::is_nonmonomial(const Chain& c) const {
  return c.letters.size() == 2 &&
         algebra_->groebner().relation_of_tip(c.path) != nullptr;
}

std::vector<Decomposition> ChainIndex::decompositions(const Chain& c,
                                                      std::size_t n) const {
  std::vector<Decomposition> out;
  if (n < 2 || c.path.length() < n) return out;
  const int target = c.index() - 1;
  Decomposition current;
  std::function<void(std::size_t, std::size_t, int)> go =
      [&](std::size_t pos, std::size_t left, int sum) {
        const std::size_t rest = c.path.length() - pos;
        if (left == 1) {
          auto last = chain_of_path(c.path.suffix_from(pos));
          if (!last || sum + last->index() != target) return;
          current.parts.push_back(*last);
          current.indices.push_back(last->index());
          out.push_back(current);
          current.parts.pop_back();
          current.indices.pop_back();
          return;
        }
        for (std::size_t len = 1; len + (left - 1) <= rest; ++len) {
          auto part = chain_of_path(c.path.subpath(pos, len));
          if (!part) continue;
          current.parts.push_back(*part);
          current.indices.push_back(part->index());
          go(pos + len, left - 1, sum + part->index());
          current.parts.pop_back();
          current.indices.pop_back();
        }
      };
  go(0, n, 0);
  return out;
}

}  // namespace toupie
