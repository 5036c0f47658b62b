#include <doctest.h>

#include "test_support.hpp"
#include "toupie/chains.hpp"

#include <functional>
#include <set>

using namespace toupie;
using namespace toupie::test;

namespace {

// Chains straight from the tip set: w0 an arrow, and for each later letter
// v after u the word uv contains exactly one tip occurrence, a suffix that
// starts inside u.
std::map<int, std::set<Letters>> brute_force_chains(const ToupieAlgebra& a) {
  const std::vector<Path> tips = a.groebner().tips();
  const std::vector<Path> paths = a.quiver().all_paths();
  auto occurrences = [&](const Path& p) {
    std::vector<std::pair<std::size_t, std::size_t>> out;  // (start, length)
    for (const Path& t : tips)
      for (auto pos = p.find(t); pos; pos = p.find(t, *pos + 1)) out.emplace_back(*pos, t.length());
    return out;
  };
  std::map<int, std::set<Letters>> out;
  std::function<void(Letters&)> grow = [&](Letters& word) {
    out[static_cast<int>(word.size()) - 1].insert(word);
    const Path& u = word.back();
    for (const Path& v : paths) {
      if (v.is_trivial() || v.source() != u.target()) continue;
      const Path uv = compose(u, v);
      const auto occ = occurrences(uv);
      if (occ.size() != 1) continue;
      const auto [start, len] = occ.front();
      if (start + len != uv.length() || start >= u.length()) continue;
      word.push_back(v);
      grow(word);
      word.pop_back();
    }
  };
  for (ArrowId x = 0; x < a.quiver().arrow_count(); ++x) {
    Letters word{Path::arrow(a.quiver(), x)};
    grow(word);
  }
  return out;
}

}  // namespace

TEST_CASE("E1 chains") {
  const ToupieAlgebra a(load("e1.json"));
  const ChainIndex c(a);
  CHECK(c.chains(-1).size() == 6);
  CHECK(c.chains(0).size() == 7);
  REQUIRE(c.chains(1).size() == 2);
  CHECK(c.chains(2).empty());
  CHECK(c.top_index() == 1);
  const Quiver& q = a.quiver();
  const Letters u{path_of(q, {"alpha1"}), path_of(q, {"alpha2", "alpha3"})};
  const Letters v{path_of(q, {"beta1"}), path_of(q, {"beta2"})};
  CHECK(c.chains(1)[0].letters == u);
  CHECK(c.chains(1)[1].letters == v);
  CHECK(c.is_nonmonomial(c.chains(1)[0]));
  CHECK(c.is_chain(u).is_chain);
}

TEST_CASE("monomial algebra chains: a right comb") {
  const ToupieAlgebra a(load("monomial.json"));
  const ChainIndex c(a);
  CHECK(c.chains(-1).size() == 4);
  CHECK(c.chains(0).size() == 3);
  CHECK(c.chains(1).size() == 2);
  REQUIRE(c.chains(2).size() == 1);
  const Quiver& q = a.quiver();
  CHECK(c.chains(2)[0].letters ==
        Letters{path_of(q, {"delta1"}), path_of(q, {"delta2"}), path_of(q, {"delta3"})});
  CHECK_FALSE(c.is_nonmonomial(c.chains(2)[0]));
  // Two ways to cut the 2-chain into two chains with r1 + r2 = 1.
  CHECK(c.decompositions(c.chains(2)[0], 2).size() == 2);
  CHECK(c.decompositions(c.chains(2)[0], 3).empty());
}

TEST_CASE("non-chains name the failing letter") {
  const ToupieAlgebra a(load("e1.json"));
  const ChainIndex c(a);
  const Quiver& q = a.quiver();
  const ChainCheck bad = c.is_chain({path_of(q, {"alpha1"}), path_of(q, {"alpha2"})});
  CHECK_FALSE(bad.is_chain);
  CHECK(bad.prefix == 1);
  CHECK_FALSE(bad.reason.empty());
  CHECK(c.chain_of_path(path_of(q, {"alpha1", "alpha2", "alpha3"})).has_value());
  CHECK_FALSE(c.chain_of_path(path_of(q, {"alpha1", "alpha2"})).has_value());
}

TEST_CASE("chain enumeration agrees with the tip-set definition") {
  std::vector<Presentation> cases = random_cases();
  cases.push_back(load("e1.json"));
  cases.push_back(load("monomial.json"));
  cases.push_back(load("quartic_mixed.json"));
  for (const Presentation& p : cases) {
    const ToupieAlgebra a(p);
    const ChainIndex c(a);
    const auto oracle = brute_force_chains(a);
    for (int n = 0; n <= std::max(c.top_index(), oracle.empty() ? 0 : oracle.rbegin()->first); ++n) {
      std::set<Letters> mine;
      for (const Chain& ch : c.chains(n)) mine.insert(ch.letters);
      const auto it = oracle.find(n);
      CHECK(mine == (it == oracle.end() ? std::set<Letters>{} : it->second));
    }
  }
}

TEST_CASE("decompositions are the cuts of the path into chains of the right total index") {
  for (const Presentation& p : random_cases()) {
    const ToupieAlgebra a(p);
    const ChainIndex c(a);
    for (const Chain& ch : c.all_chains())
      for (std::size_t n = 2; n <= 5; ++n) {
        // Oracle: every cut into n nonempty pieces that are all chains.
        std::size_t expected = 0;
        std::function<void(std::size_t, std::size_t, int)> cut = [&](std::size_t pos, std::size_t left,
                                                                    int indices) {
          if (left == 0) {
            if (pos == ch.path.length() && indices == ch.index() - 1) ++expected;
            return;
          }
          for (std::size_t len = 1; pos + len <= ch.path.length(); ++len)
            if (auto piece = c.chain_of_path(ch.path.subpath(pos, len)))
              cut(pos + len, left - 1, indices + piece->index());
        };
        cut(0, n, 0);
        const auto parts = c.decompositions(ch, n);
        CHECK(parts.size() == expected);
        for (const auto& d : parts) {
          int sum = 0;
          Path whole = Path::trivial(ch.path.source());
          for (std::size_t k = 0; k < d.parts.size(); ++k) {
            sum += d.indices[k];
            CHECK(d.parts[k].index() == d.indices[k]);
            whole = compose(whole, d.parts[k].path);
          }
          CHECK(sum == ch.index() - 1);
          CHECK(whole == ch.path);
        }
      }
  }
}
