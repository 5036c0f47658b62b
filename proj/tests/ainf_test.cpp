#include <doctest.h>

#include "test_support.hpp"
#include "toupie/ainf.hpp"

using namespace toupie;
using namespace toupie::test;

namespace {

struct Pipeline {
  explicit Pipeline(const Presentation& p)
      : algebra(p), chains(algebra), bar(chains), transfer(bar) {}
  ToupieAlgebra algebra;
  ChainIndex chains;
  BarMorse bar;
  Transfer transfer;
};

BarWord word(const Quiver& q, std::initializer_list<std::initializer_list<const char*>> letters) {
  Letters l;
  for (const auto& names : letters) l.push_back(path_of(q, names));
  return BarWord::of(l);
}

std::size_t nonzero_entries(const AlgebraTable& t) {
  std::size_t n = 0;
  for (const auto& [arity, rows] : t.m)
    for (const auto& [in, out] : rows) n += !out.empty();
  return n;
}

}  // namespace

TEST_CASE("delta_prime splits a word in every position") {
  const Presentation p = load("monomial.json");
  const BarWord w = word(p.quiver, {{"delta1"}, {"delta2"}, {"delta3"}});
  const TensorVec d = delta_prime(w);
  CHECK(d.size() == 2);
  CHECK(d.at({word(p.quiver, {{"delta1"}}), word(p.quiver, {{"delta2"}, {"delta3"}})}) == 1);
}

TEST_CASE("E1: the Ext table has exactly three products") {
  Pipeline x(load("e1.json"));
  const Quiver& q = x.algebra.quiver();
  const BarWord u = word(q, {{"alpha1"}, {"alpha2", "alpha3"}});
  const BarWord v = word(q, {{"beta1"}, {"beta2"}});
  auto arrow = [&](const char* name) { return word(q, {{name}}); };
  for (const AlgebraTable& ext : {dualize(closed_coalgebra(x.chains, 5)),
                                  dualize(transfer_coalgebra(x.transfer, 5))}) {
    CHECK(ext.product({arrow("beta1"), arrow("beta2")}) == BarVec{{v, Scalar(-1)}});
    CHECK(ext.product({arrow("gamma1"), arrow("gamma2")}) ==
          BarVec{{u, Scalar(1)}, {v, Scalar(1)}});
    CHECK(ext.product({arrow("alpha1"), arrow("alpha2"), arrow("alpha3")}) ==
          BarVec{{u, Scalar(1)}});
    CHECK(nonzero_entries(ext) == 3);
  }
}

TEST_CASE("monomial algebra: Koszul signs of m2") {
  Pipeline x(load("monomial.json"));
  const Quiver& q = x.algebra.quiver();
  const AlgebraTable ext = dualize(closed_coalgebra(x.chains, 5));
  const BarWord d1 = word(q, {{"delta1"}}), d2 = word(q, {{"delta2"}}), d3 = word(q, {{"delta3"}});
  const BarWord d12 = word(q, {{"delta1"}, {"delta2"}}), d23 = word(q, {{"delta2"}, {"delta3"}});
  const BarWord d123 = word(q, {{"delta1"}, {"delta2"}, {"delta3"}});
  CHECK(ext.product({d1, d2}) == BarVec{{d12, Scalar(-1)}});
  CHECK(ext.product({d2, d3}) == BarVec{{d23, Scalar(-1)}});
  CHECK(ext.product({d1, d23}) == BarVec{{d123, Scalar(1)}});
  CHECK(ext.product({d12, d3}) == BarVec{{d123, Scalar(1)}});
  CHECK(nonzero_entries(ext) == 4);
  CHECK(check_corollary_signs(x.chains, ext).ok);
}

TEST_CASE("closed coproducts equal the transferred ones") {
  std::vector<Presentation> cases = random_cases();
  cases.push_back(load("e1.json"));
  cases.push_back(load("monomial.json"));
  cases.push_back(load("quartic_mixed.json"));
  cases.push_back(load("two_cubic_tips.json"));
  for (const Presentation& p : cases) {
    Pipeline x(p);
    const CheckReport r = compare_coalgebras(x.algebra.quiver(), closed_coalgebra(x.chains, 5),
                                             transfer_coalgebra(x.transfer, 5));
    CHECK(r.ok);
    for (const auto& f : r.failures) MESSAGE(f);
  }
}

TEST_CASE("Stasheff identities and the closed product signs") {
  std::vector<Presentation> cases = random_cases();
  cases.push_back(load("e1.json"));
  cases.push_back(load("monomial.json"));
  for (const Presentation& p : cases) {
    Pipeline x(p);
    const CoalgebraTable tor = transfer_coalgebra(x.transfer, 5);
    const AlgebraTable ext = dualize(tor);
    const std::vector<BarWord> words = chain_words(x.chains);
    CHECK(stasheff_algebra(x.algebra.quiver(), words, ext, 5).ok);
    CHECK(stasheff_coalgebra(x.algebra.quiver(), words, tor, 5).ok);
    CHECK(check_corollary_signs(x.chains, ext).ok);
  }
}

TEST_CASE("negative control: one flipped sign breaks SI(3)") {
  Pipeline x(load("monomial.json"));
  const Quiver& q = x.algebra.quiver();
  const std::vector<BarWord> words = chain_words(x.chains);
  AlgebraTable ext = dualize(closed_coalgebra(x.chains, 5));
  const BarWord d12 = word(q, {{"delta1"}, {"delta2"}}), d3 = word(q, {{"delta3"}});
  for (auto& [w, c] : ext.m.at(2).at({d12, d3})) c = -c;
  const CheckReport r = stasheff_algebra(q, words, ext, 3);
  CHECK_FALSE(r.ok);

  CoalgebraTable tor = closed_coalgebra(x.chains, 5);
  const BarWord d123 = word(q, {{"delta1"}, {"delta2"}, {"delta3"}});
  for (auto& [t, c] : tor.delta.at(2).at(d123)) {
    c = -c;
    break;
  }
  CHECK_FALSE(stasheff_coalgebra(q, words, tor, 3).ok);
}

TEST_CASE("dual pairing signs") {
  const Presentation p = load("monomial.json");
  const BarWord d1 = word(p.quiver, {{"delta1"}}), d23 = word(p.quiver, {{"delta2"}, {"delta3"}});
  const BarWord d12 = word(p.quiver, {{"delta1"}, {"delta2"}}), d3 = word(p.quiver, {{"delta3"}});
  const BarWord d2 = word(p.quiver, {{"delta2"}});
  // N' = |c1| |f2|
  CHECK(dual_pairing({d1, d2}, {d1, d2}) == -1);
  CHECK(dual_pairing({d1, d23}, {d1, d23}) == 1);
  CHECK(dual_pairing({d12, d3}, {d12, d3}) == 1);
  CHECK(dual_pairing({d1, d23}, {d12, d3}) == 0);
}

TEST_CASE("corollary sign formula on small index vectors") {
  // M = r1 + n(n+1)/2 + sum (n+i+1) r_i + sum_{i<j} r_i r_j
  CHECK(corollary_sign({0, 0}) == -1);
  CHECK(corollary_sign({1, 0}) == 1);
  CHECK(corollary_sign({0, 1}) == 1);
  CHECK(corollary_sign({0, 0, 0}) == 1);
}
