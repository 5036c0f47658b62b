#include <doctest.h>

#include "test_support.hpp"
#include "toupie/duality.hpp"

#include <set>

using namespace toupie;
using namespace toupie::test;

namespace {

Presentation with_relations(const Presentation& base, std::vector<LinComb> rels) {
  Presentation p = base;
  p.relations = std::move(rels);
  return p;
}

// Branches a, b, c, d of length two.
Presentation four_pairs() {
  Presentation p;
  std::vector<std::string> vertices{"0"};
  std::vector<ArrowSpec> arrows;
  for (const char* s : {"a", "b", "c", "d"}) {
    vertices.push_back(std::string(s) + "m");
    arrows.push_back({std::string(s) + "1", "0", std::string(s) + "m"});
    arrows.push_back({std::string(s) + "2", std::string(s) + "m", "w"});
  }
  vertices.push_back("w");
  p.quiver = Quiver::build(vertices, arrows);
  return p;
}

// Single branch x1 x2 x3 x4.
Presentation line4() {
  Presentation p;
  p.quiver = Quiver::build({"0", "1", "2", "3", "w"}, {{"x1", "0", "1"},
                                                       {"x2", "1", "2"},
                                                       {"x3", "2", "3"},
                                                       {"x4", "3", "w"}});
  return p;
}

std::set<Path> monomials(const Presentation& p) {
  std::set<Path> out;
  for (const LinComb& r : p.relations) {
    REQUIRE(r.size() == 1);
    out.insert(r.terms().begin()->first);
  }
  return out;
}

}  // namespace

TEST_CASE("Gamma(A)") {
  const ToupieAlgebra e1(load("e1.json"));
  const GammaGraph g = gamma_graph(e1);
  CHECK(g.vertices == std::vector<std::size_t>{0, 1, 2});
  CHECK(g.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}});
  CHECK(g.components == std::vector<std::vector<std::size_t>>{{0, 1, 2}});

  const Presentation base = four_pairs();
  const Quiver& q = base.quiver;
  const ToupieAlgebra two(with_relations(base, {lc(q, {{1, {"a1", "a2"}}, {-1, {"b1", "b2"}}}),
                                                lc(q, {{1, {"c1", "c2"}}, {2, {"d1", "d2"}}})}));
  CHECK(gamma_graph(two).components.size() == 2);

  const ToupieAlgebra mono(load("monomial.json"));
  CHECK(gamma_graph(mono).vertices.empty());
  CHECK(gamma_graph(mono).components.empty());
}

TEST_CASE("hypotheses") {
  CHECK(hypotheses_check(ToupieAlgebra(load("e1.json"))).ok);
  CHECK(hypotheses_check(ToupieAlgebra(load("monomial.json"))).ok);
  for (const char* bad : {"cubic_monomial.json", "two_cubic_tips.json", "quartic_mixed.json"}) {
    const ToupieAlgebra a(load(bad));
    const HypothesesReport r = hypotheses_check(a);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.reasons.empty());
    try {
      yoneda_presentation(a);
      FAIL("expected a refusal");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::hypotheses);
    }
    CHECK_THROWS_AS(double_dual(load(bad)), Error);
  }
}

TEST_CASE("gr(E1)") {
  const Presentation p = load("e1.json");
  const Presentation gr = gr_algebra(ToupieAlgebra(p));
  const Quiver& q = p.quiver;
  CHECK(gr.provenance == "gr");
  CHECK(gr.relations == std::vector<LinComb>{lc(q, {{1, {"beta1", "beta2"}}}),
                                             lc(q, {{1, {"beta1", "beta2"}}, {-1, {"gamma1", "gamma2"}}})});
  CHECK(is_homogeneous(gr));
  CHECK(quotient_dimension(gr) == 16);
  CHECK(quotient_dimension(p) == 16);
}

TEST_CASE("gr keeps homogeneous ideals") {
  const Presentation base = four_pairs();
  const Quiver& q = base.quiver;
  const Presentation p =
      with_relations(base, {lc(q, {{1, {"a1", "a2"}}, {-1, {"b1", "b2"}}, {1, {"c1", "c2"}}}),
                            lc(q, {{1, {"b1", "b2"}}, {3, {"d1", "d2"}}})});
  CHECK(ideal_equal(gr_algebra(ToupieAlgebra(p)), p));
}

TEST_CASE("dim A = dim gr(A) on random presentations") {
  for (const Presentation& p : random_cases()) {
    const ToupieAlgebra a(p);
    const Presentation gr = gr_algebra(a);
    CHECK(is_homogeneous(gr));
    CHECK(quotient_dimension(gr) == a.dimension());
  }
}

TEST_CASE("A! of E1") {
  const ToupieAlgebra a(load("e1.json"));
  const Presentation y = yoneda_presentation(a);
  CHECK(y.provenance == "yoneda");
  const Quiver& q = y.quiver;
  CHECK(q.arrow(*q.find_arrow("alpha1∨")).source == *q.find_vertex("a1"));
  CHECK(monomials(y) == std::set<Path>{path_of(q, {"alpha2∨", "alpha1∨"}),
                                       path_of(q, {"alpha3∨", "alpha2∨"})});
  CHECK(koszul_check(a).ok);
  // Round trip through the input format.
  const Presentation back = parse_presentation(presentation_to_json(y).dump());
  CHECK(ToupieAlgebra(back).dimension() == quotient_dimension(y));
}

TEST_CASE("A! of a quadratic monomial algebra is the complement") {
  const Presentation base = line4();
  const Quiver& q = base.quiver;
  const Presentation p = with_relations(base, {lc(q, {{1, {"x1", "x2"}}}), lc(q, {{1, {"x3", "x4"}}})});
  const Presentation y = yoneda_presentation(ToupieAlgebra(p));
  CHECK(monomials(y) == std::set<Path>{path_of(y.quiver, {"x3∨", "x2∨"})});

  // No relations: every product of two arrows is zero in Ext.
  const Presentation free_y = yoneda_presentation(ToupieAlgebra(base));
  CHECK(monomials(free_y) == std::set<Path>{path_of(free_y.quiver, {"x2∨", "x1∨"}),
                                            path_of(free_y.quiver, {"x3∨", "x2∨"}),
                                            path_of(free_y.quiver, {"x4∨", "x3∨"})});
}

TEST_CASE("A!! of E1 is gr(E1)") {
  const Presentation p = load("e1.json");
  const Presentation dd = double_dual(p);
  const Quiver& q = p.quiver;
  CHECK(dd.quiver == q);
  CHECK(dd.provenance == "double-dual");
  CHECK(monomials(dd) == std::set<Path>{path_of(q, {"beta1", "beta2"}), path_of(q, {"gamma1", "gamma2"})});
  CHECK(ideal_equal(dd, gr_algebra(ToupieAlgebra(p))));
}

TEST_CASE("A!! of a Koszul monomial algebra is itself") {
  const Presentation p = load("monomial.json");
  CHECK(ideal_equal(double_dual(p), p));
}

TEST_CASE("ideal_equal") {
  const Presentation base = load("e1.json");
  const Quiver& q = base.quiver;
  const LinComb b = lc(q, {{1, {"beta1", "beta2"}}});
  const LinComb g = lc(q, {{1, {"gamma1", "gamma2"}}});
  const LinComb bg = lc(q, {{1, {"beta1", "beta2"}}, {-1, {"gamma1", "gamma2"}}});
  CHECK(ideal_equal(with_relations(base, {b, bg}), with_relations(base, {b, g})));
  CHECK_FALSE(ideal_equal(with_relations(base, {b}), with_relations(base, {g})));
  CHECK(ideal_equal(base, with_relations(base, {Scalar(3) * base.relations[0],
                                                Scalar(3) * base.relations[1]})));
  CHECK_THROWS_AS(ideal_equal(base, load("monomial.json")), Error);
}

TEST_CASE("A! relations are the kernel of m2 on arrow pairs") {
  for (const Presentation& p : random_cases()) {
    const ToupieAlgebra a(p);
    if (!hypotheses_check(a).ok) continue;
    const ChainIndex chains(a);
    const AlgebraTable ext = dualize(closed_coalgebra(chains, 2));
    const Presentation y = yoneda_presentation(a);
    const Quiver& q = a.quiver();
    std::size_t pairs = 0;
    for (ArrowId x = 0; x < q.arrow_count(); ++x) pairs += q.out_arrows(q.arrow(x).target).size();
    std::size_t image_rank = 0;
    {
      RationalMatrix rows;
      std::map<BarWord, std::size_t> col;
      for (const Chain& c : chains.chains(1)) col.emplace(to_bar_word(c), col.size());
      for (ArrowId x = 0; x < q.arrow_count(); ++x)
        for (ArrowId z : q.out_arrows(q.arrow(x).target)) {
          std::vector<Scalar> row(col.size(), Scalar(0));
          const Tensor t{BarWord::of({Path::arrow(q, x)}), BarWord::of({Path::arrow(q, z)})};
          for (const auto& [w, c] : ext.product(t))
            row[col.at(w)] = c;
          rows.push_back(row);
        }
      if (!rows.empty() && !col.empty()) image_rank = rref(rows).rank;
    }
    CHECK(y.relations.size() == pairs - image_rank);
    // Each relation, read back on Q, is killed by m2.
    for (const LinComb& rel : y.relations) {
      BarVec total;
      for (const auto& [path, c] : rel.terms()) {
        const auto arrows = path.arrows();
        const BarWord first = BarWord::of({Path::arrow(q, arrows[1])});
        const BarWord second = BarWord::of({Path::arrow(q, arrows[0])});
        add_to(total, ext.product({first, second}), c);
      }
      CHECK(total.empty());
    }
  }
}

TEST_CASE("double dual on random presentations whose Ext is quadratic") {
  for (const Presentation& p : random_cases()) {
    const ToupieAlgebra a(p);
    if (!hypotheses_check(a).ok || !koszul_check(a).ok) continue;
    CHECK(ideal_equal(double_dual(p), gr_algebra(a)));
  }
}

TEST_CASE("a single cubic binomial passes the hypotheses but A!! is not gr(A)") {
  const Presentation p = load("cubic_binomial.json");
  const ToupieAlgebra a(p);
  CHECK(hypotheses_check(a).ok);
  const CheckReport k = koszul_check(a);
  CHECK_FALSE(k.ok);
  const Presentation dd = double_dual(p);
  CHECK(dd.relations.empty());
  CHECK_FALSE(ideal_equal(dd, gr_algebra(a)));
}
