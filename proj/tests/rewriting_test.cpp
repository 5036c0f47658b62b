#include <doctest.h>

#include "test_support.hpp"
#include "toupie/duality.hpp"

#include <random>

using namespace toupie;
using namespace toupie::test;

namespace {

RationalMatrix ints(std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix m;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (int x : r) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return m;
}

std::size_t rank_of(RationalMatrix m) { return m.empty() ? 0 : rref(std::move(m)).rank; }

bool same_row_space(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  const std::size_t r = rank_of(ab);
  return r == rank_of(a) && r == rank_of(b);
}

// Membership in the two-sided ideal by a rank test over all of kQ.
bool in_ideal(const Presentation& p, const LinComb& x) {
  RationalMatrix basis = ideal_basis(p.quiver, p.relations);
  const std::vector<Path> paths = p.quiver.all_paths();
  std::vector<Scalar> row(paths.size(), Scalar(0));
  for (std::size_t j = 0; j < paths.size(); ++j) row[j] = x.coefficient(paths[j]);
  const std::size_t before = rank_of(basis);
  basis.push_back(row);
  return rank_of(basis) == before;
}

}  // namespace

TEST_CASE("special basis: the worked 4x7 example") {
  const RationalMatrix c = ints({{1, 0, 0, 0, 1, 0, 1},
                                 {0, 1, 0, 0, 0, 1, 1},
                                 {0, 0, 1, 0, 1, 0, 0},
                                 {0, 0, 0, 1, 0, 1, 0}});
  const RationalMatrix expected = ints({{1, -1, -1, 1, 0, 0, 0},
                                        {0, 1, 0, -1, 0, 0, 1},
                                        {0, 0, 1, 0, 1, 0, 0},
                                        {0, 0, 0, 1, 0, 1, 0}});
  CHECK(special_basis(c) == expected);
}

TEST_CASE("special basis keeps the row space on random reduced matrices") {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    RationalMatrix m(3, std::vector<Scalar>(6));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    RrefResult r = rref(m);
    if (r.rank == 0) continue;
    RationalMatrix reduced(r.matrix.begin(), r.matrix.begin() + r.rank);
    const RationalMatrix s = special_basis(reduced);
    CHECK(s.size() == reduced.size());
    CHECK(same_row_space(s, reduced));
  }
}

TEST_CASE("rref and nullspace") {
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    RationalMatrix m(4, std::vector<Scalar>(5));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    if (trial % 3 == 0) m[3] = m[0];  // force dependence
    const RrefResult r = rref(m);
    for (std::size_t i = 0; i < r.rank; ++i) {
      CHECK(r.matrix[i][r.pivots[i]] == 1);
      for (std::size_t k = 0; k < m.size(); ++k)
        if (k != i) CHECK(r.matrix[k][r.pivots[i]] == 0);
    }
    CHECK(same_row_space(RationalMatrix(r.matrix.begin(), r.matrix.begin() + r.rank), m));
    const RationalMatrix ns = nullspace(m, 5);
    CHECK(ns.size() == 5 - r.rank);
    CHECK(rank_of(ns) == ns.size());
    for (const auto& v : ns)
      for (const auto& row : m) {
        Scalar dot = 0;
        for (std::size_t j = 0; j < 5; ++j) dot += row[j] * v[j];
        CHECK(dot == 0);
      }
  }
}

TEST_CASE("E1: tips, nontips and dimension") {
  const ToupieAlgebra a(load("e1.json"));
  const Quiver& q = a.quiver();
  const GroebnerData& g = a.groebner();
  CHECK(g.monomial.empty());
  REQUIRE(g.nonmonomial.size() == 2);
  CHECK(q.path_name(g.nonmonomial[0].tip) == "alpha1*alpha2*alpha3");
  CHECK(q.path_name(g.nonmonomial[1].tip) == "beta1*beta2");
  CHECK(a.dimension() == 16);
  CHECK(a.normal_form(path_of(q, {"alpha1", "alpha2", "alpha3"})) ==
        lc(q, {{1, {"gamma1", "gamma2"}}}));
  CHECK(a.normal_form(path_of(q, {"alpha1", "alpha2"})) == lc(q, {{1, {"alpha1", "alpha2"}}}));
}

TEST_CASE("monomial algebra: dimension 7") {
  const ToupieAlgebra a(load("monomial.json"));
  CHECK(a.dimension() == 7);
  CHECK(a.groebner().monomial.size() == 2);
}

TEST_CASE("dependent non-monomial relations are rejected") {
  Presentation p = load("e1.json");
  p.relations.push_back(p.relations[0] + p.relations[1]);
  try {
    ToupieAlgebra a(p);
    FAIL("expected rank_deficient");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::rank_deficient);
  }
}

TEST_CASE("normal form against the ideal span in kQ") {
  std::vector<Presentation> cases = random_cases();
  cases.push_back(load("e1.json"));
  cases.push_back(load("monomial.json"));
  for (const Presentation& p : cases) {
    const ToupieAlgebra a(p);
    // Nontips are a basis: their number is dim kQ/I from the span.
    CHECK(a.dimension() == quotient_dimension(p));
    for (const Path& path : p.quiver.all_paths()) {
      const LinComb nf = a.normal_form(path);
      for (const auto& [t, c] : nf.terms()) CHECK(a.find_basis(t).has_value());
      CHECK(a.normal_form(nf) == nf);
      CHECK(in_ideal(p, LinComb(path) - nf));
    }
  }
}

TEST_CASE("structure constants are associative") {
  for (const char* name : {"e1.json", "monomial.json", "quartic_mixed.json"}) {
    const ToupieAlgebra a(load(name));
    const std::size_t n = a.dimension();
    auto times = [&](const std::map<std::size_t, Scalar>& x, std::size_t k, bool left) {
      std::map<std::size_t, Scalar> out;
      for (const auto& [i, c] : x)
        for (const auto& [j, d] : left ? a.product(k, i) : a.product(i, k)) {
          out[j] += c * d;
          if (out[j] == 0) out.erase(j);
        }
      return out;
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          CHECK(times(a.product(i, j), k, false) == times(a.product(j, k), i, true));
  }
}
