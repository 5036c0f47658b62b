#include "toupie/duality.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace toupie {

GammaGraph gamma_graph(const ToupieAlgebra& algebra) {
  const GroebnerData& g = algebra.groebner();
  GammaGraph out;
  out.vertices = g.b4;
  std::sort(out.vertices.begin(), out.vertices.end());
  std::vector<std::size_t> parent(g.b4.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& row : g.coeff_matrix) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) cols.push_back(j);
    for (std::size_t a = 0; a < cols.size(); ++a)
      for (std::size_t b = a + 1; b < cols.size(); ++b) {
        const std::size_t u = g.b4[cols[a]], v = g.b4[cols[b]];
        edges.emplace(std::min(u, v), std::max(u, v));
        parent[find(cols[a])] = find(cols[b]);
      }
  }
  out.edges.assign(edges.begin(), edges.end());
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t j = 0; j < g.b4.size(); ++j) groups[find(j)].push_back(g.b4[j]);
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.components.push_back(std::move(members));
  }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

HypothesesReport hypotheses_check(const ToupieAlgebra& algebra) {
  HypothesesReport report;
  const GroebnerData& g = algebra.groebner();
  const Quiver& q = algebra.quiver();
  for (const Path& m : g.monomial)
    if (m.length() != 2) {
      report.ok = false;
      report.reasons.push_back("monomial relation " + q.path_name(m) + " is not quadratic");
    }
  // A reduced row on a single branch is a monomial generator.
  for (const auto& rel : g.nonmonomial)
    if (rel.rho.size() == 1 && rel.tip.length() != 2) {
      report.ok = false;
      report.reasons.push_back("monomial relation " + q.path_name(rel.tip) + " is not quadratic");
    }
  const GammaGraph graph = gamma_graph(algebra);
  for (const auto& component : graph.components) {
    std::vector<std::string> cubic;
    for (const auto& rel : g.nonmonomial)
      if (std::binary_search(component.begin(), component.end(), rel.branch) &&
          rel.rho.size() > 1 && rel.tip.length() > 2)
        cubic.push_back(q.path_name(rel.tip));
    if (cubic.size() > 1) {
      report.ok = false;
      std::string names;
      for (const auto& c : cubic) names += (names.empty() ? "" : ", ") + c;
      report.reasons.push_back("component of Gamma(A) has " + std::to_string(cubic.size()) +
                               " non-quadratic tips: " + names);
    }
  }
  return report;
}

Presentation gr_algebra(const ToupieAlgebra& algebra) {
  const GroebnerData& g = algebra.groebner();
  const auto& branches = algebra.shape().branches;
  Presentation out;
  out.quiver = algebra.quiver();
  out.order = algebra.presentation().order;
  out.provenance = "gr";
  for (const Path& m : g.monomial) out.relations.emplace_back(m);
  for (const auto& row : special_basis(g.coeff_matrix)) {
    std::size_t min_len = 0;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0 && (min_len == 0 || branches[g.b4[j]].length() < min_len))
        min_len = branches[g.b4[j]].length();
    if (min_len == 0) continue;
    LinComb rel;
    Scalar lead = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0 || branches[g.b4[j]].length() != min_len) continue;
      if (lead == 0) lead = row[j];
      rel.add(branches[g.b4[j]], row[j] / lead);
    }
    out.relations.push_back(std::move(rel));
  }
  return out;
}

namespace {

struct IdealRows {
  std::vector<Path> paths;
  std::map<Path, std::size_t> column;
  std::vector<std::vector<Scalar>> rows;
};

IdealRows ideal_rows(const Quiver& q, const std::vector<LinComb>& relations) {
  IdealRows out;
  out.paths = q.all_paths();
  for (std::size_t i = 0; i < out.paths.size(); ++i) out.column.emplace(out.paths[i], i);
  std::set<std::vector<Scalar>> seen;
  for (const LinComb& rel : relations) {
    std::set<VertexId> starts, ends;
    for (const auto& [p, c] : rel.terms()) {
      starts.insert(p.source());
      ends.insert(p.target());
    }
    for (const Path& left : out.paths) {
      if (!starts.count(left.target())) continue;
      for (const Path& right : out.paths) {
        if (!ends.count(right.source())) continue;
        const LinComb prod = lincomb_mul(lincomb_mul(LinComb(left), rel), LinComb(right));
        if (prod.is_zero()) continue;
        std::vector<Scalar> row(out.paths.size(), Scalar(0));
        for (const auto& [p, c] : prod.terms()) row[out.column.at(p)] = c;
        if (seen.insert(row).second) out.rows.push_back(std::move(row));
      }
    }
  }
  return out;
}

RationalMatrix nonzero_rows(const RrefResult& r) {
  return RationalMatrix(r.matrix.begin(), r.matrix.begin() + r.rank);
}

}  // namespace

RationalMatrix ideal_basis(const Quiver& q, const std::vector<LinComb>& relations) {
  IdealRows rows = ideal_rows(q, relations);
  if (rows.rows.empty()) return {};
  return nonzero_rows(rref(std::move(rows.rows)));
}

std::size_t quotient_dimension(const Presentation& p) {
  return p.quiver.all_paths().size() - ideal_basis(p.quiver, p.relations).size();
}

std::vector<std::size_t> graded_dimensions(const Presentation& p) {
  IdealRows rows = ideal_rows(p.quiver, p.relations);
  std::size_t top = 0;
  for (const Path& path : rows.paths) top = std::max(top, path.length());
  std::vector<std::size_t> dims(top + 1, 0);
  for (const Path& path : rows.paths) ++dims[path.length()];
  std::vector<RationalMatrix> by_degree(top + 1);
  for (auto& row : rows.rows) {
    std::set<std::size_t> lengths;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) lengths.insert(rows.paths[j].length());
    if (lengths.size() != 1)
      throw Error(Errc::invalid_input, "graded dimensions need homogeneous relations");
    by_degree[*lengths.begin()].push_back(std::move(row));
  }
  for (std::size_t d = 0; d <= top; ++d)
    if (!by_degree[d].empty()) dims[d] -= rref(std::move(by_degree[d])).rank;
  return dims;
}

bool ideal_equal(const Presentation& a, const Presentation& b) {
  if (!(a.quiver == b.quiver))
    throw Error(Errc::invalid_input, "ideal comparison needs identical quivers");
  return ideal_basis(a.quiver, a.relations) == ideal_basis(b.quiver, b.relations);
}

bool is_homogeneous(const Presentation& p) {
  for (const LinComb& rel : p.relations) {
    std::set<std::size_t> lengths;
    for (const auto& [path, c] : rel.terms()) lengths.insert(path.length());
    if (lengths.size() > 1) return false;
  }
  return true;
}

namespace {

void require_hypotheses(const ToupieAlgebra& algebra) {
  const HypothesesReport hyp = hypotheses_check(algebra);
  if (hyp.ok) return;
  std::string why;
  for (const auto& r : hyp.reasons) why += (why.empty() ? "" : "; ") + r;
  throw Error(Errc::hypotheses, why);
}

std::vector<std::pair<ArrowId, ArrowId>> composable_pairs(const Quiver& q) {
  std::vector<std::pair<ArrowId, ArrowId>> pairs;
  for (ArrowId a = 0; a < q.arrow_count(); ++a)
    for (ArrowId b : q.out_arrows(q.arrow(a).target)) pairs.emplace_back(a, b);
  return pairs;
}

}  // namespace

Presentation quadratic_part(const ToupieAlgebra& algebra, const AlgebraTable& ext) {
  const Quiver& q = algebra.quiver();
  const ChainIndex chains(algebra);
  Presentation out;
  out.quiver = q.opposite([](const std::string& name) { return name + kDualSuffix; });
  for (const auto& name : algebra.presentation().order) out.order.push_back(name + kDualSuffix);
  out.provenance = "yoneda";

  const auto pairs = composable_pairs(q);
  const auto& degree2 = chains.chains(1);
  std::map<BarWord, std::size_t> row_of;
  for (const Chain& c : degree2) row_of.emplace(to_bar_word(c), row_of.size());
  RationalMatrix m(degree2.size(), std::vector<Scalar>(pairs.size(), Scalar(0)));
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const BarWord a = BarWord::of({Path::arrow(q, pairs[j].first)});
    const BarWord b = BarWord::of({Path::arrow(q, pairs[j].second)});
    for (const auto& [g, x] : ext.product({a, b})) m[row_of.at(g)][j] = x;
  }
  for (const auto& v : nullspace(m, pairs.size())) {
    LinComb rel;
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if (v[j] != 0)
        rel.add(Path::from_arrows(out.quiver, {pairs[j].second, pairs[j].first}), v[j]);
    out.relations.push_back(std::move(rel));
  }
  return out;
}

Presentation yoneda_presentation(const ToupieAlgebra& algebra) {
  require_hypotheses(algebra);
  const ChainIndex chains(algebra);
  return quadratic_part(algebra, dualize(closed_coalgebra(chains, 2)));
}

CheckReport koszul_check(const ToupieAlgebra& algebra) {
  CheckReport report;
  const ChainIndex chains(algebra);
  const AlgebraTable ext = dualize(closed_coalgebra(chains, 2));

  // E^k = m_2(E^1, E^{k-1}) for every k >= 2.
  for (int idx = 1; idx <= chains.top_index(); ++idx) {
    const auto& targets = chains.chains(idx);
    std::map<BarWord, std::size_t> col;
    for (const Chain& c : targets) col.emplace(to_bar_word(c), col.size());
    RationalMatrix images;
    for (const Chain& a : chains.chains(0))
      for (const Chain& c : chains.chains(idx - 1)) {
        if (a.path.target() != c.path.source()) continue;
        const BarVec prod = ext.product({to_bar_word(a), to_bar_word(c)});
        if (prod.empty()) continue;
        std::vector<Scalar> row(col.size(), Scalar(0));
        for (const auto& [g, x] : prod) row[col.at(g)] = x;
        images.push_back(std::move(row));
      }
    const std::size_t rank = images.empty() ? 0 : rref(std::move(images)).rank;
    ++report.checked;
    if (rank != targets.size())
      report.fail("Ext is not generated in degree 1: products reach " +
                  std::to_string(rank) + " of " + std::to_string(targets.size()) +
                  " basis elements in degree " + std::to_string(idx + 1));
  }

  // The quadratic part must have the graded dimensions of Ext.
  const std::vector<std::size_t> dims = graded_dimensions(quadratic_part(algebra, ext));
  std::vector<std::size_t> ext_dims{algebra.quiver().vertex_count()};
  for (int idx = 0; idx <= chains.top_index(); ++idx)
    ext_dims.push_back(chains.chains(idx).size());
  const std::size_t top = std::max(dims.size(), ext_dims.size());
  for (std::size_t d = 0; d < top; ++d) {
    const std::size_t x = d < dims.size() ? dims[d] : 0;
    const std::size_t y = d < ext_dims.size() ? ext_dims[d] : 0;
    ++report.checked;
    if (x != y)
      report.fail("quadratic part has dimension " + std::to_string(x) + " in degree " +
                  std::to_string(d) + " but Ext has " + std::to_string(y));
  }
  return report;
}

Presentation double_dual(const Presentation& presentation) {
  const ToupieAlgebra a(presentation);
  const Presentation first = yoneda_presentation(a);
  const ToupieAlgebra b(first);
  Presentation second = yoneda_presentation(b);

  const std::string suffix = std::string(kDualSuffix) + kDualSuffix;
  std::vector<ArrowSpec> arrows;
  for (const Arrow& x : second.quiver.arrows()) {
    std::string name = x.name;
    if (name.size() >= suffix.size() &&
        name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
      name.resize(name.size() - suffix.size());
    arrows.push_back({name, second.quiver.vertex_name(x.source),
                      second.quiver.vertex_name(x.target)});
  }
  Presentation out;
  out.quiver = Quiver::build(second.quiver.vertices(), arrows);
  out.relations = std::move(second.relations);
  out.order = presentation.order;
  out.provenance = "double-dual";
  return out;
}

}  // namespace toupie
