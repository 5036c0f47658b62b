#include "toupie/rewriting.hpp"

#include <algorithm>

namespace toupie {

RrefResult rref(RationalMatrix m) {
  RrefResult out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const Scalar inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Scalar factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.matrix = std::move(m);
  return out;
}

RationalMatrix nullspace(const RationalMatrix& m, std::size_t columns) {
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : red.pivots) is_pivot[c] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(columns, Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < red.rank; ++i)
      v[red.pivots[i]] = -red.matrix[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix special_basis(RationalMatrix c) {
  const std::size_t rows = c.size();
  if (rows == 0) return c;
  const std::size_t cols = c.front().size();

  auto column_nonzero = [&](std::size_t k) {
    for (std::size_t l = 0; l < rows; ++l)
      if (c[l][k] != 0) return true;
    return false;
  };
  auto right_is_zero = [&](std::size_t l, std::size_t k) {
    for (std::size_t j = k + 1; j < cols; ++j)
      if (c[l][j] != 0) return false;
    return true;
  };

  // `bound` is the exclusive upper limit for the next column.
  std::size_t bound = cols;
  bool first = true;
  while (bound > 0) {
    std::size_t k = bound;
    while (k > 0 && !column_nonzero(k - 1)) --k;
    if (k == 0) break;
    --k;
    std::optional<std::size_t> pivot;
    for (std::size_t l = rows; l-- > 0;) {
      if (c[l][k] == 0) continue;
      if (first || right_is_zero(l, k)) {
        pivot = l;
        break;
      }
    }
    if (!pivot) break;
    for (std::size_t l = 0; l < *pivot; ++l) {
      if (c[l][k] == 0) continue;
      const Scalar factor = c[l][k] / c[*pivot][k];
      for (std::size_t j = 0; j < cols; ++j) c[l][j] -= factor * c[*pivot][j];
    }
    first = false;
    bound = k;
  }
  return c;
}

std::vector<Path> GroebnerData::tips() const {
  std::vector<Path> out = monomial;
  for (const auto& rel : nonmonomial) out.push_back(rel.tip);
  std::sort(out.begin(), out.end());
  return out;
}

bool GroebnerData::is_tip(const Path& p) const {
  if (std::binary_search(monomial.begin(), monomial.end(), p)) return true;
  return relation_of_tip(p) != nullptr;
}

const NonMonomialRelation* GroebnerData::relation_of_tip(const Path& tip) const {
  for (const auto& rel : nonmonomial)
    if (rel.tip == tip) return &rel;
  return nullptr;
}

LinComb GroebnerData::tip_inverse(const Path& tip) const {
  if (const auto* rel = relation_of_tip(tip)) return rel->rho;
  return LinComb(tip);
}

Scalar GroebnerData::coefficient(const Path& tip, const Path& term) const {
  return tip_inverse(tip).coefficient(term);
}

std::optional<std::pair<std::size_t, Path>> GroebnerData::first_tip(
    const Path& p) const {
  std::optional<std::pair<std::size_t, Path>> best;
  auto consider = [&](const Path& t) {
    auto pos = p.find(t);
    if (!pos) return;
    if (!best || *pos < best->first ||
        (*pos == best->first && t.length() > best->second.length()))
      best = std::make_pair(*pos, t);
  };
  for (const auto& t : monomial) consider(t);
  for (const auto& rel : nonmonomial) consider(rel.tip);
  return best;
}

LinComb GroebnerData::normal_form(const LinComb& a) const {
  LinComb done;
  LinComb work = a;
  // Each rewrite either deletes a term or replaces a full branch by later
  // branches in the fixed order, so this loop terminates.
  while (!work.is_zero()) {
    auto [p, c] = *work.terms().begin();
    work.add(p, -c);
    auto hit = first_tip(p);
    if (!hit) {
      done.add(p, c);
      continue;
    }
    const auto* rel = relation_of_tip(hit->second);
    if (!rel) continue;  // monomial tip: the term vanishes
    const Path left = p.prefix(hit->first);
    const Path right = p.suffix_from(hit->first + hit->second.length());
    for (const auto& [q, d] : rel->f.terms())
      work.add(compose(compose(left, q), right), c * d);
  }
  return done;
}

GroebnerData build_groebner(const ToupieShape& shape,
                            const BranchClasses& classes,
                            const std::vector<LinComb>& relations) {
  GroebnerData g;
  g.b4 = classes.b4;
  RationalMatrix matrix;
  for (const LinComb& rel : relations) {
    for (const auto& [p, c] : rel.terms())
      if (p.length() < 2)
        throw Error(Errc::bad_relation,
                    "relation term of length < 2 (ideal must be admissible)");
    if (rel.size() == 1) {
      g.monomial.push_back(rel.terms().begin()->first);
      continue;
    }
    std::vector<Scalar> row(g.b4.size(), Scalar(0));
    for (const auto& [p, c] : rel.terms()) {
      auto b = shape.branch_index(p);
      auto col = std::find(g.b4.begin(), g.b4.end(), *b) - g.b4.begin();
      row[col] = c;
    }
    matrix.push_back(std::move(row));
  }
  std::sort(g.monomial.begin(), g.monomial.end());
  g.monomial.erase(std::unique(g.monomial.begin(), g.monomial.end()),
                   g.monomial.end());
  for (const auto& s : g.monomial)
    for (const auto& t : g.monomial)
      if (s != t && s.contains(t))
        throw Error(Errc::bad_relation,
                    "monomial relations are not minimal (one contains another)");

  const std::size_t r = matrix.size();
  RrefResult red = rref(std::move(matrix));
  if (red.rank < r)
    throw Error(Errc::rank_deficient,
                "non-monomial relations are linearly dependent (rank " +
                    std::to_string(red.rank) + " < " + std::to_string(r) + ")");
  g.coeff_matrix = std::move(red.matrix);
  for (std::size_t i = 0; i < r; ++i) {
    NonMonomialRelation rel;
    rel.row = i;
    const std::size_t k = red.pivots[i];
    rel.branch = g.b4[k];
    rel.tip = shape.branches[rel.branch];
    rel.rho.add(rel.tip, 1);
    for (std::size_t j = k + 1; j < g.b4.size(); ++j) {
      const Scalar& a = g.coeff_matrix[i][j];
      if (a == 0) continue;
      rel.rho.add(shape.branches[g.b4[j]], a);
      rel.f.add(shape.branches[g.b4[j]], -a);
    }
    g.nonmonomial.push_back(std::move(rel));
  }
  return g;
}

std::vector<std::vector<Path>> nontip_basis(const Quiver& q,
                                            const GroebnerData& g) {
  std::vector<std::vector<Path>> graded;
  for (const Path& p : q.all_paths()) {
    if (!g.is_nontip(p)) continue;
    if (graded.size() <= p.length()) graded.resize(p.length() + 1);
    graded[p.length()].push_back(p);
  }
  return graded;
}

ToupieAlgebra::ToupieAlgebra(Presentation presentation)
    : presentation_(std::move(presentation)) {
  shape_ = validate_toupie(presentation_.quiver, presentation_.order);
  classes_ = classify_branches(shape_, presentation_.relations);
  groebner_ = build_groebner(shape_, classes_, presentation_.relations);
  for (const auto& b : shape_.branches)
    max_length_ = std::max(max_length_, b.length());
  for (const auto& level : nontip_basis(presentation_.quiver, groebner_))
    basis_.insert(basis_.end(), level.begin(), level.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  const std::size_t n = basis_.size();
  table_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto prod = try_compose(basis_[i], basis_[j]);
      if (!prod) continue;
      for (const LinComb nf = groebner_.normal_form(*prod); const auto& [p, c] : nf.terms())
        table_[i * n + j].emplace(index_.at(p), c);
    }
}

std::size_t ToupieAlgebra::basis_index(const Path& p) const {
  return index_.at(p);
}

std::optional<std::size_t> ToupieAlgebra::find_basis(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace toupie
