#pragma once

// Coefficient matrix of the non-monomial relations, the Groebner data of a
// toupie ideal (tips, tip^-1, f_rho, coefficients) and normal forms in A.

#include "toupie/presentation.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace toupie {

/// Dense matrix over Q, row major.
using RationalMatrix = std::vector<std::vector<Scalar>>;

struct RrefResult {
  RationalMatrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination. Zero rows are kept
/// at the bottom so the shape is preserved.
RrefResult rref(RationalMatrix m);

/// Basis of {x : m x = 0}, one vector per free column.
RationalMatrix nullspace(const RationalMatrix& m, std::size_t columns);

/// Row operations that clear, column by column from the right, the entries
/// above the bottom-most usable pivot. Input is expected in RREF.
RationalMatrix special_basis(RationalMatrix c);

struct NonMonomialRelation {
  std::size_t row = 0;     // row of the reduced coefficient matrix
  std::size_t branch = 0;  // branch index of the tip
  Path tip;
  LinComb rho;  // tip + sum_{j > k} a_j * branch_j
  LinComb f;    // -sum_{j > k} a_j * branch_j
};

struct GroebnerData {
  std::vector<Path> monomial;                    // G_mon, sorted
  std::vector<NonMonomialRelation> nonmonomial;  // G_nomon, by matrix row
  std::vector<std::size_t> b4;                   // matrix columns -> branch
  RationalMatrix coeff_matrix;                   // reduced, rank = rows

  /// All tips, sorted.
  std::vector<Path> tips() const;
  bool is_tip(const Path& p) const;
  /// Non-monomial relation whose tip is `tip`, if any.
  const NonMonomialRelation* relation_of_tip(const Path& tip) const;
  /// rho for a non-monomial tip, the tip itself for a monomial one.
  LinComb tip_inverse(const Path& tip) const;
  /// c(term) in tip^-1(tip); 1 for the tip itself.
  Scalar coefficient(const Path& tip, const Path& term) const;

  /// First (leftmost, then longest) tip occurrence as (position, tip).
  std::optional<std::pair<std::size_t, Path>> first_tip(const Path& p) const;
  bool in_tip_ideal(const Path& p) const { return first_tip(p).has_value(); }
  bool is_nontip(const Path& p) const { return !in_tip_ideal(p); }

  LinComb normal_form(const LinComb& a) const;
  LinComb normal_form(const Path& p) const { return normal_form(LinComb(p)); }
};

/// Assembles and reduces the coefficient matrix and reads off the Groebner
/// data. Throws Error(bad_relation) for monomial relations of length < 2 and
/// Error(rank_deficient) for dependent non-monomial relations.
GroebnerData build_groebner(const ToupieShape& shape,
                            const BranchClasses& classes,
                            const std::vector<LinComb>& relations);

/// Nontip paths (trivial ones included) grouped by length.
std::vector<std::vector<Path>> nontip_basis(const Quiver& q,
                                            const GroebnerData& g);

/// A toupie algebra kQ/I with everything derived from its presentation.
class ToupieAlgebra {
 public:
  explicit ToupieAlgebra(Presentation presentation);

  const Presentation& presentation() const { return presentation_; }
  const Quiver& quiver() const { return presentation_.quiver; }
  const ToupieShape& shape() const { return shape_; }
  const BranchClasses& classes() const { return classes_; }
  const GroebnerData& groebner() const { return groebner_; }

  /// Nontip basis, sorted by (length, path).
  const std::vector<Path>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t basis_index(const Path& p) const;
  std::optional<std::size_t> find_basis(const Path& p) const;
  /// Max branch length; bounds every path and every bar degree.
  std::size_t max_path_length() const { return max_length_; }

  /// Structure constants: basis[i] * basis[j] in the nontip basis.
  const std::map<std::size_t, Scalar>& product(std::size_t i,
                                               std::size_t j) const {
    return table_[i * basis_.size() + j];
  }

  LinComb normal_form(const LinComb& a) const {
    return groebner_.normal_form(a);
  }
  LinComb normal_form(const Path& p) const { return groebner_.normal_form(p); }

 private:
  Presentation presentation_;
  ToupieShape shape_;
  BranchClasses classes_;
  GroebnerData groebner_;
  std::vector<Path> basis_;
  std::map<Path, std::size_t> index_;
  std::vector<std::map<std::size_t, Scalar>> table_;
  std::size_t max_length_ = 0;
};

}  // namespace toupie
