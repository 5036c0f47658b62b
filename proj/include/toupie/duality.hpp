#pragma once

// Yoneda algebra A^! as a presentation on the opposite quiver, the
// branch graph Gamma(A), gr(A) from the special basis, the double dual and
// ideal comparison.

#include "toupie/ainf.hpp"

#include <string>
#include <vector>

namespace toupie {

/// Suffix appended to arrow names on the opposite quiver.
inline constexpr const char* kDualSuffix = "∨";

struct GammaGraph {
  std::vector<std::size_t> vertices;  // branches in non-monomial relations
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> components;  // sorted branch lists
};

/// Two branches are adjacent when a reduced non-monomial relation involves
/// both.
GammaGraph gamma_graph(const ToupieAlgebra& algebra);

struct HypothesesReport {
  bool ok = true;
  std::vector<std::string> reasons;
};

/// Monomial relations quadratic, and at most one non-monomial relation
/// with a non-quadratic tip in each component of Gamma(A).
HypothesesReport hypotheses_check(const ToupieAlgebra& algebra);

/// Relations of gr(A): each special-basis row cut down to its terms of
/// minimal length, normalized at the first of them; monomials unchanged.
Presentation gr_algebra(const ToupieAlgebra& algebra);

/// Opposite quiver with the kernel of m_2 on pairs of arrow duals as
/// quadratic relations. Throws Error(hypotheses) when hypotheses_check fails.
Presentation yoneda_presentation(const ToupieAlgebra& algebra);
/// Same construction from a given Ext table, without the hypotheses gate.
Presentation quadratic_part(const ToupieAlgebra& algebra, const AlgebraTable& ext);

/// Ext generated in degree 1 and the quadratic part with the graded
/// dimensions of Ext, i.e. the quadratic part presents Ext.
CheckReport koszul_check(const ToupieAlgebra& algebra);

/// yoneda_presentation twice, arrows renamed back onto Q.
Presentation double_dual(const Presentation& presentation);

/// Span of the two-sided ideal in kQ (Q acyclic), as an RREF basis over
/// the sorted path list.
RationalMatrix ideal_basis(const Quiver& q, const std::vector<LinComb>& relations);

/// dim kQ/I.
std::size_t quotient_dimension(const Presentation& p);
/// dim (kQ/I)_d for d = 0..max path length; relations must be homogeneous.
std::vector<std::size_t> graded_dimensions(const Presentation& p);

/// Same ideal in kQ. Throws Error(invalid_input) if the quivers differ.
bool ideal_equal(const Presentation& a, const Presentation& b);

/// Every relation has all its terms of one length.
bool is_homogeneous(const Presentation& p);

}  // namespace toupie
