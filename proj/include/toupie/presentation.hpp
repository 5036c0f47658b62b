#pragma once

// Quivers, paths and linear combinations of paths over Q, plus the toupie
// shape check and the branch classification B1..B4.
//
// Paths are written left to right: p = a1 a2 ... an with t(ai) = s(a(i+1)).

#include "toupie/error.hpp"
#include "toupie/scalar.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toupie {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  std::string name;
  VertexId source;
  VertexId target;
};

struct ArrowSpec {
  std::string name;
  std::string source;
  std::string target;
};

class Path;

class Quiver {
 public:
  Quiver() = default;

  /// Throws Error(invalid_input) on duplicate ids or dangling endpoints.
  static Quiver build(std::vector<std::string> vertices,
                      const std::vector<ArrowSpec>& arrows);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<ArrowId>& out_arrows(VertexId v) const { return out_.at(v); }
  const std::vector<ArrowId>& in_arrows(VertexId v) const { return in_.at(v); }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<ArrowId> find_arrow(const std::string& name) const;

  bool is_acyclic() const;

  /// Every path (trivial ones included) of length <= max_length, sorted.
  std::vector<Path> paths_up_to(std::size_t max_length) const;
  /// All paths of an acyclic quiver. Throws if the quiver has a cycle.
  std::vector<Path> all_paths() const;

  /// Same vertices, arrows reversed and renamed by `rename`.
  template <class Rename>
  Quiver opposite(Rename rename) const {
    Quiver q;
    q.vertices_ = vertices_;
    q.out_.assign(vertices_.size(), {});
    q.in_.assign(vertices_.size(), {});
    for (const Arrow& a : arrows_) {
      q.in_[a.source].push_back(q.arrows_.size());
      q.out_[a.target].push_back(q.arrows_.size());
      q.arrows_.push_back({rename(a.name), a.target, a.source});
    }
    return q;
  }

  /// "a*b*c" for arrows, "e_v" for the trivial path at v.
  std::string path_name(const Path& p) const;

  bool operator==(const Quiver& other) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<ArrowId>> out_;
  std::vector<std::vector<ArrowId>> in_;
};

class Path {
 public:
  Path() = default;
  static Path trivial(VertexId v);
  static Path arrow(const Quiver& q, ArrowId a);
  /// Throws Error(not_composable) if consecutive arrows do not compose,
  /// Error(invalid_input) if `arrows` is empty.
  static Path from_arrows(const Quiver& q, const std::vector<ArrowId>& arrows);

  VertexId source() const { return vertices_.front(); }
  VertexId target() const { return vertices_.back(); }
  std::size_t length() const { return arrows_.size(); }
  bool is_trivial() const { return arrows_.empty(); }
  std::span<const ArrowId> arrows() const { return arrows_; }
  /// Vertex reached after `i` arrows; vertex(0) = source().
  VertexId vertex(std::size_t i) const { return vertices_.at(i); }

  /// Subpath of `len` arrows starting after `pos` arrows (trivial if len = 0).
  Path subpath(std::size_t pos, std::size_t len) const;
  Path prefix(std::size_t len) const { return subpath(0, len); }
  Path suffix_from(std::size_t pos) const {
    return subpath(pos, length() - pos);
  }

  /// Position of the first occurrence of `needle` (nontrivial) at or after
  /// `from`.
  std::optional<std::size_t> find(const Path& needle,
                                  std::size_t from = 0) const;
  bool contains(const Path& needle) const { return find(needle).has_value(); }

  auto operator<=>(const Path&) const = default;
  bool operator==(const Path&) const = default;

 private:
  std::vector<ArrowId> arrows_;
  std::vector<VertexId> vertices_{0};

  friend std::optional<Path> try_compose(const Path&, const Path&);
};

/// Concatenation p then q; nullopt when t(p) != s(q).
std::optional<Path> try_compose(const Path& p, const Path& q);
/// Concatenation p then q. Throws Error(not_composable) when t(p) != s(q).
Path compose(const Path& p, const Path& q);

/// Finite formal sum of paths with nonzero rational coefficients.
class LinComb {
 public:
  using Terms = std::map<Path, Scalar>;

  LinComb() = default;
  explicit LinComb(const Path& p, const Scalar& c = 1) { add(p, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::vector<Path> support() const;
  Scalar coefficient(const Path& p) const;

  void add(const Path& p, const Scalar& c);
  LinComb& operator+=(const LinComb& other);
  LinComb& operator-=(const LinComb& other);
  LinComb& operator*=(const Scalar& c);

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Scalar& c, LinComb a) { return a *= c; }
  bool operator==(const LinComb&) const = default;

 private:
  Terms terms_;
};

/// Product in the free path algebra: bilinear extension of compose,
/// non-composable products vanish.
LinComb lincomb_mul(const LinComb& a, const LinComb& b);

/// "a*b - 2 c*d", "0" when empty.
std::string format_lincomb(const Quiver& q, const LinComb& c);

struct ToupieShape {
  VertexId source = 0;
  VertexId sink = 0;
  /// Branches (paths source -> sink) ordered by length descending, ties by
  /// declared arrow order.
  std::vector<Path> branches;
  /// Branch index of every arrow.
  std::vector<std::size_t> branch_of_arrow;

  std::optional<std::size_t> branch_index(const Path& p) const;
};

/// Certifies the toupie conditions. `order` lists arrow names whose position
/// breaks ties between branches of equal length; unlisted branches follow in
/// declaration order. Throws Error(not_toupie).
ToupieShape validate_toupie(const Quiver& q,
                            std::span<const std::string> order = {});

struct BranchClasses {
  std::vector<std::size_t> b1;  // arrows source -> sink
  std::vector<std::size_t> b2;  // longer branches in no relation
  std::vector<std::size_t> b3;  // branches carrying monomial relations
  std::vector<std::size_t> b4;  // branches in non-monomial relations
};

/// Throws Error(bad_relation) when a relation is neither a single path nor a
/// combination of full branches, or a branch is in both kinds.
BranchClasses classify_branches(const ToupieShape& shape,
                                const std::vector<LinComb>& relations);

/// Quiver, relations and branch tie-break order, as read from input or
/// produced by the duality constructions.
struct Presentation {
  Quiver quiver;
  std::vector<LinComb> relations;
  std::vector<std::string> order;
  std::string provenance = "input";
};

}  // namespace toupie
