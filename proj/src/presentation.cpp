#include "toupie/presentation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

namespace toupie {

Quiver Quiver::build(std::vector<std::string> vertices,
                     const std::vector<ArrowSpec>& arrows) {
  Quiver q;
  std::unordered_map<std::string, VertexId> vindex;
  for (const auto& v : vertices) {
    if (v.empty()) throw Error(Errc::invalid_input, "empty vertex id");
    if (!vindex.emplace(v, vindex.size()).second)
      throw Error(Errc::invalid_input, "duplicate vertex '" + v + "'");
  }
  q.vertices_ = std::move(vertices);
  q.out_.assign(q.vertices_.size(), {});
  q.in_.assign(q.vertices_.size(), {});
  std::set<std::string> names;
  for (const auto& a : arrows) {
    if (a.name.empty()) throw Error(Errc::invalid_input, "empty arrow name");
    if (!names.insert(a.name).second)
      throw Error(Errc::invalid_input, "duplicate arrow '" + a.name + "'");
    auto s = vindex.find(a.source);
    auto t = vindex.find(a.target);
    if (s == vindex.end())
      throw Error(Errc::invalid_input,
                  "arrow '" + a.name + "' has unknown source '" + a.source + "'");
    if (t == vindex.end())
      throw Error(Errc::invalid_input,
                  "arrow '" + a.name + "' has unknown target '" + a.target + "'");
    q.out_[s->second].push_back(q.arrows_.size());
    q.in_[t->second].push_back(q.arrows_.size());
    q.arrows_.push_back({a.name, s->second, t->second});
  }
  return q;
}

std::optional<VertexId> Quiver::find_vertex(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<ArrowId> Quiver::find_arrow(const std::string& name) const {
  for (ArrowId a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].name == name) return a;
  return std::nullopt;
}

bool Quiver::is_acyclic() const {
  std::vector<std::size_t> indeg(vertices_.size());
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < vertices_.size(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++seen;
    for (ArrowId a : out_[v])
      if (--indeg[arrows_[a].target] == 0) ready.push_back(arrows_[a].target);
  }
  return seen == vertices_.size();
}

std::vector<Path> Quiver::paths_up_to(std::size_t max_length) const {
  std::vector<Path> result;
  std::vector<Path> frontier;
  for (VertexId v = 0; v < vertices_.size(); ++v)
    frontier.push_back(Path::trivial(v));
  result = frontier;
  for (std::size_t len = 1; len <= max_length && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier)
      for (ArrowId a : out_[p.target()])
        next.push_back(compose(p, Path::arrow(*this, a)));
    result.insert(result.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Path> Quiver::all_paths() const {
  if (!is_acyclic())
    throw Error(Errc::invalid_input, "path enumeration needs an acyclic quiver");
  return paths_up_to(vertices_.size());
}

std::string Quiver::path_name(const Path& p) const {
  if (p.is_trivial()) return "e_" + vertices_.at(p.source());
  std::string out;
  for (ArrowId a : p.arrows()) {
    if (!out.empty()) out += '*';
    out += arrows_.at(a).name;
  }
  return out;
}

bool Quiver::operator==(const Quiver& other) const {
  if (vertices_ != other.vertices_ || arrows_.size() != other.arrows_.size())
    return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const auto& a = arrows_[i];
    const auto& b = other.arrows_[i];
    if (a.name != b.name || a.source != b.source || a.target != b.target)
      return false;
  }
  return true;
}

Path Path::trivial(VertexId v) {
  Path p;
  p.vertices_ = {v};
  return p;
}

Path Path::arrow(const Quiver& q, ArrowId a) {
  Path p;
  p.arrows_ = {a};
  p.vertices_ = {q.arrow(a).source, q.arrow(a).target};
  return p;
}

Path Path::from_arrows(const Quiver& q, const std::vector<ArrowId>& arrows) {
  if (arrows.empty()) throw Error(Errc::invalid_input, "empty arrow sequence");
  Path p = Path::arrow(q, arrows.front());
  for (std::size_t i = 1; i < arrows.size(); ++i)
    p = compose(p, Path::arrow(q, arrows[i]));
  return p;
}

Path Path::subpath(std::size_t pos, std::size_t len) const {
  if (pos + len > length())
    throw Error(Errc::invalid_input, "subpath out of range");
  Path p;
  p.arrows_.assign(arrows_.begin() + pos, arrows_.begin() + pos + len);
  p.vertices_.assign(vertices_.begin() + pos, vertices_.begin() + pos + len + 1);
  return p;
}

std::optional<std::size_t> Path::find(const Path& needle,
                                      std::size_t from) const {
  if (needle.is_trivial() || needle.length() > length()) return std::nullopt;
  auto it = std::search(arrows_.begin() + std::min(from, arrows_.size()),
                        arrows_.end(), needle.arrows_.begin(),
                        needle.arrows_.end());
  if (it == arrows_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - arrows_.begin());
}

std::optional<Path> try_compose(const Path& p, const Path& q) {
  if (p.target() != q.source()) return std::nullopt;
  Path r = p;
  r.arrows_.insert(r.arrows_.end(), q.arrows_.begin(), q.arrows_.end());
  r.vertices_.insert(r.vertices_.end(), q.vertices_.begin() + 1,
                     q.vertices_.end());
  return r;
}

Path compose(const Path& p, const Path& q) {
  auto r = try_compose(p, q);
  if (!r) throw Error(Errc::not_composable, "paths do not compose");
  return *r;
}

std::vector<Path> LinComb::support() const {
  std::vector<Path> out;
  for (const auto& [p, c] : terms_) out.push_back(p);
  return out;
}

Scalar LinComb::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void LinComb::add(const Path& p, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LinComb& LinComb::operator+=(const LinComb& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& other) {
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

LinComb& LinComb::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

LinComb lincomb_mul(const LinComb& a, const LinComb& b) {
  LinComb out;
  for (const auto& [p, x] : a.terms())
    for (const auto& [q, y] : b.terms())
      if (auto r = try_compose(p, q)) out.add(*r, x * y);
  return out;
}

std::optional<std::size_t> ToupieShape::branch_index(const Path& p) const {
  auto it = std::find(branches.begin(), branches.end(), p);
  if (it == branches.end()) return std::nullopt;
  return static_cast<std::size_t>(it - branches.begin());
}

ToupieShape validate_toupie(const Quiver& q, std::span<const std::string> order) {
  if (q.arrow_count() == 0)
    throw Error(Errc::not_toupie, "quiver has no arrows");
  std::vector<VertexId> sources, sinks;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    const auto in = q.in_arrows(v).size();
    const auto out = q.out_arrows(v).size();
    if (in == 0) sources.push_back(v);
    if (out == 0) sinks.push_back(v);
    if (in != 0 && out != 0 && (in != 1 || out != 1))
      throw Error(Errc::not_toupie,
                  "vertex '" + q.vertex_name(v) + "' has in-degree " +
                      std::to_string(in) + " and out-degree " +
                      std::to_string(out) + "; intermediate vertices need (1,1)");
  }
  if (sources.size() != 1)
    throw Error(Errc::not_toupie, "expected a unique source, found " +
                                      std::to_string(sources.size()));
  if (sinks.size() != 1)
    throw Error(Errc::not_toupie,
                "expected a unique sink, found " + std::to_string(sinks.size()));
  if (sources.front() == sinks.front())
    throw Error(Errc::not_toupie, "source and sink coincide");
  if (!q.is_acyclic()) throw Error(Errc::not_toupie, "quiver has a cycle");

  ToupieShape shape;
  shape.source = sources.front();
  shape.sink = sinks.front();

  std::vector<Path> branches;
  for (ArrowId first : q.out_arrows(shape.source)) {
    Path p = Path::arrow(q, first);
    while (p.target() != shape.sink)
      p = compose(p, Path::arrow(q, q.out_arrows(p.target()).front()));
    branches.push_back(p);
  }

  auto rank = [&](const Path& b) {
    std::size_t best = order.size() + q.arrow_count();
    for (ArrowId a : b.arrows()) {
      auto it = std::find(order.begin(), order.end(), q.arrow(a).name);
      if (it != order.end())
        best = std::min(best, static_cast<std::size_t>(it - order.begin()));
    }
    if (best == order.size() + q.arrow_count())
      best = order.size() + b.arrows().front();
    return best;
  };
  std::stable_sort(branches.begin(), branches.end(),
                   [&](const Path& a, const Path& b) {
                     if (a.length() != b.length())
                       return a.length() > b.length();
                     return rank(a) < rank(b);
                   });
  shape.branches = std::move(branches);
  shape.branch_of_arrow.assign(q.arrow_count(), 0);
  for (std::size_t i = 0; i < shape.branches.size(); ++i)
    for (ArrowId a : shape.branches[i].arrows()) shape.branch_of_arrow[a] = i;
  return shape;
}

BranchClasses classify_branches(const ToupieShape& shape,
                                const std::vector<LinComb>& relations) {
  const std::size_t n = shape.branches.size();
  std::vector<bool> monomial(n, false), nonmonomial(n, false);
  for (const LinComb& rel : relations) {
    if (rel.is_zero()) throw Error(Errc::bad_relation, "zero relation");
    if (rel.size() == 1) {
      const Path& p = rel.terms().begin()->first;
      if (p.is_trivial())
        throw Error(Errc::bad_relation, "relation is a trivial path");
      monomial[shape.branch_of_arrow[p.arrows().front()]] = true;
      continue;
    }
    for (const auto& [p, c] : rel.terms()) {
      auto b = shape.branch_index(p);
      if (!b)
        throw Error(Errc::bad_relation,
                    "non-monomial relation has a term that is not a full branch");
      nonmonomial[*b] = true;
    }
  }
  BranchClasses classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (monomial[i] && nonmonomial[i])
      throw Error(Errc::bad_relation,
                  "branch " + std::to_string(i) +
                      " occurs in both a monomial and a non-monomial relation");
    if (shape.branches[i].length() == 1)
      classes.b1.push_back(i);
    else if (nonmonomial[i])
      classes.b4.push_back(i);
    else if (monomial[i])
      classes.b3.push_back(i);
    else
      classes.b2.push_back(i);
  }
  return classes;
}

std::string format_lincomb(const Quiver& q, const LinComb& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [p, x] : c.terms()) {
    const bool neg = x < 0;
    const Scalar a = neg ? Scalar(-x) : x;
    if (out.empty())
      out = neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (a != 1) out += format_scalar(a) + " ";
    out += q.path_name(p);
  }
  return out;
}

}  // namespace toupie
