#include "toupie/cli.hpp"
#include "toupie/duality.hpp"

#include <algorithm>
#include <functional>
#include <memory>

namespace toupie {

using nlohmann::json;

namespace {

json word_json(const Quiver& q, const BarWord& w) {
  if (w.letters.empty()) return q.vertex_name(w.base);
  json out = json::array();
  for (const Path& l : w.letters) out.push_back(path_to_json(q, l));
  return out;
}

json vec_json(const Quiver& q, const BarVec& v) {
  json out = json::array();
  for (const auto& [w, c] : v) out.push_back({{"coeff", format_scalar(c)}, {"chain", word_json(q, w)}});
  return out;
}

json tensor_json(const Quiver& q, const Tensor& t) {
  json out = json::array();
  for (const BarWord& w : t) out.push_back(word_json(q, w));
  return out;
}

json matrix_json(const RationalMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const Scalar& x : row) r.push_back(format_scalar(x));
    out.push_back(std::move(r));
  }
  return out;
}

std::string coeff_prefix(const Scalar& c) {
  if (c == 1) return "";
  if (c == -1) return "-";
  return format_scalar(c) + " ";
}

std::string dual_name(const Quiver& q, const BarWord& w) {
  return format_word(q, w) + kDualSuffix;
}

void add_check(Report& r, const std::string& name, const CheckReport& c) {
  r.result[name] = {{"ok", c.ok}, {"checked", c.checked}, {"failures", c.failures}};
  r.lines.push_back(name + ": " + (c.ok ? "ok" : "FAILED") + " (" +
                    std::to_string(c.checked) + " checks)");
  for (const auto& f : c.failures) r.diff.push_back(name + ": " + f);
}

// Everything a command may need, built on first use.
class Context {
 public:
  Context(const JobSpec& job, const Presentation& p) : job(job), algebra(p), chains(algebra) {}

  const Quiver& quiver() const { return algebra.quiver(); }
  const BarMorse& bar() {
    if (!bar_) bar_ = std::make_unique<BarMorse>(chains);
    return *bar_;
  }
  const CoalgebraTable& tor() {
    if (!tor_) tor_ = std::make_unique<CoalgebraTable>(closed_coalgebra(chains, job.arity));
    return *tor_;
  }

  const JobSpec& job;
  const ToupieAlgebra algebra;
  const ChainIndex chains;

 private:
  std::unique_ptr<BarMorse> bar_;
  std::unique_ptr<CoalgebraTable> tor_;
};

std::string class_of(const BranchClasses& c, std::size_t b) {
  auto in = [b](const std::vector<std::size_t>& v) {
    return std::find(v.begin(), v.end(), b) != v.end();
  };
  if (in(c.b1)) return "B1";
  if (in(c.b3)) return "B3";
  if (in(c.b4)) return "B4";
  return "B2";
}

void cmd_validate(Context& cx, Report& r) {
  const Quiver& q = cx.quiver();
  const ToupieShape& s = cx.algebra.shape();
  const BranchClasses& c = cx.algebra.classes();
  r.result["toupie"] = true;
  r.result["source"] = q.vertex_name(s.source);
  r.result["sink"] = q.vertex_name(s.sink);
  r.result["branches"] = s.branches.size();
  r.result["relations"] = cx.algebra.presentation().relations.size();
  r.result["dimension"] = cx.algebra.dimension();
  r.result["classes"] = {{"B1", c.b1}, {"B2", c.b2}, {"B3", c.b3}, {"B4", c.b4}};
  r.lines.push_back("toupie quiver: source " + q.vertex_name(s.source) + ", sink " +
                    q.vertex_name(s.sink) + ", " + std::to_string(s.branches.size()) +
                    " branches");
  r.lines.push_back("dimension " + std::to_string(cx.algebra.dimension()));
}

void cmd_branches(Context& cx, Report& r) {
  const Quiver& q = cx.quiver();
  json list = json::array();
  const auto& branches = cx.algebra.shape().branches;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    const std::string cls = class_of(cx.algebra.classes(), b);
    list.push_back({{"index", b},
                    {"path", path_to_json(q, branches[b])},
                    {"length", branches[b].length()},
                    {"class", cls}});
    r.lines.push_back(std::to_string(b) + " " + q.path_name(branches[b]) + " " + cls);
  }
  r.result["branches"] = std::move(list);
}

void cmd_tips(Context& cx, Report& r) {
  const Quiver& q = cx.quiver();
  const GroebnerData& g = cx.algebra.groebner();
  json mono = json::array();
  for (const Path& m : g.monomial) {
    mono.push_back(path_to_json(q, m));
    r.lines.push_back("tip " + q.path_name(m) + " (monomial)");
  }
  json nonmono = json::array();
  for (const auto& rel : g.nonmonomial) {
    nonmono.push_back({{"tip", path_to_json(q, rel.tip)}, {"relation", lincomb_to_json(q, rel.rho)}});
    r.lines.push_back("tip " + q.path_name(rel.tip) + " of " + format_lincomb(q, rel.rho));
  }
  std::vector<std::size_t> by_length;
  for (const Path& p : cx.algebra.basis()) {
    if (by_length.size() <= p.length()) by_length.resize(p.length() + 1, 0);
    ++by_length[p.length()];
  }
  r.result["monomial"] = std::move(mono);
  r.result["nonmonomial"] = std::move(nonmono);
  r.result["coefficient_matrix"] = matrix_json(g.coeff_matrix);
  r.result["special_basis"] = matrix_json(special_basis(g.coeff_matrix));
  r.result["nontips_by_length"] = by_length;
  r.result["dimension"] = cx.algebra.dimension();
  r.lines.push_back("dimension " + std::to_string(cx.algebra.dimension()));
}

void cmd_chains(Context& cx, Report& r) {
  const Quiver& q = cx.quiver();
  json levels = json::array();
  const int top = std::min(cx.chains.top_index(), static_cast<int>(cx.job.degree) - 1);
  for (int n = -1; n <= top; ++n) {
    json list = json::array();
    std::string line = "W(" + std::to_string(n) + "):";
    for (const Chain& c : cx.chains.chains(n)) {
      list.push_back(word_json(q, to_bar_word(c)));
      line += " " + format_word(q, to_bar_word(c));
    }
    levels.push_back({{"index", n}, {"chains", std::move(list)}});
    r.lines.push_back(line);
  }
  r.result["chains"] = std::move(levels);
}

void cmd_betti(Context& cx, Report& r) {
  const AnickResolution res(cx.bar());
  std::vector<std::size_t> betti = res.betti(cx.job.degree);
  for (std::size_t n = 0; n < betti.size(); ++n) {
    const std::size_t expected = cx.chains.chains(static_cast<int>(n) - 1).size();
    if (betti[n] != expected)
      r.diff.push_back("degree " + std::to_string(n) + ": " + std::to_string(betti[n]) +
                       " generators but " + std::to_string(expected) + " chains");
  }
  // Chains of higher index extend lower ones: stop at the first zero.
  auto zero = std::find(betti.begin(), betti.end(), 0);
  if (zero != betti.end()) betti.erase(zero + 1, betti.end());
  r.result["betti"] = betti;
  std::string line = "betti:";
  for (std::size_t b : betti) line += " " + std::to_string(b);
  r.lines.push_back(line);
}

void cmd_resolution(Context& cx, Report& r) {
  const AnickResolution res(cx.bar());
  add_check(r, "d_squared", res.check_d_squared(cx.job.degree));
  add_check(r, "minimal", res.check_minimal(cx.job.degree));
  add_check(r, "closed_d1_d2", res.check_low_degrees());
}

void cmd_sdr(Context& cx, Report& r) {
  const BarMorse& bar = cx.bar();
  add_check(r, "sdr_oracle", verify_sdr(bar, oracle_maps(bar), cx.job.degree));
  add_check(r, "sdr_closed", verify_sdr(bar, closed_maps(bar), cx.job.degree));
  add_check(r, "closed_vs_oracle", compare_sdr(bar, cx.job.degree));
}

void cmd_tor(Context& cx, Report& r) {
  const Quiver& q = cx.quiver();
  json list = json::array();
  for (const auto& [n, rows] : cx.tor().delta)
    for (const auto& [chain, value] : rows) {
      if (value.empty()) continue;
      json terms = json::array();
      for (const auto& [t, c] : value)
        terms.push_back({{"coeff", format_scalar(c)}, {"tensor", tensor_json(q, t)}});
      list.push_back({{"arity", n}, {"chain", word_json(q, chain)}, {"value", std::move(terms)}});
      r.lines.push_back("Delta" + std::to_string(n) + format_word(q, chain) + " = " +
                        format_tensor_vec(q, value));
    }
  r.result["coproducts"] = std::move(list);
}

void cmd_ext(Context& cx, Report& r) {
  const Quiver& q = cx.quiver();
  const AlgebraTable ext = dualize(cx.tor());
  json list = json::array();
  for (const auto& [n, rows] : ext.m)
    for (const auto& [inputs, value] : rows) {
      if (value.empty()) continue;
      list.push_back({{"arity", n}, {"inputs", tensor_json(q, inputs)}, {"value", vec_json(q, value)}});
      std::string args;
      for (const BarWord& w : inputs) args += (args.empty() ? "" : ", ") + dual_name(q, w);
      std::string rhs;
      for (const auto& [w, c] : value)
        rhs += (rhs.empty() ? "" : " + ") + coeff_prefix(c) + dual_name(q, w);
      r.lines.push_back("m" + std::to_string(n) + "(" + args + ") = " + rhs);
    }
  r.result["products"] = std::move(list);
}

void cmd_stasheff(Context& cx, Report& r) {
  const std::vector<BarWord> words = chain_words(cx.chains);
  const AlgebraTable ext = dualize(cx.tor());
  add_check(r, "SI", stasheff_algebra(cx.quiver(), words, ext, cx.job.arity));
  add_check(r, "SI_prime", stasheff_coalgebra(cx.quiver(), words, cx.tor(), cx.job.arity));
}

void attach(Report& r, Presentation p) {
  r.result["presentation"] = presentation_to_json(p);
  r.lines.push_back(p.provenance + " relations:");
  for (const LinComb& rel : p.relations) r.lines.push_back("  " + format_lincomb(p.quiver, rel));
  r.presentation = std::move(p);
}

void cmd_yoneda(Context& cx, Report& r) {
  Presentation y = yoneda_presentation(cx.algebra);
  const CheckReport k = koszul_check(cx.algebra);
  r.result["ext_is_quadratic"] = {{"ok", k.ok}, {"failures", k.failures}};
  for (const auto& f : k.failures) r.lines.push_back("note: " + f);
  attach(r, std::move(y));
}

void cmd_gr(Context& cx, Report& r) {
  Presentation gr = gr_algebra(cx.algebra);
  const std::size_t dim_gr = quotient_dimension(gr);
  r.result["dimension"] = cx.algebra.dimension();
  r.result["dimension_gr"] = dim_gr;
  if (!is_homogeneous(gr)) r.diff.push_back("gr relations are not homogeneous");
  if (dim_gr != cx.algebra.dimension())
    r.diff.push_back("dim gr(A) = " + std::to_string(dim_gr) + " but dim A = " +
                     std::to_string(cx.algebra.dimension()));
  r.lines.push_back("dim A = " + std::to_string(cx.algebra.dimension()) + ", dim gr(A) = " +
                    std::to_string(dim_gr));
  attach(r, std::move(gr));
}

void cmd_double_dual(Context& cx, Report& r) {
  Presentation dd = double_dual(cx.algebra.presentation());
  const Presentation gr = gr_algebra(cx.algebra);
  const bool eq = ideal_equal(dd, gr);
  r.result["equals_gr"] = eq;
  r.lines.push_back(std::string("A!! = gr(A): ") + (eq ? "yes" : "no"));
  if (!eq) {
    r.diff.push_back("A!! and gr(A) define different ideals");
    for (const auto& f : koszul_check(cx.algebra).failures) r.diff.push_back(f);
  }
  attach(r, std::move(dd));
}

void cmd_oracle_diff(Context& cx, Report& r) {
  const BarMorse& bar = cx.bar();
  add_check(r, "sdr_closed_vs_zigzag", compare_sdr(bar, cx.job.degree));
  const Transfer transfer(bar);
  add_check(r, "delta_closed_vs_transfer",
            compare_coalgebras(cx.quiver(), cx.tor(), transfer_coalgebra(transfer, cx.job.arity)));
  add_check(r, "anick_closed_vs_morse", AnickResolution(bar).check_low_degrees());
}

using Command = std::function<void(Context&, Report&)>;

const std::vector<std::pair<std::string, Command>>& table() {
  static const std::vector<std::pair<std::string, Command>> t{
      {"validate", cmd_validate},         {"branches", cmd_branches},
      {"tips", cmd_tips},                 {"chains", cmd_chains},
      {"betti", cmd_betti},               {"resolution-check", cmd_resolution},
      {"sdr-check", cmd_sdr},             {"tor-coalgebra", cmd_tor},
      {"ext-products", cmd_ext},          {"stasheff", cmd_stasheff},
      {"yoneda", cmd_yoneda},             {"gr", cmd_gr},
      {"double-dual", cmd_double_dual},   {"oracle-diff", cmd_oracle_diff},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, f] : table()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run_command(const JobSpec& job, const Presentation& p) {
  for (const auto& [name, f] : table())
    if (name == job.command) {
      Context cx(job, p);
      Report r;
      f(cx, r);
      return r;
    }
  throw Error(Errc::invalid_input, "unknown command '" + job.command + "'");
}

}  // namespace toupie
