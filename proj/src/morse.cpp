#include "toupie/morse.hpp"

#include <algorithm>

namespace toupie {

BarWord BarWord::of(Letters letters) {
  if (letters.empty()) throw Error(Errc::invalid_input, "empty bar word");
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (letters[i - 1].target() != letters[i].source())
      throw Error(Errc::not_composable, "bar word letters do not compose");
  const VertexId base = letters.front().source();
  return BarWord{base, std::move(letters)};
}

Path BarWord::path() const {
  Path p = Path::trivial(base);
  for (const Path& l : letters) p = compose(p, l);
  return p;
}

void add_to(BarVec& v, const BarWord& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = v.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) v.erase(it);
}

void add_to(BarVec& v, const BarVec& u, const Scalar& c) {
  for (const auto& [w, a] : u) add_to(v, w, a * c);
}

std::string format_word(const Quiver& q, const BarWord& w) {
  if (w.letters.empty()) return "[" + q.path_name(Path::trivial(w.base)) + "]";
  std::string out = "[";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += '|';
    out += q.path_name(w.letters[i]);
  }
  return out + "]";
}

std::string format_vec(const Quiver& q, const BarVec& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : v) {
    if (!out.empty()) out += " + ";
    out += format_scalar(c) + format_word(q, w);
  }
  return out;
}

BarVec bar_differential(const ToupieAlgebra& algebra, const BarWord& w) {
  BarVec out;
  const auto& l = w.letters;
  for (std::size_t i = 0; i + 1 < l.size(); ++i) {
    const Scalar sign = (i % 2 == 0) ? -1 : 1;  // (-1)^(i+1)
    for (const LinComb nf = algebra.normal_form(compose(l[i], l[i + 1])); const auto& [q, c] : nf.terms()) {
      BarWord t{w.base, {}};
      t.letters.insert(t.letters.end(), l.begin(), l.begin() + i);
      t.letters.push_back(q);
      t.letters.insert(t.letters.end(), l.begin() + i + 2, l.end());
      add_to(out, t, sign * c);
    }
  }
  return out;
}

bool is_attached(const ToupieAlgebra& algebra, const BarWord& w) {
  const auto& g = algebra.groebner();
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (!g.in_tip_ideal(compose(w.letters[i], w.letters[i + 1]))) return false;
  return true;
}

MatchInfo morse_partner(const ChainIndex& chains, const BarWord& w) {
  MatchInfo info;
  const auto& l = w.letters;
  if (l.empty()) return info;
  const std::size_t k = chains.chain_prefix(l);
  info.position = k;
  if (k == l.size()) return info;

  std::optional<Path> last;
  if (k > 0) last = l[k - 1];
  auto ext = chains.extension(last, l[k]);
  info.partner.base = w.base;
  if (ext) {
    info.kind = CellKind::lower;
    auto& p = info.partner.letters;
    p.assign(l.begin(), l.begin() + k);
    p.push_back(*ext);
    p.push_back(l[k].suffix_from(ext->length()));
    p.insert(p.end(), l.begin() + k + 1, l.end());
  } else {
    info.kind = CellKind::upper;
    auto& p = info.partner.letters;
    p.assign(l.begin(), l.begin() + k - 1);
    p.push_back(compose(l[k - 1], l[k]));
    p.insert(p.end(), l.begin() + k + 1, l.end());
  }
  return info;
}

namespace {

std::vector<BarWord> enumerate_cells(const ToupieAlgebra& algebra,
                                     std::size_t max_cells) {
  const Quiver& q = algebra.quiver();
  std::vector<BarWord> cells;
  for (VertexId v = 0; v < q.vertex_count(); ++v) cells.push_back(BarWord::vertex(v));
  std::vector<std::vector<Path>> letters_from(q.vertex_count());
  for (const Path& b : algebra.basis())
    if (!b.is_trivial()) letters_from[b.source()].push_back(b);

  std::vector<BarWord> frontier;
  for (const auto& from : letters_from)
    for (const Path& b : from) frontier.push_back(BarWord{b.source(), {b}});
  while (!frontier.empty()) {
    std::vector<BarWord> next;
    for (BarWord& w : frontier) {
      for (const Path& b : letters_from[w.target()]) {
        BarWord x = w;
        x.letters.push_back(b);
        next.push_back(std::move(x));
      }
      cells.push_back(std::move(w));
      if (cells.size() > max_cells)
        throw Error(Errc::bound_exceeded,
                    "reduced bar complex exceeds " + std::to_string(max_cells) +
                        " cells");
    }
    frontier = std::move(next);
  }
  std::sort(cells.begin(), cells.end(), [](const BarWord& a, const BarWord& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  return cells;
}

std::map<BarWord, std::size_t> make_index(const std::vector<BarWord>& cells) {
  std::map<BarWord, std::size_t> index;
  for (std::size_t i = 0; i < cells.size(); ++i) index.emplace(cells[i], i);
  return index;
}

std::vector<MorseReduction<RationalRing>::Cell> make_bar_cells(
    const ChainIndex& chains, const std::vector<BarWord>& cells,
    const std::map<BarWord, std::size_t>& index) {
  std::vector<MorseReduction<RationalRing>::Cell> out(cells.size());
  for (std::size_t x = 0; x < cells.size(); ++x) {
    out[x].degree = static_cast<int>(cells[x].degree());
    for (const auto& [w, c] : bar_differential(chains.algebra(), cells[x]))
      out[x].boundary.emplace_back(index.at(w), c);
    MatchInfo m = morse_partner(chains, cells[x]);
    if (m.kind != CellKind::critical) out[x].partner = index.at(m.partner);
  }
  return out;
}

}  // namespace

BarMorse::BarMorse(const ChainIndex& chains, std::size_t max_cells)
    : chains_(&chains),
      cells_(enumerate_cells(chains.algebra(), max_cells)),
      index_(make_index(cells_)),
      top_degree_(cells_.empty() ? 0 : cells_.back().degree()),
      reduction_(RationalRing{}, make_bar_cells(chains, cells_, index_)) {}

std::size_t BarMorse::index(const BarWord& w) const {
  auto it = index_.find(w);
  if (it == index_.end())
    throw Error(Errc::invalid_input,
                "not a cell of the reduced bar complex: " +
                    format_word(algebra().quiver(), w));
  return it->second;
}

CellKind BarMorse::kind(const BarWord& w) const {
  const std::size_t x = index(w);
  if (reduction_.is_critical(x)) return CellKind::critical;
  return reduction_.is_lower(x) ? CellKind::lower : CellKind::upper;
}

std::vector<BarWord> BarMorse::cells_of_degree(std::size_t n) const {
  std::vector<BarWord> out;
  for (const BarWord& w : cells_)
    if (w.degree() == n) out.push_back(w);
  return out;
}

std::vector<BarWord> BarMorse::critical_cells(std::size_t n) const {
  std::vector<BarWord> out;
  for (std::size_t x = 0; x < cells_.size(); ++x)
    if (cells_[x].degree() == n && reduction_.is_critical(x)) out.push_back(cells_[x]);
  return out;
}

BarVec BarMorse::to_bar(const MorseReduction<RationalRing>::Vec& v) const {
  BarVec out;
  for (const auto& [x, c] : v) add_to(out, cells_[x], c);
  return out;
}

BarVec BarMorse::d(const BarVec& v) const {
  BarVec out;
  for (const auto& [w, c] : v) add_to(out, bar_differential(algebra(), w), c);
  return out;
}

BarVec BarMorse::gamma_up(const BarWord& w) const {
  return to_bar(reduction_.gamma_up(index(w)));
}
BarVec BarMorse::h(const BarWord& w) const { return to_bar(reduction_.h(index(w))); }
BarVec BarMorse::p(const BarWord& w) const { return to_bar(reduction_.p(index(w))); }

BarVec BarMorse::i(const BarWord& w) const {
  const std::size_t x = index(w);
  if (!reduction_.is_critical(x))
    throw Error(Errc::invalid_input,
                "i is defined on critical cells only: " +
                    format_word(algebra().quiver(), w));
  return to_bar(reduction_.i(x));
}

BarVec BarMorse::morse_differential(const BarWord& w) const {
  return to_bar(reduction_.morse_differential(index(w)));
}

}  // namespace toupie

namespace toupie {

void BarMorse::closed_walk(const BarWord& w, BarVec* gamma_sum, BarVec* proj) const {
  std::vector<std::pair<BarWord, Scalar>> work{{w, Scalar(1)}};
  while (!work.empty()) {
    auto [t, kappa] = work.back();
    work.pop_back();
    MatchInfo m = morse_partner(chains(), t);
    if (m.kind == CellKind::critical) {
      if (proj) add_to(*proj, t, kappa);
      continue;
    }
    if (m.kind == CellKind::upper) continue;
    const std::size_t k = m.position;
    if (gamma_sum) add_to(*gamma_sum, m.partner, k % 2 == 0 ? kappa : Scalar(-kappa));
    // Continue with w'' merged into the letter after it.
    const Letters& x = m.partner.letters;
    if (k + 2 >= x.size()) continue;
    const LinComb nf = algebra().normal_form(compose(x[k + 1], x[k + 2]));
    for (const auto& [q, c] : nf.terms()) {
      BarWord z{t.base, {}};
      z.letters.assign(x.begin(), x.begin() + k + 1);
      z.letters.push_back(q);
      z.letters.insert(z.letters.end(), x.begin() + k + 3, x.end());
      work.emplace_back(std::move(z), kappa * c);
    }
  }
}

BarVec BarMorse::closed_h(const BarWord& w) const {
  BarVec sum;
  closed_walk(w, &sum, nullptr);
  BarVec out;
  add_to(out, sum, Scalar(-1));
  return out;
}

BarVec BarMorse::closed_p(const BarWord& w) const {
  BarVec out;
  closed_walk(w, nullptr, &out);
  return out;
}

BarVec BarMorse::closed_i(const BarWord& w) const {
  if (morse_partner(chains(), w).kind != CellKind::critical)
    throw Error(Errc::invalid_input,
                "i is defined on chains only: " + format_word(algebra().quiver(), w));
  BarVec out;
  const auto& g = algebra().groebner();
  const NonMonomialRelation* rel =
      w.degree() == 2 ? g.relation_of_tip(w.path()) : nullptr;
  if (!rel) {
    add_to(out, w, Scalar(1));
    return out;
  }
  for (const auto& [q, c] : rel->rho.terms())
    add_to(out, BarWord::of({q.prefix(1), q.suffix_from(1)}), c);
  return out;
}

BarVec BarMorse::attached_h(const BarWord& w) const {
  if (!is_attached(algebra(), w))
    throw Error(Errc::invalid_input,
                "bar term is not attached: " + format_word(algebra().quiver(), w));
  return closed_h(w);
}

BarVec apply_linear(const std::function<BarVec(const BarWord&)>& f,
                    const BarVec& v) {
  BarVec out;
  for (const auto& [w, c] : v) add_to(out, f(w), c);
  return out;
}

SdrMaps oracle_maps(const BarMorse& m) {
  return {[&m](const BarWord& w) { return m.h(w); },
          [&m](const BarWord& w) { return m.p(w); },
          [&m](const BarWord& w) { return m.i(w); }};
}

SdrMaps closed_maps(const BarMorse& m) {
  return {[&m](const BarWord& w) { return m.closed_h(w); },
          [&m](const BarWord& w) { return m.closed_p(w); },
          [&m](const BarWord& w) { return m.closed_i(w); }};
}

void CheckReport::fail(std::string what) {
  ok = false;
  if (failures.size() < 20) failures.push_back(std::move(what));
}

CheckReport verify_sdr(const BarMorse& m, const SdrMaps& maps,
                       std::size_t max_degree) {
  CheckReport report;
  const Quiver& q = m.algebra().quiver();
  auto h = [&](const BarVec& v) { return apply_linear(maps.h, v); };
  auto p = [&](const BarVec& v) { return apply_linear(maps.p, v); };
  auto i = [&](const BarVec& v) { return apply_linear(maps.i, v); };
  for (const BarWord& w : m.cells()) {
    if (w.degree() > max_degree) continue;
    ++report.checked;
    const BarVec x{{w, Scalar(1)}};
    const std::string name = format_word(q, w);
    BarVec lhs = x;
    add_to(lhs, i(p(x)), Scalar(-1));
    BarVec rhs = m.d(h(x));
    add_to(rhs, h(m.d(x)));
    if (lhs != rhs)
      report.fail("id - ip != dh + hd at " + name + ": " + format_vec(q, lhs) +
                  " vs " + format_vec(q, rhs));
    if (auto hh = h(h(x)); !hh.empty())
      report.fail("h^2 != 0 at " + name + ": " + format_vec(q, hh));
    if (auto ph = p(h(x)); !ph.empty())
      report.fail("ph != 0 at " + name + ": " + format_vec(q, ph));
    if (m.kind(w) != CellKind::critical) continue;
    if (auto pi = p(i(x)); pi != x)
      report.fail("pi != id at " + name + ": " + format_vec(q, pi));
    if (auto hi = h(i(x)); !hi.empty())
      report.fail("hi != 0 at " + name + ": " + format_vec(q, hi));
  }
  return report;
}

CheckReport compare_sdr(const BarMorse& m, std::size_t max_degree) {
  CheckReport report;
  const Quiver& q = m.algebra().quiver();
  auto check = [&](const char* map, const BarWord& w, const BarVec& closed,
                   const BarVec& oracle) {
    if (closed != oracle)
      report.fail(std::string(map) + " differs at " + format_word(q, w) +
                  ": closed " + format_vec(q, closed) + ", zigzag " +
                  format_vec(q, oracle));
  };
  for (const BarWord& w : m.cells()) {
    if (w.degree() > max_degree) continue;
    ++report.checked;
    check("h", w, m.closed_h(w), m.h(w));
    check("p", w, m.closed_p(w), m.p(w));
    if (m.kind(w) == CellKind::critical) check("i", w, m.closed_i(w), m.i(w));
  }
  return report;
}

}  // namespace toupie

namespace toupie {

Bimod EnvelopingRing::add(const Bimod& a, const Bimod& b) const {
  Bimod out = a;
  for (const auto& [k, c] : b) {
    auto [it, inserted] = out.emplace(k, c);
    if (inserted) continue;
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
  return out;
}

Bimod EnvelopingRing::mul(const Bimod& a, const Bimod& b) const {
  Bimod out;
  for (const auto& [ka, x] : a)
    for (const auto& [kb, y] : b) {
      const auto& left = algebra->product(ka.first, kb.first);
      if (left.empty()) continue;
      const auto& right = algebra->product(kb.second, ka.second);
      for (const auto& [l, u] : left)
        for (const auto& [r, v] : right) {
          const Scalar c = x * y * u * v;
          auto [it, inserted] = out.emplace(std::make_pair(l, r), c);
          if (inserted) continue;
          it->second += c;
          if (it->second == 0) out.erase(it);
        }
    }
  return out;
}

Bimod EnvelopingRing::neg(const Bimod& a) const {
  Bimod out = a;
  for (auto& [k, c] : out) c = -c;
  return out;
}

std::optional<Bimod> EnvelopingRing::unit_inverse(const Bimod& a) const {
  if (a.size() != 1) return std::nullopt;
  const auto& [k, c] = *a.begin();
  const auto& basis = algebra->basis();
  if (!basis[k.first].is_trivial() || !basis[k.second].is_trivial()) return std::nullopt;
  return Bimod{{k, Scalar(1 / c)}};
}

BarWord to_bar_word(const Chain& c) {
  if (c.letters.empty()) return BarWord::vertex(c.path.source());
  return BarWord::of(c.letters);
}

namespace {

EnvelopingRing make_enveloping(const BarMorse& bar) {
  EnvelopingRing ring;
  ring.algebra = &bar.algebra();
  for (const BarWord& w : bar.cells())
    ring.units.emplace_back(bar.algebra().basis_index(Path::trivial(w.source())),
                            bar.algebra().basis_index(Path::trivial(w.target())));
  return ring;
}

std::vector<MorseReduction<EnvelopingRing>::Cell> make_two_sided_cells(
    const BarMorse& bar) {
  const ToupieAlgebra& alg = bar.algebra();
  const auto& red = bar.reduction();
  std::vector<MorseReduction<EnvelopingRing>::Cell> out(bar.cells().size());
  for (std::size_t x = 0; x < out.size(); ++x) {
    const BarWord& w = bar.cells()[x];
    auto& cell = out[x];
    cell.degree = static_cast<int>(w.degree());
    cell.partner = red.cell(x).partner;
    if (w.letters.empty()) continue;
    const std::size_t es = alg.basis_index(Path::trivial(w.source()));
    const std::size_t et = alg.basis_index(Path::trivial(w.target()));
    const std::size_t n = w.degree();
    BarWord tail{w.letters.front().target(), {w.letters.begin() + 1, w.letters.end()}};
    cell.boundary.emplace_back(bar.index(tail),
                               Bimod{{{alg.basis_index(w.letters.front()), et}, Scalar(1)}});
    for (const auto& [z, c] : red.cell(x).boundary)
      cell.boundary.emplace_back(z, Bimod{{{es, et}, c}});
    BarWord head{w.base, {w.letters.begin(), w.letters.end() - 1}};
    cell.boundary.emplace_back(
        bar.index(head),
        Bimod{{{es, alg.basis_index(w.letters.back())}, Scalar(n % 2 == 0 ? 1 : -1)}});
  }
  return out;
}

void add_bimod(const EnvelopingRing& ring, std::map<BarWord, Bimod>& m,
               const BarWord& w, const Bimod& c) {
  Bimod sum = ring.add(m[w], c);
  if (sum.empty())
    m.erase(w);
  else
    m[w] = std::move(sum);
}

}  // namespace

AnickResolution::AnickResolution(const BarMorse& bar)
    : bar_(&bar), reduction_(make_enveloping(bar), make_two_sided_cells(bar)) {}

std::map<BarWord, Bimod> AnickResolution::differential(const BarWord& chain) const {
  const std::size_t x = bar_->index(chain);
  if (!reduction_.is_critical(x))
    throw Error(Errc::invalid_input,
                "not a chain: " + format_word(bar_->algebra().quiver(), chain));
  std::map<BarWord, Bimod> out;
  for (const auto& [z, c] : reduction_.morse_differential(x)) out.emplace(bar_->cells()[z], c);
  return out;
}

std::map<BarWord, Bimod> AnickResolution::closed_differential(const BarWord& chain) const {
  const ToupieAlgebra& alg = bar_->algebra();
  const EnvelopingRing& ring = reduction_.ring();
  std::map<BarWord, Bimod> out;
  if (chain.degree() == 1) {
    const Path& x = chain.letters.front();
    const std::size_t xs = alg.basis_index(x);
    add_bimod(ring, out, BarWord::vertex(x.target()),
              Bimod{{{xs, alg.basis_index(Path::trivial(x.target()))}, Scalar(1)}});
    add_bimod(ring, out, BarWord::vertex(x.source()),
              Bimod{{{alg.basis_index(Path::trivial(x.source())), xs}, Scalar(-1)}});
    return out;
  }
  if (chain.degree() != 2)
    throw Error(Errc::invalid_input, "closed differential is known in degrees 1 and 2");
  const Path w = chain.path();
  for (const LinComb nf = alg.groebner().tip_inverse(w); const auto& [q, c] : nf.terms())
    for (std::size_t j = 0; j < q.length(); ++j) {
      const LinComb u = alg.normal_form(q.prefix(j));
      const LinComb v = alg.normal_form(q.suffix_from(j + 1));
      Bimod coeff;
      for (const auto& [up, uc] : u.terms())
        for (const auto& [vp, vc] : v.terms())
          coeff = ring.add(coeff, Bimod{{{alg.basis_index(up), alg.basis_index(vp)},
                                         c * uc * vc}});
      add_bimod(ring, out, BarWord::of({q.subpath(j, 1)}), coeff);
    }
  return out;
}

std::string AnickResolution::format_bimod(const Bimod& c) const {
  const ToupieAlgebra& alg = bar_->algebra();
  const Quiver& q = alg.quiver();
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [k, x] : c) {
    if (!out.empty()) out += " + ";
    out += format_scalar(x) + "*" + q.path_name(alg.basis()[k.first]) + " (x) " +
           q.path_name(alg.basis()[k.second]);
  }
  return out;
}

CheckReport AnickResolution::check_d_squared(std::size_t max_degree) const {
  CheckReport report;
  const auto& ring = reduction_.ring();
  const Quiver& q = bar_->algebra().quiver();
  for (std::size_t x = 0; x < reduction_.size(); ++x) {
    const BarWord& w = bar_->cells()[x];
    if (!reduction_.is_critical(x) || w.degree() > max_degree) continue;
    ++report.checked;
    std::map<std::size_t, Bimod> dd;
    for (const auto& [y, c] : reduction_.morse_differential(x))
      for (const auto& [z, e] : reduction_.morse_differential(y)) {
        Bimod sum = ring.add(dd[z], ring.mul(c, e));
        if (sum.empty())
          dd.erase(z);
        else
          dd[z] = std::move(sum);
      }
    for (const auto& [z, c] : dd)
      report.fail("d^2 != 0 at " + format_word(q, w) + ": coefficient " +
                  format_bimod(c) + " on " + format_word(q, bar_->cells()[z]));
  }
  return report;
}

CheckReport AnickResolution::check_minimal(std::size_t max_degree) const {
  CheckReport report;
  const auto& basis = bar_->algebra().basis();
  const Quiver& q = bar_->algebra().quiver();
  for (std::size_t x = 0; x < reduction_.size(); ++x) {
    const BarWord& w = bar_->cells()[x];
    if (!reduction_.is_critical(x) || w.degree() > max_degree) continue;
    ++report.checked;
    for (const auto& [z, c] : reduction_.morse_differential(x)) {
      Scalar eps = 0;
      for (const auto& [k, a] : c)
        if (basis[k.first].is_trivial() && basis[k.second].is_trivial()) eps += a;
      if (eps != 0)
        report.fail("Tor differential nonzero at " + format_word(q, w) + " -> " +
                    format_word(q, bar_->cells()[z]));
    }
  }
  return report;
}

CheckReport AnickResolution::check_low_degrees() const {
  CheckReport report;
  const Quiver& q = bar_->algebra().quiver();
  for (std::size_t n : {std::size_t(1), std::size_t(2)})
    for (const BarWord& w : bar_->critical_cells(n)) {
      ++report.checked;
      auto morse = differential(w);
      auto closed = closed_differential(w);
      if (morse == closed) continue;
      std::string a, b;
      for (const auto& [z, c] : morse) a += " [" + format_bimod(c) + "]" + format_word(q, z);
      for (const auto& [z, c] : closed) b += " [" + format_bimod(c) + "]" + format_word(q, z);
      report.fail("d" + std::to_string(n) + " differs at " + format_word(q, w) +
                  ": Morse" + a + "; closed" + b);
    }
  return report;
}

std::vector<std::size_t> AnickResolution::betti(std::size_t max_degree) const {
  std::vector<std::size_t> out(max_degree + 1, 0);
  for (std::size_t x = 0; x < reduction_.size(); ++x) {
    const std::size_t n = bar_->cells()[x].degree();
    if (n <= max_degree && reduction_.is_critical(x)) ++out[n];
  }
  return out;
}

}  // namespace toupie
