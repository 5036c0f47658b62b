#include "toupie/ainf.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace toupie {

namespace {

Scalar sign_of(long long e) { return (e % 2 == 0) ? Scalar(1) : Scalar(-1); }

long long total_degree(const Tensor& t, std::size_t from, std::size_t to) {
  long long d = 0;
  for (std::size_t i = from; i < to; ++i) d += static_cast<long long>(t[i].degree());
  return d;
}

Tensor concat(Tensor a, const Tensor& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

void add_to(TensorVec& v, const Tensor& t, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = v.emplace(t, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) v.erase(it);
}

std::string format_tensor(const Quiver& q, const Tensor& t) {
  std::string out;
  for (const BarWord& w : t) {
    if (!out.empty()) out += " (x) ";
    out += format_word(q, w);
  }
  return out;
}

std::string format_tensor_vec(const Quiver& q, const TensorVec& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [t, c] : v) {
    if (!out.empty()) out += " + ";
    out += format_scalar(c) + " " + format_tensor(q, t);
  }
  return out;
}

TensorVec delta_prime(const BarWord& w) {
  TensorVec out;
  const auto& l = w.letters;
  for (std::size_t i = 1; i < l.size(); ++i) {
    BarWord a{w.base, {l.begin(), l.begin() + i}};
    BarWord b{l[i].source(), {l.begin() + i, l.end()}};
    add_to(out, Tensor{a, b}, Scalar(1));
  }
  return out;
}

const TensorVec& Transfer::delta_bar(std::size_t n, const BarWord& w) const {
  auto key = std::make_pair(n, w);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  TensorVec value = compute(n, w);
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

TensorVec Transfer::f(std::size_t s, const BarWord& w) const {
  TensorVec out;
  if (s == 1) {
    out.emplace(Tensor{w}, Scalar(1));
    return out;
  }
  for (const auto& [y, c] : bar_->gamma_up(w))
    for (const auto& [t, a] : delta_bar(s, y)) add_to(out, t, c * a);
  return out;
}

TensorVec Transfer::compute(std::size_t n, const BarWord& w) const {
  if (n < 2) throw Error(Errc::invalid_input, "coproduct arity must be >= 2");
  const TensorVec split = delta_prime(w);
  if (n == 2) return split;
  TensorVec out;
  for (std::size_t s = 1; s < n; ++s) {
    const std::size_t t = n - s;
    const Scalar outer = sign_of(static_cast<long long>(s * (t + 1)));
    for (const auto& [pair, c] : split) {
      const Scalar koszul =
          sign_of(static_cast<long long>((t - 1) * pair[0].degree()));
      const TensorVec left = f(s, pair[0]);
      if (left.empty()) continue;
      const TensorVec right = f(t, pair[1]);
      for (const auto& [a, ca] : left)
        for (const auto& [b, cb] : right)
          add_to(out, concat(a, b), outer * koszul * c * ca * cb);
    }
  }
  return out;
}

TensorVec Transfer::delta(std::size_t n, const BarWord& chain) const {
  TensorVec lifted;
  for (const auto& [x, c] : bar_->i(chain))
    for (const auto& [t, a] : delta_bar(n, x)) add_to(lifted, t, c * a);
  TensorVec out;
  for (const auto& [t, c] : lifted) {
    // p on every factor; p has degree 0 so no signs appear.
    TensorVec partial{{Tensor{}, c}};
    for (const BarWord& factor : t) {
      const BarVec projected = bar_->p(factor);
      TensorVec next;
      for (const auto& [prefix, a] : partial)
        for (const auto& [y, b] : projected) {
          Tensor grown = prefix;
          grown.push_back(y);
          add_to(next, grown, a * b);
        }
      partial = std::move(next);
      if (partial.empty()) break;
    }
    for (const auto& [u, a] : partial) add_to(out, u, a);
  }
  return out;
}

TensorVec closed_delta(const ChainIndex& chains, std::size_t n, const Chain& c) {
  TensorVec out;
  if (c.letters.empty() || n < 2) return out;
  const Quiver& q = chains.algebra().quiver();
  if (chains.is_nonmonomial(c)) {
    const LinComb rho = chains.algebra().groebner().tip_inverse(c.path);
    for (const auto& [path, coeff] : rho.terms()) {
      if (path.length() != n) continue;
      Tensor t;
      for (ArrowId a : path.arrows()) t.push_back(BarWord{q.arrow(a).source, {Path::arrow(q, a)}});
      add_to(out, t, coeff);
    }
    return out;
  }
  for (const Decomposition& d : chains.decompositions(c, n)) {
    long long e = d.indices.front();
    for (std::size_t i = 1; i < n; ++i)
      e += static_cast<long long>(n - i) * d.indices[i - 1];
    Tensor t;
    for (const Chain& part : d.parts) t.push_back(to_bar_word(part));
    add_to(out, t, sign_of(e));
  }
  return out;
}

const TensorVec& CoalgebraTable::get(std::size_t n, const BarWord& chain) const {
  static const TensorVec empty;
  auto a = delta.find(n);
  if (a == delta.end()) return empty;
  auto b = a->second.find(chain);
  return b == a->second.end() ? empty : b->second;
}

std::vector<BarWord> chain_words(const ChainIndex& chains) {
  std::vector<BarWord> out;
  for (const Chain& c : chains.all_chains()) out.push_back(to_bar_word(c));
  return out;
}

CoalgebraTable closed_coalgebra(const ChainIndex& chains, std::size_t n_max) {
  CoalgebraTable table;
  table.n_max = n_max;
  for (std::size_t n = 2; n <= n_max; ++n)
    for (const Chain& c : chains.all_chains())
      if (auto d = closed_delta(chains, n, c); !d.empty())
        table.delta[n].emplace(to_bar_word(c), std::move(d));
  return table;
}

CoalgebraTable transfer_coalgebra(const Transfer& transfer, std::size_t n_max) {
  CoalgebraTable table;
  table.n_max = n_max;
  for (std::size_t n = 2; n <= n_max; ++n)
    for (const BarWord& w : chain_words(transfer.bar().chains()))
      if (auto d = transfer.delta(n, w); !d.empty())
        table.delta[n].emplace(w, std::move(d));
  return table;
}

CheckReport compare_coalgebras(const Quiver& q, const CoalgebraTable& closed,
                               const CoalgebraTable& transfer) {
  CheckReport report;
  const std::size_t n_max = std::max(closed.n_max, transfer.n_max);
  std::set<BarWord> seen;
  for (const auto* table : {&closed, &transfer})
    for (const auto& [n, rows] : table->delta)
      for (const auto& [w, v] : rows) seen.insert(w);
  for (std::size_t n = 2; n <= n_max; ++n)
    for (const BarWord& w : seen) {
      ++report.checked;
      const TensorVec& a = closed.get(n, w);
      const TensorVec& b = transfer.get(n, w);
      if (a != b)
        report.fail("Delta_" + std::to_string(n) + format_word(q, w) +
                    ": closed " + format_tensor_vec(q, a) + ", transfer " +
                    format_tensor_vec(q, b));
    }
  return report;
}

Scalar dual_pairing(const Tensor& duals, const Tensor& word) {
  if (duals != word) return 0;
  long long e = 0;
  for (std::size_t i = 1; i < word.size(); ++i)
    e += total_degree(word, 0, i) * static_cast<long long>(duals[i].degree());
  return sign_of(e);
}

BarVec AlgebraTable::product(const Tensor& f) const {
  auto a = m.find(f.size());
  if (a == m.end()) return {};
  auto b = a->second.find(f);
  return b == a->second.end() ? BarVec{} : b->second;
}

AlgebraTable dualize(const CoalgebraTable& coalgebra) {
  AlgebraTable ext;
  ext.n_max = coalgebra.n_max;
  for (const auto& [n, rows] : coalgebra.delta)
    for (const auto& [gamma, d] : rows)
      for (const auto& [word, c] : d) {
        const long long deg = total_degree(word, 0, word.size());
        const Scalar coeff =
            sign_of(static_cast<long long>(n) * deg) * dual_pairing(word, word) * c;
        add_to(ext.m[n][word], gamma, coeff);
      }
  for (auto& [n, rows] : ext.m)
    std::erase_if(rows, [](const auto& kv) { return kv.second.empty(); });
  return ext;
}

Scalar corollary_sign(const std::vector<int>& r) {
  const long long n = static_cast<long long>(r.size());
  long long m = r.front() + n * (n + 1) / 2;
  for (long long i = 1; i <= n; ++i) m += (n + i + 1) * r[i - 1];
  for (long long i = 0; i < n; ++i)
    for (long long j = i + 1; j < n; ++j) m += static_cast<long long>(r[i]) * r[j];
  return sign_of(m);
}

CheckReport check_corollary_signs(const ChainIndex& chains, const AlgebraTable& ext) {
  CheckReport report;
  const Quiver& q = chains.algebra().quiver();
  for (const Chain& c : chains.all_chains()) {
    if (chains.is_nonmonomial(c)) continue;
    const BarWord gamma = to_bar_word(c);
    for (std::size_t n = 2; n <= ext.n_max; ++n)
      for (const Decomposition& d : chains.decompositions(c, n)) {
        ++report.checked;
        Tensor f;
        for (const Chain& part : d.parts) f.push_back(to_bar_word(part));
        const BarVec prod = ext.product(f);
        auto it = prod.find(gamma);
        const Scalar got = it == prod.end() ? Scalar(0) : it->second;
        const Scalar want = corollary_sign(d.indices);
        if (got != want)
          report.fail("m_" + std::to_string(n) + "(" + format_tensor(q, f) + ") at " +
                      format_word(q, gamma) + ": pipeline " + format_scalar(got) +
                      ", closed sign " + format_scalar(want));
      }
  }
  return report;
}

namespace {

void composable_tuples(const std::vector<BarWord>& chains, std::size_t n,
                       Tensor& current, const std::function<void(const Tensor&)>& visit) {
  if (current.size() == n) {
    visit(current);
    return;
  }
  for (const BarWord& w : chains) {
    if (!current.empty() && current.back().target() != w.source()) continue;
    current.push_back(w);
    composable_tuples(chains, n, current, visit);
    current.pop_back();
  }
}

}  // namespace

CheckReport stasheff_algebra(const Quiver& q, const std::vector<BarWord>& chains,
                             const AlgebraTable& ext, std::size_t n_max) {
  CheckReport report;
  for (std::size_t n = 3; n <= n_max; ++n) {
    Tensor current;
    composable_tuples(chains, n, current, [&](const Tensor& f) {
      ++report.checked;
      BarVec total;
      for (std::size_t s = 2; s < n; ++s)
        for (std::size_t r = 0; r + s <= n; ++r) {
          const std::size_t t = n - r - s;
          const Tensor inner(f.begin() + r, f.begin() + r + s);
          const BarVec mid = ext.product(inner);
          if (mid.empty()) continue;
          const Scalar sign = sign_of(static_cast<long long>(r + s * t)) *
                              sign_of(static_cast<long long>(s) * total_degree(f, 0, r));
          for (const auto& [g, cg] : mid) {
            Tensor outer(f.begin(), f.begin() + r);
            outer.push_back(g);
            outer.insert(outer.end(), f.begin() + r + s, f.end());
            add_to(total, ext.product(outer), sign * cg);
          }
        }
      if (!total.empty())
        report.fail("SI(" + std::to_string(n) + ") fails on " + format_tensor(q, f) +
                    ": " + format_vec(q, total));
    });
  }
  return report;
}

CheckReport stasheff_coalgebra(const Quiver& q, const std::vector<BarWord>& chains,
                               const CoalgebraTable& tor, std::size_t n_max) {
  CheckReport report;
  for (std::size_t n = 3; n <= n_max; ++n)
    for (const BarWord& gamma : chains) {
      ++report.checked;
      TensorVec total;
      for (std::size_t s = 2; s < n; ++s)
        for (std::size_t r = 0; r + s <= n; ++r) {
          const std::size_t t = n - r - s;
          const Scalar sign = sign_of(static_cast<long long>(r + s * t));
          for (const auto& [x, c] : tor.get(r + 1 + t, gamma)) {
            const Scalar koszul = sign_of(static_cast<long long>(s) * total_degree(x, 0, r));
            for (const auto& [y, cy] : tor.get(s, x[r])) {
              Tensor word(x.begin(), x.begin() + r);
              word.insert(word.end(), y.begin(), y.end());
              word.insert(word.end(), x.begin() + r + 1, x.end());
              add_to(total, word, sign * koszul * c * cy);
            }
          }
        }
      if (!total.empty())
        report.fail("SI(" + std::to_string(n) + ")' fails on " + format_word(q, gamma) +
                    ": " + format_tensor_vec(q, total));
    }
  return report;
}

}  // namespace toupie
