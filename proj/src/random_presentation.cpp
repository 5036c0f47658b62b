#include "toupie/random_presentation.hpp"

#include "toupie/rewriting.hpp"

#include <set>

namespace toupie {

namespace {

enum class Role { free, monomial, combination };

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Presentation draw(std::mt19937_64& rng, const RandomOptions& opt) {
  const std::size_t nb = pick(rng, 1, opt.max_branches);
  std::vector<std::string> vertices{"0"};
  std::vector<ArrowSpec> arrows;
  std::vector<std::vector<std::string>> names(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    const std::size_t len = pick(rng, 1, opt.max_length);
    const std::string stem(1, static_cast<char>('a' + b));
    std::string prev = "0";
    for (std::size_t k = 1; k <= len; ++k) {
      const std::string next = k == len ? "w" : stem + std::to_string(k);
      if (k != len) vertices.push_back(next);
      names[b].push_back(stem + std::to_string(k));
      arrows.push_back({names[b].back(), prev, next});
      prev = next;
    }
  }
  vertices.push_back("w");

  Presentation p;
  p.quiver = Quiver::build(vertices, arrows);
  auto branch_path = [&](std::size_t b, std::size_t pos, std::size_t len) {
    std::vector<ArrowId> ids;
    for (std::size_t k = pos; k < pos + len; ++k) ids.push_back(*p.quiver.find_arrow(names[b][k]));
    return Path::from_arrows(p.quiver, ids);
  };

  std::vector<std::size_t> combo;
  for (std::size_t b = 0; b < nb; ++b) {
    const std::size_t len = names[b].size();
    const Role role = len < 2 ? Role::free : static_cast<Role>(pick(rng, 0, 2));
    if (role == Role::combination) combo.push_back(b);
    if (role != Role::monomial) continue;
    // Up to three subpaths of length >= 2, none inside another.
    std::vector<Path> chosen;
    const std::size_t want = pick(rng, 1, 3);
    for (std::size_t t = 0; t < want; ++t) {
      const std::size_t l = pick(rng, 2, len);
      const Path cand = branch_path(b, pick(rng, 0, len - l), l);
      bool clash = false;
      for (const Path& c : chosen) clash = clash || c.contains(cand) || cand.contains(c);
      if (!clash) chosen.push_back(cand);
    }
    for (const Path& c : chosen) p.relations.emplace_back(c);
  }
  if (combo.size() >= 2) {
    const std::size_t rows = pick(rng, 1, combo.size() - 1);
    std::uniform_int_distribution<int> coeff(-opt.max_coeff, opt.max_coeff);
    for (std::size_t r = 0; r < rows; ++r) {
      LinComb rel;
      for (std::size_t b : combo) {
        const int c = coeff(rng);
        if (c != 0) rel.add(branch_path(b, 0, names[b].size()), Scalar(c));
      }
      if (rel.size() >= 2) p.relations.push_back(std::move(rel));
    }
  }
  return p;
}

}  // namespace

Presentation random_presentation(std::mt19937_64& rng, const RandomOptions& options) {
  for (;;) {
    Presentation p = draw(rng, options);
    try {
      ToupieAlgebra check(p);
      return p;
    } catch (const Error&) {
      // dependent rows or a branch in both kinds of relation: draw again
    }
  }
}

std::vector<Presentation> random_suite(std::uint64_t seed, std::size_t count,
                                       const RandomOptions& options) {
  std::vector<Presentation> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(seed + i);
    Presentation p = random_presentation(rng, options);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace toupie
