#pragma once

#include "toupie/io.hpp"
#include "toupie/random_presentation.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace toupie::test {

inline constexpr std::uint64_t kSeed = 20240601;
inline constexpr std::size_t kRandomCount = 24;

inline std::string read_data(const std::string& name) {
  std::ifstream f(std::string(TOUPIE_TEST_DATA) + "/" + name);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline std::string data_path(const std::string& name) {
  return std::string(TOUPIE_TEST_DATA) + "/" + name;
}

inline Presentation load(const std::string& name) { return parse_presentation(read_data(name)); }

inline std::vector<Presentation> random_cases() { return random_suite(kSeed, kRandomCount); }

inline Path path_of(const Quiver& q, std::initializer_list<const char*> names) {
  std::vector<ArrowId> ids;
  for (const char* n : names) ids.push_back(*q.find_arrow(n));
  return Path::from_arrows(q, ids);
}

using TermNames = std::pair<int, std::initializer_list<const char*>>;

inline LinComb lc(const Quiver& q, std::initializer_list<TermNames> terms) {
  LinComb out;
  for (const auto& [c, names] : terms) out.add(path_of(q, names), Scalar(c));
  return out;
}

}  // namespace toupie::test
