#include "toupie/scalar.hpp"

#include "toupie/error.hpp"

#include <regex>

namespace toupie {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::invalid_input: return "invalid_input";
    case Errc::not_toupie: return "not_toupie";
    case Errc::not_composable: return "not_composable";
    case Errc::bad_relation: return "bad_relation";
    case Errc::rank_deficient: return "rank_deficient";
    case Errc::invalid_matching: return "invalid_matching";
    case Errc::hypotheses: return "hypotheses";
    case Errc::bound_exceeded: return "bound_exceeded";
  }
  return "unknown";
}

Scalar parse_scalar(std::string_view text) {
  static const std::regex pattern(R"(^-?[0-9]+(/[0-9]+)?$)");
  std::string s(text);
  if (!std::regex_match(s, pattern))
    throw Error(Errc::invalid_input, "malformed rational '" + s + "'");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class den(s.substr(slash + 1));
    if (den == 0)
      throw Error(Errc::invalid_input, "zero denominator in '" + s + "'");
  }
  Scalar value(s);
  value.canonicalize();
  return value;
}

std::string format_scalar(const Scalar& value) { return value.get_str(); }

}  // namespace toupie
