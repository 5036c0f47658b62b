#pragma once

#include <stdexcept>
#include <string>

namespace toupie {

enum class Errc {
  invalid_input,     // malformed quiver, path or relation
  not_toupie,        // shape violates the toupie conditions
  not_composable,    // endpoints of two paths do not match
  bad_relation,      // relation set not of the supported form
  rank_deficient,    // non-monomial relations are linearly dependent
  invalid_matching,  // Morse matching is not a matching or has a zigzag cycle
  hypotheses,        // double-dual hypotheses do not hold
  bound_exceeded,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace toupie
