#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace toupie {

/// Exact rational ground field element. gmp keeps it canonical.
using Scalar = mpq_class;

/// Parses "n" or "n/d" (optional leading '-', no decimal point).
/// Throws Error(invalid_input) on anything else or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical "n" or "n/d" rendering, inverse of parse_scalar.
std::string format_scalar(const Scalar& value);

}  // namespace toupie
