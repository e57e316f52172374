#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qwick {

using Rational = mpq_class;

/// Parses "num/den" or "num". Throws DomainError on malformed input or a zero
/// denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

}  // namespace qwick
