#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nwave {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace nwave
