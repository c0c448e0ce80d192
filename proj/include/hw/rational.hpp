#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hw {

// Exact rational used for every labeling value and width.
using Rational = mpq_class;

// Lowest terms, "p/q"; integers print without a denominator.
std::string to_string(const Rational& r);

// Accepts "p", "-p" or "p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace hw
