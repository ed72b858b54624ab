#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cecoh {

/// Exact arbitrary-precision rational. All coefficient arithmetic in the
/// engine is over this type; there is no floating point anywhere.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q);

/// Accepts "p" or "p/q" with an optional leading sign. Throws FormParseError.
Rational parse_rational(std::string_view text);

}  // namespace cecoh
