#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace steklov {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "n" or a finite decimal such as "-1.25" into an exact
/// rational. Anything else ("pi", "1e3", "sqrt(2)") is a DomainError.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "n" when the denominator is one.
std::string to_string(const Rational& value);

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace steklov
