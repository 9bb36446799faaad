#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace crn {

// Exact rational scalar used throughout. All arithmetic results are kept
// canonical (reduced fraction, positive denominator).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rat& q) { return sgn(q); }

inline std::string to_string(const Rat& q) { return q.get_str(); }

// Accepts "p" or "p/q" with an optional leading '-' on the numerator.
std::optional<Rat> parse_rational(std::string_view text);

// q^e for a nonnegative exponent.
Rat pow_rat(const Rat& q, unsigned long e);

}  // namespace crn
