#pragma once

/*
 * Exact scalar type for the whole engine: GMP rationals (arbitrary-precision,
 * always gcd-reduced with positive denominator).  No floating point is used
 * anywhere downstream of this header.
 */

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qtilt {

using Rat = mpq_class;
using Int = mpz_class;

// Engine-wide error type.  Input problems, contract violations and internal
// consistency failures all throw this; the CLI maps it onto exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parses "p", "-p" or "p/q" into a canonical rational.  Rejects empty input,
// malformed literals and zero denominators.
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    for (char ch : text) {
        if (ch != '-' && ch != '/' && !(ch >= '0' && ch <= '9'))
            throw Error("malformed rational literal '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw Error("malformed rational literal '" + text + "'");
    if (q.get_den() == 0) throw Error("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

// Renders as "p" or "p/q" (canonical form; denominator omitted when 1).
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace qtilt
