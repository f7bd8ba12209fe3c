#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace grassbs {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, no floating point.
using Int = mpz_class;
using Rat = mpq_class;

// Raised on malformed input documents (JSON, rational strings, bundle
// expressions). The CLI maps this to exit code 2.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

// Canonical rendering: gcd-reduced "p/q" with q > 0, or just "p" when q == 1.
std::string rat_to_string(const Rat& value);

// Accepts "p" and "p/q" (optionally signed). Throws FormatError otherwise.
Rat rat_from_string(const std::string& text);

bool is_integer(const Rat& value);

// Requires is_integer(value).
Int to_integer(const Rat& value);

}  // namespace grassbs
