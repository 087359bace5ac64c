#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "tlq/errors.hpp"

namespace tlq {

using Int = mpz_class;
using Rat = mpq_class;

// A probability as given on an interface boundary. Keeps the original text
// for provenance echoes and remembers whether it was an exact "a/b" form;
// subcommands that require exact rationals (chi spectral, recognize) reject
// decimal-only input.
struct ProbValue {
    Rat value;
    bool exact_form = false;  // true iff written as a/b
    std::string text;
};

// Accepts "a/b" with integer a, b > 0, or decimal text ("0.25", "1e-3" is
// not a probability format we accept). Decimals convert exactly via powers
// of ten. Throws ParseError.
ProbValue parse_probability(const std::string& text);

// Exact integer from decimal text, allowing scientific notation with a
// nonnegative exponent after normalization ("1e6", "2.5e3"). Throws
// ParseError if the value is not a nonnegative integer.
std::uint64_t parse_count(const std::string& text);

std::string to_string(const Rat& r);

inline Rat rat_complement(const Rat& p) { return Rat(1) - p; }

}  // namespace tlq
