#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mskkt {

/// Exact rational scalar. All structural quantities in the library (densities,
/// multipliers, coordinates, determinants) are carried exactly; doubles only
/// appear in the replicator module and are never authoritative.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Problems caused by user-supplied input (files, command line flags).
/// The CLI maps these to exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonicalized num/den rational.
Rat make_rat(long num, long den = 1);

/// Parses "a/b" or a plain integer. Decimal or exponent notation is rejected:
/// callers that need exactness must not accept floats silently.
Rat parse_rational(const std::string& text);

/// Always "num/den" with positive canonical denominator, e.g. "-1/2", "3/1".
std::string rational_string(const Rat& r);

double to_double(const Rat& r);

/// Best rational approximation of `value` with denominator <= max_denominator,
/// via the continued fraction of the exact binary expansion of the double.
Rat rational_from_double(double value, const BigInt& max_denominator);

}  // namespace mskkt
