#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gfc {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Exact "numerator/denominator" rendering; integers keep the "/1" suffix so
// every serialized entry has the same shape.
std::string to_fraction_string(const Rational& q);

// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_fraction(std::string_view text);

bool is_zero_vector(const RationalVector& v);

// Scales v so that its first nonzero entry is 1. No-op on the zero vector.
void normalize_leading(RationalVector& v);

}  // namespace gfc
