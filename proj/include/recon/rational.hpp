#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace recon {

// GMP keeps every mpq_class result canonical: lowest terms, positive
// denominator, zero as 0/1.
using Rational = mpq_class;

// Accepts "7", "-3", "1/2", "-13/4". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

}  // namespace recon
