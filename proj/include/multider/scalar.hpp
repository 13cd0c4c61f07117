#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace multider {

using Scalar = mpq_class;

// Accepts "7", "-3", "7/3", "-22/6" (reduced on return).
Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& value);

bool is_integer(const Scalar& value);

// Smallest positive integer clearing every denominator.
mpz_class common_denominator(const std::vector<Scalar>& values);

}  // namespace multider
