#pragma once

#include <gmpxx.h>

#include <string>

namespace fpd {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace fpd
