#pragma once

#include <gmpxx.h>

namespace semireg {

using BigInt = mpz_class;
using Rational = mpq_class;

}  // namespace semireg
