#pragma once

#include <gmpxx.h>

#include <nlohmann/json_fwd.hpp>
#include <string>

namespace dualknot {

/// Exact integer type used throughout; never overflows.
using Int = mpz_class;

inline int sgn(const Int& x) { return ::sgn(x); }

inline Int abs_int(const Int& x) { return ::abs(x); }

/// Emits a JSON number when the value fits in 64 bits, a decimal string
/// otherwise (JSON readers commonly truncate wider integers).
nlohmann::json int_to_json(const Int& x);

Int int_from_string(const std::string& s);

}  // namespace dualknot
