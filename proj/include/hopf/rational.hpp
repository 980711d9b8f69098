#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hopf {

/// Exact rational scalar. GMP keeps values canonical (gcd 1, positive
/// denominator), so operator== is structural equality.
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

/// Canonical text form "num/den", den > 0, lowest terms. Used by the cyc
/// literal syntax and the .hstore format, so it must stay byte-stable.
inline std::string rat_to_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace hopf
