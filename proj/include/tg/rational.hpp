#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace tg {

// The universal scalar: arbitrary-precision rationals, always reduced,
// denominator > 0.  gmpxx keeps both invariants for us as long as values
// are built through mpq_class; raw mpq_t manipulation must canonicalize.
using Integer = mpz_class;
using Rational = mpq_class;

// Serialized form "p/q", or "p" when q = 1, ASCII '-' for negatives.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

} // namespace tg
