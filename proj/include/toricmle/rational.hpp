#ifndef TORICMLE_RATIONAL_HPP
#define TORICMLE_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace toricmle {

// Exact arithmetic types. Integer data (matrices, counts, kernels) lives in
// Int; everything downstream of an elimination or a resultant lives in Rat.
using Int = mpz_class;
using Rat = mpq_class;

inline double to_double(const Rat& q) { return q.get_d(); }

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// mpq_class's two-argument constructor does not reduce the fraction; every
/// ratio must go through here.
inline Rat rat_frac(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

} // namespace toricmle

#endif
