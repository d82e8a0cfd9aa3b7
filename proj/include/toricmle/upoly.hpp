#ifndef TORICMLE_UPOLY_HPP
#define TORICMLE_UPOLY_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include "toricmle/rational.hpp"

namespace toricmle {

/// Dense univariate polynomial, coefficients ascending by degree.
/// The zero polynomial is the empty coefficient vector.
template <typename T>
struct UPoly {
    std::vector<T> c;

    UPoly() = default;
    explicit UPoly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

    static UPoly constant(T v) { return UPoly(std::vector<T>{std::move(v)}); }

    void trim() {
        while (!c.empty() && c.back() == T(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }  // -1 for the zero poly
    const T& lc() const { return c.back(); }

    T operator()(const T& x) const {
        T acc(0);
        for (int i = (int)c.size() - 1; i >= 0; --i) acc = acc * x + c[i];
        return acc;
    }

    UPoly derivative() const {
        if (c.size() <= 1) return UPoly();
        std::vector<T> d(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * T((long)i);
        return UPoly(std::move(d));
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<T> r(a.c.size() + b.c.size() - 1, T(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const T& s, const UPoly& a) {
        std::vector<T> r = a.c;
        for (auto& x : r) x = x * s;
        return UPoly(std::move(r));
    }
};

using RPoly = UPoly<Rat>;
using CPoly = UPoly<std::complex<double>>;

/// Quotient and remainder of exact division over the rationals.
std::pair<RPoly, RPoly> divmod(const RPoly& a, const RPoly& b);

/// Monic gcd over the rationals (Euclid). gcd(0,0) = 0.
RPoly poly_gcd(RPoly a, RPoly b);

/// gcd of the integer coefficients after clearing denominators, with sign.
Rat content(const RPoly& p);

/// p / content(p); leading coefficient positive.
RPoly primitive_part(const RPoly& p);

/// p with repeated factors collapsed: p / gcd(p, p').
RPoly squarefree_part(const RPoly& p);

/// Exact quotient; throws std::domain_error if the division has a remainder.
RPoly exact_div(const RPoly& a, const RPoly& b);

CPoly to_cpoly(const RPoly& p);

} // namespace toricmle

#endif
