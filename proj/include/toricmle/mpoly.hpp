#ifndef TORICMLE_MPOLY_HPP
#define TORICMLE_MPOLY_HPP

#include <map>
#include <vector>

#include "toricmle/rational.hpp"
#include "toricmle/upoly.hpp"

namespace toricmle {

/// Sparse multivariate polynomial over the rationals: exponent vector -> coefficient.
/// Zero coefficients are never stored; exponents are nonnegative.
class MPoly {
  public:
    using Exponents = std::vector<int>;

    explicit MPoly(int nvars = 0) : nvars_(nvars) {}

    static MPoly constant(int nvars, const Rat& v);
    static MPoly variable(int nvars, int var, int power = 1);
    /// Monomial c * x^e.
    static MPoly monomial(const Exponents& e, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    void add_term(const Exponents& e, const Rat& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(const Rat& s) const;
    bool operator==(const MPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    int degree_in(int var) const;
    int total_degree() const;

    /// Coefficients of this viewed as a polynomial in `var`; entry k is the
    /// coefficient of var^k, an MPoly in which `var` no longer occurs.
    std::vector<MPoly> coefficients_in(int var) const;

    /// Substitute var := value (rational), keeping the variable slot.
    MPoly substitute(int var, const Rat& value) const;

    /// Drop a variable slot entirely; the variable must not occur.
    MPoly drop_var(int var) const;

    Rat eval(const std::vector<Rat>& x) const;
    std::complex<double> eval(const std::vector<std::complex<double>>& x) const;

    /// Conversion to a univariate polynomial in `var`; every other variable
    /// must be absent.
    RPoly to_upoly(int var) const;

    /// Indices of variables that actually occur.
    std::vector<int> used_vars() const;

  private:
    int nvars_;
    std::map<Exponents, Rat> terms_;
};

} // namespace toricmle

#endif
