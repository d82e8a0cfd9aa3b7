#include <doctest.h>

#include "toricmle/mldegree.hpp"
#include "toricmle/mpoly.hpp"
#include "toricmle/upoly.hpp"

using namespace toricmle;

namespace {

RPoly rp(std::vector<long> coeffs) {
    std::vector<Rat> c;
    for (long x : coeffs) c.push_back(Rat(x));
    return RPoly(c);
}

/// Cofactor-expansion determinant over MPoly entries; independent of the
/// evaluation-interpolation path it checks.
MPoly mpoly_det(const std::vector<std::vector<MPoly>>& m) {
    const int n = (int)m.size();
    if (n == 1) return m[0][0];
    MPoly acc(m[0][0].nvars());
    for (int j = 0; j < n; ++j) {
        std::vector<std::vector<MPoly>> minor;
        for (int r = 1; r < n; ++r) {
            std::vector<MPoly> row;
            for (int c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        MPoly term = m[0][j] * mpoly_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

MPoly sylvester_oracle(const MPoly& f, const MPoly& g, int var) {
    const int n1 = f.degree_in(var), n2 = g.degree_in(var);
    std::vector<MPoly> fc = f.coefficients_in(var);
    std::vector<MPoly> gc = g.coefficients_in(var);
    const int n = n1 + n2;
    std::vector<std::vector<MPoly>> m(n, std::vector<MPoly>(n, MPoly(f.nvars())));
    for (int r = 0; r < n2; ++r)
        for (int k = 0; k <= n1; ++k) m[r][r + n1 - k] = fc[k];
    for (int r = 0; r < n1; ++r)
        for (int k = 0; k <= n2; ++k) m[n2 + r][r + n2 - k] = gc[k];
    return mpoly_det(m);
}

}  // namespace

TEST_CASE("univariate arithmetic and division") {
    RPoly a = rp({-1, 0, 1});  // x^2 - 1
    RPoly b = rp({1, 1});      // x + 1
    auto [q, r] = divmod(a, b);
    CHECK(q.c == rp({-1, 1}).c);
    CHECK(r.is_zero());
    CHECK((a * b).degree() == 3);
    CHECK((a + b)(Rat(2)) == Rat(6));
    CHECK_THROWS_AS(divmod(a, RPoly()), std::domain_error);
}

TEST_CASE("gcd, content, squarefree") {
    RPoly p = rp({1, 2, 1});  // (x+1)^2
    RPoly q = rp({-1, 0, 1}); // (x+1)(x-1)
    RPoly g = poly_gcd(p, q);
    CHECK(g.c == rp({1, 1}).c);  // monic x + 1

    RPoly s = rp({6, 12, 6});
    CHECK(content(s) == Rat(6));
    CHECK(primitive_part(s).c == rp({1, 2, 1}).c);
    // sign: content carries the leading sign so the primitive part is monic-positive
    CHECK(primitive_part(rp({-6, -12, -6})).lc() > 0);

    RPoly cube = rp({-1, 3, -3, 1});  // (x-1)^3
    CHECK(squarefree_part(cube).c == rp({-1, 1}).c);
    CHECK(exact_div(cube, rp({1, -2, 1})).c == rp({-1, 1}).c);
    CHECK_THROWS_AS(exact_div(rp({1, 1}), rp({0, 1})), std::domain_error);
}

TEST_CASE("sparse multivariate polynomials") {
    // (x + y)^2 = x^2 + 2xy + y^2
    MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    MPoly sq = (x + y) * (x + y);
    CHECK(sq.terms().size() == 3);
    CHECK(sq.degree_in(0) == 2);
    CHECK(sq.eval(std::vector<Rat>{Rat(2), Rat(3)}) == Rat(25));
    CHECK((sq - sq).is_zero());
    // zero coefficients are never stored
    MPoly cancel = x - x;
    CHECK(cancel.terms().empty());
    // substitution and variable dropping
    MPoly at1 = sq.substitute(1, Rat(1)).drop_var(1);
    CHECK(at1.to_upoly(0).c == rp({1, 2, 1}).c);
}

TEST_CASE("sylvester resultant: shared root iff vanishing") {
    // f = x^2 - t, g = x - 1: common root exactly at t = 1
    MPoly x = MPoly::variable(2, 0), t = MPoly::variable(2, 1);
    MPoly f = x * x - t;
    MPoly g = x - MPoly::constant(2, Rat(1));
    RPoly r = sylvester_resultant(f, g, 0).to_upoly(1);
    r = primitive_part(r);
    CHECK(r.degree() == 1);
    CHECK(r(Rat(1)) == Rat(0));
}

TEST_CASE("sylvester resultant: coprime inputs give a nonzero constant") {
    MPoly x = MPoly::variable(1, 0);
    MPoly one = MPoly::constant(1, Rat(1));
    MPoly f = x * x + one;
    MPoly g = x * x - one;
    MPoly r = sylvester_resultant(f, g, 0);
    REQUIRE(!r.is_zero());
    CHECK(r.total_degree() == 0);
}

TEST_CASE("sylvester resultant agrees with a direct determinant") {
    // f = (x - t)(x - 2), g = (x - t)(x + 3): common factor, root at x = t
    MPoly x = MPoly::variable(2, 0), t = MPoly::variable(2, 1);
    MPoly two = MPoly::constant(2, Rat(2)), three = MPoly::constant(2, Rat(3));
    MPoly f = (x - t) * (x - two);
    MPoly g = (x - t) * (x + three);
    MPoly r = sylvester_resultant(f, g, 0);
    MPoly oracle = sylvester_oracle(f, g, 0);
    CHECK(r == oracle);
    // the resultant vanishes identically in t only if the polynomials share
    // a factor for every t -- here they do, so it is the zero polynomial
    CHECK(r.is_zero());

    // perturb g so the common root exists only at matching parameter values
    MPoly g2 = (x - t - MPoly::constant(2, Rat(1))) * (x + three);
    MPoly r2 = sylvester_resultant(f, g2, 0);
    CHECK(r2 == sylvester_oracle(f, g2, 0));
    REQUIRE(!r2.is_zero());
    // f(x; t) and g2(x; t) share the root x = 2 when t = 1
    RPoly rt = primitive_part(r2.to_upoly(1));
    CHECK(rt(Rat(1)) == Rat(0));
}

TEST_CASE("sylvester resultant rejects bad input") {
    MPoly x = MPoly::variable(2, 0), t = MPoly::variable(2, 1);
    CHECK_THROWS_AS(sylvester_resultant(MPoly(2), x, 0), std::domain_error);
    CHECK_THROWS_AS(sylvester_resultant(t, t, 0), std::domain_error);
}

TEST_CASE("resultant common-root certificate on random instances") {
    // construct pairs with a planted common root (x0, t0); the eliminant in t
    // must vanish at t0 (exactly, over the rationals)
    for (long x0 = -2; x0 <= 2; ++x0) {
        for (long t0 = -2; t0 <= 2; ++t0) {
            MPoly x = MPoly::variable(2, 0), t = MPoly::variable(2, 1);
            MPoly fx = (x - MPoly::constant(2, Rat(x0))) *
                       (x + t + MPoly::constant(2, Rat(3)));
            MPoly gx = (x - MPoly::constant(2, Rat(x0))) *
                           (x * x - t * MPoly::constant(2, Rat(2))) +
                       (t - MPoly::constant(2, Rat(t0))) * x;
            if (fx.degree_in(0) < 1 || gx.degree_in(0) < 1) continue;
            MPoly r = sylvester_resultant(fx, gx, 0);
            if (r.is_zero()) continue;
            std::vector<Rat> pt{Rat(0), Rat(t0)};
            CHECK(r.eval(pt) == Rat(0));
        }
    }
}
