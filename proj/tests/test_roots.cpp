#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "toricmle/roots.hpp"

using namespace toricmle;

namespace {

RPoly rp(std::vector<Rat> c) { return RPoly(std::move(c)); }

/// every expected value matched by exactly one computed root (greedy)
void check_multiset(std::vector<Complex> got, std::vector<Complex> want,
                    double tol) {
    REQUIRE(got.size() == want.size());
    for (Complex w : want) {
        auto best = got.end();
        double bd = 1e300;
        for (auto it = got.begin(); it != got.end(); ++it) {
            double d = std::abs(*it - w);
            if (d < bd) { bd = d; best = it; }
        }
        REQUIRE(bd < tol);
        got.erase(best);
    }
}

RPoly expand_roots(std::vector<Rat> roots) {
    RPoly p = RPoly::constant(Rat(1));
    for (const Rat& r : roots) p = p * RPoly(std::vector<Rat>{-r, Rat(1)});
    return p;
}

double residual_bound(const CPoly& p, Complex z) {
    double mx = 0;
    for (auto& c : p.c) mx = std::max(mx, std::abs(c));
    return 1e-8 * mx * std::pow(1.0 + std::abs(z), p.degree());
}

}  // namespace

TEST_CASE("cubic: roots of unity") {
    auto r = solve_cubic(rp({Rat(-1), Rat(0), Rat(0), Rat(1)}));
    check_multiset(r, {{1, 0},
                       {-0.5, std::sqrt(3.0) / 2},
                       {-0.5, -std::sqrt(3.0) / 2}},
                   1e-10);
}

TEST_CASE("cubic: triple root") {
    auto r = solve_cubic(rp({Rat(-1), Rat(3), Rat(-3), Rat(1)}));
    for (Complex z : r) CHECK(std::abs(z - Complex(1, 0)) < 1e-5);
}

TEST_CASE("cubic: expanded rational roots") {
    RPoly p = expand_roots({rat(1, 4), Rat(2), Rat(-3)});
    auto r = solve_cubic(p);
    check_multiset(r, {{0.25, 0}, {2, 0}, {-3, 0}}, 1e-10);
    CHECK_THROWS_AS(solve_cubic(rp({Rat(1), Rat(1)})), std::domain_error);
}

TEST_CASE("cubic: conjugate closure for real input") {
    RPoly p = rp({Rat(5), Rat(-2), Rat(1), Rat(3)});
    auto roots = solve_cubic(p);
    for (Complex z : roots) {
        bool paired = false;
        for (Complex w : roots)
            if (std::abs(std::conj(z) - w) < 1e-8) paired = true;
        CHECK(paired);
    }
}

TEST_CASE("quartic: x^4 - 1") {
    auto r = solve_quartic(rp({Rat(-1), Rat(0), Rat(0), Rat(0), Rat(1)}));
    check_multiset(r, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 1e-10);
}

TEST_CASE("quartic: double pair (x^2+1)^2") {
    auto r = solve_quartic(rp({Rat(1), Rat(0), Rat(2), Rat(0), Rat(1)}));
    check_multiset(r, {{0, 1}, {0, 1}, {0, -1}, {0, -1}}, 1e-6);
}

TEST_CASE("quartic: expanded with a double rational root") {
    RPoly p = expand_roots({rat(1, 5), rat(1, 5), Rat(3), Rat(-2)});
    auto r = solve_quartic(p);
    check_multiset(r, {{0.2, 0}, {0.2, 0}, {3, 0}, {-2, 0}}, 2e-6);
    CHECK_THROWS_AS(solve_quartic(rp({Rat(1), Rat(1), Rat(1)})),
                    std::domain_error);
}

TEST_CASE("quartic: Vieta sums") {
    RPoly p = rp({Rat(7), Rat(-3), Rat(2), Rat(5), Rat(4)});
    auto r = solve_quartic(p);
    Complex sum(0, 0), prod(1, 0);
    for (Complex z : r) { sum += z; prod *= z; }
    CHECK(std::abs(sum - Complex(-5.0 / 4, 0)) < 1e-9);
    CHECK(std::abs(prod - Complex(7.0 / 4, 0)) < 1e-9);
}

TEST_CASE("aberth: simple quartic circle") {
    auto rs = complex_roots(rp({Rat(-1), Rat(0), Rat(0), Rat(0), Rat(1)}));
    REQUIRE(rs.size() == 4);
    for (const RootCluster& rc : rs) {
        CHECK(rc.simple());
        CHECK(std::abs(std::abs(rc.value) - 1.0) < 1e-10);
    }
}

TEST_CASE("aberth: Wilkinson-style (x-1)...(x-8)") {
    RPoly p = expand_roots({Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6),
                            Rat(7), Rat(8)});
    auto rs = complex_roots(p);
    std::vector<double> got;
    for (const RootCluster& rc : rs) {
        CHECK(rc.simple());
        CHECK(std::abs(rc.value.imag()) < 1e-6);
        got.push_back(rc.value.real());
    }
    std::sort(got.begin(), got.end());
    for (int i = 0; i < 8; ++i) CHECK(std::abs(got[i] - (i + 1)) < 1e-6);
}

TEST_CASE("aberth: double root flagged as a cluster") {
    auto rs = complex_roots(rp({Rat(1), Rat(-2), Rat(1)}));  // (x-1)^2
    REQUIRE(rs.size() == 2);
    for (const RootCluster& rc : rs) {
        CHECK(!rc.simple());
        CHECK(std::abs(rc.value - Complex(1, 0)) < 1e-4);
    }
}

TEST_CASE("aberth: certified residuals on assorted inputs") {
    std::vector<RPoly> polys{
        expand_roots({Rat(1), Rat(-1), rat(1, 3), Rat(10)}),
        rp({Rat(3), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}),
        rp({Rat(-2), Rat(5), Rat(0), Rat(0), Rat(1), Rat(7)}),
    };
    for (const RPoly& p : polys) {
        CPoly cp = to_cpoly(p);
        for (const RootCluster& rc : complex_roots(p))
            CHECK(std::abs(cp(rc.value)) <= residual_bound(cp, rc.value));
    }
    CHECK_THROWS_AS(complex_roots(rp({Rat(5)})), std::domain_error);
}

TEST_CASE("aberth: roots at the origin are reported") {
    // x^2 (x - 2)
    auto rs = complex_roots(rp({Rat(0), Rat(0), Rat(-2), Rat(1)}));
    int zeros = 0;
    for (const RootCluster& rc : rs)
        if (std::abs(rc.value) < 1e-12) ++zeros;
    CHECK(zeros == 2);
}
