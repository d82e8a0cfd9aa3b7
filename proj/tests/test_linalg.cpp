#include <doctest.h>

#include "toricmle/linalg.hpp"

using namespace toricmle;

namespace {

RatMatrix rm(std::vector<std::vector<long>> v) {
    RatMatrix out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        for (long x : v[i]) out[i].push_back(Rat(x));
    return out;
}

IntMatrix im(std::vector<std::vector<long>> v) {
    IntMatrix out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        for (long x : v[i]) out[i].push_back(Int(x));
    return out;
}

}  // namespace

TEST_CASE("rank") {
    CHECK(rank(rm({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(rm({{2, 1, 0, 1}, {1, 2, 0, 1}, {0, 0, 3, 1}})) == 3);
    CHECK(rank(rm({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("solve_exact") {
    RatMatrix x = solve_exact(rm({{2, 1}, {1, 3}}), rm({{5}, {10}}));
    CHECK(x[0][0] == Rat(1));
    CHECK(x[1][0] == Rat(3));
    CHECK_THROWS_AS(solve_exact(rm({{1, 2}, {2, 4}}), rm({{1}, {1}})),
                    std::domain_error);
}

TEST_CASE("determinant by fraction-free elimination") {
    CHECK(determinant(rm({{1, 2}, {3, 4}})) == Rat(-2));
    CHECK(determinant(rm({{2, 1, 0}, {1, 2, 0}, {0, 0, 3}})) == Rat(9));
    CHECK(determinant(rm({{1, 2}, {2, 4}})) == Rat(0));
    RatMatrix m{{rat(1, 2), rat(1, 3)}, {rat(1, 4), rat(1, 5)}};
    CHECK(determinant(m) == rat(1, 60));  // 1/10 - 1/12
}

TEST_CASE("smith normal form divisors") {
    SmithResult s = smith_normal_form(im({{2, 0}, {0, 2}}));
    REQUIRE(s.divisors.size() == 2);
    CHECK(s.divisors[0] == 2);
    CHECK(s.divisors[1] == 2);

    s = smith_normal_form(im({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
    REQUIRE(s.divisors.size() == 3);
    CHECK(s.divisors[0] == 2);
    CHECK(s.divisors[1] == 2);
    CHECK(s.divisors[2] == 156);  // product equals |det| = 624
    CHECK(s.divisors[1] % s.divisors[0] == 0);
    CHECK(s.divisors[2] % s.divisors[1] == 0);
}

TEST_CASE("integer kernel is a saturated lattice basis") {
    // kernel of the cubic surface matrix is generated by (1,1,1,-3)
    auto basis =
        integer_kernel(im({{2, 1, 0, 1}, {1, 2, 0, 1}, {0, 0, 3, 1}}));
    REQUIRE(basis.size() == 1);
    std::vector<long> v;
    for (const Int& x : basis[0]) v.push_back((long)x.get_si());
    if (v[0] < 0)
        for (auto& x : v) x = -x;
    CHECK(v == std::vector<long>{1, 1, 1, -3});
}

TEST_CASE("kernel columns satisfy A v = 0") {
    IntMatrix a = im({{2, 1, 1, 0, 1}, {1, 2, 0, 1, 1}, {0, 0, 2, 2, 1}});
    auto basis = integer_kernel(a);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        for (const auto& row : a) {
            Int acc = 0;
            for (size_t j = 0; j < row.size(); ++j) acc += row[j] * v[j];
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("solve_dense") {
    std::vector<std::vector<double>> a{{2, 1}, {1, 3}};
    std::vector<double> b{5, 10};
    REQUIRE(solve_dense(a, b));
    CHECK(b[0] == doctest::Approx(1.0));
    CHECK(b[1] == doctest::Approx(3.0));
}
