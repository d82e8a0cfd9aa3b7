#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <regex>

#include "toricmle/lattice.hpp"
#include "toricmle/linalg.hpp"

using namespace toricmle;

namespace {

LatticePolygon tri3() {
    return LatticePolygon{{{1, 0}, {0, 1}, {-1, -1}}, "3"};
}
LatticePolygon square4b() {
    return LatticePolygon{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, "4b"};
}
LatticePolygon hexagon() {
    return LatticePolygon{
        {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}, "6a"};
}

/// brute-force boundary count: scan the bounding box for lattice points lying
/// on some edge segment
int boundary_count_oracle(const LatticePolygon& poly) {
    const auto& v = poly.vertices;
    const int n = (int)v.size();
    long xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
    for (const auto& p : v) {
        xmin = std::min(xmin, p.x); xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y); ymax = std::max(ymax, p.y);
    }
    int count = 0;
    for (long x = xmin; x <= xmax; ++x)
        for (long y = ymin; y <= ymax; ++y) {
            bool on_edge = false;
            for (int i = 0; i < n && !on_edge; ++i) {
                const auto& a = v[i];
                const auto& b = v[(i + 1) % n];
                long cx = (b.x - a.x) * (y - a.y) - (b.y - a.y) * (x - a.x);
                if (cx != 0) continue;
                if (std::min(a.x, b.x) <= x && x <= std::max(a.x, b.x) &&
                    std::min(a.y, b.y) <= y && y <= std::max(a.y, b.y))
                    on_edge = true;
            }
            if (on_edge) ++count;
        }
    return count;
}

std::vector<std::vector<long>> sorted_columns(const ToricModel& m) {
    std::vector<std::vector<long>> cols;
    for (int j = 0; j < m.cols(); ++j) {
        std::vector<long> c;
        for (int i = 0; i < m.rows(); ++i) c.push_back(m.entry(i, j));
        cols.push_back(c);
    }
    std::sort(cols.begin(), cols.end());
    return cols;
}

std::pair<std::vector<long>, std::vector<long>> parse_generator(
    const std::string& s, int m) {
    auto side = [m](const std::string& text) {
        std::vector<long> e(m, 0);
        std::regex var(R"(p(\d+)(?:\^(\d+))?)");
        for (auto it = std::sregex_iterator(text.begin(), text.end(), var);
             it != std::sregex_iterator(); ++it) {
            int idx = std::stoi((*it)[1]);
            int exp = (*it)[2].matched ? std::stoi((*it)[2]) : 1;
            e[idx - 1] += exp;
        }
        return e;
    };
    size_t dash = s.find(" - ");
    REQUIRE(dash != std::string::npos);
    return {side(s.substr(0, dash)), side(s.substr(dash + 3))};
}

}  // namespace

TEST_CASE("validate_reflexive accepts the catalog triangles and squares") {
    CHECK(validate_reflexive(tri3()).ok);
    CHECK(validate_reflexive(square4b()).ok);
    CHECK(validate_reflexive(hexagon()).ok);
}

TEST_CASE("validate_reflexive rejects a scaled triangle, naming failures") {
    LatticePolygon scaled{{{2, 0}, {0, 2}, {-2, -2}}, "scaled"};
    ValidationReport rep = validate_reflexive(scaled);
    CHECK(!rep.ok);
    bool edge_violation = false, interior_violation = false;
    for (const std::string& v : rep.violations) {
        if (v.find("lattice distance 2") != std::string::npos)
            edge_violation = true;
        if (v.find("interior lattice point") != std::string::npos)
            interior_violation = true;
    }
    CHECK(edge_violation);
    CHECK(interior_violation);
}

TEST_CASE("validate_reflexive flags clockwise and degenerate input") {
    LatticePolygon cw{{{1, 0}, {-1, -1}, {0, 1}}, "cw"};
    CHECK(!validate_reflexive(cw).ok);
    LatticePolygon degenerate{{{1, 0}, {0, 1}}, "seg"};
    CHECK_THROWS_AS(validate_reflexive(degenerate), std::invalid_argument);
    LatticePolygon off_centre{{{2, 0}, {1, 1}, {0, -1}}, "off"};
    CHECK(!validate_reflexive(off_centre).ok);
}

TEST_CASE("boundary lattice points, counterclockwise, no repeats") {
    CHECK(boundary_lattice_points(tri3()).size() == 3);
    CHECK(boundary_lattice_points(square4b()).size() == 4);
    auto b6 = boundary_lattice_points(hexagon());
    CHECK(b6.size() == 6);
    CHECK((int)b6.size() == boundary_count_oracle(hexagon()));
    // non-vertex boundary points appear exactly once
    LatticePolygon t4c{{{1, 1}, {-1, 1}, {0, -1}}, "4c"};
    auto b = boundary_lattice_points(t4c);
    CHECK(b.size() == 4);
    CHECK(std::count(b.begin(), b.end(), LatticePoint{0, 1}) == 1);
    CHECK((int)b.size() == boundary_count_oracle(t4c));
}

TEST_CASE("singularity profiles of the four closed-form polygons") {
    CHECK(singularity_profile(tri3()) == SingularityProfile{{2, 2, 2}});
    CHECK(singularity_profile(square4b()) == SingularityProfile{{1, 1, 1, 1}});
    LatticePolygon p4a{{{1, 0}, {0, 1}, {-1, 1}, {0, -1}}, "4a"};
    CHECK(singularity_profile(p4a) == SingularityProfile{{1, 1, 2}});
    LatticePolygon p4c{{{1, 1}, {-1, 1}, {0, -1}}, "4c"};
    CHECK(singularity_profile(p4c) == SingularityProfile{{1, 1, 3}});
    CHECK(singularity_profile(hexagon()).entries.empty());
    CHECK(singularity_profile(hexagon()).str() == "smooth");
}

TEST_CASE("vertex cones of the cubic triangle have index 3") {
    for (int i = 0; i < 3; ++i) CHECK(vertex_cone(tri3(), i).index() == 3);
}

TEST_CASE("polytope_to_matrix reproduces the catalog matrices up to column order") {
    for (const char* label : {"S3", "S4", "S4_A2", "S4_A3"}) {
        const CatalogEntry& e = catalog_lookup(label);
        ToricModel lifted = polytope_to_matrix(e.polygon);
        CHECK(sorted_columns(lifted) == sorted_columns(e.model));
    }
}

TEST_CASE("polytope_to_matrix invariants") {
    for (const CatalogEntry& e : catalog()) {
        ToricModel m = polytope_to_matrix(e.polygon);
        for (int j = 0; j < m.cols(); ++j) {
            long s = 0;
            for (int i = 0; i < m.rows(); ++i) {
                CHECK(m.entry(i, j) >= 0);
                s += m.entry(i, j);
            }
            CHECK(s == m.column_sum());
        }
    }
}

TEST_CASE("polytope_to_matrix is translation invariant") {
    LatticePolygon shifted{{{6, 7}, {5, 8}, {4, 6}}, "3-shifted"};
    ToricModel a = polytope_to_matrix(tri3());
    ToricModel b = polytope_to_matrix(shifted);
    CHECK(a.matrix() == b.matrix());
}

TEST_CASE("catalog has the sixteen classes with correct degrees") {
    const auto& cat = catalog();
    REQUIRE(cat.size() == 16);
    for (const CatalogEntry& e : cat) {
        CHECK(validate_reflexive(e.polygon).ok);
        int degree = (int)boundary_lattice_points(e.polygon).size();
        CHECK(std::to_string(degree) ==
              e.polygon_label.substr(0, std::to_string(degree).size()));
        CHECK(degree == boundary_count_oracle(e.polygon));
        CHECK(sorted_columns(e.model) ==
              sorted_columns(polytope_to_matrix(e.polygon)));
    }
}

TEST_CASE("catalog lookups and aliases") {
    CHECK(catalog_lookup("3").model_label == "S3");
    CHECK(catalog_lookup("S4p").model_label == "S4_A2");
    CHECK(catalog_lookup("S4''").model_label == "S4_A3");
    CHECK(catalog_lookup("5b").model_label == "S5");
    CHECK_THROWS_AS(catalog_lookup("S17"), std::out_of_range);
    try {
        catalog_lookup("S17");
    } catch (const std::out_of_range& e) {
        CHECK(std::string(e.what()).find("S4_A2") != std::string::npos);
    }
}

TEST_CASE("catalog ideals generate the full kernel lattice") {
    for (const CatalogEntry& e : catalog()) {
        if (e.ideal.empty()) continue;
        const int m = e.model.cols();
        IntMatrix gens;
        for (const std::string& s : e.ideal) {
            auto [plus, minus] = parse_generator(s, m);
            CHECK(std::accumulate(plus.begin(), plus.end(), 0L) ==
                  std::accumulate(minus.begin(), minus.end(), 0L));
            std::vector<Int> row;
            for (int j = 0; j < m; ++j) row.push_back(Int(plus[j] - minus[j]));
            for (int i = 0; i < e.model.rows(); ++i) {
                Int acc = 0;
                for (int j = 0; j < m; ++j)
                    acc += Int(e.model.entry(i, j)) * row[j];
                CHECK(acc == 0);
            }
            gens.push_back(std::move(row));
        }
        SmithResult s = smith_normal_form(gens);
        CHECK((int)s.divisors.size() == m - e.model.rows());
        for (const Int& d : s.divisors) CHECK(d == 1);
    }
}

TEST_CASE("known ml-degree entries match the published table") {
    CHECK(catalog_lookup("S3").known_ml_degree == 3);
    CHECK(catalog_lookup("S4").known_ml_degree == 4);
    CHECK(catalog_lookup("S4_A2").known_ml_degree == 4);
    CHECK(catalog_lookup("S4_A3").known_ml_degree == 4);
    CHECK(catalog_lookup("S5").known_ml_degree == 3);
    CHECK(catalog_lookup("S5p").known_ml_degree == 5);
    for (const char* l : {"S6", "S6p", "S6pp", "S6ppp"})
        CHECK(catalog_lookup(l).known_ml_degree == 6);
    for (const char* l : {"S7a", "S7b", "S8a", "S8b", "S8c", "S9"})
        CHECK(catalog_lookup(l).known_ml_degree == -1);
}

TEST_CASE("unimodular invariance of profile and boundary count") {
    std::mt19937_64 rng(2024);
    auto random_unimodular = [&rng]() {
        long a = 1, b = 0, c = 0, d = 1;
        for (int step = 0; step < 6; ++step) {
            long k = (long)(rng() % 5) - 2;
            if (rng() % 2) {
                a += k * c; b += k * d;
            } else {
                c += k * a; d += k * b;
            }
            if (rng() % 4 == 0) { std::swap(a, c); std::swap(b, d); }
        }
        return std::array<long, 4>{a, b, c, d};
    };
    for (const CatalogEntry& e : catalog()) {
        SingularityProfile want = singularity_profile(e.polygon);
        size_t count = boundary_lattice_points(e.polygon).size();
        for (int trial = 0; trial < 20; ++trial) {
            auto m = random_unimodular();
            std::vector<LatticePoint> mapped;
            for (const LatticePoint& p : e.polygon.vertices)
                mapped.push_back({m[0] * p.x + m[1] * p.y,
                                  m[2] * p.x + m[3] * p.y});
            LatticePolygon image = LatticePolygon::hull(mapped, "image");
            CHECK(validate_reflexive(image).ok);
            CHECK(singularity_profile(image) == want);
            CHECK(boundary_lattice_points(image).size() == count);
        }
    }
}
