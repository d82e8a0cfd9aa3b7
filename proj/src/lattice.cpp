#include "toricmle/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toricmle {

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

long igcd(long a, long b) { return std::gcd(std::abs(a), std::abs(b)); }

}  // namespace

LatticePolygon LatticePolygon::hull(std::vector<LatticePoint> points,
                                    std::string label) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3)
        throw std::invalid_argument("LatticePolygon::hull: fewer than 3 points");
    // Andrew monotone chain, strict turns only, counterclockwise result
    std::vector<LatticePoint> lo, up;
    for (const auto& p : points) {
        while (lo.size() >= 2 && cross(lo[lo.size() - 2], lo.back(), p) <= 0)
            lo.pop_back();
        lo.push_back(p);
    }
    for (auto it = points.rbegin(); it != points.rend(); ++it) {
        while (up.size() >= 2 && cross(up[up.size() - 2], up.back(), *it) <= 0)
            up.pop_back();
        up.push_back(*it);
    }
    lo.pop_back();
    up.pop_back();
    lo.insert(lo.end(), up.begin(), up.end());
    return LatticePolygon{std::move(lo), std::move(label)};
}

std::string SingularityProfile::str() const {
    if (entries.empty()) return "smooth";
    std::string s;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += "A" + std::to_string(entries[i]);
    }
    return s;
}

long Cone2D::index() const {
    return std::abs(ray1.x * ray2.y - ray1.y * ray2.x);
}

ValidationReport validate_reflexive(const LatticePolygon& poly) {
    const auto& v = poly.vertices;
    if (v.size() < 3)
        throw std::invalid_argument("validate_reflexive: polygon needs at least 3 vertices");
    ValidationReport rep;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    const int n = (int)v.size();
    bool convex = true;
    for (int i = 0; i < n; ++i) {
        long c = cross(v[i], v[(i + 1) % n], v[(i + 2) % n]);
        if (c <= 0) {
            convex = false;
            fail("vertices " + std::to_string(i) + "," + std::to_string((i + 1) % n) +
                 "," + std::to_string((i + 2) % n) +
                 (c == 0 ? " are collinear" : " turn clockwise"));
        }
    }
    if (!convex) return rep;  // edge tests below assume proper orientation

    // each edge must lie on a line a*x + b*y = 1 with primitive (a,b)
    for (int i = 0; i < n; ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % n];
        long a = q.y - p.y, b = p.x - q.x;  // inward-positive normal (ccw)
        long c = a * p.x + b * p.y;
        long g = igcd(a, b);
        std::string edge = "edge " + std::to_string(i) + " [(" +
                           std::to_string(p.x) + "," + std::to_string(p.y) + ")->(" +
                           std::to_string(q.x) + "," + std::to_string(q.y) + ")]";
        if (c <= 0) {
            fail(edge + ": origin not strictly inside");
            continue;
        }
        if (c % g != 0 || c / g != 1) {
            fail(edge + ": lattice distance " + std::to_string(c / g) +
                 " from origin (want 1)");
        }
    }

    // the origin must be the unique interior lattice point
    long xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
    for (const auto& p : v) {
        xmin = std::min(xmin, p.x); xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y); ymax = std::max(ymax, p.y);
    }
    bool origin_interior = false;
    for (long x = xmin; x <= xmax; ++x) {
        for (long y = ymin; y <= ymax; ++y) {
            bool strict = true;
            for (int i = 0; i < n && strict; ++i)
                strict = cross(v[i], v[(i + 1) % n], {x, y}) > 0;
            if (!strict) continue;
            if (x == 0 && y == 0)
                origin_interior = true;
            else
                fail("interior lattice point (" + std::to_string(x) + "," +
                     std::to_string(y) + ") besides the origin");
        }
    }
    if (!origin_interior) fail("origin is not an interior point");
    return rep;
}

namespace {

void require_reflexive(const LatticePolygon& poly, const char* who) {
    ValidationReport rep = validate_reflexive(poly);
    if (!rep.ok)
        throw std::invalid_argument(std::string(who) + ": polygon is not reflexive (" +
                                    rep.violations.front() + ")");
}

}  // namespace

std::vector<LatticePoint> boundary_lattice_points(const LatticePolygon& poly) {
    require_reflexive(poly, "boundary_lattice_points");
    std::vector<LatticePoint> out;
    const int n = (int)poly.vertices.size();
    for (int i = 0; i < n; ++i) {
        const auto& p = poly.vertices[i];
        const auto& q = poly.vertices[(i + 1) % n];
        long dx = q.x - p.x, dy = q.y - p.y;
        long g = igcd(dx, dy);
        for (long k = 0; k < g; ++k)
            out.push_back({p.x + k * (dx / g), p.y + k * (dy / g)});
    }
    return out;
}

Cone2D vertex_cone(const LatticePolygon& poly, int vertex_index) {
    const int n = (int)poly.vertices.size();
    auto inward = [](const LatticePoint& p, const LatticePoint& q) {
        long a = q.y - p.y, b = p.x - q.x;
        long g = igcd(a, b);
        return LatticePoint{a / g, b / g};
    };
    const auto& prev = poly.vertices[(vertex_index + n - 1) % n];
    const auto& v = poly.vertices[vertex_index];
    const auto& next = poly.vertices[(vertex_index + 1) % n];
    Cone2D cone{inward(prev, v), inward(v, next)};
    if (cone.index() == 0)
        throw std::logic_error("vertex_cone: degenerate cone (parallel rays)");
    return cone;
}

SingularityProfile singularity_profile(const LatticePolygon& poly) {
    require_reflexive(poly, "singularity_profile");
    SingularityProfile prof;
    for (int i = 0; i < (int)poly.vertices.size(); ++i) {
        long m = vertex_cone(poly, i).index();
        if (m > 1) prof.entries.push_back((int)m - 1);
    }
    std::sort(prof.entries.begin(), prof.entries.end());
    return prof;
}

ToricModel polytope_to_matrix(const LatticePolygon& poly) {
    // accept any translate of a reflexive polygon: recentre on the unique
    // interior lattice point so the lift only sees lattice geometry
    if (poly.vertices.size() < 3)
        throw std::invalid_argument("polytope_to_matrix: polygon needs at least 3 vertices");
    const int n = (int)poly.vertices.size();
    long xmin0 = poly.vertices[0].x, xmax0 = poly.vertices[0].x;
    long ymin0 = poly.vertices[0].y, ymax0 = poly.vertices[0].y;
    for (const auto& p : poly.vertices) {
        xmin0 = std::min(xmin0, p.x); xmax0 = std::max(xmax0, p.x);
        ymin0 = std::min(ymin0, p.y); ymax0 = std::max(ymax0, p.y);
    }
    std::vector<LatticePoint> interior;
    for (long x = xmin0; x <= xmax0; ++x)
        for (long y = ymin0; y <= ymax0; ++y) {
            bool strict = true;
            for (int i = 0; i < n && strict; ++i)
                strict = cross(poly.vertices[i], poly.vertices[(i + 1) % n],
                               {x, y}) > 0;
            if (strict) interior.push_back({x, y});
        }
    if (interior.size() != 1)
        throw std::invalid_argument(
            "polytope_to_matrix: polygon must have exactly one interior "
            "lattice point");
    const LatticePoint centre = interior[0];
    LatticePolygon centred = poly;
    for (auto& v : centred.vertices) {
        v.x -= centre.x;
        v.y -= centre.y;
    }
    require_reflexive(centred, "polytope_to_matrix");
    std::vector<LatticePoint> pts = boundary_lattice_points(centred);
    // rotate so the lexicographically smallest boundary point comes first
    auto smallest = std::min_element(pts.begin(), pts.end());
    std::rotate(pts.begin(), smallest, pts.end());
    pts.push_back({0, 0});  // unique interior point, by reflexivity

    long xmin = pts[0].x, ymin = pts[0].y;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p.x);
        ymin = std::min(ymin, p.y);
    }
    long h = 0;
    for (const auto& p : pts) h = std::max(h, (p.x - xmin) + (p.y - ymin));
    std::vector<std::vector<long>> a(3, std::vector<long>(pts.size()));
    for (size_t j = 0; j < pts.size(); ++j) {
        long x = pts[j].x - xmin, y = pts[j].y - ymin;
        a[0][j] = x;
        a[1][j] = y;
        a[2][j] = h - x - y;
    }
    return ToricModel(poly.label, std::move(a));
}

} // namespace toricmle
