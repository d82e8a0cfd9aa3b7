#ifndef TORICMLE_LATTICE_HPP
#define TORICMLE_LATTICE_HPP

#include <string>
#include <vector>

#include "toricmle/model.hpp"

namespace toricmle {

struct LatticePoint {
    long x = 0;
    long y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Convex lattice polygon, vertices counterclockwise. For catalog polygons
/// the vertices are in strictly convex position and the polygon is reflexive:
/// the origin is the unique interior lattice point and every edge lies on a
/// line a*x + b*y = 1 with gcd(a,b) = 1.
struct LatticePolygon {
    std::vector<LatticePoint> vertices;
    std::string label;

    /// Convex hull of arbitrary points, counterclockwise, collinear points
    /// dropped. Convenience for building polygons from boundary point lists.
    static LatticePolygon hull(std::vector<LatticePoint> points,
                               std::string label = "");
};

/// One A_k entry per singular point of the associated surface.
struct SingularityProfile {
    std::vector<int> entries;  // sorted ascending, each k >= 1 meaning A_k
    friend bool operator==(const SingularityProfile&,
                           const SingularityProfile&) = default;
    std::string str() const;  // "A1,A1,A2" or "smooth"
};

/// Planar cone spanned by two primitive integer rays.
struct Cone2D {
    LatticePoint ray1, ray2;
    /// |det(ray1, ray2)|; 1 means a smooth cone.
    long index() const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Check both reflexivity conditions, naming each failing edge or stray
/// interior point. Throws std::invalid_argument for fewer than 3 vertices.
ValidationReport validate_reflexive(const LatticePolygon& poly);

/// All lattice points on the boundary, counterclockwise starting from
/// vertices[0], each exactly once. Requires a reflexive polygon.
std::vector<LatticePoint> boundary_lattice_points(const LatticePolygon& poly);

/// Normal-fan cone at each vertex; a cone of index m contributes A_{m-1}.
SingularityProfile singularity_profile(const LatticePolygon& poly);

/// Vertex cone (primitive inward edge normals) at vertex i.
Cone2D vertex_cone(const LatticePolygon& poly, int vertex_index);

/// Lift the polygon's lattice points to a nonnegative matrix with equal
/// column sums: boundary points counterclockwise from the lexicographically
/// smallest, origin last; translate by (-xmin,-ymin) and append h-x-y.
ToricModel polytope_to_matrix(const LatticePolygon& poly);

struct CatalogEntry {
    std::string polygon_label;  // "3", "4a", ..., "9"
    std::string model_label;    // "S3", "S4", "S4_A2", ..., "S9"
    LatticePolygon polygon;
    ToricModel model;           // pinned column order (see catalog notes)
    std::vector<std::string> ideal;  // known quadric/cubic generators, if any
    int known_ml_degree = -1;        // -1 when no published value exists
    std::string note;
};

/// The sixteen reflexive polygons with their models. Entries carrying a
/// known ideal use a column order under which the ideal strings hold
/// verbatim; the rest use the canonical polytope_to_matrix order.
const std::vector<CatalogEntry>& catalog();

/// Lookup by model label ("S4_A2", alias "S4p") or polygon label ("4a").
/// Throws std::out_of_range with a catalog hint for unknown labels.
const CatalogEntry& catalog_lookup(const std::string& label);

} // namespace toricmle

#endif
