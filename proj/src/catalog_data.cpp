#include <map>
#include <stdexcept>

#include "toricmle/lattice.hpp"

namespace toricmle {

namespace {

LatticePolygon poly(std::string label, std::vector<LatticePoint> verts) {
    return LatticePolygon{std::move(verts), std::move(label)};
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;

    auto add_pinned = [&cat](std::string plab, std::string mlab,
                             std::vector<LatticePoint> verts,
                             std::vector<std::vector<long>> matrix,
                             std::vector<std::string> ideal, int mldeg,
                             std::string note = "") {
        LatticePolygon pg = poly(plab, std::move(verts));
        cat.push_back(CatalogEntry{std::move(plab), mlab, std::move(pg),
                                   ToricModel(mlab, std::move(matrix)),
                                   std::move(ideal), mldeg, std::move(note)});
    };
    auto add_lifted = [&cat](std::string plab, std::string mlab,
                             std::vector<LatticePoint> verts) {
        LatticePolygon pg = poly(plab, std::move(verts));
        ToricModel m = polytope_to_matrix(pg);
        cat.push_back(CatalogEntry{std::move(plab), mlab,  std::move(pg),
                                   ToricModel(mlab, m.matrix()), {}, -1, ""});
    };

    add_pinned("3", "S3", {{1, 0}, {0, 1}, {-1, -1}},
               {{2, 1, 0, 1}, {1, 2, 0, 1}, {0, 0, 3, 1}},
               {"p4^3 - p1*p2*p3"}, 3);

    add_pinned("4a", "S4_A2", {{1, 0}, {0, 1}, {-1, 1}, {0, -1}},
               {{2, 1, 0, 1, 1}, {1, 2, 2, 0, 1}, {0, 0, 1, 2, 1}},
               {"p1*p3 - p2*p5", "p2*p4 - p5^2"}, 4,
               "published prime-count labels for this surface are inconsistent "
               "(S4' vs S4''); the catalog keys models by ideal. Relabeling "
               "coordinates by the cycle p1->p2->p3->p4->p1 turns the stored "
               "generators into {p2*p4 - p3*p5, p1*p3 - p5^2}, the form that "
               "appears in ML-degree tables under a single prime.");

    add_pinned("4b", "S4", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
               {{2, 1, 1, 0, 1}, {1, 2, 0, 1, 1}, {0, 0, 2, 2, 1}},
               {"p1*p4 - p5^2", "p2*p3 - p1*p4"}, 4);

    add_pinned("4c", "S4_A3", {{1, 1}, {-1, 1}, {0, -1}},
               {{1, 2, 1, 0, 1}, {0, 2, 2, 2, 1}, {3, 0, 1, 2, 2}},
               {"p2*p4 - p3^2", "p1*p3 - p5^2"}, 4);

    add_pinned("5a", "S5p", {{-2, -1}, {-1, -1}, {1, 0}, {0, 1}},
               {{2, 1, 0, 1, 3, 2}, {2, 1, 0, 0, 1, 1}, {0, 2, 4, 3, 0, 1}},
               {"p3*p5 - p4*p6", "p2*p5 - p6^2", "p2*p4 - p3*p6",
                "p1*p4 - p2*p6", "p2^2 - p1*p3"}, 5);

    add_pinned("5b", "S5", {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}},
               {{1, 0, 0, 1, 2, 1}, {0, 1, 2, 2, 1, 1}, {2, 2, 1, 0, 0, 1}},
               {"p3*p5 - p4*p6", "p2*p5 - p6^2", "p2*p4 - p3*p6",
                "p1*p4 - p6^2", "p1*p3 - p2*p6"}, 3);

    add_pinned("6a", "S6",
               {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}},
               {{0, 1, 2, 2, 1, 0, 1}, {0, 0, 1, 2, 2, 1, 1}, {4, 3, 1, 0, 1, 3, 2}},
               {"p4*p6 - p5*p7", "p3*p6 - p7^2", "p2*p6 - p1*p7",
                "p3*p5 - p4*p7", "p2*p5 - p7^2", "p1*p5 - p6*p7",
                "p2*p4 - p3*p7", "p1*p4 - p7^2", "p1*p3 - p2*p7"}, 6);

    add_pinned("6b", "S6p", {{-2, -1}, {-1, -1}, {1, 0}, {1, 1}, {0, 1}},
               {{1, 1, 2, 3, 3, 0, 2}, {0, 1, 2, 2, 1, 0, 1}, {4, 3, 1, 0, 1, 5, 2}},
               {"p5*p6 - p1*p7", "p4*p6 - p2*p7", "p3*p5 - p4*p7",
                "p2*p5 - p7^2", "p2*p4 - p3*p7", "p1*p4 - p7^2",
                "p1*p3 - p2*p7", "p2^2 - p3*p6", "p1*p2 - p6*p7"}, 6);

    add_pinned("6c", "S6pp", {{-2, -1}, {-1, -1}, {2, 1}, {0, 1}},
               {{4, 3, 2, 1, 2, 1, 0}, {2, 2, 1, 0, 2, 1, 0}, {0, 1, 3, 5, 2, 4, 6}},
               {"p6^2 - p5*p7", "p4*p6 - p3*p7", "p3*p6 - p2*p7",
                "p4*p5 - p2*p7", "p3*p5 - p2*p6", "p2*p4 - p1*p7",
                "p3^2 - p1*p7", "p2*p3 - p1*p6", "p2^2 - p1*p5"}, 6);

    add_pinned("6d", "S6ppp", {{-2, -1}, {0, -1}, {1, 2}},
               {{2, 1, 2, 0, 1, 2, 3}, {0, 0, 1, 0, 1, 2, 3}, {4, 5, 3, 6, 4, 2, 0}},
               {"p6^2 - p5*p7", "p5*p6 - p4*p7", "p3*p6 - p2*p7",
                "p5^2 - p4*p6", "p3*p5 - p2*p6", "p3*p4 - p2*p5",
                "p3^2 - p1*p6", "p2*p3 - p1*p5", "p2^2 - p1*p4"}, 6);

    add_lifted("7a", "S7a", {{-2, -1}, {-1, -1}, {1, 0}, {2, 1}, {0, 1}});
    add_lifted("7b", "S7b", {{-2, -1}, {-1, -1}, {1, 0}, {1, 2}});
    add_lifted("8a", "S8a", {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    add_lifted("8b", "S8b", {{-2, -1}, {0, -1}, {1, 0}, {1, 2}});
    add_lifted("8c", "S8c", {{-2, -1}, {2, -1}, {0, 1}});
    add_lifted("9", "S9", {{1, 1}, {-2, 1}, {1, -2}});

    return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

const CatalogEntry& catalog_lookup(const std::string& label) {
    static const std::map<std::string, std::string> aliases = {
        {"S4p", "S4_A2"},  {"S4'", "S4_A2"},  {"S4''", "S4_A3"},
        {"S4pp", "S4_A3"}, {"S5'", "S5p"},    {"S6'", "S6p"},
        {"S6''", "S6pp"},  {"S6'''", "S6ppp"}};
    std::string want = label;
    if (auto it = aliases.find(want); it != aliases.end()) want = it->second;
    for (const CatalogEntry& e : catalog())
        if (e.model_label == want || e.polygon_label == want) return e;
    std::string hint = "unknown model '" + label + "'; known labels:";
    for (const CatalogEntry& e : catalog())
        hint += " " + e.model_label + "(" + e.polygon_label + ")";
    throw std::out_of_range(hint);
}

} // namespace toricmle
